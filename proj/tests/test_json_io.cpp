#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "daha/json_io.hpp"
#include "daha/ybasis.hpp"

using namespace daha;

TEST_CASE("ring header") {
    ordered_json h = ring_header(3);
    CHECK(h["p"] == 3);
    CHECK(h["conductor"] == 12);
    CHECK(h["min_poly"] == ordered_json::array({1, 0, -1, 0, 1}));
}

TEST_CASE("scalar serialization uses num/den strings") {
    const int p = 3;
    CycScalar x = CycScalar::z_power(p, 1) * make_fraction(1, 2);
    ordered_json j = scalar_to_json(x);
    CHECK(j["a"] == ordered_json::array({"0", "1/2", "0", "0"}));
    CHECK(j["b"] == ordered_json::array({"0", "0", "0", "0"}));
    CHECK(scalar_from_json(p, j) == x);
}

TEST_CASE("scalar round trip on random values") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (int p : {3, 5}) {
        for (int i = 0; i < 10; ++i) {
            CycScalar x = CycScalar::z_power(p, coef(rng) + 9) *
                              make_fraction(coef(rng), den(rng)) +
                          CycScalar::sqrt_2p(p) * make_fraction(coef(rng), den(rng));
            CHECK(scalar_from_json(p, scalar_to_json(x)) == x);
        }
    }
}

TEST_CASE("operator emission is deterministic") {
    const int p = 3;
    RepZ rep(p);
    ZOperator T = rep.build_T();
    std::string a = operator_to_json(rep, T).dump(2);
    std::string b = operator_to_json(rep, T).dump(2);
    CHECK(a == b);
    ordered_json j = operator_to_json(rep, T);
    CHECK(j["basis"][0] == "w1");
    CHECK(j["basis"][2 * p] == "e1");
    CHECK(j["rows"].size() == static_cast<size_t>(rep.dim()));
}

TEST_CASE("vector emission with float shadows") {
    const int p = 3;
    RepZ rep(p);
    ordered_json j = vector_to_json(rep, rep.gaussian_element(), 20);
    CHECK(j["coeffs"].size() == static_cast<size_t>(rep.dim()));
    CHECK(j["coeffs"][rep.e_index(1)].contains("re"));
    CHECK(j["coeffs"][rep.e_index(1)]["re"] == "1");
}

TEST_CASE("report serialization carries the mismatch") {
    const int p = 3;
    CheckReport r = CheckReport::fail("demo");
    r.first_mismatch = Mismatch{1, 2, CycScalar::one(p), CycScalar::zero(p)};
    ordered_json j = report_to_json(r);
    CHECK(j["status"] == "fail");
    CHECK(j["first_mismatch"]["row"] == 1);
    CHECK(j["first_mismatch"]["col"] == 2);
}

TEST_CASE("csv export") {
    const int p = 3;
    RepZ rep(p);
    std::string csv = vector_to_csv(rep, rep.unit(), 6);
    CHECK(csv.find("basis,value") == 0);
    CHECK(csv.find("e1,1") != std::string::npos);
}
