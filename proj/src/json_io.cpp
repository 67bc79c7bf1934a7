#include "daha/json_io.hpp"

#include <sstream>

namespace daha {

ordered_json scalar_to_json(const CycScalar& x) {
    ordered_json a = ordered_json::array();
    ordered_json b = ordered_json::array();
    for (const auto& c : x.a()) a.push_back(to_string(c));
    for (const auto& c : x.b()) b.push_back(to_string(c));
    return ordered_json{{"a", a}, {"b", b}};
}

CycScalar scalar_from_json(int p, const ordered_json& j) {
    std::vector<Rational> a, b;
    for (const auto& s : j.at("a")) a.push_back(parse_rational(s.get<std::string>()));
    for (const auto& s : j.at("b")) b.push_back(parse_rational(s.get<std::string>()));
    return CycScalar::from_parts(p, std::move(a), std::move(b));
}

ordered_json ring_header(int p) {
    const auto& t = RingTable::get(p);
    return ordered_json{
        {"p", p}, {"conductor", t.conductor}, {"min_poly", t.min_poly}};
}

namespace {

ordered_json scalar_entry(const CycScalar& x, int float_digits) {
    ordered_json j = scalar_to_json(x);
    if (float_digits > 0) {
        auto [re, im] = x.embed_complex_str(float_digits);
        j["re"] = re;
        j["im"] = im;
    }
    return j;
}

std::vector<std::string> basis_labels(const RepZ& rep) {
    std::vector<std::string> out;
    out.reserve(rep.dim());
    for (int i = 0; i < rep.dim(); ++i) out.push_back(rep.basis_label(i));
    return out;
}

}  // namespace

ordered_json operator_to_json(const RepZ& rep, const ZOperator& A,
                              int float_digits) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < A.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < A.cols(); ++j)
            row.push_back(scalar_entry(A.at(i, j), float_digits));
        rows.push_back(std::move(row));
    }
    ordered_json out = ring_header(rep.p());
    out["basis"] = basis_labels(rep);
    out["rows"] = std::move(rows);
    return out;
}

ordered_json vector_to_json(const RepZ& rep, const ZVector& v, int float_digits) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : v) coeffs.push_back(scalar_entry(c, float_digits));
    ordered_json out = ring_header(rep.p());
    out["basis"] = basis_labels(rep);
    out["coeffs"] = std::move(coeffs);
    return out;
}

ordered_json labeled_vectors_to_json(const RepZ& rep,
                                     const std::vector<std::string>& labels,
                                     const std::vector<ZVector>& vectors,
                                     int float_digits) {
    ordered_json out = ring_header(rep.p());
    out["basis"] = basis_labels(rep);
    out["labels"] = labels;
    ordered_json vecs = ordered_json::array();
    for (const auto& v : vectors) {
        ordered_json row = ordered_json::array();
        for (const auto& c : v) row.push_back(scalar_entry(c, float_digits));
        vecs.push_back(std::move(row));
    }
    out["vectors"] = std::move(vecs);
    return out;
}

ordered_json fusion_to_json(const FusionTensor& t, int float_digits) {
    ordered_json out = ring_header(t.p);
    out["basis"] = t.labels;
    ordered_json N = ordered_json::array();
    for (const auto& plane : t.N) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : plane) {
            ordered_json r = ordered_json::array();
            for (const auto& c : row) r.push_back(scalar_entry(c, float_digits));
            rows.push_back(std::move(r));
        }
        N.push_back(std::move(rows));
    }
    out["N"] = std::move(N);
    out["integral"] = t.integral;
    return out;
}

ordered_json report_to_json(const CheckReport& r) {
    ordered_json out{{"relation", r.relation}, {"status", r.ok ? "pass" : "fail"}};
    if (r.informational) out["informational"] = true;
    if (!r.note.empty()) out["note"] = r.note;
    if (r.first_mismatch) {
        out["first_mismatch"] = ordered_json{{"row", r.first_mismatch->row},
                                             {"col", r.first_mismatch->col},
                                             {"lhs", scalar_to_json(r.first_mismatch->lhs)},
                                             {"rhs", scalar_to_json(r.first_mismatch->rhs)}};
    }
    return out;
}

ordered_json suite_to_json(const CheckSuite& s) {
    ordered_json reports = ordered_json::array();
    for (const auto& r : s.reports) reports.push_back(report_to_json(r));
    return ordered_json{
        {"suite", s.name}, {"ok", s.all_ok()}, {"reports", std::move(reports)}};
}

namespace {
std::string complex_str(const CycScalar& x, int digits) {
    auto [re, im] = x.embed_complex_str(digits);
    return re + (im.empty() || im[0] == '-' ? "" : "+") + im + "i";
}
}  // namespace

std::string operator_to_csv(const RepZ& rep, const ZOperator& A, int digits) {
    std::ostringstream os;
    os << "row";
    for (int j = 0; j < A.cols(); ++j) os << "," << rep.basis_label(j);
    os << "\n";
    for (int i = 0; i < A.rows(); ++i) {
        os << rep.basis_label(i);
        for (int j = 0; j < A.cols(); ++j) os << "," << complex_str(A.at(i, j), digits);
        os << "\n";
    }
    return os.str();
}

std::string vector_to_csv(const RepZ& rep, const ZVector& v, int digits) {
    std::ostringstream os;
    os << "basis,value\n";
    for (int i = 0; i < rep.dim(); ++i)
        os << rep.basis_label(i) << "," << complex_str(v[i], digits) << "\n";
    return os.str();
}

std::string labeled_vectors_to_csv(const RepZ& rep,
                                   const std::vector<std::string>& labels,
                                   const std::vector<ZVector>& vectors, int digits) {
    std::ostringstream os;
    os << "label";
    for (int i = 0; i < rep.dim(); ++i) os << "," << rep.basis_label(i);
    os << "\n";
    for (size_t k = 0; k < labels.size(); ++k) {
        os << labels[k];
        for (int i = 0; i < rep.dim(); ++i)
            os << "," << complex_str(vectors[k][i], digits);
        os << "\n";
    }
    return os.str();
}

std::string fusion_to_csv(const FusionTensor& t, int digits) {
    std::ostringstream os;
    os << "lhs,rhs";
    for (const auto& l : t.labels) os << "," << l;
    os << "\n";
    const int n = static_cast<int>(t.labels.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            os << t.labels[a] << "," << t.labels[b];
            for (int g = 0; g < n; ++g)
                os << "," << complex_str(t.N[a][b][g], digits);
            os << "\n";
        }
    return os.str();
}

}  // namespace daha
