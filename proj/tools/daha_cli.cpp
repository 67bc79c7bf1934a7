// Command-line front end: runs the verification suites and emits matrices,
// bases, fusion tables and the Gaussian element as JSON or CSV.
//
// Exit codes: 0 all checks pass / emission written, 1 verification failure
// or I/O error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>

#include "daha/identities.hpp"
#include "daha/json_io.hpp"
#include "daha/modular.hpp"
#include "daha/polyoracle.hpp"
#include "daha/rep_z.hpp"
#include "daha/symmetric.hpp"
#include "daha/ybasis.hpp"

namespace {

bool parse_p_list(const std::string& spec, std::vector<int>& out) {
    auto parse_int = [](const std::string& s, int& v) {
        try {
            size_t pos = 0;
            v = std::stoi(s, &pos);
            return pos == s.size();
        } catch (...) {
            return false;
        }
    };
    auto dots = spec.find("..");
    if (dots == std::string::npos) {
        int v;
        if (!parse_int(spec, v)) return false;
        out.push_back(v);
        return true;
    }
    int lo, hi;
    if (!parse_int(spec.substr(0, dots), lo) ||
        !parse_int(spec.substr(dots + 2), hi) || hi < lo)
        return false;
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return true;
}

void print_suite(const daha::CheckSuite& suite) {
    for (const auto& r : suite.reports) {
        std::cout << (r.ok ? "  pass  " : r.informational ? "  info  " : "  FAIL  ")
                  << r.relation;
        if (!r.note.empty()) std::cout << "  [" << r.note << "]";
        std::cout << "\n";
    }
    std::cout << (suite.all_ok() ? "PASS " : "FAIL ") << suite.name << "\n";
}

int run_verify(const std::vector<int>& ps, const std::string& suite_sel,
               const std::string& report_path) {
    bool all_ok = true;
    daha::ordered_json report = daha::ordered_json::array();
    for (int p : ps) {
        daha::RepZ rep(p);
        std::vector<daha::CheckSuite> suites;
        if (suite_sel == "daha" || suite_sel == "all") {
            suites.push_back(rep.verify_daha());
            suites.push_back(rep.submodule_checks());
            suites.push_back(daha::verify_jordan_structure(rep));
        }
        if (suite_sel == "ybasis" || suite_sel == "all")
            suites.push_back(daha::verify_ybasis(rep));
        if (suite_sel == "modular" || suite_sel == "all")
            suites.push_back(daha::ModularAction(rep).verify_psl2z());
        if (suite_sel == "symmetric" || suite_sel == "all")
            suites.push_back(daha::Symmetrized(rep).verify_all());
        if (suite_sel == "oracle" || suite_sel == "all")
            suites.push_back(daha::PolyOracle(p).verify(rep));
        if (suite_sel == "identities" || suite_sel == "all") {
            suites.push_back(daha::verify_appendix_e_sums(p));
            suites.push_back(daha::verify_appendix_w_sums(p));
            suites.push_back(daha::verify_S_squared_assembly(rep));
        }
        for (const auto& s : suites) {
            print_suite(s);
            all_ok &= s.all_ok();
            if (!report_path.empty()) report.push_back(daha::suite_to_json(s));
        }
    }
    if (!report_path.empty()) {
        std::ofstream os(report_path, std::ios::binary);
        if (!os) {
            std::cerr << "cannot open " << report_path << "\n";
            return 1;
        }
        os << report.dump(2) << "\n";
    }
    std::cout << (all_ok ? "ALL PASS" : "FAILURES PRESENT") << "\n";
    return all_ok ? 0 : 1;
}

int run_emit(int p, const std::string& what, const std::string& format,
             const std::string& out_path, int float_digits) {
    using daha::ordered_json;
    daha::RepZ rep(p);
    ordered_json j;
    std::string csv;
    const int csv_digits = float_digits > 0 ? float_digits : 15;

    if (what == "xmatrix" || what == "ymatrix" || what == "tmatrix" ||
        what == "smatrix") {
        daha::ZOperator A;
        if (what == "xmatrix") A = rep.build_X();
        else if (what == "ymatrix") A = rep.build_Y();
        else if (what == "tmatrix") A = rep.build_T();
        else A = daha::YBasisBuilder(rep).build_S();
        j = daha::operator_to_json(rep, A, float_digits);
        csv = daha::operator_to_csv(rep, A, csv_digits);
    } else if (what == "cbasis" || what == "hbasis") {
        daha::Symmetrized sym(rep);
        std::vector<std::string> labels;
        std::vector<daha::ZVector> vectors;
        for (int s = 0; s <= p; ++s) {
            labels.push_back((what == "cbasis" ? "e" : "f") + std::to_string(s));
            vectors.push_back(what == "cbasis" ? sym.e_bold(s) : sym.f_bold(s));
        }
        for (const char* sign : {"+", "-"}) {
            for (int s = 1; s <= p - 1; ++s) {
                labels.push_back((what == "cbasis" ? "w" : "u") + std::string(sign) +
                                 std::to_string(s));
                bool plus = sign[0] == '+';
                vectors.push_back(what == "cbasis"
                                      ? (plus ? sym.w_bold_plus(s) : sym.w_bold_minus(s))
                                      : (plus ? sym.u_bold_plus(s) : sym.u_bold_minus(s)));
            }
        }
        j = daha::labeled_vectors_to_json(rep, labels, vectors, float_digits);
        csv = daha::labeled_vectors_to_csv(rep, labels, vectors, csv_digits);
    } else if (what == "fusion") {
        daha::Symmetrized sym(rep);
        daha::FusionTensor t = sym.fusion_constants();
        j = daha::fusion_to_json(t, float_digits);
        csv = daha::fusion_to_csv(t, csv_digits);
    } else if (what == "ribbon") {
        j = daha::vector_to_json(rep, rep.gaussian_element(), float_digits);
        csv = daha::vector_to_csv(rep, rep.gaussian_element(), csv_digits);
    } else {
        std::cerr << "unknown object: " << what << "\n";
        return 2;
    }

    std::string payload = format == "json" ? j.dump(2) + "\n" : csv;
    if (out_path.empty() || out_path == "-") {
        std::cout << payload;
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) {
            std::cerr << "cannot open " << out_path << "\n";
            return 1;
        }
        os << payload;
        if (!os) return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of a 6p-4 dimensional double affine Hecke "
                 "algebra module, its PSL(2,Z) action and fusion algebra"};
    app.require_subcommand(1);

    std::string p_spec = "3..8";
    std::string suite = "all";
    std::string what;
    std::string format = "json";
    std::string out_path;
    int float_digits = 0;

    CLI::App* verify =
        app.add_subcommand("verify", "run verification suites, exit 0 iff all pass");
    verify->add_option("--p", p_spec, "p value or range a..b (p >= 3)");
    verify->add_option("--suite", suite,
                       "daha | ybasis | modular | symmetric | oracle | identities | all");
    std::string report_path;
    verify->add_option("--report", report_path,
                       "write all check reports as JSON to this path");

    CLI::App* emit = app.add_subcommand("emit", "emit an object as JSON or CSV");
    emit->add_option("--p", p_spec, "p value (ranges allowed for verify only)");
    emit->add_option("--what", what,
                     "xmatrix | ymatrix | tmatrix | smatrix | cbasis | hbasis | "
                     "fusion | ribbon")
        ->required();
    emit->add_option("--format", format, "json | csv");
    emit->add_option("--out", out_path, "output path (default stdout)");
    emit->add_option("--float-digits", float_digits,
                     "add complex-embedded values with this many digits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::vector<int> ps;
    if (!parse_p_list(p_spec, ps) || ps.empty()) {
        std::cerr << "invalid --p: " << p_spec << "\n";
        return 2;
    }
    for (int p : ps)
        if (p < 3) {
            std::cerr << "p must be at least 3, got " << p << "\n";
            return 2;
        }

    try {
        if (verify->parsed()) {
            const std::set<std::string> known{"daha",      "ybasis", "modular",
                                              "symmetric", "oracle", "identities",
                                              "all"};
            if (!known.count(suite)) {
                std::cerr << "unknown suite: " << suite << "\n";
                return 2;
            }
            return run_verify(ps, suite, report_path);
        }
        if (ps.size() != 1) {
            std::cerr << "emit requires a single p\n";
            return 2;
        }
        if (float_digits < 0) {
            std::cerr << "--float-digits must be positive\n";
            return 2;
        }
        return run_emit(ps[0], what, format, out_path, float_digits);
    } catch (const daha::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
