// Command-line front end: closed-form computation, series expansion,
// functional-equation verification, lattice-oracle counts, and the small
// combinatorial building blocks, with machine-readable output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// guard.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>

#include "hzeta/funceq.hpp"
#include "hzeta/igusa.hpp"
#include "hzeta/oracle.hpp"
#include "hzeta/varreg.hpp"

using namespace hzeta;
using json = nlohmann::ordered_json;

namespace {

std::vector<int> parse_composition(const std::string& s, const char* what) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        if (comma == std::string::npos) comma = s.size();
        out.push_back(std::stoi(s.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    if (out.empty()) throw CLI::ValidationError(what, "must be a non-empty comma-separated list");
    for (int x : out)
        if (x < 1) throw CLI::ValidationError(what, "entries must be positive");
    return out;
}

bool all_ones(const std::vector<int>& e) {
    for (int x : e)
        if (x != 1) return false;
    return true;
}

json rf_json(const RatFunc& a) { return json::parse(rf_to_json(a)); }

int cmd_compute(const std::string& fstr, const std::string& estr, const std::string& format) {
    std::vector<int> f = parse_composition(fstr, "--f");
    if (!estr.empty()) {
        std::vector<int> e = parse_composition(estr, "--e");
        if (!all_ones(e)) {
            std::cerr << "compute: no closed form is implemented for ramified types (e != 1);"
                      << " use `series --e ... --f ...` for the exact truncated expansion\n";
            return 2;
        }
        if (e.size() != f.size()) {
            std::cerr << "compute: --e and --f must have the same length\n";
            return 2;
        }
    }
    ZetaResult z = zeta_unramified(f);
    if (format == "latex") {
        std::cout << rf_to_latex(z.W) << "\n";
    } else if (format == "text") {
        std::cout << z.W.str() << "\n";
    } else {
        json out;
        out["n"] = z.n;
        out["f"] = z.f;
        out["provenance"] = z.provenance;
        out["W"] = rf_json(z.W);
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_series(const std::string& fstr, const std::string& estr, int order, const std::string& pstr,
               const std::string& format) {
    std::vector<int> f = parse_composition(fstr, "--f");
    std::vector<int> e = estr.empty() ? std::vector<int>(f.size(), 1) : parse_composition(estr, "--e");
    if (e.size() != f.size()) {
        std::cerr << "series: --e and --f must have the same length\n";
        return 2;
    }
    DecompType dt(e, f);
    TruncatedSeries s = all_ones(e) ? rf_series(zeta_unramified(f).W, order) : zeta_series_general(dt, order);
    json out;
    out["e"] = e;
    out["f"] = f;
    out["order"] = order;
    if (!pstr.empty()) {
        Rat p(pstr);
        out["p"] = pstr;
        json coeffs = json::array();
        for (const Rat& c : s.evaluate_p(p)) {
            if (boost::multiprecision::denominator(c) != 1) {
                std::cerr << "series: non-integer coefficient at the given p\n";
                return 2;
            }
            coeffs.push_back(boost::multiprecision::numerator(c).str());
        }
        out["coefficients"] = coeffs;
    } else {
        json coeffs = json::array();
        for (int k = 0; k <= order; ++k) coeffs.push_back(s.coeff(k).str());
        out["coefficients"] = coeffs;
    }
    if (format == "text") {
        for (int k = 0; k <= order; ++k)
            std::cout << "t^" << k << ": " << out["coefficients"][k].get<std::string>() << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& fstr, const std::string& format) {
    std::vector<int> f = parse_composition(fstr, "--f");
    ZetaResult z = zeta_unramified(f);
    SymmetryData sym = expected_symmetry_unramified(z.n);
    bool pass = check_funceq(z.W, sym);
    json out;
    out["claim"] = "W(p^-1, t^-1) = (-1)^a p^b t^c W(p, t)";
    out["f"] = f;
    out["symmetry"] = {{"a", sym.a}, {"b", sym.b}, {"c", sym.c}};
    out["verdict"] = pass ? "PASS" : "FAIL";
    if (format == "text")
        std::cout << "symmetry (" << sym.a << ", " << sym.b << ", " << sym.c
                  << "): " << out["verdict"].get<std::string>() << "\n";
    else
        std::cout << out.dump(2) << "\n";
    return pass ? 0 : 1;
}

int cmd_oracle(const std::string& fstr, const std::string& estr, int p, int maxk, const std::string& method,
               int threads, const std::string& format) {
    std::vector<int> f = parse_composition(fstr, "--f");
    std::vector<int> e = estr.empty() ? std::vector<int>(f.size(), 1) : parse_composition(estr, "--e");
    DecompType dt(e, f);
    HeisenbergModel model = build_heisenberg_model(p, maxk + 1, dt);
    std::vector<std::pair<int, Int>> rows;
    for (int k = 0; k <= maxk; ++k) {
        Int c = method == "hnf" ? count_ideals(model, k) : count_ideals_layered(model, k, threads);
        rows.emplace_back(k, c);
    }
    if (format == "csv") {
        std::cout << "p,k,count\n";
        for (const auto& [k, c] : rows) std::cout << p << "," << k << "," << c.str() << "\n";
    } else {
        json out = json::array();
        for (const auto& [k, c] : rows) out.push_back(json{{"p", p}, {"k", k}, {"count", c.str()}});
        std::cout << out.dump(2) << "\n";
    }
    return 0;
}

int cmd_dyck(int n, const std::string& format) {
    auto words = dyck_words(n);
    if (format == "text") {
        for (const auto& w : words) std::cout << w.str() << "\n";
    } else {
        json out = json::array();
        for (const auto& w : words) out.push_back(w.str());
        std::cout << out.dump() << "\n";
    }
    return 0;
}

int cmd_igusa(int h, const std::string& kind, const std::string& yspec, const std::string& format) {
    YSpec y = yspec == "one" ? YSpec::One : (yspec == "pinv" ? YSpec::PInverse : YSpec::Symbolic);
    RatFunc F;
    if (kind == "wo") {
        F = igusa_wo(h, symbolic_X_subsets(h));
    } else {
        auto X = symbolic_X(h);
        F = kind == "circ" ? igusa_I_circ(h, y, X) : igusa_I(h, y, X);
    }
    if (format == "latex")
        std::cout << rf_to_latex(F) << "\n";
    else if (format == "text")
        std::cout << F.str() << "\n";
    else
        std::cout << rf_json(F).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"local normal zeta factors of Heisenberg groups over number rings (unramified primes)"};
    app.require_subcommand(1);
    app.fallthrough();
    int threads = 1;
    app.add_option("--threads", threads, "thread budget for oracle enumeration")->capture_default_str();

    std::string fstr, estr, format = "json", pstr, method = "layered", kind = "plain", yspec = "Y";
    int order = 5, maxk = 3, n = 3, p = 2, h = 2;

    auto* compute = app.add_subcommand("compute", "closed form of the local factor");
    compute->add_option("--f", fstr, "inertia-degree composition, e.g. 2,2")->required();
    compute->add_option("--e", estr, "ramification vector (must be all ones here)");
    compute->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));

    auto* series = app.add_subcommand("series", "exact truncated expansion in t");
    series->add_option("--f", fstr)->required();
    series->add_option("--e", estr, "ramification vector (any type)");
    series->add_option("--order", order, "truncation order")->required();
    series->add_option("--p", pstr, "evaluate coefficients at this prime");
    series->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand("verify", "functional-equation verification report");
    verify->add_option("--f", fstr)->required();
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* oracle = app.add_subcommand("oracle", "ideal counts by lattice enumeration");
    oracle->add_option("--f", fstr)->required();
    oracle->add_option("--e", estr);
    oracle->add_option("--p", p, "prime")->required();
    oracle->add_option("--max-k", maxk, "count ideals of index p^k for k <= max-k");
    oracle->add_option("--method", method)->check(CLI::IsMember({"hnf", "layered"}));
    oracle->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* dyck = app.add_subcommand("dyck", "Dyck words of length 2n");
    dyck->add_option("--n", n)->required();
    dyck->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

    auto* igusa = app.add_subcommand("igusa", "symbolic Igusa-type functions");
    igusa->add_option("--rank", h, "number of items ranked")->required();
    igusa->add_option("--kind", kind)->check(CLI::IsMember({"plain", "circ", "wo"}));
    igusa->add_option("--y", yspec)->check(CLI::IsMember({"Y", "one", "pinv"}));
    igusa->add_option("--format", format)->check(CLI::IsMember({"json", "latex", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(fstr, estr, format);
        if (series->parsed()) return cmd_series(fstr, estr, order, pstr, format);
        if (verify->parsed()) return cmd_verify(fstr, format);
        if (oracle->parsed()) return cmd_oracle(fstr, estr, p, maxk, method, threads, format);
        if (dyck->parsed()) return cmd_dyck(n, format);
        if (igusa->parsed()) return cmd_igusa(h, kind, yspec, format);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
