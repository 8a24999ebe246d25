// Command-line surface for the 2x2 trace-exponential toolkit:
//   reduce   - canonical form of a Hermitian pair, with round-trip residuals
//   measure  - discrete (word-expansion) or closed-form representing measure
//   verify   - convergence / representation / convexity checks
//   sample   - plot-ready CSV of f, e1, e2
//
// Exit codes: 0 success, 2 input error, 3 domain error,
//             4 internal-invariant violation, 5 check failure.

#include <CLI11.hpp>
#include <json.hpp>

#include "trexp/closed_form.hpp"
#include "trexp/gram.hpp"
#include "trexp/pauli.hpp"
#include "trexp/quadrature.hpp"
#include "trexp/reduction.hpp"
#include "trexp/rng.hpp"
#include "trexp/word_measure.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInvariant = 4;
constexpr int kExitCheck = 5;

struct cli_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

trexp::HermitianMatrix2 load_matrix(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cli_input_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw cli_input_error(path + ": " + e.what());
    }
    for (const char* key : {"a11", "a22"}) {
        if (!j.contains(key))
            throw cli_input_error(path + ": missing field \"" + std::string(key) + "\"");
        if (!j[key].is_number())
            throw cli_input_error(path + ": field \"" + std::string(key) +
                                  "\" must be a number");
    }
    if (!j.contains("a12"))
        throw cli_input_error(path + ": missing field \"a12\"");
    if (!j["a12"].is_array() || j["a12"].size() != 2 || !j["a12"][0].is_number() ||
        !j["a12"][1].is_number())
        throw cli_input_error(path + ": field \"a12\" must be [re, im]");
    return {j["a11"].get<double>(), j["a22"].get<double>(),
            {j["a12"][0].get<double>(), j["a12"][1].get<double>()}};
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

struct TRange {
    double lo, hi;
    int count;
};

TRange parse_trange(const std::string& s) {
    TRange r{};
    char c1, c2;
    std::istringstream ss(s);
    if (!(ss >> r.lo >> c1 >> r.hi >> c2 >> r.count) || c1 != ':' || c2 != ':' ||
        r.count < 2 || r.hi < r.lo)
        throw cli_input_error("bad t-range \"" + s + "\", expected lo:hi:count");
    return r;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        out.push_back(std::stoi(tok));
    }
    if (out.empty()) throw cli_input_error("empty n-list");
    return out;
}

json matrix_json(const trexp::Matrix2& m) {
    auto c = [](const trexp::cplx& z) { return json::array({z.real(), z.imag()}); };
    return json::array({json::array({c(m.m11), c(m.m12)}),
                        json::array({c(m.m21), c(m.m22)})});
}

void write_output(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw cli_input_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

// ---- reduce ---------------------------------------------------------------

int run_reduce(const std::string& a_path, const std::string& b_path,
               const std::string& out_path) {
    const auto a = load_matrix(a_path);
    const auto b = load_matrix(b_path);
    const auto dec = trexp::reduce(a, b);

    json j;
    j["lambda"] = dec.lambda;
    j["mu"] = dec.mu;
    j["t0"] = dec.t0;
    j["c"] = dec.c;
    j["alpha"] = dec.alpha;
    j["beta"] = dec.beta;
    j["U"] = matrix_json(dec.u);
    j["degenerate"] = dec.degenerate;

    double worst = 0.0;
    json checks = json::array();
    for (int i = -4; i <= 4; ++i) {
        const double t = static_cast<double>(i);
        const double fd = trexp::f_direct(a, b, t);
        const double fc = trexp::f_canonical(dec, t);
        worst = std::max(worst, std::abs(fd - fc) / fd);
        checks.push_back({{"t", t}, {"f_direct", fd}, {"f_canonical", fc}});
    }
    const bool pass = worst < 1e-10;
    j["residual"] = {{"points", checks}, {"max_relative", worst},
                     {"tolerance", 1e-10}, {"pass", pass}};
    write_output(j, out_path);
    return pass ? 0 : kExitCheck;
}

// ---- measure --------------------------------------------------------------

int run_measure_approx(int n, double beta, const std::string& out_path) {
    const auto m = trexp::build_rho_N(n, beta);
    const double mass = m.total_mass();
    json atoms = json::array();
    for (const auto& a : m.atoms) {
        if (a.weight < 0.0) {
            std::cerr << "internal error: negative weight at s=" << a.s << "\n";
            return kExitInvariant;
        }
        atoms.push_back({{"s", a.s}, {"mu", a.location}, {"weight", a.weight}});
    }
    // strict for beta > 0, equality at beta = 0
    if (mass > std::exp(beta) || (beta > 0.0 && mass == std::exp(beta))) {
        std::cerr << "internal error: mass " << mass << " violates e^beta bound\n";
        return kExitInvariant;
    }
    json j = {{"n", n}, {"beta", beta}, {"atoms", atoms}, {"mass", mass}};
    write_output(j, out_path);
    return 0;
}

int run_measure_exact(double beta, int grid_points, const std::string& out_path) {
    const auto m = trexp::rho_closed(beta);
    const double mass = m.total_mass();
    if (!(mass <= std::exp(beta))) {
        std::cerr << "internal error: mass " << mass << " violates e^beta bound\n";
        return kExitInvariant;
    }
    json grid = json::array();
    for (int i = 0; i < grid_points; ++i) {
        const double mu = -1.0 + 2.0 * i / (grid_points - 1);
        const double d = m.density ? m.density(mu) : 0.0;
        grid.push_back(json::array({mu, d}));
    }
    json j = {{"type", "hybrid"},
              {"beta", beta},
              {"atom_weight_at_one", m.atom_weight_at_one},
              {"density_grid", grid},
              {"mass", mass}};
    write_output(j, out_path);
    return 0;
}

// ---- verify ---------------------------------------------------------------

int run_verify_convergence(double alpha, double beta, double t,
                           const std::vector<int>& n_list) {
    const auto rows = trexp::convergence_table(alpha, beta, t, n_list);
    std::printf("%8s  %14s  %8s\n", "n", "error", "ratio");
    bool ok = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        double ratio = 0.0;
        if (i + 1 < rows.size() && rows[i + 1].error > 0.0) {
            ratio = rows[i].error / rows[i + 1].error;
            // first-order decay: halving step should roughly halve the error
            if (rows[i + 1].n == 2 * rows[i].n && beta > 0.0 &&
                (ratio < 1.7 || ratio > 2.3))
                ok = false;
        }
        std::printf("%8d  %14.6e  %8.3f\n", rows[i].n, rows[i].error, ratio);
    }
    std::printf("first-order decay: %s\n", ok ? "pass" : "FAIL");
    return ok ? 0 : kExitCheck;
}

int run_verify_representation(double alpha, double beta, const TRange& tr) {
    const auto m = trexp::rho_closed(beta);
    double worst = 0.0;
    for (int i = 0; i < tr.count; ++i) {
        const double t = tr.lo + (tr.hi - tr.lo) * i / (tr.count - 1);
        const double u = alpha * t;
        const double p = trexp::laplace_eval(m, u, +1);
        const double q = trexp::laplace_eval(m, u, -1);
        worst = std::max(worst, std::abs(p - trexp::e1(u, beta)));
        worst = std::max(worst, std::abs(q - trexp::e2(u, beta)));
        worst = std::max(worst, std::abs(p + q - trexp::f_closed(alpha, beta, t)));
    }
    const bool ok = worst < 1e-8;
    std::printf("representation residual: %.3e (tolerance 1e-8): %s\n", worst,
                ok ? "pass" : "FAIL");
    return ok ? 0 : kExitCheck;
}

int run_verify_convexity(const std::string& a_path, const std::string& b_path,
                         int n_grids, std::uint64_t seed) {
    const auto a = load_matrix(a_path);
    const auto b = load_matrix(b_path);
    auto f = [&](double t) { return trexp::f_direct(a, b, t); };

    trexp::SplitMix64 rng(seed);
    std::vector<std::vector<double>> grids;
    for (int g = 0; g < n_grids; ++g) {
        const int sz = 4 + static_cast<int>(rng.next_below(9)); // 4..12
        std::vector<double> grid;
        for (int i = 0; i < sz; ++i) grid.push_back(rng.uniform(-3.0, 3.0));
        grids.push_back(std::move(grid));
    }
    const auto reports = trexp::check_exp_convex(f, grids);
    json jr = json::array();
    for (const auto& r : reports)
        jr.push_back({{"grid", r.grid},
                      {"min_eig", r.min_eigenvalue},
                      {"verdict", trexp::to_string(r.verdict)}});
    const auto verdict = trexp::aggregate_verdict(reports);
    json j = {{"seed", seed}, {"reports", jr}, {"verdict", trexp::to_string(verdict)}};
    std::cout << j.dump(2) << "\n";
    return verdict == trexp::Verdict::certified_psd ? 0 : kExitCheck;
}

// ---- sample ---------------------------------------------------------------

int run_sample(double alpha, double beta, const TRange& tr, const std::string& out) {
    std::ofstream os(out);
    if (!os) throw cli_input_error("cannot write " + out);
    os << "t,f,e1,e2\n";
    for (int i = 0; i < tr.count; ++i) {
        const double t = tr.lo + (tr.hi - tr.lo) * i / (tr.count - 1);
        const double u = alpha * t;
        os << fmt(t) << ',' << fmt(trexp::f_closed(alpha, beta, t)) << ','
           << fmt(trexp::e1(u, beta)) << ',' << fmt(trexp::e2(u, beta)) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"2x2 Hermitian pencil trace-exponentials and their representing measures"};
    app.require_subcommand(1);

    std::string a_path, b_path, out_path, trange_str = "-5:5:21", nlist_str;
    double alpha = 1.0, beta = 1.0, t_point = 1.0;
    int n = 4, grid_points = 1001, n_grids = 20;
    std::uint64_t seed = 42;

    auto* reduce = app.add_subcommand("reduce", "canonical form of a Hermitian pair");
    reduce->add_option("--matrix-a", a_path)->required();
    reduce->add_option("--matrix-b", b_path)->required();
    reduce->add_option("--json", out_path);

    auto* measure = app.add_subcommand("measure", "representing measures");
    auto* approx = measure->add_subcommand("approx", "word-expansion measure rho_N");
    approx->add_option("--n", n)->required()->check(CLI::Range(2, 1000000));
    approx->add_option("--beta", beta)->required();
    approx->add_option("--json", out_path);
    auto* exact = measure->add_subcommand("exact", "closed-form limiting measure");
    exact->add_option("--beta", beta)->required();
    exact->add_option("--grid-points", grid_points)->check(CLI::Range(2, 1000000));
    exact->add_option("--json", out_path);
    measure->require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "identity and convexity checks");
    auto* conv = verify->add_subcommand("convergence", "Lie-product error decay");
    conv->add_option("--alpha", alpha);
    conv->add_option("--beta", beta);
    conv->add_option("--t", t_point);
    conv->add_option("--n-list", nlist_str)->required();
    auto* rep = verify->add_subcommand("representation", "Laplace transform vs closed form");
    rep->add_option("--alpha", alpha);
    rep->add_option("--beta", beta);
    rep->add_option("--t-range", trange_str);
    auto* cvx = verify->add_subcommand("convexity", "Gram PSD certification");
    cvx->add_option("--matrix-a", a_path)->required();
    cvx->add_option("--matrix-b", b_path)->required();
    cvx->add_option("--grids", n_grids)->check(CLI::Range(1, 1000));
    cvx->add_option("--seed", seed);
    verify->require_subcommand(1);

    auto* sample = app.add_subcommand("sample", "CSV of t, f, e1, e2");
    sample->add_option("--alpha", alpha);
    sample->add_option("--beta", beta);
    sample->add_option("--t-range", trange_str);
    sample->add_option("--out", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*reduce) return run_reduce(a_path, b_path, out_path);
        if (*approx) return run_measure_approx(n, beta, out_path);
        if (*exact) return run_measure_exact(beta, grid_points, out_path);
        if (*conv)
            return run_verify_convergence(alpha, beta, t_point, parse_int_list(nlist_str));
        if (*rep) return run_verify_representation(alpha, beta, parse_trange(trange_str));
        if (*cvx) return run_verify_convexity(a_path, b_path, n_grids, seed);
        if (*sample) return run_sample(alpha, beta, parse_trange(trange_str), out_path);
    } catch (const cli_input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const trexp::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvariant;
    }
    return 0;
}
