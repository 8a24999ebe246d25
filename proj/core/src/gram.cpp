#include "trexp/gram.hpp"

#include "trexp/pauli.hpp"

#include <cmath>

namespace trexp {

namespace {
constexpr int kMaxGrid = 64;
constexpr double kCertifyTol = 1e-9;
constexpr double kViolateTol = 1e-6;
constexpr int kMaxSweeps = 100;
} // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::certified_psd: return "certified-psd";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::violated: return "violated";
    }
    return "?";
}

std::vector<std::vector<double>> gram_matrix(const RealFn& f,
                                             const std::vector<double>& grid) {
    const int m = static_cast<int>(grid.size());
    if (m > kMaxGrid) throw domain_error("gram_matrix: grid larger than 64");
    for (double t : grid)
        if (!is_finite(t)) throw domain_error("gram_matrix: non-finite grid point");

    std::vector<std::vector<double>> g(m, std::vector<double>(m));
    for (int r = 0; r < m; ++r)
        for (int s = r; s < m; ++s)
            g[r][s] = g[s][r] = f(grid[r] + grid[s]);
    return g;
}

double min_eig_sym(std::vector<std::vector<double>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) throw domain_error("min_eig_sym: empty matrix");
    if (n > kMaxGrid) throw domain_error("min_eig_sym: matrix larger than 64");
    if (n == 1) return a[0][0];

    double frob = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) frob += a[i][j] * a[i][j];
    frob = std::sqrt(frob);
    const double stop = 1e-14 * frob;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        double off = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (std::sqrt(2.0 * off) <= stop || off == 0.0) {
            double mn = a[0][0];
            for (int i = 1; i < n; ++i) mn = std::min(mn, a[i][i]);
            return mn;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                if (a[p][q] == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double app = a[p][p], aqq = a[q][q], apq = a[p][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = a[q][p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = a[p][k] = c * akp - s * akq;
                    a[k][q] = a[q][k] = s * akp + c * akq;
                }
            }
        }
    }
    throw std::runtime_error("min_eig_sym: no convergence after 100 sweeps");
}

GramReport gram_report(const RealFn& f, const std::vector<double>& grid) {
    GramReport rep;
    rep.grid = grid;
    rep.gram = gram_matrix(f, grid);
    rep.min_eigenvalue = min_eig_sym(rep.gram);
    double diag_max = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        diag_max = std::max(diag_max, rep.gram[i][i]);
    const double scale = std::max(1.0, diag_max);
    rep.tolerance = kCertifyTol * scale;
    if (rep.min_eigenvalue >= -kCertifyTol * scale)
        rep.verdict = Verdict::certified_psd;
    else if (rep.min_eigenvalue < -kViolateTol * scale)
        rep.verdict = Verdict::violated;
    else
        rep.verdict = Verdict::inconclusive;
    return rep;
}

std::vector<GramReport> check_exp_convex(const RealFn& f,
                                         const std::vector<std::vector<double>>& grids) {
    std::vector<GramReport> out;
    out.reserve(grids.size());
    for (const auto& g : grids) out.push_back(gram_report(f, g));
    return out;
}

Verdict aggregate_verdict(const std::vector<GramReport>& reports) {
    Verdict v = Verdict::certified_psd;
    for (const auto& r : reports) {
        if (r.verdict == Verdict::violated) return Verdict::violated;
        if (r.verdict == Verdict::inconclusive) v = Verdict::inconclusive;
    }
    return v;
}

namespace {

GramReport worst_report(const RealFn& f, const std::vector<std::vector<double>>& grids) {
    GramReport worst;
    bool first = true;
    for (const auto& g : grids) {
        GramReport r = gram_report(f, g);
        // tolerance is 1e-9 * scale, so this compares min_eig / scale
        if (first || r.min_eigenvalue / r.tolerance < worst.min_eigenvalue / worst.tolerance) {
            worst = std::move(r);
            first = false;
        }
        if (worst.verdict == Verdict::violated) break;
    }
    return worst;
}

} // namespace

bool ClosureReport::all_certified() const {
    return scaled.verdict == Verdict::certified_psd &&
           sum.verdict == Verdict::certified_psd &&
           product.verdict == Verdict::certified_psd &&
           affine.verdict == Verdict::certified_psd;
}

ClosureReport hadamard_and_sum_checks(const RealFn& f1, const RealFn& f2,
                                      const std::vector<std::vector<double>>& grids,
                                      double c, double a, double b) {
    if (c < 0.0) throw domain_error("hadamard_and_sum_checks: requires c >= 0");
    ClosureReport rep;
    rep.scaled = worst_report([&](double t) { return c * f1(t); }, grids);
    rep.sum = worst_report([&](double t) { return f1(t) + f2(t); }, grids);
    rep.product = worst_report([&](double t) { return f1(t) * f2(t); }, grids);
    rep.affine = worst_report([&](double t) { return f1(a * t + b); }, grids);
    return rep;
}

SqrtCheckResult sqrt_inequality_check(const RealFn& f,
                                      const std::vector<std::pair<double, double>>& pairs) {
    SqrtCheckResult res{true, 0.0};
    for (const auto& [t1, t2] : pairs) {
        const double lhs = f(t1 + t2);
        const double rhs = std::sqrt(f(2.0 * t1) * f(2.0 * t2));
        const double ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? HUGE_VAL : 1.0);
        res.worst_ratio = std::max(res.worst_ratio, ratio);
        if (lhs > rhs * (1.0 + 1e-12)) res.holds = false;
    }
    return res;
}

} // namespace trexp
