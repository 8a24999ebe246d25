#include "trexp/quadrature.hpp"

#include <array>
#include <cmath>

namespace trexp {

namespace {

constexpr int kNodes = 32;
constexpr int kMaxPanels = 1024;

struct GaussRule {
    std::array<double, kNodes> x; // nodes on (-1, 1)
    std::array<double, kNodes> w;
};

// Nodes and weights by Newton iteration on the Legendre recurrence.
GaussRule make_rule() {
    GaussRule rule{};
    const int m = (kNodes + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (kNodes + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < kNodes; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1.0);
            }
            pp = kNodes * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.x[i] = -z;
        rule.x[kNodes - 1 - i] = z;
        rule.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[kNodes - 1 - i] = rule.w[i];
    }
    return rule;
}

const GaussRule& rule() {
    static const GaussRule r = make_rule();
    return r;
}

double composite(const std::function<double(double)>& f, double a, double b,
                 int panels) {
    const GaussRule& r = rule();
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * h;
        const double mid = lo + 0.5 * h;
        double panel_sum = 0.0;
        for (int i = 0; i < kNodes; ++i)
            panel_sum += r.w[i] * f(mid + 0.5 * h * r.x[i]);
        sum += 0.5 * h * panel_sum;
    }
    return sum;
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double rel_tol) {
    if (a == b) return 0.0;
    double prev = composite(f, a, b, 1);
    for (int panels = 2; panels <= kMaxPanels; panels *= 2) {
        const double cur = composite(f, a, b, panels);
        const double scale = std::max(1.0, std::abs(cur));
        if (std::abs(cur - prev) <= rel_tol * scale) return cur;
        prev = cur;
    }
    throw quadrature_error("integrate: refinement stalled before requested tolerance");
}

} // namespace trexp
