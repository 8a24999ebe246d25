#include "trexp/word_measure.hpp"

#include "trexp/closed_form.hpp"

#include <algorithm>
#include <cmath>

namespace trexp {

std::vector<PositionSet> enumerate_position_sets(int n, int m) {
    if (n < 1 || m < 0 || m > n)
        throw domain_error("enumerate_position_sets: requires 0 <= m <= n, n >= 1");
    if (n + m > 40)
        throw size_guard_error("enumerate_position_sets: n + m exceeds brute-force guard");

    std::vector<PositionSet> out;
    std::vector<int> cur;
    cur.reserve(m);
    // positions: 1 < p_1, p_j + 1 < p_{j+1}, p_m <= n + m
    auto rec = [&](auto&& self, int next_min) -> void {
        const int j = static_cast<int>(cur.size());
        if (j == m) {
            out.push_back({n, cur});
            return;
        }
        // remaining positions j+1..m each need a gap of 2
        const int hi = n + m - 2 * (m - j - 1);
        for (int p = next_min; p <= hi; ++p) {
            cur.push_back(p);
            self(self, p + 2);
            cur.pop_back();
        }
    };
    rec(rec, 2);
    return out;
}

double atom_location(const PositionSet& ps) {
    if (ps.positions.size() % 2 != 0)
        throw domain_error("atom_location: position set has odd length");
    // mu = 1 - (2/n) * sum of inner gaps (p_{2j} - p_{2j-1} - 1)
    long long s = 0;
    for (std::size_t j = 0; j + 1 < ps.positions.size(); j += 2)
        s += ps.positions[j + 1] - ps.positions[j] - 1;
    return 1.0 - 2.0 * static_cast<double>(s) / ps.n;
}

namespace {

// binomial(n, k) in floating point, exact for results below 2^53
double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

double gap_count(int n, int l, int s) {
    if (l < 1 || 2 * l > n)
        throw domain_error("gap_count: requires 1 <= l <= n/2");
    if (s < l || s > n - l)
        throw std::out_of_range("gap_count: s outside [l, n-l]");
    return binom(s - 1, l - 1) * binom(n - s, l);
}

double DiscreteMeasure::total_mass() const {
    double m = 0.0;
    for (const auto& a : atoms) m += a.weight;
    return m;
}

DiscreteMeasure build_rho_N(int n, double beta) {
    if (n < 2) throw domain_error("build_rho_N: requires n >= 2");
    if (beta < 0.0 || !is_finite(beta))
        throw domain_error("build_rho_N: requires finite beta >= 0");

    // weight_by_s[s] accumulates mass at mu = 1 - 2s/n; s = 0 is the unit atom.
    std::vector<double> weight_by_s(n, 0.0);
    weight_by_s[0] = 1.0;

    if (beta > 0.0) {
        const double q = (beta / n) * (beta / n);
        for (int s = 1; s <= n - 1; ++s) {
            // w(l, s) = (beta/n)^{2l} binom(s-1, l-1) binom(n-s, l), built by the
            // ratio recurrence so no binomial is ever materialized on its own
            double w = q * (n - s); // l = 1
            double sum = w;
            const int lmax = std::min(s, n - s);
            for (int l = 1; l < lmax; ++l) {
                w *= q * (static_cast<double>(s - l) / l) *
                     (static_cast<double>(n - s - l) / (l + 1));
                if (w == 0.0) break;
                sum += w;
            }
            weight_by_s[s] = sum;
        }
    }

    DiscreteMeasure out;
    out.atoms.reserve(n);
    // ascending location means descending s
    for (int s = n - 1; s >= 0; --s) {
        if (weight_by_s[s] == 0.0 && s != 0) continue;
        out.atoms.push_back({s, 1.0 - 2.0 * s / n, weight_by_s[s]});
    }
    return out;
}

Matrix2 eval_E_N_measure(double t, double alpha, const DiscreteMeasure& m) {
    if (!is_finite(t) || !is_finite(alpha))
        throw domain_error("eval_E_N_measure: non-finite argument");
    double d1 = 0.0, d2 = 0.0;
    for (const auto& a : m.atoms) {
        d1 += a.weight * std::exp(t * alpha * a.location);
        d2 += a.weight * std::exp(-t * alpha * a.location);
    }
    return {d1, 0.0, 0.0, d2};
}

Matrix2 eval_E_N_direct(double t, double alpha, double beta, int n) {
    if (n < 1) throw domain_error("eval_E_N_direct: requires n >= 1");
    const Matrix2 e = herm_exp(herm_scale(t * alpha / n, pauli_sigma()));
    const Matrix2 tp = mat_add(Matrix2::identity(),
                               mat_scale(beta / n, pauli_tau().to_matrix()));
    const Matrix2 tm = mat_sub(Matrix2::identity(),
                               mat_scale(beta / n, pauli_tau().to_matrix()));
    const Matrix2 fp = mat_mul(e, tp);
    const Matrix2 fm = mat_mul(e, tm);
    Matrix2 pp = fp, pm = fm;
    for (int k = 1; k < n; ++k) {
        pp = mat_mul(pp, fp);
        pm = mat_mul(pm, fm);
    }
    return mat_scale(0.5, mat_add(pp, pm));
}

Matrix2 eval_E_closed(double t, double alpha, double beta) {
    const double u = alpha * t;
    return {e1(u, beta), 0.0, 0.0, e2(u, beta)};
}

std::vector<ConvergenceRow> convergence_table(double alpha, double beta, double t,
                                              const std::vector<int>& n_list) {
    std::vector<ConvergenceRow> rows;
    rows.reserve(n_list.size());
    const Matrix2 limit = eval_E_closed(t, alpha, beta);
    for (int n : n_list) {
        const Matrix2 approx = eval_E_N_direct(t, alpha, beta, n);
        rows.push_back({n, max_abs(mat_sub(approx, limit))});
    }
    return rows;
}

} // namespace trexp
