#include <doctest.h>

#include "trexp/closed_form.hpp"
#include "trexp/pauli.hpp"
#include "trexp/word_measure.hpp"

#include <cmath>
#include <map>

using namespace trexp;

namespace {

double binom_exact(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= std::min(k, n - k); ++i)
        r = r * (n - std::min(k, n - k) + i) / i;
    return r;
}

// literal word product: N+m letters, tau at the listed positions
Matrix2 word_product(const PositionSet& ps, double t, double alpha, double beta,
                     int sign) {
    const int n = ps.n;
    const int m = static_cast<int>(ps.positions.size());
    const Matrix2 efac = herm_exp(herm_scale(t * alpha / n, pauli_sigma()));
    const Matrix2 tfac = mat_scale(sign * beta / n, pauli_tau().to_matrix());
    Matrix2 w = Matrix2::identity();
    std::size_t next = 0;
    for (int k = 1; k <= n + m; ++k) {
        if (next < ps.positions.size() && ps.positions[next] == k) {
            w = mat_mul(w, tfac);
            ++next;
        } else {
            w = mat_mul(w, efac);
        }
    }
    return w;
}

} // namespace

TEST_CASE("enumerate_position_sets examples") {
    const auto sets = enumerate_position_sets(4, 2);
    REQUIRE(sets.size() == 6);
    const std::vector<std::vector<int>> expect = {{2, 4}, {2, 5}, {2, 6},
                                                  {3, 5}, {3, 6}, {4, 6}};
    std::vector<std::vector<int>> got;
    for (const auto& s : sets) got.push_back(s.positions);
    std::sort(got.begin(), got.end());
    CHECK(got == expect);

    CHECK(enumerate_position_sets(7, 0).size() == 1);
    CHECK(enumerate_position_sets(7, 0)[0].positions.empty());

    const auto packed = enumerate_position_sets(3, 3);
    REQUIRE(packed.size() == 1);
    CHECK(packed[0].positions == std::vector<int>{2, 4, 6});

    CHECK_THROWS_AS(enumerate_position_sets(30, 15), size_guard_error);
}

TEST_CASE("cardinality equals binomial(n, m)") {
    for (int n = 1; n <= 12; ++n)
        for (int m = 0; m <= n; ++m)
            CHECK(enumerate_position_sets(n, m).size() ==
                  static_cast<std::size_t>(binom_exact(n, m)));
}

TEST_CASE("atom_location") {
    CHECK(atom_location({4, {2, 4}}) == doctest::Approx(0.5));
    CHECK(atom_location({4, {2, 6}}) == doctest::Approx(-0.5));
    CHECK(atom_location({9, {}}) == 1.0);
    CHECK_THROWS_AS(atom_location({4, {2}}), domain_error);
}

TEST_CASE("gap_count matches enumeration for all n <= 14") {
    for (int n = 2; n <= 14; ++n) {
        for (int l = 1; 2 * l <= n; ++l) {
            // histogram of gap sums from brute-force enumeration
            std::map<int, int> hist;
            for (const auto& ps : enumerate_position_sets(n, 2 * l)) {
                const double mu = atom_location(ps);
                const int s = static_cast<int>(std::lround((1.0 - mu) * n / 2.0));
                ++hist[s];
            }
            double total = 0.0;
            for (int s = l; s <= n - l; ++s) {
                const double g = gap_count(n, l, s);
                CHECK(g == static_cast<double>(hist[s]));
                total += g;
            }
            CHECK(total == binom_exact(n, 2 * l));
        }
    }
    CHECK(gap_count(4, 1, 1) == 3.0);
    CHECK(gap_count(4, 1, 2) == 2.0);
    CHECK(gap_count(4, 1, 3) == 1.0);
    CHECK_THROWS_AS(gap_count(4, 1, 4), std::out_of_range);
}

TEST_CASE("odd words cancel, even words collapse to one exponential") {
    const double t = 0.8, alpha = 1.3, beta = 0.9;
    for (int n = 2; n <= 8; ++n) {
        for (int m = 1; m <= n; ++m) {
            for (const auto& ps : enumerate_position_sets(n, m)) {
                const Matrix2 wp = word_product(ps, t, alpha, beta, +1);
                const Matrix2 wm = word_product(ps, t, alpha, beta, -1);
                if (m % 2 == 1) {
                    CHECK(max_abs(mat_add(wp, wm)) == 0.0); // exact negation
                } else {
                    CHECK(max_abs(mat_sub(wp, wm)) == 0.0);
                    const double mu = atom_location(ps);
                    const double coef = std::pow(beta / n, m);
                    const Matrix2 expect = mat_scale(
                        coef, herm_exp(herm_scale(t * alpha * mu, pauli_sigma())));
                    CHECK(max_abs(mat_sub(wp, expect)) <
                          1e-14 * std::max(1.0, max_abs(expect)));
                }
            }
        }
    }
}

TEST_CASE("build_rho_N small cases") {
    const auto trivial = build_rho_N(100, 0.0);
    REQUIRE(trivial.atoms.size() == 1);
    CHECK(trivial.atoms[0].location == 1.0);
    CHECK(trivial.atoms[0].weight == 1.0);

    // n=4, beta=1: l=1 contributes {1/2: 3/16, 0: 2/16, -1/2: 1/16},
    // l=2 adds 1/256 at 0, and the unit atom sits at 1.
    const auto m = build_rho_N(4, 1.0);
    REQUIRE(m.atoms.size() == 4);
    CHECK(m.atoms[0].location == doctest::Approx(-0.5));
    CHECK(m.atoms[0].weight == doctest::Approx(1.0 / 16.0));
    CHECK(m.atoms[1].location == doctest::Approx(0.0));
    CHECK(m.atoms[1].weight == doctest::Approx(2.0 / 16.0 + 1.0 / 256.0));
    CHECK(m.atoms[2].location == doctest::Approx(0.5));
    CHECK(m.atoms[2].weight == doctest::Approx(3.0 / 16.0));
    CHECK(m.atoms[3].location == 1.0);
    CHECK(m.atoms[3].weight == 1.0);
    CHECK(m.total_mass() == doctest::Approx(1.0 + 6.0 / 16.0 + 1.0 / 256.0));
    CHECK(m.total_mass() < std::exp(1.0));
}

TEST_CASE("build_rho_N equals full enumeration") {
    const double beta = 1.7;
    for (int n = 2; n <= 12; ++n) {
        std::map<int, double> expect; // s -> weight
        expect[0] = 1.0;
        for (int l = 1; 2 * l <= n; ++l) {
            const double coef = std::pow(beta / n, 2 * l);
            for (const auto& ps : enumerate_position_sets(n, 2 * l)) {
                const int s =
                    static_cast<int>(std::lround((1.0 - atom_location(ps)) * n / 2.0));
                expect[s] += coef;
            }
        }
        const auto m = build_rho_N(n, beta);
        REQUIRE(m.atoms.size() == expect.size());
        for (const auto& a : m.atoms) {
            REQUIRE(expect.count(a.s) == 1);
            CHECK(a.weight == doctest::Approx(expect[a.s]).epsilon(1e-13));
        }
    }
}

TEST_CASE("mass bound and atom range") {
    for (int n : {4, 16, 64, 256}) {
        for (double beta : {0.5, 1.0, 2.0, 4.0}) {
            const auto m = build_rho_N(n, beta);
            CHECK(m.total_mass() < std::exp(beta));
            for (const auto& a : m.atoms) {
                CHECK(a.weight >= 0.0);
                CHECK(a.location <= 1.0);
                CHECK(a.location >= -(1.0 - 2.0 / n) - 1e-15);
            }
        }
    }
}

TEST_CASE("measure route equals direct Lie product route") {
    for (int n : {2, 3, 4, 7, 12, 64, 256}) {
        for (double beta : {0.5, 1.0, 3.0}) {
            const auto m = build_rho_N(n, beta);
            for (double t : {-2.0, 1.0, 4.0}) {
                const Matrix2 via_measure = eval_E_N_measure(t, 1.0, m);
                const Matrix2 direct = eval_E_N_direct(t, 1.0, beta, n);
                const double scale = std::max(1.0, max_abs(direct));
                CHECK(max_abs(mat_sub(via_measure, direct)) < 1e-11 * scale);
                // off-diagonal cancellation in the direct route
                CHECK(std::abs(direct.m12) < 1e-12 * scale);
                CHECK(std::abs(direct.m11.imag()) < 1e-12 * scale);
            }
        }
    }
}

TEST_CASE("eval_E_N special points") {
    const auto m = build_rho_N(8, 1.5);
    const Matrix2 at0 = eval_E_N_measure(0.0, 1.0, m);
    CHECK(at0.m11.real() == doctest::Approx(m.total_mass()).epsilon(1e-14));
    CHECK(at0.m22.real() == doctest::Approx(m.total_mass()).epsilon(1e-14));

    DiscreteMeasure single{{{0, 1.0, 1.0}}};
    const Matrix2 e = eval_E_N_measure(2.0, 1.0, single);
    CHECK(e.m11.real() == doctest::Approx(std::exp(2.0)).epsilon(1e-14));
    CHECK(e.m22.real() == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));

    const Matrix2 b0 = eval_E_N_direct(1.2, 0.7, 0.0, 13);
    const Matrix2 expect = herm_exp(herm_scale(1.2 * 0.7, pauli_sigma()));
    CHECK(max_abs(mat_sub(b0, expect)) < 1e-13 * max_abs(expect));

    const Matrix2 half = eval_E_N_direct(0.0, 1.0, 1.0, 2);
    CHECK(half.m11.real() == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(half.m22.real() == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("convergence table decays at first order") {
    const auto rows = convergence_table(1.0, 1.0, 1.0, {64, 128, 256, 512});
    CHECK(rows.back().error <= 0.01);
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const double ratio = rows[i].error / rows[i + 1].error;
        CHECK(ratio > 1.7);
        CHECK(ratio < 2.3);
    }

    const auto exact_rows = convergence_table(1.0, 0.0, 1.0, {4, 8});
    for (const auto& r : exact_rows) CHECK(r.error <= 1e-13);
}
