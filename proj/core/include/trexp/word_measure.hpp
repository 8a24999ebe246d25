#pragma once

#include "trexp/pauli.hpp"

#include <cstdint>
#include <vector>

namespace trexp {

struct size_guard_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Admissible position set for the tau-factors of a word: strictly
/// increasing p_1..p_m with 1 < p_1, p_j + 1 < p_{j+1}, p_m <= n + m.
struct PositionSet {
    int n{};
    std::vector<int> positions;
};

/// All admissible position sets of length m over words built from n
/// exponential factors; there are binomial(n, m) of them.
/// Guarded brute-force path, n + m <= 40.
std::vector<PositionSet> enumerate_position_sets(int n, int m);

/// Atom location mu = (2p_1 - 2p_2 + ... - 2p_{2l} + n + 2l) / n for an
/// even-length set; throws for odd length.
double atom_location(const PositionSet& ps);

/// Number of admissible position sets of length 2l over n whose atom
/// sits at 1 - 2s/n: binomial(s-1, l-1) * binomial(n-s, l).
/// Exact for the values reachable in double precision.
double gap_count(int n, int l, int s);

struct Atom {
    int s;          // integer grid key, location = 1 - 2s/n
    double location;
    double weight;  // >= 0
};

/// Non-negative atomic measure on [-1, 1], atoms ascending by location.
struct DiscreteMeasure {
    std::vector<Atom> atoms;
    double total_mass() const;
};

/// The word-expansion measure rho_N: unit atom at mu = 1 plus, for each
/// even word length 2l and gap sum s, weight (beta/n)^{2l} * gap_count
/// at mu = 1 - 2s/n. Aggregated on the integer s-grid, O(n^2).
DiscreteMeasure build_rho_N(int n, double beta);

/// diag( sum w e^{t a mu}, sum w e^{-t a mu} ), ascending-location order.
Matrix2 eval_E_N_measure(double t, double alpha, const DiscreteMeasure& m);

/// (1/2)[(e^{t a sigma/n}(I + (b/n)tau))^n + (e^{t a sigma/n}(I - (b/n)tau))^n]
/// by repeated 2x2 multiplication.
Matrix2 eval_E_N_direct(double t, double alpha, double beta, int n);

/// Closed-form limit: diag(e1(alpha t, beta), e2(alpha t, beta)).
Matrix2 eval_E_closed(double t, double alpha, double beta);

struct ConvergenceRow {
    int n;
    double error; // max-abs entrywise gap to the closed form
};

std::vector<ConvergenceRow> convergence_table(double alpha, double beta, double t,
                                              const std::vector<int>& n_list);

} // namespace trexp
