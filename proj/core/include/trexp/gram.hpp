#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace trexp {

using RealFn = std::function<double(double)>;

enum class Verdict { certified_psd, inconclusive, violated };

std::string to_string(Verdict v);

/// Positive-semidefiniteness evidence for the matrix [f(t_r + t_s)].
struct GramReport {
    std::vector<double> grid;
    std::vector<std::vector<double>> gram;
    double min_eigenvalue{};
    Verdict verdict{};
    double tolerance{};
};

/// Symmetric matrix of f(t_r + t_s) over the grid. Grid size capped at 64.
std::vector<std::vector<double>> gram_matrix(const RealFn& f,
                                             const std::vector<double>& grid);

/// Smallest eigenvalue of a real symmetric matrix by cyclic Jacobi sweeps.
double min_eig_sym(std::vector<std::vector<double>> m);

/// Certify one grid; scale = max(1, largest diagonal entry):
/// min_eig >= -1e-9*scale certifies, below -1e-6*scale violates,
/// in between is inconclusive.
GramReport gram_report(const RealFn& f, const std::vector<double>& grid);

std::vector<GramReport> check_exp_convex(const RealFn& f,
                                         const std::vector<std::vector<double>>& grids);

Verdict aggregate_verdict(const std::vector<GramReport>& reports);

/// Closure checks: c*f1 (c >= 0), f1 + f2, f1 * f2, f1(a t + b) certified on
/// the same grids.
struct ClosureReport {
    GramReport scaled;
    GramReport sum;
    GramReport product;
    GramReport affine;
    bool all_certified() const;
};

ClosureReport hadamard_and_sum_checks(const RealFn& f1, const RealFn& f2,
                                      const std::vector<std::vector<double>>& grids,
                                      double c = 2.0, double a = -1.0, double b = 0.3);

/// f(t1 + t2) <= sqrt(f(2 t1) f(2 t2)) within relative slack, per pair.
struct SqrtCheckResult {
    bool holds;
    double worst_ratio; // max f(t1+t2)/sqrt(f(2t1) f(2t2))
};
SqrtCheckResult sqrt_inequality_check(const RealFn& f,
                                      const std::vector<std::pair<double, double>>& pairs);

} // namespace trexp
