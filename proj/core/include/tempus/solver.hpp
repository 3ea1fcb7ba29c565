#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>

#include "tempus/delta_calculus.hpp"

namespace tempus {

using VecView = std::span<const double>;
using VecOut = std::span<double>;

/// Outer kernel f(t, u, v, w) writing its R^d value into out.
using FKernel = std::function<void(double t, VecView u, VecView v, VecView w, VecOut out)>;

/// Inner kernels h(t, s, x) and g(t, s, x).
using InnerKernel = std::function<void(double t, double s, VecView x, VecOut out)>;

enum class ProblemKind { integral, integrodynamic };

/// Declared Lipschitz data for the outer and inner kernels.
struct LipschitzData {
    double M = 0.0;
    double L = 0.0;
    double N = 0.0;
    double gamma = 2.0;

    double rate() const { return M * (1.0 + 1.0 / gamma); }
};

/// One Volterra-Fredholm problem:
///   integral:        x(t) = f(t, x(t), V x(t), W x(t))
///   integrodynamic:  x(t) = x(a) + cumulative integral of f(., x, Vx, Wx)
/// with Vx(t) the running integral of h over [a, t] and Wx(t) the window
/// integral of g over [a, b]. Null h or g act as identically zero.
struct Problem {
    ProblemKind kind = ProblemKind::integral;
    std::size_t dim = 1;
    FKernel f;
    InnerKernel h;
    InnerKernel g;
    double a = 0.0;
    double b = 1.0;
    double horizon = 1.0;
    std::vector<double> x_a;
    std::optional<LipschitzData> lipschitz;
};

/// Weight and rate data for one Picard run. beta_exact marks whether beta
/// solves the implicit weight equation; when that equation has no root the
/// weight falls back to 1 and only the declared rate certifies the stop rule.
struct ContractionParams {
    double M = 0.0;
    double L = 0.0;
    double N = 0.0;
    double gamma = 2.0;
    double beta = 1.0;
    double rate = 0.0;
    bool beta_exact = false;

    static ContractionParams compute(const LipschitzData& data, const Grid& grid, double b);
};

struct Solution {
    GridFn x;
    std::size_t iterations = 0;
    double final_norm_delta = 0.0;
    std::vector<double> empirical_rates;
    double beta_used = 1.0;
    double residual_max = 0.0;
    bool via_picard = true;
};

/// Root of beta = gamma (L + N e_beta(b, a)), found by scanning
/// psi(beta) = beta - gamma (L + N e_beta(b, a)) for a sign change and
/// bisecting. Residual <= 1e-10 max(1, beta). Throws BetaUnsolvableError
/// (with scan diagnostics) when no sign change exists below beta_max,
/// including the degenerate case L = N = 0.
double solve_beta(double gamma, double L, double N, const Grid& grid, double b,
                  double beta_max = 1e3);

/// Weighted norm sup_t ||x(t)|| / e_beta(t, a).
double weighted_norm(const GridFn& x, double beta);
double weighted_norm(const GridFn& x, const ScalarGridFn& weight_curve);

/// One application of the solution operator of the integral equation.
GridFn apply_F_integral(const Problem& p, const GridFn& x);

/// One application of the solution operator of the integro-dynamic equation.
GridFn apply_F_integrodynamic(const Problem& p, const GridFn& x);

/// Dispatches on p.kind.
GridFn apply_F(const Problem& p, const GridFn& x);

/// ok iff M (1 + 1/gamma) < 1; margin is 1 minus the rate.
std::pair<bool, double> verify_contraction(double M, double gamma);

/// Weighted norm of the zero-input evaluation f(t, 0, Vh0, Wg0).
double finiteness_A1(const Problem& p, double beta, GridPtr grid);

/// Weighted norm of the cumulative integral of the zero-input evaluation.
double finiteness_A2(const Problem& p, double beta, GridPtr grid);

/// Picard iteration from the zero function (integral kind) or the constant
/// initial value (integro-dynamic kind), stopping when the a-posteriori
/// contraction estimate certifies a beta-norm error below tol.
Solution picard_solve(const Problem& p, const ContractionParams& params,
                      GridPtr grid, double tol, std::size_t max_iter);

/// Direct solve on purely discrete grids: the Volterra part is a strictly
/// lower-triangular forward substitution; the Fredholm coupling and any
/// dependence of f on x(t) itself are resolved by fixed-point sweeps run to
/// machine precision. Independent of the Picard path.
GridFn solve_discrete_exact(const Problem& p, GridPtr grid,
                            std::size_t max_sweeps = 500);

/// Route selection: Picard when declared data gives rate < 1, the exact
/// discrete route otherwise (purely discrete grids only).
Solution solve_problem(const Problem& p, GridPtr grid, double tol,
                       std::size_t max_iter);

/// One randomized finite-difference spot check of declared Lipschitz data.
struct LipschitzWarning {
    std::string kernel;
    double t = 0.0;
    double observed = 0.0;
    double declared = 0.0;
};

std::vector<LipschitzWarning> spot_check_lipschitz(const Problem& p,
                                                   const LipschitzData& data,
                                                   GridPtr grid,
                                                   unsigned seed = 2013,
                                                   std::size_t samples = 64);

} // namespace tempus
