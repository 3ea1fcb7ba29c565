#pragma once

#include <functional>
#include <vector>

#include "tempus/grid_fn.hpp"

namespace tempus {

/// Scalar kernel of two real arguments, k(x, y).
using Kernel2 = std::function<double(double, double)>;

/// Cylinder transformation: log(1 + h z)/h for h > 0, z at h = 0.
/// Throws RegressivityError when 1 + h z <= 0.
double cylinder(double h, double z);

/// Per-link quadrature weights: the delta integral over consecutive nodes
/// (j, j+1) is w_left * f_j + w_right * f_{j+1}. A right-scattered node
/// contributes exactly mu * f_j; a dense link contributes the trapezoid.
struct QuadLink {
    double w_left;
    double w_right;
};

std::vector<QuadLink> quadrature_links(const Grid& grid);

/// Delta integral of f between two grid nodes. For t_hi < t_lo the result
/// is the sign-reversed integral, matching F(s) - F(r).
std::vector<double> delta_integral(const GridFn& f, double t_lo, double t_hi);

/// Index-based form used by the solver loops; [i_lo, i_hi] are node indices.
double delta_integral_scalar(const GridFn& f, std::size_t i_lo, std::size_t i_hi);

/// Prefix integrals F with F(a) = 0, one value per node. Consistent with
/// delta_integral against the window start by construction.
GridFn cumulative_delta_integral(const GridFn& f);

/// Delta derivative at a grid node: exact difference quotient over mu at
/// scattered nodes, first-order forward difference at dense nodes (used for
/// residual diagnostics only). Throws DomainError at the horizon.
std::vector<double> delta_derivative(const GridFn& f, double t);

/// True iff 1 + mu(t) p(t) > 0 at every node.
bool is_positively_regressive(const GridFn& p);

/// Generalized exponential e_p(t, s) for positively regressive p and grid
/// nodes t, s. Computed in log space: the cylinder integrand is accumulated
/// over the grid and exponentiated once.
double exp_fn(const GridFn& p, double t, double s);

/// Whole-curve form: e_p(t_i, a) for every node, O(n).
ScalarGridFn exp_curve(const GridFn& p);

/// Log of exp_curve: the cumulative cylinder integral.
ScalarGridFn log_exp_curve(const GridFn& p);

/// Two-parameter exponential e_{k(x,.)}(t, s): the first argument of the
/// kernel is frozen at x and the slice treated as the coefficient function.
double exp_fn_two_param(const Kernel2& k, double x, GridPtr grid,
                        double t, double s);

/// Diagonal curve D_i = e_{k(t_i,.)}(t_i, a), recomputing the frozen slice
/// per node (O(n^2) total).
ScalarGridFn exp_two_param_diagonal(GridPtr grid, const Kernel2& k);

/// Circle minus: (p (-) q)(t) = (p(t) - q(t)) / (1 + mu(t) q(t)).
/// Requires q positively regressive; satisfies e_{p(-)q} = e_p / e_q.
ScalarGridFn circle_minus(const GridFn& p, const GridFn& q);

} // namespace tempus
