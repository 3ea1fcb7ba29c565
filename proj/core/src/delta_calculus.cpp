#include "tempus/delta_calculus.hpp"

#include <cmath>
#include <string>

namespace tempus {

namespace {

void require_node_value_finite(double v, const char* what) {
    if (!std::isfinite(v)) {
        throw EvalError(std::string(what) + ": non-finite value");
    }
}

/// Accumulates the cylinder integrand of p over links [0, n-1): at a
/// scattered link the exact contribution is log1p(mu p); dense links get
/// the trapezoid of p itself.
std::vector<double> cumulative_log_exponent(const GridFn& p) {
    require_scalar(p, "exponential");
    const Grid& g = *p.grid();
    std::vector<double> log_prefix(g.size(), 0.0);
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < g.size(); ++j) {
        double mu = g.mu(j);
        if (mu > 0.0) {
            double arg = mu * p[j];
            if (1.0 + arg <= 0.0) {
                throw RegressivityError("1 + mu*p <= 0 at t = " + std::to_string(g.t(j)));
            }
            acc += std::log1p(arg);
        } else {
            double dt = g.t(j + 1) - g.t(j);
            acc += 0.5 * dt * (p[j] + p[j + 1]);
        }
        log_prefix[j + 1] = acc;
    }
    return log_prefix;
}

void check_regressive(const GridFn& p) {
    if (!is_positively_regressive(p)) {
        throw RegressivityError("coefficient function is not positively regressive");
    }
}

} // namespace

double cylinder(double h, double z) {
    if (h == 0.0) return z;
    double arg = h * z;
    if (1.0 + arg <= 0.0) {
        throw RegressivityError("cylinder transform needs 1 + h*z > 0 (h = " +
                                std::to_string(h) + ", z = " + std::to_string(z) + ")");
    }
    return std::log1p(arg) / h;
}

std::vector<QuadLink> quadrature_links(const Grid& grid) {
    std::vector<QuadLink> links(grid.size() - 1);
    for (std::size_t j = 0; j + 1 < grid.size(); ++j) {
        double mu = grid.mu(j);
        if (mu > 0.0) {
            links[j] = {mu, 0.0};
        } else {
            double half = 0.5 * (grid.t(j + 1) - grid.t(j));
            links[j] = {half, half};
        }
    }
    return links;
}

std::vector<double> delta_integral(const GridFn& f, double t_lo, double t_hi) {
    const Grid& g = *f.grid();
    bool reversed = t_hi < t_lo;
    std::size_t i = g.index_of(reversed ? t_hi : t_lo);
    std::size_t j = g.index_of(reversed ? t_lo : t_hi);

    auto links = quadrature_links(g);
    std::vector<double> acc(f.dim(), 0.0);
    for (std::size_t k = i; k < j; ++k) {
        auto left = f.at(k);
        auto right = f.at(k + 1);
        for (std::size_t c = 0; c < f.dim(); ++c) {
            acc[c] += links[k].w_left * left[c] + links[k].w_right * right[c];
        }
    }
    if (reversed) {
        for (double& v : acc) v = -v;
    }
    return acc;
}

double delta_integral_scalar(const GridFn& f, std::size_t i_lo, std::size_t i_hi) {
    require_scalar(f, "delta_integral_scalar");
    const Grid& g = *f.grid();
    auto links = quadrature_links(g);
    double acc = 0.0;
    for (std::size_t k = i_lo; k < i_hi; ++k) {
        acc += links[k].w_left * f[k] + links[k].w_right * f[k + 1];
    }
    return acc;
}

GridFn cumulative_delta_integral(const GridFn& f) {
    const Grid& g = *f.grid();
    auto links = quadrature_links(g);
    GridFn out(f.grid(), f.dim());
    std::vector<double> acc(f.dim(), 0.0);
    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
        auto left = f.at(k);
        auto right = f.at(k + 1);
        for (std::size_t c = 0; c < f.dim(); ++c) {
            acc[c] += links[k].w_left * left[c] + links[k].w_right * right[c];
        }
        std::copy(acc.begin(), acc.end(), out.at(k + 1).begin());
    }
    return out;
}

std::vector<double> delta_derivative(const GridFn& f, double t) {
    const Grid& g = *f.grid();
    std::size_t i = g.index_of(t);
    if (i + 1 >= g.size()) {
        throw DomainError("delta_derivative: no right neighborhood at the horizon");
    }
    double step = g.mu(i) > 0.0 ? g.mu(i) : g.t(i + 1) - g.t(i);
    std::vector<double> out(f.dim());
    auto cur = f.at(i);
    auto next = f.at(i + 1);
    for (std::size_t c = 0; c < f.dim(); ++c) {
        out[c] = (next[c] - cur[c]) / step;
    }
    return out;
}

bool is_positively_regressive(const GridFn& p) {
    require_scalar(p, "is_positively_regressive");
    const Grid& g = *p.grid();
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (1.0 + g.mu(i) * p[i] <= 0.0) return false;
    }
    return true;
}

double exp_fn(const GridFn& p, double t, double s) {
    check_regressive(p);
    const Grid& g = *p.grid();
    auto log_prefix = cumulative_log_exponent(p);
    double lt = log_prefix[g.index_of(t)];
    double ls = log_prefix[g.index_of(s)];
    double v = std::exp(lt - ls);
    require_node_value_finite(v, "exp_fn");
    return v;
}

ScalarGridFn exp_curve(const GridFn& p) {
    check_regressive(p);
    auto log_prefix = cumulative_log_exponent(p);
    for (double& v : log_prefix) v = std::exp(v);
    return GridFn(p.grid(), 1, std::move(log_prefix));
}

ScalarGridFn log_exp_curve(const GridFn& p) {
    check_regressive(p);
    return GridFn(p.grid(), 1, cumulative_log_exponent(p));
}

double exp_fn_two_param(const Kernel2& k, double x, GridPtr grid,
                        double t, double s) {
    GridFn slice = GridFn::scalar(std::move(grid), [&](double tau) { return k(x, tau); });
    return exp_fn(slice, t, s);
}

ScalarGridFn exp_two_param_diagonal(GridPtr grid, const Kernel2& k) {
    const Grid& g = *grid;
    auto links = quadrature_links(g);
    GridFn out(grid, 1);
    out[0] = 1.0;
    for (std::size_t i = 1; i < g.size(); ++i) {
        double x = g.t(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < i; ++j) {
            double mu = g.mu(j);
            if (mu > 0.0) {
                double arg = mu * k(x, g.t(j));
                if (1.0 + arg <= 0.0) {
                    throw RegressivityError("frozen kernel slice not positively regressive at t = " +
                                            std::to_string(g.t(j)));
                }
                acc += std::log1p(arg);
            } else {
                acc += links[j].w_left * k(x, g.t(j)) + links[j].w_right * k(x, g.t(j + 1));
            }
        }
        double v = std::exp(acc);
        require_node_value_finite(v, "exp_two_param_diagonal");
        out[i] = v;
    }
    return out;
}

ScalarGridFn circle_minus(const GridFn& p, const GridFn& q) {
    require_scalar(p, "circle_minus");
    require_scalar(q, "circle_minus");
    require_same_grid(p, q, "circle_minus");
    check_regressive(q);
    const Grid& g = *p.grid();
    GridFn out(p.grid(), 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        out[i] = (p[i] - q[i]) / (1.0 + g.mu(i) * q[i]);
    }
    return out;
}

} // namespace tempus
