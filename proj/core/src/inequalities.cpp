#include "tempus/inequalities.hpp"

#include <cmath>
#include <string>

namespace tempus {

namespace {

void check_nonnegative(double c, const char* what) {
    if (!(c >= 0.0)) {
        throw ValidationError(std::string(what) + " must be nonnegative");
    }
}

void check_nonnegative(const GridFn& f, const char* what) {
    for (std::size_t i = 0; i < f.nodes(); ++i) {
        if (!(f[i] >= 0.0)) {
            throw ValidationError(std::string(what) + " must be nonnegative at every node");
        }
    }
}

/// The hypothesis requires k(t, s) nondecreasing in t. Checks sampled
/// (t, t') node pairs against sampled s nodes; a violation invalidates the
/// whole certificate, so this is a hard error.
void spot_check_monotone_first_arg(const Kernel2& k, const Grid& g, const char* name) {
    const std::size_t n = g.size();
    const std::size_t samples = std::min<std::size_t>(n, 24);
    auto pick = [&](std::size_t i) {
        return g.t(i * (n - 1) / (samples > 1 ? samples - 1 : 1));
    };
    for (std::size_t a = 0; a + 1 < samples; ++a) {
        double t0 = pick(a);
        double t1 = pick(a + 1);
        for (std::size_t b = 0; b < samples; ++b) {
            double s = pick(b);
            double lo = k(t0, s);
            double hi = k(t1, s);
            if (lo < 0.0 || hi < 0.0) {
                throw PreconditionError(std::string(name) + " must be nonnegative");
            }
            if (lo > hi + 1e-12 * (1.0 + std::abs(hi))) {
                throw PreconditionError(std::string(name) +
                                        " is not nondecreasing in its first argument near t = " +
                                        std::to_string(t0));
            }
        }
    }
}

} // namespace

const char* to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::gronwall: return "gronwall";
        case BoundKind::pachpatte1: return "pachpatte1";
        case BoundKind::pachpatte2: return "pachpatte2";
        case BoundKind::estimate1: return "estimate1";
        case BoundKind::estimate2: return "estimate2";
        case BoundKind::dependence1: return "dependence1";
        case BoundKind::dependence2: return "dependence2";
    }
    return "unknown";
}

ScalarGridFn gronwall_bound(double u_a, const ScalarGridFn& alpha,
                            const ScalarGridFn& forcing) {
    require_scalar(alpha, "gronwall_bound");
    require_scalar(forcing, "gronwall_bound");
    require_same_grid(alpha, forcing, "gronwall_bound");

    const Grid& g = *alpha.grid();
    ScalarGridFn e_alpha = exp_curve(alpha);

    // e_alpha(t, sigma(tau)) = e_alpha(t, a) / e_alpha(sigma(tau), a), so the
    // integrand with the t-factor pulled out is forcing(tau) / e_alpha(sigma(tau), a).
    GridFn integrand(alpha.grid(), 1);
    for (std::size_t j = 0; j < g.size(); ++j) {
        std::size_t sigma_idx = (g.mu(j) > 0.0 && j + 1 < g.size()) ? j + 1 : j;
        integrand[j] = forcing[j] / e_alpha[sigma_idx];
    }
    GridFn prefix = cumulative_delta_integral(integrand);

    GridFn out(alpha.grid(), 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        out[i] = e_alpha[i] * (u_a + prefix[i]);
    }
    return out;
}

BoundCertificate pachpatte1(double c, const Kernel2& k1, const Kernel2& k2,
                            double a, double b, GridPtr grid) {
    check_nonnegative(c, "constant c");
    const Grid& g = *grid;
    if (std::abs(g.a() - a) > kPointTolerance) {
        throw DomainError("pachpatte1: a must be the grid window start");
    }
    std::size_t b_idx = g.index_of(b);
    if (b_idx == 0) {
        throw ValidationError("pachpatte1: b must lie strictly after a");
    }
    spot_check_monotone_first_arg(k1, g, "k1");
    spot_check_monotone_first_arg(k2, g, "k2");

    // Diagonal curve e_{k1(s,.)}(s, a); its restriction to [a, b] feeds the
    // smallness integral with k2 frozen at first argument b.
    ScalarGridFn diag = exp_two_param_diagonal(grid, k1);
    GridFn smallness_integrand(grid, 1);
    for (std::size_t j = 0; j <= b_idx; ++j) {
        smallness_integrand[j] = k2(b, g.t(j)) * diag[j];
    }
    double p = delta_integral_scalar(smallness_integrand, 0, b_idx);

    BoundCertificate cert;
    cert.kind = BoundKind::pachpatte1;
    cert.smallness = p;
    cert.valid = p < 1.0;
    if (cert.valid) {
        GridFn bound(grid, 1);
        double factor = c / (1.0 - p);
        for (std::size_t i = 0; i < g.size(); ++i) {
            bound[i] = factor * diag[i];
        }
        cert.bound = std::move(bound);
    }
    return cert;
}

BoundCertificate pachpatte2(double k, const ScalarGridFn& f, const ScalarGridFn& g,
                            const ScalarGridFn& h, double b) {
    check_nonnegative(k, "constant k");
    require_scalar(f, "pachpatte2");
    require_same_grid(f, g, "pachpatte2");
    require_same_grid(f, h, "pachpatte2");
    check_nonnegative(f, "f");
    check_nonnegative(g, "g");
    check_nonnegative(h, "h");

    const Grid& grid = *f.grid();
    std::size_t b_idx = grid.index_of(b);

    GridFn sum(f.grid(), 1);
    for (std::size_t i = 0; i < grid.size(); ++i) sum[i] = f[i] + g[i];
    ScalarGridFn e_fg = exp_curve(sum);

    GridFn smallness_integrand(f.grid(), 1);
    for (std::size_t j = 0; j < grid.size(); ++j) {
        smallness_integrand[j] = h[j] * e_fg[j];
    }
    double r = delta_integral_scalar(smallness_integrand, 0, b_idx);

    BoundCertificate cert;
    cert.kind = BoundKind::pachpatte2;
    cert.smallness = r;
    cert.valid = r < 1.0;
    if (cert.valid) {
        GridFn bound(f.grid(), 1);
        double factor = k / (1.0 - r);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            bound[i] = factor * e_fg[i];
        }
        cert.bound = std::move(bound);
    }
    return cert;
}

} // namespace tempus
