#pragma once

#include <optional>

#include "tempus/delta_calculus.hpp"

namespace tempus {

enum class BoundKind {
    gronwall,
    pachpatte1,
    pachpatte2,
    estimate1,
    estimate2,
    dependence1,
    dependence2,
};

const char* to_string(BoundKind kind);

/// A computed smallness constant together with the bound curve it certifies.
/// When the smallness condition fails (constant >= 1) the certificate is
/// returned with valid = false and an empty bound, never thrown.
struct BoundCertificate {
    BoundKind kind;
    double smallness = 0.0;
    bool valid = false;
    std::optional<ScalarGridFn> bound;
};

/// Right-hand side of the comparison lemma:
///   u(a) e_alpha(t, a) + integral_a^t e_alpha(t, sigma(tau)) forcing(tau) dtau,
/// evaluated at every node. e_alpha(t, sigma(tau)) is formed from the
/// quotient e_alpha(t, a) / e_alpha(sigma(tau), a).
ScalarGridFn gronwall_bound(double u_a, const ScalarGridFn& alpha,
                            const ScalarGridFn& forcing);

/// Volterra-Fredholm comparison bound with two-parameter kernels:
///   smallness p = integral_a^b k2(b, s) e_{k1(s,.)}(s, a) ds,
///   bound(t) = c / (1 - p) * e_{k1(t,.)}(t, a) when p < 1.
/// k1, k2 must be nonnegative and nondecreasing in the first argument
/// (spot-checked on sampled node pairs; violation throws PreconditionError).
BoundCertificate pachpatte1(double c, const Kernel2& k1, const Kernel2& k2,
                            double a, double b, GridPtr grid);

/// Nested Volterra bound with a Fredholm coupling:
///   smallness r = integral_a^b h(tau) e_{f+g}(tau, a) dtau,
///   bound(t) = k / (1 - r) * e_{f+g}(t, a) when r < 1.
BoundCertificate pachpatte2(double k, const ScalarGridFn& f, const ScalarGridFn& g,
                            const ScalarGridFn& h, double b);

} // namespace tempus
