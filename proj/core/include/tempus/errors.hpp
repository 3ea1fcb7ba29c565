#pragma once

#include <stdexcept>
#include <string>

namespace tempus {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input data (bad segment lists, mismatched grids, bad arguments).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// A point or node argument lies outside the domain it must belong to.
class DomainError : public Error {
public:
    using Error::Error;
};

/// 1 + mu(t) p(t) <= 0 somewhere: the coefficient is not positively regressive.
class RegressivityError : public Error {
public:
    using Error::Error;
};

/// A declared hypothesis fails a runtime check (contraction rate >= 1,
/// monotonicity spot-check failure, invalid estimate constants).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Kernel or expression evaluation produced a domain violation or a
/// non-finite value.
class EvalError : public Error {
public:
    using Error::Error;
};

/// An iterative procedure exhausted its budget before reaching tolerance.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last_increment)
        : Error(what), last_increment_(last_increment) {}
    explicit ConvergenceError(const std::string& what) : Error(what) {}

    double last_increment() const { return last_increment_; }

private:
    double last_increment_ = 0.0;
};

/// The weight equation beta = gamma (L + N e_beta(b,a)) has no root in the
/// scanned range. Carries the scan diagnostics.
class BetaUnsolvableError : public Error {
public:
    BetaUnsolvableError(const std::string& what, double beta_max,
                        double psi_at_low, double psi_at_high)
        : Error(what), beta_max_(beta_max),
          psi_at_low_(psi_at_low), psi_at_high_(psi_at_high) {}

    double beta_max() const { return beta_max_; }
    double psi_at_low() const { return psi_at_low_; }
    double psi_at_high() const { return psi_at_high_; }

private:
    double beta_max_;
    double psi_at_low_;
    double psi_at_high_;
};

/// Config file problems: syntax, missing keys, inconsistent sections.
/// The message carries the offending key path or line.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Expression text could not be parsed. Carries the byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

} // namespace tempus
