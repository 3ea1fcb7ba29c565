#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tempus/timescale.hpp"

namespace tempus {

/// Vector-valued samples indexed by grid nodes; the numerical stand-in for
/// rd-continuous functions. Values live in R^d, stored node-major.
class GridFn {
public:
    GridFn(GridPtr grid, std::size_t dim);
    GridFn(GridPtr grid, std::size_t dim, std::vector<double> values);

    /// Scalar function sampled from a callable t -> double.
    static GridFn scalar(GridPtr grid, const std::function<double(double)>& fn);

    /// Scalar constant function.
    static GridFn constant(GridPtr grid, double value);

    /// Vector constant function.
    static GridFn constant(GridPtr grid, std::span<const double> value);

    const GridPtr& grid() const { return grid_; }
    std::size_t dim() const { return dim_; }
    std::size_t nodes() const { return grid_->size(); }

    std::span<const double> at(std::size_t node) const {
        return {values_.data() + node * dim_, dim_};
    }
    std::span<double> at(std::size_t node) {
        return {values_.data() + node * dim_, dim_};
    }

    /// Scalar access; requires dim() == 1.
    double operator[](std::size_t node) const { return values_[node * dim_]; }
    double& operator[](std::size_t node) { return values_[node * dim_]; }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    /// Max-norm of the value at one node.
    double norm_at(std::size_t node) const;

    /// sup over nodes of the nodewise max-norm.
    double sup_norm() const;

    bool same_grid(const GridFn& other) const { return grid_ == other.grid_; }

private:
    GridPtr grid_;
    std::size_t dim_;
    std::vector<double> values_;
};

/// Scalar-valued grid function (d = 1). Operations that require scalars
/// check the dimension at runtime.
using ScalarGridFn = GridFn;

/// Throws ValidationError unless f is scalar.
void require_scalar(const GridFn& f, const char* what);

/// Throws ValidationError unless both functions share one grid.
void require_same_grid(const GridFn& a, const GridFn& b, const char* what);

} // namespace tempus
