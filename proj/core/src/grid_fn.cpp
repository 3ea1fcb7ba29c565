#include "tempus/grid_fn.hpp"

#include <algorithm>
#include <cmath>

namespace tempus {

GridFn::GridFn(GridPtr grid, std::size_t dim)
    : grid_(std::move(grid)), dim_(dim), values_(grid_->size() * dim, 0.0) {
    if (dim_ == 0) throw ValidationError("grid function dimension must be >= 1");
}

GridFn::GridFn(GridPtr grid, std::size_t dim, std::vector<double> values)
    : grid_(std::move(grid)), dim_(dim), values_(std::move(values)) {
    if (dim_ == 0) throw ValidationError("grid function dimension must be >= 1");
    if (values_.size() != grid_->size() * dim_) {
        throw ValidationError("grid function value count does not match grid size");
    }
}

GridFn GridFn::scalar(GridPtr grid, const std::function<double(double)>& fn) {
    GridFn out(grid, 1);
    for (std::size_t i = 0; i < grid->size(); ++i) {
        out[i] = fn(grid->t(i));
    }
    return out;
}

GridFn GridFn::constant(GridPtr grid, double value) {
    GridFn out(std::move(grid), 1);
    std::fill(out.values_.begin(), out.values_.end(), value);
    return out;
}

GridFn GridFn::constant(GridPtr grid, std::span<const double> value) {
    GridFn out(std::move(grid), value.size());
    for (std::size_t i = 0; i < out.nodes(); ++i) {
        std::copy(value.begin(), value.end(), out.at(i).begin());
    }
    return out;
}

double GridFn::norm_at(std::size_t node) const {
    double m = 0.0;
    for (double v : at(node)) m = std::max(m, std::abs(v));
    return m;
}

double GridFn::sup_norm() const {
    double m = 0.0;
    for (std::size_t i = 0; i < nodes(); ++i) m = std::max(m, norm_at(i));
    return m;
}

void require_scalar(const GridFn& f, const char* what) {
    if (f.dim() != 1) {
        throw ValidationError(std::string(what) + ": expected a scalar grid function");
    }
}

void require_same_grid(const GridFn& a, const GridFn& b, const char* what) {
    if (!a.same_grid(b)) {
        throw ValidationError(std::string(what) + ": grid mismatch");
    }
}

} // namespace tempus
