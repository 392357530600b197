#include "prab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "prab/errors.hpp"

namespace prab {

GridFn::GridFn(double T, std::vector<double> values) : T_(T), values_(std::move(values)) {
    if (!(T_ > 0.0) || !std::isfinite(T_)) throw DomainError("grid horizon T must be positive");
    if (values_.size() < 2) throw DomainError("a grid needs at least two points");
    for (std::size_t k = 0; k < values_.size(); ++k) {
        if (!std::isfinite(values_[k])) {
            throw DomainError("grid value at node " + std::to_string(k) + " is not finite");
        }
    }
}

GridFn GridFn::zeros(double T, std::size_t n_points) {
    return GridFn(T, std::vector<double>(n_points, 0.0));
}

bool GridFn::same_grid(const GridFn& other) const noexcept {
    return size() == other.size() && T_ == other.T_;
}

GridFn GridFn::every(std::size_t stride) const {
    if (stride == 0 || (size() - 1) % stride != 0) {
        throw DimensionMismatch("grid of " + std::to_string(size()) +
                                " points cannot be strided by " + std::to_string(stride));
    }
    std::vector<double> out;
    out.reserve((size() - 1) / stride + 1);
    for (std::size_t k = 0; k < size(); k += stride) out.push_back(values_[k]);
    return GridFn(T_, std::move(out));
}

double sup_norm(std::span<const double> v) noexcept {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

double sup_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionMismatch("sup_distance: lengths differ");
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace prab
