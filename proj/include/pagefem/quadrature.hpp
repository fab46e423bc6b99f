#pragma once

#include <cstddef>
#include <vector>

#include "pagefem/table.hpp"

namespace pagefem {

/// Symmetric rule on the reference simplex with vertices 0, e₁, …, e_dim.
/// Weights sum to the reference measure (1, 1/2 or 1/6).
struct QuadratureRule {
    std::size_t dim = 0;
    unsigned order = 0;
    Matrix ip;              // dim × nip
    std::vector<double> w;  // nip

    std::size_t size() const noexcept { return w.size(); }
};

/// Measure of the reference simplex in `dim` dimensions: 1/dim!.
double reference_measure(std::size_t dim);

/// Rules exact up to total degree `order` ∈ {1,…,4}, dim ∈ {1,2,3}.
/// 1D: Gauss–Legendre on [0,1]. 2D: centroid, 3-point, Strang–Fix 4-point
/// and the 6-point Dunavant rule. 3D: centroid, 4-point, 5-point (negative
/// centroid weight) and the 11-point Keast rule (negative centroid weight).
QuadratureRule gauss_points(unsigned order, std::size_t dim);

} // namespace pagefem
