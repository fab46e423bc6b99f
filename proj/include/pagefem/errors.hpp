#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pagefem {

/// Operand shapes do not agree. The message names the offending axis.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A page (or element Jacobian) is singular within the documented threshold.
class SingularPageError : public std::runtime_error {
public:
    SingularPageError(std::size_t page, double det_magnitude);

    std::size_t page() const noexcept { return page_; }
    double det_magnitude() const noexcept { return det_; }

private:
    std::size_t page_;
    double det_;
};

/// Invalid mesh data: out-of-range indices, non-manifold facets, degenerate cells.
class MeshError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative solver stopped before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(std::size_t iterations, double residual);

    std::size_t iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    std::size_t iterations_;
    double residual_;
};

} // namespace pagefem
