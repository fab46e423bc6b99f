#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pagefem/mesh.hpp"
#include "pagefem/page_array.hpp"
#include "pagefem/quadrature.hpp"

namespace pagefem {

/// Field evaluated on batched coordinates: the input holds dim × nip × npages
/// points, the output comp × nip × npages samples (comp 1 or dim).
using Field = std::function<PageArray(const PageArray&)>;

/// Page k column i = Σⱼ shape(j, i)·(node j of page k). `shape` is the
/// nodes × nip table of the geometry basis at the quadrature points.
PageArray map_quadrature_points(const PageArray& coords3D, const Matrix& shape);

/// Σₖ sizesₖ Σᵢ (wᵢ / |ref|) fip(0, i, k). Weights are taken from `rule`,
/// so a rule whose weights sum to the reference measure integrates 1 to
/// Σ sizes. Elements are summed in index order.
double gi(const PageArray& fip, const QuadratureRule& rule, std::span<const double> sizes);

/// Flux form: fip has dim components and each page is dotted with its row of
/// `normals` (npages × dim) before weighting.
double gi(const PageArray& fip, const QuadratureRule& rule, std::span<const double> sizes,
          const RealTable& normals);

double volume_integral(const Mesh& mesh, const Field& field, unsigned gqo);

struct Moments {
    double mass = 0.0;
    std::vector<double> first;   // Mᵢ = ∫ xᵢ ρ
    Matrix second;               // Mᵢⱼ = ∫ xᵢ xⱼ ρ
    std::vector<double> center;  // Mᵢ / m
    double inertia_x1 = 0.0;     // Σ_{j≠1} Mⱼⱼ, about the x₁ axis
};

/// Throws std::domain_error when the mass vanishes.
Moments moments(const Mesh& mesh, const Field& rho, unsigned gqo);

/// ∮ F·n dS over the boundary of a P1 mesh, using a rule of the facet
/// dimension on every boundary face.
double surface_integral(const Mesh& mesh, const Field& field, unsigned gqo);

} // namespace pagefem
