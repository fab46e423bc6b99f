#pragma once

#include <vector>

#include "pagefem/integrate.hpp"
#include "pagefem/mesh.hpp"
#include "pagefem/sparse.hpp"

namespace pagefem {

/// Coefficient samples at the quadrature points of every element, nip × ne.
/// Points are mapped through the affine (vertex) geometry.
RealTable coeffs_in_ip(const RealTable& coords, const IndexTable& elems, const Field& coeff,
                       unsigned gqo);

struct Assembled {
    SparseMatrix matrix;
    PageArray local;  // nlb × nlb × ne
};

/// Default quadrature orders: stiffness P1 → 2, P2 → 4; mass P1 → 2, P2 → 4.
unsigned default_gqo(ElementType etype);

/// ∫ c ∇φᵢ·∇φⱼ for the element type of `mesh`. `gqo` 0 selects the default.
Assembled stiffness_matrix(const Mesh& mesh, const Field& coeff, unsigned gqo = 0);

/// ∫ c φᵢ φⱼ.
Assembled mass_matrix(const Mesh& mesh, const Field& coeff, unsigned gqo = 0);

struct AssembledVector {
    std::vector<double> vector;
    RealTable local;  // ne × nlb
};

/// bᵢ = ∫ f φᵢ.
AssembledVector rhs_vector(const Mesh& mesh, const Field& f, unsigned gqo = 0);

/// Field returning one constant for every point.
Field constant_field(double value);

} // namespace pagefem
