#pragma once

#include <vector>

#include "pagefem/mesh.hpp"
#include "pagefem/page_array.hpp"

namespace pagefem {

/// Shape function values, nlb × nip, for reference points given as columns
/// of a dim × nip matrix (dim 1, 2 or 3; P2 needs dim ≥ 2).
///
/// Local nodes are the vertices 0, e₁, …, e_dim followed, for P2, by the edge
/// midpoints in canonical_edges order. Each column sums to one.
Matrix shapefun(const Matrix& points, ElementType etype);

/// Reference gradients: page i is the dim × nlb derivative table at point i.
PageArray shapeder(const Matrix& points, ElementType etype);

/// Reference node coordinates of an element type, dim × nlb.
Matrix reference_nodes(std::size_t dim, ElementType etype);

/// Global derivatives of the shape functions at every quadrature point of
/// every element. Entry i of each vector refers to quadrature point i.
struct GlobalDerivs {
    std::vector<PageArray> dphi;   // dim × nlb × ne
    std::vector<PageArray> jac;    // dim × dim × ne, J = dshape · coordsᵀ
    RealTable detj;                // nip × ne, |det J|
};

/// coords3D holds dim × nlb pages. A singular Jacobian raises
/// SingularPageError carrying the element index.
GlobalDerivs phider(const PageArray& coords3D, const Matrix& ip, ElementType etype);

} // namespace pagefem
