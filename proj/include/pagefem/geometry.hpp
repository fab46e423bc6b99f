#pragma once

#include <vector>

#include "pagefem/mesh.hpp"
#include "pagefem/page_array.hpp"

namespace pagefem {

/// Stacked node coordinates per element plus the edge vectors pointing from
/// the last local node to every other node.
struct ElementGeometry {
    PageArray coords3D;   // dim × d × ne, column j = coords[elems[k][j]]
    PageArray vectors3D;  // dim × (d−1) × ne, column j = node j − last node
};

/// Works for any connectivity table, including boundary faces (dim × dim pages).
ElementGeometry create_coords3D(const RealTable& coords, const IndexTable& elems);
ElementGeometry create_coords3D(const Mesh& mesh);

struct Volumes {
    PageScalars signed_measures;  // det / dim!
    double total = 0.0;           // Σ |measure|
};

/// Requires square vector pages.
Volumes element_volumes(const PageArray& vectors3D);

/// Outward normals of the reference simplex, one column per face; column j
/// belongs to the face opposite local node j under the last-node convention.
Matrix reference_normals(std::size_t dim);

/// Unnormalized outward normals, dim × (dim+1) per element. Columns follow
/// reference_normals.
PageArray element_normals(const PageArray& vectors3D);

/// Unit outward normal of every boundary face, |F_b| × dim.
RealTable boundary_normals(const Mesh& mesh, const BoundaryFaces& faces);

/// Positive element measures from the first dim+1 connectivity columns.
std::vector<double> sizes_of_elements(const RealTable& coords, const IndexTable& elems);

} // namespace pagefem
