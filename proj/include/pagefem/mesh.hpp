#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "pagefem/table.hpp"

namespace pagefem {

enum class ElementType { P1, P2 };

std::string_view to_string(ElementType t);
ElementType parse_element_type(std::string_view s);

/// Number of local nodes of a simplex element in `dim` dimensions.
std::size_t nodes_per_element(std::size_t dim, ElementType t);

/// Simplicial mesh: node coordinates (nn × dim) and connectivity (ne × d).
///
/// P2 rows hold the dim+1 vertices first, then the edge midpoints in the
/// canonical edge order (see canonical_edges). Vertex nodes occupy the index
/// range [0, num_vertices()), midpoints follow. Indices are 0-based.
class Mesh {
public:
    Mesh() = default;
    Mesh(RealTable coords, IndexTable elems, ElementType etype = ElementType::P1);

    std::size_t dim() const noexcept { return coords_.cols(); }
    std::size_t num_nodes() const noexcept { return coords_.rows(); }
    std::size_t num_elems() const noexcept { return elems_.rows(); }
    std::size_t nodes_per_elem() const noexcept { return elems_.cols(); }
    ElementType etype() const noexcept { return etype_; }

    const RealTable& coords() const noexcept { return coords_; }
    const IndexTable& elems() const noexcept { return elems_; }

    /// Number of vertex nodes (all nodes for P1).
    std::size_t num_vertices() const noexcept { return num_vertices_; }

    /// Vertex-only connectivity (first dim+1 columns).
    IndexTable vertex_elems() const;

    /// Coordinates of the vertex nodes only.
    RealTable vertex_coords() const;

    /// The P1 mesh formed by the vertices (identity for P1 meshes).
    Mesh vertex_mesh() const;

private:
    RealTable coords_;
    IndexTable elems_;
    ElementType etype_ = ElementType::P1;
    std::size_t num_vertices_ = 0;
};

/// Local vertex pairs of the simplex edges in the canonical order:
/// 2D (0,1),(1,2),(0,2); 3D (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
std::span<const std::array<std::size_t, 2>> canonical_edges(std::size_t dim);

/// Unique undirected edges of a P1 mesh plus the per-element edge map.
struct EdgeSet {
    std::vector<std::array<Index, 2>> edges;  // (lo, hi) in ascending order
    IndexTable elem_edges;                    // ne × n_edges, canonical order
};
EdgeSet build_edges(const Mesh& mesh);

struct BoundaryFaces {
    IndexTable faces;          // |F_b| × dim vertex indices
    std::vector<Index> owner;  // owning element per face
    std::vector<double> areas; // edge length (2D) or triangle area (3D)
};

/// Facets that belong to exactly one element. Throws MeshError for a facet
/// shared by more than two elements.
BoundaryFaces extract_boundary(const Mesh& mesh);

/// Number of distinct facets (interior and boundary).
std::size_t count_all_faces(const Mesh& mesh);

/// Uniform refinement: each triangle into 4, each tetrahedron into 8 (red
/// refinement, interior octahedron split along midpoint(0,2)–midpoint(1,3)).
/// New nodes are appended in edge order; children keep the parent orientation.
Mesh uniform_refine(const Mesh& mesh);

/// Appends edge-midpoint nodes and extends each row by its midpoints in the
/// canonical edge order.
Mesh augment_p2(const Mesh& mesh);

/// Signed measure of one simplex given its vertex rows (dim+1 rows of dim).
double signed_simplex_measure(const RealTable& coords, std::span<const Index> verts);

/// Swaps vertices so every simplex has positive signed measure. Throws
/// MeshError for a zero-measure element. P1 only.
void orient_positive(const RealTable& coords, IndexTable& elems);

// Generators. Levels count uniform refinements.

/// Unit square [0,1]²: one square split along both diagonals (5 nodes,
/// 4 triangles) refined `level` times. Nodes: (2^L+1)² + 4^L.
Mesh mesh_square(unsigned level);

/// Unit cube [0,1]³ on an n³ grid with n = 2^level, each subcube split into
/// 6 tetrahedra around its main diagonal. Nodes (n+1)³, elements 6n³.
Mesh mesh_cube(unsigned level);

struct SphereParams {
    unsigned level = 1;
    double r = 1.0;
};

/// Ball of radius r: the cube [-1,1]³ with 2^(level+1) segments per edge,
/// subcubes split into 6 tetrahedra around the diagonal pointing away from
/// the origin, then every cube shell mapped onto a sphere with the
/// equal-angle cube-to-sphere map. Level 1 gives 384 elements on 125 nodes.
Mesh mesh_sphere(const SphereParams& params);

struct TorusParams {
    unsigned level = 0;
    double R = 1.0;
    double r = 0.25;
};

/// Solid torus around the x₂ axis, x = ((R+ρcos v)cos u, ρ sin v, (R+ρcos v)sin u).
/// The cross-section is a (2^level+1)² grid mapped to the disk of radius r
/// with the equal-angle square-to-disk map; it is swept over
/// 4·max(4, round(π·2^level)) slices and each prism is split into three
/// tetrahedra. Level 0 gives 96 elements on 64 nodes.
Mesh mesh_torus(const TorusParams& params);

/// L-shape (0,1)² minus [1/4,1)²: seven squares of side 1/4 split along both
/// diagonals (28 triangles), refined `level` times. Level 1: 112 triangles,
/// 73 vertices, 257 P2 nodes.
Mesh mesh_lshape(unsigned level);

/// Text format: `dim nn ne etype`, nn coordinate lines, ne connectivity
/// lines with 1-based node indices.
void write_mesh(std::ostream& os, const Mesh& mesh);
Mesh read_mesh(std::istream& is);

} // namespace pagefem
