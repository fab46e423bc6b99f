#include "pagefem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

namespace pagefem {

std::string_view to_string(ElementType t) { return t == ElementType::P1 ? "P1" : "P2"; }

ElementType parse_element_type(std::string_view s) {
    if (s == "P1") return ElementType::P1;
    if (s == "P2") return ElementType::P2;
    throw std::invalid_argument("unknown element type '" + std::string(s) + "'");
}

std::size_t nodes_per_element(std::size_t dim, ElementType t) {
    const std::size_t v = dim + 1;
    return t == ElementType::P1 ? v : v + v * (v - 1) / 2;
}

Mesh::Mesh(RealTable coords, IndexTable elems, ElementType etype)
    : coords_(std::move(coords)), elems_(std::move(elems)), etype_(etype) {
    const std::size_t d = dim();
    if (d != 2 && d != 3) throw MeshError("mesh dimension must be 2 or 3");
    if (elems_.cols() != nodes_per_element(d, etype_))
        throw MeshError("connectivity has " + std::to_string(elems_.cols()) +
                        " columns, expected " + std::to_string(nodes_per_element(d, etype_)));
    const std::size_t nn = num_nodes();
    for (Index v : elems_.data())
        if (v >= nn) throw MeshError("element index " + std::to_string(v) + " out of range");
    if (etype_ == ElementType::P1) {
        num_vertices_ = nn;
    } else {
        Index top = 0;
        for (std::size_t k = 0; k < elems_.rows(); ++k)
            for (std::size_t j = 0; j <= d; ++j) top = std::max(top, elems_(k, j) + 1);
        num_vertices_ = top;
    }
}

IndexTable Mesh::vertex_elems() const {
    const std::size_t v = dim() + 1;
    if (etype_ == ElementType::P1) return elems_;
    IndexTable out(num_elems(), v);
    for (std::size_t k = 0; k < num_elems(); ++k)
        for (std::size_t j = 0; j < v; ++j) out(k, j) = elems_(k, j);
    return out;
}

RealTable Mesh::vertex_coords() const {
    if (etype_ == ElementType::P1) return coords_;
    std::vector<double> data(coords_.data().begin(),
                             coords_.data().begin() + num_vertices_ * dim());
    return RealTable(num_vertices_, dim(), std::move(data));
}

Mesh Mesh::vertex_mesh() const {
    if (etype_ == ElementType::P1) return *this;
    return Mesh(vertex_coords(), vertex_elems(), ElementType::P1);
}

namespace {
constexpr std::array<std::array<std::size_t, 2>, 3> kEdges2D{{{0, 1}, {1, 2}, {0, 2}}};
constexpr std::array<std::array<std::size_t, 2>, 6> kEdges3D{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

void require_p1(const Mesh& mesh, const char* op) {
    if (mesh.etype() != ElementType::P1)
        throw MeshError(std::string(op) + " requires a P1 mesh");
}

// Facet f of a simplex is the simplex minus local vertex f.
using FaceKey = std::array<Index, 3>;

struct FaceRecord {
    FaceKey key;
    Index elem;
    std::uint8_t local;
};

std::vector<FaceRecord> sorted_faces(const Mesh& mesh) {
    const std::size_t d = mesh.dim() + 1;
    const auto& el = mesh.elems();
    std::vector<FaceRecord> recs;
    recs.reserve(mesh.num_elems() * d);
    for (std::size_t k = 0; k < mesh.num_elems(); ++k)
        for (std::size_t f = 0; f < d; ++f) {
            FaceKey key{0, 0, std::numeric_limits<Index>::max()};
            std::size_t m = 0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != f) key[m++] = el(k, j);
            std::sort(key.begin(), key.begin() + static_cast<std::ptrdiff_t>(m));
            recs.push_back({key, k, static_cast<std::uint8_t>(f)});
        }
    std::sort(recs.begin(), recs.end(), [](const FaceRecord& a, const FaceRecord& b) {
        if (a.key != b.key) return a.key < b.key;
        return a.elem < b.elem;
    });
    return recs;
}

double facet_measure(const RealTable& c, std::span<const Index> v) {
    if (v.size() == 2) {
        const double dx = c(v[1], 0) - c(v[0], 0), dy = c(v[1], 1) - c(v[0], 1);
        return std::hypot(dx, dy);
    }
    double a[3], b[3];
    for (int i = 0; i < 3; ++i) {
        a[i] = c(v[1], i) - c(v[0], i);
        b[i] = c(v[2], i) - c(v[0], i);
    }
    const double x = a[1] * b[2] - a[2] * b[1];
    const double y = a[2] * b[0] - a[0] * b[2];
    const double z = a[0] * b[1] - a[1] * b[0];
    return 0.5 * std::sqrt(x * x + y * y + z * z);
}
} // namespace

std::span<const std::array<std::size_t, 2>> canonical_edges(std::size_t dim) {
    if (dim == 2) return kEdges2D;
    if (dim == 3) return kEdges3D;
    throw MeshError("canonical_edges: dimension must be 2 or 3");
}

EdgeSet build_edges(const Mesh& mesh) {
    const auto local = canonical_edges(mesh.dim());
    const auto& el = mesh.elems();
    const std::size_t ne = mesh.num_elems(), nl = local.size();
    struct Rec {
        Index lo, hi, slot;
    };
    std::vector<Rec> recs;
    recs.reserve(ne * nl);
    for (std::size_t k = 0; k < ne; ++k)
        for (std::size_t e = 0; e < nl; ++e) {
            Index a = el(k, local[e][0]), b = el(k, local[e][1]);
            if (a > b) std::swap(a, b);
            recs.push_back({a, b, k * nl + e});
        }
    std::sort(recs.begin(), recs.end(), [](const Rec& x, const Rec& y) {
        return x.lo != y.lo ? x.lo < y.lo : (x.hi != y.hi ? x.hi < y.hi : x.slot < y.slot);
    });
    EdgeSet out;
    out.elem_edges = IndexTable(ne, nl);
    auto& map = out.elem_edges.data();
    for (std::size_t i = 0; i < recs.size(); ++i) {
        if (i == 0 || recs[i].lo != recs[i - 1].lo || recs[i].hi != recs[i - 1].hi)
            out.edges.push_back({recs[i].lo, recs[i].hi});
        map[recs[i].slot] = out.edges.size() - 1;
    }
    return out;
}

BoundaryFaces extract_boundary(const Mesh& mesh) {
    require_p1(mesh, "extract_boundary");
    const std::size_t dim = mesh.dim(), d = dim + 1;
    const auto recs = sorted_faces(mesh);
    BoundaryFaces out;
    out.faces = IndexTable(0, dim);
    std::vector<Index> row(dim);
    for (std::size_t i = 0; i < recs.size();) {
        std::size_t j = i;
        while (j < recs.size() && recs[j].key == recs[i].key) ++j;
        if (j - i > 2) throw MeshError("non-manifold facet shared by " + std::to_string(j - i) +
                                       " elements");
        if (j - i == 1) {
            const auto& r = recs[i];
            std::size_t m = 0;
            for (std::size_t l = 0; l < d; ++l)
                if (l != r.local) row[m++] = mesh.elems()(r.elem, l);
            out.faces.push_row(row);
            out.owner.push_back(r.elem);
            out.areas.push_back(facet_measure(mesh.coords(), row));
        }
        i = j;
    }
    return out;
}

std::size_t count_all_faces(const Mesh& mesh) {
    const auto recs = sorted_faces(mesh.vertex_mesh());
    std::size_t count = 0;
    for (std::size_t i = 0; i < recs.size(); ++i)
        if (i == 0 || recs[i].key != recs[i - 1].key) ++count;
    return count;
}

double signed_simplex_measure(const RealTable& c, std::span<const Index> v) {
    const std::size_t dim = c.cols();
    if (dim == 2) {
        const double ax = c(v[1], 0) - c(v[0], 0), ay = c(v[1], 1) - c(v[0], 1);
        const double bx = c(v[2], 0) - c(v[0], 0), by = c(v[2], 1) - c(v[0], 1);
        return 0.5 * (ax * by - ay * bx);
    }
    double m[3][3];
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 3; ++i) m[j][i] = c(v[j + 1], i) - c(v[0], i);
    const double det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return det / 6.0;
}

void orient_positive(const RealTable& coords, IndexTable& elems) {
    const std::size_t d = elems.cols();
    for (std::size_t k = 0; k < elems.rows(); ++k) {
        auto row = elems.row(k);
        const double s = signed_simplex_measure(coords, row);
        if (s == 0.0) throw MeshError("element " + std::to_string(k) + " has zero measure");
        if (s < 0.0) std::swap(row[d - 2], row[d - 1]);
    }
}

Mesh uniform_refine(const Mesh& mesh) {
    require_p1(mesh, "uniform_refine");
    const std::size_t dim = mesh.dim(), nn = mesh.num_nodes(), ne = mesh.num_elems();
    const EdgeSet es = build_edges(mesh);

    RealTable coords(nn + es.edges.size(), dim);
    std::ranges::copy(mesh.coords().data(), coords.data().begin());
    for (std::size_t e = 0; e < es.edges.size(); ++e)
        for (std::size_t i = 0; i < dim; ++i)
            coords(nn + e, i) =
                0.5 * (mesh.coords()(es.edges[e][0], i) + mesh.coords()(es.edges[e][1], i));

    const auto& el = mesh.elems();
    if (dim == 2) {
        IndexTable elems(4 * ne, 3);
        for (std::size_t k = 0; k < ne; ++k) {
            const Index v0 = el(k, 0), v1 = el(k, 1), v2 = el(k, 2);
            const Index m01 = nn + es.elem_edges(k, 0), m12 = nn + es.elem_edges(k, 1),
                        m02 = nn + es.elem_edges(k, 2);
            const Index kids[4][3] = {{v0, m01, m02}, {m01, v1, m12}, {m02, m12, v2}, {m01, m12, m02}};
            for (std::size_t c = 0; c < 4; ++c)
                for (std::size_t j = 0; j < 3; ++j) elems(4 * k + c, j) = kids[c][j];
        }
        return Mesh(std::move(coords), std::move(elems));
    }

    IndexTable elems(8 * ne, 4);
    for (std::size_t k = 0; k < ne; ++k) {
        const Index v0 = el(k, 0), v1 = el(k, 1), v2 = el(k, 2), v3 = el(k, 3);
        const Index m01 = nn + es.elem_edges(k, 0), m02 = nn + es.elem_edges(k, 1),
                    m03 = nn + es.elem_edges(k, 2), m12 = nn + es.elem_edges(k, 3),
                    m13 = nn + es.elem_edges(k, 4), m23 = nn + es.elem_edges(k, 5);
        const Index kids[8][4] = {{v0, m01, m02, m03},   {m01, v1, m12, m13},
                                  {m02, m12, v2, m23},   {m03, m13, m23, v3},
                                  {m02, m13, m01, m12},  {m02, m13, m12, m23},
                                  {m02, m13, m23, m03},  {m02, m13, m03, m01}};
        const bool parent_positive = signed_simplex_measure(mesh.coords(), el.row(k)) > 0.0;
        for (std::size_t c = 0; c < 8; ++c) {
            auto row = elems.row(8 * k + c);
            std::ranges::copy(kids[c], row.begin());
            if ((signed_simplex_measure(coords, row) > 0.0) != parent_positive)
                std::swap(row[2], row[3]);
        }
    }
    return Mesh(std::move(coords), std::move(elems));
}

Mesh augment_p2(const Mesh& mesh) {
    require_p1(mesh, "augment_p2");
    const std::size_t dim = mesh.dim(), nn = mesh.num_nodes(), ne = mesh.num_elems();
    const EdgeSet es = build_edges(mesh);
    const std::size_t nv = dim + 1, nl = es.elem_edges.cols();

    RealTable coords(nn + es.edges.size(), dim);
    std::ranges::copy(mesh.coords().data(), coords.data().begin());
    for (std::size_t e = 0; e < es.edges.size(); ++e)
        for (std::size_t i = 0; i < dim; ++i)
            coords(nn + e, i) =
                0.5 * (mesh.coords()(es.edges[e][0], i) + mesh.coords()(es.edges[e][1], i));

    IndexTable elems(ne, nv + nl);
    for (std::size_t k = 0; k < ne; ++k) {
        for (std::size_t j = 0; j < nv; ++j) elems(k, j) = mesh.elems()(k, j);
        for (std::size_t e = 0; e < nl; ++e) elems(k, nv + e) = nn + es.elem_edges(k, e);
    }
    return Mesh(std::move(coords), std::move(elems), ElementType::P2);
}

void write_mesh(std::ostream& os, const Mesh& mesh) {
    os << mesh.dim() << ' ' << mesh.num_nodes() << ' ' << mesh.num_elems() << ' '
       << to_string(mesh.etype()) << '\n';
    char buf[32];
    for (std::size_t i = 0; i < mesh.num_nodes(); ++i) {
        for (std::size_t j = 0; j < mesh.dim(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", mesh.coords()(i, j));
            os << (j ? " " : "") << buf;
        }
        os << '\n';
    }
    for (std::size_t k = 0; k < mesh.num_elems(); ++k) {
        for (std::size_t j = 0; j < mesh.nodes_per_elem(); ++j)
            os << (j ? " " : "") << mesh.elems()(k, j) + 1;
        os << '\n';
    }
}

Mesh read_mesh(std::istream& is) {
    std::size_t dim = 0, nn = 0, ne = 0;
    std::string et;
    if (!(is >> dim >> nn >> ne >> et)) throw MeshError("read_mesh: malformed header");
    const ElementType etype = parse_element_type(et);
    if (dim != 2 && dim != 3) throw MeshError("read_mesh: dimension must be 2 or 3");
    RealTable coords(nn, dim);
    for (double& v : coords.data()) {
        std::string tok;
        if (!(is >> tok)) throw MeshError("read_mesh: truncated coordinates");
        v = std::stod(tok);
    }
    IndexTable elems(ne, nodes_per_element(dim, etype));
    for (Index& v : elems.data()) {
        long long idx = 0;
        if (!(is >> idx)) throw MeshError("read_mesh: truncated connectivity");
        if (idx < 1) throw MeshError("read_mesh: indices are 1-based");
        v = static_cast<Index>(idx - 1);
    }
    return Mesh(std::move(coords), std::move(elems), etype);
}

} // namespace pagefem
