#include "pagefem/geometry.hpp"

#include <cmath>
#include <string>

#include "pagefem/page_ops.hpp"
#include "pagefem/parallel.hpp"

namespace pagefem {

namespace {
double factorial(std::size_t n) {
    double f = 1.0;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
    return f;
}
} // namespace

ElementGeometry create_coords3D(const RealTable& coords, const IndexTable& elems) {
    const std::size_t dim = coords.cols(), d = elems.cols(), ne = elems.rows();
    if (d < 2) throw DimensionError("create_coords3D: need at least two nodes per cell");
    for (Index v : elems.data())
        if (v >= coords.rows())
            throw MeshError("create_coords3D: node index " + std::to_string(v) + " out of range");
    ElementGeometry g{PageArray(dim, d, ne), PageArray(dim, d - 1, ne)};
    parallel_for(ne, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t i = 0; i < dim; ++i) g.coords3D(i, j, k) = coords(elems(k, j), i);
            for (std::size_t j = 0; j + 1 < d; ++j)
                for (std::size_t i = 0; i < dim; ++i)
                    g.vectors3D(i, j, k) = g.coords3D(i, j, k) - g.coords3D(i, d - 1, k);
        }
    });
    return g;
}

ElementGeometry create_coords3D(const Mesh& mesh) {
    return create_coords3D(mesh.coords(), mesh.vertex_elems());
}

Volumes element_volumes(const PageArray& vectors3D) {
    const std::size_t dim = vectors3D.rows();
    PageScalars dets = pages::det(vectors3D);
    const double f = 1.0 / factorial(dim);
    Volumes v{PageScalars(dets.pages()), 0.0};
    for (std::size_t k = 0; k < dets.pages(); ++k) {
        v.signed_measures[k] = dets[k] * f;
        v.total += std::abs(v.signed_measures[k]);
    }
    return v;
}

Matrix reference_normals(std::size_t dim) {
    if (dim == 2) return Matrix{{-1, 0, 1}, {0, -1, 1}};
    if (dim == 3) return Matrix{{-1, 0, 0, 1}, {0, -1, 0, 1}, {0, 0, -1, 1}};
    throw DimensionError("reference_normals: dimension must be 2 or 3");
}

PageArray element_normals(const PageArray& vectors3D) {
    const auto inv = pages::inverse(vectors3D);
    return pages::mul(pages::transpose(inv.inverse), reference_normals(vectors3D.rows()));
}

RealTable boundary_normals(const Mesh& mesh, const BoundaryFaces& faces) {
    const std::size_t dim = mesh.dim(), nf = faces.faces.rows();
    const auto& c = mesh.coords();
    const auto& el = mesh.elems();
    RealTable out(nf, dim);
    for (std::size_t f = 0; f < nf; ++f) {
        const auto v = faces.faces.row(f);
        double n[3] = {0, 0, 0};
        if (dim == 2) {
            n[0] = c(v[1], 1) - c(v[0], 1);
            n[1] = -(c(v[1], 0) - c(v[0], 0));
        } else {
            double a[3], b[3];
            for (std::size_t i = 0; i < 3; ++i) {
                a[i] = c(v[1], i) - c(v[0], i);
                b[i] = c(v[2], i) - c(v[0], i);
            }
            n[0] = a[1] * b[2] - a[2] * b[1];
            n[1] = a[2] * b[0] - a[0] * b[2];
            n[2] = a[0] * b[1] - a[1] * b[0];
        }
        double len = 0.0;
        for (std::size_t i = 0; i < dim; ++i) len += n[i] * n[i];
        len = std::sqrt(len);
        if (!(len > 0.0)) throw MeshError("boundary_normals: degenerate face " + std::to_string(f));

        // Outward: same side as the face centroid seen from the owner centroid.
        double side = 0.0;
        const Index e = faces.owner[f];
        for (std::size_t i = 0; i < dim; ++i) {
            double fc = 0.0, ec = 0.0;
            for (std::size_t j = 0; j < dim; ++j) fc += c(v[j], i);
            for (std::size_t j = 0; j <= dim; ++j) ec += c(el(e, j), i);
            side += n[i] * (fc / static_cast<double>(dim) - ec / static_cast<double>(dim + 1));
        }
        const double s = (side < 0.0 ? -1.0 : 1.0) / len;
        for (std::size_t i = 0; i < dim; ++i) out(f, i) = s * n[i];
    }
    return out;
}

std::vector<double> sizes_of_elements(const RealTable& coords, const IndexTable& elems) {
    const std::size_t dim = coords.cols();
    if (elems.cols() < dim + 1) throw DimensionError("sizes_of_elements: too few columns");
    std::vector<double> sizes(elems.rows());
    std::vector<Index> verts(dim + 1);
    for (std::size_t k = 0; k < elems.rows(); ++k) {
        for (std::size_t j = 0; j <= dim; ++j) verts[j] = elems(k, j);
        sizes[k] = std::abs(signed_simplex_measure(coords, verts));
        if (!(sizes[k] > 0.0))
            throw MeshError("sizes_of_elements: element " + std::to_string(k) + " has zero measure");
    }
    return sizes;
}

} // namespace pagefem
