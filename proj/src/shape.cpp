#include "pagefem/shape.hpp"

#include <cmath>

#include "pagefem/page_ops.hpp"

namespace pagefem {

namespace {

void check_points(const Matrix& points, ElementType etype) {
    const std::size_t dim = points.rows();
    if (dim < 1 || dim > 3) throw DimensionError("shape: point dimension must be 1, 2 or 3");
    if (etype == ElementType::P2 && dim == 1)
        throw DimensionError("shape: P2 needs dimension 2 or 3");
}

std::size_t local_count(std::size_t dim, ElementType etype) {
    return dim == 1 ? 2 : nodes_per_element(dim, etype);
}

// Barycentric coordinates λ₀ = 1 − Σξ, λᵢ = ξᵢ.
void barycentric(const Matrix& points, std::size_t j, double* lam) {
    const std::size_t dim = points.rows();
    double s = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        lam[i + 1] = points(i, j);
        s += points(i, j);
    }
    lam[0] = 1.0 - s;
}

} // namespace

Matrix shapefun(const Matrix& points, ElementType etype) {
    check_points(points, etype);
    const std::size_t dim = points.rows(), nip = points.cols();
    Matrix out(local_count(dim, etype), nip);
    double lam[4];
    for (std::size_t j = 0; j < nip; ++j) {
        barycentric(points, j, lam);
        if (etype == ElementType::P1) {
            for (std::size_t a = 0; a <= dim; ++a) out(a, j) = lam[a];
            continue;
        }
        for (std::size_t a = 0; a <= dim; ++a) out(a, j) = lam[a] * (2.0 * lam[a] - 1.0);
        const auto edges = canonical_edges(dim);
        for (std::size_t e = 0; e < edges.size(); ++e)
            out(dim + 1 + e, j) = 4.0 * lam[edges[e][0]] * lam[edges[e][1]];
    }
    return out;
}

PageArray shapeder(const Matrix& points, ElementType etype) {
    check_points(points, etype);
    const std::size_t dim = points.rows(), nip = points.cols();
    const std::size_t nlb = local_count(dim, etype);
    PageArray out(dim, nlb, nip);
    // dλ₀/dξ_r = −1, dλ_a/dξ_r = δ(a, r+1).
    auto dlam = [](std::size_t a, std::size_t r) { return a == 0 ? -1.0 : (a == r + 1 ? 1.0 : 0.0); };
    double lam[4];
    for (std::size_t j = 0; j < nip; ++j) {
        barycentric(points, j, lam);
        for (std::size_t r = 0; r < dim; ++r) {
            if (etype == ElementType::P1) {
                for (std::size_t a = 0; a <= dim; ++a) out(r, a, j) = dlam(a, r);
                continue;
            }
            for (std::size_t a = 0; a <= dim; ++a) out(r, a, j) = (4.0 * lam[a] - 1.0) * dlam(a, r);
            const auto edges = canonical_edges(dim);
            for (std::size_t e = 0; e < edges.size(); ++e) {
                const std::size_t a = edges[e][0], b = edges[e][1];
                out(r, dim + 1 + e, j) = 4.0 * (lam[a] * dlam(b, r) + lam[b] * dlam(a, r));
            }
        }
    }
    return out;
}

Matrix reference_nodes(std::size_t dim, ElementType etype) {
    const std::size_t nlb = local_count(dim, etype);
    Matrix nodes(dim, nlb);
    for (std::size_t a = 1; a <= dim; ++a) nodes(a - 1, a) = 1.0;
    if (etype == ElementType::P2) {
        const auto edges = canonical_edges(dim);
        for (std::size_t e = 0; e < edges.size(); ++e)
            for (std::size_t i = 0; i < dim; ++i)
                nodes(i, dim + 1 + e) = 0.5 * (nodes(i, edges[e][0]) + nodes(i, edges[e][1]));
    }
    return nodes;
}

GlobalDerivs phider(const PageArray& coords3D, const Matrix& ip, ElementType etype) {
    const std::size_t dim = ip.rows(), nip = ip.cols(), ne = coords3D.pages();
    if (coords3D.rows() != dim)
        throw DimensionError("phider: coordinate rows do not match point dimension");
    if (coords3D.cols() != local_count(dim, etype))
        throw DimensionError("phider: element node count does not match element type");
    const PageArray dshape = shapeder(ip, etype);
    GlobalDerivs g;
    g.detj = RealTable(nip, ne);
    for (std::size_t i = 0; i < nip; ++i) {
        const Matrix ds = dshape.page_matrix(i);
        PageArray jac = pages::mul_t(ds, coords3D);
        auto inv = pages::inverse(jac);
        g.dphi.push_back(pages::mul(inv.inverse, ds));
        for (std::size_t k = 0; k < ne; ++k) g.detj(i, k) = std::abs(inv.det[k]);
        g.jac.push_back(std::move(jac));
    }
    return g;
}

} // namespace pagefem
