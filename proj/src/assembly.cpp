#include "pagefem/assembly.hpp"

#include <cmath>

#include "pagefem/geometry.hpp"
#include "pagefem/page_ops.hpp"
#include "pagefem/parallel.hpp"
#include "pagefem/shape.hpp"

namespace pagefem {

namespace {

unsigned resolve(unsigned gqo, ElementType etype) { return gqo == 0 ? default_gqo(etype) : gqo; }

} // namespace

unsigned default_gqo(ElementType etype) { return etype == ElementType::P1 ? 2 : 4; }

Field constant_field(double value) {
    return [value](const PageArray& x) {
        PageArray f(1, x.cols(), x.pages());
        for (double& v : f.data()) v = value;
        return f;
    };
}

RealTable coeffs_in_ip(const RealTable& coords, const IndexTable& elems, const Field& coeff,
                       unsigned gqo) {
    const std::size_t dim = coords.cols();
    if (elems.cols() < dim + 1) throw DimensionError("coeffs_in_ip: too few connectivity columns");
    IndexTable verts(elems.rows(), dim + 1);
    for (std::size_t k = 0; k < elems.rows(); ++k)
        for (std::size_t j = 0; j <= dim; ++j) verts(k, j) = elems(k, j);
    const auto rule = gauss_points(gqo, dim);
    const auto g = create_coords3D(coords, verts);
    const PageArray x = map_quadrature_points(g.coords3D, shapefun(rule.ip, ElementType::P1));
    const PageArray c = coeff(x);
    if (c.rows() != 1 || c.cols() != rule.size() || c.pages() != elems.rows())
        throw DimensionError("coeffs_in_ip: coefficient must return 1 × nip × ne samples");
    RealTable out(rule.size(), elems.rows());
    for (std::size_t k = 0; k < elems.rows(); ++k)
        for (std::size_t i = 0; i < rule.size(); ++i) out(i, k) = c(0, i, k);
    return out;
}

Assembled stiffness_matrix(const Mesh& mesh, const Field& coeff, unsigned gqo) {
    gqo = resolve(gqo, mesh.etype());
    const std::size_t dim = mesh.dim(), ne = mesh.num_elems(), nlb = mesh.nodes_per_elem();
    const auto rule = gauss_points(gqo, dim);
    const auto coeffs = coeffs_in_ip(mesh.coords(), mesh.elems(), coeff, gqo);
    const auto g = create_coords3D(mesh.coords(), mesh.elems());
    const auto d = phider(g.coords3D, rule.ip, mesh.etype());

    PageArray local(nlb, nlb, ne);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const PageArray grad = pages::tmul(d.dphi[i], d.dphi[i]);
        const double w = rule.w[i];
        parallel_for(ne, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t k = lo; k < hi; ++k) {
                const double s = w * (coeffs(i, k) * d.detj(i, k));
                const auto src = grad.page(k);
                auto dst = local.page(k);
                for (std::size_t q = 0; q < src.size(); ++q) dst[q] += s * src[q];
            }
        });
    }
    return {scatter_triplets(local, mesh.elems(), mesh.num_nodes()), std::move(local)};
}

Assembled mass_matrix(const Mesh& mesh, const Field& coeff, unsigned gqo) {
    gqo = resolve(gqo, mesh.etype());
    const std::size_t dim = mesh.dim(), ne = mesh.num_elems(), nlb = mesh.nodes_per_elem();
    const auto rule = gauss_points(gqo, dim);
    const auto coeffs = coeffs_in_ip(mesh.coords(), mesh.elems(), coeff, gqo);
    // The geometry is affine, so one |det J| per element suffices.
    const auto sizes = sizes_of_elements(mesh.coords(), mesh.elems());
    const double fact = 1.0 / reference_measure(dim);
    const Matrix phi = shapefun(rule.ip, mesh.etype());

    PageArray local(nlb, nlb, ne);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double w = rule.w[i];
        parallel_for(ne, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t k = lo; k < hi; ++k) {
                const double s = w * (coeffs(i, k) * (sizes[k] * fact));
                auto dst = local.page(k);
                for (std::size_t b = 0; b < nlb; ++b)
                    for (std::size_t a = 0; a < nlb; ++a) dst[b * nlb + a] += s * (phi(a, i) * phi(b, i));
            }
        });
    }
    return {scatter_triplets(local, mesh.elems(), mesh.num_nodes()), std::move(local)};
}

AssembledVector rhs_vector(const Mesh& mesh, const Field& f, unsigned gqo) {
    gqo = resolve(gqo, mesh.etype());
    const std::size_t dim = mesh.dim(), ne = mesh.num_elems(), nlb = mesh.nodes_per_elem();
    const auto rule = gauss_points(gqo, dim);
    const auto fvals = coeffs_in_ip(mesh.coords(), mesh.elems(), f, gqo);
    const auto sizes = sizes_of_elements(mesh.coords(), mesh.elems());
    const double fact = 1.0 / reference_measure(dim);
    const Matrix phi = shapefun(rule.ip, mesh.etype());

    AssembledVector out{std::vector<double>(mesh.num_nodes(), 0.0), RealTable(ne, nlb)};
    parallel_for(ne, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            const double detj = sizes[k] * fact;
            for (std::size_t i = 0; i < rule.size(); ++i) {
                const double s = rule.w[i] * (fvals(i, k) * detj);
                for (std::size_t a = 0; a < nlb; ++a) out.local(k, a) += s * phi(a, i);
            }
        }
    });
    for (std::size_t k = 0; k < ne; ++k)
        for (std::size_t a = 0; a < nlb; ++a) out.vector[mesh.elems()(k, a)] += out.local(k, a);
    return out;
}

} // namespace pagefem
