#include "pagefem/integrate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "pagefem/geometry.hpp"
#include "pagefem/page_ops.hpp"
#include "pagefem/parallel.hpp"
#include "pagefem/shape.hpp"

namespace pagefem {

namespace {

void check_samples(const PageArray& fip, const QuadratureRule& rule, std::size_t sizes) {
    if (fip.cols() != rule.size())
        throw DimensionError("gi: samples per page (" + std::to_string(fip.cols()) +
                             ") do not match quadrature points (" + std::to_string(rule.size()) +
                             ")");
    if (fip.pages() != sizes)
        throw DimensionError("gi: pages (" + std::to_string(fip.pages()) + ") do not match sizes (" +
                             std::to_string(sizes) + ")");
}

std::vector<double> normalized_weights(const QuadratureRule& rule) {
    const double ref = reference_measure(rule.dim);
    std::vector<double> w(rule.w);
    for (double& x : w) x /= ref;
    return w;
}

PageArray evaluate(const Field& field, const PageArray& x) {
    PageArray f = field(x);
    if (f.pages() != x.pages() || f.cols() != x.cols())
        throw DimensionError("field returned " + std::to_string(f.cols()) + " × " +
                             std::to_string(f.pages()) + " samples for " +
                             std::to_string(x.cols()) + " × " + std::to_string(x.pages()) +
                             " points");
    return f;
}

struct VolumeSetup {
    QuadratureRule rule;
    PageArray x_ip;
    std::vector<double> sizes;
};

VolumeSetup volume_setup(const Mesh& mesh, unsigned gqo) {
    const std::size_t dim = mesh.dim();
    VolumeSetup s{gauss_points(gqo, dim), {}, {}};
    const auto g = create_coords3D(mesh.coords(), mesh.vertex_elems());
    s.x_ip = map_quadrature_points(g.coords3D, shapefun(s.rule.ip, ElementType::P1));
    const auto vol = element_volumes(g.vectors3D);
    s.sizes.resize(vol.signed_measures.pages());
    for (std::size_t k = 0; k < s.sizes.size(); ++k) s.sizes[k] = std::abs(vol.signed_measures[k]);
    return s;
}

} // namespace

PageArray map_quadrature_points(const PageArray& coords3D, const Matrix& shape) {
    if (coords3D.cols() != shape.rows())
        throw DimensionError("map_quadrature_points: " + std::to_string(coords3D.cols()) +
                             " nodes per page but shape table has " + std::to_string(shape.rows()) +
                             " rows");
    return pages::mul(coords3D, shape);
}

double gi(const PageArray& fip, const QuadratureRule& rule, std::span<const double> sizes) {
    check_samples(fip, rule, sizes.size());
    if (fip.rows() != 1)
        throw DimensionError("gi: " + std::to_string(fip.rows()) +
                             "-component samples need normals");
    const auto w = normalized_weights(rule);
    std::vector<double> per(fip.pages());
    parallel_for(fip.pages(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i < w.size(); ++i) s += fip(0, i, k) * w[i];
            per[k] = s;
        }
    });
    double value = 0.0;
    for (std::size_t k = 0; k < per.size(); ++k) value += sizes[k] * per[k];
    return value;
}

double gi(const PageArray& fip, const QuadratureRule& rule, std::span<const double> sizes,
          const RealTable& normals) {
    check_samples(fip, rule, sizes.size());
    if (normals.rows() != fip.pages() || normals.cols() != fip.rows())
        throw DimensionError("gi: normals must be pages × components");
    const auto w = normalized_weights(rule);
    const std::size_t comp = fip.rows();
    std::vector<double> per(fip.pages());
    parallel_for(fip.pages(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            double s = 0.0;
            for (std::size_t c = 0; c < comp; ++c) {
                double fc = 0.0;
                for (std::size_t i = 0; i < w.size(); ++i) fc += fip(c, i, k) * w[i];
                s += fc * normals(k, c);
            }
            per[k] = s;
        }
    });
    double value = 0.0;
    for (std::size_t k = 0; k < per.size(); ++k) value += sizes[k] * per[k];
    return value;
}

double volume_integral(const Mesh& mesh, const Field& field, unsigned gqo) {
    const auto s = volume_setup(mesh, gqo);
    return gi(evaluate(field, s.x_ip), s.rule, s.sizes);
}

Moments moments(const Mesh& mesh, const Field& rho, unsigned gqo) {
    const auto s = volume_setup(mesh, gqo);
    const PageArray r = evaluate(rho, s.x_ip);
    const std::size_t dim = mesh.dim(), nip = s.rule.size(), ne = r.pages();
    Moments m;
    m.mass = gi(r, s.rule, s.sizes);
    if (m.mass == 0.0) throw std::domain_error("moments: zero mass, center undefined");

    PageArray f(1, nip, ne);
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t k = 0; k < ne; ++k)
            for (std::size_t i = 0; i < nip; ++i) f(0, i, k) = s.x_ip(a, i, k) * r(0, i, k);
        m.first.push_back(gi(f, s.rule, s.sizes));
    }
    m.second = Matrix(dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a; b < dim; ++b) {
            for (std::size_t k = 0; k < ne; ++k)
                for (std::size_t i = 0; i < nip; ++i)
                    f(0, i, k) = s.x_ip(a, i, k) * s.x_ip(b, i, k) * r(0, i, k);
            m.second(a, b) = m.second(b, a) = gi(f, s.rule, s.sizes);
        }
    for (double v : m.first) m.center.push_back(v / m.mass);
    for (std::size_t a = 1; a < dim; ++a) m.inertia_x1 += m.second(a, a);
    return m;
}

double surface_integral(const Mesh& mesh, const Field& field, unsigned gqo) {
    const Mesh p1 = mesh.vertex_mesh();
    const auto faces = extract_boundary(p1);
    const auto normals = boundary_normals(p1, faces);
    const std::size_t fdim = mesh.dim() - 1;
    const auto rule = gauss_points(gqo, fdim);
    const auto g = create_coords3D(p1.coords(), faces.faces);
    const PageArray x_ip = map_quadrature_points(g.coords3D, shapefun(rule.ip, ElementType::P1));
    return gi(evaluate(field, x_ip), rule, faces.areas, normals);
}

} // namespace pagefem
