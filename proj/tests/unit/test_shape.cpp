#include <doctest.h>

#include <cmath>
#include <random>

#include "pagefem/geometry.hpp"
#include "pagefem/integrate.hpp"
#include "pagefem/quadrature.hpp"
#include "pagefem/shape.hpp"

using namespace pagefem;

namespace {

Matrix random_points(std::mt19937_64& rng, std::size_t dim, std::size_t n) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    Matrix p(dim, n);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0;
        for (std::size_t i = 0; i < dim; ++i) {
            p(i, j) = u(rng) * (1 - s) * 0.9;
            s += p(i, j);
        }
    }
    return p;
}

} // namespace

TEST_CASE("Kronecker property at the reference nodes") {
    for (std::size_t dim : {2u, 3u})
        for (ElementType t : {ElementType::P1, ElementType::P2}) {
            const Matrix nodes = reference_nodes(dim, t);
            const Matrix phi = shapefun(nodes, t);
            CHECK(phi == Matrix::identity(nodes.cols()));
        }
    // The same holds at nodes produced by the mesh module.
    const Mesh p2 = augment_p2(Mesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2, 3}}));
    Matrix pts(3, 10);
    for (std::size_t j = 0; j < 10; ++j)
        for (std::size_t i = 0; i < 3; ++i) pts(i, j) = p2.coords()(p2.elems()(0, j), i);
    CHECK(shapefun(pts, ElementType::P2) == Matrix::identity(10));
}

TEST_CASE("partition of unity and its derivative") {
    std::mt19937_64 rng(1);
    for (std::size_t dim : {2u, 3u})
        for (ElementType t : {ElementType::P1, ElementType::P2}) {
            const Matrix p = random_points(rng, dim, 20);
            const Matrix phi = shapefun(p, t);
            const PageArray d = shapeder(p, t);
            for (std::size_t j = 0; j < 20; ++j) {
                double s = 0;
                for (std::size_t a = 0; a < phi.rows(); ++a) s += phi(a, j);
                CHECK(std::abs(s - 1) < 1e-14);
                for (std::size_t r = 0; r < dim; ++r) {
                    double ds = 0;
                    for (std::size_t a = 0; a < phi.rows(); ++a) ds += d(r, a, j);
                    CHECK(std::abs(ds) < 1e-13);
                }
            }
        }
}

TEST_CASE("P1 gradients are constant") {
    const Matrix p{{0.2, 0.7}, {0.1, 0.05}};
    const PageArray d = shapeder(p, ElementType::P1);
    const Matrix want{{-1, 1, 0}, {-1, 0, 1}};
    CHECK(d.page_matrix(0) == want);
    CHECK(d.page_matrix(1) == want);
}

TEST_CASE("P2 derivatives match central differences") {
    std::mt19937_64 rng(2);
    const double h = 1e-6;
    for (std::size_t dim : {2u, 3u}) {
        const Matrix p = random_points(rng, dim, 10);
        const PageArray d = shapeder(p, ElementType::P2);
        for (std::size_t r = 0; r < dim; ++r) {
            Matrix plus = p, minus = p;
            for (std::size_t j = 0; j < p.cols(); ++j) {
                plus(r, j) += h;
                minus(r, j) -= h;
            }
            const Matrix fp = shapefun(plus, ElementType::P2), fm = shapefun(minus, ElementType::P2);
            for (std::size_t j = 0; j < p.cols(); ++j)
                for (std::size_t a = 0; a < fp.rows(); ++a)
                    CHECK(std::abs((fp(a, j) - fm(a, j)) / (2 * h) - d(r, a, j)) < 1e-6);
        }
    }
}

TEST_CASE("phider on simple maps") {
    const auto rule = gauss_points(3, 3);
    const Mesh ref({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2, 3}});
    const auto g = create_coords3D(ref);
    const auto d = phider(g.coords3D, rule.ip, ElementType::P1);
    const PageArray ds = shapeder(rule.ip, ElementType::P1);
    for (std::size_t i = 0; i < rule.size(); ++i) {
        CHECK(d.jac[i].page_matrix(0) == Matrix::identity(3));
        CHECK(d.dphi[i].page_matrix(0) == ds.page_matrix(i));
        CHECK(d.detj(i, 0) == 1.0);
    }

    const double s = 2.5;
    RealTable scaled = ref.coords();
    for (double& x : scaled.data()) x *= s;
    const auto gs = create_coords3D(scaled, ref.elems());
    const auto dsd = phider(gs.coords3D, rule.ip, ElementType::P1);
    CHECK(dsd.detj(0, 0) == doctest::Approx(s * s * s).epsilon(1e-15));
    for (std::size_t q = 0; q < 12; ++q) CHECK(dsd.dphi[0].data()[q] == doctest::Approx(ds.data()[q] / s));

    const Mesh tet({{7.0 / 4, 3.0 / 4, -1.0 / 4},
                    {7.0 / 4, -2.0 / 4, 4.0 / 4},
                    {10.0 / 4, 3.0 / 4, 4.0 / 4},
                    {4.0 / 4, 3.0 / 4, 4.0 / 4}},
                   {{0, 1, 2, 3}});
    const auto dt = phider(create_coords3D(tet).coords3D, rule.ip, ElementType::P1);
    for (std::size_t i = 0; i < rule.size(); ++i) CHECK(std::abs(dt.detj(i, 0) - 75.0 / 32) < 1e-14);

    const Mesh flat({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}}, {{0, 1, 2, 3}});
    CHECK_THROWS_AS(phider(create_coords3D(flat).coords3D, rule.ip, ElementType::P1), SingularPageError);
}

TEST_CASE("isoparametric reproduction of linear functions") {
    for (std::size_t dim : {2u, 3u}) {
        const Mesh m = augment_p2(dim == 2 ? mesh_lshape(1) : mesh_sphere({1, 1.0}));
        const auto rule = gauss_points(4, dim);
        const auto g = create_coords3D(m.coords(), m.elems());
        const auto d = phider(g.coords3D, rule.ip, ElementType::P2);
        const double grad[3] = {0.3, -1.7, 2.2};
        for (std::size_t i = 0; i < rule.size(); ++i)
            for (std::size_t k = 0; k < m.num_elems(); ++k) {
                double dsum[3] = {0, 0, 0};
                for (std::size_t r = 0; r < dim; ++r) {
                    double gr = 0;
                    for (std::size_t a = 0; a < m.nodes_per_elem(); ++a) {
                        double u = 0;
                        for (std::size_t c = 0; c < dim; ++c) u += grad[c] * g.coords3D(c, a, k);
                        gr += d.dphi[i](r, a, k) * u;
                        dsum[r] += d.dphi[i](r, a, k);
                    }
                    CHECK(std::abs(gr - grad[r]) < 1e-11);
                    CHECK(std::abs(dsum[r]) < 1e-12);
                }
                if (i > 0) CHECK(std::abs(d.detj(i, k) - d.detj(0, k)) < 1e-13 * d.detj(0, k));
            }
    }
}
