#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pagefem/assembly.hpp"
#include "pagefem/geometry.hpp"
#include "pagefem/integrate.hpp"
#include "pagefem/shape.hpp"

using namespace pagefem;
using std::numbers::pi;

namespace {

template <class F>
Field scalar(F fn) {
    return [fn](const PageArray& x) {
        PageArray out(1, x.cols(), x.pages());
        for (std::size_t k = 0; k < x.pages(); ++k)
            for (std::size_t i = 0; i < x.cols(); ++i) {
                double p[3] = {0, 0, 0};
                for (std::size_t r = 0; r < x.rows(); ++r) p[r] = x(r, i, k);
                out(0, i, k) = fn(p);
            }
        return out;
    };
}

// F(x) = A x + c, divergence trace(A).
Field affine_flux(const double a[3][3], const double c[3]) {
    return [a, c](const PageArray& x) {
        PageArray out(3, x.cols(), x.pages());
        for (std::size_t k = 0; k < x.pages(); ++k)
            for (std::size_t i = 0; i < x.cols(); ++i)
                for (std::size_t r = 0; r < 3; ++r) {
                    double s = c[r];
                    for (std::size_t q = 0; q < 3; ++q) s += a[r][q] * x(q, i, k);
                    out(r, i, k) = s;
                }
        return out;
    };
}

} // namespace

TEST_CASE("quadrature points follow the affine map") {
    const Mesh tri({{1, 2}, {4, 3}, {0, 5}}, {{0, 1, 2}});
    const auto rule = gauss_points(4, 2);
    const auto g = create_coords3D(tri);
    const auto x = map_quadrature_points(g.coords3D, shapefun(rule.ip, ElementType::P1));
    for (std::size_t i = 0; i < rule.size(); ++i) {
        const double s = rule.ip(0, i), t = rule.ip(1, i);
        CHECK(x(0, i, 0) == doctest::Approx(1 + 3 * s - 1 * t));
        CHECK(x(1, i, 0) == doctest::Approx(2 + 1 * s + 3 * t));
    }
    const auto c = gauss_points(1, 2);
    const auto xc = map_quadrature_points(g.coords3D, shapefun(c.ip, ElementType::P1));
    CHECK(xc(0, 0, 0) == doctest::Approx(5.0 / 3));
    CHECK(xc(1, 0, 0) == doctest::Approx(10.0 / 3));
    // Vertex points reproduce the vertices.
    const Matrix verts{{0, 1, 0}, {0, 0, 1}};
    const auto xv = map_quadrature_points(g.coords3D, shapefun(verts, ElementType::P1));
    for (std::size_t j = 0; j < 3; ++j)
        for (std::size_t r = 0; r < 2; ++r) CHECK(xv(r, j, 0) == tri.coords()(j, r));
    CHECK_THROWS_AS(map_quadrature_points(g.coords3D, Matrix(4, 1)), DimensionError);
}

TEST_CASE("gi weight convention") {
    const Mesh m = mesh_sphere({1, 1.0});
    const double total = element_volumes(create_coords3D(m).vectors3D).total;
    for (unsigned q = 1; q <= 4; ++q)
        CHECK(volume_integral(m, constant_field(1.0), q) == doctest::Approx(total).epsilon(1e-14));
    const auto rule = gauss_points(2, 3);
    const std::vector<double> sizes(2, 1.0);
    CHECK_THROWS_AS(gi(PageArray(3, rule.size(), 2), rule, sizes), DimensionError);
    CHECK_THROWS_AS(gi(PageArray(1, rule.size(), 3), rule, sizes), DimensionError);
    CHECK_THROWS_AS(gi(PageArray(1, 1, 2), rule, sizes), DimensionError);
}

TEST_CASE("polynomials of degree ≤ gqo are integrated exactly") {
    const Mesh cube = mesh_cube(1);
    // ∫ x²y z over [0,1]³ = 1/12, degree 4.
    CHECK(volume_integral(cube, scalar([](const double* x) { return x[0] * x[0] * x[1] * x[2]; }), 4) ==
          doctest::Approx(1.0 / 12).epsilon(1e-12));
    const Mesh sq = mesh_square(1);
    CHECK(volume_integral(sq, scalar([](const double* x) { return x[0] * x[0] * x[0] * x[1]; }), 4) ==
          doctest::Approx(1.0 / 8).epsilon(1e-12));
}

TEST_CASE("ball integral converges at second order") {
    // ∫_B (x₁² + x₂²) = 8π/15 for the unit ball.
    const double exact = 8 * pi / 15;
    double err[3];
    for (unsigned l = 1; l <= 3; ++l)
        err[l - 1] = std::abs(
            volume_integral(mesh_sphere({l, 1.0}),
                            scalar([](const double* x) { return x[0] * x[0] + x[1] * x[1]; }), 2) -
            exact);
    for (int i = 0; i < 2; ++i) {
        CHECK(err[i] / err[i + 1] > 3.5);
        CHECK(err[i] / err[i + 1] < 4.5);
    }
}

TEST_CASE("moments of the unit cube") {
    const auto m = moments(mesh_cube(2), constant_field(1.0), 2);
    CHECK(m.mass == doctest::Approx(1.0).epsilon(1e-12));
    for (double c : m.center) CHECK(std::abs(c - 0.5) < 1e-10);
    CHECK(m.first[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(m.second(0, 1) == m.second(1, 0));
    CHECK(m.second(0, 0) == doctest::Approx(1.0 / 3).epsilon(1e-12));
    CHECK(m.second(0, 1) == doctest::Approx(1.0 / 4).epsilon(1e-12));
    CHECK(m.inertia_x1 == doctest::Approx(2.0 / 3).epsilon(1e-12));
    CHECK_THROWS_AS(moments(mesh_cube(0), constant_field(0.0), 1), std::domain_error);
}

TEST_CASE("torus moment of inertia") {
    const Field rho = scalar([](const double* x) { return x[0] * x[0] + x[1] * x[1]; });
    const auto m = moments(mesh_torus({0, 1.0, 0.25}), rho, 4);
    // Tabulated reference 0.108588 on the coarsest mesh; the gap of about
    // 2e-5 comes from the choice of quadrature rule.
    CHECK(std::abs(m.inertia_x1 - 0.108588) < 5e-5);
    const auto m2 = moments(mesh_torus({2, 1.0, 0.25}), rho, 4);
    CHECK(std::abs(m2.inertia_x1 - 0.191582) < 5e-6);
}

TEST_CASE("surface integrals") {
    const double a[3][3] = {{1.0 / 3, 0, 0}, {0, 1.0 / 3, 0}, {0, 0, 1.0 / 3}};
    const double zero[3] = {0, 0, 0};
    CHECK(std::abs(surface_integral(mesh_cube(2), affine_flux(a, zero), 1) - 1.0) < 1e-10);

    const double none[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    const double c[3] = {1.5, -2.0, 0.25};
    const Mesh s = mesh_sphere({2, 1.0});
    double area = 0;
    for (double x : extract_boundary(s).areas) area += x;
    CHECK(std::abs(surface_integral(s, affine_flux(none, c), 2)) < 1e-10 * area * 2.0);

    // Divergence theorem with an affine field on a curved mesh.
    const double b[3][3] = {{1, 2, 0}, {0, -3, 1}, {4, 0, 0.5}};
    const Mesh t = mesh_torus({1, 1.0, 0.25});
    const double vol = volume_integral(t, constant_field(1.0), 1);
    CHECK(surface_integral(t, affine_flux(b, c), 1) == doctest::Approx(-1.5 * vol).epsilon(1e-12));
}
