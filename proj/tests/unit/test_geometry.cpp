#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pagefem/geometry.hpp"
#include "pagefem/page_ops.hpp"

using namespace pagefem;

namespace {
// The four nodes of the worked single-tetrahedron example.
Mesh example_tet() {
    return Mesh({{7.0 / 4, 3.0 / 4, -1.0 / 4},
                 {7.0 / 4, -2.0 / 4, 4.0 / 4},
                 {10.0 / 4, 3.0 / 4, 4.0 / 4},
                 {4.0 / 4, 3.0 / 4, 4.0 / 4}},
                {{0, 1, 2, 3}});
}
} // namespace

TEST_CASE("stacked coordinates and last-node vectors") {
    const auto g = create_coords3D(example_tet());
    const Matrix want{{3, 3, 6}, {0, -5, 0}, {-5, 0, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(g.vectors3D(i, j, 0) == want(i, j) / 4);
    CHECK(g.coords3D(1, 2, 0) == 3.0 / 4);

    const Mesh ref({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2, 3}});
    const auto r = create_coords3D(ref);
    const Matrix rv{{0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
    CHECK(r.vectors3D.page_matrix(0) == rv);
    CHECK_THROWS_AS(create_coords3D(ref.coords(), IndexTable{{0, 1, 2, 9}}), MeshError);
}

TEST_CASE("signed volumes") {
    const auto v = element_volumes(create_coords3D(example_tet()).vectors3D);
    CHECK(std::abs(v.signed_measures[0] + 25.0 / 64) < 1e-15);
    CHECK(v.total == doctest::Approx(25.0 / 64));
    CHECK(sizes_of_elements(example_tet().coords(), example_tet().elems())[0] ==
          doctest::Approx(25.0 / 64).epsilon(1e-15));
    for (unsigned l = 0; l <= 3; ++l) {
        const Mesh m = mesh_cube(l);
        const auto vol = element_volumes(create_coords3D(m).vectors3D);
        CHECK(std::abs(vol.total - 1.0) < 1e-12);
        double s = 0;
        for (double x : sizes_of_elements(m.coords(), m.elems())) s += x;
        CHECK(std::abs(s - vol.total) < 1e-12);
    }
    const Mesh tri({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}});
    CHECK(sizes_of_elements(tri.coords(), tri.elems())[0] == 0.5);
}

TEST_CASE("reference normals point out of the reference simplex") {
    for (std::size_t dim : {2u, 3u}) {
        const Matrix n = reference_normals(dim);
        CHECK(n.rows() == dim);
        CHECK(n.cols() == dim + 1);
        // Last-node convention: node j is e_j (j < dim), the last node is 0.
        std::vector<std::vector<double>> nodes(dim + 1, std::vector<double>(dim, 0.0));
        for (std::size_t j = 0; j < dim; ++j) nodes[j][j] = 1.0;
        for (std::size_t f = 0; f <= dim; ++f) {
            double side = 0;
            for (std::size_t i = 0; i < dim; ++i) {
                double fc = 0, ec = 0;
                for (std::size_t j = 0; j <= dim; ++j) {
                    ec += nodes[j][i] / double(dim + 1);
                    if (j != f) fc += nodes[j][i] / double(dim);
                }
                side += n(i, f) * (fc - ec);
            }
            CHECK(side > 0);
        }
    }
    CHECK(reference_normals(3) == Matrix{{-1, 0, 0, 1}, {0, -1, 0, 1}, {0, 0, -1, 1}});
}

TEST_CASE("element normals of the worked tetrahedron") {
    const auto g = create_coords3D(example_tet());
    const auto n = element_normals(g.vectors3D);
    const Matrix want{{0, 0, -2.0 / 3, 2.0 / 3}, {0, 4.0 / 5, -2.0 / 5, -2.0 / 5},
                      {4.0 / 5, 0, -2.0 / 5, -2.0 / 5}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(std::abs(n(i, j, 0) - want(i, j)) < 1e-12);
}

TEST_CASE("element normals are perpendicular to faces and balance") {
    const Mesh m = mesh_sphere({1, 1.0});
    const auto g = create_coords3D(m);
    const auto n = element_normals(g.vectors3D);
    for (std::size_t k = 0; k < m.num_elems(); ++k) {
        double sum[3] = {0, 0, 0};
        for (std::size_t f = 0; f < 4; ++f) {
            std::size_t v[3], c = 0;
            for (std::size_t j = 0; j < 4; ++j)
                if (j != f) v[c++] = j;
            double a[3], b[3];
            for (std::size_t i = 0; i < 3; ++i) {
                a[i] = g.coords3D(i, v[1], k) - g.coords3D(i, v[0], k);
                b[i] = g.coords3D(i, v[2], k) - g.coords3D(i, v[0], k);
            }
            double da = 0, db = 0, len = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                da += a[i] * n(i, f, k);
                db += b[i] * n(i, f, k);
                len += n(i, f, k) * n(i, f, k);
            }
            CHECK(std::abs(da) < 1e-10);
            CHECK(std::abs(db) < 1e-10);
            const double cx = a[1] * b[2] - a[2] * b[1], cy = a[2] * b[0] - a[0] * b[2],
                         cz = a[0] * b[1] - a[1] * b[0];
            const double area = 0.5 * std::sqrt(cx * cx + cy * cy + cz * cz);
            for (std::size_t i = 0; i < 3; ++i) sum[i] += area * n(i, f, k) / std::sqrt(len);
        }
        for (double s : sum) CHECK(std::abs(s) < 1e-10);
    }
}

TEST_CASE("boundary normals") {
    const Mesh cube = mesh_cube(2);
    const auto bf = extract_boundary(cube);
    const auto n = boundary_normals(cube, bf);
    double flux[3] = {0, 0, 0}, area = 0;
    for (std::size_t f = 0; f < bf.faces.rows(); ++f) {
        bool bottom = true;
        for (Index v : bf.faces.row(f)) bottom = bottom && cube.coords()(v, 2) == 0.0;
        if (bottom) {
            CHECK(n(f, 0) == 0.0);
            CHECK(n(f, 1) == 0.0);
            CHECK(n(f, 2) == -1.0);
        }
        for (int c = 0; c < 3; ++c) flux[c] += bf.areas[f] * n(f, c);
        area += bf.areas[f];
    }
    CHECK(area == doctest::Approx(6.0).epsilon(1e-14));
    for (double x : flux) CHECK(std::abs(x) < 1e-10 * area);

    const Mesh s = mesh_sphere({3, 1.0});
    const auto sb = extract_boundary(s);
    const auto sn = boundary_normals(s, sb);
    double worst = 1;
    for (std::size_t f = 0; f < sb.faces.rows(); ++f) {
        double c[3] = {0, 0, 0};
        for (Index v : sb.faces.row(f))
            for (int i = 0; i < 3; ++i) c[i] += s.coords()(v, i) / 3;
        const double r = std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]);
        worst = std::min(worst, (c[0] * sn(f, 0) + c[1] * sn(f, 1) + c[2] * sn(f, 2)) / r);
    }
    CHECK(worst > std::cos(15.0 * std::numbers::pi / 180));
}

TEST_CASE("sphere surface area converges at second order") {
    double err[3];
    for (unsigned l = 1; l <= 3; ++l) {
        const auto b = extract_boundary(mesh_sphere({l, 1.0}));
        double a = 0;
        for (double x : b.areas) a += x;
        err[l - 1] = 4 * std::numbers::pi - a;
        CHECK(err[l - 1] > 0);
    }
    for (int i = 0; i < 2; ++i) {
        CHECK(err[i] / err[i + 1] > 3.5);
        CHECK(err[i] / err[i + 1] < 4.5);
    }
}
