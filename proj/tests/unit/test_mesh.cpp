#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "pagefem/mesh.hpp"

using namespace pagefem;

namespace {

double total_measure(const Mesh& m) {
    double s = 0;
    bool positive = true;
    for (std::size_t k = 0; k < m.num_elems(); ++k) {
        const double v = signed_simplex_measure(m.coords(), m.vertex_elems().row(k));
        positive = positive && v > 0;
        s += v;
    }
    CHECK(positive);
    return s;
}

std::size_t edge_count(const Mesh& m) { return build_edges(m).edges.size(); }

} // namespace

TEST_CASE("square meshes") {
    for (unsigned l = 0; l <= 4; ++l) {
        const Mesh m = mesh_square(l);
        const std::size_t n = std::size_t{1} << l;
        CHECK(m.num_nodes() == (n + 1) * (n + 1) + n * n);
        CHECK(m.num_elems() == 4 * n * n);
        CHECK(total_measure(m) == doctest::Approx(1.0).epsilon(1e-14));
        // Euler: V − E + F = 1 for a disk.
        CHECK(m.num_nodes() - edge_count(m) + m.num_elems() == 1);
        CHECK(extract_boundary(m).faces.rows() == 4 * n);
    }
}

TEST_CASE("cube meshes") {
    for (unsigned l = 0; l <= 3; ++l) {
        const Mesh m = mesh_cube(l);
        const std::size_t n = std::size_t{1} << l;
        CHECK(m.num_nodes() == (n + 1) * (n + 1) * (n + 1));
        CHECK(m.num_elems() == 6 * n * n * n);
        CHECK(total_measure(m) == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(extract_boundary(m).faces.rows() == 12 * n * n);
    }
}

TEST_CASE("sphere and torus counts") {
    const Mesh s = mesh_sphere({1, 1.0});
    CHECK(s.num_elems() == 384);
    CHECK(s.num_nodes() == 125);
    CHECK(count_all_faces(s) == 864);
    CHECK(extract_boundary(s).faces.rows() == 192);
    // All nodes on the outer shell lie on the sphere.
    const Mesh s2 = mesh_sphere({2, 2.5});
    double rmax = 0;
    for (std::size_t v = 0; v < s2.num_nodes(); ++v) {
        const auto x = s2.coords().row(v);
        rmax = std::max(rmax, std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]));
    }
    CHECK(rmax == doctest::Approx(2.5).epsilon(1e-14));
    total_measure(s2);

    const std::size_t elems[] = {96, 576, 4992}, nodes[] = {64, 216, 1300};
    for (unsigned l = 0; l <= 2; ++l) {
        const Mesh t = mesh_torus({l, 1.0, 0.25});
        CHECK(t.num_elems() == elems[l]);
        CHECK(t.num_nodes() == nodes[l]);
        total_measure(t);
        // A solid torus has Euler characteristic 0.
        CHECK(static_cast<long>(t.num_nodes()) - static_cast<long>(edge_count(t)) +
                  static_cast<long>(count_all_faces(t)) - static_cast<long>(t.num_elems()) ==
              0);
    }
    CHECK(extract_boundary(mesh_torus({0, 1.0, 0.25})).faces.rows() == 128);
    CHECK_THROWS_AS(mesh_torus({0, 1.0, 1.5}), MeshError);
    CHECK_THROWS_AS(mesh_sphere({1, -1.0}), MeshError);
}

TEST_CASE("L-shape") {
    const Mesh m = mesh_lshape(1);
    CHECK(m.num_elems() == 112);
    CHECK(m.num_nodes() == 73);
    CHECK(augment_p2(m).num_nodes() == 257);
    CHECK(total_measure(m) == doctest::Approx(1.0 - 0.75 * 0.75).epsilon(1e-14));
    CHECK(mesh_lshape(4).num_elems() == 7168);
}

TEST_CASE("uniform refinement") {
    const Mesh t({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2, 3}});
    const Mesh r = uniform_refine(t);
    CHECK(r.num_elems() == 8);
    CHECK(r.num_nodes() == 10);
    CHECK(total_measure(r) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    // New nodes are the edge midpoints in edge order.
    const auto e = build_edges(t);
    for (std::size_t i = 0; i < e.edges.size(); ++i)
        for (std::size_t c = 0; c < 3; ++c)
            CHECK(r.coords()(4 + i, c) ==
                  0.5 * (t.coords()(e.edges[i][0], c) + t.coords()(e.edges[i][1], c)));
    const Mesh tri({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}});
    const Mesh rr = uniform_refine(uniform_refine(tri));
    CHECK(rr.num_elems() == 16);
    CHECK(rr.num_nodes() == 15);
    CHECK(total_measure(rr) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("P2 augmentation") {
    const Mesh m = mesh_cube(1);
    const Mesh p2 = augment_p2(m);
    CHECK(p2.etype() == ElementType::P2);
    CHECK(p2.nodes_per_elem() == 10);
    CHECK(p2.num_vertices() == m.num_nodes());
    CHECK(p2.num_nodes() == m.num_nodes() + edge_count(m));
    const auto edges = canonical_edges(3);
    for (std::size_t k = 0; k < p2.num_elems(); ++k)
        for (std::size_t e = 0; e < 6; ++e)
            for (std::size_t c = 0; c < 3; ++c) {
                const auto& x = p2.coords();
                const auto row = p2.elems().row(k);
                CHECK(x(row[4 + e], c) == 0.5 * (x(row[edges[e][0]], c) + x(row[edges[e][1]], c)));
            }
    CHECK(p2.vertex_mesh().elems() == m.elems());
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(Mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 3}}), MeshError);
    CHECK_THROWS_AS(Mesh({{0, 0}, {1, 0}, {0, 1}}, {{0, 1}}), MeshError);
    CHECK_THROWS_AS(Mesh(RealTable{{0.0}, {1.0}}, IndexTable{{0, 1}}), MeshError);
    // Three triangles on one edge.
    const Mesh fan({{0, 0}, {1, 0}, {0, 1}, {0, -1}, {1, 1}}, {{0, 1, 2}, {0, 3, 1}, {0, 1, 4}});
    CHECK_THROWS_AS(extract_boundary(fan), MeshError);
    RealTable c{{0, 0}, {1, 0}, {0, 1}};
    IndexTable flat{{0, 1, 1}};
    CHECK_THROWS_AS(orient_positive(c, flat), MeshError);
    IndexTable neg{{0, 2, 1}};
    orient_positive(c, neg);
    CHECK(signed_simplex_measure(c, neg.row(0)) > 0);
}

TEST_CASE("mesh text round trip") {
    const Mesh m = augment_p2(mesh_lshape(0));
    std::stringstream ss;
    write_mesh(ss, m);
    const Mesh back = read_mesh(ss);
    CHECK(back.etype() == ElementType::P2);
    CHECK(back.elems() == m.elems());
    CHECK(back.coords() == m.coords());
}
