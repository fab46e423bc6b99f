#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "pagefem/mesh.hpp"

namespace pagefem {

namespace {

// Six tetrahedra of the unit cube around the diagonal from corner `start`
// (bit i set = upper end along axis i) to the opposite corner. `node` maps
// a corner bit pattern to a global index.
template <class NodeOf>
void kuhn_split(unsigned start, NodeOf&& node, IndexTable& elems) {
    static constexpr std::array<std::array<int, 3>, 6> kPerms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    for (const auto& p : kPerms) {
        unsigned bits = start;
        std::array<Index, 4> row{};
        row[0] = node(bits);
        for (int s = 0; s < 3; ++s) {
            bits ^= 1u << p[s];
            row[s + 1] = node(bits);
        }
        elems.push_row(row);
    }
}

// Equal-angle map of a point on the square/cube shell ‖a‖∞ = s onto the
// sphere of radius s. Components are treated independently per axis.
template <std::size_t N>
std::array<double, N> shell_to_sphere(const std::array<double, N>& a) {
    double s = 0.0;
    for (double v : a) s = std::max(s, std::abs(v));
    if (s == 0.0) return a;
    std::array<double, N> t{};
    double norm = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        t[i] = std::tan(std::numbers::pi / 4.0 * (a[i] / s));
        norm += t[i] * t[i];
    }
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < N; ++i) t[i] *= s / norm;
    return t;
}

Mesh crossed_squares(const std::vector<std::array<double, 2>>& lower_left, double side) {
    // Corners are shared between neighbouring squares; dedupe on a lattice.
    RealTable coords(0, 2);
    IndexTable elems(0, 3);
    std::vector<std::array<long long, 2>> keys;
    auto node_at = [&](double x, double y) -> Index {
        const std::array<long long, 2> key{std::llround(x / side * 2.0), std::llround(y / side * 2.0)};
        for (std::size_t i = 0; i < keys.size(); ++i)
            if (keys[i] == key) return i;
        keys.push_back(key);
        const std::array<double, 2> xy{x, y};
        coords.push_row(xy);
        return keys.size() - 1;
    };
    for (const auto& ll : lower_left) {
        const double x = ll[0], y = ll[1];
        const Index a = node_at(x, y), b = node_at(x + side, y), c = node_at(x + side, y + side),
                    d = node_at(x, y + side);
        const Index m = node_at(x + side / 2, y + side / 2);
        const std::array<std::array<Index, 3>, 4> tris{{{a, b, m}, {b, c, m}, {c, d, m}, {d, a, m}}};
        for (const auto& t : tris) elems.push_row(t);
    }
    return Mesh(std::move(coords), std::move(elems));
}

Mesh refine_times(Mesh mesh, unsigned level) {
    for (unsigned l = 0; l < level; ++l) mesh = uniform_refine(mesh);
    return mesh;
}

} // namespace

Mesh mesh_square(unsigned level) {
    return refine_times(crossed_squares({{0.0, 0.0}}, 1.0), level);
}

Mesh mesh_lshape(unsigned level) {
    const double h = 0.25;
    std::vector<std::array<double, 2>> squares{{0, 0}, {0, h}, {0, 2 * h}, {0, 3 * h},
                                                {h, 0}, {2 * h, 0}, {3 * h, 0}};
    return refine_times(crossed_squares(squares, h), level);
}

Mesh mesh_cube(unsigned level) {
    const std::size_t n = std::size_t{1} << level, m = n + 1;
    RealTable coords(m * m * m, 3);
    auto id = [m](std::size_t i, std::size_t j, std::size_t k) { return (k * m + j) * m + i; };
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < m; ++i) {
                const Index v = id(i, j, k);
                coords(v, 0) = static_cast<double>(i) / static_cast<double>(n);
                coords(v, 1) = static_cast<double>(j) / static_cast<double>(n);
                coords(v, 2) = static_cast<double>(k) / static_cast<double>(n);
            }
    IndexTable elems(0, 4);
    elems.data().reserve(6 * n * n * n * 4);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                kuhn_split(0u, [&](unsigned b) {
                    return id(i + (b & 1u), j + ((b >> 1) & 1u), k + ((b >> 2) & 1u));
                }, elems);
    orient_positive(coords, elems);
    return Mesh(std::move(coords), std::move(elems));
}

Mesh mesh_sphere(const SphereParams& params) {
    if (!(params.r > 0.0)) throw MeshError("mesh_sphere: radius must be positive");
    const std::size_t n = std::size_t{2} << params.level, m = n + 1;
    auto id = [m](std::size_t i, std::size_t j, std::size_t k) { return (k * m + j) * m + i; };
    auto grid = [n](std::size_t i) {
        return -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n);
    };
    RealTable coords(m * m * m, 3);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t i = 0; i < m; ++i) {
                const auto p = shell_to_sphere<3>({grid(i), grid(j), grid(k)});
                for (int c = 0; c < 3; ++c) coords(id(i, j, k), c) = params.r * p[c];
            }
    IndexTable elems(0, 4);
    elems.data().reserve(6 * n * n * n * 4);
    const std::size_t half = n / 2;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i) {
                // Start at the corner nearest the origin.
                const unsigned start = (i < half ? 1u : 0u) | (j < half ? 2u : 0u) |
                                       (k < half ? 4u : 0u);
                kuhn_split(start, [&](unsigned b) {
                    return id(i + (b & 1u), j + ((b >> 1) & 1u), k + ((b >> 2) & 1u));
                }, elems);
            }
    orient_positive(coords, elems);
    return Mesh(std::move(coords), std::move(elems));
}

Mesh mesh_torus(const TorusParams& params) {
    if (!(params.r > 0.0) || !(params.r < params.R))
        throw MeshError("mesh_torus: requires 0 < r < R");
    const std::size_t m = (std::size_t{1} << params.level) + 1;
    const std::size_t per_slice = m * m;
    const auto scaled = std::llround(std::numbers::pi * std::ldexp(1.0, static_cast<int>(params.level)));
    const std::size_t slices = 4 * static_cast<std::size_t>(std::max<long long>(4, scaled));

    // Cross-section nodes: (radial offset, x₂).
    std::vector<std::array<double, 2>> disk(per_slice);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double a = -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(m - 1);
            const double b = -1.0 + 2.0 * static_cast<double>(j) / static_cast<double>(m - 1);
            const auto p = shell_to_sphere<2>({a, b});
            disk[i * m + j] = {params.r * p[0], params.r * p[1]};
        }

    RealTable coords(slices * per_slice, 3);
    for (std::size_t s = 0; s < slices; ++s) {
        const double u = 2.0 * std::numbers::pi * static_cast<double>(s) / static_cast<double>(slices);
        const double cu = std::cos(u), su = std::sin(u);
        for (std::size_t q = 0; q < per_slice; ++q) {
            const double rad = params.R + disk[q][0];
            const Index v = s * per_slice + q;
            coords(v, 0) = rad * cu;
            coords(v, 1) = disk[q][1];
            coords(v, 2) = rad * su;
        }
    }

    std::vector<std::array<Index, 3>> tris;
    for (std::size_t i = 0; i + 1 < m; ++i)
        for (std::size_t j = 0; j + 1 < m; ++j) {
            const Index c00 = i * m + j, c10 = (i + 1) * m + j, c01 = i * m + j + 1,
                        c11 = (i + 1) * m + j + 1;
            tris.push_back({c00, c10, c11});
            tris.push_back({c00, c11, c01});
        }

    // Prism (b0 b1 b2 | t0 t1 t2): every quadrilateral side is cut along the
    // diagonal through its smallest global index, which keeps neighbouring
    // prisms conforming.
    IndexTable elems(0, 4);
    elems.data().reserve(slices * tris.size() * 3 * 4);
    for (std::size_t s = 0; s < slices; ++s) {
        const std::size_t next = (s + 1) % slices;
        for (const auto& t : tris) {
            std::array<Index, 3> b{s * per_slice + t[0], s * per_slice + t[1], s * per_slice + t[2]};
            std::array<Index, 3> top{next * per_slice + t[0], next * per_slice + t[1],
                                     next * per_slice + t[2]};
            std::size_t lowest = 0;
            Index best = b[0];
            for (std::size_t q = 0; q < 3; ++q) {
                if (b[q] < best) { best = b[q]; lowest = q; }
                if (top[q] < best) { best = top[q]; lowest = q + 3; }
            }
            if (lowest >= 3) { std::swap(b, top); lowest -= 3; }
            std::rotate(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(lowest), b.end());
            std::rotate(top.begin(), top.begin() + static_cast<std::ptrdiff_t>(lowest), top.end());
            if (std::min(b[1], top[2]) < std::min(b[2], top[1])) {
                elems.push_row(std::array<Index, 4>{b[0], b[1], b[2], top[2]});
                elems.push_row(std::array<Index, 4>{b[0], b[1], top[2], top[1]});
            } else {
                elems.push_row(std::array<Index, 4>{b[0], b[1], b[2], top[1]});
                elems.push_row(std::array<Index, 4>{b[0], top[1], b[2], top[2]});
            }
            elems.push_row(std::array<Index, 4>{b[0], top[1], top[2], top[0]});
        }
    }
    orient_positive(coords, elems);
    return Mesh(std::move(coords), std::move(elems));
}

} // namespace pagefem
