#include "bench_lib.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include "pagefem/assembly.hpp"
#include "pagefem/geometry.hpp"
#include "pagefem/integrate.hpp"

namespace bench {

using namespace pagefem;
using std::numbers::pi;

namespace exact {
double sphere_volume() { return 4.0 * pi / 3.0; }
double torus_inertia() { return 2645.0 / 131072.0 * pi * pi; }
} // namespace exact

namespace {

using Kind = Column::Kind;

// Scalar field from a pointwise function of the coordinates.
template <class F>
Field pointwise(F fn) {
    return [fn](const PageArray& x) {
        PageArray out(1, x.cols(), x.pages());
        const std::size_t dim = x.rows();
        double p[3] = {0, 0, 0};
        for (std::size_t k = 0; k < x.pages(); ++k)
            for (std::size_t i = 0; i < x.cols(); ++i) {
                for (std::size_t r = 0; r < dim; ++r) p[r] = x(r, i, k);
                out(0, i, k) = fn(p);
            }
        return out;
    };
}

struct LevelRange {
    unsigned lo, hi;
};

LevelRange levels(const Options& o, unsigned lo, unsigned hi, unsigned cap) {
    LevelRange r{o.min_level.value_or(lo), o.max_level.value_or(hi)};
    if (o.max_level && !o.min_level) r.lo = std::min(lo, r.hi);
    if (r.hi > cap)
        throw UsageError("level " + std::to_string(r.hi) + " exceeds the cap " + std::to_string(cap) +
                         " for this benchmark");
    if (r.lo > r.hi) throw UsageError("min level exceeds max level");
    return r;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void save_mesh(const Options& o, const Mesh& m) {
    if (o.mesh_out.empty()) return;
    std::ofstream os(o.mesh_out);
    if (!os) throw std::runtime_error("cannot write " + o.mesh_out);
    write_mesh(os, m);
}

void save_mm(const std::string& path, const SparseMatrix& a) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    write_matrix_market(os, a);
}

void save_mm(const std::string& path, const std::vector<double>& v) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    write_matrix_market(os, v);
}

Report sphere_volumes(const Options& o) {
    const auto lv = levels(o, 1, 4, 5);
    Report r{"sphere volumes",
             {{"level", Kind::Count}, {"elements", Kind::Count}, {"nodes", Kind::Count},
              {"volume", Kind::Value}, {"error", Kind::Value}, {"mesh [s]", Kind::Time},
              {"volume [s]", Kind::Time}},
             {}};
    for (unsigned l = lv.lo; l <= lv.hi; ++l) {
        Mesh m;
        const double tm = timeit([&] { m = mesh_sphere({l, 1.0}); });
        double vol = 0.0;
        const double tv = timeit([&] { vol = element_volumes(create_coords3D(m).vectors3D).total; });
        r.rows.push_back({double(l), double(m.num_elems()), double(m.num_nodes()), vol,
                          std::abs(vol - exact::sphere_volume()), tm, tv});
        if (l == lv.hi) save_mesh(o, m);
    }
    return r;
}

Report sphere_normals(const Options& o) {
    const auto lv = levels(o, 1, 4, 5);
    Report r{"sphere faces and normals",
             {{"level", Kind::Count}, {"elements", Kind::Count}, {"nodes", Kind::Count},
              {"all faces", Kind::Count}, {"boundary faces", Kind::Count},
              {"flux residual", Kind::Value}, {"faces [s]", Kind::Time},
              {"normals [s]", Kind::Time}},
             {}};
    for (unsigned l = lv.lo; l <= lv.hi; ++l) {
        const Mesh m = mesh_sphere({l, 1.0});
        std::size_t all = 0;
        const double tf = timeit([&] { all = count_all_faces(m); });
        BoundaryFaces b;
        RealTable n;
        const double tn = timeit([&] {
            b = extract_boundary(m);
            n = boundary_normals(m, b);
        });
        // ∮ n dS vanishes on a closed surface.
        double flux[3] = {0, 0, 0};
        for (std::size_t f = 0; f < n.rows(); ++f)
            for (int c = 0; c < 3; ++c) flux[c] += b.areas[f] * n(f, c);
        const double res = std::sqrt(flux[0] * flux[0] + flux[1] * flux[1] + flux[2] * flux[2]);
        r.rows.push_back({double(l), double(m.num_elems()), double(m.num_nodes()), double(all),
                          double(b.faces.rows()), res, tf, tn});
        if (l == lv.hi) save_mesh(o, m);
    }
    return r;
}

Field torus_density() {
    return pointwise([](const double* x) {
        return (x[0] * x[0] + x[1] * x[1]) * (x[1] * x[1] + x[2] * x[2]);
    });
}

Field torus_flux() {
    return [](const PageArray& x) {
        PageArray out(3, x.cols(), x.pages());
        for (std::size_t k = 0; k < x.pages(); ++k)
            for (std::size_t i = 0; i < x.cols(); ++i) {
                const double a = x(0, i, k), b = x(1, i, k), c = x(2, i, k);
                out(0, i, k) = a * a * a * (b * b + c * c) / 3.0;
                out(1, i, k) = b * b * b * b * b / 5.0;
                out(2, i, k) = b * b * c * c * c / 3.0;
            }
        return out;
    };
}

Report torus(const Options& o, bool surface) {
    const auto lv = levels(o, 0, 3, 4);
    const unsigned gqo = o.gqo ? o.gqo : 4;
    Report r{surface ? "torus inertia, surface form" : "torus inertia, volume form",
             {{"level", Kind::Count},
              {surface ? "boundary faces" : "elements", Kind::Count},
              {"nodes", Kind::Count},
              {"I1", Kind::Value},
              {"error", Kind::Value},
              {"mesh [s]", Kind::Time},
              {"integral [s]", Kind::Time}},
             {}};
    for (unsigned l = lv.lo; l <= lv.hi; ++l) {
        Mesh m;
        const double tm = timeit([&] { m = mesh_torus({l, 1.0, 0.25}); });
        double value = 0.0;
        std::size_t count = m.num_elems();
        const double ti = timeit([&] {
            value = surface ? surface_integral(m, torus_flux(), gqo)
                            : volume_integral(m, torus_density(), gqo);
        });
        if (surface) count = extract_boundary(m).faces.rows();
        r.rows.push_back({double(l), double(count), double(m.num_nodes()), value,
                          std::abs(value - exact::torus_inertia()), tm, ti});
        if (l == lv.hi) save_mesh(o, m);
    }
    return r;
}

std::vector<double> interpolate(const Mesh& m, double (*v)(const double*)) {
    std::vector<double> out(m.num_nodes());
    for (std::size_t i = 0; i < m.num_nodes(); ++i) out[i] = v(m.coords().row(i).data());
    return out;
}

double v2(const double* x) { return std::sin(pi * x[0]) * std::sin(pi * x[1]); }
double v3(const double* x) {
    return std::cos(pi * x[0]) * std::cos(pi * x[1]) * std::cos(pi * x[2]);
}

Report quadratic_forms(const Options& o, std::size_t dim) {
    const ElementType et = o.etype.value_or(ElementType::P1);
    const bool p1 = et == ElementType::P1;
    const auto lv = dim == 2 ? levels(o, 1, p1 ? 8 : 7, p1 ? 10 : 9)
                             : levels(o, 1, p1 ? 5 : 4, p1 ? 6 : 5);
    const double ik = dim == 2 ? exact::kIK2 : exact::kIK3;
    const double im = dim == 2 ? exact::kIM2 : exact::kIM3;
    const Field c = dim == 2 ? pointwise([](const double* x) { return std::exp(x[0] + x[1]); })
                             : pointwise([](const double* x) { return std::exp(x[0] + x[1] + x[2]); });
    Report r{std::string(dim == 2 ? "2D " : "3D ") + std::string(to_string(et)) +
                 " stiffness and mass",
             {{"level", Kind::Count}, {"elements", Kind::Count}, {"size", Kind::Count},
              {"vKv", Kind::Value}, {"vMv", Kind::Value}, {"e_K", Kind::Value},
              {"e_M", Kind::Value}, {"K [s]", Kind::Time}, {"M [s]", Kind::Time}},
             {}};
    for (unsigned l = lv.lo; l <= lv.hi; ++l) {
        Mesh m = dim == 2 ? mesh_square(l) : mesh_cube(l);
        if (!p1) m = augment_p2(m);
        const auto v = interpolate(m, dim == 2 ? v2 : v3);
        Assembled k, mm;
        const double tk = timeit([&] { k = stiffness_matrix(m, c, o.gqo); });
        const double tmm = timeit([&] { mm = mass_matrix(m, c, o.gqo); });
        const double vk = k.matrix.quadratic_form(v), vm = mm.matrix.quadratic_form(v);
        r.rows.push_back({double(l), double(m.num_elems()), double(m.num_nodes()), vk, vm,
                          std::abs(vk - ik), std::abs(vm - im), tk, tmm});
        if (l == lv.hi) {
            save_mesh(o, m);
            if (!o.mm_out.empty()) {
                save_mm(o.mm_out + "K.mtx", k.matrix);
                save_mm(o.mm_out + "M.mtx", mm.matrix);
            }
        }
    }
    return r;
}

Report lshape_bvp(const Options& o) {
    const ElementType et = o.etype.value_or(ElementType::P2);
    const auto lv = levels(o, 1, 4, 5);
    Report r{"L-shape boundary value problem, " + std::string(to_string(et)),
             {{"level", Kind::Count}, {"elements", Kind::Count}, {"nodes", Kind::Count},
              {"J1", Kind::Value}, {"J2", Kind::Value}, {"J3", Kind::Value}, {"J", Kind::Value},
              {"error", Kind::Value}, {"iterations", Kind::Count}, {"residual", Kind::Value},
              {"solve [s]", Kind::Time}},
             {}};
    for (unsigned l = lv.lo; l <= lv.hi; ++l) {
        BvpProblem p = lshape_problem(l, et);
        p.gqo = o.gqo;
        const auto t0 = std::chrono::steady_clock::now();
        const BvpSolution s = solve_bvp(p);
        const double ts = seconds_since(t0);
        const auto& e = s.energy.global;
        r.rows.push_back({double(l), double(p.mesh.num_elems()), double(p.mesh.num_nodes()), e.J1,
                          e.J2, e.J3, e.J, std::abs(e.J - exact::kJ), double(s.solver.iterations),
                          s.solver.residual, ts});
        if (l == lv.hi) {
            save_mesh(o, p.mesh);
            if (!o.mm_out.empty()) {
                const auto sys = assemble(p);
                save_mm(o.mm_out + "K.mtx", sys.K.matrix);
                save_mm(o.mm_out + "M.mtx", sys.M.matrix);
                save_mm(o.mm_out + "b.mtx", sys.b.vector);
            }
        }
    }
    return r;
}

std::string format_cell(double v, Kind kind, bool csv) {
    char buf[64];
    if (kind == Kind::Count)
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
    else if (kind == Kind::Time)
        std::snprintf(buf, sizeof buf, csv ? "%.6e" : "%.2e", v);
    else
        std::snprintf(buf, sizeof buf, csv ? "%.17g" : "%.10g", v);
    return buf;
}

} // namespace

BvpProblem lshape_problem(unsigned level, ElementType etype) {
    Mesh m = mesh_lshape(level);
    if (etype == ElementType::P2) m = augment_p2(m);
    BvpProblem p;
    p.c_K = pointwise([](const double* x) { return 1.0 + x[0] * x[0] - x[1]; });
    p.c_M = pointwise([](const double* x) { return 1.0 - x[0] + x[1] * x[1]; });
    p.f = pointwise([](const double* x) {
        const double s1 = std::sin(4 * pi * x[0]), c1 = std::cos(4 * pi * x[0]);
        const double s2 = std::sin(4 * pi * x[1]), c2 = std::cos(4 * pi * x[1]);
        return 8 * pi * x[0] * s1 * c2 +
               c1 * (-4 * pi * s2 +
                     (1 - x[0] + 32 * pi * pi * (1 + x[0] * x[0] - x[1]) + x[1] * x[1]) * c2);
    });
    p.dirichlet = mark_top_edge(m, [](std::span<const double> x) { return std::cos(4 * pi * x[0]); });
    p.mesh = std::move(m);
    return p;
}

std::string Report::to_csv() const {
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) out += (c ? "," : "") + columns[c].name;
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < columns.size(); ++c)
            out += (c ? "," : "") + format_cell(row[c], columns[c].kind, true);
        out += '\n';
    }
    return out;
}

std::string Report::to_text() const {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].name.size();
    for (const auto& row : rows) {
        cells.emplace_back();
        for (std::size_t c = 0; c < columns.size(); ++c) {
            cells.back().push_back(format_cell(row[c], columns[c].kind, false));
            width[c] = std::max(width[c], cells.back().back().size());
        }
    }
    std::ostringstream os;
    os << title << '\n';
    auto line = [&](auto&& get) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const std::string s = get(c);
            os << (c ? "  " : "") << std::string(width[c] - s.size(), ' ') << s;
        }
        os << '\n';
    };
    line([&](std::size_t c) { return columns[c].name; });
    for (const auto& row : cells) line([&](std::size_t c) { return row[c]; });
    return os.str();
}

std::vector<std::vector<double>> Report::deterministic_cells() const {
    std::vector<std::vector<double>> out;
    for (const auto& row : rows) {
        out.emplace_back();
        for (std::size_t c = 0; c < columns.size(); ++c)
            if (columns[c].kind != Kind::Time) out.back().push_back(row[c]);
    }
    return out;
}

Report run_benchmark(int id, const Options& o) {
    switch (id) {
    case 1:
        return sphere_volumes(o);
    case 2:
        return sphere_normals(o);
    case 3:
        return torus(o, false);
    case 4:
        return torus(o, true);
    case 5:
        return quadratic_forms(o, 2);
    case 6:
        return quadratic_forms(o, 3);
    case 7:
        return lshape_bvp(o);
    default:
        throw UsageError("unknown benchmark id " + std::to_string(id) + " (expected 1..7)");
    }
}

double timeit(const std::function<void()>& op, int reps) {
    double best = 0.0;
    for (int i = 0; i < std::max(reps, 1); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        op();
        const double t = seconds_since(t0);
        if (i == 0 || t < best) best = t;
    }
    return best;
}

} // namespace bench
