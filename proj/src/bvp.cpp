#include "pagefem/bvp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace pagefem {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

DirichletData mark_dirichlet(const Mesh& mesh, const PointPredicate& where, const PointFunction& value) {
    DirichletData d;
    for (Index v = 0; v < mesh.num_nodes(); ++v) {
        const auto x = mesh.coords().row(v);
        if (where(x)) {
            d.nodes.push_back(v);
            d.values.push_back(value(x));
        }
    }
    if (d.nodes.empty()) throw MeshError("mark_dirichlet: no node matches the boundary predicate");
    return d;
}

DirichletData mark_top_edge(const Mesh& mesh, const PointFunction& value) {
    return mark_dirichlet(mesh, [](std::span<const double> x) { return std::abs(x[1] - 1.0) <= 1e-12; },
                          value);
}

BvpSystem assemble(const BvpProblem& p) {
    return {stiffness_matrix(p.mesh, p.c_K, p.gqo), mass_matrix(p.mesh, p.c_M, p.gqo),
            rhs_vector(p.mesh, p.f, p.gqo)};
}

CgResult pcg(const SparseMatrix& a, std::span<const double> b, std::span<double> x,
             const CgOptions& options) {
    const std::size_t n = a.size();
    if (b.size() != n || x.size() != n) throw DimensionError("pcg: vector length mismatch");
    const std::size_t max_iter = options.max_iter ? options.max_iter : 10 * n;
    const double bnorm = std::sqrt(dot(b, b));
    if (bnorm == 0.0) {
        std::fill(x.begin(), x.end(), 0.0);
        return {0, 0.0};
    }
    std::vector<double> inv_diag = a.diagonal();
    for (double& d : inv_diag) {
        if (!(d > 0.0)) throw std::domain_error("pcg: non-positive diagonal entry");
        d = 1.0 / d;
    }
    std::vector<double> r(n), z(n), p(n), q(n);
    a.multiply(x, q);
    for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - q[i];
    for (std::size_t i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
    p = z;
    double rz = dot(r, z);
    double res = std::sqrt(dot(r, r)) / bnorm;
    std::size_t it = 0;
    while (res > options.rel_tol && it < max_iter) {
        a.multiply(p, q);
        const double pq = dot(p, q);
        if (!(pq > 0.0)) throw std::domain_error("pcg: matrix is not positive definite");
        const double alpha = rz / pq;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * q[i];
        }
        for (std::size_t i = 0; i < n; ++i) z[i] = inv_diag[i] * r[i];
        const double rz_new = dot(r, z);
        const double beta = rz_new / rz;
        rz = rz_new;
        for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
        res = std::sqrt(dot(r, r)) / bnorm;
        ++it;
    }
    if (res > options.rel_tol) throw ConvergenceError(it, res);
    return {it, res};
}

EnergyReport energies(const BvpSystem& s, const IndexTable& elems, std::span<const double> u) {
    const std::size_t n = s.K.matrix.size();
    if (u.size() != n || s.M.matrix.size() != n || s.b.vector.size() != n)
        throw DimensionError("energies: coefficient vector length mismatch");
    const std::size_t ne = elems.rows(), nlb = elems.cols();
    if (s.K.local.pages() != ne || s.K.local.rows() != nlb)
        throw DimensionError("energies: local matrices do not match the connectivity");
    EnergyReport rep;
    rep.global.J1 = 0.5 * s.K.matrix.quadratic_form(u);
    rep.global.J2 = 0.5 * s.M.matrix.quadratic_form(u);
    rep.global.J3 = -dot(s.b.vector, u);
    rep.global.J = rep.global.J1 + rep.global.J2 + rep.global.J3;

    rep.local.resize(ne);
    std::vector<double> uk(nlb);
    for (std::size_t k = 0; k < ne; ++k) {
        for (std::size_t a = 0; a < nlb; ++a) uk[a] = u[elems(k, a)];
        double kk = 0.0, mm = 0.0, bb = 0.0;
        for (std::size_t a = 0; a < nlb; ++a) {
            double ka = 0.0, ma = 0.0;
            for (std::size_t c = 0; c < nlb; ++c) {
                ka += s.K.local(a, c, k) * uk[c];
                ma += s.M.local(a, c, k) * uk[c];
            }
            kk += uk[a] * ka;
            mm += uk[a] * ma;
            bb += s.b.local(k, a) * uk[a];
        }
        auto& e = rep.local[k];
        e.J1 = 0.5 * kk;
        e.J2 = 0.5 * mm;
        e.J3 = -bb;
        e.J = e.J1 + e.J2 + e.J3;
    }
    return rep;
}

BvpSolution solve_bvp(const BvpProblem& p, const CgOptions& options) {
    const std::size_t n = p.mesh.num_nodes();
    const auto& dn = p.dirichlet.nodes;
    if (dn.empty()) throw MeshError("solve_bvp: no Dirichlet nodes");
    if (dn.size() != p.dirichlet.values.size())
        throw DimensionError("solve_bvp: Dirichlet nodes and values differ in length");

    std::vector<char> fixed(n, 0);
    std::vector<double> u(n, 0.0);
    for (std::size_t i = 0; i < dn.size(); ++i) {
        if (dn[i] >= n) throw MeshError("solve_bvp: Dirichlet node out of range");
        if (!std::isfinite(p.dirichlet.values[i]))
            throw std::domain_error("solve_bvp: non-finite Dirichlet value");
        fixed[dn[i]] = 1;
        u[dn[i]] = p.dirichlet.values[i];
    }
    std::vector<Index> free;
    for (Index v = 0; v < n; ++v)
        if (!fixed[v]) free.push_back(v);

    BvpSystem sys = assemble(p);
    const SparseMatrix a = sys.K.matrix + sys.M.matrix;

    // Lifting: b_f − A_fd u_D, where u holds u_D on fixed nodes and 0 elsewhere.
    const auto lift = a * std::span<const double>(u);
    std::vector<double> rhs(free.size()), uf(free.size(), 0.0);
    for (std::size_t i = 0; i < free.size(); ++i) rhs[i] = sys.b.vector[free[i]] - lift[free[i]];

    BvpSolution sol;
    if (!free.empty()) sol.solver = pcg(a.submatrix(free), rhs, uf, options);
    for (std::size_t i = 0; i < free.size(); ++i) u[free[i]] = uf[i];
    sol.energy = energies(sys, p.mesh.elems(), u);
    sol.u = std::move(u);
    return sol;
}

void write_solution(std::ostream& os, std::span<const double> u) {
    char buf[64];
    for (double x : u) {
        std::snprintf(buf, sizeof buf, "%.17g\n", x);
        os << buf;
    }
}

void write_energy_header(std::ostream& os) {
    os << "level,elements,nodes,J1,J2,J3,J,iterations,residual\n";
}

void write_energy_row(std::ostream& os, unsigned level, const Mesh& mesh, const BvpSolution& s) {
    char buf[256];
    const auto& e = s.energy.global;
    std::snprintf(buf, sizeof buf, "%u,%zu,%zu,%.17g,%.17g,%.17g,%.17g,%zu,%.17g\n", level,
                  mesh.num_elems(), mesh.num_nodes(), e.J1, e.J2, e.J3, e.J, s.solver.iterations,
                  s.solver.residual);
    os << buf;
}

} // namespace pagefem
