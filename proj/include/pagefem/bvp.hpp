#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

#include "pagefem/assembly.hpp"

namespace pagefem {

using PointPredicate = std::function<bool(std::span<const double>)>;
using PointFunction = std::function<double(std::span<const double>)>;

struct DirichletData {
    std::vector<Index> nodes;    // ascending
    std::vector<double> values;  // u_D at those nodes
};

/// Nodes whose coordinates satisfy `where`, with `value` evaluated there.
/// Throws MeshError when nothing matches.
DirichletData mark_dirichlet(const Mesh& mesh, const PointPredicate& where, const PointFunction& value);

/// Nodes on the edge x₂ = 1 (within 1e-12).
DirichletData mark_top_edge(const Mesh& mesh, const PointFunction& value);

/// −∇·(c_K ∇u) + c_M u = f with u = u_D on the Dirichlet nodes and zero flux
/// elsewhere.
struct BvpProblem {
    Mesh mesh;
    Field c_K;
    Field c_M;
    Field f;
    DirichletData dirichlet;
    unsigned gqo = 0;  // 0: default for the element type
};

struct BvpSystem {
    Assembled K;
    Assembled M;
    AssembledVector b;
};

BvpSystem assemble(const BvpProblem& problem);

struct CgOptions {
    double rel_tol = 1e-10;
    std::size_t max_iter = 0;  // 0: 10·n
};

struct CgResult {
    std::size_t iterations = 0;
    double residual = 0.0;  // ‖r‖ / ‖b‖ at exit
};

/// Jacobi-preconditioned conjugate gradients for an SPD matrix. `x` holds the
/// initial guess. Throws ConvergenceError when the tolerance is not reached.
CgResult pcg(const SparseMatrix& a, std::span<const double> b, std::span<double> x,
             const CgOptions& options = {});

struct Energies {
    double J1 = 0.0;  // ½ ũᵀKũ
    double J2 = 0.0;  // ½ ũᵀMũ
    double J3 = 0.0;  // −bᵀũ
    double J = 0.0;
};

struct EnergyReport {
    Energies global;
    std::vector<Energies> local;  // per element, from the local matrices
};

EnergyReport energies(const BvpSystem& system, const IndexTable& elems, std::span<const double> u);

struct BvpSolution {
    std::vector<double> u;
    EnergyReport energy;
    CgResult solver;
};

/// Eliminates the Dirichlet nodes and solves (K + M) ũ = b on the free ones.
BvpSolution solve_bvp(const BvpProblem& problem, const CgOptions& options = {});

/// One value per line with 17 significant digits.
void write_solution(std::ostream& os, std::span<const double> u);

/// CSV with header level,elements,nodes,J1,J2,J3,J,iterations,residual.
void write_energy_header(std::ostream& os);
void write_energy_row(std::ostream& os, unsigned level, const Mesh& mesh, const BvpSolution& s);

} // namespace pagefem
