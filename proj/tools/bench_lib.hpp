#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pagefem/bvp.hpp"

namespace bench {

struct Options {
    std::optional<unsigned> min_level;
    std::optional<unsigned> max_level;
    std::optional<pagefem::ElementType> etype;
    unsigned gqo = 0;  // 0: benchmark default
    std::string mesh_out;
    std::string mm_out;  // prefix for K.mtx, M.mtx, b.mtx
};

struct Column {
    enum class Kind { Count, Value, Time };
    std::string name;
    Kind kind;
};

struct Report {
    std::string title;
    std::vector<Column> columns;
    std::vector<std::vector<double>> rows;

    std::string to_csv() const;
    std::string to_text() const;
    /// Row cells excluding timings, for reproducibility checks.
    std::vector<std::vector<double>> deterministic_cells() const;
};

/// Raised for bad benchmark ids or levels outside the supported range.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Benchmarks: 1 sphere volumes, 2 sphere faces/normals, 3 torus I₁ (volume),
/// 4 torus I₁ (surface), 5 2D stiffness/mass, 6 3D stiffness/mass,
/// 7 L-shape boundary value problem.
Report run_benchmark(int id, const Options& options = {});

/// Best wall time of `reps` runs, in seconds.
double timeit(const std::function<void()>& op, int reps = 3);

/// The mixed boundary value problem on the L-shape whose exact solution is
/// cos(4πx₁)cos(4πx₂); Dirichlet data on the top edge.
pagefem::BvpProblem lshape_problem(unsigned level, pagefem::ElementType etype);

/// Reference values used by the error columns.
namespace exact {
double sphere_volume();
double torus_inertia();
inline constexpr double kIK2 = 14.56107395347731416;
inline constexpr double kIM2 = 0.70210363820376931933;
inline constexpr double kIK3 = 19.228602490717644615;
inline constexpr double kIM3 = 0.68232167004118637252;
inline constexpr double kJ = -14.903021707959;
} // namespace exact

} // namespace bench
