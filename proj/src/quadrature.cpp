#include "pagefem/quadrature.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <cmath>
#include <string>

namespace pagefem {

namespace {

// Builds a rule from barycentric points (dim+1 coordinates each; the first
// is the weight of vertex 0 and is dropped).
class RuleBuilder {
public:
    explicit RuleBuilder(std::size_t dim) : dim_(dim) {}

    void add(std::initializer_list<double> bary, double w) {
        pts_.emplace_back(bary.begin() + 1, bary.end());
        w_.push_back(w);
    }

    // All distinct permutations of (a, b, b, …) or (a, a, b, b) style tuples.
    void add_orbit(std::vector<double> bary, double w) {
        std::sort(bary.begin(), bary.end());
        do {
            pts_.emplace_back(bary.begin() + 1, bary.end());
            w_.push_back(w);
        } while (std::next_permutation(bary.begin(), bary.end()));
    }

    QuadratureRule finish(unsigned order) const {
        QuadratureRule r;
        r.dim = dim_;
        r.order = order;
        r.ip = Matrix(dim_, pts_.size());
        for (std::size_t j = 0; j < pts_.size(); ++j)
            for (std::size_t i = 0; i < dim_; ++i) r.ip(i, j) = pts_[j][i];
        r.w = w_;
        return r;
    }

private:
    std::size_t dim_;
    std::vector<std::vector<double>> pts_;
    std::vector<double> w_;
};

QuadratureRule rule_1d(unsigned order) {
    RuleBuilder b(1);
    if (order <= 1) {
        b.add({0.5, 0.5}, 1.0);
    } else if (order <= 3) {
        const double h = 0.5 / std::sqrt(3.0);
        b.add({0.5 + h, 0.5 - h}, 0.5);
        b.add({0.5 - h, 0.5 + h}, 0.5);
    } else {
        const double h = 0.5 * std::sqrt(0.6);
        b.add({0.5 + h, 0.5 - h}, 5.0 / 18.0);
        b.add({0.5, 0.5}, 8.0 / 18.0);
        b.add({0.5 - h, 0.5 + h}, 5.0 / 18.0);
    }
    return b.finish(order);
}

QuadratureRule rule_2d(unsigned order) {
    RuleBuilder b(2);
    const double third = 1.0 / 3.0;
    switch (order) {
    case 1:
        b.add({third, third, third}, 0.5);
        break;
    case 2:
        b.add_orbit({2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0}, 1.0 / 6.0);
        break;
    case 3:
        b.add({third, third, third}, -27.0 / 96.0);
        b.add_orbit({0.6, 0.2, 0.2}, 25.0 / 96.0);
        break;
    default: {
        const double a = 0.445948490915964886318329253883;
        const double c = 0.091576213509770743459571463402;
        b.add_orbit({1.0 - 2.0 * a, a, a}, 0.111690794839005732847503504216);
        b.add_orbit({1.0 - 2.0 * c, c, c}, 0.054975871827660933819163162450);
        break;
    }
    }
    return b.finish(order);
}

QuadratureRule rule_3d(unsigned order) {
    RuleBuilder b(3);
    switch (order) {
    case 1:
        b.add({0.25, 0.25, 0.25, 0.25}, 1.0 / 6.0);
        break;
    case 2: {
        const double a = (5.0 - std::sqrt(5.0)) / 20.0;
        b.add_orbit({1.0 - 3.0 * a, a, a, a}, 1.0 / 24.0);
        break;
    }
    case 3:
        b.add({0.25, 0.25, 0.25, 0.25}, -2.0 / 15.0);
        b.add_orbit({0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0}, 3.0 / 40.0);
        break;
    default: {
        b.add({0.25, 0.25, 0.25, 0.25}, -74.0 / 5625.0);
        b.add_orbit({11.0 / 14.0, 1.0 / 14.0, 1.0 / 14.0, 1.0 / 14.0}, 343.0 / 45000.0);
        const double r = std::sqrt(5.0 / 14.0);
        const double s = (1.0 + r) / 4.0, t = (1.0 - r) / 4.0;
        b.add_orbit({s, s, t, t}, 56.0 / 2250.0);
        break;
    }
    }
    return b.finish(order);
}

} // namespace

double reference_measure(std::size_t dim) {
    double f = 1.0;
    for (std::size_t i = 2; i <= dim; ++i) f *= static_cast<double>(i);
    return 1.0 / f;
}

QuadratureRule gauss_points(unsigned order, std::size_t dim) {
    if (order < 1 || order > 4)
        throw std::invalid_argument("gauss_points: order " + std::to_string(order) +
                                    " unsupported (1..4)");
    switch (dim) {
    case 1:
        return rule_1d(order);
    case 2:
        return rule_2d(order);
    case 3:
        return rule_3d(order);
    default:
        throw std::invalid_argument("gauss_points: dimension " + std::to_string(dim) +
                                    " unsupported (1..3)");
    }
}

} // namespace pagefem
