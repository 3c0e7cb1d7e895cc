#pragma once

#include "mcbvp/problem.hpp"

#include <functional>
#include <string>
#include <variant>
#include <vector>

namespace mcbvp {

/// A published accuracy figure: maximum absolute error at truncation n.
struct ReferenceAccuracy {
    int n;
    double mae;
};

/// A published pointwise absolute error at a sample coordinate.
struct ReferencePointError {
    double coord;
    double ae;
};

/// A built-in benchmark problem: the BVP itself, its closed-form solution,
/// and the accuracy figures reported for this method in the literature.
/// The problem is constructed from the same JSON document problem_json()
/// returns, so fixtures and the file format cannot drift apart.
struct BuiltinExample {
    int id = 0;
    std::string title;
    std::variant<LinearBvp, NonlinearBvp> problem;
    std::string exact_text;
    std::function<double(double)> exact;
    std::function<double(int, double)> exact_derivative;  // (k, x) -> y^(k)(x)
    std::vector<ReferenceAccuracy> reference_mae;
    std::vector<ReferencePointError> reference_ae_n10;  // populated for ids 1 and 4
    std::string document;  // the JSON problem file this fixture was built from

    int order() const;
    bool is_nonlinear() const;
    const std::vector<BoundaryCondition>& conditions() const;
    const std::string& problem_json() const { return document; }
};

inline constexpr int builtin_count = 5;

/// The five built-in benchmark problems, ids 1..5:
///   1  nonlinear fourth order, exact ln(1.5 + 0.5 z)
///   2  linear third order, exact (1/4)(1 - z^2) e^{(z+1)/2}
///   3  linear sixth order, exact (z^2 - 1) sin z
///   4  linear ninth order, exact (1/2)(1 - z) e^{(z+1)/2}
///   5  linear twelfth order, exact (1/4)(1 - z^2) e^{(z+1)/2}
BuiltinExample builtin(int id);

}  // namespace mcbvp
