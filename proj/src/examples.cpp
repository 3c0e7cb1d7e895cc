#include "mcbvp/examples.hpp"

#include "mcbvp/problem_io.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace mcbvp {

int BuiltinExample::order() const {
    return std::visit([](const auto& p) { return p.order; }, problem);
}

bool BuiltinExample::is_nonlinear() const {
    return std::holds_alternative<NonlinearBvp>(problem);
}

const std::vector<BoundaryCondition>& BuiltinExample::conditions() const {
    return std::visit(
        [](const auto& p) -> const std::vector<BoundaryCondition>& { return p.conditions; },
        problem);
}

namespace {

BuiltinExample from_document(int id, const char* title, const char* exact_text,
                             const char* document) {
    BuiltinExample ex;
    ex.id = id;
    ex.title = title;
    ex.exact_text = exact_text;
    ex.document = document;
    ProblemSpec spec = load_problem_json(ex.document);
    ex.problem = std::move(spec.problem);
    return ex;
}

/// k-th derivative of p(z) e^{(z+1)/2} for a quadratic p, by the Leibniz rule:
/// e^{(z+1)/2} (2^-k p + k 2^{1-k} p' / 2 ... ) collapsed to the three
/// surviving terms.
double quadratic_times_exponential_derivative(int k, double z, double p, double dp, double ddp) {
    const double half_pow_k = std::pow(0.5, k);
    double value = half_pow_k * p;
    if (k >= 1) value += k * std::pow(0.5, k - 1) * dp;
    if (k >= 2) value += 0.5 * k * (k - 1) * std::pow(0.5, k - 2) * ddp;
    return value * std::exp(0.5 * (z + 1.0));
}

BuiltinExample make_example_1() {
    BuiltinExample ex = from_document(
        1, "nonlinear fourth order, logarithmic solution", "ln(1.5 + 0.5*z)",
        R"json({
  "order": 4,
  "interval": [-1, 1],
  "kind": "nonlinear",
  "residual": "16*y4 - 6*exp(-4*y0)",
  "rhs": "-12*(1.5 + 0.5*z)^(-4)",
  "conditions": [
    {"endpoint": "left", "q": 0, "value": 0},
    {"endpoint": "right", "q": 0, "value": "ln(2)"},
    {"endpoint": "left", "q": 1, "value": 0.5},
    {"endpoint": "right", "q": 1, "value": 0.25}
  ],
  "exact": "ln(1.5 + 0.5*z)"
})json");

    // Analytic partials switch Newton onto the exact-Jacobian path.
    auto& nonlinear = std::get<NonlinearBvp>(ex.problem);
    nonlinear.partials.assign(5, [](double, std::span<const double>) { return 0.0; });
    nonlinear.partials[0] = [](double, std::span<const double> y) {
        return 24.0 * std::exp(-4.0 * y[0]);
    };
    nonlinear.partials[4] = [](double, std::span<const double>) { return 16.0; };

    ex.exact = [](double z) { return std::log(1.5 + 0.5 * z); };
    ex.exact_derivative = [](int k, double z) {
        if (k == 0) return std::log(1.5 + 0.5 * z);
        double factorial = 1.0;
        for (int i = 2; i < k; ++i) factorial *= i;
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;
        return sign * factorial * std::pow(0.5, k) * std::pow(1.5 + 0.5 * z, -k);
    };
    ex.reference_mae = {{10, 7.5991e-05}, {12, 3.5789e-07}, {14, 1.2290e-09},
                        {16, 3.5426e-12}, {18, 1.5099e-14}, {20, 4.4409e-16}};
    ex.reference_ae_n10 = {{-1.0, 2.098641e-05}, {-0.8, 4.570342e-05}, {-0.6, 5.241534e-05},
                           {-0.4, 4.507148e-05}, {-0.2, 2.766681e-05}, {0.0, 4.099373e-06},
                           {0.2, 2.186930e-05},  {0.4, 4.645491e-05},  {0.6, 6.574845e-05},
                           {0.8, 7.581684e-05},  {1.0, 7.280400e-05}};
    return ex;
}

BuiltinExample make_example_2() {
    BuiltinExample ex = from_document(
        2, "linear third order, variable coefficient", "0.25*(1 - z^2)*exp(0.5*(z + 1))",
        R"json({
  "order": 3,
  "interval": [-1, 1],
  "kind": "linear",
  "coefficients": ["8", "0", "0", "-0.5*(z + 1)"],
  "rhs": "(0.125*(z + 1)^3 - 0.5*(z + 1)^2 - 2.5*(z + 1) - 3)*exp(0.5*(z + 1))",
  "conditions": [
    {"endpoint": "left", "q": 0, "value": 0},
    {"endpoint": "right", "q": 0, "value": 0},
    {"endpoint": "left", "q": 1, "value": 0.5}
  ],
  "exact": "0.25*(1 - z^2)*exp(0.5*(z + 1))"
})json");

    ex.exact = [](double z) { return 0.25 * (1.0 - z * z) * std::exp(0.5 * (z + 1.0)); };
    ex.exact_derivative = [](int k, double z) {
        return quadratic_times_exponential_derivative(k, z, 0.25 * (1.0 - z * z), -0.5 * z,
                                                      -0.5);
    };
    ex.reference_mae = {{6, 2.563e-04},  {9, 2.809e-08},  {10, 9.966e-10},
                        {12, 8.312e-13}, {14, 4.441e-16}, {15, 1.110e-16}};
    return ex;
}

BuiltinExample make_example_3() {
    BuiltinExample ex = from_document(
        3, "linear sixth order, oscillatory solution", "(z^2 - 1)*sin(z)",
        R"json({
  "order": 6,
  "interval": [-1, 1],
  "kind": "linear",
  "coefficients": ["1", "0", "0", "0", "0", "0", "1"],
  "rhs": "12*z*cos(z) + 30*sin(z)",
  "conditions": [
    {"endpoint": "left", "q": 0, "value": 0},
    {"endpoint": "right", "q": 0, "value": 0},
    {"endpoint": "left", "q": 1, "value": "2*sin(1)"},
    {"endpoint": "right", "q": 1, "value": "2*sin(1)"},
    {"endpoint": "left", "q": 2, "value": "-4*cos(1) - 2*sin(1)"},
    {"endpoint": "right", "q": 2, "value": "4*cos(1) + 2*sin(1)"}
  ],
  "exact": "(z^2 - 1)*sin(z)"
})json");

    ex.exact = [](double z) { return (z * z - 1.0) * std::sin(z); };
    ex.exact_derivative = [](int k, double z) {
        // Leibniz rule on (z^2 - 1) sin z; sin picks up a quarter turn per
        // derivative.
        const double half_pi = 0.5 * std::numbers::pi;
        double value = (z * z - 1.0) * std::sin(z + k * half_pi);
        if (k >= 1) value += 2.0 * k * z * std::sin(z + (k - 1) * half_pi);
        if (k >= 2) value += k * (k - 1) * std::sin(z + (k - 2) * half_pi);
        return value;
    };
    ex.reference_mae = {{12, 3.163e-09}, {15, 4.235e-14}, {16, 1.920e-14},
                        {17, 4.996e-16}, {20, 3.330e-16}, {24, 6.106e-16}};
    return ex;
}

BuiltinExample make_example_4() {
    BuiltinExample ex = from_document(
        4, "linear ninth order, exponential solution", "0.5*(1 - z)*exp(0.5*(z + 1))",
        R"json({
  "order": 9,
  "interval": [-1, 1],
  "kind": "linear",
  "coefficients": ["512", "0", "0", "0", "0", "0", "0", "0", "0", "-1"],
  "rhs": "-9*exp(0.5*(z + 1))",
  "conditions": [
    {"endpoint": "left", "q": 0, "value": 1},
    {"endpoint": "left", "q": 1, "value": 0},
    {"endpoint": "left", "q": 2, "value": -0.25},
    {"endpoint": "left", "q": 3, "value": -0.25},
    {"endpoint": "left", "q": 4, "value": -0.1875},
    {"endpoint": "right", "q": 0, "value": 0},
    {"endpoint": "right", "q": 1, "value": "-0.5*e"},
    {"endpoint": "right", "q": 2, "value": "-0.5*e"},
    {"endpoint": "right", "q": 3, "value": "-0.375*e"}
  ],
  "exact": "0.5*(1 - z)*exp(0.5*(z + 1))"
})json");

    ex.exact = [](double z) { return 0.5 * (1.0 - z) * std::exp(0.5 * (z + 1.0)); };
    ex.exact_derivative = [](int k, double z) {
        double value = std::pow(0.5, k) * 0.5 * (1.0 - z);
        if (k >= 1) value += k * std::pow(0.5, k - 1) * (-0.5);
        return value * std::exp(0.5 * (z + 1.0));
    };
    ex.reference_mae = {{10, 1.3974e-09}, {12, 6.5798e-12}, {14, 1.3212e-14},
                        {16, 4.4409e-16}, {18, 3.3307e-16}, {20, 4.4409e-16}};
    ex.reference_ae_n10 = {{-1.0, 1.110223e-16}, {-0.8, 6.585842e-12}, {-0.6, 1.205764e-10},
                           {-0.4, 4.923047e-10}, {-0.2, 1.029267e-09}, {0.0, 1.397438e-09},
                           {0.2, 1.321320e-09},  {0.4, 8.449000e-10},  {0.6, 3.074025e-10},
                           {0.8, 3.313241e-11},  {1.0, 1.765061e-16}};
    return ex;
}

BuiltinExample make_example_5() {
    BuiltinExample ex = from_document(
        5, "linear twelfth order, variable coefficient", "0.25*(1 - z^2)*exp(0.5*(z + 1))",
        R"json({
  "order": 12,
  "interval": [-1, 1],
  "kind": "linear",
  "coefficients": ["4096", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0", "0",
                   "0.5*(z + 1)"],
  "rhs": "-(120 + 11.5*(z + 1) + 0.125*(z + 1)^3)*exp(0.5*(z + 1))",
  "conditions": [
    {"endpoint": "left", "q": 0, "value": 0},
    {"endpoint": "left", "q": 1, "value": 0.5},
    {"endpoint": "left", "q": 2, "value": 0},
    {"endpoint": "left", "q": 3, "value": -0.375},
    {"endpoint": "left", "q": 4, "value": -0.5},
    {"endpoint": "left", "q": 5, "value": -0.46875},
    {"endpoint": "right", "q": 0, "value": 0},
    {"endpoint": "right", "q": 1, "value": "-0.5*e"},
    {"endpoint": "right", "q": 2, "value": "-e"},
    {"endpoint": "right", "q": 3, "value": "-1.125*e"},
    {"endpoint": "right", "q": 4, "value": "-e"},
    {"endpoint": "right", "q": 5, "value": "-0.78125*e"}
  ],
  "exact": "0.25*(1 - z^2)*exp(0.5*(z + 1))"
})json");

    ex.exact = [](double z) { return 0.25 * (1.0 - z * z) * std::exp(0.5 * (z + 1.0)); };
    ex.exact_derivative = [](int k, double z) {
        return quadratic_times_exponential_derivative(k, z, 0.25 * (1.0 - z * z), -0.5 * z,
                                                      -0.5);
    };
    ex.reference_mae = {{12, 1.711e-12}, {14, 9.103e-15}, {16, 3.330e-16},
                        {18, 1.110e-16}, {20, 1.110e-16}, {22, 1.665e-16}};
    return ex;
}

}  // namespace

BuiltinExample builtin(int id) {
    switch (id) {
        case 1:
            return make_example_1();
        case 2:
            return make_example_2();
        case 3:
            return make_example_3();
        case 4:
            return make_example_4();
        case 5:
            return make_example_5();
        default:
            throw std::invalid_argument("builtin: unknown example id " + std::to_string(id) +
                                        " (valid ids are 1.." + std::to_string(builtin_count) +
                                        ")");
    }
}

}  // namespace mcbvp
