#include <doctest.h>

#include <mcbvp/problem_io.hpp>
#include <mcbvp/solve.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <variant>

using mcbvp::LinearBvp;
using mcbvp::NonlinearBvp;
using mcbvp::ProblemFormatError;
using mcbvp::ProblemSpec;

namespace {

const char* kLinearDoc = R"({
  "order": 2,
  "interval": [0, 2],
  "kind": "linear",
  "coefficients": ["1", "0", "0"],
  "rhs": "2",
  "conditions": [
    {"endpoint": "left", "q": 0, "value": 0},
    {"endpoint": "right", "q": 0, "value": 4}
  ],
  "exact": "x^2"
})";

const char* kNonlinearDoc = R"({
  "order": 1,
  "interval": [-1, 1],
  "kind": "nonlinear",
  "rhs": "0",
  "residual": "y1 - y0",
  "conditions": [{"endpoint": "left", "q": 0, "value": 1}]
})";

std::string message_of(const std::string& text) {
    try {
        (void)mcbvp::load_problem_json(text);
    } catch (const ProblemFormatError& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_CASE("a linear document loads, solves, and matches its declared exact") {
    const ProblemSpec spec = mcbvp::load_problem_json(kLinearDoc);
    CHECK(spec.order() == 2);
    CHECK_FALSE(spec.is_nonlinear());
    CHECK(spec.interval_a() == 0.0);
    CHECK(spec.interval_b() == 2.0);
    REQUIRE(spec.exact.has_value());

    const LinearBvp& problem = std::get<LinearBvp>(spec.problem);
    const mcbvp::SpectralSolution solution = mcbvp::solve_linear(problem, 8);
    const mcbvp::Expression exact = *spec.exact;
    for (double x : {0.0, 0.5, 1.3, 2.0}) {
        CHECK(std::abs(solution.evaluate(x) - exact(x)) <= 1e-10);
    }
}

TEST_CASE("a nonlinear document loads and solves") {
    // y' = y with y(-1) = 1; exact e^{z+1}.
    const ProblemSpec spec = mcbvp::load_problem_json(kNonlinearDoc);
    CHECK(spec.is_nonlinear());
    CHECK_FALSE(spec.exact.has_value());
    const NonlinearBvp& problem = std::get<NonlinearBvp>(spec.problem);
    const mcbvp::SpectralSolution solution = mcbvp::solve_nonlinear(problem, 14);
    CHECK(solution.report().converged);
    for (double z : {-1.0, 0.0, 1.0}) {
        CHECK(std::abs(solution.evaluate(z) - std::exp(z + 1.0)) <= 1e-9);
    }
}

TEST_CASE("numbers are accepted wherever expressions are") {
    const ProblemSpec spec = mcbvp::load_problem_json(R"json({
      "order": 1,
      "interval": [-1, 1],
      "kind": "linear",
      "coefficients": [1, 0],
      "rhs": 1,
      "conditions": [{"endpoint": "left", "q": 0, "value": "ln(2)"}]
    })json");
    const LinearBvp& problem = std::get<LinearBvp>(spec.problem);
    CHECK(problem.coefficients[1](0.33) == 1.0);
    CHECK(problem.conditions[0].value == doctest::Approx(std::log(2.0)).epsilon(1e-15));
}

TEST_CASE("files load through the same path") {
    const std::string path = "/tmp/mcbvp_test_problem.json";
    {
        std::ofstream out(path);
        out << kLinearDoc;
    }
    const ProblemSpec spec = mcbvp::load_problem_file(path);
    CHECK(spec.order() == 2);
    std::remove(path.c_str());

    CHECK_THROWS_AS((void)mcbvp::load_problem_file("/tmp/mcbvp_does_not_exist.json"),
                    ProblemFormatError);
}

TEST_CASE("invalid JSON syntax is wrapped in a format error") {
    const std::string message = message_of("{ not json");
    CHECK(message.find("not valid JSON") != std::string::npos);
}

TEST_CASE("missing or malformed top-level fields are named") {
    CHECK(message_of(R"({"interval": [-1,1], "kind": "linear"})").find("\"order\"") !=
          std::string::npos);
    CHECK(message_of(R"({"order": 0, "interval": [-1,1]})").find("at least 1") !=
          std::string::npos);
    CHECK(message_of(R"({"order": 2, "kind": "linear"})").find("\"interval\"") !=
          std::string::npos);
    CHECK(message_of(R"({"order": 2, "interval": [1, -1], "kind": "linear"})")
              .find("\"interval\"") != std::string::npos);
    CHECK(message_of(R"({"order": 2, "interval": [-1,1]})").find("\"kind\"") !=
          std::string::npos);
    CHECK(message_of(R"({"order": 2, "interval": [-1,1], "kind": "cubic"})").find("cubic") !=
          std::string::npos);
    CHECK(message_of(
              R"({"order": 2, "interval": [-1,1], "kind": "linear", "coefficients": ["1","0","0"]})")
              .find("\"rhs\"") != std::string::npos);
}

TEST_CASE("linear coefficient arrays must have order+1 entries") {
    const std::string message = message_of(R"({
      "order": 3,
      "interval": [-1, 1],
      "kind": "linear",
      "coefficients": ["1", "0"],
      "rhs": "0",
      "conditions": []
    })");
    CHECK(message.find("order+1 = 4") != std::string::npos);
}

TEST_CASE("document coefficients are stored leading-first") {
    const ProblemSpec spec = mcbvp::load_problem_json(R"({
      "order": 2,
      "interval": [-1, 1],
      "kind": "linear",
      "coefficients": ["7", "5", "3"],
      "rhs": "0",
      "conditions": [
        {"endpoint": "left", "q": 0, "value": 0},
        {"endpoint": "right", "q": 0, "value": 0}
      ]
    })");
    const LinearBvp& problem = std::get<LinearBvp>(spec.problem);
    CHECK(problem.coefficients[2](0.0) == 7.0);  // f_2 listed first
    CHECK(problem.coefficients[1](0.0) == 5.0);
    CHECK(problem.coefficients[0](0.0) == 3.0);
}

TEST_CASE("coordinate-only fields reject derivative slots") {
    const std::string message = message_of(R"({
      "order": 2,
      "interval": [-1, 1],
      "kind": "linear",
      "coefficients": ["y0", "0", "1"],
      "rhs": "0",
      "conditions": [
        {"endpoint": "left", "q": 0, "value": 0},
        {"endpoint": "right", "q": 0, "value": 0}
      ]
    })");
    CHECK(message.find("coefficients[0]") != std::string::npos);
    CHECK(message.find("y0") != std::string::npos);
}

TEST_CASE("residual slots are bounded by the problem order") {
    const std::string message = message_of(R"({
      "order": 4,
      "interval": [-1, 1],
      "kind": "nonlinear",
      "residual": "y7 - y0",
      "rhs": "0",
      "conditions": [
        {"endpoint": "left", "q": 0, "value": 0},
        {"endpoint": "left", "q": 1, "value": 0},
        {"endpoint": "right", "q": 0, "value": 0},
        {"endpoint": "right", "q": 1, "value": 0}
      ]
    })");
    CHECK(message.find("y7") != std::string::npos);
    CHECK(message.find("y0..y4") != std::string::npos);
}

TEST_CASE("expression syntax errors carry the field and position") {
    const std::string message = message_of(R"({
      "order": 1,
      "interval": [-1, 1],
      "kind": "linear",
      "coefficients": ["1", "0"],
      "rhs": "1 +",
      "conditions": [{"endpoint": "left", "q": 0, "value": 0}]
    })");
    CHECK(message.find("\"rhs\"") != std::string::npos);
    CHECK(message.find("line 1") != std::string::npos);
    CHECK(message.find("column 4") != std::string::npos);
}

TEST_CASE("boundary conditions are validated in detail") {
    const char* templ = R"({
      "order": 2,
      "interval": [-1, 1],
      "kind": "linear",
      "coefficients": ["1", "0", "0"],
      "rhs": "0",
      "conditions": %s
    })";
    const auto with_conditions = [&](const std::string& conditions) {
        char buffer[1024];
        std::snprintf(buffer, sizeof(buffer), templ, conditions.c_str());
        return message_of(buffer);
    };

    CHECK(with_conditions(R"([{"endpoint": "left", "q": 0, "value": 0}])")
              .find("conditions") != std::string::npos);
    CHECK(with_conditions(R"([{"endpoint": "top", "q": 0, "value": 0},
                              {"endpoint": "left", "q": 0, "value": 0}])")
              .find("top") != std::string::npos);
    CHECK(with_conditions(R"([{"endpoint": "left", "q": 2, "value": 0},
                              {"endpoint": "right", "q": 0, "value": 0}])")
              .find("conditions") != std::string::npos);
    CHECK(with_conditions(R"([{"endpoint": "left", "q": 0, "value": 0},
                              {"endpoint": "left", "q": 0, "value": 1}])")
              .find("conditions") != std::string::npos);
    CHECK(with_conditions(R"([{"endpoint": "left", "q": 0, "value": "z + 1"},
                              {"endpoint": "right", "q": 0, "value": 0}])")
              .find("constant") != std::string::npos);
    CHECK(with_conditions(R"([{"endpoint": "left", "value": 0},
                              {"endpoint": "right", "q": 0, "value": 0}])")
              .find(".q") != std::string::npos);
}

TEST_CASE("the exact field must be a coordinate-only expression") {
    const std::string message = message_of(R"({
      "order": 1,
      "interval": [-1, 1],
      "kind": "linear",
      "coefficients": ["1", "0"],
      "rhs": "0",
      "conditions": [{"endpoint": "left", "q": 0, "value": 0}],
      "exact": "y0 + 1"
    })");
    CHECK(message.find("\"exact\"") != std::string::npos);

    const std::string not_string = message_of(R"({
      "order": 1,
      "interval": [-1, 1],
      "kind": "linear",
      "coefficients": ["1", "0"],
      "rhs": "0",
      "conditions": [{"endpoint": "left", "q": 0, "value": 0}],
      "exact": 42
    })");
    CHECK(not_string.find("\"exact\"") != std::string::npos);
}

TEST_CASE("nonlinear documents require a residual string") {
    const std::string message = message_of(R"({
      "order": 1,
      "interval": [-1, 1],
      "kind": "nonlinear",
      "rhs": "0",
      "conditions": [{"endpoint": "left", "q": 0, "value": 0}]
    })");
    CHECK(message.find("\"residual\"") != std::string::npos);
}
