#include "mcbvp/problem_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace mcbvp {

using nlohmann::json;

int ProblemSpec::order() const {
    return std::visit([](const auto& p) { return p.order; }, problem);
}

double ProblemSpec::interval_a() const {
    return std::visit([](const auto& p) { return p.interval_a; }, problem);
}

double ProblemSpec::interval_b() const {
    return std::visit([](const auto& p) { return p.interval_b; }, problem);
}

bool ProblemSpec::is_nonlinear() const { return std::holds_alternative<NonlinearBvp>(problem); }

namespace {

[[noreturn]] void fail(const std::string& message) { throw ProblemFormatError(message); }

Expression parse_field_expression(const std::string& text, const std::string& field,
                                  int max_allowed_slot) {
    Expression expr = [&] {
        try {
            return Expression::parse(text);
        } catch (const ParseError& err) {
            fail("field \"" + field + "\": " + err.what());
        }
    }();
    const int slot = expr.max_slot();
    if (slot > max_allowed_slot) {
        if (max_allowed_slot < 0)
            fail("field \"" + field + "\" may not reference derivative slots, but uses y" +
                 std::to_string(slot));
        fail("field \"" + field + "\" references derivative slot y" + std::to_string(slot) +
             ", but the problem order only provides y0..y" + std::to_string(max_allowed_slot));
    }
    return expr;
}

/// Expression string or plain number, over the coordinate only.
ScalarFn read_scalar_fn(const json& value, const std::string& field) {
    if (value.is_number()) {
        const double v = value.get<double>();
        return [v](double) { return v; };
    }
    if (!value.is_string())
        fail("field \"" + field + "\" must be an expression string or a number");
    Expression expr = parse_field_expression(value.get<std::string>(), field, -1);
    return [expr](double x) { return expr(x); };
}

double read_constant(const json& value, const std::string& field) {
    if (value.is_number()) return value.get<double>();
    if (!value.is_string())
        fail("field \"" + field + "\" must be a constant expression string or a number");
    Expression expr = parse_field_expression(value.get<std::string>(), field, -1);
    if (expr.uses_coordinate())
        fail("field \"" + field + "\" must be constant, but uses the coordinate variable");
    return expr.constant();
}

std::vector<BoundaryCondition> read_conditions(const json& doc, int order) {
    if (!doc.contains("conditions") || !doc["conditions"].is_array())
        fail("field \"conditions\" must be an array of boundary conditions");
    std::vector<BoundaryCondition> conditions;
    std::size_t index = 0;
    for (const json& entry : doc["conditions"]) {
        const std::string field = "conditions[" + std::to_string(index) + "]";
        if (!entry.is_object()) fail(field + " must be an object");
        if (!entry.contains("endpoint") || !entry["endpoint"].is_string())
            fail(field + ".endpoint must be \"left\" or \"right\"");
        const std::string endpoint = entry["endpoint"].get<std::string>();
        BoundaryCondition condition;
        if (endpoint == "left")
            condition.endpoint = Endpoint::left;
        else if (endpoint == "right")
            condition.endpoint = Endpoint::right;
        else
            fail(field + ".endpoint must be \"left\" or \"right\", got \"" + endpoint + "\"");
        if (!entry.contains("q") || !entry["q"].is_number_integer())
            fail(field + ".q must be an integer derivative order");
        condition.derivative_order = entry["q"].get<int>();
        if (!entry.contains("value")) fail(field + ".value is required");
        condition.value = read_constant(entry["value"], field + ".value");
        conditions.push_back(condition);
        ++index;
    }
    try {
        validate_conditions(order, conditions);
    } catch (const std::invalid_argument& err) {
        fail(std::string("field \"conditions\": ") + err.what());
    }
    return conditions;
}

ProblemSpec from_document(const json& doc) {
    if (!doc.is_object()) fail("problem document must be a JSON object");

    if (!doc.contains("order") || !doc["order"].is_number_integer())
        fail("field \"order\" must be an integer");
    const int order = doc["order"].get<int>();
    if (order < 1) fail("field \"order\" must be at least 1, got " + std::to_string(order));

    if (!doc.contains("interval") || !doc["interval"].is_array() || doc["interval"].size() != 2 ||
        !doc["interval"][0].is_number() || !doc["interval"][1].is_number())
        fail("field \"interval\" must be an array [a, b] of two numbers");
    const double a = doc["interval"][0].get<double>();
    const double b = doc["interval"][1].get<double>();
    try {
        validate_interval(a, b);
    } catch (const std::invalid_argument& err) {
        fail(std::string("field \"interval\": ") + err.what());
    }

    if (!doc.contains("kind") || !doc["kind"].is_string())
        fail("field \"kind\" must be \"linear\" or \"nonlinear\"");
    const std::string kind = doc["kind"].get<std::string>();
    if (kind != "linear" && kind != "nonlinear")
        fail("field \"kind\" must be \"linear\" or \"nonlinear\", got \"" + kind + "\"");

    if (!doc.contains("rhs")) fail("field \"rhs\" is required");

    ProblemSpec spec;
    if (kind == "linear") {
        if (!doc.contains("coefficients") || !doc["coefficients"].is_array())
            fail("field \"coefficients\" must be an array for a linear problem");
        const json& entries = doc["coefficients"];
        if (entries.size() != static_cast<std::size_t>(order) + 1)
            fail("field \"coefficients\" must list order+1 = " + std::to_string(order + 1) +
                 " entries, leading coefficient first, got " + std::to_string(entries.size()));
        LinearBvp problem;
        problem.order = order;
        problem.interval_a = a;
        problem.interval_b = b;
        // The document stores f_m .. f_0; internally index k means f_k.
        problem.coefficients.resize(static_cast<std::size_t>(order) + 1);
        for (std::size_t i = 0; i < entries.size(); ++i) {
            const std::string field = "coefficients[" + std::to_string(i) + "]";
            problem.coefficients[entries.size() - 1 - i] = read_scalar_fn(entries[i], field);
        }
        problem.rhs = read_scalar_fn(doc["rhs"], "rhs");
        problem.conditions = read_conditions(doc, order);
        spec.problem = std::move(problem);
    } else {
        if (!doc.contains("residual") || !doc["residual"].is_string())
            fail("field \"residual\" must be an expression string for a nonlinear problem");
        NonlinearBvp problem;
        problem.order = order;
        problem.interval_a = a;
        problem.interval_b = b;
        Expression residual =
            parse_field_expression(doc["residual"].get<std::string>(), "residual", order);
        problem.residual = [residual](double x, std::span<const double> slots) {
            return residual(x, slots);
        };
        problem.rhs = read_scalar_fn(doc["rhs"], "rhs");
        problem.conditions = read_conditions(doc, order);
        spec.problem = std::move(problem);
    }

    if (doc.contains("exact")) {
        if (!doc["exact"].is_string()) fail("field \"exact\" must be an expression string");
        spec.exact = parse_field_expression(doc["exact"].get<std::string>(), "exact", -1);
    }
    return spec;
}

}  // namespace

ProblemSpec load_problem_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        fail(std::string("problem document is not valid JSON: ") + err.what());
    }
    return from_document(doc);
}

ProblemSpec load_problem_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) fail("cannot open problem file: " + path);
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return load_problem_json(buffer.str());
}

}  // namespace mcbvp
