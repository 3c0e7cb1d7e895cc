#pragma once

#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcbvp {

namespace detail {
struct ExprNode;
}

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

/// A parsed scalar expression used by the JSON problem format.
///
/// Grammar: numeric literals, the coordinate variable (z and x are synonyms),
/// derivative slots y0, y1, ..., binary + - * / ^ (^ binds tightest and is
/// right-associative), unary minus, functions sin cos exp ln, constants pi
/// and e. Slots are only meaningful in nonlinear residuals; other fields
/// reject them at load time via max_slot().
class Expression {
public:
    static Expression parse(std::string_view source);

    /// Evaluate with the coordinate bound and no derivative slots.
    double operator()(double coord) const;

    /// Evaluate with the coordinate and slots y0..ym bound.
    double operator()(double coord, std::span<const double> slots) const;

    /// Evaluate an expression that uses no variables at all.
    double constant() const;

    bool uses_coordinate() const;

    /// Highest derivative slot index referenced, or -1 when none appear.
    int max_slot() const;

    const std::string& source() const noexcept { return source_; }

private:
    Expression(std::shared_ptr<const detail::ExprNode> root, std::string source);

    std::shared_ptr<const detail::ExprNode> root_;
    std::string source_;
};

}  // namespace mcbvp
