#include "mcbvp/expression.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

namespace mcbvp {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

namespace detail {

struct ExprNode {
    enum class Kind {
        number,
        coordinate,
        slot,
        negate,
        add,
        subtract,
        multiply,
        divide,
        power,
        call
    };
    enum class Fn { sin, cos, exp, ln };

    Kind kind = Kind::number;
    double number = 0.0;
    int slot = 0;
    Fn fn = Fn::sin;
    std::shared_ptr<const ExprNode> lhs;
    std::shared_ptr<const ExprNode> rhs;
};

}  // namespace detail

namespace {

using Node = detail::ExprNode;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_number(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::number;
    n->number = v;
    return n;
}

NodePtr make_node(Node::Kind kind, NodePtr lhs, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

/// Hand-rolled recursive-descent parser. Grammar, loosest binding first:
///   expression := term (('+' | '-') term)*
///   term       := unary (('*' | '/') unary)*
///   unary      := ('+' | '-') unary | power
///   power      := primary ('^' unary)?          right-associative
///   primary    := number | name | name '(' expression ')' | '(' expression ')'
class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr parse() {
        NodePtr root = parse_expression();
        skip_whitespace();
        if (pos_ < src_.size())
            fail(std::string("unexpected character '") + src_[pos_] + "' after expression");
        return root;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, line_, column_);
    }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_whitespace() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])) != 0)
            advance();
    }

    bool consume(char c) {
        skip_whitespace();
        if (pos_ < src_.size() && src_[pos_] == c) {
            advance();
            return true;
        }
        return false;
    }

    char peek() {
        skip_whitespace();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    NodePtr parse_expression() {
        NodePtr node = parse_term();
        while (true) {
            if (consume('+'))
                node = make_node(Node::Kind::add, node, parse_term());
            else if (consume('-'))
                node = make_node(Node::Kind::subtract, node, parse_term());
            else
                return node;
        }
    }

    NodePtr parse_term() {
        NodePtr node = parse_unary();
        while (true) {
            if (consume('*'))
                node = make_node(Node::Kind::multiply, node, parse_unary());
            else if (consume('/'))
                node = make_node(Node::Kind::divide, node, parse_unary());
            else
                return node;
        }
    }

    NodePtr parse_unary() {
        if (consume('-')) return make_node(Node::Kind::negate, parse_unary());
        if (consume('+')) return parse_unary();
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_primary();
        if (consume('^')) return make_node(Node::Kind::power, base, parse_unary());
        return base;
    }

    NodePtr parse_primary() {
        const char c = peek();
        if (c == '\0') fail("unexpected end of expression");
        if (c == '(') {
            advance();
            NodePtr inner = parse_expression();
            if (!consume(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') return parse_name();
        fail(std::string("unexpected character '") + c + "'");
    }

    NodePtr parse_number() {
        const char* begin = src_.data() + pos_;
        const char* end = src_.data() + src_.size();
        double value = 0.0;
        const auto result = std::from_chars(begin, end, value, std::chars_format::general);
        if (result.ec != std::errc{} || result.ptr == begin) fail("malformed numeric literal");
        while (src_.data() + pos_ < result.ptr) advance();
        return make_number(value);
    }

    NodePtr parse_name() {
        const int name_line = line_;
        const int name_column = column_;
        std::string name;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) != 0 || src_[pos_] == '_')) {
            name.push_back(src_[pos_]);
            advance();
        }

        if (name == "z" || name == "x") {
            auto n = std::make_shared<Node>();
            n->kind = Node::Kind::coordinate;
            return n;
        }
        if (name == "pi") return make_number(std::numbers::pi);
        if (name == "e") return make_number(std::numbers::e);

        if (name.size() >= 2 && name[0] == 'y') {
            int slot = 0;
            const auto result = std::from_chars(name.data() + 1, name.data() + name.size(), slot);
            if (result.ec == std::errc{} && result.ptr == name.data() + name.size()) {
                auto n = std::make_shared<Node>();
                n->kind = Node::Kind::slot;
                n->slot = slot;
                return n;
            }
        }

        Node::Fn fn;
        if (name == "sin")
            fn = Node::Fn::sin;
        else if (name == "cos")
            fn = Node::Fn::cos;
        else if (name == "exp")
            fn = Node::Fn::exp;
        else if (name == "ln")
            fn = Node::Fn::ln;
        else
            throw ParseError("unknown identifier '" + name + "'", name_line, name_column);

        if (!consume('(')) fail("expected '(' after function name '" + name + "'");
        NodePtr arg = parse_expression();
        if (!consume(')')) fail("expected ')' closing call to '" + name + "'");
        auto n = std::make_shared<Node>();
        n->kind = Node::Kind::call;
        n->fn = fn;
        n->lhs = std::move(arg);
        return n;
    }
};

struct EvalContext {
    const double* coord = nullptr;
    std::span<const double> slots;
};

double eval_node(const Node& node, const EvalContext& ctx) {
    switch (node.kind) {
        case Node::Kind::number:
            return node.number;
        case Node::Kind::coordinate:
            if (ctx.coord == nullptr)
                throw std::invalid_argument(
                    "expression uses the coordinate variable but none was bound");
            return *ctx.coord;
        case Node::Kind::slot:
            if (static_cast<std::size_t>(node.slot) >= ctx.slots.size())
                throw std::invalid_argument("expression uses derivative slot y" +
                                            std::to_string(node.slot) + " but it is not bound");
            return ctx.slots[static_cast<std::size_t>(node.slot)];
        case Node::Kind::negate:
            return -eval_node(*node.lhs, ctx);
        case Node::Kind::add:
            return eval_node(*node.lhs, ctx) + eval_node(*node.rhs, ctx);
        case Node::Kind::subtract:
            return eval_node(*node.lhs, ctx) - eval_node(*node.rhs, ctx);
        case Node::Kind::multiply:
            return eval_node(*node.lhs, ctx) * eval_node(*node.rhs, ctx);
        case Node::Kind::divide:
            return eval_node(*node.lhs, ctx) / eval_node(*node.rhs, ctx);
        case Node::Kind::power:
            return std::pow(eval_node(*node.lhs, ctx), eval_node(*node.rhs, ctx));
        case Node::Kind::call:
            switch (node.fn) {
                case Node::Fn::sin:
                    return std::sin(eval_node(*node.lhs, ctx));
                case Node::Fn::cos:
                    return std::cos(eval_node(*node.lhs, ctx));
                case Node::Fn::exp:
                    return std::exp(eval_node(*node.lhs, ctx));
                case Node::Fn::ln:
                    return std::log(eval_node(*node.lhs, ctx));
            }
    }
    throw std::logic_error("expression: invalid node kind");
}

bool node_uses_coordinate(const Node& node) {
    if (node.kind == Node::Kind::coordinate) return true;
    if (node.lhs && node_uses_coordinate(*node.lhs)) return true;
    return node.rhs && node_uses_coordinate(*node.rhs);
}

int node_max_slot(const Node& node) {
    int result = node.kind == Node::Kind::slot ? node.slot : -1;
    if (node.lhs) result = std::max(result, node_max_slot(*node.lhs));
    if (node.rhs) result = std::max(result, node_max_slot(*node.rhs));
    return result;
}

}  // namespace

Expression::Expression(std::shared_ptr<const detail::ExprNode> root, std::string source)
    : root_(std::move(root)), source_(std::move(source)) {}

Expression Expression::parse(std::string_view source) {
    Parser parser(source);
    return Expression(parser.parse(), std::string(source));
}

double Expression::operator()(double coord) const {
    EvalContext ctx;
    ctx.coord = &coord;
    return eval_node(*root_, ctx);
}

double Expression::operator()(double coord, std::span<const double> slots) const {
    EvalContext ctx;
    ctx.coord = &coord;
    ctx.slots = slots;
    return eval_node(*root_, ctx);
}

double Expression::constant() const {
    EvalContext ctx;
    return eval_node(*root_, ctx);
}

bool Expression::uses_coordinate() const { return node_uses_coordinate(*root_); }

int Expression::max_slot() const { return node_max_slot(*root_); }

}  // namespace mcbvp
