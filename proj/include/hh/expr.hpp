#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hh/errors.hpp"

namespace hh {

enum class BinOp { Add, Sub, Mul, Div, Pow };
enum class FnId { Exp, Log, Sqrt, Abs, Min, Max, Pow };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Num {
    double value;
};
struct Var {
    char name;  // 'x' or 'y'
};
struct Neg {
    NodePtr arg;
};
struct Bin {
    BinOp op;
    NodePtr lhs;
    NodePtr rhs;
};
struct Call {
    FnId fn;
    std::vector<NodePtr> args;
};

struct Node {
    std::variant<Num, Var, Neg, Bin, Call> v;
};

/// Recursive-descent parse of the expression grammar.
///
///   expr   := term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := "-" factor | power
///   power  := atom ("^" factor)?
///   atom   := number | "x" | "y" | ident "(" expr ("," expr)* ")" | "(" expr ")"
///
/// Throws ParseError with the byte offset of the first bad token.
NodePtr parse(std::string_view src);

/// Precedence-aware printer. parse(print(a)) is structurally equal to a for
/// every ast produced by parse().
std::string print(const NodePtr& ast);

bool structurally_equal(const NodePtr& a, const NodePtr& b);

// Programmatic builders (used by the family catalog and tests).
NodePtr num(double v);
NodePtr var(char name);
NodePtr neg(NodePtr a);
NodePtr bin(BinOp op, NodePtr lhs, NodePtr rhs);
NodePtr call(FnId fn, std::vector<NodePtr> args);

enum class Axis { FixX, FixY };

/// An evaluable real function of (x, y). Immutable; safe to evaluate from
/// several threads at once. A slice pins one coordinate, so the slice and the
/// original share the exact same evaluation path.
class ScalarFn {
public:
    ScalarFn() = default;
    explicit ScalarFn(NodePtr root) : root_(std::move(root)) {}

    static ScalarFn parse(std::string_view src) { return ScalarFn(hh::parse(src)); }

    /// Evaluate at (x, y); pinned coordinates override the arguments.
    double operator()(double x, double y) const;

    /// One-variable view: both coordinates set to t, pins override. For a
    /// slice (or an expression in a single variable) this is the 1-D partial
    /// mapping.
    double along(double t) const { return (*this)(t, t); }

    ScalarFn slice(Axis axis, double value) const;

    const NodePtr& ast() const { return root_; }
    std::string to_string() const { return print(root_); }

private:
    NodePtr root_;
    std::optional<double> fixed_x_;
    std::optional<double> fixed_y_;
};

}  // namespace hh
