#include "hh/expr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

namespace hh {

namespace {

int fn_arity(FnId fn) {
    switch (fn) {
        case FnId::Exp:
        case FnId::Log:
        case FnId::Sqrt:
        case FnId::Abs:
            return 1;
        case FnId::Min:
        case FnId::Max:
        case FnId::Pow:
            return 2;
    }
    return 0;
}

const char* fn_name(FnId fn) {
    switch (fn) {
        case FnId::Exp: return "exp";
        case FnId::Log: return "log";
        case FnId::Sqrt: return "sqrt";
        case FnId::Abs: return "abs";
        case FnId::Min: return "min";
        case FnId::Max: return "max";
        case FnId::Pow: return "pow";
    }
    return "?";
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    NodePtr run() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }

    bool accept(char c) {
        if (peek(c)) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (!accept(c))
            throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    NodePtr expr() {
        NodePtr lhs = term();
        for (;;) {
            if (accept('+'))
                lhs = bin(BinOp::Add, lhs, term());
            else if (accept('-'))
                lhs = bin(BinOp::Sub, lhs, term());
            else
                return lhs;
        }
    }

    NodePtr term() {
        NodePtr lhs = factor();
        for (;;) {
            if (accept('*'))
                lhs = bin(BinOp::Mul, lhs, factor());
            else if (accept('/'))
                lhs = bin(BinOp::Div, lhs, factor());
            else
                return lhs;
        }
    }

    NodePtr factor() {
        if (accept('-')) return neg(factor());
        return power();
    }

    NodePtr power() {
        NodePtr base = atom();
        if (accept('^')) return bin(BinOp::Pow, base, factor());
        return base;
    }

    NodePtr atom() {
        skip_ws();
        if (pos_ >= src_.size())
            throw ParseError("unexpected end of input", pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c))) return ident();
        throw ParseError("unexpected character", pos_);
    }

    NodePtr number() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        }
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t mark = pos_;
            ++pos_;
            if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
            if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            } else {
                pos_ = mark;  // 'e' was not an exponent
            }
        }
        std::string text(src_.substr(start, pos_ - start));
        if (text == ".")
            throw ParseError("malformed number", start);
        char* end = nullptr;
        double v = std::strtod(text.c_str(), &end);
        if (end != text.c_str() + text.size())
            throw ParseError("malformed number", start);
        return num(v);
    }

    NodePtr ident() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string name(src_.substr(start, pos_ - start));
        if (name == "x") return var('x');
        if (name == "y") return var('y');
        static const std::map<std::string, FnId> fns = {
            {"exp", FnId::Exp}, {"log", FnId::Log}, {"sqrt", FnId::Sqrt}, {"abs", FnId::Abs},
            {"min", FnId::Min}, {"max", FnId::Max}, {"pow", FnId::Pow},
        };
        auto it = fns.find(name);
        if (it == fns.end())
            throw ParseError("unknown identifier '" + name + "'", start);
        expect('(');
        std::vector<NodePtr> args;
        args.push_back(expr());
        while (accept(',')) args.push_back(expr());
        expect(')');
        if (static_cast<int>(args.size()) != fn_arity(it->second))
            throw ParseError("wrong number of arguments to '" + name + "'", start);
        return call(it->second, std::move(args));
    }
};

// Shortest decimal form of v that parses back to exactly v.
std::string format_number(double v) {
    char buf[40];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

// Precedence levels used by the printer: sum=1, product=2, unary minus=3,
// power=4, atom=5. A child is parenthesized when its level is below the
// level its grammar slot requires.
int node_level(const Node& n) {
    return std::visit(
        [](const auto& k) -> int {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Num> || std::is_same_v<T, Var> ||
                          std::is_same_v<T, Call>)
                return 5;
            else if constexpr (std::is_same_v<T, Neg>)
                return 3;
            else
                return k.op == BinOp::Pow ? 4 : (k.op == BinOp::Add || k.op == BinOp::Sub ? 1 : 2);
        },
        n.v);
}

void print_node(const NodePtr& n, int min_level, std::string& out) {
    bool parens = node_level(*n) < min_level;
    if (parens) out += '(';
    std::visit(
        [&](const auto& k) {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Num>) {
                out += format_number(k.value);
            } else if constexpr (std::is_same_v<T, Var>) {
                out += k.name;
            } else if constexpr (std::is_same_v<T, Neg>) {
                out += '-';
                print_node(k.arg, 3, out);
            } else if constexpr (std::is_same_v<T, Bin>) {
                switch (k.op) {
                    case BinOp::Add:
                        print_node(k.lhs, 1, out);
                        out += '+';
                        print_node(k.rhs, 2, out);
                        break;
                    case BinOp::Sub:
                        print_node(k.lhs, 1, out);
                        out += '-';
                        print_node(k.rhs, 2, out);
                        break;
                    case BinOp::Mul:
                        print_node(k.lhs, 2, out);
                        out += '*';
                        print_node(k.rhs, 3, out);
                        break;
                    case BinOp::Div:
                        print_node(k.lhs, 2, out);
                        out += '/';
                        print_node(k.rhs, 3, out);
                        break;
                    case BinOp::Pow:
                        // the base slot is an atom, the exponent slot a factor
                        print_node(k.lhs, 5, out);
                        out += '^';
                        print_node(k.rhs, 3, out);
                        break;
                }
            } else if constexpr (std::is_same_v<T, Call>) {
                out += fn_name(k.fn);
                out += '(';
                for (std::size_t i = 0; i < k.args.size(); ++i) {
                    if (i) out += ',';
                    print_node(k.args[i], 1, out);
                }
                out += ')';
            }
        },
        n->v);
    if (parens) out += ')';
}

double check_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw NumericalError(std::string("overflow in ") + what);
    return v;
}

double eval_pow(double base, double expo) {
    if (base > 0.0) return check_finite(std::pow(base, expo), "pow");
    if (base == 0.0) {
        if (expo > 0.0) return 0.0;
        if (expo == 0.0) return 1.0;
        throw DomainError("zero raised to a negative power");
    }
    // negative base: only exact integer exponents are defined
    if (std::nearbyint(expo) != expo || std::abs(expo) >= 9.007199254740992e15)
        throw DomainError("non-integer power of a negative base");
    return check_finite(std::pow(base, expo), "pow");
}

double eval_node(const Node& n, double x, double y) {
    return std::visit(
        [&](const auto& k) -> double {
            using T = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<T, Num>) {
                return k.value;
            } else if constexpr (std::is_same_v<T, Var>) {
                return k.name == 'x' ? x : y;
            } else if constexpr (std::is_same_v<T, Neg>) {
                return -eval_node(*k.arg, x, y);
            } else if constexpr (std::is_same_v<T, Bin>) {
                double a = eval_node(*k.lhs, x, y);
                double b = eval_node(*k.rhs, x, y);
                switch (k.op) {
                    case BinOp::Add: return check_finite(a + b, "+");
                    case BinOp::Sub: return check_finite(a - b, "-");
                    case BinOp::Mul: return check_finite(a * b, "*");
                    case BinOp::Div:
                        if (b == 0.0) throw DomainError("division by zero");
                        return check_finite(a / b, "/");
                    case BinOp::Pow: return eval_pow(a, b);
                }
                return 0.0;
            } else {
                double a = eval_node(*k.args[0], x, y);
                switch (k.fn) {
                    case FnId::Exp: return check_finite(std::exp(a), "exp");
                    case FnId::Log:
                        if (a <= 0.0) throw DomainError("log of a nonpositive value");
                        return std::log(a);
                    case FnId::Sqrt:
                        if (a < 0.0) throw DomainError("sqrt of a negative value");
                        return std::sqrt(a);
                    case FnId::Abs: return std::abs(a);
                    case FnId::Min: return std::min(a, eval_node(*k.args[1], x, y));
                    case FnId::Max: return std::max(a, eval_node(*k.args[1], x, y));
                    case FnId::Pow: return eval_pow(a, eval_node(*k.args[1], x, y));
                }
                return 0.0;
            }
        },
        n.v);
}

}  // namespace

NodePtr parse(std::string_view src) { return Parser(src).run(); }

std::string print(const NodePtr& ast) {
    std::string out;
    print_node(ast, 1, out);
    return out;
}

bool structurally_equal(const NodePtr& a, const NodePtr& b) {
    if (a->v.index() != b->v.index()) return false;
    if (const auto* n = std::get_if<Num>(&a->v)) return n->value == std::get<Num>(b->v).value;
    if (const auto* v = std::get_if<Var>(&a->v)) return v->name == std::get<Var>(b->v).name;
    if (const auto* g = std::get_if<Neg>(&a->v))
        return structurally_equal(g->arg, std::get<Neg>(b->v).arg);
    if (const auto* bb = std::get_if<Bin>(&a->v)) {
        const auto& o = std::get<Bin>(b->v);
        return bb->op == o.op && structurally_equal(bb->lhs, o.lhs) &&
               structurally_equal(bb->rhs, o.rhs);
    }
    const auto& ca = std::get<Call>(a->v);
    const auto& cb = std::get<Call>(b->v);
    if (ca.fn != cb.fn || ca.args.size() != cb.args.size()) return false;
    for (std::size_t i = 0; i < ca.args.size(); ++i)
        if (!structurally_equal(ca.args[i], cb.args[i])) return false;
    return true;
}

NodePtr num(double v) { return std::make_shared<Node>(Node{Num{v}}); }
NodePtr var(char name) { return std::make_shared<Node>(Node{Var{name}}); }
NodePtr neg(NodePtr a) { return std::make_shared<Node>(Node{Neg{std::move(a)}}); }
NodePtr bin(BinOp op, NodePtr lhs, NodePtr rhs) {
    return std::make_shared<Node>(Node{Bin{op, std::move(lhs), std::move(rhs)}});
}
NodePtr call(FnId fn, std::vector<NodePtr> args) {
    return std::make_shared<Node>(Node{Call{fn, std::move(args)}});
}

double ScalarFn::operator()(double x, double y) const {
    if (fixed_x_) x = *fixed_x_;
    if (fixed_y_) y = *fixed_y_;
    return eval_node(*root_, x, y);
}

ScalarFn ScalarFn::slice(Axis axis, double value) const {
    ScalarFn s = *this;
    if (axis == Axis::FixX)
        s.fixed_x_ = value;
    else
        s.fixed_y_ = value;
    return s;
}

}  // namespace hh
