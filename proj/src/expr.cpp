#include "ballkit/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace ballkit {

namespace {

struct Fn {
    const char* name;
    double (*call)(double);
};

const Fn kFns[] = {
    {"sin", std::sin},   {"cos", std::cos},   {"tan", std::tan},
    {"exp", std::exp},   {"log", std::log},   {"sqrt", std::sqrt},
    {"sinh", std::sinh}, {"cosh", std::cosh},
};

const char* kVars[] = {"x", "y", "z", "r", "lam", "th"};

} // namespace

class ExprParser {
public:
    ExprParser(const std::string& src, Expr& out) : src_(src), out_(out) {}

    void run() {
        out_.root_ = sum();
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError("unexpected trailing input", pos_);
    }

private:
    using Node = Expr::Node;

    int push(Node n) {
        out_.nodes_.push_back(n);
        return static_cast<int>(out_.nodes_.size()) - 1;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos_ >= src_.size() || src_[pos_] != c)
            throw ParseError(what, pos_);
        ++pos_;
    }

    int sum() {
        int lhs = product();
        for (;;) {
            if (accept('+')) lhs = binary('+', lhs, product());
            else if (accept('-')) lhs = binary('-', lhs, product());
            else return lhs;
        }
    }

    int product() {
        int lhs = unary();
        for (;;) {
            if (accept('*')) lhs = binary('*', lhs, unary());
            else if (accept('/')) lhs = binary('/', lhs, unary());
            else return lhs;
        }
    }

    int unary() {
        if (accept('-')) {
            Node n;
            n.kind = Node::negate;
            n.a = unary();
            return push(n);
        }
        return power();
    }

    int power() {
        int lhs = atom();
        if (accept('^')) {
            const std::size_t at = pos_;
            const int rhs = unary();
            const Node& rn = out_.nodes_[static_cast<std::size_t>(rhs)];
            if (rn.kind == Node::number && rn.value != std::floor(rn.value))
                out_.warnings_.push_back(
                    "non-integer exponent at byte " + std::to_string(at) +
                    ": negative bases will fail at evaluation");
            return binary('^', lhs, rhs);
        }
        return lhs;
    }

    int atom() {
        skip_ws();
        if (pos_ >= src_.size()) throw ParseError("expected an operand", pos_);
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            const int inner = sum();
            expect(')', "expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
        throw ParseError("unexpected character", pos_);
    }

    int number() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
        if (pos_ < src_.size() && src_[pos_] == '.') {
            ++pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                ++pos_;
        }
        if (pos_ == start || (pos_ == start + 1 && src_[start] == '.'))
            throw ParseError("malformed number", start);
        // Exponent part only when at least one digit follows it.
        if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
            std::size_t q = pos_ + 1;
            if (q < src_.size() && (src_[q] == '+' || src_[q] == '-')) ++q;
            if (q < src_.size() && std::isdigit(static_cast<unsigned char>(src_[q]))) {
                pos_ = q;
                while (pos_ < src_.size() &&
                       std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    ++pos_;
            }
        }
        Node n;
        n.kind = Node::number;
        n.value = std::strtod(src_.substr(start, pos_ - start).c_str(), nullptr);
        return push(n);
    }

    int identifier() {
        const std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
            ++pos_;
        const std::string name = src_.substr(start, pos_ - start);

        for (int v = 0; v < 6; ++v)
            if (name == kVars[v]) {
                Node n;
                n.kind = Node::variable;
                n.var = v;
                return push(n);
            }
        if (name == "pi" || name == "e") {
            Node n;
            n.kind = Node::number;
            n.value = name == "pi" ? std::acos(-1.0) : std::exp(1.0);
            return push(n);
        }
        for (int f = 0; f < static_cast<int>(sizeof(kFns) / sizeof(kFns[0])); ++f)
            if (name == kFns[f].name) {
                expect('(', "expected '(' after function name");
                const int arg = sum();
                expect(')', "expected ')'");
                Node n;
                n.kind = Node::call;
                n.fn = f;
                n.a = arg;
                return push(n);
            }
        throw ParseError("unknown identifier '" + name + "'", start);
    }

    int binary(char op, int a, int b) {
        Node n;
        n.kind = Node::binary;
        n.op = op;
        n.a = a;
        n.b = b;
        return push(n);
    }

    const std::string& src_;
    Expr& out_;
    std::size_t pos_ = 0;
};

namespace {

double int_pow(double base, long long e) {
    if (e < 0) return 1.0 / int_pow(base, -e);
    double acc = 1.0, cur = base;
    while (e > 0) {
        if (e & 1) acc *= cur;
        cur *= cur;
        e >>= 1;
    }
    return acc;
}

} // namespace

Expr parse_expr(const std::string& src) {
    Expr out;
    ExprParser(src, out).run();
    return out;
}

double Expr::eval_node(int at, const double vars[6]) const {
    const Node& n = nodes_[static_cast<std::size_t>(at)];
    switch (n.kind) {
        case Node::number: return n.value;
        case Node::variable: return vars[n.var];
        case Node::negate: return -eval_node(n.a, vars);
        case Node::call: return kFns[n.fn].call(eval_node(n.a, vars));
        case Node::binary: {
            const double a = eval_node(n.a, vars);
            const double b = eval_node(n.b, vars);
            switch (n.op) {
                case '+': return a + b;
                case '-': return a - b;
                case '*': return a * b;
                case '/': return a / b;
                default:
                    if (b == std::floor(b) && std::abs(b) <= 1024.0)
                        return int_pow(a, static_cast<long long>(b));
                    return std::pow(a, b);
            }
        }
    }
    return 0.0;
}

double Expr::eval_cart(double x, double y, double z) const {
    const double vars[6] = {x, y, z, std::sqrt(x * x + y * y + z * z),
                            std::atan2(y, x), std::atan2(std::hypot(x, y), z)};
    const double v = eval_node(root_, vars);
    if (!std::isfinite(v))
        throw DomainError("expression is not finite at the evaluation point");
    return v;
}

double Expr::eval_sph(double r, double lam, double th) const {
    const double st = std::sin(th);
    const double vars[6] = {r * std::cos(lam) * st, r * std::sin(lam) * st,
                            r * std::cos(th), r, lam, th};
    const double v = eval_node(root_, vars);
    if (!std::isfinite(v))
        throw DomainError("expression is not finite at the evaluation point");
    return v;
}

void Expr::print_node(int at, std::string& out) const {
    const Node& n = nodes_[static_cast<std::size_t>(at)];
    switch (n.kind) {
        case Node::number: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", n.value);
            out += buf;
            return;
        }
        case Node::variable: out += kVars[n.var]; return;
        case Node::negate:
            out += "(-";
            print_node(n.a, out);
            out += ')';
            return;
        case Node::call:
            out += kFns[n.fn].name;
            out += '(';
            print_node(n.a, out);
            out += ')';
            return;
        case Node::binary:
            out += '(';
            print_node(n.a, out);
            out += n.op;
            print_node(n.b, out);
            out += ')';
            return;
    }
}

std::string Expr::str() const {
    std::string out;
    print_node(root_, out);
    return out;
}

PointFn Expr::point_fn(Coords coords) const {
    Expr self = *this;
    if (coords == Coords::cartesian)
        return [self](double x, double y, double z) { return self.eval_cart(x, y, z); };
    return [self](double r, double lam, double th) { return self.eval_sph(r, lam, th); };
}

} // namespace ballkit
