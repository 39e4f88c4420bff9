#pragma once

#include <string>
#include <vector>

#include "ballkit/ball_scalar.hpp"

namespace ballkit {

// A parsed arithmetic expression over point coordinates.  Both vocabularies
// are always in scope and name the same point: x, y, z (Cartesian) and
// r, lam, th (spherical), plus the constants pi and e.  Functions: sin,
// cos, tan, exp, log, sqrt, sinh, cosh.  Precedence: ^ binds tighter than
// unary minus, then * /, then + -; ^ is right-associative.
class Expr {
public:
    double eval_cart(double x, double y, double z) const;
    double eval_sph(double r, double lam, double th) const;

    // Fully parenthesized form; parsing it again yields the same tree.
    std::string str() const;

    // Notes produced at parse time (e.g. a literal non-integer exponent,
    // which fails at evaluation for negative bases).
    const std::vector<std::string>& warnings() const { return warnings_; }

    // Adapter for the constructors; the expression is copied into the
    // returned closure.
    PointFn point_fn(Coords coords) const;

private:
    friend class ExprParser;

    struct Node {
        enum Kind { number, variable, negate, binary, call } kind;
        double value = 0.0; // number
        int var = 0;        // variable: 0..5 for x y z r lam th
        char op = 0;        // binary: + - * / ^
        int fn = 0;         // call: index into the function table
        int a = -1, b = -1; // children
    };

    double eval_node(int at, const double vars[6]) const;
    void print_node(int at, std::string& out) const;

    std::vector<Node> nodes_;
    int root_ = -1;
    std::vector<std::string> warnings_;
};

// Throws ParseError (carrying the byte offset) on syntax errors, unknown
// identifiers, or a function name without an argument list.
Expr parse_expr(const std::string& src);

} // namespace ballkit
