#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ballkit/calculus.hpp"
#include "ballkit/demos.hpp"
#include "ballkit/errors.hpp"
#include "ballkit/expr.hpp"
#include "ballkit/helmholtz.hpp"
#include "ballkit/io.hpp"
#include "ballkit/rotation.hpp"
#include "ballkit/vector_field.hpp"

namespace {

using namespace ballkit;

// Bad flag combinations discovered after CLI11's own checks; exits 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ScalarOpts {
    std::string expr;
    std::string in;
    std::string coords = "cart";
    std::string out;
    std::vector<int> size;
};

struct VectorOpts {
    std::string expr;
    std::string in;
    std::string coords = "cart";
    std::string out;
};

void add_input_flags(CLI::App* sub, std::string& expr, std::string& in,
                     std::string& coords, const char* what) {
    auto* g = sub->add_option_group("input");
    g->add_option("--expr", expr, std::string("expression for ") + what +
                                      " in x, y, z, r, lam, th");
    g->add_option("--in", in, std::string(".bfn file holding ") + what);
    g->require_option(1);
    sub->add_option("--coords", coords, "argument order for --expr sampling: cart = (x, y, z), sph = (r, lam, th)")
        ->check(CLI::IsMember({"cart", "sph"}));
}

Coords coords_of(const std::string& s) {
    return s == "sph" ? Coords::spherical : Coords::cartesian;
}

Expr parse_reporting(const std::string& src) {
    Expr e = parse_expr(src);
    for (const auto& w : e.warnings()) std::fprintf(stderr, "warning: %s\n", w.c_str());
    return e;
}

void check_triple(const std::vector<int>& v, const char* flag) {
    if (v.size() != 3) throw UsageError(std::string(flag) + " needs three comma-separated values");
}

BallScalar make_scalar(const ScalarOpts& o) {
    if (!o.in.empty()) {
        if (!o.size.empty()) throw UsageError("--size only applies to --expr input");
        return load(o.in);
    }
    Expr e = parse_reporting(o.expr);
    Coords c = coords_of(o.coords);
    if (!o.size.empty()) {
        check_triple(o.size, "--size");
        return construct_fixed(e.point_fn(c), c, o.size[0], o.size[1], o.size[2]);
    }
    return construct(e.point_fn(c), c);
}

std::vector<std::string> split_semis(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(';', start);
        parts.push_back(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return parts;
}

BallVector make_vector(const VectorOpts& o) {
    if (!o.in.empty()) {
        auto parts = split_semis(o.in);
        if (parts.size() != 3)
            throw UsageError("--in needs three ;-separated .bfn paths for a vector field");
        return BallVector(load(parts[0]), load(parts[1]), load(parts[2]));
    }
    auto parts = split_semis(o.expr);
    if (parts.size() != 3)
        throw UsageError("--expr needs three ;-separated component expressions for a vector field");
    Coords c = coords_of(o.coords);
    Expr ex = parse_reporting(parts[0]);
    Expr ey = parse_reporting(parts[1]);
    Expr ez = parse_reporting(parts[2]);
    return construct_vector(ex.point_fn(c), ey.point_fn(c), ez.point_fn(c), c);
}

void print_info(const BallScalar& f) {
    std::printf("size: %d x %d x %d\n", f.m(), f.n(), f.p());
    std::printf("vscale: %.6g\n", f.vscale());
    std::printf("resolved: %s\n", f.resolved() ? "yes" : "no");
}

void maybe_save(const BallScalar& f, const std::string& out) {
    if (out.empty()) return;
    save(f, out);
    std::printf("saved %s\n", out.c_str());
}

void run_construct(const ScalarOpts& o) {
    BallScalar f = make_scalar(o);
    print_info(f);
    maybe_save(f, o.out);
}

void run_slice(const ScalarOpts& o, const std::string& plane, int res) {
    BallScalar f = make_scalar(o);
    if (o.out.empty()) {
        emit_slice(f, plane, res, std::cout);
        return;
    }
    std::ofstream os(o.out, std::ios::binary);
    if (!os) throw FormatError("slice: cannot open " + o.out);
    emit_slice(f, plane, res, os);
    if (!os.good()) throw FormatError("slice: write to " + o.out + " failed");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"adaptive spectral computation on the unit ball"};
    app.require_subcommand(1);

    {
        auto o = std::make_shared<ScalarOpts>();
        auto* sub = app.add_subcommand("construct", "build a function and report its resolved sizes");
        add_input_flags(sub, o->expr, o->in, o->coords, "the function");
        sub->add_option("--size", o->size, "fixed sizes m,n,p instead of adaptive construction")->delimiter(',');
        sub->add_option("--out", o->out, "write the coefficients as a .bfn file");
        sub->callback([o] { run_construct(*o); });
    }

    {
        auto o = std::make_shared<ScalarOpts>();
        auto* sub = app.add_subcommand("info", "print sizes, value scale, and resolution state");
        add_input_flags(sub, o->expr, o->in, o->coords, "the function");
        sub->add_option("--size", o->size, "fixed sizes m,n,p instead of adaptive construction")->delimiter(',');
        sub->callback([o] { print_info(make_scalar(*o)); });
    }

    {
        auto o = std::make_shared<ScalarOpts>();
        auto point = std::make_shared<std::vector<double>>();
        auto* sub = app.add_subcommand("eval", "evaluate at a Cartesian point inside the ball");
        add_input_flags(sub, o->expr, o->in, o->coords, "the function");
        sub->add_option("--size", o->size, "fixed sizes m,n,p instead of adaptive construction")->delimiter(',');
        sub->add_option("--point", *point, "evaluation point x,y,z")->delimiter(',')->required();
        sub->callback([o, point] {
            if (point->size() != 3) throw UsageError("--point needs three comma-separated values");
            BallScalar f = make_scalar(*o);
            Complex v = eval_point(f, (*point)[0], (*point)[1], (*point)[2]);
            std::printf("%.15g\n", v.real());
        });
    }

    {
        auto o = std::make_shared<ScalarOpts>();
        auto* sub = app.add_subcommand("integrate", "integrate over the unit ball");
        add_input_flags(sub, o->expr, o->in, o->coords, "the integrand");
        sub->add_option("--size", o->size, "fixed sizes m,n,p instead of adaptive construction")->delimiter(',');
        sub->callback([o] { std::printf("%.15g\n", sum3(make_scalar(*o))); });
    }

    {
        auto o = std::make_shared<ScalarOpts>();
        auto axis = std::make_shared<std::string>();
        auto* sub = app.add_subcommand("derive", "differentiate along a Cartesian axis");
        add_input_flags(sub, o->expr, o->in, o->coords, "the function");
        sub->add_option("--size", o->size, "fixed sizes m,n,p instead of adaptive construction")->delimiter(',');
        sub->add_option("--axis", *axis, "derivative direction")
            ->check(CLI::IsMember({"x", "y", "z"}))
            ->required();
        sub->add_option("--out", o->out, "write the derivative as a .bfn file");
        sub->callback([o, axis] {
            BallScalar d = diff_cart(make_scalar(*o), *axis == "x" ? 0 : *axis == "y" ? 1 : 2);
            print_info(d);
            maybe_save(d, o->out);
        });
    }

    {
        auto o = std::make_shared<ScalarOpts>();
        auto angles = std::make_shared<std::vector<double>>();
        auto* sub = app.add_subcommand("rotate", "rotate by z-x-z Euler angles");
        add_input_flags(sub, o->expr, o->in, o->coords, "the function");
        sub->add_option("--size", o->size, "fixed sizes m,n,p instead of adaptive construction")->delimiter(',');
        sub->add_option("--angles", *angles, "Euler angles alpha,beta,gamma (radians)")
            ->delimiter(',')
            ->required();
        sub->add_option("--out", o->out, "write the rotated function as a .bfn file");
        sub->callback([o, angles] {
            if (angles->size() != 3) throw UsageError("--angles needs three comma-separated values");
            BallScalar g = rotate(make_scalar(*o), (*angles)[0], (*angles)[1], (*angles)[2]);
            print_info(g);
            maybe_save(g, o->out);
        });
    }

    {
        auto o = std::make_shared<ScalarOpts>();
        auto k2 = std::make_shared<double>(0.0);
        auto kind = std::make_shared<std::string>("dirichlet");
        auto bc_expr = std::make_shared<std::string>();
        auto size = std::make_shared<std::vector<int>>();
        auto* sub = app.add_subcommand(
            "helmholtz", "solve lap(u) + k2 * u = f with dirichlet or neumann data");
        add_input_flags(sub, o->expr, o->in, o->coords, "the right-hand side");
        sub->add_option("--k2", *k2, "real Helmholtz constant k^2 (negative allowed)")->required();
        sub->add_option("--bc-kind", *kind, "boundary data meaning: u (dirichlet) or du/dr (neumann)")
            ->check(CLI::IsMember({"dirichlet", "neumann"}));
        sub->add_option("--bc-expr", *bc_expr, "boundary data sampled on the unit sphere")->required();
        sub->add_option("--size", *size, "solver sizes m,n,p")->delimiter(',')->required();
        sub->add_option("--out", o->out, "write the solution as a .bfn file");
        sub->callback([o, k2, kind, bc_expr, size] {
            check_triple(*size, "--size");
            BallScalar f = make_scalar(*o);
            Coords c = coords_of(o->coords);
            Expr g = parse_reporting(*bc_expr);
            BoundaryTrace bc = trace_from_function(g.point_fn(c), c, (*size)[1], (*size)[2]);
            BcKind k = *kind == "neumann" ? BcKind::neumann : BcKind::dirichlet;
            BallScalar u = helmholtz_solve(f, *k2, bc, (*size)[0], (*size)[1], (*size)[2], k);
            print_info(u);
            maybe_save(u, o->out);
        });
    }

    {
        auto o = std::make_shared<VectorOpts>();
        auto* sub = app.add_subcommand(
            "ptdecomp", "split a divergence-free field into poloidal and toroidal potentials");
        add_input_flags(sub, o->expr, o->in, o->coords, "the vector field (three ;-separated components)");
        sub->add_option("--out", o->out, "prefix for <prefix>-poloidal.bfn and <prefix>-toroidal.bfn");
        sub->callback([o] {
            PtPotentials parts = pt_decompose(make_vector(*o));
            std::printf("poloidal vscale: %.6g\n", parts.poloidal.vscale());
            std::printf("toroidal vscale: %.6g\n", parts.toroidal.vscale());
            if (!o->out.empty()) {
                save(parts.poloidal, o->out + "-poloidal.bfn");
                save(parts.toroidal, o->out + "-toroidal.bfn");
                std::printf("saved %s-{poloidal,toroidal}.bfn\n", o->out.c_str());
            }
        });
    }

    {
        auto o = std::make_shared<VectorOpts>();
        auto* sub = app.add_subcommand(
            "hhd", "split a field into a gradient and a tangential divergence-free part");
        add_input_flags(sub, o->expr, o->in, o->coords, "the vector field (three ;-separated components)");
        sub->add_option("--out", o->out,
                        "prefix for <prefix>-potential.bfn and <prefix>-solenoidal-{x,y,z}.bfn");
        sub->callback([o] {
            HodgeDecomposition h = helmholtz_hodge(make_vector(*o));
            std::printf("potential vscale: %.6g\n", h.potential.vscale());
            std::printf("solenoidal vscale: %.6g\n", h.solenoidal.vscale());
            if (!o->out.empty()) {
                save(h.potential, o->out + "-potential.bfn");
                save(h.solenoidal.x(), o->out + "-solenoidal-x.bfn");
                save(h.solenoidal.y(), o->out + "-solenoidal-y.bfn");
                save(h.solenoidal.z(), o->out + "-solenoidal-z.bfn");
                std::printf("saved %s-potential.bfn and %s-solenoidal-{x,y,z}.bfn\n",
                            o->out.c_str(), o->out.c_str());
            }
        });
    }

    {
        auto o = std::make_shared<ScalarOpts>();
        auto plane = std::make_shared<std::string>();
        auto res = std::make_shared<int>(41);
        auto* sub = app.add_subcommand("slice", "emit CSV samples on a plane or on the sphere");
        add_input_flags(sub, o->expr, o->in, o->coords, "the function");
        sub->add_option("--size", o->size, "fixed sizes m,n,p instead of adaptive construction")->delimiter(',');
        sub->add_option("--plane", *plane, "x=c, y=c, z=c (|c| <= 1), or r=1")->required();
        sub->add_option("--res", *res, "samples per direction (default 41)");
        sub->add_option("--out", o->out, "write CSV here instead of stdout");
        sub->callback([o, plane, res] { run_slice(*o, *plane, *res); });
    }

    {
        auto steps = std::make_shared<int>(10);
        auto res = std::make_shared<int>(30);
        auto out = std::make_shared<std::string>();
        auto* sub = app.add_subcommand(
            "demo-advdiff", "stir a passive scalar and report the conserved total per step");
        sub->add_option("--steps", *steps, "number of time steps (dt = 1/20)");
        sub->add_option("--res", *res, "cube size n for the solver (default 30)");
        sub->add_option("--out", *out, "prefix for <prefix>-NNN.bfn snapshots");
        sub->callback([steps, res, out] {
            auto states = demo_advdiff(*steps, *res);
            for (std::size_t i = 0; i < states.size(); ++i) {
                std::printf("step %zu mass %.15g\n", i, sum3(states[i]));
                if (!out->empty()) {
                    char name[32];
                    std::snprintf(name, sizeof name, "-%03zu.bfn", i);
                    save(states[i], *out + name);
                }
            }
        });
    }

    {
        auto steps = std::make_shared<int>(2);
        auto res = std::make_shared<int>(40);
        auto out = std::make_shared<std::string>();
        auto* sub = app.add_subcommand(
            "demo-induction", "diffuse a seed magnetic field in a fixed flow, reporting energy per step");
        sub->add_option("--steps", *steps, "number of time steps (dt = 1/20)");
        sub->add_option("--res", *res, "cube size n for the solver (default 40)");
        sub->add_option("--out", *out, "prefix for <prefix>-NNN-{poloidal,toroidal}.bfn snapshots");
        sub->callback([steps, res, out] {
            auto states = demo_induction(*steps, *res);
            for (std::size_t i = 0; i < states.size(); ++i) {
                BallVector b = pt_to_vector(states[i]);
                std::printf("step %zu energy %.15g\n", i, sum3(dot(b, b)));
                if (!out->empty()) {
                    char name[48];
                    std::snprintf(name, sizeof name, "-%03zu-poloidal.bfn", i);
                    save(states[i].poloidal, *out + name);
                    std::snprintf(name, sizeof name, "-%03zu-toroidal.bfn", i);
                    save(states[i].toroidal, *out + name);
                }
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const ballkit::ParseError& e) {
        std::fprintf(stderr, "parse error at byte %zu: %s\n", e.offset, e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
    return 0;
}
