// reacli: verification suites, representation builds, classification and
// sweeps with JSON reports.  Exit codes: 0 pass, 1 check failure, 2 usage.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "rea/errors.hpp"
#include "rea/exactq.hpp"

namespace {

struct Common {
    int n = 2;
    std::string eps, r, q = "1/2", out, family;
    int depth = 12, margin = -1;
    double tol = 1e-9;
    std::uint64_t seed = 1;
};

void add_rep_flags(CLI::App* sc, Common& c) {
    sc->add_option("--n", c.n, "matrix size N");
    sc->add_option("--eps", c.eps, "sign vector, e.g. +,-");
    sc->add_option("--r", c.r, "highest weight, comma separated reals");
    sc->add_option("--depth", c.depth, "truncation height D");
    sc->add_option("--margin", c.margin, "interior margin (default 4N; smaller margins can expose truncation effects)");
    sc->add_option("--q", c.q, "deformation parameter q0 in (0,1), decimal or rational");
    sc->add_option("--tol", c.tol, "residual tolerance");
    sc->add_option("--out", c.out, "write the JSON report to this file");
}

reacli::RepArgs rep_args(const Common& c, const std::string& family, double fc, double fa, double flambda, double ftheta, int ladder) {
    reacli::RepArgs a;
    a.N = c.n;
    a.q0 = rea::parse_q0(c.q);
    a.depth = c.depth;
    a.margin = c.margin;
    if (!family.empty()) {
        a.family = family;
        a.c = fc;
        a.a = fa;
        a.lambda = flambda;
        a.theta = ftheta;
        a.ladder = ladder;
    } else {
        a.eps = reacli::parse_eps(c.eps);
        a.r = reacli::parse_reals(c.r);
    }
    return a;
}

int finish(const reacli::Report& r, const std::string& out) {
    const std::string text = reacli::emit_report(r);
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write " << out << "\n";
            return 2;
        }
        f << text;
        std::cout << (r.pass() ? "pass" : "FAIL") << " " << out << "\n";
    }
    return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reflection equation algebra verification tool"};
    app.require_subcommand(1);
    Common c;
    std::string roots, from, corep = "vector";
    double fc = 1.0, fa = 1.0, flambda = 1.0, ftheta = 0.0, tc = 1.5;
    int ladder = 0, samples = 3, cells = 100, bound = 8, s_depth = 40;
    bool with_reps = false, serial = false;

    auto* va = app.add_subcommand("verify-algebra", "exact identity suite and braid invariants");
    va->add_option("--n", c.n, "matrix size N");
    va->add_option("--out", c.out, "write the JSON report to this file");
    va->add_flag("--serial", serial, "disable OpenMP in the suite");

    auto* rb = app.add_subcommand("rep-build", "build a representation and check module relations");
    auto* rv = app.add_subcommand("rep-verify", "verify a representation and compute spectral data");
    for (auto* sc : {rb, rv}) {
        add_rep_flags(sc, c);
        sc->add_option("--family", c.family, "N=2 family: S_pos, S_zero, S_neg+, S_neg-, char, char_zero, zero");
        sc->add_option("--c", fc, "family parameter c");
        sc->add_option("--a", fa, "family parameter a");
        sc->add_option("--lambda", flambda, "family parameter lambda");
        sc->add_option("--theta", ftheta, "family parameter theta");
        sc->add_option("--ladder", ladder, "S_pos parameter n (dimension n+1)");
    }
    rv->add_option("--from", from, "read the representation inputs from a rep-build report");

    auto* cr = app.add_subcommand("classify-roots", "admissibility, extended signature and canonical weight");
    cr->add_option("--roots", roots, "comma separated roots")->required();
    cr->add_option("--q", c.q, "deformation parameter q0");
    cr->add_option("--eps", c.eps, "sign vector for the canonical weight");
    cr->add_option("--tol", c.tol, "lattice tolerance");
    cr->add_option("--out", c.out, "write the JSON report to this file");

    auto* ch = app.add_subcommand("characters", "exact reflection equation check of *-characters");
    ch->add_option("--n", c.n, "largest matrix size");
    ch->add_option("--samples", samples, "samples per (k,l)");
    ch->add_option("--seed", c.seed, "random seed");
    ch->add_option("--out", c.out, "write the JSON report to this file");

    auto* tr = app.add_subcommand("transport", "adjoint transport and extended signature invariance");
    add_rep_flags(tr, c);
    tr->add_option("--corep", corep, "scaling, vector, u2char or s");
    tr->add_option("--c", tc, "scaling constant (scaling) or character c (s)");
    tr->add_option("--a", fa, "character parameter a (s)");
    tr->add_option("--theta", ftheta, "character angle (u2char, s)");
    tr->add_option("--s-depth", s_depth, "truncation of the SU_q(2) representation (s)");

    auto* sw = app.add_subcommand("sweep", "seeded unitarity classification sweep");
    sw->add_option("--n", c.n, "matrix size N");
    sw->add_option("--cells", cells, "number of (eps, r) cells");
    sw->add_option("--bound", bound, "pattern bound sum P <= bound");
    sw->add_option("--seed", c.seed, "random seed");
    sw->add_option("--q", c.q, "deformation parameter q0");
    sw->add_flag("--with-reps", with_reps, "also build and verify reps of adapted cells");
    sw->add_option("--depth", c.depth, "truncation height for --with-reps");
    sw->add_option("--margin", c.margin, "interior margin for --with-reps (default 4N; smaller margins can expose truncation effects)");
    sw->add_option("--tol", c.tol, "residual tolerance");
    sw->add_option("--out", c.out, "write the JSON report to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*va) return finish(reacli::verify_algebra(c.n, !serial), c.out);
        if (*rb) return finish(reacli::rep_build(rep_args(c, c.family, fc, fa, flambda, ftheta, ladder), c.tol), c.out);
        if (*rv) {
            reacli::RepArgs a;
            if (!from.empty()) {
                std::ifstream f(from, std::ios::binary);
                if (!f) throw rea::ParseError("cannot read " + from);
                std::stringstream ss;
                ss << f.rdbuf();
                a = reacli::RepArgs::from_json(reacli::parse_report(ss.str()).inputs);
            } else {
                a = rep_args(c, c.family, fc, fa, flambda, ftheta, ladder);
            }
            return finish(reacli::rep_verify(a, c.tol), c.out);
        }
        if (*cr) {
            std::vector<int> eps = c.eps.empty() ? std::vector<int>{} : reacli::parse_eps(c.eps);
            return finish(reacli::classify_roots(reacli::parse_reals(roots), rea::parse_q0(c.q), eps, c.tol), c.out);
        }
        if (*ch) return finish(reacli::characters(c.n, samples, c.seed), c.out);
        if (*tr) {
            reacli::TransportArgs t;
            t.corep = corep;
            t.c = tc;
            t.theta = ftheta;
            t.s_depth = s_depth;
            if (corep == "s") {
                t.rep.N = 2;
                t.rep.q0 = rea::parse_q0(c.q);
                t.rep.c = tc;
                t.rep.a = fa;
                t.rep.theta = ftheta;
            } else {
                t.rep = rep_args(c, "", 1, 1, 1, 0, 0);
            }
            return finish(reacli::transport(t, c.tol), c.out);
        }
        if (*sw) {
            reacli::SweepArgs s;
            s.N = c.n;
            s.cells = cells;
            s.bound = bound;
            s.seed = c.seed;
            s.q0 = rea::parse_q0(c.q);
            s.with_reps = with_reps;
            s.depth = c.depth;
            s.margin = c.margin;
            s.tol = c.tol;
            return finish(reacli::sweep(s), c.out);
        }
    } catch (const rea::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
