#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <cctype>
#include <sstream>

#include "rea/classify.hpp"
#include "rea/errors.hpp"
#include "rea/exactq.hpp"
#include "rea/identities.hpp"

namespace reacli {

using rea::Finding;

namespace {

Finding finding(const std::string& check, bool pass, double residual, const std::string& detail = {}) {
    Finding f;
    f.check = check;
    f.pass = pass;
    f.residual = residual;
    f.detail = detail;
    return f;
}

// Comma lists: whitespace is ignored, empty entries are errors.
std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s + sep) {
        if (ch == sep) {
            if (cur.empty()) throw rea::ParseError("empty entry in list '" + s + "'");
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    return out;
}

json extsig_json(const rea::ExtendedSignature& e) {
    return json{{"rmod1", e.rmod1}, {"nplus", e.nplus}, {"nminus", e.nminus}, {"nzero", e.nzero}};
}

json component_json(const rea::SpectralComponent& c) {
    json j;
    j["multiplicity"] = c.multiplicity;
    j["sigma"] = c.sigma;
    j["roots"] = c.roots;
    j["signature"] = c.signature;
    j["rank"] = c.rank;
    j["admissible"] = c.admissible;
    if (c.admissible) j["extsig"] = extsig_json(c.ext);
    return j;
}

std::uint64_t next(std::uint64_t& state) {
    // splitmix64: fixed output sequence on every platform.
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

int uniform_int(std::uint64_t& state, int lo, int hi) { return lo + static_cast<int>(next(state) % static_cast<std::uint64_t>(hi - lo + 1)); }

}  // namespace

double uniform01(std::uint64_t& state) { return static_cast<double>(next(state) >> 11) * 0x1.0p-53; }

std::vector<int> parse_eps(const std::string& s) {
    std::vector<int> out;
    for (const auto& t : split(s, ',')) {
        if (t == "+" || t == "1" || t == "+1") out.push_back(1);
        else if (t == "-" || t == "-1") out.push_back(-1);
        else if (t == "0") out.push_back(0);
        else throw rea::ParseError("bad sign '" + t + "' (use +, -, 0 or 1, -1, 0)");
    }
    return out;
}

std::vector<double> parse_reals(const std::string& s) {
    std::vector<double> out;
    for (const auto& t : split(s, ',')) out.push_back(rea::parse_rational(t).get_d());
    return out;
}

rea::HWModuleSpec RepArgs::spec() const {
    rea::HWModuleSpec s;
    s.N = N;
    s.eps = eps;
    s.r = r;
    s.D = depth;
    s.q0 = q0;
    s.margin = margin;
    return s;
}

json RepArgs::to_json() const {
    json j;
    j["n"] = N;
    j["q0"] = q0;
    j["depth"] = depth;
    j["margin"] = margin < 0 ? 4 * N : margin;
    if (family) {
        j["family"] = *family;
        j["c"] = c;
        j["a"] = a;
        j["lambda"] = lambda;
        j["theta"] = theta;
        j["ladder"] = ladder;
    } else {
        j["eps"] = eps;
        j["r"] = r;
    }
    return j;
}

RepArgs RepArgs::from_json(const json& j) {
    RepArgs a;
    try {
        a.N = j.at("n").get<int>();
        a.q0 = j.at("q0").get<double>();
        a.depth = j.at("depth").get<int>();
        a.margin = j.at("margin").get<int>();
        if (j.contains("family")) {
            a.family = j.at("family").get<std::string>();
            a.c = j.at("c").get<double>();
            a.a = j.at("a").get<double>();
            a.lambda = j.at("lambda").get<double>();
            a.theta = j.at("theta").get<double>();
            a.ladder = j.at("ladder").get<int>();
        } else {
            a.eps = j.at("eps").get<std::vector<int>>();
            a.r = j.at("r").get<std::vector<double>>();
        }
    } catch (const json::exception& e) {
        throw rea::ParseError(std::string("rep inputs: ") + e.what());
    }
    return a;
}

rea::HermitianRep build_rep(const RepArgs& a, bool parallel) {
    if (!a.family) {
        if (a.eps.size() != a.r.size()) throw rea::DomainError("--eps and --r must have the same length");
        return rea::build_bigcell_rep(a.spec(), parallel);
    }
    if (a.N != 2) throw rea::DomainError("--family needs --n 2");
    rea::N2Params p;
    const std::string& f = *a.family;
    if (f == "S_pos") p.kind = rea::N2Kind::SPos;
    else if (f == "S_zero") p.kind = rea::N2Kind::SZero;
    else if (f == "S_neg+") p.kind = rea::N2Kind::SNegPlus;
    else if (f == "S_neg-") p.kind = rea::N2Kind::SNegMinus;
    else if (f == "char") p.kind = rea::N2Kind::Char;
    else if (f == "char_zero") p.kind = rea::N2Kind::CharZero;
    else if (f == "zero") p.kind = rea::N2Kind::Zero;
    else throw rea::DomainError("unknown family '" + f + "'");
    p.c = a.c;
    p.a = a.a;
    p.lambda = a.lambda;
    p.theta = a.theta;
    p.n = a.ladder;
    return rea::n2_family(p, a.depth, a.q0, a.margin < 0 ? 4 : a.margin);
}

Report verify_algebra(int N, bool parallel) {
    if (N < 1 || N > 4) throw rea::DomainError("verify-algebra supports 1 <= n <= 4");
    Report r;
    r.inputs = json{{"command", "verify-algebra"}, {"n", N}};
    rea::SuiteOptions opt;
    opt.parallel = parallel;
    // Cayley-Hamilton and the minor suites grow quickly; at N = 4 only the
    // relation-level checks are run.
    if (N >= 4) opt.cayley_hamilton = opt.laplace = opt.leading_minors = opt.sigma_central = opt.det_central = false;
    r.add_all(rea::identity_suite(N, opt));
    return r;
}

Report rep_build(const RepArgs& a, double tol) {
    Report r;
    r.q0 = a.q0;
    r.inputs = a.to_json();
    r.inputs["command"] = "rep-build";
    rea::HermitianRep rep = build_rep(a);
    json data{{"dim", rep.dim}, {"interior", rep.interior().size()}, {"rank", rep.rank}, {"signature", rep.signature}, {"source", rep.source},
              {"predicted_roots", rep.predicted_roots}};
    r.add(finding("build", rep.dim > 0, 0.0), data);
    if (!a.family && a.spec().M() > 0) r.add_all(rea::verify_hw_module(rea::build_hw_module(a.spec()), tol));
    return r;
}

Report rep_verify(const RepArgs& a, double tol, bool parallel) {
    Report r;
    r.q0 = a.q0;
    r.inputs = a.to_json();
    r.inputs["command"] = "rep-verify";
    rea::HermitianRep rep = build_rep(a, parallel);
    rea::RepCheck rc = rea::verify_rep(rep, tol, parallel);
    r.add_all(rc.findings);
    rea::SpectralData sd = rea::spectral_data(rep, parallel);
    json comps = json::array();
    bool adm = true;
    for (const auto& c : sd.components) {
        comps.push_back(component_json(c));
        adm = adm && c.admissible;
    }
    json data;
    data["rep_id"] = rep.source;
    data["residuals"] = json{{"re", rc.re}, {"selfadj", rc.selfadj}, {"ch", rc.ch}};
    data["sigma"] = rc.sigma;
    if (!sd.components.empty()) {
        const auto& c0 = sd.components.front();
        data["roots"] = c0.roots;
        data["signature"] = c0.signature;
        data["rank"] = c0.rank;
        if (c0.admissible) data["extsig"] = extsig_json(c0.ext);
    }
    data["components"] = comps;
    r.add(finding("spectral_admissible", adm, 0.0), data);
    if (!rep.predicted_roots.empty() && sd.components.size() == 1) {
        const auto& got = sd.components.front().roots;
        double worst = 0;
        for (size_t i = 0; i < got.size(); ++i)
            worst = std::max(worst, std::abs(got[i] - rep.predicted_roots[i]) / std::max(1.0, std::abs(rep.predicted_roots[i])));
        r.add(finding("roots_match_prediction", worst < 1e-9, worst));
    }
    if (rep.spec && !rep.T.empty() && rep.N <= 3) {
        const double mq = rea::minor_qcommutation_residual(rep);
        r.add(finding("minor_qcommutation", mq < tol, mq));
        const double lc = rea::leading_minor_crosscheck(rep, parallel);
        r.add(finding("leading_minor_crosscheck", lc < tol, lc));
    }
    return r;
}

Report classify_roots(const std::vector<double>& roots, double q0, const std::vector<int>& eps, double tol) {
    Report r;
    r.q0 = q0;
    r.inputs = json{{"command", "classify-roots"}, {"roots", roots}};
    if (!eps.empty()) r.inputs["eps"] = eps;
    auto dec = rea::admissible_roots(roots, q0, tol);
    if (!dec) {
        r.add(finding("admissible", false, 1.0, "roots are not a spectral weight"));
        return r;
    }
    json data{{"alpha", dec->alpha + 0.0}, {"beta", dec->beta + 0.0}, {"m", dec->m}, {"n", dec->n}, {"nzero", dec->nzero}};
    data["extsig"] = extsig_json(rea::ext_signature(roots, q0, tol));
    r.add(finding("admissible", true, 0.0), data);
    if (!eps.empty()) {
        try {
            auto w = rea::canonical_weight(roots, eps, q0, tol);
            const bool ok = rea::eps_adapted(w, eps);
            r.add(finding("canonical_weight", ok, 0.0, ok ? "" : "weight is not eps-adapted"), json{{"r", w}});
        } catch (const rea::SignMismatch& e) {
            r.add(finding("canonical_weight", false, 1.0, e.what()));
        }
    }
    return r;
}

Report characters(int max_n, int samples, std::uint64_t seed) {
    if (max_n < 1 || max_n > 6) throw rea::DomainError("characters supports 1 <= n <= 6");
    if (samples < 1) throw rea::DomainError("--samples must be positive");
    Report r;
    r.inputs = json{{"command", "characters"}, {"n", max_n}, {"samples", samples}, {"seed", seed}};
    std::uint64_t st = seed;
    for (int N = 1; N <= max_n; ++N)
        for (int l = 0; 2 * l <= N; ++l)
            for (int k = 0; k + 2 * l <= N; ++k) {
                int bad = 0;
                json shape;
                for (int s = 0; s < samples; ++s) {
                    rea::ExactCharacterParams p;
                    p.k = k;
                    p.l = l;
                    p.a = rea::make_rational(uniform_int(st, 1, 9), uniform_int(st, 1, 9));
                    p.c = rea::make_rational(uniform_int(st, 1, 9) * (uniform_int(st, 0, 1) ? 1 : -1), uniform_int(st, 1, 9));
                    for (int i = 0; i < l; ++i) p.y.push_back(rea::unit_circle_point(rea::make_rational(uniform_int(st, -9, 9), uniform_int(st, 1, 9))));
                    rea::GaussMat Z = rea::star_character_exact(p, N);
                    if (!rea::re_defect_exact(Z, N).is_zero()) ++bad;
                    if (s == 0) {
                        // Zero pattern of the first sample: '.' zero, 'x' nonzero.
                        shape = json::array();
                        for (int i = 0; i < N; ++i) {
                            std::string row;
                            for (int j = 0; j < N; ++j) row += Z(i, j).is_zero() ? '.' : 'x';
                            shape.push_back(row);
                        }
                    }
                }
                std::ostringstream name;
                name << "character_re[N=" << N << ",k=" << k << ",l=" << l << "]";
                r.add(finding(name.str(), bad == 0, bad, bad ? std::to_string(bad) + " samples fail" : ""), json{{"shape", shape}});
            }
    return r;
}

Report transport(const TransportArgs& t, double tol) {
    Report r;
    r.q0 = t.rep.q0;
    r.inputs = t.rep.to_json();
    r.inputs["command"] = "transport";
    r.inputs["corep"] = t.corep;
    auto ext_of = [&](const rea::HermitianRep& rep, json& comps) {
        rea::SpectralData sd = rea::spectral_data(rep);
        std::vector<rea::SpectralComponent> out = sd.components;
        for (const auto& c : out) comps.push_back(component_json(c));
        return out;
    };
    if (t.corep == "s") {
        r.inputs["c"] = t.c;
        r.inputs["s_depth"] = t.s_depth;
        rea::CharacterParams cp;
        cp.k = 0;
        cp.l = 1;
        cp.a = t.rep.a;
        cp.c = t.rep.c;
        cp.y = {std::polar(1.0, 2 * std::numbers::pi * t.rep.theta)};
        rea::HermitianRep base = rea::character_rep(rea::star_character(cp, 2), t.rep.q0);
        rea::HermitianRep moved = rea::adjoint_transport_U(base, rea::suq2_rep(t.s_depth, t.rep.q0), 4, tol);
        rea::RepCheck rc = rea::verify_rep(moved, tol);
        r.add_all(rc.findings);
        std::vector<double> spec = rea::interior_spectrum(moved.z(1, 1), moved, 1e-10);
        int pos = 0, neg = 0;
        for (double x : spec) {
            if (x > 1e-12) ++pos;
            if (x < -1e-12) ++neg;
        }
        json b = json::array(), m = json::array();
        auto cb = ext_of(base, b);
        auto cm = ext_of(moved, m);
        bool same = cb.size() == 1 && cm.size() == 1 && cm[0].admissible && rea::ext_equal(cb[0].ext, cm[0].ext, 1e-8);
        r.add(finding("extsig_invariant", same, 0.0), json{{"before", b}, {"after", m}});
        r.add(finding("z11_both_signs", pos > 0 && neg > 0, 0.0), json{{"positive", pos}, {"negative", neg}});
        return r;
    }
    if (t.rep.N != 2 && t.corep != "scaling") throw rea::DomainError("transport: corep '" + t.corep + "' needs --n 2");
    rea::HermitianRep base = build_rep(t.rep);
    rea::HermitianRep moved;
    if (t.corep == "scaling") {
        r.inputs["c"] = t.c;
        moved = rea::adjoint_transport_T(base, rea::scaling_corep(t.rep.N, t.c));
    } else if (t.corep == "vector") {
        moved = rea::adjoint_transport_T(base, rea::vector_corep(t.rep.q0));
    } else if (t.corep == "u2char") {
        r.inputs["theta"] = t.theta;
        moved = rea::adjoint_transport_U(base, rea::u2_character(t.theta), 0, tol);
    } else {
        throw rea::DomainError("unknown corep '" + t.corep + "' (scaling, vector, u2char, s)");
    }
    rea::RepCheck rc = rea::verify_rep(moved, tol);
    r.add_all(rc.findings);
    json b = json::array(), m = json::array();
    auto cb = ext_of(base, b);
    auto cm = ext_of(moved, m);
    bool same = cb.size() == 1 && !cm.empty();
    int rank_ok = 1;
    for (const auto& c : cm) {
        same = same && c.admissible && cb[0].admissible && rea::ext_equal(cb[0].ext, c.ext, 1e-8);
        rank_ok &= c.rank == cb[0].rank;
    }
    r.add(finding("extsig_invariant", same, 0.0), json{{"before", b}, {"after", m}});
    r.add(finding("rank_invariant", rank_ok == 1, 0.0));
    if (t.corep == "scaling") {
        // Roots scale by c^2.
        double worst = 0;
        for (size_t i = 0; i < cb[0].roots.size(); ++i)
            worst = std::max(worst, std::abs(cm[0].roots[i] - t.c * t.c * cb[0].roots[i]) / std::max(1.0, std::abs(cm[0].roots[i])));
        r.add(finding("roots_scale_c2", worst < 1e-9, worst));
    }
    return r;
}

namespace {

struct Cell {
    std::vector<int> eps;
    std::vector<double> r;
    bool intended_adapted = true;
};

// Random eps and r.  Adapted cells place r_k + k on a shifted integer ladder
// inside each class of equal prefix sign; non-adapted cells move one member
// of a class with at least two members off the integer lattice.
Cell make_cell(int N, std::uint64_t& st) {
    Cell c;
    const int M = uniform_int(st, 1, N);
    for (int k = 0; k < M; ++k) c.eps.push_back(uniform_int(st, 0, 1) ? 1 : -1);
    std::vector<int> eta(static_cast<size_t>(M));
    int p = 1;
    for (int k = 0; k < M; ++k) eta[static_cast<size_t>(k)] = p *= c.eps[static_cast<size_t>(k)];
    double base[2] = {uniform_int(st, -20, 20) * 0.05, uniform_int(st, -20, 20) * 0.05};
    double last[2] = {0, 0};
    bool seen[2] = {false, false};
    std::vector<double> x(static_cast<size_t>(M));
    for (int k = 0; k < M; ++k) {
        const int cls = eta[static_cast<size_t>(k)] > 0 ? 0 : 1;
        last[cls] = seen[cls] ? last[cls] + uniform_int(st, 1, 2) : base[cls];
        seen[cls] = true;
        x[static_cast<size_t>(k)] = last[cls];
    }
    std::vector<int> movable;
    for (int t = 0; t < M; ++t)
        for (int s = 0; s < t; ++s)
            if (eta[static_cast<size_t>(s)] == eta[static_cast<size_t>(t)]) {
                movable.push_back(t);
                break;
            }
    if (!movable.empty() && uniform_int(st, 0, 1)) {
        const int t = movable[static_cast<size_t>(uniform_int(st, 0, static_cast<int>(movable.size()) - 1))];
        // Shift in (-1, 2) with fractional part in {0.1, ..., 0.9}.
        const double shift = uniform_int(st, 1, 9) * 0.1 + uniform_int(st, -1, 1);
        x[static_cast<size_t>(t)] += shift;
        c.intended_adapted = false;
    }
    for (int k = 0; k < M; ++k) c.r.push_back(x[static_cast<size_t>(k)] - (k + 1));
    return c;
}

}  // namespace

Report sweep(const SweepArgs& s) {
    if (s.N < 1 || s.N > 4) throw rea::DomainError("sweep supports 1 <= n <= 4");
    if (s.cells < 1 || s.bound < 1) throw rea::DomainError("sweep needs positive --cells and --bound");
    Report r;
    r.q0 = s.q0;
    r.inputs = json{{"command", "sweep"}, {"n", s.N}, {"cells", s.cells}, {"bound", s.bound}, {"seed", s.seed}, {"with_reps", s.with_reps}};
    if (s.with_reps) {
        const int margin = s.margin < 0 ? 4 * s.N : s.margin;
        if (s.depth <= margin)
            throw rea::DomainError("sweep: --depth " + std::to_string(s.depth) + " must exceed the interior margin " + std::to_string(margin));
        r.inputs["depth"] = s.depth;
        r.inputs["margin"] = margin;
    }
    std::uint64_t st = s.seed;
    std::vector<Cell> cells;
    for (int i = 0; i < s.cells; ++i) cells.push_back(make_cell(s.N, st));
    std::vector<std::vector<ReportFinding>> out(cells.size());
    // Cells are independent; results are stored by index and emitted in order.
#pragma omp parallel for schedule(dynamic, 1)
    for (int i = 0; i < s.cells; ++i) {
        const Cell& c = cells[static_cast<size_t>(i)];
        char tag[32];
        std::snprintf(tag, sizeof tag, "cell[%04d]", i);
        rea::HWModuleSpec spec;
        spec.N = s.N;
        spec.eps = c.eps;
        spec.r = c.r;
        spec.q0 = s.q0;
        spec.unitary = false;
        const bool adapted = rea::eps_adapted(c.r, c.eps);
        const rea::NormScan scan = rea::scan_norms(spec, s.bound);
        const bool ok = adapted == c.intended_adapted && adapted == (scan.negative == 0);
        json data{{"eps", c.eps}, {"r", c.r}, {"adapted", adapted}, {"patterns", scan.patterns}, {"negative", scan.negative}, {"zero", scan.zero}};
        if (!scan.first_negative.empty()) data["first_negative"] = scan.first_negative;
        out[static_cast<size_t>(i)].push_back({finding(std::string(tag) + ".unitary_iff_adapted", ok, ok ? 0.0 : 1.0), data});
        if (s.with_reps && adapted) {
            try {
                rea::HWModuleSpec rs = spec;
                rs.unitary = true;
                rs.D = s.depth;
                rs.margin = s.margin;
                rea::HermitianRep rep = rea::build_bigcell_rep(rs, false);
                rea::RepCheck rc = rea::verify_rep(rep, s.tol, false);
                for (auto f : rc.findings) {
                    f.check = std::string(tag) + "." + f.check;
                    out[static_cast<size_t>(i)].push_back({f, json::object()});
                }
                rea::SpectralData sd = rea::spectral_data(rep, false);
                const bool adm = sd.components.size() == 1 && sd.components[0].admissible;
                out[static_cast<size_t>(i)].push_back({finding(std::string(tag) + ".spectral_admissible", adm, 0.0), component_json(sd.components[0])});
            } catch (const rea::Error& e) {
                out[static_cast<size_t>(i)].push_back({finding(std::string(tag) + ".rep", false, 1.0, e.what()), json::object()});
            }
        }
    }
    for (auto& v : out)
        for (auto& f : v) r.findings.push_back(std::move(f));
    return r;
}

}  // namespace reacli
