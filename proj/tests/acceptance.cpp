// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "rea/classify.hpp"
#include "rea/errors.hpp"
#include "rea/hrep.hpp"
#include "rea/identities.hpp"

using namespace rea;

namespace {

constexpr double q0 = 0.5;

struct Outcome {
    bool pass = true;
    std::ostringstream note;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (pass) note << "first failure: " << what;
            pass = false;
        }
    }
};

using Criterion = std::function<void(Outcome&)>;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

HWModuleSpec gt(int N, std::vector<int> eps, std::vector<double> r) {
    HWModuleSpec s;
    s.N = N;
    s.eps = std::move(eps);
    s.r = std::move(r);
    s.D = 12;
    s.margin = 4 * N;
    s.q0 = q0;
    return s;
}

// eps-adapted weights at N = 2, 3 (margin 4N, depth 12).
std::vector<HWModuleSpec> gt_specs() {
    return {gt(2, {1, -1}, {0.3, 0.8}),      gt(2, {-1, 1}, {0.0, 1.0}),        gt(2, {1, 1}, {0.25, 1.25}),
            gt(2, {-1, -1}, {-0.4, 1.7}),    gt(2, {1}, {0.6}),                 gt(2, {-1}, {-0.3}),
            gt(3, {1, -1, 1}, {0.2, 0.5, 0.5}), gt(3, {-1, 1, 1}, {0.1, 0.1, 0.1}), gt(3, {1, 1, -1}, {0.3, 1.3, -0.6}),
            gt(3, {1, -1, -1}, {0.2, 0.5, 1.2}), gt(3, {1, -1}, {0.3, 0.9}),       gt(3, {-1}, {0.4})};
}

std::string name_of(const HWModuleSpec& s) {
    std::ostringstream o;
    o << "N=" << s.N << " eps=(";
    for (size_t i = 0; i < s.eps.size(); ++i) o << (i ? "," : "") << s.eps[i];
    o << ") r=(";
    for (size_t i = 0; i < s.r.size(); ++i) o << (i ? "," : "") << s.r[i];
    o << ")";
    return o.str();
}

bool group_ok(const GroupResult& g, Outcome& o, const std::string& what) {
    o.require(g.failed == 0 && g.checked > 0, what + (g.first_failure.empty() ? "" : ": " + g.first_failure));
    return g.failed == 0;
}

void braid_hecke(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int N = 1; N <= 4; ++N) group_ok(check_braid_hecke(N), o, "braid/Hecke N=" + std::to_string(N));
    const double t = seconds_since(t0);
    o.require(t < 1.0, "runtime above 1 s");
    o.note << (o.pass ? "" : "; ") << "N<=4 in " << t << " s";
}

void rea_relations(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int N = 2; N <= 3; ++N) group_ok(check_rea_relations(N, true), o, "relations N=" + std::to_string(N));
    group_ok(check_n2_presentation(), o, "N=2 presentation");
    const double t = seconds_since(t0);
    o.require(t < 10.0, "runtime above 10 s");
    o.note << (o.pass ? "" : "; ") << "N=2,3 in " << t << " s";
}

void cayley_hamilton(Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int N = 2; N <= 3; ++N) group_ok(check_cayley_hamilton(N, true), o, "Cayley-Hamilton N=" + std::to_string(N));
    const double t = seconds_since(t0);
    o.require(t < 300.0, "runtime above 5 min");
    o.note << (o.pass ? "" : "; ") << "N=2,3 in " << t << " s";
}

void centrality(Outcome& o) {
    for (int N = 2; N <= 3; ++N) {
        group_ok(check_sigma_central(N, true), o, "sigma centrality N=" + std::to_string(N));
        group_ok(check_leading_minors(N, true), o, "leading minors N=" + std::to_string(N));
    }
}

void laplace(Outcome& o) {
    for (int N = 1; N <= 3; ++N) group_ok(check_laplace(N, true), o, "Laplace N=" + std::to_string(N));
}

void gt_sweep(Outcome& o) {
    int cells = 0, adapted = 0, non_adapted = 0;
    for (int N = 2; N <= 3; ++N) {
        reacli::SweepArgs s;
        s.N = N;
        s.cells = 60;
        s.bound = 8;
        s.seed = 20240 + static_cast<std::uint64_t>(N);
        s.q0 = q0;
        reacli::Report r = reacli::sweep(s);
        for (const auto& f : r.findings) {
            ++cells;
            (f.data.value("adapted", false) ? adapted : non_adapted)++;
            o.require(f.f.pass, f.f.check);
        }
    }
    o.require(cells >= 100, "fewer than 100 cells");
    o.require(adapted > 0 && non_adapted > 0, "sweep did not cover both outcomes");
    o.note << (o.pass ? "" : "; ") << cells << " cells, " << adapted << " adapted, " << non_adapted << " not";
}

void rep_residuals(Outcome& o) {
    double worst = 0;
    for (const auto& s : gt_specs()) {
        RepCheck rc = verify_rep(build_bigcell_rep(s), 1e-9);
        worst = std::max({worst, rc.re, rc.selfadj});
        o.require(rc.re < 1e-9 && rc.selfadj < 1e-9, name_of(s));
    }
    o.note << (o.pass ? "" : "; ") << "max residual " << worst;
}

void harish_chandra(Outcome& o) {
    double worst_hc = 0, worst_roots = 0;
    for (const auto& s : gt_specs()) {
        HermitianRep rep = build_bigcell_rep(s);
        RepCheck rc = verify_rep(rep, 1e-9);
        worst_hc = std::max(worst_hc, rc.hc);
        o.require(rc.hc < 1e-10, "sigma " + name_of(s));
        SpectralData sd = spectral_data(rep);
        o.require(sd.components.size() == 1, "not factorial " + name_of(s));
        // Independent prediction eta_k q^{2(r_k+k)-2}, zeros beyond the rank.
        std::vector<double> want(static_cast<size_t>(s.N), 0.0);
        int eta = 1;
        for (size_t k = 0; k < s.eps.size(); ++k) {
            eta *= s.eps[k];
            want[k] = eta * std::pow(q0, 2 * (s.r[k] + static_cast<double>(k) + 1) - 2);
        }
        // sigma_k must equal the k-th elementary symmetric function of them.
        std::vector<double> e(static_cast<size_t>(s.N) + 1, 0.0);
        e[0] = 1;
        for (double x : want)
            for (size_t k = e.size() - 1; k >= 1; --k) e[k] += x * e[k - 1];
        for (size_t k = 1; k < e.size(); ++k) {
            const double d = std::abs(rc.sigma.at(k - 1) - e[k]) / std::max(1.0, std::abs(e[k]));
            worst_hc = std::max(worst_hc, d);
            o.require(d < 1e-10, "sigma_" + std::to_string(k) + " " + name_of(s));
        }
        std::sort(want.begin(), want.end(), std::greater<>());
        const auto& got = sd.components.at(0).roots;
        for (size_t k = 0; k < want.size(); ++k) {
            const double e = std::abs(got.at(k) - want[k]) / std::max(1.0, std::abs(want[k]));
            worst_roots = std::max(worst_roots, e);
            o.require(e < 1e-9, "roots " + name_of(s));
        }
    }
    o.note << (o.pass ? "" : "; ") << "sigma " << worst_hc << ", roots " << worst_roots;
}

std::vector<N2Params> n2_cases() {
    std::vector<N2Params> out;
    auto add = [&](N2Kind k, double c, double a, double lambda, double theta, int n) {
        N2Params p;
        p.kind = k;
        p.c = c;
        p.a = a;
        p.lambda = lambda;
        p.theta = theta;
        p.n = n;
        out.push_back(p);
    };
    add(N2Kind::SPos, 1.3, 1, 1, 0, 0);
    add(N2Kind::SPos, 1.3, 1, 1, 0, 4);
    add(N2Kind::SPos, -0.8, 1, 1, 0, 2);
    add(N2Kind::SZero, 1, 1, 0.9, 0, 0);
    add(N2Kind::SZero, 1, 1, -1.4, 0, 0);
    add(N2Kind::SNegPlus, 1.2, 0.7, 1, 0, 0);
    add(N2Kind::SNegMinus, 1.2, 0.7, 1, 0, 0);
    add(N2Kind::Char, 0.9, 1.6, 1, 0.0, 0);
    add(N2Kind::Char, 0.9, 1.6, 1, 0.37, 0);
    add(N2Kind::CharZero, 1, 1, 2.2, 0, 0);
    add(N2Kind::Zero, 1, 1, 1, 0, 0);
    return out;
}

void admissibility(Outcome& o) {
    int checked = 0;
    auto check = [&](const HermitianRep& rep, const std::string& what) {
        for (const auto& c : spectral_data(rep).components) {
            ++checked;
            o.require(c.admissible && admissible_roots(c.roots, q0).has_value(), what);
        }
    };
    for (const auto& s : gt_specs()) check(build_bigcell_rep(s), name_of(s));
    for (const auto& p : n2_cases()) check(n2_family(p, 24, q0), n2_kind_name(p.kind));
    HermitianRep base = build_bigcell_rep(gt(2, {1, -1}, {0.3, 0.8}));
    check(adjoint_transport_T(base, vector_corep(q0)), "vector transport");
    check(adjoint_transport_T(base, scaling_corep(2, 1.7)), "scaling transport");
    o.require(!admissible_roots({1.0, 1.0, 0.0}, q0), "{1,1,0} accepted");
    o.require(!admissible_roots({1.0, q0, 0.0}, q0), "{1,q,0} accepted");
    o.note << (o.pass ? "" : "; ") << checked << " components admissible, 2 multisets rejected";
}

void n2_families(Outcome& o) {
    double worst = 0;
    for (const auto& p : n2_cases()) {
        const std::string what = n2_kind_name(p.kind);
        HermitianRep rep = n2_family(p, 24, q0);
        RepCheck rc = verify_rep(rep, 1e-10);
        for (const auto& f : rc.findings) {
            worst = std::max(worst, f.residual);
            o.require(f.pass && f.residual < 1e-10, what + " " + f.check);
        }
        // Fibre of the central character: roots of x^2 - T x + D with
        // T = sigma_1 / q and D = sigma_2 / q^2.
        const double T = rc.sigma.at(0) / q0, D = rc.sigma.at(1) / (q0 * q0);
        const double disc = std::sqrt(std::max(0.0, T * T - 4 * D));
        std::vector<double> got{(T + disc) / 2, (T - disc) / 2}, want;
        switch (p.kind) {
            case N2Kind::SPos: want = {p.c * std::pow(q0, p.n + 1), p.c * std::pow(q0, -p.n - 1)}; break;
            case N2Kind::SZero:
            case N2Kind::CharZero: want = {0.0, p.lambda}; break;
            case N2Kind::Zero: want = {0.0, 0.0}; break;
            default: want = {p.c * p.a, -p.c / p.a}; break;
        }
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        for (size_t k = 0; k < 2; ++k) o.require(std::abs(got[k] - want[k]) < 1e-9 * std::max(1.0, std::abs(want[k])), what + " fibre");
    }
    o.note << (o.pass ? "" : "; ") << n2_cases().size() << " reps, max residual " << worst;
}

void sylvester(Outcome& o) {
    int runs = 0;
    for (const auto& w : std::vector<std::pair<std::vector<int>, std::vector<double>>>{{{1, -1}, {0.3, 0.8}}, {{-1, 1}, {0.0, 1.0}}, {{1, 1}, {0.25, 1.25}}, {{1}, {0.6}}}) {
        reacli::TransportArgs t;
        t.rep.N = 2;
        t.rep.eps = w.first;
        t.rep.r = w.second;
        t.rep.depth = 12;
        t.rep.q0 = q0;
        for (const char* kind : {"scaling", "vector", "u2char"}) {
            t.corep = kind;
            t.c = 1.7;
            t.theta = 0.31;
            reacli::Report r = reacli::transport(t, 1e-9);
            ++runs;
            o.require(r.pass(), std::string(kind) + " transport");
        }
    }
    reacli::TransportArgs s;
    s.corep = "s";
    s.rep.N = 2;
    s.rep.q0 = q0;
    s.rep.c = 1.2;
    s.rep.a = 0.5;
    s.rep.theta = 0.1;
    s.s_depth = 40;
    reacli::Report r = reacli::transport(s, 1e-9);
    ++runs;
    o.require(r.pass(), "s transport (extended signature or sign patterns)");
    o.note << (o.pass ? "" : "; ") << runs << " transports";
}

void characters(Outcome& o) {
    reacli::Report r = reacli::characters(4, 4, 12);
    int n = 0;
    for (const auto& f : r.findings) {
        ++n;
        o.require(f.f.pass, f.f.check);
    }
    // The N=4 shapes: k + 2l <= 4 gives nine parameter types.
    const double a = 1.5, c = -0.8;
    const cplx y0(0.6, 0.8), y1(-0.28, 0.96);
    auto display = [&](int k, int l) {
        Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(4, 4);
        if (l == 0) {
            for (int i = k; i < 4; ++i) M(i, i) = c;  // a = 1 in the display
        } else if (l == 1) {
            M(k, 3) = c * y0;
            M(3, k) = c * std::conj(y0);
            for (int i = k + 1; i < 3; ++i) M(i, i) = c * a;
            M(3, 3) = c * (a - 1 / a);
        } else {
            M(0, 3) = c * y0;
            M(3, 0) = c * std::conj(y0);
            M(1, 2) = c * y1;
            M(2, 1) = c * std::conj(y1);
            M(2, 2) = c * (a - 1 / a);
            M(3, 3) = c * (a - 1 / a);
        }
        return M;
    };
    int shapes = 0;
    for (int l = 0; 2 * l <= 4; ++l)
        for (int k = 0; k + 2 * l <= 4; ++k) {
            CharacterParams p;
            p.k = k;
            p.l = l;
            p.a = l == 0 ? 1.0 : a;
            p.c = c;
            if (l >= 1) p.y.push_back(y0);
            if (l >= 2) p.y.push_back(y1);
            const double e = (star_character(p, 4) - display(k, l)).cwiseAbs().maxCoeff();
            o.require(e < 1e-14, "shape k=" + std::to_string(k) + " l=" + std::to_string(l));
            ++shapes;
        }
    o.require(shapes == 9, "expected nine N=4 shapes");
    o.note << (o.pass ? "" : "; ") << n << " (N,k,l) types exact, " << shapes << " N=4 shapes";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Criterion>> criteria{
        {"braid_hecke", braid_hecke},       {"rea_relations", rea_relations}, {"cayley_hamilton", cayley_hamilton},
        {"centrality_minors", centrality},  {"laplace", laplace},             {"gt_unitarity_sweep", gt_sweep},
        {"rep_residuals", rep_residuals},   {"harish_chandra", harish_chandra}, {"spectral_admissibility", admissibility},
        {"n2_families", n2_families},       {"sylvester_invariance", sylvester}, {"characters", characters}};
    int failed = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.note << "exception: " << e.what();
        }
        failed += !o.pass;
        std::printf("%s %2zu %-24s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.note.str().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
