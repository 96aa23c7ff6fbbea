#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "commands.hpp"
#include "rea/errors.hpp"

using namespace reacli;

namespace {

const ReportFinding* find(const Report& r, const std::string& check) {
    for (const auto& f : r.findings)
        if (f.f.check == check) return &f;
    return nullptr;
}

rea::Finding make(const std::string& name, bool pass, double residual) {
    rea::Finding f;
    f.check = name;
    f.pass = pass;
    f.residual = residual;
    return f;
}

}  // namespace

TEST_CASE("report pass/fail semantics") {
    Report empty;
    CHECK(empty.pass());
    CHECK(empty.max_residual() == 0.0);
    Report bad;
    bad.add(make("a", true, 1e-12));
    bad.add(make("b", false, 1e-3));
    CHECK_FALSE(bad.pass());
    CHECK(bad.max_residual() == 1e-3);
    Report nan;
    nan.add(make("c", true, std::nan("")));
    CHECK_FALSE(nan.pass());
}

TEST_CASE("report schema, ordering and round trip") {
    Report r;
    r.q0 = 0.25;
    r.inputs = json{{"command", "test"}, {"n", 2}};
    r.add(make("zeta", true, 1e-14), json{{"x", 1}});
    r.add(make("alpha", true, 0.0));
    const std::string text = emit_report(r);
    json j = json::parse(text);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"tool_version", "q0", "inputs", "findings", "max_residual", "pass"});
    CHECK(j["findings"][0]["check"] == "alpha");
    CHECK(j["findings"][1]["data"]["x"] == 1);
    CHECK(text.back() == '\n');
    Report back = parse_report(text);
    CHECK(emit_report(back) == text);
    CHECK_THROWS_AS(parse_report("{\"q0\": 1}"), rea::ParseError);
    CHECK_THROWS_AS(parse_report("not json"), rea::ParseError);
}

TEST_CASE("argument parsing") {
    CHECK(parse_eps("+,-,0") == std::vector<int>{1, -1, 0});
    CHECK(parse_eps("1,-1") == std::vector<int>{1, -1});
    CHECK_THROWS_AS(parse_eps("+,x"), rea::ParseError);
    CHECK(parse_reals("0.3, 1/2,-2") == std::vector<double>{0.3, 0.5, -2.0});
    CHECK_THROWS_AS(parse_reals("0.3,,1"), rea::ParseError);
}

TEST_CASE("classify-roots") {
    Report r = classify_roots({1, 0.25, 0}, 0.5, {}, 1e-9);
    CHECK(r.pass());
    const ReportFinding* f = find(r, "admissible");
    REQUIRE(f);
    CHECK(f->data["extsig"]["rmod1"] == 0.0);
    CHECK(f->data["extsig"]["nplus"] == 2);
    CHECK(f->data["extsig"]["nminus"] == 0);
    CHECK(f->data["extsig"]["nzero"] == 1);
    CHECK_FALSE(classify_roots({1, 1, 0}, 0.5, {}, 1e-9).pass());
    CHECK_FALSE(classify_roots({1, 0.5, 0}, 0.5, {}, 1e-9).pass());
    Report w = classify_roots({std::pow(0.5, 0.6), -std::pow(0.5, 3.6)}, 0.5, {1, -1}, 1e-9);
    CHECK(w.pass());
    const ReportFinding* cw = find(w, "canonical_weight");
    REQUIRE(cw);
    CHECK(cw->data["r"][0].get<double>() == doctest::Approx(0.3));
    CHECK(cw->data["r"][1].get<double>() == doctest::Approx(0.8));
}

TEST_CASE("rep-build then rep-verify") {
    RepArgs a;
    a.N = 2;
    a.eps = {1, -1};
    a.r = {0.3, 0.8};
    a.depth = 20;
    Report built = rep_build(a, 1e-9);
    CHECK(built.pass());
    RepArgs back = RepArgs::from_json(parse_report(emit_report(built)).inputs);
    CHECK(back.eps == a.eps);
    CHECK(back.r == a.r);
    CHECK(back.depth == a.depth);
    Report v = rep_verify(back, 1e-9);
    CHECK(v.pass());
    const ReportFinding* f = find(v, "spectral_admissible");
    REQUIRE(f);
    CHECK(f->data["extsig"]["rmod1"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("family reps through the command layer") {
    for (const char* fam : {"S_pos", "S_zero", "S_neg+", "S_neg-", "char", "char_zero", "zero"}) {
        RepArgs a;
        a.family = fam;
        a.c = 1.3;
        a.a = 0.7;
        a.lambda = -0.9;
        a.theta = 0.2;
        a.ladder = 2;
        a.depth = 20;
        INFO(fam);
        CHECK(rep_verify(a, 1e-10).pass());
    }
    RepArgs bad;
    bad.family = "nonsense";
    CHECK_THROWS_AS(build_rep(bad), rea::DomainError);
}

TEST_CASE("characters, transport and sweep commands") {
    Report ch = characters(4, 2, 7);
    CHECK(ch.pass());
    CHECK(emit_report(ch) == emit_report(characters(4, 2, 7)));

    TransportArgs t;
    t.rep.N = 2;
    t.rep.eps = {1, -1};
    t.rep.r = {0.3, 0.8};
    t.rep.depth = 10;
    for (const char* kind : {"scaling", "vector", "u2char"}) {
        t.corep = kind;
        INFO(kind);
        CHECK(transport(t, 1e-9).pass());
    }
    TransportArgs s;
    s.corep = "s";
    s.rep.c = 1.2;
    s.rep.a = 0.5;
    Report rs = transport(s, 1e-9);
    CHECK(rs.pass());
    CHECK(find(rs, "z11_both_signs"));

    SweepArgs sw;
    sw.N = 2;
    sw.cells = 50;
    sw.seed = 3;
    Report a = sweep(sw), b = sweep(sw);
    CHECK(a.pass());
    CHECK(emit_report(a) == emit_report(b));
    sw.seed = 4;
    CHECK(emit_report(sweep(sw)) != emit_report(a));
}

TEST_CASE("usage errors are raised as exceptions") {
    CHECK_THROWS_AS(verify_algebra(5), rea::DomainError);
    CHECK_THROWS_AS(characters(9, 1, 1), rea::DomainError);
    RepArgs a;
    a.N = 2;
    a.eps = {1, 1};
    a.r = {0.0, 0.5};
    CHECK_THROWS_AS(rep_verify(a, 1e-9), rea::Error);
}
