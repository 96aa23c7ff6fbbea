// Subcommand implementations shared by the reacli executable and the
// acceptance driver.  Each command returns a Report; argument errors are
// raised as rea::DomainError / rea::ParseError.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rea/hrep.hpp"
#include "report.hpp"

namespace reacli {

struct RepArgs {
    int N = 2;
    std::vector<int> eps;
    std::vector<double> r;
    int depth = 12;
    int margin = -1;  // -1: 4N
    double q0 = 0.5;
    // Optional N = 2 family instead of a Gelfand-Tsetlin rep.
    std::optional<std::string> family;
    double c = 1.0, a = 1.0, lambda = 1.0, theta = 0.0;
    int ladder = 0;  // S_pos dimension minus one

    rea::HWModuleSpec spec() const;
    json to_json() const;
    static RepArgs from_json(const json& j);
};

std::vector<int> parse_eps(const std::string& s);
std::vector<double> parse_reals(const std::string& s);

rea::HermitianRep build_rep(const RepArgs& a, bool parallel = true);

Report verify_algebra(int N, bool parallel = true);
Report rep_build(const RepArgs& a, double tol);
Report rep_verify(const RepArgs& a, double tol, bool parallel = true);
Report classify_roots(const std::vector<double>& roots, double q0, const std::vector<int>& eps, double tol);
Report characters(int max_n, int samples, std::uint64_t seed);

// corep: "scaling" (uses c), "vector", "u2char" (uses theta) or "s" (SU_q(2)
// rep of the given depth acting on the (+,-) character with parameters a, c).
struct TransportArgs {
    RepArgs rep;
    std::string corep = "vector";
    double c = 1.5;
    double theta = 0.25;
    int s_depth = 40;
};
Report transport(const TransportArgs& t, double tol);

struct SweepArgs {
    int N = 3;
    int cells = 100;
    int bound = 8;
    std::uint64_t seed = 1;
    double q0 = 0.5;
    bool with_reps = false;
    int depth = 12;
    int margin = -1;  // -1: 4N
    double tol = 1e-9;
};
Report sweep(const SweepArgs& s);

// Uniform double in [0,1) from a splitmix64 state; identical on every platform.
double uniform01(std::uint64_t& state);

}  // namespace reacli
