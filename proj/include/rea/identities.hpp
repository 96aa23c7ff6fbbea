// Exact identity suites for the FRT, triangular and reflection equation
// algebras.  Every check is an exact normal-form computation.
#pragma once

#include "rea/rea_algebra.hpp"
#include "rea/report.hpp"

namespace rea {

struct SuiteOptions {
    bool cayley_hamilton = true;
    bool laplace = true;
    bool leading_minors = true;
    bool det_central = true;
    bool rea_relations = true;
    bool sigma_central = true;
    bool n2_presentation = true;
    bool braid = true;
    bool parallel = true;  // OpenMP over independent checks
};

// Runs the selected checks at size N and returns one finding per group.
Findings identity_suite(int N, const SuiteOptions& opt = {});

// Individual groups; each returns the number of failing instances and the
// number of instances checked.
struct GroupResult {
    int checked = 0;
    int failed = 0;
    std::string first_failure;
};

GroupResult check_cayley_hamilton(int N, bool parallel);
GroupResult check_laplace(int N, bool parallel);
GroupResult check_leading_minors(int N, bool parallel);
GroupResult check_det_central(int N);
GroupResult check_rea_relations(int N, bool parallel);
GroupResult check_sigma_central(int N, bool parallel);
GroupResult check_n2_presentation();
GroupResult check_braid_hecke(int N);
GroupResult check_minor_exchange(int N);

// The Cayley-Hamilton entry (i,j): sum_k (-1)^k sigma_k (Z^{N-k})_ij.
NCPoly cayley_hamilton_entry(int N, int i, int j);

}  // namespace rea
