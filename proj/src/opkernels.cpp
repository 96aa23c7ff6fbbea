#include "rea/opkernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

#include "rea/errors.hpp"

namespace rea {

cplx coefficient_value(const LaurentScalar& c, int denom, double q0) {
    cplx v = c.eval(q0);
    if (denom != 0) v *= std::pow(q0 - 1 / q0, -denom);
    return v;
}

CMat apply_poly(const NCPoly& p, const std::vector<const CMat*>& letters, const CMat& X, double q0, bool parallel) {
    // Sorted terms give a schedule that does not depend on hash order.
    std::vector<std::pair<Word, cplx>> terms;
    terms.reserve(p.size());
    for (const auto& [w, c] : p.terms()) {
        for (char ch : w) {
            const size_t code = static_cast<unsigned char>(ch);
            if (code >= letters.size() || letters[code] == nullptr) throw DomainError("apply_poly: missing operator for a letter");
        }
        terms.emplace_back(w, coefficient_value(c, p.denom(), q0));
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    const long nterms = static_cast<long>(terms.size());
    std::vector<CMat> partial(static_cast<size_t>(kApplyChunks));
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
    for (int chunk = 0; chunk < kApplyChunks; ++chunk) {
        CMat acc = CMat::Zero(X.rows(), X.cols());
        const long lo = nterms * chunk / kApplyChunks, hi = nterms * (chunk + 1) / kApplyChunks;
        for (long t = lo; t < hi; ++t) {
            const auto& [w, c] = terms[static_cast<size_t>(t)];
            CMat Y = X;
            for (auto it = w.rbegin(); it != w.rend(); ++it) Y = (*letters[static_cast<unsigned char>(*it)]) * Y;
            acc += c * Y;
        }
        partial[static_cast<size_t>(chunk)] = std::move(acc);
    }
    CMat out = CMat::Zero(X.rows(), X.cols());
    for (const auto& m : partial) out += m;
    return out;
}

}  // namespace rea
