// Common result row used by verification routines and the CLI.
#pragma once

#include <string>
#include <vector>

namespace rea {

struct Finding {
    std::string check;   // stable identifier, e.g. "cayley_hamilton[1,2]"
    bool pass = true;
    double residual = 0.0;  // 0 for exact checks that pass
    std::string detail;
};

using Findings = std::vector<Finding>;

inline bool all_pass(const Findings& f) {
    for (const auto& x : f)
        if (!x.pass) return false;
    return true;
}

}  // namespace rea
