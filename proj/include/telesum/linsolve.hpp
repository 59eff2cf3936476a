#pragma once

#include <optional>
#include <vector>

#include "telesum/ratfn.hpp"

namespace telesum {

struct LinsolveResult {
    // Nullopt when the system is inconsistent (distinct from an empty nullspace).
    std::optional<std::vector<RatFn>> particular;
    std::vector<std::vector<RatFn>> nullspace;
};

// Exact solution over the rational-function field. Fraction-free
// cross-multiplication elimination with per-row content stripping;
// deterministic pivoting (first nonzero row in column order).
LinsolveResult linsolve(const std::vector<std::vector<RatFn>>& a,
                        const std::vector<RatFn>& rhs);

}  // namespace telesum
