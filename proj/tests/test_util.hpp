#pragma once

#include <random>
#include <string>
#include <vector>

#include "telesum/poly.hpp"
#include "telesum/ratfn.hpp"

namespace telesum::testutil {

inline Poly pvar(const VarSet& vs, const std::string& name) { return Poly::variable(vs, name); }
inline Poly pc(const VarSet& vs, long c) { return Poly(vs, Rat(c)); }

struct Rng {
    std::mt19937 gen;
    explicit Rng(unsigned seed) : gen(seed) {}

    long pick(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen);
    }

    Poly poly(const VarSet& vs, int max_deg, int n_terms, long cmax = 9) {
        Poly p(vs);
        for (int t = 0; t < n_terms; ++t) {
            Expvec e(vs.size(), 0);
            for (std::size_t i = 0; i < vs.size(); ++i)
                e[i] = static_cast<int>(pick(0, max_deg));
            long c = pick(-cmax, cmax);
            p += Poly::from_terms(vs, {{e, Rat(c)}});
        }
        return p;
    }

    Poly nonzero_poly(const VarSet& vs, int max_deg, int n_terms, long cmax = 9) {
        for (;;) {
            Poly p = poly(vs, max_deg, n_terms, cmax);
            if (!p.is_zero()) return p;
        }
    }
};

inline bool equal_up_to_unit(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.primitive_part() == b.primitive_part();
}

}  // namespace telesum::testutil
