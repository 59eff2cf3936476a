#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "telesum/ratfn.hpp"

namespace telesum {

struct DensolveOptions {
    long chain_cap = 1000;  // guard on chain lengths
    int numerator_cap = 50;  // rounds of the numerator-factor iteration
};

// Linear difference equation sum_i (a_i(s)/b_i(s)) x(s+i) = c(s) over the
// field of the remaining variables. Stored with gcd(a_i,b_i)=1, b_i nonzero,
// a_0 and a_m not identically zero (true order), and a polynomial rhs
// (a rational rhs is normalized away by multiplying the equation through).
struct RatCoeffDE {
    VarSet vars;
    int svar = 0;
    int m = 0;
    std::vector<Poly> a, b;
    Poly c;

    static RatCoeffDE from_coeffs(const VarSet& vars, int svar,
                                  const std::vector<RatFn>& coeffs, const RatFn& rhs);
    static RatCoeffDE from_coeffs(const VarSet& vars, const std::string& svar,
                                  const std::vector<RatFn>& coeffs, const RatFn& rhs);

    RatFn coeff(int i) const { return RatFn(a[i], b[i]); }
};

struct UDShape {
    Poly sigma;
    std::vector<Poly> tau;
    Poly tauhat;
    std::vector<std::pair<Poly, long>> chains;  // (phi, chain length J_i)
    Poly Q;
    Poly R;
};

struct PolySolutionSpace {
    // Particular solution in K[s]: polynomial in s whose coefficients may have
    // parameter denominators, so it is carried as a RatFn with s-free denominator.
    std::optional<RatFn> particular;
    std::vector<Poly> basis;  // unit-cleared homogeneous solutions
};

struct RationalSolutionSpace {
    std::optional<RatFn> particular;
    std::vector<RatFn> basis;
};

// sigma = lcm(b_i), tau_i(s) = a_i(s-i) sigma(s-i)/b_i(s-i), tauhat = gcd(tau_i).
std::tuple<Poly, std::vector<Poly>, Poly> normalize(const RatCoeffDE& eq);

// Universal denominator: Q = tauhat * prod of chains, each chain found as the
// longest shift match between the stripped tau_0 and tau_m. R is left at 1.
UDShape universal_denominator(const RatCoeffDE& eq, const DensolveOptions& opt = {});

// Guaranteed numerator factor: iterates the lcm-of-quotients formula,
// accumulating P := P * R until R becomes constant; returns the product.
Poly numerator_factor(const RatCoeffDE& eq, const Poly& Q, const DensolveOptions& opt = {});

// All polynomial solutions of sum_i p_i(s) x(s+i) = rhs, by degree bound and
// linear algebra over the parameter field.
PolySolutionSpace polynomial_solutions(const std::vector<Poly>& p, const Poly& rhs, int svar);

// Degree bound for polynomial solutions; rhs_deg is the s-degree of the
// right-hand side (-1 for zero). Returns -1 when only x = 0 is possible.
long poly_solution_degree_bound(const std::vector<Poly>& p, long rhs_deg, int svar);

// x = R P / Q with P polynomial; every returned function is verified by
// back-substitution before return.
RationalSolutionSpace rational_solutions(const RatCoeffDE& eq, const DensolveOptions& opt = {});

// Classic dispersion-based universal denominator (chains only, no singleton
// pre-extraction), for baseline comparison. Q always divides this.
Poly abramov_denominator(const RatCoeffDE& eq, const DensolveOptions& opt = {});

// Gosper: x with x(k+1) * ratio - x(k) = 1, so that x(k) t(k) is an
// antidifference of the term t with t(k+1)/t(k) = ratio.
std::optional<RatFn> gosper(const RatFn& ratio, const DensolveOptions& opt = {});

}  // namespace telesum
