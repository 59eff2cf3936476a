#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "telesum/rational.hpp"
#include "telesum/varset.hpp"

namespace telesum {

using Expvec = std::vector<int>;

// Graded lexicographic order: total degree first, then lex with the
// earlier variable stronger. Leading term of a poly is the map's last entry.
struct GrlexLess {
    bool operator()(const Expvec& a, const Expvec& b) const {
        long da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da < db;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

// Exact multivariate polynomial over Q. Dense exponent vectors, canonical
// grlex term order, no zero coefficients stored.
class Poly {
public:
    using TermMap = std::map<Expvec, Rat, GrlexLess>;

    Poly() = default;
    explicit Poly(VarSet vars) : vars_(std::move(vars)) {}
    Poly(VarSet vars, const Rat& c);

    static Poly constant(VarSet vars, const Rat& c) { return Poly(std::move(vars), c); }
    static Poly variable(VarSet vars, const std::string& name, int power = 1);
    static Poly from_terms(VarSet vars, TermMap terms);

    const VarSet& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()

    long total_degree() const;               // -1 for zero
    long degree_wrt(int var) const;          // -1 for zero
    long degree_wrt(const std::string& v) const;
    bool depends_on(int var) const { return degree_wrt(var) > 0; }

    const Rat& leading_coeff() const;        // grlex leading term, nonzero poly
    const Expvec& leading_monomial() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly operator*(const Rat& c) const;
    Poly operator/(const Rat& c) const;
    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Substitutes var := var + j exactly.
    Poly shift(int var, long j) const;
    Poly shift(const std::string& v, long j) const;

    // Full evaluation; every variable must be present in point.
    Rat eval(const std::vector<Rat>& point) const;
    // Substitutes the given variables by rationals, leaving the rest symbolic.
    Poly substitute(const std::map<int, Rat>& values) const;

    // View as univariate in var: c[k] = coefficient of var^k (var-free polys).
    std::vector<Poly> coeffs_wrt(int var) const;
    static Poly from_coeffs_wrt(const VarSet& vars, int var, const std::vector<Poly>& cs);
    Poly coeff_wrt(int var, int power) const;
    Poly leading_coeff_wrt(int var) const;

    // Signed rational content c with p = c * primitive_part(p); the primitive
    // part has coprime integer coefficients and positive leading coefficient.
    Rat content() const;
    Poly primitive_part() const;

    // Content/primitive part with respect to one variable (coefficients are
    // polynomials in the remaining variables).
    Poly content_wrt(int var) const;
    Poly primitive_part_wrt(int var) const;

    // Exact division; nullopt if q does not divide p.
    static std::optional<Poly> try_divide(const Poly& p, const Poly& q);

    std::string to_string() const;

private:
    void add_term(const Expvec& e, const Rat& c);
    VarSet vars_;
    TermMap terms_;
    friend class PolyBuilder;
};

inline Poly exact_divide(const Poly& p, const Poly& q) {
    auto r = Poly::try_divide(p, q);
    if (!r) throw std::domain_error("exact_divide: not divisible");
    return *r;
}

bool divides(const Poly& d, const Poly& p);

// gcd normalized to primitive with positive leading coefficient; gcd(0,q) = normalized q.
Poly poly_gcd(const Poly& p, const Poly& q);
// lcm up to rational constants, normalized primitive positive-lc. Zero input is an error.
Poly poly_lcm(const Poly& p, const Poly& q);

Poly shift(const Poly& p, const std::string& var, long j);

// Squarefree decomposition with respect to var: product of factor^multiplicity
// equals p up to a unit; factors pairwise coprime and squarefree in var.
// Constants yield an empty list.
std::vector<std::pair<Poly, int>> squarefree_factors(const Poly& p, int var);
std::vector<std::pair<Poly, int>> squarefree_factors(const Poly& p, const std::string& var);

// Resultant with respect to var (Sylvester determinant, fraction-free).
Poly resultant(const Poly& p, const Poly& q, int var);

// Derivative with respect to var.
Poly derivative(const Poly& p, int var);

// All integers l in [range_lo, range_hi] with gcd(p(var), q(var+l)) nontrivial
// in var over the parameter field. Candidates come from integer roots of the
// resultant in l (parameters specialized at 3 points), each verified exactly.
std::set<long> integer_shift_matches(const Poly& p, const Poly& q, int var,
                                     long range_lo, long range_hi);

// Upper bound on |l| for any shift match between p and q (Cauchy root bound
// of the specialized resultants). Matches cannot exist beyond it.
Int shift_match_root_bound(const Poly& p, const Poly& q, int var);
std::set<long> integer_shift_matches(const Poly& p, const Poly& q,
                                     const std::string& var, long range_lo, long range_hi);

// K[s]-level helpers (K = rationals in the other variables): factors free of
// var are units and are stripped.
Poly pp_wrt(const Poly& p, int var);
Poly gcd_wrt(const Poly& p, const Poly& q, int var);
Poly lcm_wrt(const Poly& p, const Poly& q, int var);
bool divides_wrt(const Poly& d, const Poly& p, int var);
Poly exact_divide_wrt(const Poly& p, const Poly& q, int var);

}  // namespace telesum
