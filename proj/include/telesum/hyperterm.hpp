#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "telesum/poly.hpp"
#include "telesum/ratfn.hpp"

namespace telesum {

// Integer linear form a_1 v_1 + ... + a_s v_s + c over a variable set.
class LinearForm {
public:
    LinearForm() = default;
    explicit LinearForm(VarSet vars) : vars_(std::move(vars)), coeffs_(vars_.size(), 0) {}

    static LinearForm var(const VarSet& vs, const std::string& name) {
        LinearForm f(vs);
        f.coeffs_[vs.index_checked(name)] = 1;
        return f;
    }
    static LinearForm constant(const VarSet& vs, long c) {
        LinearForm f(vs);
        f.constant_ = c;
        return f;
    }

    const VarSet& vars() const { return vars_; }
    long coeff(int i) const { return coeffs_[i]; }
    long coeff(const std::string& v) const { return coeffs_[vars_.index_checked(v)]; }
    long& coeff_ref(int i) { return coeffs_[i]; }
    long constant() const { return constant_; }
    long& constant_ref() { return constant_; }

    bool is_constant() const;
    bool is_zero() const { return is_constant() && constant_ == 0; }

    LinearForm operator+(const LinearForm& o) const;
    LinearForm operator-(const LinearForm& o) const;
    LinearForm operator*(long c) const;
    LinearForm operator-() const { return *this * -1; }

    long eval(const std::vector<long>& point) const;
    // Substitutes the listed variables; their contribution moves to the constant.
    LinearForm substitute(const std::map<int, long>& values) const;

    Poly to_poly() const;
    std::string to_string() const;

    auto operator<=>(const LinearForm& o) const { return key_() <=> o.key_(); }
    bool operator==(const LinearForm& o) const { return key_() == o.key_(); }

private:
    std::pair<const std::vector<long>&, long> key_() const { return {coeffs_, constant_}; }
    VarSet vars_;
    std::vector<long> coeffs_;
    long constant_ = 0;
};

// A(m)!^exponent with exponent != 0; eps of the factor is sign(exponent).
struct FactorialFactor {
    LinearForm form;
    int exponent = 1;
};

// base^E(m) with a nonzero rational base and a linear-form exponent.
struct PowerFactor {
    Rat base;
    LinearForm exponent;
};

// Proper hypergeometric term P(m) * prod A_j(m)!^{e_j} * prod c_j^{E_j(m)}.
class HyperTerm {
public:
    HyperTerm() = default;
    explicit HyperTerm(VarSet vars) : vars_(std::move(vars)), polypart_(vars_, Rat(1)) {}
    HyperTerm(VarSet vars, Poly polypart, std::vector<FactorialFactor> factorials,
              std::vector<PowerFactor> powers);

    static HyperTerm from_poly(Poly p);
    static HyperTerm factorial(const LinearForm& form, int exponent = 1);

    const VarSet& vars() const { return vars_; }
    const Poly& polypart() const { return polypart_; }
    const std::vector<FactorialFactor>& factorials() const { return factorials_; }
    const std::vector<PowerFactor>& powers() const { return powers_; }

    bool is_zero() const { return polypart_.is_zero(); }
    bool is_polynomial() const { return factorials_.empty() && powers_.empty(); }

    HyperTerm operator*(const HyperTerm& o) const;
    // Divide; the divisor's polynomial part must be a nonzero constant.
    HyperTerm operator/(const HyperTerm& o) const;
    HyperTerm pow(int e) const;

    bool operator==(const HyperTerm& o) const;

    std::string to_string() const;

private:
    void canonicalize_();
    VarSet vars_;
    Poly polypart_;
    std::vector<FactorialFactor> factorials_;
    std::vector<PowerFactor> powers_;
};

HyperTerm binom(const LinearForm& top, const LinearForm& bottom);

struct SumSpec {
    HyperTerm term;
    std::vector<int> sumvars;  // variable indices, nonempty
    int freevar = 0;
};

// f(..., var+1, ...) / f(..., var, ...) as a reduced rational function.
RatFn shift_quotient(const HyperTerm& f, int var);
RatFn shift_quotient(const HyperTerm& f, const std::string& var);

// Exact evaluation at an integer point. A factorial with positive exponent at
// a negative argument is a domain error; a reciprocal factorial at a negative
// argument makes the whole term 0.
Rat eval_term(const HyperTerm& f, const std::vector<long>& point);

// Evaluation with reciprocal-factorial zeros taking priority over
// positive-factorial poles (the binomial extension used for summation over a
// support box and for boundary-shell checks).
Rat eval_term_extended(const HyperTerm& f, const std::vector<long>& point);

struct SupportBox {
    std::vector<long> lo, hi;  // per sumvar, lo > hi means empty support
    bool empty() const {
        for (std::size_t i = 0; i < lo.size(); ++i)
            if (lo[i] > hi[i]) return true;
        return false;
    }
};

// Finite box outside which the term provably vanishes (from reciprocal
// factorials), or nullopt when no such box exists.
std::optional<SupportBox> finite_support(const HyperTerm& f, const std::vector<int>& sumvars,
                                         long n_value);

}  // namespace telesum
