#pragma once

#include <string>

#include "telesum/poly.hpp"

namespace telesum {

// Reduced rational function over Q: gcd(num, den) constant, den primitive
// with positive leading coefficient (den == 1 iff the value is polynomial).
class RatFn {
public:
    RatFn() = default;
    explicit RatFn(Poly num) : num_(std::move(num)), den_(num_.vars(), Rat(1)) {}
    RatFn(Poly num, Poly den);
    RatFn(const VarSet& vars, const Rat& c) : RatFn(Poly(vars, c)) {}

    static RatFn zero(const VarSet& vars) { return RatFn(Poly(vars)); }
    static RatFn one(const VarSet& vars) { return RatFn(Poly(vars, Rat(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    const VarSet& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const;
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rat constant_value() const;

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    RatFn& operator-=(const RatFn& o) { return *this = *this - o; }
    RatFn& operator*=(const RatFn& o) { return *this = *this * o; }
    RatFn& operator/=(const RatFn& o) { return *this = *this / o; }
    RatFn pow(long e) const;
    RatFn reciprocal() const;

    bool operator==(const RatFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    RatFn shift(int var, long j) const;
    RatFn shift(const std::string& v, long j) const;
    // Shifts every variable i by e[i].
    RatFn shift_all(const Expvec& e) const;

    bool depends_on(int var) const { return num_.depends_on(var) || den_.depends_on(var); }

    Rat eval(const std::vector<Rat>& point) const;  // throws on zero denominator
    RatFn substitute(const std::map<int, Rat>& values) const;

    std::string to_string() const;

private:
    void reduce_();
    Poly num_, den_;
};

inline RatFn operator*(const RatFn& a, const Poly& p) { return a * RatFn(p); }
inline RatFn operator*(const Poly& p, const RatFn& a) { return RatFn(p) * a; }

}  // namespace telesum
