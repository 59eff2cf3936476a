#include "telesum/ratfn.hpp"

#include <cassert>
#include <sstream>

namespace telesum {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce_();
}

void RatFn::reduce_() {
    if (num_.is_zero()) {
        den_ = Poly(num_.vars(), Rat(1));
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
    }
    Rat c = den_.content();
    if (c != 1) {
        den_ = den_ / c;
        num_ = num_ / c;
    }
#ifndef NDEBUG
    assert(poly_gcd(num_, den_).is_constant());
    assert(den_.content() == 1);
#endif
}

bool RatFn::is_polynomial() const { return den_.is_constant(); }

Rat RatFn::constant_value() const {
    if (!is_constant()) throw std::domain_error("RatFn is not constant");
    if (num_.is_zero()) return Rat(0);
    return num_.constant_value() / den_.constant_value();
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFn operator+(const RatFn& a, const RatFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b) {
    if (a.is_zero()) return a;
    if (b.is_zero()) return b;
    // Cross-reduce before multiplying to limit growth.
    Poly g1 = poly_gcd(a.num_, b.den_);
    Poly g2 = poly_gcd(b.num_, a.den_);
    Poly n1 = g1.is_constant() ? a.num_ : exact_divide(a.num_, g1);
    Poly d2 = g1.is_constant() ? b.den_ : exact_divide(b.den_, g1);
    Poly n2 = g2.is_constant() ? b.num_ : exact_divide(b.num_, g2);
    Poly d1 = g2.is_constant() ? a.den_ : exact_divide(a.den_, g2);
    return RatFn(n1 * n2, d1 * d2);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return a * b.reciprocal();
}

RatFn RatFn::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    return RatFn(den_, num_);
}

RatFn RatFn::pow(long e) const {
    const VarSet& vs = vars();
    if (e == 0) return RatFn::one(vs);
    RatFn b = e < 0 ? reciprocal() : *this;
    unsigned long k = e < 0 ? -e : e;
    return RatFn(b.num_.pow(k), b.den_.pow(k));
}

RatFn RatFn::shift(int var, long j) const {
    RatFn r = *this;
    r.num_ = r.num_.shift(var, j);
    r.den_ = r.den_.shift(var, j);
    return r;
}

RatFn RatFn::shift(const std::string& v, long j) const { return shift(vars().index_checked(v), j); }

RatFn RatFn::shift_all(const Expvec& e) const {
    RatFn r = *this;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) r = r.shift(static_cast<int>(i), e[i]);
    return r;
}

Rat RatFn::eval(const std::vector<Rat>& point) const {
    Rat d = den_.eval(point);
    if (d == 0) throw std::domain_error("rational function pole at evaluation point");
    return num_.eval(point) / d;
}

RatFn RatFn::substitute(const std::map<int, Rat>& values) const {
    return RatFn(num_.substitute(values), den_.substitute(values));
}

namespace {

bool needs_parens(const Poly& p) {
    if (p.terms().size() != 1) return true;
    const auto& [e, c] = *p.terms().begin();
    int nvars = 0;
    long deg = 0;
    for (int x : e) {
        if (x) ++nvars;
        deg += x;
    }
    if (nvars == 0) return c < 0 || c.get_den() != 1;
    return c != 1 || deg > 1 || nvars > 1;
}

}  // namespace

std::string RatFn::to_string() const {
    if (is_polynomial()) {
        Poly p = den_.constant_value() == 1 ? num_ : num_ / den_.constant_value();
        return p.to_string();
    }
    std::ostringstream os;
    if (needs_parens(num_))
        os << '(' << num_.to_string() << ')';
    else
        os << num_.to_string();
    os << '/';
    if (needs_parens(den_))
        os << '(' << den_.to_string() << ')';
    else
        os << den_.to_string();
    return os.str();
}

}  // namespace telesum
