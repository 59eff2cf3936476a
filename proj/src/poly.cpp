#include "telesum/poly.hpp"

#include <algorithm>
#include <sstream>

namespace telesum {

Poly::Poly(VarSet vars, const Rat& c) : vars_(std::move(vars)) {
    if (c != 0) terms_.emplace(Expvec(vars_.size(), 0), c);
}

Poly Poly::variable(VarSet vars, const std::string& name, int power) {
    int i = vars.index_checked(name);
    Poly p(vars);
    Expvec e(vars.size(), 0);
    e[i] = power;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
}

Poly Poly::from_terms(VarSet vars, TermMap terms) {
    Poly p(std::move(vars));
    for (auto& [e, c] : terms)
        if (c != 0) p.terms_.emplace(e, c);
    return p;
}

bool Poly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Expvec& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Rat Poly::constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw std::domain_error("constant_value: polynomial is not constant");
    return terms_.begin()->second;
}

long Poly::total_degree() const {
    if (terms_.empty()) return -1;
    const Expvec& e = terms_.rbegin()->first;
    long d = 0;
    for (int x : e) d += x;
    return d;
}

long Poly::degree_wrt(int var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e[var]));
    return d;
}

long Poly::degree_wrt(const std::string& v) const { return degree_wrt(vars_.index_checked(v)); }

const Rat& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::domain_error("leading_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

const Expvec& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::domain_error("leading_monomial of zero polynomial");
    return terms_.rbegin()->first;
}

void Poly::add_term(const Expvec& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (vars_ != o.vars_) {
        if (terms_.empty() && vars_.size() == 0) vars_ = o.vars_;
        else if (!(o.terms_.empty() && o.vars_.size() == 0))
            throw std::invalid_argument("polynomial variable sets differ");
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (vars_ != o.vars_) {
        if (terms_.empty() && vars_.size() == 0) vars_ = o.vars_;
        else if (!(o.terms_.empty() && o.vars_.size() == 0))
            throw std::invalid_argument("polynomial variable sets differ");
    }
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.vars_ != b.vars_ && !a.terms_.empty() && !b.terms_.empty())
        throw std::invalid_argument("polynomial variable sets differ");
    Poly r(a.terms_.empty() ? b.vars_ : a.vars_);
    if (a.terms_.empty() || b.terms_.empty()) return r;
    Expvec e(a.vars_.size());
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Rat& c) const {
    Poly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Poly Poly::operator/(const Rat& c) const {
    if (c == 0) throw std::domain_error("division by zero constant");
    return *this * (Rat(1) / c);
}

Poly Poly::pow(unsigned e) const {
    Poly r(vars_, Rat(1));
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = e > 1 ? b * b : b;
        e >>= 1;
    }
    return r;
}

Poly Poly::shift(int var, long j) const {
    if (j == 0) return *this;
    Poly r(vars_);
    Expvec e;
    for (const auto& [e0, c] : terms_) {
        int d = e0[var];
        if (d == 0) {
            r.add_term(e0, c);
            continue;
        }
        // (x + j)^d expansion
        Int jp(1);
        for (int i = d; i >= 0; --i) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), d, i);
            e = e0;
            e[var] = i;
            r.add_term(e, c * Rat(binom * jp));
            jp *= j;
        }
    }
    return r;
}

Poly Poly::shift(const std::string& v, long j) const { return shift(vars_.index_checked(v), j); }

Poly shift(const Poly& p, const std::string& var, long j) { return p.shift(var, j); }

Rat Poly::eval(const std::vector<Rat>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("eval: point size mismatch");
    Rat out(0);
    for (const auto& [e, c] : terms_) {
        Rat t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= rat_pow(point[i], e[i]);
        out += t;
    }
    return out;
}

Poly Poly::substitute(const std::map<int, Rat>& values) const {
    Poly r(vars_);
    Expvec e;
    for (const auto& [e0, c] : terms_) {
        Rat t = c;
        e = e0;
        for (const auto& [i, v] : values) {
            if (e[i]) {
                t *= rat_pow(v, e[i]);
                e[i] = 0;
            }
        }
        r.add_term(e, t);
    }
    return r;
}

std::vector<Poly> Poly::coeffs_wrt(int var) const {
    long d = degree_wrt(var);
    std::vector<Poly> cs(static_cast<std::size_t>(d + 1), Poly(vars_));
    if (d < 0) return cs;
    Expvec e;
    for (const auto& [e0, c] : terms_) {
        e = e0;
        int k = e[var];
        e[var] = 0;
        cs[k].add_term(e, c);
    }
    return cs;
}

Poly Poly::from_coeffs_wrt(const VarSet& vars, int var, const std::vector<Poly>& cs) {
    Poly r(vars);
    Expvec e;
    for (std::size_t k = 0; k < cs.size(); ++k) {
        for (const auto& [e0, c] : cs[k].terms()) {
            e = e0;
            e[var] += static_cast<int>(k);
            r.add_term(e, c);
        }
    }
    return r;
}

Poly Poly::coeff_wrt(int var, int power) const {
    Poly r(vars_);
    Expvec e;
    for (const auto& [e0, c] : terms_) {
        if (e0[var] != power) continue;
        e = e0;
        e[var] = 0;
        r.add_term(e, c);
    }
    return r;
}

Poly Poly::leading_coeff_wrt(int var) const {
    long d = degree_wrt(var);
    if (d < 0) return Poly(vars_);
    return coeff_wrt(var, static_cast<int>(d));
}

Rat Poly::content() const {
    if (terms_.empty()) return Rat(0);
    Rat g(0);
    for (const auto& [e, c] : terms_) g = rat_content_gcd(g, c);
    if (leading_coeff() < 0) g = -g;
    return g;
}

Poly Poly::primitive_part() const {
    if (terms_.empty()) return *this;
    return *this / content();
}

Poly Poly::content_wrt(int var) const {
    Poly g(vars_);
    for (const auto& c : coeffs_wrt(var)) {
        if (c.is_zero()) continue;
        g = poly_gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

Poly Poly::primitive_part_wrt(int var) const {
    if (is_zero()) return *this;
    Poly c = content_wrt(var);
    if (c.is_constant()) return primitive_part();
    return exact_divide(*this, c).primitive_part();
}

std::optional<Poly> Poly::try_divide(const Poly& p, const Poly& q) {
    if (q.is_zero()) {
        if (p.is_zero()) return p;
        return std::nullopt;
    }
    if (p.is_zero()) return p;
    Poly r = p;
    Poly quot(p.vars_);
    const Expvec& lq = q.leading_monomial();
    const Rat& cq = q.leading_coeff();
    Expvec diff(p.vars_.size());
    while (!r.is_zero()) {
        const Expvec& lr = r.leading_monomial();
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] = lr[i] - lq[i];
            if (diff[i] < 0) return std::nullopt;
        }
        Rat c = r.leading_coeff() / cq;
        Poly t(p.vars_);
        t.terms_.emplace(diff, c);
        quot.add_term(diff, c);
        r -= t * q;
    }
    return quot;
}

bool divides(const Poly& d, const Poly& p) { return Poly::try_divide(p, d).has_value(); }

Poly derivative(const Poly& p, int var) {
    Poly r(p.vars());
    Expvec e;
    for (const auto& [e0, c] : p.terms()) {
        if (e0[var] == 0) continue;
        e = e0;
        e[var] -= 1;
        Poly t(p.vars());
        r += Poly::from_terms(p.vars(), {{e, c * Rat(e0[var])}});
    }
    return r;
}

namespace {

void render_monomial(std::ostream& os, const VarSet& vars, const Expvec& e, const Rat& c) {
    bool has_vars = false;
    for (int x : e)
        if (x) has_vars = true;
    Rat a = abs(c);
    bool printed_coeff = false;
    if (!has_vars || a != 1) {
        os << a.get_str();
        printed_coeff = true;
    }
    bool first = true;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!e[i]) continue;
        if (!first || (printed_coeff && a.get_den() != 1)) os << '*';
        os << vars.name(i);
        if (e[i] != 1) os << '^' << e[i];
        first = false;
    }
}

}  // namespace

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat& c = it->second;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? '-' : '+');
        }
        render_monomial(os, vars_, it->first, c);
    }
    return os.str();
}

}  // namespace telesum
