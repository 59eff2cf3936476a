#include "telesum/hyperterm.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace telesum {

bool LinearForm::is_constant() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long c) { return c == 0; });
}

LinearForm LinearForm::operator+(const LinearForm& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("linear form variable sets differ");
    LinearForm r = *this;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.constant_ += o.constant_;
    return r;
}

LinearForm LinearForm::operator-(const LinearForm& o) const { return *this + (o * -1); }

LinearForm LinearForm::operator*(long c) const {
    LinearForm r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.constant_ *= c;
    return r;
}

long LinearForm::eval(const std::vector<long>& point) const {
    if (point.size() != coeffs_.size()) throw std::invalid_argument("linear form point mismatch");
    long v = constant_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v += coeffs_[i] * point[i];
    return v;
}

LinearForm LinearForm::substitute(const std::map<int, long>& values) const {
    LinearForm r = *this;
    for (const auto& [i, v] : values) {
        r.constant_ += r.coeffs_[i] * v;
        r.coeffs_[i] = 0;
    }
    return r;
}

Poly LinearForm::to_poly() const {
    Poly p(vars_, Rat(constant_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i]) p += Poly::variable(vars_, vars_.name(i)) * Rat(coeffs_[i]);
    return p;
}

std::string LinearForm::to_string() const { return to_poly().to_string(); }

HyperTerm::HyperTerm(VarSet vars, Poly polypart, std::vector<FactorialFactor> factorials,
                     std::vector<PowerFactor> powers)
    : vars_(std::move(vars)),
      polypart_(std::move(polypart)),
      factorials_(std::move(factorials)),
      powers_(std::move(powers)) {
    canonicalize_();
}

HyperTerm HyperTerm::from_poly(Poly p) {
    HyperTerm t(p.vars());
    t.polypart_ = std::move(p);
    return t;
}

HyperTerm HyperTerm::factorial(const LinearForm& form, int exponent) {
    HyperTerm t(form.vars());
    t.factorials_.push_back({form, exponent});
    t.canonicalize_();
    return t;
}

void HyperTerm::canonicalize_() {
    std::map<LinearForm, long> fs;
    for (const auto& f : factorials_) fs[f.form] += f.exponent;
    factorials_.clear();
    for (const auto& [form, e] : fs) {
        if (e == 0) continue;
        if (form.is_constant()) {
            long c = form.constant();
            if (c >= 0) {
                Rat v(telesum::factorial(static_cast<unsigned long>(c)));
                polypart_ = polypart_ * rat_pow(v, e);
            } else if (e < 0) {
                polypart_ = Poly(vars_);  // reciprocal factorial at negative integer
            } else {
                throw std::domain_error("factorial of negative constant");
            }
            continue;
        }
        factorials_.push_back({form, static_cast<int>(e)});
    }
    std::map<Rat, LinearForm> ps;
    for (const auto& p : powers_) {
        if (p.base == 0) throw std::domain_error("power factor with zero base");
        auto it = ps.find(p.base);
        if (it == ps.end())
            ps.emplace(p.base, p.exponent);
        else
            it->second = it->second + p.exponent;
    }
    powers_.clear();
    for (const auto& [base, e] : ps) {
        if (e.is_constant()) {
            polypart_ = polypart_ * rat_pow(base, e.constant());
            continue;
        }
        if (base == 1) continue;
        powers_.push_back({base, e});
    }
    if (polypart_.is_zero()) {
        factorials_.clear();
        powers_.clear();
    }
}

HyperTerm HyperTerm::operator*(const HyperTerm& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("hyperterm variable sets differ");
    HyperTerm r(vars_);
    r.polypart_ = polypart_ * o.polypart_;
    r.factorials_ = factorials_;
    r.factorials_.insert(r.factorials_.end(), o.factorials_.begin(), o.factorials_.end());
    r.powers_ = powers_;
    r.powers_.insert(r.powers_.end(), o.powers_.begin(), o.powers_.end());
    r.canonicalize_();
    return r;
}

HyperTerm HyperTerm::operator/(const HyperTerm& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("hyperterm variable sets differ");
    if (!o.polypart_.is_constant())
        throw std::domain_error("cannot divide by a non-constant polynomial prefactor");
    Rat c = o.polypart_.constant_value();
    if (c == 0) throw std::domain_error("division by zero term");
    HyperTerm r(vars_);
    r.polypart_ = polypart_ / c;
    r.factorials_ = factorials_;
    for (auto f : o.factorials_) {
        f.exponent = -f.exponent;
        r.factorials_.push_back(f);
    }
    r.powers_ = powers_;
    for (auto p : o.powers_) {
        p.exponent = -p.exponent;
        r.powers_.push_back(p);
    }
    r.canonicalize_();
    return r;
}

HyperTerm HyperTerm::pow(int e) const {
    if (e == 0) return HyperTerm(vars_);
    HyperTerm r(vars_);
    if (e < 0) {
        if (!polypart_.is_constant())
            throw std::domain_error("negative power of a non-constant polynomial prefactor");
        Rat c = polypart_.constant_value();
        if (c == 0) throw std::domain_error("negative power of zero");
        r.polypart_ = Poly(vars_, rat_pow(c, e));
    } else {
        r.polypart_ = polypart_.pow(static_cast<unsigned>(e));
    }
    r.factorials_ = factorials_;
    for (auto& f : r.factorials_) f.exponent *= e;
    r.powers_ = powers_;
    for (auto& p : r.powers_) p.exponent = p.exponent * e;
    r.canonicalize_();
    return r;
}

bool HyperTerm::operator==(const HyperTerm& o) const {
    if (vars_ != o.vars_ || polypart_ != o.polypart_) return false;
    if (factorials_.size() != o.factorials_.size() || powers_.size() != o.powers_.size())
        return false;
    for (std::size_t i = 0; i < factorials_.size(); ++i)
        if (factorials_[i].form != o.factorials_[i].form ||
            factorials_[i].exponent != o.factorials_[i].exponent)
            return false;
    for (std::size_t i = 0; i < powers_.size(); ++i)
        if (powers_[i].base != o.powers_[i].base || powers_[i].exponent != o.powers_[i].exponent)
            return false;
    return true;
}

HyperTerm binom(const LinearForm& top, const LinearForm& bottom) {
    // binom(a, b) = a! / (b! (a-b)!)
    HyperTerm t = HyperTerm::factorial(top, 1);
    t = t * HyperTerm::factorial(bottom, -1);
    t = t * HyperTerm::factorial(top - bottom, -1);
    return t;
}

RatFn shift_quotient(const HyperTerm& f, int var) {
    if (f.is_zero()) throw std::domain_error("shift quotient of the zero term");
    const VarSet& vs = f.vars();
    Poly num = f.polypart().shift(var, 1);
    Poly den = f.polypart();
    Rat scale(1);
    for (const auto& fac : f.factorials()) {
        long a = fac.form.coeff(var);
        if (a == 0) continue;
        // (A + a)! / A! -- a rising product for a > 0, reciprocal falling for a < 0.
        Poly prod(vs, Rat(1));
        Poly ap = fac.form.to_poly();
        if (a > 0) {
            for (long t = 1; t <= a; ++t) prod = prod * (ap + Poly(vs, Rat(t)));
        } else {
            for (long t = 0; t < -a; ++t) prod = prod * (ap - Poly(vs, Rat(t)));
        }
        long e = static_cast<long>(fac.exponent) * (a > 0 ? 1 : -1);
        unsigned mag = static_cast<unsigned>(e < 0 ? -e : e);
        if (e > 0)
            num = num * prod.pow(mag);
        else
            den = den * prod.pow(mag);
    }
    for (const auto& p : f.powers()) scale *= rat_pow(p.base, p.exponent.coeff(var));
    return RatFn(num * scale, den);
}

RatFn shift_quotient(const HyperTerm& f, const std::string& var) {
    return shift_quotient(f, f.vars().index_checked(var));
}

Rat eval_term(const HyperTerm& f, const std::vector<long>& point) {
    for (const auto& fac : f.factorials())
        if (fac.exponent > 0 && fac.form.eval(point) < 0)
            throw std::domain_error("factorial of negative integer at " + fac.form.to_string());
    for (const auto& fac : f.factorials())
        if (fac.exponent < 0 && fac.form.eval(point) < 0) return Rat(0);

    std::vector<Rat> rp(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) rp[i] = Rat(point[i]);
    Rat v = f.polypart().eval(rp);
    for (const auto& fac : f.factorials()) {
        Rat x(telesum::factorial(static_cast<unsigned long>(fac.form.eval(point))));
        v *= rat_pow(x, fac.exponent);
    }
    for (const auto& p : f.powers()) v *= rat_pow(p.base, p.exponent.eval(point));
    return v;
}

Rat eval_term_extended(const HyperTerm& f, const std::vector<long>& point) {
    for (const auto& fac : f.factorials())
        if (fac.exponent < 0 && fac.form.eval(point) < 0) return Rat(0);
    return eval_term(f, point);
}

std::optional<SupportBox> finite_support(const HyperTerm& f, const std::vector<int>& sumvars,
                                         long n_value) {
    const VarSet& vs = f.vars();
    std::map<int, long> fixed;
    for (int i = 0; i < static_cast<int>(vs.size()); ++i)
        if (std::find(sumvars.begin(), sumvars.end(), i) == sumvars.end()) fixed[i] = n_value;
    // Inside the support every reciprocal factorial argument is >= 0.
    std::vector<LinearForm> constraints;
    for (const auto& fac : f.factorials())
        if (fac.exponent < 0) {
            LinearForm c = fac.form.substitute(fixed);
            for (int v : sumvars)
                if (c.coeff(v) != 0) {
                    constraints.push_back(c);
                    break;
                }
        }

    const long INF = std::numeric_limits<long>::max() / 4;
    std::vector<long> lo(sumvars.size(), -INF), hi(sumvars.size(), INF);

    auto floored_div = [](long a, long b) {
        long q = a / b, r = a % b;
        return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
    };
    auto ceiled_div = [&](long a, long b) { return -floored_div(-a, b); };

    // Interval propagation to a fixpoint; bounds only tighten.
    bool changed = true;
    int guard = 0;
    while (changed && ++guard < 10000) {
        changed = false;
        for (const auto& c : constraints) {
            for (std::size_t i = 0; i < sumvars.size(); ++i) {
                long ai = c.coeff(sumvars[i]);
                if (ai == 0) continue;
                // a_i k_i >= -c0 - sum_{j != i} a_j k_j over the current box.
                long rest = c.constant();
                bool bounded = true;
                for (std::size_t j = 0; j < sumvars.size() && bounded; ++j) {
                    if (j == i) continue;
                    long aj = c.coeff(sumvars[j]);
                    if (aj == 0) continue;
                    long b = aj > 0 ? hi[j] : lo[j];
                    if (b >= INF || b <= -INF)
                        bounded = false;
                    else
                        rest += aj * b;
                }
                if (!bounded) continue;
                if (ai > 0) {
                    long nb = ceiled_div(-rest, ai);
                    if (nb > lo[i]) {
                        lo[i] = nb;
                        changed = true;
                    }
                } else {
                    long nb = floored_div(rest, -ai);
                    if (nb < hi[i]) {
                        hi[i] = nb;
                        changed = true;
                    }
                }
                if (lo[i] > hi[i]) return SupportBox{lo, hi};
            }
        }
    }
    for (std::size_t i = 0; i < sumvars.size(); ++i)
        if (lo[i] <= -INF || hi[i] >= INF) return std::nullopt;
    return SupportBox{lo, hi};
}

std::string HyperTerm::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << '*';
        first = false;
    };
    if (!(polypart_.is_constant() && polypart_.constant_value() == 1) ||
        (factorials_.empty() && powers_.empty())) {
        sep();
        if (polypart_.terms().size() > 1 ||
            (polypart_.is_constant() && !polypart_.is_zero() &&
             (polypart_.constant_value() < 0 || polypart_.constant_value().get_den() != 1)))
            os << '(' << polypart_.to_string() << ')';
        else
            os << polypart_.to_string();
    }
    for (const auto& f : factorials_) {
        sep();
        os << '(' << f.form.to_string() << ")!";
        if (f.exponent != 1) os << '^' << f.exponent;
    }
    for (const auto& p : powers_) {
        sep();
        if (p.base.get_den() != 1 || p.base < 0)
            os << '(' << p.base.get_str() << ')';
        else
            os << p.base.get_str();
        os << "^(" << p.exponent.to_string() << ')';
    }
    return os.str();
}

}  // namespace telesum
