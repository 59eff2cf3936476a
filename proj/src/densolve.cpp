#include "telesum/densolve.hpp"

#include <algorithm>

#include "telesum/linsolve.hpp"

namespace telesum {

namespace {

// Largest l in [0, cap] with gcd(p(s), q(s+l)) != 1; errors if a match could
// exist beyond the cap.
std::optional<long> largest_match_checked(const Poly& p, const Poly& q, int svar,
                                          long cap) {
    Int bound = shift_match_root_bound(p, q, svar);
    if (bound > cap) {
        if (bound - cap > (1L << 20))
            throw std::runtime_error(
                "chain cap " + std::to_string(cap) +
                ": shift-match root bound " + bound.get_str() + " cannot be certified");
        auto beyond = integer_shift_matches(p, q, svar, cap + 1, bound.get_si());
        if (!beyond.empty())
            throw std::runtime_error("chain length " + std::to_string(*beyond.rbegin()) +
                                     " exceeds chain cap " + std::to_string(cap));
    }
    auto in = integer_shift_matches(p, q, svar, 0, cap);
    if (in.empty()) return std::nullopt;
    return *in.rbegin();
}

}  // namespace

RatCoeffDE RatCoeffDE::from_coeffs(const VarSet& vars, int svar,
                                   const std::vector<RatFn>& coeffs, const RatFn& rhs) {
    if (coeffs.empty()) throw std::invalid_argument("equation needs at least one coefficient");
    // Clear a rational right-hand side by multiplying the equation through.
    std::vector<RatFn> r = coeffs;
    Poly c = rhs.num();
    if (!rhs.den().is_constant()) {
        for (auto& x : r) x = x * RatFn(rhs.den());
    } else if (rhs.den().constant_value() != 1) {
        c = c / rhs.den().constant_value();
    }
    int i0 = -1, i1 = -1;
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (!r[i].is_zero()) {
            if (i0 < 0) i0 = i;
            i1 = i;
        }
    if (i0 < 0) throw std::invalid_argument("all equation coefficients are zero");
    RatCoeffDE eq;
    eq.vars = vars;
    eq.svar = svar;
    eq.m = i1 - i0;
    for (int i = i0; i <= i1; ++i) {
        RatFn x = r[i].shift(svar, -i0);
        eq.a.push_back(x.num());
        eq.b.push_back(x.den());
    }
    eq.c = c.shift(svar, -i0);
    return eq;
}

RatCoeffDE RatCoeffDE::from_coeffs(const VarSet& vars, const std::string& svar,
                                   const std::vector<RatFn>& coeffs, const RatFn& rhs) {
    return from_coeffs(vars, vars.index_checked(svar), coeffs, rhs);
}

std::tuple<Poly, std::vector<Poly>, Poly> normalize(const RatCoeffDE& eq) {
    const int s = eq.svar;
    Poly sigma(eq.vars, Rat(1));
    for (const Poly& bi : eq.b)
        if (bi.degree_wrt(s) > 0) sigma = lcm_wrt(sigma, bi, s);
    std::vector<Poly> tau;
    for (int i = 0; i <= eq.m; ++i) {
        if (eq.a[i].is_zero()) {
            tau.emplace_back(eq.vars);
            continue;
        }
        // b_i | sigma in K[s]; reduce the small quotient first so the large
        // a_i never enters a gcd.
        RatFn quot(sigma, eq.b[i]);
        if (quot.den().depends_on(s)) throw std::logic_error("sigma is not an lcm multiple");
        tau.push_back(eq.a[i].shift(s, -i) * quot.num().shift(s, -i));
    }
    Poly tauhat(eq.vars);
    for (const Poly& t : tau)
        if (!t.is_zero()) tauhat = tauhat.is_zero() ? pp_wrt(t, s) : gcd_wrt(tauhat, t, s);
    return {sigma, tau, tauhat};
}

UDShape universal_denominator(const RatCoeffDE& eq, const DensolveOptions& opt) {
    const int s = eq.svar;
    UDShape ud;
    std::tie(ud.sigma, ud.tau, ud.tauhat) = normalize(eq);
    Poly t0 = exact_divide(pp_wrt(ud.tau.front(), s), ud.tauhat);
    Poly tm = exact_divide(pp_wrt(ud.tau.back(), s), ud.tauhat);
    ud.Q = ud.tauhat;
    for (;;) {
        // Largest l with gcd(t0(s), tm(s-l)) != 1.
        auto l = largest_match_checked(tm, t0, s, opt.chain_cap);
        if (!l) break;
        Poly phi = gcd_wrt(t0, tm.shift(s, -*l), s);
        for (long j = 0; j <= *l; ++j) ud.Q = ud.Q * phi.shift(s, j);
        ud.chains.emplace_back(phi, *l);
        t0 = exact_divide(t0, phi);
        tm = exact_divide(tm, phi.shift(s, *l));
    }
    ud.R = Poly(eq.vars, Rat(1));
    return ud;
}

Poly numerator_factor(const RatCoeffDE& eq, const Poly& Q, const DensolveOptions& opt) {
    const int s = eq.svar;
    Poly P(eq.vars, Rat(1));
    for (int round = 0; round < opt.numerator_cap; ++round) {
        // Writing x = P A'/Q, the i-th term's reduced denominator is
        // b_i(s) Q(s+i) / gcd(_, a_i(s) P(s+i)). A factor of one reduced
        // denominator not cancellable against the others must divide A'(s+i).
        std::vector<Poly> den(eq.m + 1, Poly(eq.vars, Rat(1)));
        for (int i = 0; i <= eq.m; ++i) {
            if (eq.a[i].is_zero()) continue;
            Poly D = pp_wrt(eq.b[i] * Q.shift(s, i), s);
            Poly g = gcd_wrt(D, eq.a[i] * P.shift(s, i), s);
            den[i] = exact_divide(D, g);
        }
        Poly R(eq.vars, Rat(1));
        for (int i = 0; i <= eq.m; ++i) {
            if (eq.a[i].is_zero() || den[i].degree_wrt(s) <= 0) continue;
            Poly others(eq.vars, Rat(1));
            for (int j = 0; j <= eq.m; ++j)
                if (j != i) others = others * den[j];
            Poly q = exact_divide(den[i], gcd_wrt(den[i], others, s));
            if (q.degree_wrt(s) > 0) R = lcm_wrt(R, q.shift(s, -i), s);
        }
        if (R.degree_wrt(s) <= 0) return P;
        P = P * R;
    }
    throw std::runtime_error("numerator-factor iteration exceeded cap " +
                             std::to_string(opt.numerator_cap));
}

long poly_solution_degree_bound(const std::vector<Poly>& p, long rhs_deg, int svar) {
    long d = -1;
    int m = static_cast<int>(p.size()) - 1;
    for (const Poly& pi : p) d = std::max(d, pi.degree_wrt(svar));
    if (d < 0) throw std::invalid_argument("zero operator");

    const VarSet& vars = p[0].vars();
    // gamma_t(N) = sum_v B_tv * C(N, v) where
    // B_tv = sum_i i^v [s^(d-t+v)] p_i; the first t with gamma_t nonzero
    // controls the degree drop of the operator on s^N.
    long t0 = -1;
    std::vector<Poly> btv;
    for (long t = 0; t <= d + m && t0 < 0; ++t) {
        btv.assign(static_cast<std::size_t>(t) + 1, Poly(vars));
        for (long v = 0; v <= t; ++v) {
            long u = t - v;
            if (d - u < 0) continue;
            Poly sum(vars);
            for (int i = 0; i <= m; ++i) {
                if (p[i].is_zero()) continue;
                Poly ci = p[i].coeff_wrt(svar, static_cast<int>(d - u));
                if (ci.is_zero()) continue;
                Int iv;
                mpz_ui_pow_ui(iv.get_mpz_t(), static_cast<unsigned long>(i),
                              static_cast<unsigned long>(v));
                sum += ci * Rat(iv);
            }
            btv[v] = sum;
            if (!sum.is_zero()) t0 = t;
        }
    }
    if (t0 < 0) throw std::logic_error("degree-bound strata all vanished for a nonzero operator");

    // gamma_{t0} as a polynomial in an auxiliary variable N.
    std::vector<std::string> extnames = vars.names();
    extnames.push_back("#N");
    VarSet ext(extnames);
    int ni = static_cast<int>(ext.size()) - 1;
    Poly gamma(ext);
    Poly cnv(ext, Rat(1));  // C(N, v) built incrementally
    Poly Nv = Poly::variable(ext, "#N");
    for (std::size_t v = 0; v < btv.size(); ++v) {
        if (v > 0) cnv = cnv * (Nv - Poly(ext, Rat(static_cast<long>(v) - 1))) / Rat(static_cast<long>(v));
        if (btv[v].is_zero()) continue;
        Poly lifted(ext);
        Poly::TermMap terms;
        for (const auto& [e, c] : btv[v].terms()) {
            Expvec e2 = e;
            e2.push_back(0);
            terms.emplace(std::move(e2), c);
        }
        lifted = Poly::from_terms(ext, std::move(terms));
        gamma += lifted * cnv;
    }

    std::vector<long> candidates;
    if (rhs_deg >= 0 && rhs_deg - d + t0 >= 0) candidates.push_back(rhs_deg - d + t0);

    // Nonnegative integer roots of gamma in N, exact verification by substitution.
    if (!gamma.is_zero() && gamma.degree_wrt(ni) > 0) {
        std::vector<Poly> gn = gamma.coeffs_wrt(ni);
        // Specialize parameters, if any, to locate candidates.
        std::map<int, Rat> point;
        for (int i = 0; i < static_cast<int>(ext.size()) - 1; ++i)
            if (gamma.depends_on(i)) point[i] = Rat(3 + 2 * i);
        std::vector<Rat> cs;
        for (int attempt = 0; attempt < 50; ++attempt) {
            cs.clear();
            for (const auto& g : gn) cs.push_back(g.substitute(point).constant_value());
            if (!std::all_of(cs.begin(), cs.end(), [](const Rat& c) { return c == 0; })) break;
            for (auto& [i, v] : point) v = v + 7 + attempt;
        }
        long dd = -1;
        for (long i = static_cast<long>(cs.size()) - 1; i >= 0; --i)
            if (cs[i] != 0) {
                dd = i;
                break;
            }
        Int bound(0);
        if (dd > 0) {
            Rat mx(0);
            for (long i = 0; i < dd; ++i) {
                Rat q = abs(cs[i] / cs[dd]);
                if (q > mx) mx = q;
            }
            bound = mx.get_num() / mx.get_den() + 2;
        }
        for (long n0 = 0; Int(n0) <= bound; ++n0) {
            Poly at(ext);
            for (long i = static_cast<long>(gn.size()) - 1; i >= 0; --i)
                at = at * Rat(n0) + gn[i];
            if (at.is_zero()) candidates.push_back(n0);
        }
    }
    long best = -1;
    for (long c : candidates) best = std::max(best, c);
    return best;
}

PolySolutionSpace polynomial_solutions(const std::vector<Poly>& p, const Poly& rhs, int svar) {
    const VarSet& vars = p.at(0).vars();
    long bound = poly_solution_degree_bound(p, rhs.degree_wrt(svar), svar);
    PolySolutionSpace out;
    if (bound < 0) {
        if (rhs.is_zero()) out.particular = RatFn::zero(vars);
        return out;
    }
    // Ansatz x = sum psi_j s^j; compare coefficients of powers of s.
    std::vector<Poly> w;  // w[j] = sum_i p_i(s) (s+i)^j
    Poly smon = Poly::variable(vars, vars.name(svar));
    for (long j = 0; j <= bound; ++j) {
        Poly acc(vars);
        Poly sj = smon.pow(static_cast<unsigned>(j));
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (p[i].is_zero()) continue;
            acc += p[i] * sj.shift(svar, static_cast<long>(i));
        }
        w.push_back(acc);
    }
    long maxdeg = rhs.degree_wrt(svar);
    for (const Poly& wj : w) maxdeg = std::max(maxdeg, wj.degree_wrt(svar));
    if (maxdeg < 0) {
        // The operator kills the whole ansatz space and the rhs is zero.
        out.particular = RatFn::zero(vars);
        for (long j = 0; j <= bound; ++j) out.basis.push_back(smon.pow(static_cast<unsigned>(j)));
        return out;
    }

    std::vector<std::vector<RatFn>> mat;
    std::vector<RatFn> vrhs;
    for (long e = maxdeg; e >= 0; --e) {
        std::vector<RatFn> row;
        row.reserve(w.size());
        for (long j = bound; j >= 0; --j)
            row.emplace_back(w[static_cast<std::size_t>(j)].coeff_wrt(svar, static_cast<int>(e)));
        mat.push_back(std::move(row));
        vrhs.emplace_back(rhs.coeff_wrt(svar, static_cast<int>(e)));
    }
    LinsolveResult ls = linsolve(mat, vrhs);

    auto assemble = [&](const std::vector<RatFn>& coeffs) {
        RatFn acc = RatFn::zero(vars);
        for (long j = bound; j >= 0; --j) {
            const RatFn& psi = coeffs[static_cast<std::size_t>(bound - j)];
            if (psi.is_zero()) continue;
            acc += psi * RatFn(smon.pow(static_cast<unsigned>(j)));
        }
        return acc;
    };
    if (ls.particular) out.particular = assemble(*ls.particular);
    for (const auto& v : ls.nullspace) {
        RatFn h = assemble(v);
        if (h.is_zero()) continue;
        // Parameter factors are units here; normalize to a primitive polynomial.
        out.basis.push_back(pp_wrt(h.num(), svar));
    }
    return out;
}

RationalSolutionSpace rational_solutions(const RatCoeffDE& eq, const DensolveOptions& opt) {
    const int s = eq.svar;
    UDShape ud = universal_denominator(eq, opt);
    Poly R = numerator_factor(eq, ud.Q, opt);

    // Substitute x = R P / Q and clear denominators.
    std::vector<RatFn> g;
    for (int i = 0; i <= eq.m; ++i)
        g.push_back(RatFn(eq.a[i] * R.shift(s, i), eq.b[i] * ud.Q.shift(s, i)));
    Poly M(eq.vars, Rat(1));
    for (const auto& gi : g)
        if (!gi.den().is_constant()) M = poly_lcm(M, gi.den());
    std::vector<Poly> p;
    for (const auto& gi : g) {
        RatFn cleared = gi * RatFn(M);
        if (!cleared.is_polynomial()) throw std::logic_error("denominator clearing failed");
        p.push_back(cleared.num() / cleared.den().constant_value());
    }
    RatFn rhs_cleared = RatFn(eq.c) * RatFn(M);
    if (!rhs_cleared.is_polynomial()) throw std::logic_error("rhs clearing failed");
    Poly rr = rhs_cleared.num() / rhs_cleared.den().constant_value();

    PolySolutionSpace ps = polynomial_solutions(p, rr, s);

    RationalSolutionSpace out;
    RatFn rq(R, ud.Q);
    auto verify = [&](const RatFn& x, bool homogeneous) {
        RatFn acc = RatFn::zero(eq.vars);
        for (int i = 0; i <= eq.m; ++i) acc += eq.coeff(i) * x.shift(s, i);
        if (homogeneous ? !acc.is_zero() : acc != RatFn(eq.c))
            throw std::logic_error("rational solution failed back-substitution");
    };
    if (ps.particular) {
        RatFn x = rq * *ps.particular;
        verify(x, false);
        out.particular = x;
    }
    for (const Poly& b : ps.basis) {
        RatFn x = rq * RatFn(b);
        verify(x, true);
        out.basis.push_back(x);
    }
    return out;
}

Poly abramov_denominator(const RatCoeffDE& eq, const DensolveOptions& opt) {
    const int s = eq.svar;
    auto [sigma, tau, tauhat] = normalize(eq);
    Poly t0 = pp_wrt(tau.front(), s);
    Poly tm = pp_wrt(tau.back(), s);
    Poly u(eq.vars, Rat(1));
    for (;;) {
        auto l = largest_match_checked(tm, t0, s, opt.chain_cap);
        if (!l) break;
        Poly phi = gcd_wrt(t0, tm.shift(s, -*l), s);
        for (long j = 0; j <= *l; ++j) u = u * phi.shift(s, j);
        t0 = exact_divide(t0, phi);
        tm = exact_divide(tm, phi.shift(s, *l));
    }
    return u.primitive_part();
}

std::optional<RatFn> gosper(const RatFn& ratio, const DensolveOptions& opt) {
    const VarSet& vars = ratio.vars();
    if (ratio.is_zero()) throw std::invalid_argument("gosper: zero term ratio");
    int svar = -1;
    for (int i = 0; i < static_cast<int>(vars.size()); ++i)
        if (ratio.depends_on(i)) svar = i;
    if (svar < 0) svar = static_cast<int>(vars.size()) - 1;
    std::vector<RatFn> coeffs{RatFn(Poly(vars, Rat(-1))), ratio};
    RatCoeffDE eq = RatCoeffDE::from_coeffs(vars, svar, coeffs, RatFn::one(vars));
    RationalSolutionSpace sol = rational_solutions(eq, opt);
    if (!sol.particular) return std::nullopt;
    return *sol.particular;
}

}  // namespace telesum
