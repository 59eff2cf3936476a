#include <algorithm>
#include <random>

#include "telesum/poly.hpp"

namespace telesum {

namespace {

// Univariate view: coefficients ascending in the main variable, entries free of it.
using Uv = std::vector<Poly>;

long uv_deg(const Uv& a) {
    for (long i = static_cast<long>(a.size()) - 1; i >= 0; --i)
        if (!a[i].is_zero()) return i;
    return -1;
}

void uv_trim(Uv& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Uv uv_scale(const Uv& a, const Poly& c) {
    Uv r = a;
    for (auto& x : r) x = x * c;
    return r;
}

Uv uv_exact_div(const Uv& a, const Poly& c) {
    Uv r = a;
    for (auto& x : r) x = exact_divide(x, c);
    return r;
}

// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b.
Uv uv_prem(Uv a, const Uv& b) {
    long db = uv_deg(b);
    const Poly& lb = b[db];
    long da = uv_deg(a);
    long steps = da - db + 1;
    long done = 0;
    while (true) {
        da = uv_deg(a);
        if (da < db) break;
        Poly lead = a[da];
        for (auto& x : a) x = x * lb;
        for (long j = 0; j <= db; ++j) a[da - db + j] -= lead * b[j];
        ++done;
    }
    // Pad the scaling so the result equals the full pseudo-remainder.
    if (done < steps) {
        Poly lpow = lb.pow(static_cast<unsigned>(steps - done));
        for (auto& x : a) x = x * lpow;
    }
    uv_trim(a);
    return a;
}

// Subresultant PRS gcd of two primitive (wrt the main variable) inputs.
Uv uv_subresultant_gcd(Uv A, Uv B, const VarSet& vars) {
    if (uv_deg(A) < uv_deg(B)) std::swap(A, B);
    Poly g(vars, Rat(1)), h(vars, Rat(1));
    while (true) {
        long delta = uv_deg(A) - uv_deg(B);
        Uv R = uv_prem(A, B);
        if (uv_deg(R) < 0) break;
        if (uv_deg(R) == 0) return {Poly(vars, Rat(1))};
        Poly divisor = g * h.pow(static_cast<unsigned>(delta));
        A = B;
        B = uv_exact_div(R, divisor);
        g = A[uv_deg(A)];
        if (delta > 0) {
            Poly gd = g.pow(static_cast<unsigned>(delta));
            h = delta == 1 ? gd : exact_divide(gd, h.pow(static_cast<unsigned>(delta - 1)));
        }
    }
    return B;
}

// Primitive PRS: pseudo-remainders stripped to their primitive part each
// step. Smaller intermediates than the subresultant divisors when the
// coefficients are themselves polynomials.
Uv uv_primitive_gcd(Uv A, Uv B, int x, const VarSet& vars) {
    if (uv_deg(A) < uv_deg(B)) std::swap(A, B);
    while (true) {
        Uv R = uv_prem(A, B);
        long dr = uv_deg(R);
        if (dr < 0) break;
        if (dr == 0) return {Poly(vars, Rat(1))};
        Poly r = Poly::from_coeffs_wrt(vars, x, R);
        r = r.primitive_part_wrt(x);
        A = B;
        B = r.coeffs_wrt(x);
    }
    return B;
}

int main_variable(const Poly& p, const Poly& q) {
    int n = static_cast<int>(p.vars().size());
    for (int i = n - 1; i >= 0; --i)
        if (p.depends_on(i) || q.depends_on(i)) return i;
    return -1;
}

// Degree of gcd of univariate integer polynomials (fraction-free Euclid with
// content stripping; scalings do not change the gcd degree).
long int_gcd_degree(std::vector<Int> a, std::vector<Int> b) {
    auto deg = [](const std::vector<Int>& v) {
        for (long i = static_cast<long>(v.size()) - 1; i >= 0; --i)
            if (v[i] != 0) return i;
        return -1L;
    };
    auto strip = [&](std::vector<Int>& v) {
        long d = deg(v);
        v.resize(static_cast<std::size_t>(d + 1));
        Int g(0);
        for (const Int& c : v) g = int_gcd(g, c);
        if (g > 1)
            for (Int& c : v) c /= g;
    };
    strip(a);
    strip(b);
    if (deg(a) < deg(b)) std::swap(a, b);
    for (;;) {
        long da = deg(a), db = deg(b);
        if (db < 0) return da;
        if (db == 0) return 0;
        const Int lb = b[db];
        while (da >= db) {
            Int f = a[da];
            if (f != 0) {
                for (Int& c : a) c *= lb;
                for (long j = 0; j <= db; ++j) a[da - db + j] -= f * b[j];
            }
            a.resize(static_cast<std::size_t>(da));
            da = deg(a);
        }
        strip(a);
        std::swap(a, b);
    }
}

std::vector<Int> to_int_vec(const std::vector<Rat>& v) {
    Int den(1);
    for (const Rat& c : v) den = int_lcm(den, c.get_den());
    std::vector<Int> out;
    out.reserve(v.size());
    for (const Rat& c : v) out.push_back(c.get_num() * (den / c.get_den()));
    return out;
}

// Sound coprimality fast path: if the inputs specialize (all variables but
// the main one, leading coefficients preserved) to coprime univariate
// polynomials, the primitive gcd in the main variable is trivial.
bool specialized_coprime(const Poly& a, const Poly& b, int x) {
    int nv = static_cast<int>(a.vars().size());
    std::vector<int> params;
    for (int i = 0; i < nv; ++i)
        if (i != x && (a.depends_on(i) || b.depends_on(i))) params.push_back(i);
    if (params.empty()) return false;  // already univariate, just run the PRS
    Poly la = a.leading_coeff_wrt(x), lb = b.leading_coeff_wrt(x);
    std::mt19937 rng(0xa11ce5u);
    std::uniform_int_distribution<int> dist(2, 97);
    for (int attempt = 0; attempt < 12; ++attempt) {
        std::map<int, Rat> point;
        for (int i : params) point[i] = Rat(dist(rng));
        if (la.substitute(point).is_zero() || lb.substitute(point).is_zero()) continue;
        auto tovec = [&](const Poly& p) {
            Poly ps = p.substitute(point);
            std::vector<Rat> v(static_cast<std::size_t>(ps.degree_wrt(x)) + 1, Rat(0));
            for (const auto& [e, c] : ps.terms()) v[e[x]] = c;
            return to_int_vec(v);
        };
        return int_gcd_degree(tovec(a), tovec(b)) == 0;
    }
    return false;
}

}  // namespace

Poly poly_gcd(const Poly& p, const Poly& q) {
    const VarSet& vars = p.vars();
    if (p.is_zero()) return q.is_zero() ? q : q.primitive_part();
    if (q.is_zero()) return p.primitive_part();
    Poly a = p.primitive_part();
    Poly b = q.primitive_part();
    if (a.is_constant() || b.is_constant()) return Poly(vars, Rat(1));
    int x = main_variable(a, b);
    if (x < 0) return Poly(vars, Rat(1));
    if (!a.depends_on(x)) return poly_gcd(a, b.content_wrt(x));
    if (!b.depends_on(x)) return poly_gcd(a.content_wrt(x), b);

    Poly ca = a.content_wrt(x), cb = b.content_wrt(x);
    Poly c = poly_gcd(ca, cb);
    if (specialized_coprime(a, b, x)) return c;
    Uv A = exact_divide(a, ca).coeffs_wrt(x);
    Uv B = exact_divide(b, cb).coeffs_wrt(x);
    bool univariate = true;
    for (const Uv* uv : {&A, &B})
        for (const Poly& coeff : *uv)
            if (!coeff.is_constant()) univariate = false;
    Uv G = univariate ? uv_subresultant_gcd(std::move(A), std::move(B), vars)
                      : uv_primitive_gcd(std::move(A), std::move(B), x, vars);
    Poly g = Poly::from_coeffs_wrt(vars, x, G);
    g = g.primitive_part_wrt(x);
    return (c * g).primitive_part();
}

Poly poly_lcm(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) throw std::domain_error("poly_lcm of zero polynomial");
    Poly g = poly_gcd(p, q);
    return exact_divide(p.primitive_part() * q.primitive_part(), g).primitive_part();
}

Poly resultant(const Poly& p, const Poly& q, int var) {
    const VarSet& vars = p.vars();
    if (p.is_zero() || q.is_zero()) return Poly(vars);
    long m = p.degree_wrt(var), n = q.degree_wrt(var);
    if (m <= 0 && n <= 0) return Poly(vars, Rat(1));
    if (m == 0) return p.pow(static_cast<unsigned>(n));
    if (n == 0) return q.pow(static_cast<unsigned>(m));

    Uv a = p.coeffs_wrt(var), b = q.coeffs_wrt(var);
    std::size_t k = static_cast<std::size_t>(m + n);
    std::vector<std::vector<Poly>> M(k, std::vector<Poly>(k, Poly(vars)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) M[i][i + j] = a[m - j];
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) M[n + i][i + j] = b[n - j];

    // Bareiss fraction-free determinant.
    Poly prev(vars, Rat(1));
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t piv = c;
        while (piv < k && M[piv][c].is_zero()) ++piv;
        if (piv == k) return Poly(vars);
        if (piv != c) {
            std::swap(M[piv], M[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < k; ++i) {
            for (std::size_t j = c + 1; j < k; ++j)
                M[i][j] = exact_divide(M[c][c] * M[i][j] - M[i][c] * M[c][j], prev);
            M[i][c] = Poly(vars);
        }
        prev = M[c][c];
    }
    Poly det = M[k - 1][k - 1];
    return sign < 0 ? -det : det;
}

Poly pp_wrt(const Poly& p, int var) {
    if (p.is_zero()) return p;
    return p.primitive_part_wrt(var);
}

Poly gcd_wrt(const Poly& p, const Poly& q, int var) {
    return pp_wrt(poly_gcd(p, q), var);
}

Poly lcm_wrt(const Poly& p, const Poly& q, int var) {
    Poly a = pp_wrt(p, var), b = pp_wrt(q, var);
    return exact_divide(a * b, gcd_wrt(a, b, var)).primitive_part();
}

bool divides_wrt(const Poly& d, const Poly& p, int var) {
    if (p.is_zero()) return true;
    return Poly::try_divide(pp_wrt(p, var), pp_wrt(d, var)).has_value();
}

Poly exact_divide_wrt(const Poly& p, const Poly& q, int var) {
    return exact_divide(pp_wrt(p, var), pp_wrt(q, var));
}

std::vector<std::pair<Poly, int>> squarefree_factors(const Poly& p, int var) {
    std::vector<std::pair<Poly, int>> out;
    if (p.is_zero() || p.degree_wrt(var) <= 0) return out;
    // Yun's algorithm. The gcds are unit-normalized but every division below
    // must be honest (no content stripping), or d drifts and the loop breaks.
    Poly f = pp_wrt(p, var);
    Poly fp = derivative(f, var);
    Poly a = gcd_wrt(f, fp, var);
    Poly b = exact_divide(f, a);
    Poly c = exact_divide(fp, a);
    Poly d = c - derivative(b, var);
    int i = 1;
    while (b.degree_wrt(var) > 0) {
        Poly ai = d.is_zero() ? pp_wrt(b, var) : gcd_wrt(b, d, var);
        if (ai.degree_wrt(var) > 0) out.emplace_back(ai.primitive_part(), i);
        b = exact_divide(b, ai);
        c = exact_divide(d, ai);
        d = c - derivative(b, var);
        ++i;
    }
    return out;
}

std::vector<std::pair<Poly, int>> squarefree_factors(const Poly& p, const std::string& var) {
    return squarefree_factors(p, p.vars().index_checked(var));
}

namespace {

// Radical with respect to var (product of distinct factors).
Poly squarefree_part(const Poly& p, int var) {
    Poly f = pp_wrt(p, var);
    if (f.degree_wrt(var) <= 0) return f;
    Poly g = gcd_wrt(f, derivative(f, var), var);
    return exact_divide_wrt(f, g, var);
}

Int lagrange_root_bound(const std::vector<Rat>& coeffs) {
    long d = -1;
    for (long i = static_cast<long>(coeffs.size()) - 1; i >= 0; --i)
        if (coeffs[i] != 0) {
            d = i;
            break;
        }
    if (d <= 0) return Int(0);
    Int best(0);
    for (long i = 0; i < d; ++i) {
        if (coeffs[i] == 0) continue;
        Rat q = abs(coeffs[i] / coeffs[d]);
        Int num = q.get_num() / q.get_den() + 1;
        Int root;
        mpz_root(root.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(d - i));
        if (root + 1 > best) best = root + 1;
    }
    return 2 * best + 1;
}

struct ShiftMatchScan {
    // Specialized integer coefficient vectors of the squarefree parts, one
    // pair per specialization point.
    std::vector<std::vector<Int>> ps, qs;
    Int root_bound;  // min over specializations
};

ShiftMatchScan shift_match_scan(const Poly& p, const Poly& q, int var) {
    const VarSet& vars = p.vars();
    Poly sp = squarefree_part(p, var);
    Poly sq = squarefree_part(q, var);

    std::vector<int> params;
    for (int i = 0; i < static_cast<int>(vars.size()); ++i)
        if (i != var && (sp.depends_on(i) || sq.depends_on(i))) params.push_back(i);

    Poly lcp = sp.leading_coeff_wrt(var);
    Poly lcq = sq.leading_coeff_wrt(var);

    std::mt19937 rng(0x5eed1234u);
    std::uniform_int_distribution<int> dist(2, 47);

    ShiftMatchScan scan;
    int trials = params.empty() ? 1 : 3;
    for (int t = 0; t < trials; ++t) {
        std::map<int, Rat> point;
        for (int attempt = 0;; ++attempt) {
            if (attempt > 200)
                throw std::runtime_error("integer_shift_matches: no good specialization found");
            point.clear();
            for (int i : params) point[i] = Rat(dist(rng));
            if (lcp.substitute(point).is_zero()) continue;
            if (lcq.substitute(point).is_zero()) continue;
            break;
        }
        auto coeff_vec = [&](const Poly& f) {
            Poly fs = f.substitute(point);
            std::vector<Rat> cv(static_cast<std::size_t>(fs.degree_wrt(var)) + 1, Rat(0));
            for (const auto& [e, c] : fs.terms()) cv[e[var]] = c;
            return cv;
        };
        std::vector<Rat> pv = coeff_vec(sp), qv = coeff_vec(sq);
        // A shift match l means p and q(.+l) share a root z, so
        // |l| <= |z| + |z+l| is bounded by the two root bounds.
        Int bound = lagrange_root_bound(pv) + lagrange_root_bound(qv) + 1;
        if (scan.ps.empty() || bound < scan.root_bound) scan.root_bound = bound;
        scan.ps.push_back(to_int_vec(pv));
        scan.qs.push_back(to_int_vec(qv));
    }
    return scan;
}

std::vector<Int> shift_coeff_vec(const std::vector<Int>& v, long l) {
    std::vector<Int> out(v.size(), Int(0));
    for (std::size_t e = 0; e < v.size(); ++e) {
        if (v[e] == 0) continue;
        Int lp(1);
        for (long i = static_cast<long>(e); i >= 0; --i) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(e),
                         static_cast<unsigned long>(i));
            out[i] += v[e] * binom * lp;
            lp *= l;
        }
    }
    return out;
}

// Candidate test: the specialized polynomials share a root shifted by l
// exactly when Res(p(s), q(s+l)) vanishes, i.e. when their gcd is nontrivial.
bool scan_candidate(const ShiftMatchScan& scan, long l) {
    for (std::size_t t = 0; t < scan.ps.size(); ++t)
        if (int_gcd_degree(scan.ps[t], shift_coeff_vec(scan.qs[t], l)) == 0) return false;
    return true;
}

bool verified_match(const Poly& p, const Poly& q, int var, long l) {
    return gcd_wrt(p, q.shift(var, l), var).degree_wrt(var) > 0;
}

}  // namespace

std::set<long> integer_shift_matches(const Poly& p, const Poly& q, int var,
                                     long range_lo, long range_hi) {
    std::set<long> out;
    if (p.is_zero() || q.is_zero()) return out;
    if (p.degree_wrt(var) <= 0 || q.degree_wrt(var) <= 0) return out;
    ShiftMatchScan scan = shift_match_scan(p, q, var);
    long hi = range_hi;
    if (scan.root_bound < hi) hi = scan.root_bound.get_si();
    long lo = range_lo;
    Int neg_bound = -scan.root_bound;
    if (lo < neg_bound) lo = neg_bound.get_si();
    for (long l = lo; l <= hi; ++l)
        if (scan_candidate(scan, l) && verified_match(p, q, var, l)) out.insert(l);
    return out;
}

std::set<long> integer_shift_matches(const Poly& p, const Poly& q,
                                     const std::string& var, long range_lo, long range_hi) {
    return integer_shift_matches(p, q, p.vars().index_checked(var), range_lo, range_hi);
}

Int shift_match_root_bound(const Poly& p, const Poly& q, int var) {
    if (p.is_zero() || q.is_zero()) return Int(0);
    if (p.degree_wrt(var) <= 0 || q.degree_wrt(var) <= 0) return Int(0);
    return shift_match_scan(p, q, var).root_bound;
}

}  // namespace telesum
