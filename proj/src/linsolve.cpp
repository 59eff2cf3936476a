#include "telesum/linsolve.hpp"

#include <stdexcept>

namespace telesum {

namespace {

struct Row {
    std::vector<Poly> a;
    Poly b;
};

void strip_content(Row& row, const VarSet& vars) {
    Poly g(vars);
    for (const Poly& p : row.a)
        if (!p.is_zero()) g = poly_gcd(g, p);
    if (!row.b.is_zero()) g = poly_gcd(g, row.b);
    if (g.is_zero()) return;
    if (!g.is_constant()) {
        for (Poly& p : row.a) p = exact_divide(p, g);
        row.b = exact_divide(row.b, g);
    }
    // Remaining rational content, sign fixed by the first nonzero entry.
    Rat c(0);
    for (const Poly& p : row.a)
        for (const auto& [e, k] : p.terms()) c = rat_content_gcd(c, k);
    for (const auto& [e, k] : row.b.terms()) c = rat_content_gcd(c, k);
    if (c == 0) return;
    for (const Poly& p : row.a)
        if (!p.is_zero()) {
            if (p.leading_coeff() < 0) c = -c;
            break;
        }
    for (Poly& p : row.a) p = p / c;
    row.b = row.b / c;
}

}  // namespace

LinsolveResult linsolve(const std::vector<std::vector<RatFn>>& a,
                        const std::vector<RatFn>& rhs) {
    std::size_t nrows = a.size();
    if (rhs.size() != nrows) throw std::invalid_argument("linsolve: rhs size mismatch");
    std::size_t ncols = nrows ? a[0].size() : 0;
    for (const auto& row : a)
        if (row.size() != ncols) throw std::invalid_argument("linsolve: ragged matrix");

    VarSet vars;
    for (const auto& row : a)
        for (const auto& x : row)
            if (x.vars().size()) vars = x.vars();
    for (const auto& x : rhs)
        if (x.vars().size()) vars = x.vars();

    // Clear denominators row by row.
    std::vector<Row> rows(nrows);
    for (std::size_t i = 0; i < nrows; ++i) {
        Poly m(vars, Rat(1));
        for (const auto& x : a[i])
            if (!x.is_polynomial()) m = poly_lcm(m, x.den());
        if (!rhs[i].is_polynomial()) m = poly_lcm(m, rhs[i].den());
        RatFn mf((m));
        rows[i].a.reserve(ncols);
        for (const auto& x : a[i]) {
            RatFn y = x * mf;
            if (!y.is_polynomial()) throw std::logic_error("linsolve: clearing failed");
            rows[i].a.push_back(y.num() / y.den().constant_value());
        }
        RatFn y = rhs[i] * mf;
        rows[i].b = y.num() / y.den().constant_value();
        strip_content(rows[i], vars);
    }

    // Forward elimination.
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < nrows; ++c) {
        std::size_t piv = rank;
        while (piv < nrows && rows[piv].a[c].is_zero()) ++piv;
        if (piv == nrows) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            if (rows[i].a[c].is_zero()) continue;
            const Poly p = rows[rank].a[c];
            const Poly q = rows[i].a[c];
            for (std::size_t j = 0; j < ncols; ++j)
                rows[i].a[j] = rows[i].a[j] * p - rows[rank].a[j] * q;
            rows[i].b = rows[i].b * p - rows[rank].b * q;
            rows[i].a[c] = Poly(vars);
            strip_content(rows[i], vars);
        }
        pivot_col.push_back(c);
        ++rank;
    }

    LinsolveResult out;
    bool consistent = true;
    for (std::size_t i = rank; i < nrows; ++i)
        if (!rows[i].b.is_zero()) consistent = false;

    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    auto back_substitute = [&](const std::vector<RatFn>& free_vals,
                               bool use_rhs) -> std::vector<RatFn> {
        std::vector<RatFn> x(ncols, RatFn::zero(vars));
        std::size_t fi = 0;
        for (std::size_t c = 0; c < ncols; ++c)
            if (!is_pivot[c]) x[c] = free_vals[fi++];
        for (std::size_t i = rank; i-- > 0;) {
            std::size_t c = pivot_col[i];
            RatFn acc = use_rhs ? RatFn(rows[i].b) : RatFn::zero(vars);
            for (std::size_t j = c + 1; j < ncols; ++j)
                if (!rows[i].a[j].is_zero() && !x[j].is_zero()) acc -= RatFn(rows[i].a[j]) * x[j];
            x[c] = acc / RatFn(rows[i].a[c]);
        }
        return x;
    };

    std::size_t nfree = ncols - rank;
    if (consistent)
        out.particular = back_substitute(std::vector<RatFn>(nfree, RatFn::zero(vars)), true);

    for (std::size_t f = 0; f < nfree; ++f) {
        std::vector<RatFn> free_vals(nfree, RatFn::zero(vars));
        free_vals[f] = RatFn::one(vars);
        std::vector<RatFn> v = back_substitute(free_vals, false);
        // Normalize: clear denominators, strip content, first nonzero entry
        // gets a positive leading coefficient.
        Poly m(vars, Rat(1));
        for (const auto& x : v)
            if (!x.is_polynomial()) m = poly_lcm(m, x.den());
        Row r;
        for (const auto& x : v) {
            RatFn y = x * RatFn(m);
            r.a.push_back(y.num() / y.den().constant_value());
        }
        r.b = Poly(vars);
        strip_content(r, vars);
        std::vector<RatFn> w;
        w.reserve(ncols);
        for (const auto& p : r.a) w.emplace_back(p);
        out.nullspace.push_back(std::move(w));
    }
    return out;
}

}  // namespace telesum
