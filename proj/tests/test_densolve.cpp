#include "doctest.h"
#include "test_util.hpp"

#include "telesum/densolve.hpp"
#include "telesum/linsolve.hpp"
#include "telesum/parser.hpp"

using namespace telesum;
using namespace telesum::testutil;

namespace {
const VarSet S1{{"s"}};
const VarSet N1{{"n"}};

RatFn rf(const VarSet& vs, const char* txt) { return parse_ratfn(txt, vs); }
Poly pl(const VarSet& vs, const char* txt) { return parse_poly(txt, vs); }

// Abramov's Example 1 (4-term equation in n).
RatCoeffDE abramov_example() {
    std::vector<RatFn> coeffs{
        rf(N1, "-(n-1)*(2n-1)*(n+1)"),
        rf(N1, "n*(n+2)*(2n-3)"),
        rf(N1, "-(2n+3)*(n+3)*(n+1)"),
        rf(N1, "(n+4)*(2n+1)*(n+2)"),
    };
    return RatCoeffDE::from_coeffs(N1, "n", coeffs, RatFn::zero(N1));
}

// The intermediate three-term equation in k2 from the triple-sum run.
RatCoeffDE intermediate_example() {
    VarSet vs{{"n", "k1", "k2"}};
    RatFn r0 = RatFn::one(vs);
    RatFn r1 = rf(vs,
                  "-(2k2^2+k2+4k2*k1-6k2*n-3n+k1+3n^2-6k1*n+2k1^2)*(n+k2+2)*(-n+k2+1)"
                  "/((k2+2)^2*(k1+1-n+k2)*(k1-3n+k2))");
    RatFn r2 = rf(vs,
                  "(k1+1-n+k2)^2*(n+k2+3)*(n+k2+2)*(-n+k2+2)*(-n+k2+1)"
                  "/((k2+3)^2*(k2+2)^2*(k1+2-n+k2)*(k1-3n+k2+1))");
    RatFn rhs = rf(vs,
                   "1/((n+k2+1)*(-n+k2)"
                   "*(k1-3n+k2)*(k1-n+k2+1)*(k1+1)^2"
                   "*(k1-3n+k2+1)*(k1-n+k2+2)*(k1+2)^2"
                   "*(k1-3n+k2+2)*(k1-n+k2+3)*(k1+3)^2)");
    return RatCoeffDE::from_coeffs(vs, "k2", {r0, r1, r2}, rhs);
}

RatFn apply_eq(const RatCoeffDE& eq, const RatFn& x) {
    RatFn acc = RatFn::zero(eq.vars);
    for (int i = 0; i <= eq.m; ++i) acc += eq.coeff(i) * x.shift(eq.svar, i);
    return acc;
}
}  // namespace

TEST_CASE("normalize: trivial telescoping equation") {
    // x(s) - x(s+1) = c, listed as a = (1, -1), b = (1, 1)
    auto eq = RatCoeffDE::from_coeffs(S1, "s", {RatFn::one(S1), -RatFn::one(S1)},
                                      RatFn::zero(S1));
    auto [sigma, tau, tauhat] = normalize(eq);
    CHECK(sigma == pl(S1, "1"));
    CHECK(tau[0] == pl(S1, "1"));
    CHECK(tau[1] == pl(S1, "-1"));
    CHECK(tauhat == pl(S1, "1"));
}

TEST_CASE("normalize: rational coefficients") {
    auto eq = RatCoeffDE::from_coeffs(S1, "s", {rf(S1, "1/s"), rf(S1, "1/(s+1)")},
                                      RatFn::zero(S1));
    auto [sigma, tau, tauhat] = normalize(eq);
    CHECK(sigma == pl(S1, "s*(s+1)"));
    CHECK(tau[0] == pl(S1, "s+1"));
    CHECK(tau[1] == pl(S1, "s-1"));
}

TEST_CASE("normalize: four-term example reads off the coefficients") {
    auto eq = abramov_example();
    auto [sigma, tau, tauhat] = normalize(eq);
    CHECK(sigma == pl(N1, "1"));
    CHECK(tau[0] == pl(N1, "-(n-1)*(2n-1)*(n+1)"));
    CHECK(tau[3] == pl(N1, "(n+1)*(2n-5)*(n-1)"));
    CHECK(equal_up_to_unit(tauhat, pl(N1, "n^2-1")));
}

TEST_CASE("universal denominator: four-term example") {
    auto eq = abramov_example();
    UDShape ud = universal_denominator(eq);
    CHECK(ud.Q == pl(N1, "n^2-1"));
    CHECK(ud.chains.empty());  // two singletons, no chains
}

TEST_CASE("universal denominator: trivial equation") {
    auto eq = RatCoeffDE::from_coeffs(S1, "s", {-RatFn::one(S1), RatFn::one(S1)},
                                      RatFn::one(S1));
    UDShape ud = universal_denominator(eq);
    CHECK(ud.Q == pl(S1, "1"));
    CHECK(numerator_factor(eq, ud.Q) == pl(S1, "1"));
}

TEST_CASE("universal denominator: intermediate three-term equation") {
    auto eq = intermediate_example();
    UDShape ud = universal_denominator(eq);
    VarSet vs = eq.vars;
    Poly expected = pl(vs, "(n+k2+1)*(-n+k2)*(k1-3n+k2)*(k1-n+k2+1)");
    CHECK(equal_up_to_unit(ud.Q, expected));
    CHECK(ud.chains.empty());  // four singletons
    Poly R = numerator_factor(eq, ud.Q);
    CHECK(divides(pl(vs, "k2^2*(k2+1)^2"), R));
}

TEST_CASE("numerator factor: Gosper form keeps b(s-1)") {
    // ratio a(s) c(s+2) / (b(s) c(s)) with a=1, b=s+3, c=s
    auto eq = RatCoeffDE::from_coeffs(S1, "s", {-RatFn::one(S1), rf(S1, "(s+2)/((s+3)*s)")},
                                      RatFn::one(S1));
    UDShape ud = universal_denominator(eq);
    CHECK(ud.Q == pl(S1, "s*(s+1)"));  // the chain c(s) c(s+1)
    REQUIRE(ud.chains.size() == 1);
    CHECK(ud.chains[0].second == 1);
    Poly R = numerator_factor(eq, ud.Q);
    CHECK(R == pl(S1, "s+2"));  // b(s-1)
}

TEST_CASE("polynomial solutions") {
    // x(s+1) - x(s) = 1 -> particular s, basis {1}
    Poly one = pl(S1, "1");
    PolySolutionSpace ps = polynomial_solutions({-one, one}, one, 0);
    REQUIRE(ps.particular.has_value());
    CHECK(ps.basis.size() == 1);
    CHECK(ps.basis[0] == one);
    // the particular solution plus span{1} contains s
    RatFn s(pl(S1, "s"));
    RatFn diff = s - *ps.particular;
    CHECK(diff.is_polynomial());
    CHECK(diff.num().degree_wrt(0) <= 0);

    // x(s+1) + x(s) = 0 -> no nonzero polynomial solutions
    ps = polynomial_solutions({one, one}, Poly(S1), 0);
    CHECK(ps.basis.empty());

    // x(s+1) - x(s) = s needs degree 2
    ps = polynomial_solutions({-one, one}, pl(S1, "s"), 0);
    REQUIRE(ps.particular.has_value());
    RatFn expect = rf(S1, "(s^2-s)/2");
    RatFn d = *ps.particular - expect;
    CHECK(d.num().degree_wrt(0) <= 0);
}

TEST_CASE("rational solutions: four-term example exactly span{(2n-3)/(n^2-1)}") {
    auto eq = abramov_example();
    RationalSolutionSpace sol = rational_solutions(eq);
    REQUIRE(sol.particular.has_value());
    CHECK(sol.particular->is_zero());
    REQUIRE(sol.basis.size() == 1);
    RatFn expected = rf(N1, "(2n-3)/(n^2-1)");
    // equal up to a rational constant
    RatFn q = sol.basis[0] / expected;
    CHECK(q.is_constant());
    CHECK(apply_eq(eq, sol.basis[0]).is_zero());
    // the transformed polynomial problem has basis {2n-3} over Q = n^2-1
    CHECK(apply_eq(eq, expected).is_zero());
}

TEST_CASE("rational solutions: telescoping with rational coefficient") {
    // x(s+1) - ((s+1)/s) x(s) = 0 -> basis {s}
    auto eq = RatCoeffDE::from_coeffs(S1, "s", {rf(S1, "-(s+1)/s"), RatFn::one(S1)},
                                      RatFn::zero(S1));
    auto sol = rational_solutions(eq);
    REQUIRE(sol.basis.size() == 1);
    CHECK((sol.basis[0] / rf(S1, "s")).is_constant());
}

TEST_CASE("abramov baseline: four-term example gives n^3 - n, strictly larger") {
    auto eq = abramov_example();
    Poly u = abramov_denominator(eq);
    CHECK(u == pl(N1, "n^3-n"));
    UDShape ud = universal_denominator(eq);
    CHECK(divides(ud.Q, u));
    CHECK(u.degree_wrt(0) > ud.Q.degree_wrt(0));  // strict improvement
}

TEST_CASE("abramov baseline: trivial") {
    auto eq = RatCoeffDE::from_coeffs(S1, "s", {-RatFn::one(S1), RatFn::one(S1)},
                                      RatFn::one(S1));
    CHECK(abramov_denominator(eq) == pl(S1, "1"));
}

TEST_CASE("planted rational solutions are recovered; Q divides u") {
    Rng rng(2024);
    int done = 0;
    for (int it = 0; done < 25 && it < 200; ++it) {
        int m = static_cast<int>(rng.pick(1, 2));
        // planted solution
        Poly den = pl(S1, "1");
        int nf = static_cast<int>(rng.pick(0, 2));
        for (int j = 0; j < nf; ++j) den = den * (pl(S1, "s") + pc(S1, rng.pick(-4, 4)));
        Poly num = rng.nonzero_poly(S1, 2, 2, 5);
        RatFn x0(num, den);
        std::vector<RatFn> coeffs;
        for (int i = 0; i <= m; ++i) coeffs.emplace_back(rng.poly(S1, 1, 2, 4));
        if (coeffs.front().is_zero() || coeffs.back().is_zero()) continue;
        RatFn rhs = RatFn::zero(S1);
        for (int i = 0; i <= m; ++i) rhs += coeffs[i] * x0.shift(0, i);
        auto eq = RatCoeffDE::from_coeffs(S1, "s", coeffs, rhs);
        auto sol = rational_solutions(eq);
        REQUIRE(sol.particular.has_value());
        // denominator of x0 divides Q
        UDShape ud = universal_denominator(eq);
        CHECK(divides(x0.den(), ud.Q));
        CHECK(divides(ud.Q, abramov_denominator(eq)));
        // x0 - particular lies in the span of the basis over Q
        RatFn diff = x0 - *sol.particular;
        if (diff.is_zero()) {
            ++done;
            continue;
        }
        Poly common = diff.den();
        for (const auto& b : sol.basis) common = poly_lcm(common, b.den());
        std::vector<Poly> cols;
        for (const auto& b : sol.basis) {
            RatFn y = b * RatFn(common);
            cols.push_back(y.num() / y.den().constant_value());
        }
        RatFn t = diff * RatFn(common);
        Poly target = t.num() / t.den().constant_value();
        long maxdeg = target.degree_wrt(0);
        for (const auto& cpoly : cols) maxdeg = std::max(maxdeg, cpoly.degree_wrt(0));
        std::vector<std::vector<RatFn>> mat;
        std::vector<RatFn> vr;
        for (long e = maxdeg; e >= 0; --e) {
            std::vector<RatFn> row;
            for (const auto& cpoly : cols) row.emplace_back(cpoly.coeff_wrt(0, (int)e));
            mat.push_back(row);
            vr.emplace_back(target.coeff_wrt(0, (int)e));
        }
        auto lam = linsolve(mat, vr);
        REQUIRE(lam.particular.has_value());
        for (const auto& l : *lam.particular) CHECK(l.is_constant());
        ++done;
    }
    CHECK(done == 25);
}

TEST_CASE("gosper: k * k! has antidifference k!") {
    VarSet K{{"k"}};
    auto x = gosper(parse_ratfn("(k+1)^2/k", K));
    REQUIRE(x.has_value());
    CHECK(*x == parse_ratfn("1/k", K));
}

TEST_CASE("gosper: k! is not summable") {
    VarSet K{{"k"}};
    CHECK(!gosper(parse_ratfn("k+1", K)).has_value());
}

TEST_CASE("gosper: constant term") {
    VarSet K{{"k"}};
    auto x = gosper(RatFn::one(K));
    REQUIRE(x.has_value());
    // x(k+1) - x(k) = 1; any representative k + c is fine
    CHECK((x->shift(0, 1) - *x) == RatFn::one(K));
}

TEST_CASE("chain cap is enforced with a clear error") {
    auto eq = RatCoeffDE::from_coeffs(S1, "s", {rf(S1, "-(s-30)"), rf(S1, "s")},
                                      RatFn::zero(S1));
    DensolveOptions opt;
    opt.chain_cap = 10;
    CHECK_THROWS_WITH_AS(universal_denominator(eq, opt),
                         doctest::Contains("exceeds chain cap"), std::runtime_error);
    DensolveOptions wide;
    CHECK(universal_denominator(eq, wide).chains.size() == 1);
}
