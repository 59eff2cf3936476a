#include "doctest.h"
#include "test_util.hpp"

#include "telesum/hyperterm.hpp"
#include "telesum/parser.hpp"

using namespace telesum;
using namespace telesum::testutil;

namespace {
const VarSet NK{{"n", "k"}};
const VarSet V3{{"n", "k1", "k2"}};

const char* EX31_F =
    "(-1)^(n+k1+k2)*binom(n,k1)*binom(n,k2)*binom(n+k1,k1)*binom(n+k2,k2)*binom(2n-k1-k2,n)";
}  // namespace

TEST_CASE("parse binom expands to factorials") {
    HyperTerm f = parse_term("binom(n,k)", NK);
    REQUIRE(f.factorials().size() == 3);
    CHECK(f.polypart() == Poly(NK, Rat(1)));
    // factorials: n!^{+1}, k!^{-1}, (n-k)!^{-1}
    int plus = 0, minus = 0;
    for (const auto& fac : f.factorials()) (fac.exponent > 0 ? plus : minus)++;
    CHECK(plus == 1);
    CHECK(minus == 2);
}

TEST_CASE("parse the double-sum summand") {
    HyperTerm f = parse_term(EX31_F, V3);
    CHECK(f.powers().size() == 1);
    CHECK(f.powers()[0].base == Rat(-1));
    // 5 binomials, with n! appearing multiple times and merged
    CHECK(!f.factorials().empty());
    // f at n=1, k1=0, k2=0 is -binom(2,1) = -2
    CHECK(eval_term(f, {1, 0, 0}) == Rat(-2));
}

TEST_CASE("parse powers of binomials") {
    HyperTerm g = parse_term("binom(n,k)^4", NK);
    HyperTerm b = parse_term("binom(n,k)", NK);
    CHECK(g == b * b * b * b);
    CHECK(eval_term(g, {4, 2}) == Rat(1296));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_term("binom(n,k", NK), ParseError);
    CHECK_THROWS_AS(parse_term("binom(n*n,k)", NK), ParseError);   // nonlinear form
    CHECK_THROWS_AS(parse_term("binom(n/2,k)", NK), ParseError);   // non-integer coefficient
    CHECK_THROWS_AS(parse_term("(n*n)!", NK), ParseError);         // nonlinear factorial
    CHECK_THROWS_AS(parse_term("zz+1", NK), ParseError);           // unknown variable
    CHECK_THROWS_AS(parse_term("n^(k)", NK), ParseError);          // non-constant power base
}

TEST_CASE("shift quotients of binom(n,k)") {
    HyperTerm f = parse_term("binom(n,k)", NK);
    Poly n = pvar(NK, "n"), k = pvar(NK, "k");
    CHECK(shift_quotient(f, "k") == RatFn(n - k, k + pc(NK, 1)));
    CHECK(shift_quotient(f, "n") == RatFn(n + pc(NK, 1), n + pc(NK, 1) - k));
    HyperTerm s = parse_term("(-1)^(n+k)", NK);
    CHECK(shift_quotient(s, "n") == RatFn(Poly(NK, Rat(-1))));
}

TEST_CASE("shift quotient matches evaluation") {
    for (const char* txt : {"binom(n,k)", "binom(2n-k,n)*binom(n,k)", "(n+1)*k!*(n+k)!^-1"}) {
        HyperTerm f = parse_term(txt, NK);
        for (long n = 3; n <= 6; ++n)
            for (long k = 0; k + 1 < n; ++k) {
                Rat at = eval_term(f, {n, k});
                if (at == 0) continue;
                for (int v = 0; v < 2; ++v) {
                    std::vector<long> up{n + (v == 0), k + (v == 1)};
                    RatFn q = shift_quotient(f, v);
                    std::vector<Rat> pt{Rat(n), Rat(k)};
                    CHECK(eval_term(f, up) / at == q.eval(pt));
                }
            }
    }
}

TEST_CASE("shift quotient is multiplicative") {
    HyperTerm a = parse_term("binom(n,k)", NK);
    HyperTerm b = parse_term("(n+k)!*(2)^(k)", NK);
    for (int v = 0; v < 2; ++v)
        CHECK(shift_quotient(a * b, v) == shift_quotient(a, v) * shift_quotient(b, v));
}

TEST_CASE("evaluation convention") {
    HyperTerm f = parse_term("binom(n,k)", NK);
    CHECK(eval_term(f, {4, 2}) == Rat(6));
    CHECK(eval_term(f, {3, 5}) == Rat(0));  // reciprocal factorial at negative integer
    HyperTerm g = parse_term("k!", NK);
    CHECK_THROWS_AS(eval_term(g, {0, -1}), std::domain_error);
}

TEST_CASE("finite support boxes") {
    HyperTerm f = parse_term("binom(n,k)", NK);
    auto box = finite_support(f, {1}, 5);
    REQUIRE(box.has_value());
    CHECK(box->lo == std::vector<long>{0});
    CHECK(box->hi == std::vector<long>{5});

    HyperTerm g = parse_term(EX31_F, V3);
    auto box2 = finite_support(g, {1, 2}, 2);
    REQUIRE(box2.has_value());
    CHECK(box2->lo == std::vector<long>{0, 0});
    CHECK(box2->hi == std::vector<long>{2, 2});
    // Every point of the shell around the box evaluates to zero.
    for (long k1 = -2; k1 <= 4; ++k1)
        for (long k2 = -2; k2 <= 4; ++k2) {
            if (k1 >= 0 && k1 <= 2 && k2 >= 0 && k2 <= 2) continue;
            CHECK(eval_term_extended(g, {2, k1, k2}) == 0);
        }

    HyperTerm h = parse_term("k!", NK);
    CHECK(!finite_support(h, {1}, 5).has_value());
}

TEST_CASE("canonical form round-trip") {
    for (const char* txt :
         {"binom(n,k)", "binom(n,k)^4", "(n+1)*k!*(n+k)!^-1", "(-1)^(n+k)*binom(2n-k,n)",
          "(1/2)^(k)*(3n^2-1/3*k+1)*(n-k)!^-2"}) {
        HyperTerm f = parse_term(txt, NK);
        HyperTerm g = parse_term(f.to_string(), NK);
        CHECK(f == g);
    }
    HyperTerm f = parse_term(EX31_F, V3);
    CHECK(parse_term(f.to_string(), V3) == f);
}

TEST_CASE("ratfn parser round trip") {
    VarSet vs{{"n", "k"}};
    for (const char* txt : {"(2n-3)/(n^2-1)", "1/2*n", "(n+k)^3/(n-k)", "-n", "0", "5/7"}) {
        RatFn r = parse_ratfn(txt, vs);
        CHECK(parse_ratfn(r.to_string(), vs) == r);
    }
    CHECK(parse_ratfn("(n^2-1)/(n+1)", vs) == RatFn(parse_poly("n-1", vs)));
}
