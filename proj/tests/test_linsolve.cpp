#include "doctest.h"
#include "test_util.hpp"

#include "telesum/linsolve.hpp"

using namespace telesum;
using namespace telesum::testutil;

namespace {
const VarSet N1{{"n"}};

RatFn rf(const Poly& p) { return RatFn(p); }
}  // namespace

TEST_CASE("identity system") {
    RatFn one = RatFn::one(N1), zero = RatFn::zero(N1);
    std::vector<std::vector<RatFn>> a{{one, zero}, {zero, one}};
    auto res = linsolve(a, {one, zero});
    REQUIRE(res.particular.has_value());
    CHECK((*res.particular)[0] == one);
    CHECK((*res.particular)[1] == zero);
    CHECK(res.nullspace.empty());
}

TEST_CASE("1x2 nullspace") {
    Poly n = pvar(N1, "n");
    std::vector<std::vector<RatFn>> a{{rf(n), rf(n + pc(N1, 1))}};
    auto res = linsolve(a, {RatFn::zero(N1)});
    REQUIRE(res.particular.has_value());
    REQUIRE(res.nullspace.size() == 1);
    CHECK(res.nullspace[0][0] == rf(n + pc(N1, 1)));
    CHECK(res.nullspace[0][1] == rf(-n));
}

TEST_CASE("inconsistent system") {
    Poly n = pvar(N1, "n");
    std::vector<std::vector<RatFn>> a{{rf(n)}, {rf(n)}};
    auto res = linsolve(a, {RatFn::one(N1), RatFn::zero(N1)});
    CHECK(!res.particular.has_value());
    CHECK(res.nullspace.empty());
}

TEST_CASE("random systems verify by substitution") {
    Rng rng(17);
    VarSet vs{{"n", "k"}};
    for (int it = 0; it < 15; ++it) {
        std::size_t rows = static_cast<std::size_t>(rng.pick(1, 4));
        std::size_t cols = static_cast<std::size_t>(rng.pick(1, 4));
        std::vector<std::vector<RatFn>> a(rows);
        for (auto& row : a)
            for (std::size_t j = 0; j < cols; ++j)
                row.emplace_back(rng.poly(vs, 1, 2, 4));
        // Build a consistent rhs from a planted solution.
        std::vector<RatFn> planted;
        for (std::size_t j = 0; j < cols; ++j)
            planted.emplace_back(rng.poly(vs, 1, 2, 3));
        std::vector<RatFn> rhs(rows, RatFn::zero(vs));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) rhs[i] += a[i][j] * planted[j];
        auto res = linsolve(a, rhs);
        REQUIRE(res.particular.has_value());
        for (std::size_t i = 0; i < rows; ++i) {
            RatFn acc = RatFn::zero(vs);
            for (std::size_t j = 0; j < cols; ++j) acc += a[i][j] * (*res.particular)[j];
            CHECK(acc == rhs[i]);
        }
        for (const auto& v : res.nullspace) {
            for (std::size_t i = 0; i < rows; ++i) {
                RatFn acc = RatFn::zero(vs);
                for (std::size_t j = 0; j < cols; ++j) acc += a[i][j] * v[j];
                CHECK(acc.is_zero());
            }
        }
    }
}
