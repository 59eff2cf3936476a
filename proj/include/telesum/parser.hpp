#pragma once

#include <stdexcept>
#include <string>

#include "telesum/hyperterm.hpp"
#include "telesum/ratfn.hpp"

namespace telesum {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

// Proper hypergeometric term per the input grammar: products/quotients of
// binom(a,b), (linform)!, rational constants, polynomial atoms and
// constant^(linform) powers. Round-trips with HyperTerm::to_string().
HyperTerm parse_term(const std::string& text, const VarSet& vars);

// Rational-function expression (no factorials); +,-,*,/,^int over the
// declared variables. Round-trips with RatFn::to_string() / Poly::to_string().
RatFn parse_ratfn(const std::string& text, const VarSet& vars);
Poly parse_poly(const std::string& text, const VarSet& vars);
LinearForm parse_linform(const std::string& text, const VarSet& vars);

// Validates degree <= 1 with integer coefficients and constant.
LinearForm poly_to_linform(const Poly& p);

}  // namespace telesum
