#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "kha/ratfunc.hpp"

namespace kha {

// Declared symbols and slot bounds for parsing. q and p are always
// reserved; everything else must be declared. When `dims` is non-empty,
// variables z[i,j] must satisfy j <= dims[i].
struct ParseContext {
    std::set<std::string> params;
    std::map<int, int> dims;
    bool check_dims = false;

    bool knows_param(const std::string& name) const {
        return name == "q" || name == "p" || params.count(name) > 0;
    }
};

// Grammar: integers, rationals a/b, parameter symbols, variables z[i,j],
// operators + - * / ^(integer), parentheses. Division is only legal by
// rational constants, monomials, and products of binomials 1 - monomial.
RatFunc parse_expr(std::string_view text, const ParseContext& ctx);

}  // namespace kha
