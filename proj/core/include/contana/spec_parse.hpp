#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "contana/collection.hpp"
#include "contana/function.hpp"
#include "contana/interval.hpp"

namespace contana {

// Real literal; also accepts `inf`, `-inf`, `pi` and `<number>pi`.
double parse_real(std::string_view text);

// `[0,1]`, `(0,1]`, `[0,inf)`, `(-inf,inf)`.
Interval parse_interval(std::string_view text);

// Function mini-language bound to `domain`:
//   sqrt | x2sininv | cantor[:depth] | sin | recip
//   affine:<slope>,<intercept> | poly:<c0>,<c1>,...
//   pwl:<x0>:<y0>,<x1>:<y1>,... | table@<path>  (CSV `x,y`, header optional)
FunctionSpec parse_function(std::string_view spec, const Interval& domain);

// Knots from CSV text with two columns; a non-numeric first row is a header.
std::vector<kind::Knot> parse_table_csv(std::string_view csv);

// `x1:y1,x2:y2,...`
IntervalCollection parse_pairs(std::string_view text);

// `d1,d2,...`
std::vector<double> parse_reals(std::string_view text);

}  // namespace contana
