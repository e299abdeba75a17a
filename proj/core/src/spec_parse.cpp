#include "contana/spec_parse.hpp"

#include <charconv>
#include <fstream>
#include <numbers>
#include <sstream>

#include "contana/errors.hpp"

namespace contana {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool try_parse_number(std::string_view t, double& out) {
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  const char* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(t.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

double parse_real(std::string_view text) {
  const std::string_view t = trim(text);
  if (t == "inf" || t == "+inf") return kInf;
  if (t == "-inf") return -kInf;
  if (t.size() >= 2 && t.substr(t.size() - 2) == "pi") {
    const std::string_view factor = t.substr(0, t.size() - 2);
    if (factor.empty()) return std::numbers::pi;
    if (factor == "-") return -std::numbers::pi;
    double f = 0.0;
    if (try_parse_number(factor, f)) return f * std::numbers::pi;
    throw ParseError("bad real literal '" + std::string(t) + "'");
  }
  double v = 0.0;
  if (t.empty() || !try_parse_number(t, v))
    throw ParseError("bad real literal '" + std::string(t) + "'");
  return v;
}

Interval parse_interval(std::string_view text) {
  const std::string_view t = trim(text);
  if (t.size() < 5) throw ParseError("bad interval '" + std::string(t) + "'");
  const char open = t.front();
  const char close = t.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')'))
    throw ParseError("interval must start with [ or ( and end with ] or )");
  const auto parts = split(t.substr(1, t.size() - 2), ',');
  if (parts.size() != 2) throw ParseError("interval needs exactly two endpoints");
  try {
    return Interval(parse_real(parts[0]), parse_real(parts[1]), open == '[', close == ']');
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid interval: ") + e.what());
  }
}

std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> out;
  for (auto part : split(trim(text), ',')) out.push_back(parse_real(part));
  return out;
}

std::vector<kind::Knot> parse_table_csv(std::string_view csv) {
  std::vector<kind::Knot> knots;
  std::size_t line_no = 0;
  for (auto line : split(csv, '\n')) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    const auto cols = split(line, ',');
    if (cols.size() != 2)
      throw ParseError("table line " + std::to_string(line_no) + " needs two columns");
    double x = 0.0;
    double y = 0.0;
    const bool numeric = try_parse_number(trim(cols[0]), x) && try_parse_number(trim(cols[1]), y);
    if (!numeric) {
      if (knots.empty() && line_no == 1) continue;  // header
      throw ParseError("table line " + std::to_string(line_no) + " is not numeric");
    }
    knots.push_back({x, y});
  }
  return knots;
}

IntervalCollection parse_pairs(std::string_view text) {
  std::vector<Pair> pairs;
  for (auto part : split(trim(text), ',')) {
    const auto xy = split(part, ':');
    if (xy.size() != 2) throw ParseError("pair must look like x:y");
    pairs.push_back({parse_real(xy[0]), parse_real(xy[1])});
  }
  try {
    return IntervalCollection(std::move(pairs));
  } catch (const GeometryError& e) {
    throw ParseError(std::string("invalid collection: ") + e.what());
  }
}

FunctionSpec parse_function(std::string_view spec, const Interval& domain) {
  const std::string_view s = trim(spec);
  std::string_view head = s;
  std::string_view args;
  bool has_args = false;
  if (const auto colon = s.find(':'); colon != std::string_view::npos) {
    head = s.substr(0, colon);
    args = s.substr(colon + 1);
    has_args = true;
  }
  auto no_args = [&](const char* name) {
    if (has_args) throw ParseError(std::string(name) + " takes no parameters");
  };

  if (s.rfind("table@", 0) == 0) {
    const std::string path(s.substr(6));
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read table '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return FunctionSpec(kind::SampledTable{parse_table_csv(buf.str())}, domain);
  }
  if (head == "sqrt") { no_args("sqrt"); return FunctionSpec(kind::Sqrt{}, domain); }
  if (head == "x2sininv") { no_args("x2sininv"); return FunctionSpec(kind::XSquaredSinInv{}, domain); }
  if (head == "sin") { no_args("sin"); return FunctionSpec(kind::Sin{}, domain); }
  if (head == "recip") { no_args("recip"); return FunctionSpec(kind::Reciprocal{}, domain); }
  if (head == "cantor") {
    kind::Cantor c;
    if (has_args) {
      const double depth = parse_real(args);
      if (depth < 1 || depth != static_cast<int>(depth)) throw ParseError("cantor depth must be a positive integer");
      c.depth = static_cast<int>(depth);
    }
    return FunctionSpec(c, domain);
  }
  if (head == "affine") {
    const auto v = parse_reals(args);
    if (v.size() != 2) throw ParseError("affine needs <slope>,<intercept>");
    return FunctionSpec(kind::Affine{v[0], v[1]}, domain);
  }
  if (head == "poly") {
    if (!has_args) throw ParseError("poly needs coefficients");
    return FunctionSpec(kind::Polynomial{parse_reals(args)}, domain);
  }
  if (head == "pwl") {
    kind::PiecewiseLinear p;
    for (auto part : split(args, ',')) {
      const auto xy = split(part, ':');
      if (xy.size() != 2) throw ParseError("pwl knot must look like x:y");
      p.knots.push_back({parse_real(xy[0]), parse_real(xy[1])});
    }
    return FunctionSpec(std::move(p), domain);
  }
  throw ParseError("unknown function '" + std::string(s) + "'");
}

}  // namespace contana
