#include "contana/function.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "contana/errors.hpp"

namespace contana {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void validate_knots(const std::vector<kind::Knot>& knots, const Interval& domain,
                    const char* what) {
  if (knots.size() < 2) throw KindError(std::string(what) + " needs at least two knots");
  for (const auto& k : knots)
    if (!std::isfinite(k.x) || !std::isfinite(k.y))
      throw KindError(std::string(what) + " knots must be finite");
  for (std::size_t i = 1; i < knots.size(); ++i)
    if (!(knots[i - 1].x < knots[i].x))
      throw KindError(std::string(what) + " knots must be strictly increasing in x");
  if (!Interval::closed(knots.front().x, knots.back().x).contains(domain))
    throw DomainError(std::string(what) + " domain must lie inside the knot range " +
                      Interval::closed(knots.front().x, knots.back().x).to_string());
}

double interpolate(const std::vector<kind::Knot>& knots, double x) {
  auto it = std::lower_bound(knots.begin(), knots.end(), x,
                             [](const kind::Knot& k, double v) { return k.x < v; });
  if (it != knots.end() && it->x == x) return it->y;
  if (it == knots.begin()) return knots.front().y;
  if (it == knots.end()) return knots.back().y;
  const auto& right = *it;
  const auto& left = *(it - 1);
  return left.y + (right.y - left.y) * (x - left.x) / (right.x - left.x);
}

// Fixed-point fraction with enough bits to hold any binary64 in [0, 1)
// exactly (the smallest subnormal needs 1074 fractional bits).
__extension__ using u128 = unsigned __int128;

constexpr std::size_t kFractionWords = 17;
using Fraction = std::array<std::uint64_t, kFractionWords>;  // most significant first

Fraction to_fraction(double x) {
  Fraction frac{};
  if (x == 0.0) return frac;
  int exponent = 0;
  const double mantissa = std::frexp(x, &exponent);  // x = mantissa * 2^exponent
  auto m = static_cast<std::uint64_t>(std::ldexp(mantissa, 53));
  int k = 53 - exponent;                              // x = m * 2^-k
  while ((m & 1u) == 0 && k > 0) {
    m >>= 1;
    --k;
  }
  const int shift = static_cast<int>(64 * kFractionWords) - k;
  const auto word = static_cast<std::size_t>(shift / 64);
  const int offset = shift % 64;
  frac[kFractionWords - 1 - word] = m << offset;
  if (offset != 0 && word + 1 < kFractionWords)
    frac[kFractionWords - 2 - word] = m >> (64 - offset);
  return frac;
}

// frac <- frac * 3 mod 1; returns the integer part.
int next_ternary_digit(Fraction& frac) {
  u128 carry = 0;
  for (std::size_t i = kFractionWords; i-- > 0;) {
    const u128 t = static_cast<u128>(frac[i]) * 3u + carry;
    frac[i] = static_cast<std::uint64_t>(t);
    carry = t >> 64;
  }
  return static_cast<int>(carry);
}

bool is_zero(const Fraction& frac) {
  return std::all_of(frac.begin(), frac.end(), [](std::uint64_t w) { return w == 0; });
}

}  // namespace

FunctionSpec::FunctionSpec(FunctionKind kind, Interval domain)
    : kind_(std::move(kind)), domain_(domain) {
  std::visit(
      overloaded{
          [&](const kind::Sqrt&) {
            if (domain_.lo() < 0.0) throw DomainError("sqrt requires a domain inside [0,inf)");
          },
          [&](const kind::XSquaredSinInv&) {},
          [&](const kind::Cantor& c) {
            if (c.depth <= 0) throw KindError("cantor depth must be positive");
            if (!Interval::closed(0.0, 1.0).contains(domain_))
              throw DomainError("cantor requires a domain inside [0,1]");
          },
          [&](const kind::Sin&) {},
          [&](const kind::Reciprocal&) {
            if (domain_.contains(0.0) || (domain_.lo() < 0.0 && domain_.hi() > 0.0))
              throw DomainError("reciprocal domain must exclude 0");
          },
          [&](const kind::Polynomial& p) {
            if (p.coefficients.empty()) throw KindError("polynomial needs a coefficient");
            for (double c : p.coefficients)
              if (!std::isfinite(c)) throw KindError("polynomial coefficients must be finite");
          },
          [&](const kind::Affine& a) {
            if (!std::isfinite(a.slope) || !std::isfinite(a.intercept))
              throw KindError("affine parameters must be finite");
          },
          [&](const kind::PiecewiseLinear& p) { validate_knots(p.knots, domain_, "pwl"); },
          [&](const kind::SampledTable& t) { validate_knots(t.knots, domain_, "table"); },
      },
      kind_);
}

std::string FunctionSpec::kind_name() const {
  return std::visit(overloaded{
                        [](const kind::Sqrt&) { return std::string("sqrt"); },
                        [](const kind::XSquaredSinInv&) { return std::string("x2sininv"); },
                        [](const kind::Cantor&) { return std::string("cantor"); },
                        [](const kind::Sin&) { return std::string("sin"); },
                        [](const kind::Reciprocal&) { return std::string("recip"); },
                        [](const kind::Polynomial&) { return std::string("poly"); },
                        [](const kind::Affine&) { return std::string("affine"); },
                        [](const kind::PiecewiseLinear&) { return std::string("pwl"); },
                        [](const kind::SampledTable&) { return std::string("table"); },
                    },
                    kind_);
}

double eval_unchecked(const FunctionSpec& f, double x) {
  return std::visit(
      overloaded{
          [x](const kind::Sqrt&) { return std::sqrt(x); },
          [x](const kind::XSquaredSinInv&) { return x == 0.0 ? 0.0 : x * x * std::sin(1.0 / x); },
          [x](const kind::Cantor& c) { return eval_cantor(x, c.depth); },
          [x](const kind::Sin&) { return std::sin(x); },
          [x](const kind::Reciprocal&) { return 1.0 / x; },
          [x](const kind::Polynomial& p) {
            double acc = 0.0;
            for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it)
              acc = acc * x + *it;
            return acc;
          },
          [x](const kind::Affine& a) { return a.slope * x + a.intercept; },
          [x](const kind::PiecewiseLinear& p) { return interpolate(p.knots, x); },
          [x](const kind::SampledTable& t) { return interpolate(t.knots, x); },
      },
      f.kind());
}

double eval(const FunctionSpec& f, double x) {
  if (!f.domain().contains(x))
    throw DomainError("x = " + std::to_string(x) + " outside domain " + f.domain().to_string());
  return eval_unchecked(f, x);
}

double eval_cantor(double x, int depth) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("cantor argument outside [0,1]");
  if (depth <= 0) throw DomainError("cantor depth must be positive");
  if (x == 1.0) return 1.0;

  // Binary digits beyond 120 are far below binary64 resolution.
  const int digits = std::min(depth, 120);
  Fraction frac = to_fraction(x);
  u128 bits = 0;
  for (int i = 1; i <= digits && !is_zero(frac); ++i) {
    const int d = next_ternary_digit(frac);
    if (d == 0) continue;
    bits |= static_cast<u128>(1) << (digits - i);
    if (d == 1) break;
  }
  return std::ldexp(static_cast<double>(bits), -digits);
}

}  // namespace contana
