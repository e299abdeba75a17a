#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "contana/interval.hpp"

namespace contana {

inline constexpr int kDefaultCantorDepth = 64;

namespace kind {

struct Sqrt {};
// x^2 sin(1/x), extended by 0 at the origin.
struct XSquaredSinInv {};
struct Cantor {
  int depth = kDefaultCantorDepth;
};
struct Sin {};
struct Reciprocal {};
// Coefficients in ascending degree.
struct Polynomial {
  std::vector<double> coefficients;
};
struct Affine {
  double slope = 0.0;
  double intercept = 0.0;
};
struct Knot {
  double x;
  double y;
  friend bool operator==(const Knot&, const Knot&) = default;
};
struct PiecewiseLinear {
  std::vector<Knot> knots;
};
// Tabulated data, linearly interpolated between knots.
struct SampledTable {
  std::vector<Knot> knots;
};

}  // namespace kind

using FunctionKind =
    std::variant<kind::Sqrt, kind::XSquaredSinInv, kind::Cantor, kind::Sin, kind::Reciprocal,
                 kind::Polynomial, kind::Affine, kind::PiecewiseLinear, kind::SampledTable>;

// A catalog function bound to its domain. Construction validates the
// kind-specific domain restrictions and knot ordering.
class FunctionSpec {
public:
  FunctionSpec(FunctionKind kind, Interval domain);

  const FunctionKind& kind() const noexcept { return kind_; }
  const Interval& domain() const noexcept { return domain_; }

  // Same function, different domain (revalidated).
  FunctionSpec with_domain(const Interval& domain) const { return {kind_, domain}; }

  // Short tag such as "sqrt" or "poly"; not a full round-trippable spec.
  std::string kind_name() const;

private:
  FunctionKind kind_;
  Interval domain_;
};

// Evaluates f at x. Throws DomainError when x is outside f's domain.
double eval(const FunctionSpec& f, double x);

// Evaluates without the domain membership test. Callers must guarantee x is
// inside the domain closure and that the kind is defined there.
double eval_unchecked(const FunctionSpec& f, double x);

// Cantor function from the exact ternary expansion of the binary64 value x.
// Digits 0/2 map to binary 0/1; the first ternary 1 emits a binary 1 and
// stops. At most `depth` digits are read, so the result is within 2^-depth
// below the exact value.
double eval_cantor(double x, int depth = kDefaultCantorDepth);

}  // namespace contana
