#include "contana/interval.hpp"

#include <cmath>
#include <sstream>

#include "contana/errors.hpp"
#include "contana/format.hpp"

namespace contana {

Interval::Interval(double lo, double hi, bool lo_closed, bool hi_closed)
    : lo_(lo), hi_(hi), lo_closed_(lo_closed), hi_closed_(hi_closed) {
  if (std::isnan(lo) || std::isnan(hi)) throw DomainError("interval endpoint is NaN");
  if (!(lo < hi)) throw DomainError("interval requires lo < hi");
  if ((std::isinf(lo) && lo_closed) || (std::isinf(hi) && hi_closed))
    throw DomainError("an infinite endpoint cannot be closed");
  if (lo == kInf || hi == -kInf) throw DomainError("interval endpoints out of order");
}

bool Interval::is_finite() const noexcept { return std::isfinite(lo_) && std::isfinite(hi_); }

bool Interval::contains(double x) const noexcept {
  if (std::isnan(x)) return false;
  const bool above = lo_closed_ ? x >= lo_ : x > lo_;
  const bool below = hi_closed_ ? x <= hi_ : x < hi_;
  return above && below;
}

bool Interval::contains(const Interval& o) const noexcept {
  const bool lo_ok = o.lo_ > lo_ || (o.lo_ == lo_ && (lo_closed_ || !o.lo_closed_));
  const bool hi_ok = o.hi_ < hi_ || (o.hi_ == hi_ && (hi_closed_ || !o.hi_closed_));
  return lo_ok && hi_ok;
}

std::string Interval::to_string() const {
  auto endpoint = [](double v) -> std::string {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    return format_double(v);
  };
  std::string s;
  s += lo_closed_ ? '[' : '(';
  s += endpoint(lo_);
  s += ',';
  s += endpoint(hi_);
  s += hi_closed_ ? ']' : ')';
  return s;
}

}  // namespace contana
