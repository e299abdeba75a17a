#pragma once

#include <limits>
#include <string>

namespace contana {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// An interval of the real line. Endpoints may be infinite, in which case
// they are never closed.
class Interval {
public:
  Interval(double lo, double hi, bool lo_closed, bool hi_closed);

  static Interval closed(double lo, double hi) { return {lo, hi, true, true}; }
  static Interval open(double lo, double hi) { return {lo, hi, false, false}; }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  bool lo_closed() const noexcept { return lo_closed_; }
  bool hi_closed() const noexcept { return hi_closed_; }

  bool is_finite() const noexcept;
  bool is_closed() const noexcept { return lo_closed_ && hi_closed_; }
  double length() const noexcept { return hi_ - lo_; }

  bool contains(double x) const noexcept;
  // True when [other] is inside this interval, endpoint kinds honored.
  bool contains(const Interval& other) const noexcept;

  // `[0,1]`, `(0,1]`, `[0,inf)`, `(-inf,inf)`.
  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

private:
  double lo_;
  double hi_;
  bool lo_closed_;
  bool hi_closed_;
};

}  // namespace contana
