#pragma once

#include <iosfwd>
#include <string>

#include "flowround/rational.hpp"

namespace flowround {

// Cost with a minus-infinity sentinel coordinate. A value is
// infinite_units * (-inf) + finite, so ordering is lexicographic on
// (infinite_units, finite): more negative infinite_units means smaller cost.
// Ordinary edges keep infinite_units = 0; only the flow->circulation
// reduction edge carries -1 per unit. The units coordinate is a Rational
// rather than an integer because fractional flow across the reduction edge
// makes cost totals fractional in the sentinel coordinate too.
struct CostValue {
  Rational infinite_units;
  Rational finite;

  CostValue() = default;
  CostValue(Rational inf, Rational fin) : infinite_units(std::move(inf)), finite(std::move(fin)) {}
  static CostValue of(const Rational& finite) { return CostValue(Rational(0), finite); }

  bool is_zero() const { return infinite_units.is_zero() && finite.is_zero(); }

  CostValue operator-() const { return CostValue(-infinite_units, -finite); }
  CostValue& operator+=(const CostValue& o) {
    infinite_units += o.infinite_units;
    finite += o.finite;
    return *this;
  }
  CostValue& operator-=(const CostValue& o) {
    infinite_units -= o.infinite_units;
    finite -= o.finite;
    return *this;
  }
  friend CostValue operator+(CostValue a, const CostValue& b) { return a += b; }
  friend CostValue operator-(CostValue a, const CostValue& b) { return a -= b; }

  // Per-unit cost scaled by a flow amount.
  friend CostValue operator*(const CostValue& c, const Rational& flow) {
    return CostValue(c.infinite_units * flow, c.finite * flow);
  }

  friend bool operator==(const CostValue& a, const CostValue& b) {
    return a.infinite_units == b.infinite_units && a.finite == b.finite;
  }
  friend bool operator!=(const CostValue& a, const CostValue& b) { return !(a == b); }
  friend bool operator<(const CostValue& a, const CostValue& b) {
    if (a.infinite_units != b.infinite_units) return a.infinite_units < b.infinite_units;
    return a.finite < b.finite;
  }
  friend bool operator<=(const CostValue& a, const CostValue& b) { return a < b || a == b; }
  friend bool operator>(const CostValue& a, const CostValue& b) { return b < a; }
  friend bool operator>=(const CostValue& a, const CostValue& b) { return b <= a; }

  std::string str() const;
};

std::ostream& operator<<(std::ostream& os, const CostValue& c);

}  // namespace flowround
