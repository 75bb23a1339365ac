#include "flowround/cost_value.hpp"

#include <ostream>

namespace flowround {

std::string CostValue::str() const {
  if (infinite_units.is_zero()) return finite.str();
  std::string s = infinite_units.str() + "*INF";
  if (!finite.is_zero()) s += (finite.sign() > 0 ? "+" : "") + finite.str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const CostValue& c) { return os << c.str(); }

}  // namespace flowround
