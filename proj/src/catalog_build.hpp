#pragma once

// Helpers shared by the catalog_*.cpp translation units.

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "horn/catalog.hpp"

namespace horn::detail {

using Shift = std::pair<Slot, double>;

inline ParamVector sh(const ParamVector& p, std::initializer_list<Shift> shifts) {
  ParamVector q = p;
  for (const auto& [slot, delta] : shifts) q[slot] += delta;
  return q;
}

inline double sign_pow(int s) { return (s % 2 == 0) ? 1.0 : -1.0; }

inline IdentityRecord make_record(std::string id, Family family, HornId fn, std::string anchor,
                                  std::string free_name, Side lhs, Side rhs) {
  IdentityRecord r;
  r.id = std::move(id);
  r.family = family;
  r.function = fn;
  r.anchor = std::move(anchor);
  r.free_name = std::move(free_name);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

void add_recursions(std::vector<IdentityRecord>& out);
void add_differential(std::vector<IdentityRecord>& out);
void add_integral(std::vector<IdentityRecord>& out);
void add_summation(std::vector<IdentityRecord>& out);

}  // namespace horn::detail
