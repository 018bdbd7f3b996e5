#pragma once

#include "types.hpp"

namespace pgx {

// Finite group as explicit Cayley data on indices 0..n-1.
struct FiniteGroup {
  Idx n = 0;
  Table2 mul;            // n x n, total
  Idx id = 0;
  std::vector<Idx> inv;  // length n

  bool operator==(const FiniteGroup&) const = default;
};

// Checks associativity, the two-sided unit and two-sided inverses.
// Shape problems (wrong table sizes, out-of-range entries) are malformed
// input, not axiom violations.
Report validate_group(const FiniteGroup& g, const CheckOptions& opts = {});

// Multiplicative order of an element.
Idx element_order(const FiniteGroup& g, Idx a);

// All isomorphisms a -> b as image vectors, in lexicographic order.
// With first_only set, stops after one.
std::vector<std::vector<Idx>> group_isomorphisms(const FiniteGroup& a,
                                                 const FiniteGroup& b,
                                                 bool first_only = false);

}  // namespace pgx
