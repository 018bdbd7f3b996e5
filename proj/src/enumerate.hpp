#pragma once

#include "post_groupoid.hpp"

namespace pgx {

struct EnumerationResult {
  std::vector<PostGroupoid> structures;  // sorted by their tri tables
  long long nodes = 0;
  bool complete = true;  // false when the node budget ran out
};

// Finds every tri table making (b, phi, tri) a valid post-groupoid.
//
// The search assigns one fiber isomorphism per carrier element instead of
// raw table rows: bijectivity plus the distributivity axiom force each left
// multiplication to be a group isomorphism, so nothing is lost and the
// space shrinks from |G|^|G| rows to |Iso| choices per element. Unit
// elements are pinned to the identity map, candidates are pre-filtered by
// the anchor axiom, and partial assignments are pruned by the composition
// axiom.
EnumerationResult enumerate_post_structures(const GroupBundle& b,
                                            const std::vector<Idx>& phi,
                                            long long budget = 10000000);

}  // namespace pgx
