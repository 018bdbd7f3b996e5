#pragma once

#include "group.hpp"
#include "types.hpp"

namespace pgx {

// Bundle of groups over a finite base: the fiber over m is pi^{-1}(m), and
// the partial product is defined exactly on pairs within one fiber.
struct GroupBundle {
  Idx base = 0;
  Idx size = 0;            // number of total-space elements
  std::vector<Idx> pi;     // size -> base
  Table2 mul;              // size x size, kUndef across fibers
  std::vector<Idx> unit;   // base -> size
  std::vector<Idx> inv;    // size -> size

  Idx mul_req(Idx x, Idx y) const {
    Idx p = mul.at(x, y);
    if (p == kUndef)
      fail(ErrorKind::Internal, "bundle: product undefined within a fiber");
    return p;
  }

  // Elements of each fiber in increasing index order.
  std::vector<std::vector<Idx>> fibers() const;

  // The fiber over m reindexed as a standalone group, plus the map from
  // local indices back to total-space indices.
  FiniteGroup fiber_group(Idx m, std::vector<Idx>* local_to_global = nullptr) const;

  bool operator==(const GroupBundle&) const = default;
};

void require_bundle_shape(const GroupBundle& b);

// Checks that every fiber is a group with fiber-preserving unit and inverse.
// Fibers are not required to be pairwise isomorphic; the report records the
// outcome of an exhaustive isomorphism search in stats["fibers_isomorphic"].
Report validate_group_bundle(const GroupBundle& b, const CheckOptions& opts = {});

}  // namespace pgx
