#pragma once

#include <utility>

#include "types.hpp"

namespace pgx {

struct Quiver {
  Idx base = 0;
  Idx arrows = 0;
  std::vector<Idx> alpha;  // arrows -> base
  std::vector<Idx> beta;   // arrows -> base

  bool operator==(const Quiver&) const = default;
};

// Finite groupoid: arrows with source/target maps, partial multiplication
// defined exactly on beta(x) == alpha(y), identity section and inverses.
struct Groupoid {
  Idx base = 0;
  Idx arrows = 0;
  std::vector<Idx> alpha;
  std::vector<Idx> beta;
  Table2 mul;             // arrows x arrows, kUndef off composable pairs
  std::vector<Idx> unit;  // base -> arrows
  std::vector<Idx> inv;   // arrows -> arrows

  Quiver quiver() const { return {base, arrows, alpha, beta}; }

  // Product that must exist; a sentinel here means a broken table.
  Idx mul_req(Idx x, Idx y) const {
    Idx p = mul.at(x, y);
    if (p == kUndef)
      fail(ErrorKind::Internal, "groupoid: product undefined on a composable pair");
    return p;
  }

  bool operator==(const Groupoid&) const = default;
};

void require_quiver_shape(const Quiver& q, const std::string& what);
void require_groupoid_shape(const Groupoid& g);

// All (x, y) with beta(x) == alpha(y), in lexicographic order.
std::vector<std::pair<Idx, Idx>> composable_pairs(const Quiver& q);

// Checks the definedness pattern of mul, source/target compatibility,
// associativity on composable triples, unitality and invertibility.
Report validate_groupoid(const Groupoid& g, const CheckOptions& opts = {});

}  // namespace pgx
