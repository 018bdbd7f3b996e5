#pragma once

#include "bundle.hpp"
#include "types.hpp"

namespace pgx {

// Group bundle carrying a second anchor map phi and a partial product tri,
// with tri(x, y) defined exactly when phi[x] == pi[y].
struct PostGroupoid {
  GroupBundle bundle;
  std::vector<Idx> phi;  // size -> base
  Table2 tri;            // size x size, kUndef off the phi/pi pullback

  Idx size() const { return bundle.size; }
  Idx base() const { return bundle.base; }

  Idx tri_req(Idx x, Idx y) const {
    Idx t = tri.at(x, y);
    if (t == kUndef)
      fail(ErrorKind::Internal, "post-groupoid: tri undefined where phi matches pi");
    return t;
  }

  bool operator==(const PostGroupoid&) const = default;
};

void require_post_groupoid_shape(const PostGroupoid& p);

// Full axiom check: bundle validity, unit anchoring, the definedness pattern
// of tri, fiber preservation, bijectivity of every left multiplication, and
// the three compatibility axioms over their pullback pair/triple sets.
Report validate_post_groupoid(const PostGroupoid& p, const CheckOptions& opts = {});

// Unit identities are a consequence of the axioms; this re-checks them
// directly as a regression oracle.
Report check_unit_identities(const PostGroupoid& p, const CheckOptions& opts = {});

// Base-preserving homomorphism check for a total map psi between the
// carriers of p and q.
Report check_post_homomorphism(const PostGroupoid& p, const PostGroupoid& q,
                               const std::vector<Idx>& psi,
                               const CheckOptions& opts = {});

}  // namespace pgx
