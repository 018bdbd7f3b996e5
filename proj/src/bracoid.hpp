#pragma once

#include "yang_baxter.hpp"

namespace pgx {

// One carrier bearing both a group-bundle product and a groupoid product.
// The groupoid's source map is literally the bundle projection and the two
// structures share one unit section.
struct SkewLeftBracoid {
  GroupBundle bundle;
  Groupoid gpd;

  bool operator==(const SkewLeftBracoid&) const = default;
};

void require_bracoid_shape(const SkewLeftBracoid& sb);

// Substructure validity, literal sharing of carrier/projection/units, and
// the compatibility law x * (y y') = (x * y) inv(x) (x * y') over all
// admissible triples.
Report validate_bracoid(const SkewLeftBracoid& sb, const CheckOptions& opts = {});

void require_valid_bracoid(const SkewLeftBracoid& sb);

// The bundle together with the induced groupoid of the post-groupoid.
SkewLeftBracoid bracoid_from_post(const PostGroupoid& p);

// Inverse construction: phi = beta and x |> y = inv(x) (x * y).
PostGroupoid post_from_bracoid(const SkewLeftBracoid& sb);

// The bundle together with the descendent groupoid of the operator.
SkewLeftBracoid bracoid_from_rb(const RelativeRotaBaxter& r);

// Solution R(x, y) = (inv(x)(x * y), ginv(inv(x)(x * y)) * x * y) on the
// bracoid's quiver.
BraidedQuiver solution_from_bracoid(const SkewLeftBracoid& sb);

}  // namespace pgx
