#pragma once

#include "constructions.hpp"

namespace pgx {

// Quiver with a pair map on composable pairs, stored as its two component
// tables: left = first component, right = second. Both are arrows x arrows
// with entries exactly on beta(x) == alpha(y).
struct BraidedQuiver {
  Quiver quiver;
  Table2 left;
  Table2 right;

  bool operator==(const BraidedQuiver&) const = default;
};

// Groupoid with a self-matched-pair map compatible with its product.
struct BraidedGroupoid {
  Groupoid g;
  Table2 left;
  Table2 right;

  bool operator==(const BraidedGroupoid&) const = default;
};

void require_braided_quiver_shape(const BraidedQuiver& bq);
void require_braided_groupoid_shape(const BraidedGroupoid& bg);

// Pair map on the quiver of the induced groupoid:
// R(x, y) = (x |> y, inv(x |> y) * x * y) with * the induced product.
BraidedQuiver solution_from_post_groupoid(const PostGroupoid& p);

// Checks that the pair map is a bijective quiver endomorphism of the
// composable-pair quiver and that the braid relation holds on every
// composable triple. stats report the pair and triple counts.
Report verify_ybe(const BraidedQuiver& bq, const CheckOptions& opts = {});

// Both component families of maps are fiberwise bijections.
Report verify_nondegenerate(const BraidedQuiver& bq, const CheckOptions& opts = {});

BraidedGroupoid braided_groupoid_from_post(const PostGroupoid& p);

// Matched-pair conditions of (g, g, sigma) plus the product-compatibility
// law (x -> y)(x <- y) = xy.
Report validate_braided_groupoid(const BraidedGroupoid& bg, const CheckOptions& opts = {});

void require_valid_braided_groupoid(const BraidedGroupoid& bg);

// Inverse construction: carrier with fiber map alpha, anchor beta,
// tri = left and fiber product x y = x * (inv(x) -> y).
PostGroupoid post_from_braided(const BraidedGroupoid& bg);

// Solution on the quiver of the descendent groupoid of a relative
// Rota-Baxter operator, built from the descendent structure directly.
BraidedQuiver solution_from_rb(const RelativeRotaBaxter& r);

}  // namespace pgx
