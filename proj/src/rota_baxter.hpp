#pragma once

#include "groupoid.hpp"
#include "post_groupoid.hpp"

namespace pgx {

// Left action of a groupoid on a group bundle over the same base.
// act(x, d) is defined exactly when beta(x) == pi(d).
struct GroupoidAction {
  Groupoid g;
  GroupBundle h;
  Table2 act;  // g.arrows x h.size

  Idx act_req(Idx x, Idx d) const {
    Idx v = act.at(x, d);
    if (v == kUndef) fail(ErrorKind::Internal, "action: undefined where beta matches pi");
    return v;
  }

  bool operator==(const GroupoidAction&) const = default;
};

// Fiber-preserving map from the bundle into the groupoid satisfying the
// multiplicative twist identity.
struct RelativeRotaBaxter {
  GroupoidAction action;
  std::vector<Idx> b;  // h.size -> g.arrows

  bool operator==(const RelativeRotaBaxter&) const = default;
};

// Two groupoids over one base with mutual actions.
// left/right are g.arrows x k.arrows, defined iff beta_g(x) == alpha_k(y).
struct MatchedPair {
  Groupoid g;
  Groupoid k;
  Table2 left;
  Table2 right;

  bool operator==(const MatchedPair&) const = default;
};

void require_action_shape(const GroupoidAction& a);
void require_rb_shape(const RelativeRotaBaxter& r);
void require_matched_pair_shape(const MatchedPair& mp);

Report validate_action(const GroupoidAction& a, const CheckOptions& opts = {});
Report validate_rb(const RelativeRotaBaxter& r, const CheckOptions& opts = {});

// Throws BadInput unless both the action laws and the Rota-Baxter
// identities hold.
void require_valid_rb(const RelativeRotaBaxter& r);

PostGroupoid induced_post_groupoid(const RelativeRotaBaxter& r);
Groupoid descendent_groupoid(const RelativeRotaBaxter& r);
MatchedPair matched_pair_from_rb(const RelativeRotaBaxter& r);

struct MatchedPairOptions : CheckOptions {
  // Also materializes the double groupoid on composable pairs and checks it.
  bool check_double = true;
};
Report validate_matched_pair(const MatchedPair& mp, const MatchedPairOptions& opts = {});

// Regression oracle for the interchange between the action and the
// descendent multiplication; holds for every valid operator.
Report check_lemma_f1(const RelativeRotaBaxter& r, const CheckOptions& opts = {});

}  // namespace pgx
