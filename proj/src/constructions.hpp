#pragma once

#include "rota_baxter.hpp"

namespace pgx {

// Shape and group-validity requirements shared by the action operations.
void require_group_shape_for_action(const FiniteGroup& g, Idx m_count,
                                    const Table2& act);

// Right-action laws of act: M x G -> M with respect to g's multiplication.
Report validate_right_action(const FiniteGroup& g, Idx m_count, const Table2& act,
                             const CheckOptions& opts = {});

// Throws BadInput unless p passes validate_post_groupoid.
void require_valid_post_groupoid(const PostGroupoid& p);

// One-point post-groupoid from a group with a compatible tri table.
PostGroupoid post_group(const FiniteGroup& g, const Table2& tri);

// Post-groupoid on the trivial bundle M x G induced by a right group action:
// phi is the action and (m, g) |> (n, h) = (m, h). Product carriers are
// indexed row-major, (m, g) -> m * |G| + g.
PostGroupoid from_group_action(const FiniteGroup& g, Idx m_count, const Table2& act);

// Post-groupoid on M x G from a one-point post-groupoid (a post-group) acting
// through its induced group: (m, g) |> (n, h) = (m, g |> h). The action must
// be a right action of the induced group a * b = a (a |> b).
PostGroupoid from_post_group_action(const PostGroupoid& pg, Idx m_count,
                                    const Table2& act);

// Groupoid with source pi, target phi, product x * y = x (x |> y) and the
// inverse obtained by pulling the bundle inverse back through the left
// multiplication.
Groupoid grossman_larson(const PostGroupoid& p);

// The tri product read as an action of the induced groupoid on the bundle.
GroupoidAction gl_action(const PostGroupoid& p);

}  // namespace pgx
