#include "bracoid.hpp"

namespace pgx {

void require_bracoid_shape(const SkewLeftBracoid& sb) {
  require_bundle_shape(sb.bundle);
  require_groupoid_shape(sb.gpd);
  if (sb.gpd.base != sb.bundle.base || sb.gpd.arrows != sb.bundle.size)
    fail(ErrorKind::Malformed, "bracoid: bundle and groupoid carriers differ");
}

Report validate_bracoid(const SkewLeftBracoid& sb, const CheckOptions& opts) {
  require_bracoid_shape(sb);
  const GroupBundle& b = sb.bundle;
  const Groupoid& g = sb.gpd;

  Report report = validate_group_bundle(b, opts);
  report.merge(validate_groupoid(g, opts));
  auto done = [&] { return witness_quota_reached(report, opts); };

  // The two structures literally share the projection and unit section.
  for (Idx x = 0; x < b.size && !done(); ++x)
    if (g.alpha[x] != b.pi[x]) report.add("bracoid-shared-source", {x});
  for (Idx m = 0; m < b.base && !done(); ++m)
    if (g.unit[m] != b.unit[m]) report.add("bracoid-shared-unit", {m});

  // All three right-hand factors must live in the fiber of x before the
  // compatibility law is even meaningful.
  for (Idx x = 0; x < b.size && !done(); ++x)
    for (Idx y = 0; y < b.size && !done(); ++y) {
      if (g.beta[x] != b.pi[y]) continue;
      Idx s = g.mul.at(x, y);
      if (s != kUndef && b.pi[s] != b.pi[x]) report.add("bracoid-welldef", {x, y});
    }

  // x * (y y') = (x * y) inv(x) (x * y').
  for (Idx x = 0; x < b.size && !done(); ++x)
    for (Idx y = 0; y < b.size && !done(); ++y) {
      if (g.beta[x] != b.pi[y]) continue;
      Idx sy = g.mul.at(x, y);
      if (sy == kUndef || b.pi[sy] != b.pi[x]) continue;
      for (Idx y2 = 0; y2 < b.size && !done(); ++y2) {
        if (b.pi[y2] != b.pi[y]) continue;
        Idx yy = b.mul.at(y, y2);
        Idx sy2 = g.mul.at(x, y2);
        if (yy == kUndef || sy2 == kUndef || b.pi[sy2] != b.pi[x]) continue;
        Idx lhs = g.beta[x] == b.pi[yy] ? g.mul.at(x, yy) : kUndef;
        Idx mid = b.mul.at(sy, b.inv[x]);
        Idx rhs = mid == kUndef ? kUndef : b.mul.at(mid, sy2);
        if (lhs == kUndef || rhs == kUndef || lhs != rhs)
          report.add("bracoid-compat", {x, y, y2});
      }
    }

  return report;
}

void require_valid_bracoid(const SkewLeftBracoid& sb) {
  CheckOptions opts;
  opts.max_witnesses = 1;
  Report report = validate_bracoid(sb, opts);
  if (!report.ok())
    fail(ErrorKind::BadInput,
         "bracoid invalid (" + violation_line(report.violations[0]) + ")");
}

SkewLeftBracoid bracoid_from_post(const PostGroupoid& p) {
  require_valid_post_groupoid(p);
  return {p.bundle, grossman_larson(p)};
}

PostGroupoid post_from_bracoid(const SkewLeftBracoid& sb) {
  require_valid_bracoid(sb);
  const GroupBundle& b = sb.bundle;
  const Groupoid& g = sb.gpd;

  PostGroupoid p;
  p.bundle = b;
  p.phi = g.beta;
  p.tri = Table2(b.size, b.size);
  for (Idx x = 0; x < b.size; ++x)
    for (Idx y = 0; y < b.size; ++y) {
      if (g.beta[x] != b.pi[y]) continue;
      p.tri.at(x, y) = b.mul_req(b.inv[x], g.mul_req(x, y));
    }
  return p;
}

SkewLeftBracoid bracoid_from_rb(const RelativeRotaBaxter& r) {
  return {r.action.h, descendent_groupoid(r)};
}

BraidedQuiver solution_from_bracoid(const SkewLeftBracoid& sb) {
  require_valid_bracoid(sb);
  const GroupBundle& b = sb.bundle;
  const Groupoid& g = sb.gpd;

  BraidedQuiver bq;
  bq.quiver = {b.base, b.size, b.pi, g.beta};
  bq.left = Table2(b.size, b.size);
  bq.right = Table2(b.size, b.size);
  for (Idx x = 0; x < b.size; ++x)
    for (Idx y = 0; y < b.size; ++y) {
      if (g.beta[x] != b.pi[y]) continue;
      Idx star = g.mul_req(x, y);
      Idx u = b.mul_req(b.inv[x], star);
      bq.left.at(x, y) = u;
      bq.right.at(x, y) = g.mul_req(g.inv[u], star);
    }
  return bq;
}

}  // namespace pgx
