#include "constructions.hpp"

namespace pgx {

Report validate_right_action(const FiniteGroup& g, Idx m_count, const Table2& act,
                             const CheckOptions& opts) {
  require_group_shape_for_action(g, m_count, act);
  Report report;
  auto done = [&] { return witness_quota_reached(report, opts); };
  for (Idx m = 0; m < m_count && !done(); ++m)
    if (act.at(m, g.id) != m) report.add("action-unit", {m});
  for (Idx m = 0; m < m_count && !done(); ++m)
    for (Idx a = 0; a < g.n && !done(); ++a)
      for (Idx b = 0; b < g.n && !done(); ++b)
        if (act.at(act.at(m, a), b) != act.at(m, g.mul.at(a, b)))
          report.add("action-compose", {m, a, b});
  return report;
}

void require_valid_post_groupoid(const PostGroupoid& p) {
  Report report = validate_post_groupoid(p, {.max_witnesses = 1});
  if (!report.ok())
    fail(ErrorKind::BadInput,
         "post-groupoid invalid (" + violation_line(report.violations[0]) + ")");
}

namespace {

GroupBundle trivial_bundle(const FiniteGroup& g, Idx m_count) {
  GroupBundle b;
  b.base = m_count;
  b.size = m_count * g.n;
  b.pi.resize(b.size);
  b.mul = Table2(b.size, b.size);
  b.unit.resize(m_count);
  b.inv.resize(b.size);
  for (Idx m = 0; m < m_count; ++m) {
    b.unit[m] = m * g.n + g.id;
    for (Idx a = 0; a < g.n; ++a) {
      Idx x = m * g.n + a;
      b.pi[x] = m;
      b.inv[x] = m * g.n + g.inv[a];
      for (Idx c = 0; c < g.n; ++c) b.mul.at(x, m * g.n + c) = m * g.n + g.mul.at(a, c);
    }
  }
  return b;
}

}  // namespace

void require_group_shape_for_action(const FiniteGroup& g, Idx m_count,
                                    const Table2& act) {
  Report group = validate_group(g, {.max_witnesses = 1});
  if (!group.ok())
    fail(ErrorKind::BadInput,
         "action: group table invalid (" + violation_line(group.violations[0]) + ")");
  if (m_count < 1) fail(ErrorKind::Malformed, "action: base must be non-empty");
  if (act.rows != m_count || act.cols != g.n)
    fail(ErrorKind::Malformed, "action: act table is not |M| x |G|");
  for (Idx v : act.cells)
    if (!index_ok(v, m_count)) fail(ErrorKind::Malformed, "action: act entry out of range");
}

PostGroupoid post_group(const FiniteGroup& g, const Table2& tri) {
  if (g.n < 1 || g.mul.rows != g.n || g.mul.cols != g.n ||
      static_cast<Idx>(g.inv.size()) != g.n || !index_ok(g.id, g.n))
    fail(ErrorKind::Malformed, "post-group: group tables are not well-shaped");
  if (tri.rows != g.n || tri.cols != g.n)
    fail(ErrorKind::Malformed, "post-group: tri table is not n x n");
  PostGroupoid p;
  p.bundle = trivial_bundle(g, 1);
  p.phi.assign(g.n, 0);
  p.tri = tri;
  return p;
}

PostGroupoid from_group_action(const FiniteGroup& g, Idx m_count, const Table2& act) {
  Report action = validate_right_action(g, m_count, act, {.max_witnesses = 1});
  if (!action.ok())
    fail(ErrorKind::BadInput,
         "from-action: not a right action (" + violation_line(action.violations[0]) + ")");

  PostGroupoid p;
  p.bundle = trivial_bundle(g, m_count);
  p.phi.resize(p.bundle.size);
  for (Idx m = 0; m < m_count; ++m)
    for (Idx a = 0; a < g.n; ++a) p.phi[m * g.n + a] = act.at(m, a);
  p.tri = Table2(p.bundle.size, p.bundle.size);
  for (Idx x = 0; x < p.bundle.size; ++x) {
    Idx m = p.bundle.pi[x];
    Idx n = p.phi[x];
    for (Idx h = 0; h < g.n; ++h) p.tri.at(x, n * g.n + h) = m * g.n + h;
  }
  return p;
}

PostGroupoid from_post_group_action(const PostGroupoid& pg, Idx m_count,
                                    const Table2& act) {
  if (pg.base() != 1)
    fail(ErrorKind::BadInput, "from-action: post structure must live over one point");
  require_valid_post_groupoid(pg);

  // The induced group a * b = a (a |> b), whose action the table must be.
  FiniteGroup star;
  star.n = pg.size();
  star.id = pg.bundle.unit[0];
  star.mul = Table2(star.n, star.n);
  star.inv.resize(star.n);
  for (Idx a = 0; a < star.n; ++a)
    for (Idx b = 0; b < star.n; ++b)
      star.mul.at(a, b) = pg.bundle.mul_req(a, pg.tri_req(a, b));
  for (Idx a = 0; a < star.n; ++a)
    for (Idx b = 0; b < star.n; ++b)
      if (star.mul.at(a, b) == star.id) {
        star.inv[a] = b;
        break;
      }

  Report action = validate_right_action(star, m_count, act, {.max_witnesses = 1});
  if (!action.ok())
    fail(ErrorKind::BadInput, "from-action: not a right action of the induced group (" +
                                  violation_line(action.violations[0]) + ")");

  Idx n = pg.size();
  PostGroupoid p;
  FiniteGroup carrier{n, pg.bundle.mul, pg.bundle.unit[0], pg.bundle.inv};
  p.bundle = trivial_bundle(carrier, m_count);
  p.phi.resize(p.bundle.size);
  for (Idx m = 0; m < m_count; ++m)
    for (Idx a = 0; a < n; ++a) p.phi[m * n + a] = act.at(m, a);
  p.tri = Table2(p.bundle.size, p.bundle.size);
  for (Idx m = 0; m < m_count; ++m)
    for (Idx a = 0; a < n; ++a) {
      Idx x = m * n + a;
      Idx target = p.phi[x];
      for (Idx h = 0; h < n; ++h)
        p.tri.at(x, target * n + h) = m * n + pg.tri_req(a, h);
    }
  return p;
}

Groupoid grossman_larson(const PostGroupoid& p) {
  const GroupBundle& b = p.bundle;
  Groupoid out;
  out.base = b.base;
  out.arrows = b.size;
  out.alpha = b.pi;
  out.beta = p.phi;
  out.unit = b.unit;
  out.mul = Table2(b.size, b.size);
  for (Idx x = 0; x < b.size; ++x)
    for (Idx y = 0; y < b.size; ++y)
      if (p.phi[x] == b.pi[y]) out.mul.at(x, y) = b.mul_req(x, p.tri_req(x, y));

  auto fibers = b.fibers();
  out.inv.assign(b.size, kUndef);
  for (Idx x = 0; x < b.size; ++x) {
    for (Idx d : fibers[p.phi[x]])
      if (p.tri_req(x, d) == b.inv[x]) {
        out.inv[x] = d;
        break;
      }
    if (out.inv[x] == kUndef)
      fail(ErrorKind::Internal, "grossman-larson: left multiplication is not onto");
  }
  return out;
}

GroupoidAction gl_action(const PostGroupoid& p) {
  return {grossman_larson(p), p.bundle, p.tri};
}

}  // namespace pgx
