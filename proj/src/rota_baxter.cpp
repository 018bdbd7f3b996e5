#include "rota_baxter.hpp"

namespace pgx {

void require_action_shape(const GroupoidAction& a) {
  require_groupoid_shape(a.g);
  require_bundle_shape(a.h);
  if (a.g.base != a.h.base)
    fail(ErrorKind::Malformed, "action: groupoid and bundle have different bases");
  if (a.act.rows != a.g.arrows || a.act.cols != a.h.size)
    fail(ErrorKind::Malformed, "action: act table is not arrows x size");
  for (Idx v : a.act.cells)
    if (v != kUndef && !index_ok(v, a.h.size))
      fail(ErrorKind::Malformed, "action: act entry out of range");
}

void require_rb_shape(const RelativeRotaBaxter& r) {
  require_action_shape(r.action);
  if (static_cast<Idx>(r.b.size()) != r.action.h.size)
    fail(ErrorKind::Malformed, "rb: operator table is not length size");
  for (Idx v : r.b)
    if (!index_ok(v, r.action.g.arrows))
      fail(ErrorKind::Malformed, "rb: operator entry out of range");
}

void require_matched_pair_shape(const MatchedPair& mp) {
  require_groupoid_shape(mp.g);
  require_groupoid_shape(mp.k);
  if (mp.g.base != mp.k.base)
    fail(ErrorKind::Malformed, "matched pair: groupoids have different bases");
  if (mp.left.rows != mp.g.arrows || mp.left.cols != mp.k.arrows ||
      mp.right.rows != mp.g.arrows || mp.right.cols != mp.k.arrows)
    fail(ErrorKind::Malformed, "matched pair: action tables are not g-arrows x k-arrows");
  for (Idx v : mp.left.cells)
    if (v != kUndef && !index_ok(v, mp.k.arrows))
      fail(ErrorKind::Malformed, "matched pair: left entry out of range");
  for (Idx v : mp.right.cells)
    if (v != kUndef && !index_ok(v, mp.g.arrows))
      fail(ErrorKind::Malformed, "matched pair: right entry out of range");
}

Report validate_action(const GroupoidAction& a, const CheckOptions& opts) {
  require_action_shape(a);
  const Groupoid& g = a.g;
  const GroupBundle& h = a.h;
  Report report;
  auto done = [&] { return witness_quota_reached(report, opts); };

  for (Idx x = 0; x < g.arrows && !done(); ++x)
    for (Idx d = 0; d < h.size && !done(); ++d) {
      bool matched = g.beta[x] == h.pi[d];
      bool defined = a.act.at(x, d) != kUndef;
      if (matched != defined) report.add("act-domain", {x, d});
    }

  for (Idx x = 0; x < g.arrows && !done(); ++x)
    for (Idx d = 0; d < h.size && !done(); ++d) {
      if (g.beta[x] != h.pi[d]) continue;
      Idx v = a.act.at(x, d);
      if (v != kUndef && h.pi[v] != g.alpha[x]) report.add("act-fiber", {x, d});
    }

  for (Idx d = 0; d < h.size && !done(); ++d) {
    Idx e = g.unit[h.pi[d]];
    if (g.beta[e] != h.pi[d]) continue;  // broken unit section, groupoid's problem
    if (a.act.at(e, d) != d) report.add("act-unit", {d});
  }

  for (Idx x = 0; x < g.arrows && !done(); ++x)
    for (Idx y = 0; y < g.arrows && !done(); ++y) {
      if (g.beta[x] != g.alpha[y]) continue;
      Idx xy = g.mul.at(x, y);
      if (xy == kUndef) continue;
      for (Idx d = 0; d < h.size && !done(); ++d) {
        if (g.beta[y] != h.pi[d]) continue;
        Idx inner = a.act.at(y, d);
        if (inner == kUndef || h.pi[inner] != g.alpha[y]) continue;
        Idx lhs = g.beta[xy] == h.pi[d] ? a.act.at(xy, d) : kUndef;
        Idx rhs = a.act.at(x, inner);
        if (lhs == kUndef || rhs == kUndef || lhs != rhs)
          report.add("act-compose", {x, y, d});
      }
    }

  // Each arrow acts as a group isomorphism between fibers.
  auto fibers = h.fibers();
  for (Idx x = 0; x < g.arrows && !done(); ++x) {
    const auto& domain = fibers[g.beta[x]];
    const auto& codomain = fibers[g.alpha[x]];
    if (domain.size() != codomain.size()) {
      report.add("act-bijective", {x});
      continue;
    }
    std::vector<char> seen(h.size, 0);
    for (Idx d : domain) {
      Idx v = a.act.at(x, d);
      if (v == kUndef) continue;
      if (seen[v]) {
        report.add("act-bijective", {x, d});
        break;
      }
      seen[v] = 1;
    }
    for (std::size_t i = 0; i < domain.size() && !done(); ++i)
      for (std::size_t j = 0; j < domain.size() && !done(); ++j) {
        Idx d1 = domain[i], d2 = domain[j];
        Idx prod = h.mul.at(d1, d2);
        Idx v1 = a.act.at(x, d1), v2 = a.act.at(x, d2);
        if (prod == kUndef || v1 == kUndef || v2 == kUndef) continue;
        if (h.pi[v1] != h.pi[v2]) continue;  // act-fiber reported
        Idx lhs = a.act.at(x, prod);
        Idx rhs = h.mul.at(v1, v2);
        if (lhs == kUndef || rhs == kUndef || lhs != rhs)
          report.add("act-mult", {x, d1, d2});
      }
  }

  return report;
}

Report validate_rb(const RelativeRotaBaxter& r, const CheckOptions& opts) {
  require_rb_shape(r);
  const Groupoid& g = r.action.g;
  const GroupBundle& h = r.action.h;
  Report report;
  auto done = [&] { return witness_quota_reached(report, opts); };

  for (Idx d = 0; d < h.size && !done(); ++d)
    if (g.alpha[r.b[d]] != h.pi[d]) report.add("rb-anchor", {d});

  for (Idx m = 0; m < h.base && !done(); ++m)
    if (r.b[h.unit[m]] != g.unit[m]) report.add("rb-unit", {m});

  // b(d1) b(d2) = b(d1 (b(d1) -> d2)) whenever beta(b(d1)) = pi(d2).
  for (Idx d1 = 0; d1 < h.size && !done(); ++d1)
    for (Idx d2 = 0; d2 < h.size && !done(); ++d2) {
      if (g.beta[r.b[d1]] != h.pi[d2]) continue;
      Idx acted = r.action.act.at(r.b[d1], d2);
      if (acted == kUndef || h.pi[acted] != h.pi[d1]) continue;
      Idx twisted = h.mul.at(d1, acted);
      if (twisted == kUndef) continue;
      if (g.alpha[r.b[d2]] != h.pi[d2]) continue;  // rb-anchor reported
      Idx lhs = g.beta[r.b[d1]] == g.alpha[r.b[d2]] ? g.mul.at(r.b[d1], r.b[d2]) : kUndef;
      if (lhs == kUndef || lhs != r.b[twisted]) report.add("rb-main", {d1, d2});
    }

  return report;
}

void require_valid_rb(const RelativeRotaBaxter& r) {
  Report action = validate_action(r.action, {.max_witnesses = 1});
  if (!action.ok())
    fail(ErrorKind::BadInput, "rb: action invalid (" + violation_line(action.violations[0]) + ")");
  Report rb = validate_rb(r, {.max_witnesses = 1});
  if (!rb.ok())
    fail(ErrorKind::BadInput, "rb: operator invalid (" + violation_line(rb.violations[0]) + ")");
}

PostGroupoid induced_post_groupoid(const RelativeRotaBaxter& r) {
  require_valid_rb(r);
  const Groupoid& g = r.action.g;
  const GroupBundle& h = r.action.h;
  PostGroupoid p;
  p.bundle = h;
  p.phi.resize(h.size);
  for (Idx d = 0; d < h.size; ++d) p.phi[d] = g.beta[r.b[d]];
  p.tri = Table2(h.size, h.size);
  for (Idx d1 = 0; d1 < h.size; ++d1)
    for (Idx d2 = 0; d2 < h.size; ++d2)
      if (p.phi[d1] == h.pi[d2]) p.tri.at(d1, d2) = r.action.act_req(r.b[d1], d2);
  return p;
}

Groupoid descendent_groupoid(const RelativeRotaBaxter& r) {
  require_valid_rb(r);
  const Groupoid& g = r.action.g;
  const GroupBundle& h = r.action.h;
  auto fibers = h.fibers();

  Groupoid out;
  out.base = h.base;
  out.arrows = h.size;
  out.alpha = h.pi;
  out.beta.resize(h.size);
  for (Idx d = 0; d < h.size; ++d) out.beta[d] = g.beta[r.b[d]];
  out.unit = h.unit;

  out.mul = Table2(h.size, h.size);
  for (Idx d1 = 0; d1 < h.size; ++d1)
    for (Idx d2 = 0; d2 < h.size; ++d2)
      if (out.beta[d1] == h.pi[d2])
        out.mul.at(d1, d2) = h.mul_req(d1, r.action.act_req(r.b[d1], d2));

  // inv(d) is the preimage of the bundle inverse under the permutation
  // x -> b(d) -> x, materialized per element.
  out.inv.assign(h.size, kUndef);
  for (Idx d = 0; d < h.size; ++d) {
    for (Idx x : fibers[out.beta[d]])
      if (r.action.act_req(r.b[d], x) == h.inv[d]) {
        out.inv[d] = x;
        break;
      }
    if (out.inv[d] == kUndef)
      fail(ErrorKind::Internal, "descendent: action row is not a bijection");
  }
  return out;
}

MatchedPair matched_pair_from_rb(const RelativeRotaBaxter& r) {
  const Groupoid& g = r.action.g;
  const GroupBundle& h = r.action.h;
  MatchedPair mp;
  mp.g = g;
  mp.k = descendent_groupoid(r);
  mp.left = r.action.act;
  mp.right = Table2(g.arrows, h.size);
  for (Idx x = 0; x < g.arrows; ++x)
    for (Idx d = 0; d < h.size; ++d) {
      if (g.beta[x] != h.pi[d]) continue;
      Idx u = r.action.act_req(x, d);
      Idx v = g.mul_req(g.inv[r.b[u]], x);
      mp.right.at(x, d) = g.mul_req(v, r.b[d]);
    }
  return mp;
}

namespace {

// The double groupoid on composable pairs characterizes matched pairs; it is
// rebuilt here and checked directly (without an explicit inverse table,
// inverses are verified to exist).
void check_double_groupoid(const MatchedPair& mp, Report& report,
                           const CheckOptions& opts) {
  std::vector<std::pair<Idx, Idx>> arrows;  // (k-arrow, g-arrow)
  Table2 pair_index(mp.k.arrows, mp.g.arrows);
  for (Idx d = 0; d < mp.k.arrows; ++d)
    for (Idx x = 0; x < mp.g.arrows; ++x)
      if (mp.k.beta[d] == mp.g.alpha[x]) {
        pair_index.at(d, x) = static_cast<Idx>(arrows.size());
        arrows.emplace_back(d, x);
      }

  Idx n = static_cast<Idx>(arrows.size());
  std::vector<Idx> alpha(n), beta(n);
  for (Idx i = 0; i < n; ++i) {
    alpha[i] = mp.k.alpha[arrows[i].first];
    beta[i] = mp.g.beta[arrows[i].second];
  }

  auto mul = [&](Idx i, Idx j) -> Idx {
    auto [d1, x1] = arrows[i];
    auto [d2, x2] = arrows[j];
    if (mp.g.beta[x1] != mp.k.alpha[d2]) return kUndef;
    Idx dl = mp.left.at(x1, d2);
    Idx xr = mp.right.at(x1, d2);
    if (dl == kUndef || xr == kUndef) return kUndef;
    if (mp.k.beta[d1] != mp.k.alpha[dl] || mp.g.beta[xr] != mp.g.alpha[x2])
      return kUndef;
    Idx kd = mp.k.mul.at(d1, dl);
    Idx gx = mp.g.mul.at(xr, x2);
    if (kd == kUndef || gx == kUndef) return kUndef;
    if (mp.k.beta[kd] != mp.g.alpha[gx]) return kUndef;
    return pair_index.at(kd, gx);
  };

  auto done = [&] { return witness_quota_reached(report, opts); };

  std::vector<Idx> unit(mp.g.base, kUndef);
  for (Idx m = 0; m < mp.g.base && !done(); ++m) {
    unit[m] = pair_index.at(mp.k.unit[m], mp.g.unit[m]);
    if (unit[m] == kUndef) report.add("mp-double-unit", {m});
  }

  for (Idx i = 0; i < n && !done(); ++i)
    for (Idx j = 0; j < n && !done(); ++j) {
      if (beta[i] != alpha[j]) continue;
      Idx p = mul(i, j);
      if (p == kUndef) {
        report.add("mp-double-closed", {i, j});
        continue;
      }
      if (alpha[p] != alpha[i]) report.add("mp-double-source", {i, j});
      if (beta[p] != beta[j]) report.add("mp-double-target", {i, j});
    }

  for (Idx i = 0; i < n && !done(); ++i) {
    if (unit[alpha[i]] != kUndef && mul(unit[alpha[i]], i) != i)
      report.add("mp-double-unit-left", {i});
    if (unit[beta[i]] != kUndef && mul(i, unit[beta[i]]) != i)
      report.add("mp-double-unit-right", {i});
    bool invertible = false;
    for (Idx j = 0; j < n; ++j)
      if (beta[i] == alpha[j] && mul(i, j) == unit[alpha[i]] &&
          mul(j, i) == unit[beta[i]]) {
        invertible = true;
        break;
      }
    if (!invertible) report.add("mp-double-inv", {i});
  }

  for (Idx i = 0; i < n && !done(); ++i)
    for (Idx j = 0; j < n && !done(); ++j) {
      if (beta[i] != alpha[j]) continue;
      Idx ij = mul(i, j);
      if (ij == kUndef) continue;
      for (Idx l = 0; l < n && !done(); ++l) {
        if (beta[j] != alpha[l]) continue;
        Idx jl = mul(j, l);
        if (jl == kUndef) continue;
        if (mul(ij, l) != mul(i, jl)) report.add("mp-double-assoc", {i, j, l});
      }
    }
}

}  // namespace

Report validate_matched_pair(const MatchedPair& mp, const MatchedPairOptions& opts) {
  require_matched_pair_shape(mp);
  const Groupoid& g = mp.g;
  const Groupoid& k = mp.k;
  Report report;
  auto done = [&] { return witness_quota_reached(report, opts); };

  for (Idx x = 0; x < g.arrows && !done(); ++x)
    for (Idx d = 0; d < k.arrows && !done(); ++d) {
      bool matched = g.beta[x] == k.alpha[d];
      if ((mp.left.at(x, d) != kUndef) != matched) report.add("mp-domain", {x, d});
      if ((mp.right.at(x, d) != kUndef) != matched) report.add("mp-domain", {x, d});
    }

  // The pair map is a homomorphism of quivers landing in composable pairs.
  for (Idx x = 0; x < g.arrows && !done(); ++x)
    for (Idx d = 0; d < k.arrows && !done(); ++d) {
      if (g.beta[x] != k.alpha[d]) continue;
      Idx l = mp.left.at(x, d);
      Idx rr = mp.right.at(x, d);
      if (l == kUndef || rr == kUndef) continue;
      if (k.alpha[l] != g.alpha[x]) report.add("mp-src", {x, d});
      if (g.beta[rr] != k.beta[d]) report.add("mp-tgt", {x, d});
      if (k.beta[l] != g.alpha[rr]) report.add("mp-mid", {x, d});
    }

  for (Idx d = 0; d < k.arrows && !done(); ++d) {
    Idx e = g.unit[k.alpha[d]];
    if (g.beta[e] == k.alpha[d] && mp.left.at(e, d) != d) report.add("mp-mg1", {d});
  }
  for (Idx x = 0; x < g.arrows && !done(); ++x) {
    Idx e = k.unit[g.beta[x]];
    if (k.alpha[e] == g.beta[x] && mp.right.at(x, e) != x) report.add("mp-mg4", {x});
  }

  // MG-2 and MG-3 over (x1, x2, d) with x1 x2 composable in g.
  for (Idx x1 = 0; x1 < g.arrows && !done(); ++x1)
    for (Idx x2 = 0; x2 < g.arrows && !done(); ++x2) {
      if (g.beta[x1] != g.alpha[x2]) continue;
      Idx xx = g.mul.at(x1, x2);
      if (xx == kUndef) continue;
      for (Idx d = 0; d < k.arrows && !done(); ++d) {
        if (g.beta[x2] != k.alpha[d]) continue;
        Idx inner = mp.left.at(x2, d);
        if (inner == kUndef || k.alpha[inner] != g.beta[x1]) continue;
        Idx lhs = g.beta[xx] == k.alpha[d] ? mp.left.at(xx, d) : kUndef;
        Idx rhs = mp.left.at(x1, inner);
        if (lhs == kUndef || rhs == kUndef || lhs != rhs)
          report.add("mp-mg2", {x1, x2, d});

        Idx r2 = mp.right.at(x2, d);
        Idx r1 = mp.right.at(x1, inner);
        if (r2 == kUndef || r1 == kUndef) continue;
        Idx lhs3 = g.beta[xx] == k.alpha[d] ? mp.right.at(xx, d) : kUndef;
        Idx rhs3 = g.beta[r1] == g.alpha[r2] ? g.mul.at(r1, r2) : kUndef;
        if (lhs3 == kUndef || rhs3 == kUndef || lhs3 != rhs3)
          report.add("mp-mg3", {x1, x2, d});
      }
    }

  // MG-5 and MG-6 over (x, d1, d2) with d1 d2 composable in k.
  for (Idx x = 0; x < g.arrows && !done(); ++x)
    for (Idx d1 = 0; d1 < k.arrows && !done(); ++d1) {
      if (g.beta[x] != k.alpha[d1]) continue;
      Idx r1 = mp.right.at(x, d1);
      Idx l1 = mp.left.at(x, d1);
      for (Idx d2 = 0; d2 < k.arrows && !done(); ++d2) {
        if (k.beta[d1] != k.alpha[d2]) continue;
        Idx dd = k.mul.at(d1, d2);
        if (dd == kUndef || r1 == kUndef || l1 == kUndef) continue;

        Idx lhs5 = g.beta[r1] == k.alpha[d2] ? mp.right.at(r1, d2) : kUndef;
        Idx rhs5 = g.beta[x] == k.alpha[dd] ? mp.right.at(x, dd) : kUndef;
        if (lhs5 == kUndef || rhs5 == kUndef || lhs5 != rhs5)
          report.add("mp-mg5", {x, d1, d2});

        Idx lhs6 = g.beta[x] == k.alpha[dd] ? mp.left.at(x, dd) : kUndef;
        Idx inner = g.beta[r1] == k.alpha[d2] ? mp.left.at(r1, d2) : kUndef;
        Idx rhs6 = kUndef;
        if (inner != kUndef && k.beta[l1] == k.alpha[inner])
          rhs6 = k.mul.at(l1, inner);
        if (lhs6 == kUndef || rhs6 == kUndef || lhs6 != rhs6)
          report.add("mp-mg6", {x, d1, d2});
      }
    }

  if (opts.check_double && report.ok()) check_double_groupoid(mp, report, opts);

  return report;
}

Report check_lemma_f1(const RelativeRotaBaxter& r, const CheckOptions& opts) {
  require_rb_shape(r);
  const Groupoid& g = r.action.g;
  const GroupBundle& h = r.action.h;
  Report report;
  auto done = [&] { return witness_quota_reached(report, opts); };

  for (Idx x = 0; x < g.arrows && !done(); ++x)
    for (Idx d1 = 0; d1 < h.size && !done(); ++d1) {
      if (g.beta[x] != h.pi[d1]) continue;
      for (Idx d2 = 0; d2 < h.size && !done(); ++d2) {
        if (g.beta[r.b[d1]] != h.pi[d2]) continue;
        Idx acted = r.action.act.at(r.b[d1], d2);
        if (acted == kUndef || h.pi[acted] != h.pi[d1]) continue;
        Idx star = h.mul.at(d1, acted);
        if (star == kUndef) continue;
        Idx lhs = g.beta[x] == h.pi[star] ? r.action.act.at(x, star) : kUndef;

        Idx first = r.action.act.at(x, d1);
        Idx xb = g.beta[x] == g.alpha[r.b[d1]] ? g.mul.at(x, r.b[d1]) : kUndef;
        Idx second = (xb != kUndef && g.beta[xb] == h.pi[d2]) ? r.action.act.at(xb, d2) : kUndef;
        Idx rhs = kUndef;
        if (first != kUndef && second != kUndef && h.pi[first] == h.pi[second])
          rhs = h.mul.at(first, second);

        if (lhs == kUndef || rhs == kUndef || lhs != rhs)
          report.add("lemma-f1", {x, d1, d2});
      }
    }
  return report;
}

}  // namespace pgx
