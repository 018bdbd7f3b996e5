#include "yang_baxter.hpp"

#include "parallel.hpp"

namespace pgx {

void require_braided_quiver_shape(const BraidedQuiver& bq) {
  require_quiver_shape(bq.quiver, "braided quiver");
  Idx n = bq.quiver.arrows;
  if (bq.left.rows != n || bq.left.cols != n || bq.right.rows != n || bq.right.cols != n)
    fail(ErrorKind::Malformed, "braided quiver: pair tables are not arrows x arrows");
  for (Idx v : bq.left.cells)
    if (v != kUndef && !index_ok(v, n))
      fail(ErrorKind::Malformed, "braided quiver: left entry out of range");
  for (Idx v : bq.right.cells)
    if (v != kUndef && !index_ok(v, n))
      fail(ErrorKind::Malformed, "braided quiver: right entry out of range");
}

void require_braided_groupoid_shape(const BraidedGroupoid& bg) {
  require_groupoid_shape(bg.g);
  BraidedQuiver view{bg.g.quiver(), bg.left, bg.right};
  require_braided_quiver_shape(view);
}

BraidedQuiver solution_from_post_groupoid(const PostGroupoid& p) {
  require_valid_post_groupoid(p);
  Groupoid gl = grossman_larson(p);
  BraidedQuiver bq;
  bq.quiver = gl.quiver();
  bq.left = p.tri;
  bq.right = Table2(gl.arrows, gl.arrows);
  for (Idx x = 0; x < gl.arrows; ++x)
    for (Idx y = 0; y < gl.arrows; ++y) {
      if (gl.beta[x] != gl.alpha[y]) continue;
      Idx u = p.tri_req(x, y);
      bq.right.at(x, y) = gl.mul_req(gl.inv[u], gl.mul_req(x, y));
    }
  return bq;
}

Report verify_ybe(const BraidedQuiver& bq, const CheckOptions& opts) {
  require_braided_quiver_shape(bq);
  const Quiver& q = bq.quiver;
  Report report;
  auto done = [&] { return witness_quota_reached(report, opts); };

  auto pairs = composable_pairs(q);
  Table2 pair_id(q.arrows, q.arrows);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    pair_id.at(pairs[i].first, pairs[i].second) = static_cast<Idx>(i);
  report.stats["pairs"] = static_cast<long long>(pairs.size());

  for (Idx x = 0; x < q.arrows && !done(); ++x)
    for (Idx y = 0; y < q.arrows && !done(); ++y) {
      bool matched = q.beta[x] == q.alpha[y];
      bool defined = bq.left.at(x, y) != kUndef && bq.right.at(x, y) != kUndef;
      bool any = bq.left.at(x, y) != kUndef || bq.right.at(x, y) != kUndef;
      if (matched ? !defined : any) report.add("ybe-domain", {x, y});
    }

  // R maps composable pairs to composable pairs preserving both ends.
  for (auto [x, y] : pairs) {
    if (done()) break;
    Idx l = bq.left.at(x, y);
    Idx r = bq.right.at(x, y);
    if (l == kUndef || r == kUndef) continue;
    if (q.beta[l] != q.alpha[r]) report.add("ybe-closure", {x, y});
    if (q.alpha[l] != q.alpha[x]) report.add("ybe-src", {x, y});
    if (q.beta[r] != q.beta[y]) report.add("ybe-tgt", {x, y});
  }

  // Bijectivity as a permutation check on the pair index.
  {
    std::vector<Idx> image_of(pairs.size(), kUndef);
    for (std::size_t i = 0; i < pairs.size() && !done(); ++i) {
      auto [x, y] = pairs[i];
      Idx l = bq.left.at(x, y);
      Idx r = bq.right.at(x, y);
      if (l == kUndef || r == kUndef || q.beta[l] != q.alpha[r]) continue;
      Idx target = pair_id.at(l, r);
      if (image_of[target] != kUndef) {
        auto [px, py] = pairs[image_of[target]];
        report.add("ybe-bijective", {px, py, x, y});
        continue;
      }
      image_of[target] = static_cast<Idx>(i);
    }
  }

  // Braid relation on composable triples; this is the hot loop, scanned in
  // parallel over the pair index with an in-order merge.
  long long triples = 0;
  {
    auto apply = [&](Idx x, Idx y, Idx* l, Idx* r) {
      *l = bq.left.at(x, y);
      *r = bq.right.at(x, y);
      return *l != kUndef && *r != kUndef && q.beta[*l] == q.alpha[*r];
    };
    std::size_t workers = worker_count();
    std::vector<std::vector<Violation>> found(workers);
    std::vector<long long> counts(workers, 0);
    std::size_t quota = opts.max_witnesses;
    parallel_chunks(pairs.size(), [&](std::size_t begin, std::size_t end, std::size_t chunk) {
      auto& local = found[chunk];
      for (std::size_t i = begin; i < end; ++i) {
        auto [x, y] = pairs[i];
        for (Idx z = 0; z < q.arrows; ++z) {
          if (q.beta[y] != q.alpha[z]) continue;
          ++counts[chunk];
          if (local.size() >= quota) continue;
          Idx a1, b1, a2, b2, a3, b3;
          // Left side: R12 R23 R12.
          if (!apply(x, y, &a1, &b1)) continue;
          if (!apply(b1, z, &a2, &b2)) continue;
          if (!apply(a1, a2, &a3, &b3)) continue;
          Idx lhs0 = a3, lhs1 = b3, lhs2 = b2;
          // Right side: R23 R12 R23.
          if (!apply(y, z, &a1, &b1)) continue;
          if (!apply(x, a1, &a2, &b2)) continue;
          if (!apply(b2, b1, &a3, &b3)) continue;
          if (lhs0 != a2 || lhs1 != a3 || lhs2 != b3)
            local.push_back({"ybe-braid", {x, y, z}});
        }
      }
    });
    for (std::size_t w = 0; w < workers; ++w) {
      triples += counts[w];
      for (auto& v : found[w]) {
        if (done()) break;
        report.violations.push_back(std::move(v));
      }
    }
  }
  report.stats["triples"] = triples;

  return report;
}

Report verify_nondegenerate(const BraidedQuiver& bq, const CheckOptions& opts) {
  require_braided_quiver_shape(bq);
  const Quiver& q = bq.quiver;
  Report report;
  auto done = [&] { return witness_quota_reached(report, opts); };

  std::vector<std::vector<Idx>> by_alpha(q.base), by_beta(q.base);
  for (Idx x = 0; x < q.arrows; ++x) {
    by_alpha[q.alpha[x]].push_back(x);
    by_beta[q.beta[x]].push_back(x);
  }

  for (Idx x = 0; x < q.arrows && !done(); ++x) {
    const auto& domain = by_alpha[q.beta[x]];
    const auto& codomain = by_alpha[q.alpha[x]];
    if (domain.size() != codomain.size()) {
      report.add("nondeg-left", {x});
      continue;
    }
    std::vector<char> seen(q.arrows, 0);
    for (Idx y : domain) {
      Idx image = bq.left.at(x, y);
      if (image == kUndef || q.alpha[image] != q.alpha[x]) {
        report.add("nondeg-left", {x, y});
        break;
      }
      if (seen[image]) {
        report.add("nondeg-left", {x, y});
        break;
      }
      seen[image] = 1;
    }
  }

  for (Idx x = 0; x < q.arrows && !done(); ++x) {
    const auto& domain = by_beta[q.alpha[x]];
    const auto& codomain = by_beta[q.beta[x]];
    if (domain.size() != codomain.size()) {
      report.add("nondeg-right", {x});
      continue;
    }
    std::vector<char> seen(q.arrows, 0);
    for (Idx y : domain) {
      Idx image = bq.right.at(y, x);
      if (image == kUndef || q.beta[image] != q.beta[x]) {
        report.add("nondeg-right", {x, y});
        break;
      }
      if (seen[image]) {
        report.add("nondeg-right", {x, y});
        break;
      }
      seen[image] = 1;
    }
  }

  return report;
}

BraidedGroupoid braided_groupoid_from_post(const PostGroupoid& p) {
  BraidedQuiver solution = solution_from_post_groupoid(p);
  return {grossman_larson(p), std::move(solution.left), std::move(solution.right)};
}

Report validate_braided_groupoid(const BraidedGroupoid& bg, const CheckOptions& opts) {
  require_braided_groupoid_shape(bg);
  Report report = validate_groupoid(bg.g, opts);

  MatchedPairOptions mp_opts;
  mp_opts.max_witnesses = opts.max_witnesses;
  mp_opts.surjectivity_is_violation = opts.surjectivity_is_violation;
  report.merge(validate_matched_pair({bg.g, bg.g, bg.left, bg.right}, mp_opts));

  auto done = [&] { return witness_quota_reached(report, opts); };
  for (Idx x = 0; x < bg.g.arrows && !done(); ++x)
    for (Idx y = 0; y < bg.g.arrows && !done(); ++y) {
      if (bg.g.beta[x] != bg.g.alpha[y]) continue;
      Idx l = bg.left.at(x, y);
      Idx r = bg.right.at(x, y);
      if (l == kUndef || r == kUndef) continue;
      Idx lhs = bg.g.beta[l] == bg.g.alpha[r] ? bg.g.mul.at(l, r) : kUndef;
      if (lhs == kUndef || lhs != bg.g.mul.at(x, y))
        report.add("braided-product", {x, y});
    }

  return report;
}

void require_valid_braided_groupoid(const BraidedGroupoid& bg) {
  CheckOptions opts;
  opts.max_witnesses = 1;
  Report report = validate_braided_groupoid(bg, opts);
  if (!report.ok())
    fail(ErrorKind::BadInput,
         "braided groupoid invalid (" + violation_line(report.violations[0]) + ")");
}

PostGroupoid post_from_braided(const BraidedGroupoid& bg) {
  require_valid_braided_groupoid(bg);
  const Groupoid& g = bg.g;

  PostGroupoid p;
  p.bundle.base = g.base;
  p.bundle.size = g.arrows;
  p.bundle.pi = g.alpha;
  p.bundle.unit = g.unit;
  p.bundle.mul = Table2(g.arrows, g.arrows);
  p.bundle.inv.resize(g.arrows);
  for (Idx x = 0; x < g.arrows; ++x) {
    for (Idx y = 0; y < g.arrows; ++y) {
      if (g.alpha[x] != g.alpha[y]) continue;
      Idx u = bg.left.at(g.inv[x], y);
      if (u == kUndef) fail(ErrorKind::Internal, "post-from-braided: pair map gap");
      p.bundle.mul.at(x, y) = g.mul_req(x, u);
    }
    Idx iv = bg.left.at(x, g.inv[x]);
    if (iv == kUndef) fail(ErrorKind::Internal, "post-from-braided: pair map gap");
    p.bundle.inv[x] = iv;
  }
  p.phi = g.beta;
  p.tri = bg.left;
  return p;
}

BraidedQuiver solution_from_rb(const RelativeRotaBaxter& r) {
  Groupoid desc = descendent_groupoid(r);
  const GroupBundle& h = r.action.h;

  BraidedQuiver bq;
  bq.quiver = desc.quiver();
  bq.left = Table2(h.size, h.size);
  bq.right = Table2(h.size, h.size);
  for (Idx x = 0; x < h.size; ++x)
    for (Idx y = 0; y < h.size; ++y) {
      if (desc.beta[x] != h.pi[y]) continue;
      Idx u = r.action.act_req(r.b[x], y);
      bq.left.at(x, y) = u;
      bq.right.at(x, y) = desc.mul_req(desc.inv[u], desc.mul_req(x, y));
    }
  return bq;
}

}  // namespace pgx
