#include "group.hpp"

#include <algorithm>

namespace pgx {

namespace {

void require_group_shape(const FiniteGroup& g) {
  if (g.n < 1) fail(ErrorKind::Malformed, "group: order must be at least 1");
  if (g.mul.rows != g.n || g.mul.cols != g.n)
    fail(ErrorKind::Malformed, "group: mul table is not n x n");
  if (static_cast<Idx>(g.inv.size()) != g.n)
    fail(ErrorKind::Malformed, "group: inv table is not length n");
  if (!index_ok(g.id, g.n)) fail(ErrorKind::Malformed, "group: id out of range");
  for (Idx v : g.mul.cells)
    if (!index_ok(v, g.n)) fail(ErrorKind::Malformed, "group: mul entry out of range");
  for (Idx v : g.inv)
    if (!index_ok(v, g.n)) fail(ErrorKind::Malformed, "group: inv entry out of range");
}

}  // namespace

Report validate_group(const FiniteGroup& g, const CheckOptions& opts) {
  require_group_shape(g);
  Report report;
  for (Idx a = 0; a < g.n && !witness_quota_reached(report, opts); ++a) {
    if (g.mul.at(g.id, a) != a || g.mul.at(a, g.id) != a)
      report.add("group-unit", {a});
  }
  for (Idx a = 0; a < g.n && !witness_quota_reached(report, opts); ++a) {
    if (g.mul.at(a, g.inv[a]) != g.id || g.mul.at(g.inv[a], a) != g.id)
      report.add("group-inv", {a});
  }
  for (Idx a = 0; a < g.n && !witness_quota_reached(report, opts); ++a)
    for (Idx b = 0; b < g.n && !witness_quota_reached(report, opts); ++b)
      for (Idx c = 0; c < g.n && !witness_quota_reached(report, opts); ++c)
        if (g.mul.at(g.mul.at(a, b), c) != g.mul.at(a, g.mul.at(b, c)))
          report.add("group-assoc", {a, b, c});
  return report;
}

Idx element_order(const FiniteGroup& g, Idx a) {
  Idx order = 1;
  Idx acc = a;
  while (acc != g.id) {
    acc = g.mul.at(acc, a);
    ++order;
    if (order > g.n) fail(ErrorKind::BadInput, "element_order: not a group table");
  }
  return order;
}

namespace {

// Backtracking over images in element order; multiplicativity is checked on
// every product both of whose factors are already assigned.
struct IsoSearch {
  const FiniteGroup& a;
  const FiniteGroup& b;
  bool first_only;
  std::vector<Idx> image;
  std::vector<char> used;
  std::vector<Idx> order_a, order_b;
  std::vector<std::vector<Idx>> found;

  bool consistent(Idx k) const {
    for (Idx i = 0; i <= k; ++i) {
      Idx p = a.mul.at(i, k);
      if (p <= k && b.mul.at(image[i], image[k]) != image[p]) return false;
      Idx q = a.mul.at(k, i);
      if (q <= k && b.mul.at(image[k], image[i]) != image[q]) return false;
    }
    return true;
  }

  void recurse(Idx k) {
    if (first_only && !found.empty()) return;
    if (k == a.n) {
      found.push_back(image);
      return;
    }
    for (Idx candidate = 0; candidate < b.n; ++candidate) {
      if (used[candidate]) continue;
      if (order_a[k] != order_b[candidate]) continue;
      if (k == a.id && candidate != b.id) continue;
      image[k] = candidate;
      used[candidate] = 1;
      if (consistent(k)) recurse(k + 1);
      used[candidate] = 0;
      image[k] = kUndef;
    }
  }
};

}  // namespace

std::vector<std::vector<Idx>> group_isomorphisms(const FiniteGroup& a,
                                                 const FiniteGroup& b,
                                                 bool first_only) {
  if (a.n != b.n) return {};
  IsoSearch search{a, b, first_only, std::vector<Idx>(a.n, kUndef),
                   std::vector<char>(b.n, 0), {}, {}, {}};
  search.order_a.resize(a.n);
  search.order_b.resize(b.n);
  for (Idx i = 0; i < a.n; ++i) search.order_a[i] = element_order(a, i);
  for (Idx i = 0; i < b.n; ++i) search.order_b[i] = element_order(b, i);
  search.recurse(0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

}  // namespace pgx
