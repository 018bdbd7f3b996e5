#include "bundle.hpp"

namespace pgx {

void require_bundle_shape(const GroupBundle& b) {
  if (b.base < 1) fail(ErrorKind::Malformed, "bundle: base must be non-empty");
  if (b.size < 1) fail(ErrorKind::Malformed, "bundle: empty total space");
  if (static_cast<Idx>(b.pi.size()) != b.size)
    fail(ErrorKind::Malformed, "bundle: pi table is not length size");
  if (b.mul.rows != b.size || b.mul.cols != b.size)
    fail(ErrorKind::Malformed, "bundle: mul table is not size x size");
  if (static_cast<Idx>(b.unit.size()) != b.base)
    fail(ErrorKind::Malformed, "bundle: unit table is not length base");
  if (static_cast<Idx>(b.inv.size()) != b.size)
    fail(ErrorKind::Malformed, "bundle: inv table is not length size");
  for (Idx v : b.pi)
    if (!index_ok(v, b.base)) fail(ErrorKind::Malformed, "bundle: pi entry out of range");
  for (Idx v : b.mul.cells)
    if (v != kUndef && !index_ok(v, b.size))
      fail(ErrorKind::Malformed, "bundle: mul entry out of range");
  for (Idx v : b.unit)
    if (!index_ok(v, b.size)) fail(ErrorKind::Malformed, "bundle: unit entry out of range");
  for (Idx v : b.inv)
    if (!index_ok(v, b.size)) fail(ErrorKind::Malformed, "bundle: inv entry out of range");
}

std::vector<std::vector<Idx>> GroupBundle::fibers() const {
  std::vector<std::vector<Idx>> out(base);
  for (Idx x = 0; x < size; ++x) out[pi[x]].push_back(x);
  return out;
}

FiniteGroup GroupBundle::fiber_group(Idx m, std::vector<Idx>* local_to_global) const {
  std::vector<Idx> elems;
  std::vector<Idx> to_local(size, kUndef);
  for (Idx x = 0; x < size; ++x)
    if (pi[x] == m) {
      to_local[x] = static_cast<Idx>(elems.size());
      elems.push_back(x);
    }
  if (elems.empty()) fail(ErrorKind::BadInput, "bundle: empty fiber");
  FiniteGroup g;
  g.n = static_cast<Idx>(elems.size());
  g.mul = Table2(g.n, g.n);
  g.inv.resize(g.n);
  g.id = to_local[unit[m]];
  if (g.id == kUndef) fail(ErrorKind::BadInput, "bundle: unit outside its fiber");
  for (Idx i = 0; i < g.n; ++i) {
    Idx gi = inv[elems[i]];
    if (!index_ok(gi, size) || to_local[gi] == kUndef)
      fail(ErrorKind::BadInput, "bundle: inverse leaves the fiber");
    g.inv[i] = to_local[gi];
    for (Idx j = 0; j < g.n; ++j) {
      Idx p = mul.at(elems[i], elems[j]);
      if (p == kUndef || to_local[p] == kUndef)
        fail(ErrorKind::BadInput, "bundle: product undefined or outside the fiber");
      g.mul.at(i, j) = to_local[p];
    }
  }
  if (local_to_global) *local_to_global = elems;
  return g;
}

Report validate_group_bundle(const GroupBundle& b, const CheckOptions& opts) {
  require_bundle_shape(b);
  Report report;
  auto done = [&] { return witness_quota_reached(report, opts); };

  // Definedness pattern: the product exists exactly within a fiber.
  for (Idx x = 0; x < b.size && !done(); ++x)
    for (Idx y = 0; y < b.size && !done(); ++y) {
      bool same_fiber = b.pi[x] == b.pi[y];
      bool defined = b.mul.at(x, y) != kUndef;
      if (same_fiber != defined) report.add("bundle-mul-domain", {x, y});
    }

  // Products stay in their fiber.
  for (Idx x = 0; x < b.size && !done(); ++x)
    for (Idx y = 0; y < b.size && !done(); ++y) {
      if (b.pi[x] != b.pi[y]) continue;
      Idx p = b.mul.at(x, y);
      if (p != kUndef && b.pi[p] != b.pi[x]) report.add("bundle-closure", {x, y});
    }

  // Unit section lands in the right fiber and is a two-sided unit there.
  for (Idx m = 0; m < b.base && !done(); ++m)
    if (b.pi[b.unit[m]] != m) report.add("bundle-unit-section", {m});
  for (Idx x = 0; x < b.size && !done(); ++x) {
    Idx e = b.unit[b.pi[x]];
    if (b.pi[e] != b.pi[x]) continue;  // reported above
    if (b.mul.at(e, x) != x || b.mul.at(x, e) != x) report.add("bundle-unit", {x});
  }

  // Inverses stay in the fiber and are two-sided.
  for (Idx x = 0; x < b.size && !done(); ++x) {
    Idx ix = b.inv[x];
    if (b.pi[ix] != b.pi[x]) {
      report.add("bundle-inv-fiber", {x});
      continue;
    }
    Idx e = b.unit[b.pi[x]];
    if (b.mul.at(x, ix) != e || b.mul.at(ix, x) != e) report.add("bundle-inv", {x});
  }

  // Associativity within fibers.
  for (Idx x = 0; x < b.size && !done(); ++x)
    for (Idx y = 0; y < b.size && !done(); ++y) {
      if (b.pi[x] != b.pi[y]) continue;
      Idx xy = b.mul.at(x, y);
      if (xy == kUndef) continue;
      for (Idx z = 0; z < b.size && !done(); ++z) {
        if (b.pi[y] != b.pi[z]) continue;
        Idx yz = b.mul.at(y, z);
        if (yz == kUndef || b.pi[xy] != b.pi[z] || b.pi[yz] != b.pi[x]) continue;
        if (b.mul.at(xy, z) != b.mul.at(x, yz)) report.add("bundle-assoc", {x, y, z});
      }
    }

  // Exhaustive isomorphism search between fibers, reported but not required.
  if (report.ok()) {
    bool isomorphic = true;
    FiniteGroup first = b.fiber_group(0);
    for (Idx m = 1; m < b.base && isomorphic; ++m) {
      FiniteGroup other = b.fiber_group(m);
      if (group_isomorphisms(first, other, /*first_only=*/true).empty())
        isomorphic = false;
    }
    report.stats["fibers_isomorphic"] = isomorphic ? 1 : 0;
    if (!isomorphic)
      report.notes.push_back("bundle: fibers are groups but not all isomorphic");
  }

  return report;
}

}  // namespace pgx
