#include "enumerate.hpp"

#include <algorithm>
#include <map>

namespace pgx {

namespace {

struct Search {
  const GroupBundle& b;
  const std::vector<Idx>& phi;
  long long budget;

  std::vector<std::vector<Idx>> fiber_elems;  // base -> global elements
  std::vector<Idx> local;                     // global -> position in fiber
  std::vector<FiniteGroup> fiber_groups;
  std::vector<std::pair<Idx, Idx>> pullback;  // (x, y) with phi[x] == pi[y]

  // Per-arrow candidate left multiplications, as local image vectors.
  std::vector<std::vector<std::vector<Idx>>> candidates;
  std::vector<const std::vector<Idx>*> assigned;

  EnumerationResult result;
  bool stopped = false;

  std::map<std::pair<Idx, Idx>, std::vector<std::vector<Idx>>> iso_cache;

  const std::vector<std::vector<Idx>>& isomorphisms(Idx from, Idx to) {
    auto key = std::make_pair(from, to);
    auto it = iso_cache.find(key);
    if (it == iso_cache.end())
      it = iso_cache.emplace(key, group_isomorphisms(fiber_groups[from],
                                                     fiber_groups[to]))
               .first;
    return it->second;
  }

  // Image of global element y under the map chosen for x.
  Idx apply(Idx x, const std::vector<Idx>& map, Idx y) const {
    return fiber_elems[b.pi[x]][map[local[y]]];
  }

  bool anchor_ok(Idx x, const std::vector<Idx>& map) const {
    for (Idx y : fiber_elems[phi[x]]) {
      Idx t = b.mul.at(x, apply(x, map, y));
      if (t == kUndef || phi[t] != phi[y]) return false;
    }
    return true;
  }

  // Composition axiom on every pullback pair whose three participants are
  // assigned and that involves the newest assignment.
  bool composition_ok(Idx newest) const {
    for (auto [x, y] : pullback) {
      if (!assigned[x] || !assigned[y]) continue;
      Idx t = b.mul.at(x, apply(x, *assigned[x], y));
      if (t == kUndef || !assigned[t]) continue;
      if (x != newest && y != newest && t != newest) continue;
      const auto& lx = *assigned[x];
      const auto& ly = *assigned[y];
      const auto& lt = *assigned[t];
      Idx k = static_cast<Idx>(ly.size());
      for (Idx i = 0; i < k; ++i)
        if (lx[ly[i]] != lt[i]) return false;
    }
    return true;
  }

  void emit() {
    PostGroupoid p;
    p.bundle = b;
    p.phi = phi;
    p.tri = Table2(b.size, b.size);
    for (Idx x = 0; x < b.size; ++x)
      for (Idx y : fiber_elems[phi[x]]) p.tri.at(x, y) = apply(x, *assigned[x], y);
    result.structures.push_back(std::move(p));
  }

  void recurse(Idx x) {
    if (stopped) return;
    if (x == b.size) {
      emit();
      return;
    }
    for (const auto& map : candidates[x]) {
      if (++result.nodes > budget) {
        result.complete = false;
        stopped = true;
        return;
      }
      assigned[x] = &map;
      if (composition_ok(x)) recurse(x + 1);
      assigned[x] = nullptr;
      if (stopped) return;
    }
  }
};

}  // namespace

EnumerationResult enumerate_post_structures(const GroupBundle& b,
                                            const std::vector<Idx>& phi,
                                            long long budget) {
  require_bundle_shape(b);
  if (static_cast<Idx>(phi.size()) != b.size)
    fail(ErrorKind::Malformed, "enumerate: phi table is not length size");
  for (Idx v : phi)
    if (!index_ok(v, b.base)) fail(ErrorKind::Malformed, "enumerate: phi entry out of range");
  if (!validate_group_bundle(b).ok())
    fail(ErrorKind::BadInput, "enumerate: carrier is not a group bundle");
  for (Idx m = 0; m < b.base; ++m)
    if (phi[b.unit[m]] != m)
      fail(ErrorKind::BadInput, "enumerate: phi does not fix the unit section");

  Search search{b, phi, budget, {}, std::vector<Idx>(b.size, kUndef),
                {}, {}, {}, {}, {}, false, {}};
  search.fiber_elems = b.fibers();
  for (const auto& fiber : search.fiber_elems)
    for (std::size_t i = 0; i < fiber.size(); ++i)
      search.local[fiber[i]] = static_cast<Idx>(i);
  search.fiber_groups.reserve(b.base);
  for (Idx m = 0; m < b.base; ++m) search.fiber_groups.push_back(b.fiber_group(m));

  for (Idx x = 0; x < b.size; ++x)
    if (search.fiber_elems[phi[x]].size() != search.fiber_elems[b.pi[x]].size())
      fail(ErrorKind::BadInput,
           "enumerate: fibers along phi do not admit bijections");

  search.pullback.reserve(static_cast<std::size_t>(b.size) * 2);
  for (Idx x = 0; x < b.size; ++x)
    for (Idx y = 0; y < b.size; ++y)
      if (phi[x] == b.pi[y]) search.pullback.emplace_back(x, y);

  std::vector<char> is_unit(b.size, 0);
  for (Idx m = 0; m < b.base; ++m) is_unit[b.unit[m]] = 1;

  search.candidates.resize(b.size);
  for (Idx x = 0; x < b.size; ++x) {
    if (is_unit[x]) {
      std::vector<Idx> identity(search.fiber_elems[b.pi[x]].size());
      for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<Idx>(i);
      if (search.anchor_ok(x, identity)) search.candidates[x].push_back(std::move(identity));
    } else {
      for (const auto& map : search.isomorphisms(phi[x], b.pi[x]))
        if (search.anchor_ok(x, map)) search.candidates[x].push_back(map);
    }
    if (search.candidates[x].empty()) return std::move(search.result);
  }

  search.assigned.assign(b.size, nullptr);
  search.recurse(0);

  std::sort(search.result.structures.begin(), search.result.structures.end(),
            [](const PostGroupoid& a, const PostGroupoid& c) {
              return a.tri.cells < c.tri.cells;
            });
  return std::move(search.result);
}

}  // namespace pgx
