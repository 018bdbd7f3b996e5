#include "groupoid.hpp"

#include <vector>

namespace pgx {

void require_quiver_shape(const Quiver& q, const std::string& what) {
  if (q.base < 1) fail(ErrorKind::Malformed, what + ": base must be non-empty");
  if (q.arrows < 0) fail(ErrorKind::Malformed, what + ": negative arrow count");
  if (static_cast<Idx>(q.alpha.size()) != q.arrows ||
      static_cast<Idx>(q.beta.size()) != q.arrows)
    fail(ErrorKind::Malformed, what + ": alpha/beta length mismatch");
  for (Idx v : q.alpha)
    if (!index_ok(v, q.base)) fail(ErrorKind::Malformed, what + ": alpha out of range");
  for (Idx v : q.beta)
    if (!index_ok(v, q.base)) fail(ErrorKind::Malformed, what + ": beta out of range");
}

void require_groupoid_shape(const Groupoid& g) {
  require_quiver_shape(g.quiver(), "groupoid");
  if (g.mul.rows != g.arrows || g.mul.cols != g.arrows)
    fail(ErrorKind::Malformed, "groupoid: mul table is not arrows x arrows");
  if (static_cast<Idx>(g.unit.size()) != g.base)
    fail(ErrorKind::Malformed, "groupoid: unit table is not length base");
  if (static_cast<Idx>(g.inv.size()) != g.arrows)
    fail(ErrorKind::Malformed, "groupoid: inv table is not length arrows");
  for (Idx v : g.mul.cells)
    if (v != kUndef && !index_ok(v, g.arrows))
      fail(ErrorKind::Malformed, "groupoid: mul entry out of range");
  for (Idx v : g.unit)
    if (!index_ok(v, g.arrows)) fail(ErrorKind::Malformed, "groupoid: unit entry out of range");
  for (Idx v : g.inv)
    if (!index_ok(v, g.arrows)) fail(ErrorKind::Malformed, "groupoid: inv entry out of range");
}

std::vector<std::pair<Idx, Idx>> composable_pairs(const Quiver& q) {
  require_quiver_shape(q, "quiver");
  std::vector<std::pair<Idx, Idx>> pairs;
  for (Idx x = 0; x < q.arrows; ++x)
    for (Idx y = 0; y < q.arrows; ++y)
      if (q.beta[x] == q.alpha[y]) pairs.emplace_back(x, y);
  return pairs;
}

Report validate_groupoid(const Groupoid& g, const CheckOptions& opts) {
  require_groupoid_shape(g);
  Report report;

  auto done = [&] { return witness_quota_reached(report, opts); };

  // Definedness pattern of the partial multiplication.
  for (Idx x = 0; x < g.arrows && !done(); ++x)
    for (Idx y = 0; y < g.arrows && !done(); ++y) {
      bool composable = g.beta[x] == g.alpha[y];
      bool defined = g.mul.at(x, y) != kUndef;
      if (composable != defined) report.add("gpd-mul-domain", {x, y});
    }

  // Source/target of products.
  for (Idx x = 0; x < g.arrows && !done(); ++x)
    for (Idx y = 0; y < g.arrows && !done(); ++y) {
      if (g.beta[x] != g.alpha[y]) continue;
      Idx p = g.mul.at(x, y);
      if (p == kUndef) continue;
      if (g.alpha[p] != g.alpha[x]) report.add("gpd-source", {x, y});
      if (g.beta[p] != g.beta[y]) report.add("gpd-target", {x, y});
    }

  // Identity section: unit[m] must be an arrow m -> m behaving as a unit.
  for (Idx m = 0; m < g.base && !done(); ++m) {
    Idx e = g.unit[m];
    if (g.alpha[e] != m || g.beta[e] != m) report.add("gpd-unit-section", {m});
  }
  for (Idx x = 0; x < g.arrows && !done(); ++x) {
    Idx el = g.unit[g.alpha[x]];
    Idx er = g.unit[g.beta[x]];
    if (g.beta[el] == g.alpha[x] && g.mul.at(el, x) != x)
      report.add("gpd-unit-left", {x});
    if (g.beta[x] == g.alpha[er] && g.mul.at(x, er) != x)
      report.add("gpd-unit-right", {x});
  }

  // Invertibility: x inv(x) = unit(alpha x), inv(x) x = unit(beta x).
  for (Idx x = 0; x < g.arrows && !done(); ++x) {
    Idx ix = g.inv[x];
    if (g.beta[x] != g.alpha[ix] || g.mul.at(x, ix) != g.unit[g.alpha[x]] ||
        g.mul.at(ix, x) != g.unit[g.beta[x]])
      report.add("gpd-invertibility", {x});
  }

  // Associativity over composable triples.
  long long triples = 0;
  for (Idx x = 0; x < g.arrows && !done(); ++x)
    for (Idx y = 0; y < g.arrows && !done(); ++y) {
      if (g.beta[x] != g.alpha[y]) continue;
      Idx xy = g.mul.at(x, y);
      for (Idx z = 0; z < g.arrows && !done(); ++z) {
        if (g.beta[y] != g.alpha[z]) continue;
        ++triples;
        Idx yz = g.mul.at(y, z);
        if (xy == kUndef || yz == kUndef) continue;  // reported above
        Idx lhs = g.beta[xy] == g.alpha[z] ? g.mul.at(xy, z) : kUndef;
        Idx rhs = g.beta[x] == g.alpha[yz] ? g.mul.at(x, yz) : kUndef;
        if (lhs != rhs || lhs == kUndef) report.add("gpd-assoc", {x, y, z});
      }
    }
  report.stats["triples"] = triples;

  // The source and target maps are required to be surjective on top-level
  // inputs; mid-computation instances only get a note.
  std::vector<char> alpha_hit(g.base, 0), beta_hit(g.base, 0);
  for (Idx x = 0; x < g.arrows; ++x) {
    alpha_hit[g.alpha[x]] = 1;
    beta_hit[g.beta[x]] = 1;
  }
  for (Idx m = 0; m < g.base && !done(); ++m) {
    if (alpha_hit[m] && beta_hit[m]) continue;
    if (opts.surjectivity_is_violation)
      report.add("gpd-surjective", {m});
    else
      report.notes.push_back("gpd-surjective: base point " + std::to_string(m) +
                             " not reached by alpha or beta");
  }

  return report;
}

}  // namespace pgx
