#include "post_groupoid.hpp"

namespace pgx {

void require_post_groupoid_shape(const PostGroupoid& p) {
  require_bundle_shape(p.bundle);
  if (static_cast<Idx>(p.phi.size()) != p.size())
    fail(ErrorKind::Malformed, "post-groupoid: phi table is not length size");
  if (p.tri.rows != p.size() || p.tri.cols != p.size())
    fail(ErrorKind::Malformed, "post-groupoid: tri table is not size x size");
  for (Idx v : p.phi)
    if (!index_ok(v, p.base()))
      fail(ErrorKind::Malformed, "post-groupoid: phi entry out of range");
  for (Idx v : p.tri.cells)
    if (v != kUndef && !index_ok(v, p.size()))
      fail(ErrorKind::Malformed, "post-groupoid: tri entry out of range");
}

Report validate_post_groupoid(const PostGroupoid& p, const CheckOptions& opts) {
  require_post_groupoid_shape(p);
  const GroupBundle& b = p.bundle;

  Report report = validate_group_bundle(b, opts);
  auto done = [&] { return witness_quota_reached(report, opts); };

  for (Idx m = 0; m < b.base && !done(); ++m)
    if (p.phi[b.unit[m]] != m) report.add("post-unit-anchor", {m});

  // tri is defined exactly on the phi/pi pullback.
  for (Idx x = 0; x < b.size && !done(); ++x)
    for (Idx y = 0; y < b.size && !done(); ++y) {
      bool matched = p.phi[x] == b.pi[y];
      bool defined = p.tri.at(x, y) != kUndef;
      if (matched != defined) report.add("post-tri-domain", {x, y});
    }

  long long pairs = 0;
  for (Idx x = 0; x < b.size && !done(); ++x)
    for (Idx y = 0; y < b.size && !done(); ++y) {
      if (p.phi[x] != b.pi[y]) continue;
      ++pairs;
      Idx t = p.tri.at(x, y);
      if (t != kUndef && b.pi[t] != b.pi[x]) report.add("post-fiber", {x, y});
    }
  report.stats["pairs"] = pairs;

  // Each left multiplication maps the fiber over phi[x] bijectively onto the
  // fiber over pi[x].
  auto fibers = b.fibers();
  for (Idx x = 0; x < b.size && !done(); ++x) {
    const auto& domain = fibers[p.phi[x]];
    const auto& codomain = fibers[b.pi[x]];
    if (domain.size() != codomain.size()) {
      report.add("post-left-bijective", {x});
      continue;
    }
    std::vector<char> seen(b.size, 0);
    for (std::size_t i = 0; i < domain.size() && !done(); ++i) {
      Idx image = p.tri.at(x, domain[i]);
      if (image == kUndef) continue;  // reported by post-tri-domain
      if (seen[image]) {
        for (std::size_t j = 0; j < i; ++j)
          if (p.tri.at(x, domain[j]) == image) {
            report.add("post-left-bijective", {x, domain[j], domain[i]});
            break;
          }
      }
      seen[image] = 1;
    }
  }

  // Axiom (i): phi(x (x |> y)) = phi(y) on the pullback pairs.
  for (Idx x = 0; x < b.size && !done(); ++x)
    for (Idx y = 0; y < b.size && !done(); ++y) {
      if (p.phi[x] != b.pi[y]) continue;
      Idx t = p.tri.at(x, y);
      if (t == kUndef || b.pi[t] != b.pi[x]) continue;
      Idx prod = b.mul.at(x, t);
      if (prod == kUndef || p.phi[prod] != p.phi[y]) report.add("post-axiom-i", {x, y});
    }

  // Axiom (ii): x |> (y y') = (x |> y)(x |> y') with y, y' in one fiber.
  for (Idx x = 0; x < b.size && !done(); ++x)
    for (Idx y = 0; y < b.size && !done(); ++y) {
      if (p.phi[x] != b.pi[y]) continue;
      for (Idx y2 = 0; y2 < b.size && !done(); ++y2) {
        if (b.pi[y2] != b.pi[y]) continue;
        Idx yy = b.mul.at(y, y2);
        Idx ty = p.tri.at(x, y);
        Idx ty2 = p.tri.at(x, y2);
        if (yy == kUndef || ty == kUndef || ty2 == kUndef) continue;
        if (b.pi[ty] != b.pi[ty2]) continue;  // post-fiber reported
        Idx lhs = p.tri.at(x, yy);
        Idx rhs = b.mul.at(ty, ty2);
        if (lhs == kUndef || rhs == kUndef || lhs != rhs)
          report.add("post-axiom-ii", {x, y, y2});
      }
    }

  // Axiom (iii): x |> (y |> z) = (x (x |> y)) |> z on pullback triples.
  long long triples = 0;
  for (Idx x = 0; x < b.size && !done(); ++x)
    for (Idx y = 0; y < b.size && !done(); ++y) {
      if (p.phi[x] != b.pi[y]) continue;
      Idx ty = p.tri.at(x, y);
      for (Idx z = 0; z < b.size && !done(); ++z) {
        if (p.phi[y] != b.pi[z]) continue;
        ++triples;
        Idx yz = p.tri.at(y, z);
        if (ty == kUndef || yz == kUndef) continue;
        if (b.pi[yz] != b.pi[y] || b.pi[ty] != b.pi[x]) continue;
        Idx lhs = p.tri.at(x, yz);
        Idx anchor = b.mul.at(x, ty);
        if (anchor == kUndef) continue;
        if (p.phi[anchor] != b.pi[z]) continue;  // post-axiom-i reported
        Idx rhs = p.tri.at(anchor, z);
        if (lhs == kUndef || rhs == kUndef || lhs != rhs)
          report.add("post-axiom-iii", {x, y, z});
      }
    }
  report.stats["triples"] = triples;

  // phi is surjective on top-level inputs; note otherwise.
  std::vector<char> hit(b.base, 0);
  for (Idx x = 0; x < b.size; ++x) hit[p.phi[x]] = 1;
  for (Idx m = 0; m < b.base && !done(); ++m) {
    if (hit[m]) continue;
    if (opts.surjectivity_is_violation)
      report.add("post-phi-surjective", {m});
    else
      report.notes.push_back("post-phi-surjective: base point " +
                             std::to_string(m) + " not in the image of phi");
  }

  return report;
}

Report check_unit_identities(const PostGroupoid& p, const CheckOptions& opts) {
  require_post_groupoid_shape(p);
  const GroupBundle& b = p.bundle;
  Report report;
  for (Idx x = 0; x < b.size && !witness_quota_reached(report, opts); ++x) {
    if (p.tri.at(x, b.unit[p.phi[x]]) != b.unit[b.pi[x]])
      report.add("post-unit-right", {x});
    Idx e = b.unit[b.pi[x]];
    if (p.phi[e] == b.pi[x] && p.tri.at(e, x) != x) report.add("post-unit-left", {x});
  }
  return report;
}

Report check_post_homomorphism(const PostGroupoid& p, const PostGroupoid& q,
                               const std::vector<Idx>& psi,
                               const CheckOptions& opts) {
  require_post_groupoid_shape(p);
  require_post_groupoid_shape(q);
  if (p.base() != q.base())
    fail(ErrorKind::BadInput, "homomorphism: post-groupoids have different bases");
  if (static_cast<Idx>(psi.size()) != p.size())
    fail(ErrorKind::Malformed, "homomorphism: psi is not total on the carrier");
  for (Idx v : psi)
    if (!index_ok(v, q.size()))
      fail(ErrorKind::Malformed, "homomorphism: psi entry out of range");

  Report report;
  auto done = [&] { return witness_quota_reached(report, opts); };

  for (Idx x = 0; x < p.size() && !done(); ++x) {
    if (q.bundle.pi[psi[x]] != p.bundle.pi[x]) report.add("hom-pi", {x});
    if (q.phi[psi[x]] != p.phi[x]) report.add("hom-phi", {x});
  }

  for (Idx x = 0; x < p.size() && !done(); ++x)
    for (Idx y = 0; y < p.size() && !done(); ++y) {
      if (p.bundle.pi[x] != p.bundle.pi[y]) continue;
      Idx pr = p.bundle.mul.at(x, y);
      if (pr == kUndef) continue;
      if (q.bundle.pi[psi[x]] != q.bundle.pi[psi[y]]) continue;  // hom-pi reported
      Idx qr = q.bundle.mul.at(psi[x], psi[y]);
      if (qr == kUndef || psi[pr] != qr) report.add("hom-mul", {x, y});
    }

  for (Idx x = 0; x < p.size() && !done(); ++x)
    for (Idx y = 0; y < p.size() && !done(); ++y) {
      if (p.phi[x] != p.bundle.pi[y]) continue;
      Idx pr = p.tri.at(x, y);
      if (pr == kUndef) continue;
      if (q.phi[psi[x]] != q.bundle.pi[psi[y]]) continue;  // hom-phi/pi reported
      Idx qr = q.tri.at(psi[x], psi[y]);
      if (qr == kUndef || psi[pr] != qr) report.add("hom-tri", {x, y});
    }

  return report;
}

}  // namespace pgx
