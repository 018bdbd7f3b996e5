#include "sections.hpp"

namespace pgx {

SectionAlgebra section_algebra(const PostGroupoid& p, std::size_t cap) {
  require_post_groupoid_shape(p);
  const GroupBundle& b = p.bundle;
  auto fibers = b.fibers();

  long long count = 1;
  for (const auto& fiber : fibers) {
    count *= static_cast<long long>(fiber.size());
    if (count > static_cast<long long>(cap))
      fail(ErrorKind::Limit, "sections: fiber-size product exceeds the cap");
  }

  // Position of each total-space element within its fiber.
  std::vector<Idx> local(b.size, kUndef);
  for (const auto& fiber : fibers)
    for (std::size_t i = 0; i < fiber.size(); ++i)
      local[fiber[i]] = static_cast<Idx>(i);

  // Mixed-radix strides so a section's index is recoverable from its values.
  std::vector<long long> stride(b.base, 1);
  for (Idx m = b.base - 2; m >= 0; --m)
    stride[m] = stride[m + 1] * static_cast<long long>(fibers[m + 1].size());

  SectionAlgebra out;
  out.sections.reserve(static_cast<std::size_t>(count));
  std::vector<Idx> current(b.base, 0);
  for (long long s = 0; s < count; ++s) {
    long long rest = s;
    for (Idx m = 0; m < b.base; ++m) {
      current[m] = fibers[m][static_cast<std::size_t>(rest / stride[m])];
      rest %= stride[m];
    }
    out.sections.push_back(current);
  }

  auto index_of = [&](const std::vector<Idx>& section) {
    long long idx = 0;
    for (Idx m = 0; m < b.base; ++m)
      idx += stride[m] * static_cast<long long>(local[section[m]]);
    return static_cast<Idx>(idx);
  };

  Idx n = static_cast<Idx>(count);
  out.mul = Table2(n, n);
  out.tri = Table2(n, n);
  std::vector<Idx> value(b.base);
  for (Idx i = 0; i < n; ++i) {
    const auto& si = out.sections[i];
    for (Idx j = 0; j < n; ++j) {
      const auto& sj = out.sections[j];
      for (Idx m = 0; m < b.base; ++m) value[m] = b.mul_req(si[m], sj[m]);
      out.mul.at(i, j) = index_of(value);
      for (Idx m = 0; m < b.base; ++m)
        value[m] = p.tri_req(si[m], sj[p.phi[si[m]]]);
      out.tri.at(i, j) = index_of(value);
    }
  }

  out.bisection_mask.resize(n, 0);
  for (Idx i = 0; i < n; ++i) {
    std::vector<char> hit(b.base, 0);
    bool bijective = true;
    for (Idx m = 0; m < b.base; ++m) {
      Idx target = p.phi[out.sections[i][m]];
      if (hit[target]) {
        bijective = false;
        break;
      }
      hit[target] = 1;
    }
    out.bisection_mask[i] = bijective ? 1 : 0;
  }

  return out;
}

Report validate_section_algebra(const SectionAlgebra& s, const CheckOptions& opts) {
  Report report;
  auto done = [&] { return witness_quota_reached(report, opts); };
  Idx n = static_cast<Idx>(s.sections.size());

  for (Idx a = 0; a < n && !done(); ++a)
    for (Idx b = 0; b < n && !done(); ++b)
      for (Idx c = 0; c < n && !done(); ++c) {
        if (s.tri.at(a, s.mul.at(b, c)) !=
            s.mul.at(s.tri.at(a, b), s.tri.at(a, c)))
          report.add("sections-weak-distrib", {a, b, c});
        if (s.tri.at(s.mul.at(a, s.tri.at(a, b)), c) !=
            s.tri.at(a, s.tri.at(b, c)))
          report.add("sections-weak-assoc", {a, b, c});
      }

  long long bisections = 0;
  for (Idx a = 0; a < n && !done(); ++a) {
    if (!s.bisection_mask[a]) continue;
    ++bisections;
    std::vector<char> hit(n, 0);
    for (Idx b = 0; b < n; ++b) {
      Idx image = s.tri.at(a, b);
      if (hit[image]) {
        report.add("sections-bisection-bijective", {a});
        break;
      }
      hit[image] = 1;
    }
  }

  report.stats["sections"] = n;
  report.stats["bisections"] = bisections;
  return report;
}

}  // namespace pgx
