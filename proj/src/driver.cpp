#include "driver.hpp"

namespace pgx {

namespace {

const PostGroupoid& expect_post(const Document& doc, const char* op) {
  if (doc.kind != Kind::PostGroupoid)
    fail(ErrorKind::Unsupported,
         std::string(op) + ": expected a post_groupoid document, got " +
             kind_name(doc.kind));
  return std::get<PostGroupoid>(doc.data);
}

bool rule_has_prefix(const Violation& v, const char* prefix) {
  return v.rule.rfind(prefix, 0) == 0;
}

}  // namespace

Report run_check(const Document& doc, std::size_t max_witnesses) {
  CheckOptions opts;
  opts.max_witnesses = max_witnesses;
  switch (doc.kind) {
    case Kind::Group:
      return validate_group(std::get<FiniteGroup>(doc.data), opts);
    case Kind::GroupAction: {
      const auto& d = std::get<GroupActionData>(doc.data);
      Report report = validate_group(d.group, opts);
      if (d.tri) {
        // With a tri table the document describes a post structure acting
        // through its induced group; otherwise act must be a plain action.
        PostGroupoid pg = post_group(d.group, *d.tri);
        report.merge(validate_post_groupoid(pg, opts));
        if (report.ok()) {
          FiniteGroup star;
          star.n = d.group.n;
          star.id = d.group.id;
          star.mul = Table2(star.n, star.n);
          star.inv.resize(star.n);
          for (Idx a = 0; a < star.n; ++a)
            for (Idx b = 0; b < star.n; ++b)
              star.mul.at(a, b) = d.group.mul.at(a, d.tri->at(a, b));
          for (Idx a = 0; a < star.n; ++a)
            for (Idx b = 0; b < star.n; ++b)
              if (star.mul.at(a, b) == star.id) {
                star.inv[a] = b;
                break;
              }
          report.merge(validate_right_action(star, d.m, d.act, opts));
        }
      } else {
        report.merge(validate_right_action(d.group, d.m, d.act, opts));
      }
      return report;
    }
    case Kind::GroupBundle: {
      const auto& d = std::get<GroupBundleData>(doc.data);
      Report report = validate_group_bundle(d.bundle, opts);
      if (d.phi)
        for (Idx m = 0; m < d.bundle.base; ++m)
          if ((*d.phi)[d.bundle.unit[m]] != m) report.add("post-unit-anchor", {m});
      return report;
    }
    case Kind::PostGroupoid:
      return validate_post_groupoid(std::get<PostGroupoid>(doc.data), opts);
    case Kind::Groupoid:
      return validate_groupoid(std::get<Groupoid>(doc.data), opts);
    case Kind::RbInstance: {
      const auto& d = std::get<RelativeRotaBaxter>(doc.data);
      Report report = validate_groupoid(d.action.g, opts);
      report.merge(validate_group_bundle(d.action.h, opts));
      report.merge(validate_action(d.action, opts));
      report.merge(validate_rb(d, opts));
      return report;
    }
    case Kind::BraidedQuiver: {
      const auto& d = std::get<BraidedQuiver>(doc.data);
      Report report = verify_ybe(d, opts);
      report.merge(verify_nondegenerate(d, opts));
      return report;
    }
    case Kind::Bracoid:
      return validate_bracoid(std::get<SkewLeftBracoid>(doc.data), opts);
    case Kind::MatchedPair: {
      const auto& d = std::get<MatchedPair>(doc.data);
      Report report = validate_groupoid(d.g, opts);
      report.merge(validate_groupoid(d.k, opts));
      MatchedPairOptions mp_opts;
      mp_opts.max_witnesses = max_witnesses;
      report.merge(validate_matched_pair(d, mp_opts));
      return report;
    }
  }
  fail(ErrorKind::Internal, "check: unhandled document kind");
}

Document run_gl(const Document& doc) {
  const PostGroupoid& p = expect_post(doc, "gl");
  require_valid_post_groupoid(p);
  return make_document(Kind::Groupoid, doc.meta, grossman_larson(p));
}

Document run_from_action(const Document& doc, bool post) {
  if (doc.kind != Kind::GroupAction)
    fail(ErrorKind::Unsupported, "from-action: expected a group_action document");
  const auto& d = std::get<GroupActionData>(doc.data);
  if (post) {
    if (!d.tri)
      fail(ErrorKind::BadInput, "from-action: --post requires a tri table");
    PostGroupoid pg = post_group(d.group, *d.tri);
    return make_document(Kind::PostGroupoid, doc.meta,
                         from_post_group_action(pg, d.m, d.act));
  }
  return make_document(Kind::PostGroupoid, doc.meta,
                       from_group_action(d.group, d.m, d.act));
}

YbeOutcome run_ybe(const Document& doc, bool all_witnesses) {
  YbeOutcome out;
  BraidedQuiver solution;
  switch (doc.kind) {
    case Kind::PostGroupoid: {
      const auto& p = std::get<PostGroupoid>(doc.data);
      out.input_report = validate_post_groupoid(p);
      if (!out.input_report.ok()) return out;
      solution = solution_from_post_groupoid(p);
      break;
    }
    case Kind::Bracoid: {
      const auto& sb = std::get<SkewLeftBracoid>(doc.data);
      out.input_report = validate_bracoid(sb);
      if (!out.input_report.ok()) return out;
      solution = solution_from_bracoid(sb);
      break;
    }
    case Kind::RbInstance: {
      const auto& r = std::get<RelativeRotaBaxter>(doc.data);
      out.input_report = validate_groupoid(r.action.g);
      out.input_report.merge(validate_group_bundle(r.action.h));
      out.input_report.merge(validate_action(r.action));
      out.input_report.merge(validate_rb(r));
      if (!out.input_report.ok()) return out;
      solution = solution_from_rb(r);
      break;
    }
    default:
      fail(ErrorKind::Unsupported,
           "ybe: expected a post_groupoid, bracoid or rb_instance document");
  }

  CheckOptions opts;
  opts.max_witnesses = all_witnesses ? kNoLimit : 1;
  out.report = verify_ybe(solution, opts);
  out.report.merge(verify_nondegenerate(solution, opts));
  bool ybe_ok = true, nondeg_ok = true;
  for (const auto& v : out.report.violations) {
    if (rule_has_prefix(v, "nondeg-"))
      nondeg_ok = false;
    else
      ybe_ok = false;
  }
  out.report.stats["ybe_ok"] = ybe_ok ? 1 : 0;
  out.report.stats["nondeg_ok"] = nondeg_ok ? 1 : 0;
  out.solution = make_document(doc.meta, std::move(solution));
  return out;
}

Document run_convert(const Document& doc, Kind to) {
  if (to == Kind::Bracoid)
    return make_document(doc.meta, bracoid_from_post(expect_post(doc, "convert")));
  if (to == Kind::PostGroupoid) {
    if (doc.kind != Kind::Bracoid)
      fail(ErrorKind::Unsupported, "convert: expected a bracoid document");
    return make_document(Kind::PostGroupoid, doc.meta,
                         post_from_bracoid(std::get<SkewLeftBracoid>(doc.data)));
  }
  fail(ErrorKind::Unsupported, "convert: target must be bracoid or post_groupoid");
}

Document run_rb_transform(const Document& doc, const std::string& mode) {
  if (doc.kind != Kind::RbInstance)
    fail(ErrorKind::Unsupported, "rb: expected an rb_instance document");
  const auto& r = std::get<RelativeRotaBaxter>(doc.data);
  if (mode == "induced")
    return make_document(Kind::PostGroupoid, doc.meta, induced_post_groupoid(r));
  if (mode == "descendent")
    return make_document(Kind::Groupoid, doc.meta, descendent_groupoid(r));
  if (mode == "matched-pair") {
    require_valid_rb(r);
    return make_document(doc.meta, matched_pair_from_rb(r));
  }
  fail(ErrorKind::Unsupported, "rb: unknown transform \"" + mode + "\"");
}

std::string run_sections(const Document& doc, bool bisections_only,
                         std::size_t cap) {
  const PostGroupoid& p = expect_post(doc, "sections");
  require_valid_post_groupoid(p);
  SectionAlgebra algebra = section_algebra(p, cap);
  Report report = validate_section_algebra(algebra);

  bool weak_ok = true;
  for (const auto& v : report.violations)
    if (rule_has_prefix(v, "sections-weak-")) weak_ok = false;

  Idx n = static_cast<Idx>(algebra.sections.size());
  std::string out;
  out += "sections=" + std::to_string(n) + "\n";
  out += "bisections=" + std::to_string(report.stats["bisections"]) + "\n";
  out += std::string("weak_laws=") + (weak_ok ? "ok" : "fail") + "\n";
  for (Idx i = 0; i < n; ++i) {
    bool bisection = algebra.bisection_mask[i];
    if (bisections_only && !bisection) continue;
    std::vector<char> seen(n, 0);
    bool bijective = true;
    for (Idx j = 0; j < n; ++j) {
      Idx image = algebra.tri.at(i, j);
      if (seen[image]) {
        bijective = false;
        break;
      }
      seen[image] = 1;
    }
    out += "section " + std::to_string(i) + " values=[";
    for (std::size_t m = 0; m < algebra.sections[i].size(); ++m) {
      if (m) out += ',';
      out += std::to_string(algebra.sections[i][m]);
    }
    out += std::string("] bisection=") + (bisection ? "1" : "0") +
           " left_bijective=" + (bijective ? "1" : "0") + "\n";
  }
  return out;
}

EnumerateOutcome run_enumerate(const Document& doc, long long budget,
                               bool count_only) {
  const GroupBundle* bundle = nullptr;
  const std::vector<Idx>* phi = nullptr;
  if (doc.kind == Kind::PostGroupoid) {
    const auto& p = std::get<PostGroupoid>(doc.data);
    bundle = &p.bundle;
    phi = &p.phi;
  } else if (doc.kind == Kind::GroupBundle) {
    const auto& d = std::get<GroupBundleData>(doc.data);
    if (!d.phi)
      fail(ErrorKind::BadInput, "enumerate: group_bundle document has no phi table");
    bundle = &d.bundle;
    phi = &*d.phi;
  } else {
    fail(ErrorKind::Unsupported,
         "enumerate: expected a post_groupoid or group_bundle document");
  }

  EnumerationResult result = enumerate_post_structures(*bundle, *phi, budget);
  EnumerateOutcome out;
  out.count = static_cast<long long>(result.structures.size());
  out.complete = result.complete;
  if (count_only) {
    out.text = "count=" + std::to_string(out.count) + "\n";
  } else {
    for (auto& p : result.structures)
      out.text += emit_document(make_document(Kind::PostGroupoid, {}, std::move(p)));
  }
  if (!result.complete) out.text += "partial=true\n";
  return out;
}

Report run_hom(const Document& p, const Document& q, const std::vector<Idx>& psi) {
  return check_post_homomorphism(expect_post(p, "hom"), expect_post(q, "hom"), psi);
}

}  // namespace pgx
