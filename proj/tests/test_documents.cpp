#include <doctest.h>

#include "catalog.hpp"
#include "driver.hpp"

using namespace pgx;
using namespace pgx::testcat;

namespace {

std::vector<Document> catalog_documents() {
  std::vector<Document> docs;
  PostGroupoid a = instance_a();

  Document group_doc;
  group_doc.kind = Kind::Group;
  group_doc.meta = {{"name", "z3"}};
  group_doc.data = cyclic_group(3);
  docs.push_back(group_doc);

  Document action_doc;
  action_doc.kind = Kind::GroupAction;
  GroupActionData act{cyclic_group(3), 3, addition_action(3), trivial_tri(cyclic_group(3))};
  action_doc.data = act;
  docs.push_back(action_doc);

  Document bundle_doc;
  bundle_doc.kind = Kind::GroupBundle;
  bundle_doc.data = GroupBundleData{a.bundle, a.phi};
  docs.push_back(bundle_doc);

  docs.push_back(make_document(Kind::PostGroupoid, {{"name", "z3-post"}}, a));
  docs.push_back(make_document(Kind::Groupoid, {}, grossman_larson(a)));

  RelativeRotaBaxter rb;
  rb.action = gl_action(a);
  rb.b.resize(a.size());
  for (Idx i = 0; i < a.size(); ++i) rb.b[i] = i;
  Document rb_doc;
  rb_doc.kind = Kind::RbInstance;
  rb_doc.data = rb;
  docs.push_back(rb_doc);

  docs.push_back(make_document({}, solution_from_post_groupoid(a)));
  docs.push_back(make_document({}, bracoid_from_post(a)));
  docs.push_back(make_document({}, matched_pair_from_rb(rb)));
  return docs;
}

}  // namespace

TEST_CASE("emit then parse is the identity on canonical bytes for every kind") {
  for (const auto& doc : catalog_documents()) {
    INFO(kind_name(doc.kind));
    std::string first = emit_document(doc);
    Document parsed = parse_document(first);
    CHECK(parsed.kind == doc.kind);
    CHECK(emit_document(parsed) == first);
  }
}

TEST_CASE("canonical form is newline-terminated and stable across emissions") {
  for (const auto& doc : catalog_documents()) {
    std::string once = emit_document(doc);
    REQUIRE_FALSE(once.empty());
    CHECK(once.back() == '\n');
    CHECK(emit_document(doc) == once);
  }
}

TEST_CASE("checks pass for all catalog documents") {
  for (const auto& doc : catalog_documents()) {
    INFO(kind_name(doc.kind));
    CHECK(run_check(doc).ok());
  }
}

TEST_CASE("empty input is a parse error") {
  CHECK_THROWS_AS(parse_document(""), Error);
}

TEST_CASE("out-of-range index names the offending field") {
  std::string text = R"({
  "kind": "group",
  "payload": {"n": 2, "mul": [[0, 1], [1, 0]], "id": 0, "inv": [0, 7]}
})";
  try {
    parse_document(text);
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Malformed);
    CHECK(std::string(e.what()).find("$.payload.inv[1]") != std::string::npos);
  }
}

TEST_CASE("floats, booleans and null are rejected") {
  CHECK_THROWS_AS(
      parse_document(R"({"kind":"group","payload":{"n":1.5,"mul":[[0]],"id":0,"inv":[0]}})"),
      Error);
  CHECK_THROWS_AS(
      parse_document(R"({"kind":"group","payload":{"n":true,"mul":[[0]],"id":0,"inv":[0]}})"),
      Error);
  CHECK_THROWS_AS(
      parse_document(R"({"kind":"group","payload":{"n":null,"mul":[[0]],"id":0,"inv":[0]}})"),
      Error);
}

TEST_CASE("unknown kinds and stray fields are rejected") {
  CHECK_THROWS_AS(parse_document(R"({"kind":"ring","payload":{}})"), Error);
  CHECK_THROWS_AS(
      parse_document(R"({"kind":"group","payload":{"n":1,"mul":[[0]],"id":0,"inv":[0],"extra":[]}})"),
      Error);
  CHECK_THROWS_AS(
      parse_document(R"({"kind":"group","payload":{"n":1,"mul":[[0]],"id":0,"inv":[0]},"junk":1})"),
      Error);
}

TEST_CASE("meta values must be strings") {
  CHECK_THROWS_AS(
      parse_document(R"({"kind":"group","meta":{"a":1},"payload":{"n":1,"mul":[[0]],"id":0,"inv":[0]}})"),
      Error);
}

TEST_CASE("the sentinel is rejected in total tables but accepted in partial ones") {
  CHECK_THROWS_AS(
      parse_document(R"({"kind":"group","payload":{"n":1,"mul":[[-1]],"id":0,"inv":[0]}})"),
      Error);
  Document doc = make_document(Kind::PostGroupoid, {}, instance_d());
  std::string text = emit_document(doc);
  CHECK(text.find("-1") != std::string::npos);  // tri is partial
  CHECK(parse_document(text).kind == Kind::PostGroupoid);
}

TEST_CASE("two equal documents emit identical bytes") {
  Document a = make_document(Kind::PostGroupoid, {{"name", "x"}}, instance_a());
  Document b = make_document(Kind::PostGroupoid, {{"name", "x"}}, instance_a());
  CHECK(emit_document(a) == emit_document(b));
}

TEST_CASE("bare index arrays parse with range checking") {
  CHECK(parse_index_array("[0, 1, 2]") == std::vector<Idx>{0, 1, 2});
  CHECK_THROWS_AS(parse_index_array("{\"a\":1}"), Error);
  CHECK_THROWS_AS(parse_index_array("[0, -1]"), Error);
  CHECK_THROWS_AS(parse_index_array("[0, 1.5]"), Error);
}

TEST_CASE("check dispatch flags violating documents of each kind") {
  FiniteGroup bad = cyclic_group(3);
  bad.mul.at(1, 1) = 1;
  Document doc;
  doc.kind = Kind::Group;
  doc.data = bad;
  CHECK_FALSE(run_check(doc).ok());

  PostGroupoid p = instance_a();
  p.tri.at(1, 5) = 1;
  CHECK_FALSE(run_check(make_document(Kind::PostGroupoid, {}, p)).ok());
}

TEST_CASE("group_action documents validate their action laws") {
  GroupActionData d{cyclic_group(3), 3, addition_action(3), std::nullopt};
  Document doc;
  doc.kind = Kind::GroupAction;
  doc.data = d;
  CHECK(run_check(doc).ok());

  d.act.at(1, 1) = 1;
  doc.data = d;
  Report r = run_check(doc);
  REQUIRE_FALSE(r.ok());
  bool action_rule = false;
  for (const auto& v : r.violations)
    if (v.rule.rfind("action-", 0) == 0) action_rule = true;
  CHECK(action_rule);
}

TEST_CASE("transforms preserve meta so conversion round trips are byte-identical") {
  Document doc = make_document(Kind::PostGroupoid, {{"name", "roundtrip"}},
                               instance_a());
  std::string canonical = emit_document(doc);
  Document bracoid = run_convert(doc, Kind::Bracoid);
  Document back = run_convert(bracoid, Kind::PostGroupoid);
  CHECK(emit_document(back) == canonical);
}

TEST_CASE("ybe driver reports counts and builds the solution document") {
  Document doc = make_document(Kind::PostGroupoid, {}, instance_a());
  YbeOutcome outcome = run_ybe(doc, true);
  REQUIRE(outcome.input_report.ok());
  REQUIRE(outcome.solution.has_value());
  CHECK(outcome.report.ok());
  CHECK(outcome.report.stats.at("pairs") == 27);
  CHECK(outcome.report.stats.at("triples") == 81);
  CHECK(outcome.report.stats.at("ybe_ok") == 1);
  CHECK(outcome.report.stats.at("nondeg_ok") == 1);
  CHECK(run_check(*outcome.solution).ok());
}

TEST_CASE("ybe driver accepts bracoid and operator documents") {
  Document post = make_document(Kind::PostGroupoid, {}, instance_a());
  Document bracoid = run_convert(post, Kind::Bracoid);
  YbeOutcome via_bracoid = run_ybe(bracoid, false);
  REQUIRE(via_bracoid.solution.has_value());
  CHECK(via_bracoid.report.ok());

  RelativeRotaBaxter rb;
  PostGroupoid a = instance_a();
  rb.action = gl_action(a);
  rb.b.resize(a.size());
  for (Idx i = 0; i < a.size(); ++i) rb.b[i] = i;
  Document rb_doc;
  rb_doc.kind = Kind::RbInstance;
  rb_doc.data = rb;
  YbeOutcome via_rb = run_ybe(rb_doc, false);
  REQUIRE(via_rb.solution.has_value());
  CHECK(via_rb.report.ok());
  CHECK(emit_document(*via_rb.solution) == emit_document(*via_bracoid.solution));
}

TEST_CASE("sections driver output is deterministic and matches the z2 instance") {
  Document doc = make_document(Kind::PostGroupoid, {}, instance_d());
  std::string report = run_sections(doc, false);
  CHECK(report == run_sections(doc, false));
  CHECK(report.find("sections=4\n") != std::string::npos);
  CHECK(report.find("bisections=2\n") != std::string::npos);
  CHECK(report.find("weak_laws=ok\n") != std::string::npos);
  std::string only = run_sections(doc, true);
  CHECK(only.find("section 1 ") == std::string::npos);
  CHECK(only.find("section 0 ") != std::string::npos);
  CHECK(only.find("section 3 ") != std::string::npos);
}

TEST_CASE("enumerate driver emits parseable structures and counts") {
  Document doc = make_document(Kind::PostGroupoid, {},
                               trivial_post_group(cyclic_group(2)));
  EnumerateOutcome counted = run_enumerate(doc, 1000000, true);
  CHECK(counted.text == "count=1\n");
  CHECK(counted.complete);
  EnumerateOutcome full = run_enumerate(doc, 1000000, false);
  CHECK(full.count == 1);
  Document parsed = parse_document(full.text);
  CHECK(parsed.kind == Kind::PostGroupoid);
  CHECK(run_check(parsed).ok());
}

TEST_CASE("hom driver accepts the collapse and rejects a broken map") {
  FiniteGroup z4 = cyclic_group(4);
  FiniteGroup z2 = cyclic_group(2);
  Document p = make_document(Kind::PostGroupoid, {},
                             from_group_action(z4, 2, trivial_action(2, z4)));
  Document q = make_document(Kind::PostGroupoid, {},
                             from_group_action(z2, 2, trivial_action(2, z2)));
  std::vector<Idx> psi(8);
  for (Idx m = 0; m < 2; ++m)
    for (Idx g = 0; g < 4; ++g) psi[m * 4 + g] = m * 2 + g % 2;
  CHECK(run_hom(p, q, psi).ok());
  psi[1] = 0;
  CHECK_FALSE(run_hom(p, q, psi).ok());
}

TEST_CASE("unsupported kinds are reported as such") {
  Document doc;
  doc.kind = Kind::Group;
  doc.data = cyclic_group(2);
  CHECK_THROWS_AS(run_gl(doc), Error);
  try {
    run_gl(doc);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Unsupported);
  }
}
