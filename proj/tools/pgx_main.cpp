// Command-line front end; all algebra goes through the C API in pgx.h.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "pgx.h"

namespace {

struct DocDeleter {
  void operator()(pgx_doc* d) const { pgx_doc_free(d); }
};
struct ReportDeleter {
  void operator()(pgx_report* r) const { pgx_report_free(r); }
};
using DocPtr = std::unique_ptr<pgx_doc, DocDeleter>;
using ReportPtr = std::unique_ptr<pgx_report, ReportDeleter>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  pgx_string_free(s);
  return out;
}

[[noreturn]] void die(const std::string& msg) {
  std::fprintf(stderr, "pgx: %s\n", msg.c_str());
  std::exit(2);
}

DocPtr load(const std::string& path) {
  pgx_doc* doc = nullptr;
  char* err = nullptr;
  if (pgx_doc_read_file(path.c_str(), &doc, &err) != PGX_OK)
    die(path + ": " + take_string(err));
  return DocPtr(doc);
}

// Prints violations one per line; returns the exit code for the report.
int drain_report(const pgx_report* report) {
  size_t n = pgx_report_violation_count(report);
  for (size_t i = 0; i < n; ++i) {
    char* line = nullptr;
    if (pgx_report_violation(report, i, &line) == PGX_OK)
      std::printf("%s\n", take_string(line).c_str());
  }
  size_t notes = pgx_report_note_count(report);
  for (size_t i = 0; i < notes; ++i) {
    char* line = nullptr;
    if (pgx_report_note(report, i, &line) == PGX_OK)
      std::printf("note: %s\n", take_string(line).c_str());
  }
  return pgx_report_ok(report) ? 0 : 1;
}

// Validates before a transform so axiom violations exit 1 with witnesses
// instead of surfacing as a precondition error.
void gate(const pgx_doc* doc) {
  pgx_report* report = nullptr;
  char* err = nullptr;
  if (pgx_check(doc, &report, &err) != PGX_OK) die(take_string(err));
  ReportPtr holder(report);
  if (!pgx_report_ok(report)) std::exit(drain_report(report));
}

int emit(const pgx_doc* doc) {
  char* text = nullptr;
  char* err = nullptr;
  if (pgx_doc_emit(doc, &text, &err) != PGX_OK) die(take_string(err));
  std::fputs(take_string(text).c_str(), stdout);
  return 0;
}

long long stat_or(const pgx_report* report, const char* key, long long fallback) {
  long long value = fallback;
  pgx_report_stat(report, key, &value);
  return value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite post-groupoid toolkit"};
  app.require_subcommand(1);

  std::string file, file_q, file_psi, to_kind;
  bool use_post = false, all_witnesses = false, bisections_only = false;
  bool count_only = false;
  bool rb_validate = false, rb_induced = false, rb_descendent = false,
       rb_matched = false;
  long long budget = 10000000;

  auto* check = app.add_subcommand("check", "validate a document against its axioms");
  check->add_option("file", file)->required();

  auto* gl = app.add_subcommand("gl", "induced groupoid of a post_groupoid");
  gl->add_option("file", file)->required();

  auto* from_action = app.add_subcommand("from-action", "post_groupoid from a group action");
  from_action->add_option("file", file)->required();
  from_action->add_flag("--post", use_post, "use the document's tri table");

  auto* ybe = app.add_subcommand("ybe", "build and verify the Yang-Baxter solution");
  ybe->add_option("file", file)->required();
  ybe->add_flag("--all-witnesses", all_witnesses, "report every failing triple");

  auto* convert = app.add_subcommand("convert", "post_groupoid <-> bracoid");
  convert->add_option("file", file)->required();
  convert->add_option("--to", to_kind, "bracoid or post_groupoid")->required();

  auto* rb = app.add_subcommand("rb", "relative Rota-Baxter transforms");
  rb->add_option("file", file)->required();
  rb->add_flag("--validate", rb_validate);
  rb->add_flag("--induced", rb_induced);
  rb->add_flag("--descendent", rb_descendent);
  rb->add_flag("--matched-pair", rb_matched);

  auto* sections = app.add_subcommand("sections", "section and bisection report");
  sections->add_option("file", file)->required();
  sections->add_flag("--bisections-only", bisections_only);

  auto* enumerate = app.add_subcommand("enumerate", "all post structures on a bundle");
  enumerate->add_option("file", file)->required();
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_option("--budget", budget, "search node budget");

  auto* hom = app.add_subcommand("hom", "post-groupoid homomorphism check");
  hom->add_option("file_p", file)->required();
  hom->add_option("file_q", file_q)->required();
  hom->add_option("file_psi", file_psi)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  char* err = nullptr;

  if (check->parsed()) {
    DocPtr doc = load(file);
    pgx_report* report = nullptr;
    if (pgx_check(doc.get(), &report, &err) != PGX_OK) die(take_string(err));
    ReportPtr holder(report);
    return drain_report(report);
  }

  if (gl->parsed()) {
    DocPtr doc = load(file);
    gate(doc.get());
    pgx_doc* out = nullptr;
    if (pgx_gl(doc.get(), &out, &err) != PGX_OK) die(take_string(err));
    DocPtr holder(out);
    return emit(out);
  }

  if (from_action->parsed()) {
    DocPtr doc = load(file);
    pgx_doc* out = nullptr;
    if (pgx_from_action(doc.get(), use_post ? 1 : 0, &out, &err) != PGX_OK)
      die(take_string(err));
    DocPtr holder(out);
    return emit(out);
  }

  if (ybe->parsed()) {
    DocPtr doc = load(file);
    pgx_doc* solution = nullptr;
    pgx_report* report = nullptr;
    if (pgx_ybe(doc.get(), all_witnesses ? 1 : 0, &solution, &report, &err) != PGX_OK)
      die(take_string(err));
    ReportPtr rep(report);
    DocPtr sol(solution);
    if (!solution) return drain_report(report);  // the input itself is invalid
    std::printf("pairs=%lld triples=%lld ybe=%s nondeg=%s\n",
                stat_or(report, "pairs", 0), stat_or(report, "triples", 0),
                stat_or(report, "ybe_ok", 0) ? "ok" : "fail",
                stat_or(report, "nondeg_ok", 0) ? "ok" : "fail");
    return drain_report(report);
  }

  if (convert->parsed()) {
    DocPtr doc = load(file);
    gate(doc.get());
    pgx_doc* out = nullptr;
    if (pgx_convert(doc.get(), to_kind.c_str(), &out, &err) != PGX_OK)
      die(take_string(err));
    DocPtr holder(out);
    return emit(out);
  }

  if (rb->parsed()) {
    int picked = (rb_validate ? 1 : 0) + (rb_induced ? 1 : 0) +
                 (rb_descendent ? 1 : 0) + (rb_matched ? 1 : 0);
    if (picked != 1)
      die("rb: pass exactly one of --validate, --induced, --descendent, --matched-pair");
    DocPtr doc = load(file);
    if (rb_validate) {
      pgx_report* report = nullptr;
      if (pgx_check(doc.get(), &report, &err) != PGX_OK) die(take_string(err));
      ReportPtr holder(report);
      return drain_report(report);
    }
    gate(doc.get());
    const char* mode = rb_induced ? "induced" : rb_descendent ? "descendent" : "matched-pair";
    pgx_doc* out = nullptr;
    if (pgx_rb_transform(doc.get(), mode, &out, &err) != PGX_OK) die(take_string(err));
    DocPtr holder(out);
    return emit(out);
  }

  if (sections->parsed()) {
    DocPtr doc = load(file);
    gate(doc.get());
    char* text = nullptr;
    if (pgx_sections(doc.get(), bisections_only ? 1 : 0, 0, &text, &err) != PGX_OK)
      die(take_string(err));
    std::fputs(take_string(text).c_str(), stdout);
    return 0;
  }

  if (enumerate->parsed()) {
    DocPtr doc = load(file);
    gate(doc.get());
    char* text = nullptr;
    long long count = 0;
    int complete = 1;
    if (pgx_enumerate(doc.get(), budget, count_only ? 1 : 0, &text, &count,
                      &complete, &err) != PGX_OK)
      die(take_string(err));
    std::fputs(take_string(text).c_str(), stdout);
    return complete ? 0 : 2;
  }

  if (hom->parsed()) {
    DocPtr doc_p = load(file);
    DocPtr doc_q = load(file_q);
    std::ifstream in(file_psi, std::ios::binary);
    if (!in) die(file_psi + ": cannot open");
    std::ostringstream psi;
    psi << in.rdbuf();
    pgx_report* report = nullptr;
    if (pgx_hom(doc_p.get(), doc_q.get(), psi.str().c_str(), &report, &err) != PGX_OK)
      die(take_string(err));
    ReportPtr holder(report);
    return drain_report(report);
  }

  return 2;
}
