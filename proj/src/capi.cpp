#include "pgx.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "driver.hpp"

using namespace pgx;

struct pgx_doc {
  Document doc;
};

struct pgx_report {
  Report report;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void set_error(char** errmsg, const std::string& msg) {
  if (errmsg) *errmsg = dup_string(msg);
}

pgx_status status_of(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Malformed: return PGX_ERR_MALFORMED;
    case ErrorKind::BadInput: return PGX_ERR_BAD_INPUT;
    case ErrorKind::Limit: return PGX_ERR_LIMIT;
    case ErrorKind::Internal: return PGX_ERR_INTERNAL;
    case ErrorKind::Unsupported: return PGX_ERR_UNSUPPORTED;
  }
  return PGX_ERR_INTERNAL;
}

template <typename Fn>
pgx_status guarded(char** errmsg, Fn&& fn) {
  try {
    fn();
    return PGX_OK;
  } catch (const Error& e) {
    set_error(errmsg, e.what());
    return status_of(e.kind());
  } catch (const std::exception& e) {
    set_error(errmsg, e.what());
    return PGX_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

pgx_status pgx_doc_parse(const char* text, pgx_doc** out, char** errmsg) {
  if (!text || !out) return PGX_ERR_NULL;
  return guarded(errmsg, [&] { *out = new pgx_doc{parse_document(text)}; });
}

pgx_status pgx_doc_read_file(const char* path, pgx_doc** out, char** errmsg) {
  if (!path || !out) return PGX_ERR_NULL;
  return guarded(errmsg, [&] {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Malformed, std::string("cannot open ") + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    *out = new pgx_doc{parse_document(buffer.str())};
  });
}

pgx_status pgx_doc_emit(const pgx_doc* doc, char** out, char** errmsg) {
  if (!doc || !out) return PGX_ERR_NULL;
  return guarded(errmsg, [&] { *out = dup_string(emit_document(doc->doc)); });
}

const char* pgx_doc_kind(const pgx_doc* doc) {
  return doc ? kind_name(doc->doc.kind) : "unknown";
}

void pgx_doc_free(pgx_doc* doc) { delete doc; }

void pgx_string_free(char* s) { std::free(s); }

int pgx_report_ok(const pgx_report* report) {
  return report && report->report.ok() ? 1 : 0;
}

size_t pgx_report_violation_count(const pgx_report* report) {
  return report ? report->report.violations.size() : 0;
}

pgx_status pgx_report_violation(const pgx_report* report, size_t i, char** out) {
  if (!report || !out || i >= report->report.violations.size()) return PGX_ERR_NULL;
  *out = dup_string(violation_line(report->report.violations[i]));
  return PGX_OK;
}

size_t pgx_report_note_count(const pgx_report* report) {
  return report ? report->report.notes.size() : 0;
}

pgx_status pgx_report_note(const pgx_report* report, size_t i, char** out) {
  if (!report || !out || i >= report->report.notes.size()) return PGX_ERR_NULL;
  *out = dup_string(report->report.notes[i]);
  return PGX_OK;
}

int pgx_report_stat(const pgx_report* report, const char* key, long long* value) {
  if (!report || !key) return 0;
  auto it = report->report.stats.find(key);
  if (it == report->report.stats.end()) return 0;
  if (value) *value = it->second;
  return 1;
}

void pgx_report_free(pgx_report* report) { delete report; }

pgx_status pgx_check(const pgx_doc* doc, pgx_report** out, char** errmsg) {
  if (!doc || !out) return PGX_ERR_NULL;
  return guarded(errmsg, [&] { *out = new pgx_report{run_check(doc->doc)}; });
}

pgx_status pgx_gl(const pgx_doc* doc, pgx_doc** out, char** errmsg) {
  if (!doc || !out) return PGX_ERR_NULL;
  return guarded(errmsg, [&] { *out = new pgx_doc{run_gl(doc->doc)}; });
}

pgx_status pgx_from_action(const pgx_doc* doc, int use_post, pgx_doc** out,
                           char** errmsg) {
  if (!doc || !out) return PGX_ERR_NULL;
  return guarded(errmsg,
                 [&] { *out = new pgx_doc{run_from_action(doc->doc, use_post != 0)}; });
}

pgx_status pgx_ybe(const pgx_doc* doc, int all_witnesses, pgx_doc** solution,
                   pgx_report** report, char** errmsg) {
  if (!doc || !report) return PGX_ERR_NULL;
  return guarded(errmsg, [&] {
    YbeOutcome outcome = run_ybe(doc->doc, all_witnesses != 0);
    if (!outcome.input_report.ok()) {
      *report = new pgx_report{std::move(outcome.input_report)};
      if (solution) *solution = nullptr;
      return;
    }
    *report = new pgx_report{std::move(outcome.report)};
    if (solution)
      *solution = outcome.solution ? new pgx_doc{std::move(*outcome.solution)} : nullptr;
  });
}

pgx_status pgx_convert(const pgx_doc* doc, const char* to_kind, pgx_doc** out,
                       char** errmsg) {
  if (!doc || !to_kind || !out) return PGX_ERR_NULL;
  return guarded(errmsg, [&] {
    auto kind = kind_from_name(to_kind);
    if (!kind)
      fail(ErrorKind::Unsupported, std::string("convert: unknown kind \"") + to_kind + "\"");
    *out = new pgx_doc{run_convert(doc->doc, *kind)};
  });
}

pgx_status pgx_rb_transform(const pgx_doc* doc, const char* mode, pgx_doc** out,
                            char** errmsg) {
  if (!doc || !mode || !out) return PGX_ERR_NULL;
  return guarded(errmsg, [&] { *out = new pgx_doc{run_rb_transform(doc->doc, mode)}; });
}

pgx_status pgx_sections(const pgx_doc* doc, int bisections_only, size_t cap,
                        char** out, char** errmsg) {
  if (!doc || !out) return PGX_ERR_NULL;
  return guarded(errmsg, [&] {
    *out = dup_string(
        run_sections(doc->doc, bisections_only != 0, cap == 0 ? 1000000 : cap));
  });
}

pgx_status pgx_enumerate(const pgx_doc* doc, long long budget, int count_only,
                         char** text, long long* count, int* complete,
                         char** errmsg) {
  if (!doc || !text) return PGX_ERR_NULL;
  return guarded(errmsg, [&] {
    EnumerateOutcome outcome =
        run_enumerate(doc->doc, budget <= 0 ? 10000000 : budget, count_only != 0);
    *text = dup_string(outcome.text);
    if (count) *count = outcome.count;
    if (complete) *complete = outcome.complete ? 1 : 0;
  });
}

pgx_status pgx_hom(const pgx_doc* p, const pgx_doc* q, const char* psi_json,
                   pgx_report** out, char** errmsg) {
  if (!p || !q || !psi_json || !out) return PGX_ERR_NULL;
  return guarded(errmsg, [&] {
    std::vector<Idx> psi = parse_index_array(psi_json);
    *out = new pgx_report{run_hom(p->doc, q->doc, psi)};
  });
}

}  // extern "C"
