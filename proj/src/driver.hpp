#pragma once

#include "document.hpp"
#include "enumerate.hpp"
#include "sections.hpp"

namespace pgx {

// Kind-dispatched operations behind the document surface. Transforms
// require their input to satisfy the relevant axioms and throw BadInput
// otherwise; run_check is the non-throwing diagnosis path.
Report run_check(const Document& doc, std::size_t max_witnesses = kNoLimit);

Document run_gl(const Document& doc);
Document run_from_action(const Document& doc, bool post);

struct YbeOutcome {
  Report input_report;              // violations of the source structure
  Report report;                    // ybe + nondegeneracy, when input is ok
  std::optional<Document> solution; // absent when the input is invalid
};
YbeOutcome run_ybe(const Document& doc, bool all_witnesses);

Document run_convert(const Document& doc, Kind to);
Document run_rb_transform(const Document& doc, const std::string& mode);

std::string run_sections(const Document& doc, bool bisections_only,
                         std::size_t cap = 1000000);

struct EnumerateOutcome {
  std::string text;
  long long count = 0;
  bool complete = true;
};
EnumerateOutcome run_enumerate(const Document& doc, long long budget,
                               bool count_only);

Report run_hom(const Document& p, const Document& q, const std::vector<Idx>& psi);

}  // namespace pgx
