#pragma once

#include "post_groupoid.hpp"

namespace pgx {

// The full set of sections of the bundle of a post-groupoid, with the
// pointwise product and the induced section-level tri product. Sections are
// ordered lexicographically by their per-fiber choices.
struct SectionAlgebra {
  std::vector<std::vector<Idx>> sections;  // each: base -> total, pi o s = id
  Table2 mul;                              // section x section, total
  Table2 tri;                              // section x section, total
  std::vector<char> bisection_mask;        // phi o s bijective
};

// Builds the section tables. The number of sections is the product of the
// fiber sizes; exceeding the cap is a limit error.
SectionAlgebra section_algebra(const PostGroupoid& p, std::size_t cap = 1000000);

// Exhaustively verifies the weak post-group laws on all sections and that
// every masked section has a bijective left tri-multiplication on the full
// section set.
Report validate_section_algebra(const SectionAlgebra& s, const CheckOptions& opts = {});

}  // namespace pgx
