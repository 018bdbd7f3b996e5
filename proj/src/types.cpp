#include "types.hpp"

namespace pgx {

void Report::merge(Report other) {
  violations.insert(violations.end(),
                    std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
  notes.insert(notes.end(), std::make_move_iterator(other.notes.begin()),
               std::make_move_iterator(other.notes.end()));
  for (auto& [key, value] : other.stats) stats[key] = value;
}

std::string violation_line(const Violation& v) {
  std::string line = v.rule;
  for (Idx w : v.witness) {
    line += ' ';
    line += std::to_string(w);
  }
  return line;
}

}  // namespace pgx
