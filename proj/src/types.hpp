#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pgx {

// Elements of every finite carrier are dense indices 0..n-1.
using Idx = std::int32_t;

// Sentinel marking undefined entries of partial tables.
inline constexpr Idx kUndef = -1;

inline constexpr std::size_t kNoLimit = static_cast<std::size_t>(-1);

enum class ErrorKind {
  Malformed,    // input tables/documents are not well-shaped
  BadInput,     // well-shaped data violating an operation precondition
  Limit,        // configured size or budget cap exceeded
  Internal,     // sentinel read where the defining condition holds
  Unsupported,  // operation not defined for this document kind
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

// Dense row-major table of element indices.
struct Table2 {
  Idx rows = 0;
  Idx cols = 0;
  std::vector<Idx> cells;

  Table2() = default;
  Table2(Idx r, Idx c, Idx fill = kUndef)
      : rows(r), cols(c), cells(static_cast<std::size_t>(r) * c, fill) {}

  Idx at(Idx r, Idx c) const {
    return cells[static_cast<std::size_t>(r) * cols + c];
  }
  Idx& at(Idx r, Idx c) { return cells[static_cast<std::size_t>(r) * cols + c]; }

  bool operator==(const Table2&) const = default;
};

struct Violation {
  std::string rule;
  std::vector<Idx> witness;

  bool operator==(const Violation&) const = default;
  auto operator<=>(const Violation&) const = default;
};

// Outcome of a validator. Empty violation list means every axiom held.
// notes carry non-fatal observations, stats carry scan counters and flags.
struct Report {
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  std::map<std::string, long long> stats;

  bool ok() const { return violations.empty(); }
  void add(std::string rule, std::vector<Idx> witness) {
    violations.push_back({std::move(rule), std::move(witness)});
  }
  void merge(Report other);
};

struct CheckOptions {
  // Stop collecting witnesses once this many were recorded.
  std::size_t max_witnesses = kNoLimit;
  // Surjectivity of structure maps is a violation on top-level inputs but
  // only a note on instances arising mid-computation.
  bool surjectivity_is_violation = true;
};

inline bool witness_quota_reached(const Report& r, const CheckOptions& o) {
  return r.violations.size() >= o.max_witnesses;
}

inline bool index_ok(Idx v, Idx n) { return v >= 0 && v < n; }

std::string violation_line(const Violation& v);

}  // namespace pgx
