#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>

#include "bracoid.hpp"

namespace pgx {

enum class Kind {
  Group,
  GroupAction,
  GroupBundle,
  PostGroupoid,
  Groupoid,
  RbInstance,
  BraidedQuiver,
  Bracoid,
  MatchedPair,
};

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(const std::string& name);

struct GroupActionData {
  FiniteGroup group;
  Idx m = 0;
  Table2 act;                // m x n
  std::optional<Table2> tri; // one-point post structure on the group
};

struct GroupBundleData {
  GroupBundle bundle;
  std::optional<std::vector<Idx>> phi;
};

// A parsed .pgx document: a kind tag, free-form meta strings and the
// kind-specific tables.
struct Document {
  Kind kind = Kind::Group;
  std::map<std::string, std::string> meta;
  std::variant<FiniteGroup, GroupActionData, GroupBundleData, PostGroupoid,
               Groupoid, RelativeRotaBaxter, BraidedQuiver, SkewLeftBracoid,
               MatchedPair>
      data;
};

// Parses the restricted JSON document format. Only objects, arrays,
// integers and strings are admitted; all indices are range-checked and the
// sentinel -1 is only accepted in partial tables. Errors carry the
// offending field path.
Document parse_document(const std::string& text);

// Canonical bytes: sorted keys, two-space indent, newline-terminated.
// emit(parse(emit(d))) == emit(d) for every valid document.
std::string emit_document(const Document& doc);

Document make_document(Kind kind, std::map<std::string, std::string> meta,
                       PostGroupoid p);
Document make_document(Kind kind, std::map<std::string, std::string> meta,
                       Groupoid g);
Document make_document(std::map<std::string, std::string> meta, BraidedQuiver bq);
Document make_document(std::map<std::string, std::string> meta, SkewLeftBracoid sb);
Document make_document(std::map<std::string, std::string> meta, MatchedPair mp);

// Parses a bare JSON array of indices (used for homomorphism tables).
std::vector<Idx> parse_index_array(const std::string& text);

}  // namespace pgx
