#include "document.hpp"

#include <json.hpp>

namespace pgx {

using json = nlohmann::json;

namespace {

struct KindEntry {
  Kind kind;
  const char* name;
};

constexpr KindEntry kKinds[] = {
    {Kind::Group, "group"},
    {Kind::GroupAction, "group_action"},
    {Kind::GroupBundle, "group_bundle"},
    {Kind::PostGroupoid, "post_groupoid"},
    {Kind::Groupoid, "groupoid"},
    {Kind::RbInstance, "rb_instance"},
    {Kind::BraidedQuiver, "braided_quiver"},
    {Kind::Bracoid, "bracoid"},
    {Kind::MatchedPair, "matched_pair"},
};

[[noreturn]] void bad(const std::string& path, const std::string& what) {
  fail(ErrorKind::Malformed, path + ": " + what);
}

void reject_rich_values(const json& j, const std::string& path) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      reject_rich_values(it.value(), path + "." + it.key());
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i)
      reject_rich_values(j[i], path + "[" + std::to_string(i) + "]");
  } else if (!j.is_string() && !j.is_number_integer()) {
    bad(path, "only objects, arrays, integers and strings are allowed");
  }
}

const json& need(const json& obj, const std::string& path, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) bad(path, std::string("missing field \"") + key + "\"");
  return *it;
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) bad(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : required) known = known || it.key() == k;
    for (const char* k : optional) known = known || it.key() == k;
    if (!known) bad(path, "unknown field \"" + it.key() + "\"");
  }
  for (const char* k : required) need(obj, path, k);
}

Idx need_count(const json& obj, const std::string& path, const char* key) {
  const json& j = need(obj, path, key);
  if (!j.is_number_integer()) bad(path + "." + key, "expected an integer");
  long long v = j.get<long long>();
  if (v < 1 || v > 1000000) bad(path + "." + key, "count out of range");
  return static_cast<Idx>(v);
}

Idx need_index(const json& j, const std::string& path, Idx range, bool sentinel_ok) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  long long v = j.get<long long>();
  if (sentinel_ok && v == -1) return kUndef;
  if (v < 0 || v >= range)
    bad(path, "index " + std::to_string(v) + " out of range [0," +
                  std::to_string(range) + ")");
  return static_cast<Idx>(v);
}

std::vector<Idx> need_vec(const json& obj, const std::string& path, const char* key,
                          Idx len, Idx range, bool sentinel_ok = false) {
  const json& j = need(obj, path, key);
  std::string at = path + "." + key;
  if (!j.is_array()) bad(at, "expected an array");
  if (static_cast<Idx>(j.size()) != len)
    bad(at, "expected " + std::to_string(len) + " entries, found " +
                std::to_string(j.size()));
  std::vector<Idx> out(len);
  for (Idx i = 0; i < len; ++i)
    out[i] = need_index(j[i], at + "[" + std::to_string(i) + "]", range, sentinel_ok);
  return out;
}

Table2 need_table(const json& obj, const std::string& path, const char* key,
                  Idx rows, Idx cols, Idx range, bool sentinel_ok) {
  const json& j = need(obj, path, key);
  std::string at = path + "." + key;
  if (!j.is_array()) bad(at, "expected an array of rows");
  if (static_cast<Idx>(j.size()) != rows)
    bad(at, "expected " + std::to_string(rows) + " rows, found " +
                std::to_string(j.size()));
  Table2 out(rows, cols);
  for (Idx r = 0; r < rows; ++r) {
    const json& row = j[r];
    std::string rat = at + "[" + std::to_string(r) + "]";
    if (!row.is_array()) bad(rat, "expected an array");
    if (static_cast<Idx>(row.size()) != cols)
      bad(rat, "expected " + std::to_string(cols) + " entries, found " +
                   std::to_string(row.size()));
    for (Idx c = 0; c < cols; ++c)
      out.at(r, c) = need_index(row[c], rat + "[" + std::to_string(c) + "]",
                                range, sentinel_ok);
  }
  return out;
}

FiniteGroup parse_group(const json& j, const std::string& path) {
  check_keys(j, path, {"n", "mul", "id", "inv"});
  FiniteGroup g;
  g.n = need_count(j, path, "n");
  g.mul = need_table(j, path, "mul", g.n, g.n, g.n, false);
  g.id = need_index(need(j, path, "id"), path + ".id", g.n, false);
  g.inv = need_vec(j, path, "inv", g.n, g.n);
  return g;
}

GroupBundle parse_bundle_fields(const json& j, const std::string& path) {
  GroupBundle b;
  b.base = need_count(j, path, "base");
  b.size = need_count(j, path, "size");
  b.pi = need_vec(j, path, "pi", b.size, b.base);
  b.mul = need_table(j, path, "mul", b.size, b.size, b.size, true);
  b.unit = need_vec(j, path, "unit", b.base, b.size);
  b.inv = need_vec(j, path, "inv", b.size, b.size);
  return b;
}

Groupoid parse_groupoid(const json& j, const std::string& path) {
  check_keys(j, path, {"base", "arrows", "alpha", "beta", "mul", "unit", "inv"});
  Groupoid g;
  g.base = need_count(j, path, "base");
  g.arrows = need_count(j, path, "arrows");
  g.alpha = need_vec(j, path, "alpha", g.arrows, g.base);
  g.beta = need_vec(j, path, "beta", g.arrows, g.base);
  g.mul = need_table(j, path, "mul", g.arrows, g.arrows, g.arrows, true);
  g.unit = need_vec(j, path, "unit", g.base, g.arrows);
  g.inv = need_vec(j, path, "inv", g.arrows, g.arrows);
  return g;
}

json group_payload(const FiniteGroup& g);
json groupoid_payload(const Groupoid& g);

json table_json(const Table2& t) {
  json rows = json::array();
  for (Idx r = 0; r < t.rows; ++r) {
    json row = json::array();
    for (Idx c = 0; c < t.cols; ++c) row.push_back(t.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vec_json(const std::vector<Idx>& v) { return json(v); }

json group_payload(const FiniteGroup& g) {
  json j;
  j["n"] = g.n;
  j["mul"] = table_json(g.mul);
  j["id"] = g.id;
  j["inv"] = vec_json(g.inv);
  return j;
}

void bundle_payload_fields(json& j, const GroupBundle& b) {
  j["base"] = b.base;
  j["size"] = b.size;
  j["pi"] = vec_json(b.pi);
  j["mul"] = table_json(b.mul);
  j["unit"] = vec_json(b.unit);
  j["inv"] = vec_json(b.inv);
}

json groupoid_payload(const Groupoid& g) {
  json j;
  j["base"] = g.base;
  j["arrows"] = g.arrows;
  j["alpha"] = vec_json(g.alpha);
  j["beta"] = vec_json(g.beta);
  j["mul"] = table_json(g.mul);
  j["unit"] = vec_json(g.unit);
  j["inv"] = vec_json(g.inv);
  return j;
}

}  // namespace

const char* kind_name(Kind k) {
  for (const auto& entry : kKinds)
    if (entry.kind == k) return entry.name;
  return "unknown";
}

std::optional<Kind> kind_from_name(const std::string& name) {
  for (const auto& entry : kKinds)
    if (name == entry.name) return entry.kind;
  return std::nullopt;
}

Document parse_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Malformed, std::string("syntax: ") + e.what());
  }
  reject_rich_values(root, "$");
  if (!root.is_object()) bad("$", "expected a document object");
  check_keys(root, "$", {"kind", "payload"}, {"meta"});

  const json& kind_field = need(root, "$", "kind");
  if (!kind_field.is_string()) bad("$.kind", "expected a string");
  auto kind = kind_from_name(kind_field.get<std::string>());
  if (!kind) bad("$.kind", "unknown kind \"" + kind_field.get<std::string>() + "\"");

  Document doc;
  doc.kind = *kind;
  if (auto it = root.find("meta"); it != root.end()) {
    if (!it->is_object()) bad("$.meta", "expected an object");
    for (auto m = it->begin(); m != it->end(); ++m) {
      if (!m.value().is_string()) bad("$.meta." + m.key(), "expected a string");
      doc.meta[m.key()] = m.value().get<std::string>();
    }
  }

  const json& p = need(root, "$", "payload");
  const std::string at = "$.payload";
  if (!p.is_object()) bad(at, "expected an object");

  switch (doc.kind) {
    case Kind::Group:
      doc.data = parse_group(p, at);
      break;
    case Kind::GroupAction: {
      check_keys(p, at, {"group", "m", "act"}, {"tri"});
      GroupActionData d;
      d.group = parse_group(need(p, at, "group"), at + ".group");
      d.m = need_count(p, at, "m");
      d.act = need_table(p, at, "act", d.m, d.group.n, d.m, false);
      if (p.contains("tri"))
        d.tri = need_table(p, at, "tri", d.group.n, d.group.n, d.group.n, false);
      doc.data = std::move(d);
      break;
    }
    case Kind::GroupBundle: {
      check_keys(p, at, {"base", "size", "pi", "mul", "unit", "inv"}, {"phi"});
      GroupBundleData d;
      d.bundle = parse_bundle_fields(p, at);
      if (p.contains("phi"))
        d.phi = need_vec(p, at, "phi", d.bundle.size, d.bundle.base);
      doc.data = std::move(d);
      break;
    }
    case Kind::PostGroupoid: {
      check_keys(p, at, {"base", "size", "pi", "mul", "unit", "inv", "phi", "tri"});
      PostGroupoid d;
      d.bundle = parse_bundle_fields(p, at);
      d.phi = need_vec(p, at, "phi", d.bundle.size, d.bundle.base);
      d.tri = need_table(p, at, "tri", d.bundle.size, d.bundle.size, d.bundle.size, true);
      doc.data = std::move(d);
      break;
    }
    case Kind::Groupoid:
      doc.data = parse_groupoid(p, at);
      break;
    case Kind::RbInstance: {
      check_keys(p, at, {"groupoid", "bundle", "act", "b"});
      RelativeRotaBaxter d;
      d.action.g = parse_groupoid(need(p, at, "groupoid"), at + ".groupoid");
      const json& bj = need(p, at, "bundle");
      check_keys(bj, at + ".bundle", {"base", "size", "pi", "mul", "unit", "inv"});
      d.action.h = parse_bundle_fields(bj, at + ".bundle");
      d.action.act = need_table(p, at, "act", d.action.g.arrows, d.action.h.size,
                                d.action.h.size, true);
      d.b = need_vec(p, at, "b", d.action.h.size, d.action.g.arrows);
      doc.data = std::move(d);
      break;
    }
    case Kind::BraidedQuiver: {
      check_keys(p, at, {"base", "arrows", "alpha", "beta", "left", "right"});
      BraidedQuiver d;
      d.quiver.base = need_count(p, at, "base");
      d.quiver.arrows = need_count(p, at, "arrows");
      d.quiver.alpha = need_vec(p, at, "alpha", d.quiver.arrows, d.quiver.base);
      d.quiver.beta = need_vec(p, at, "beta", d.quiver.arrows, d.quiver.base);
      d.left = need_table(p, at, "left", d.quiver.arrows, d.quiver.arrows,
                          d.quiver.arrows, true);
      d.right = need_table(p, at, "right", d.quiver.arrows, d.quiver.arrows,
                           d.quiver.arrows, true);
      doc.data = std::move(d);
      break;
    }
    case Kind::Bracoid: {
      check_keys(p, at,
                 {"base", "size", "pi", "mul", "unit", "inv", "beta", "star", "ginv"});
      SkewLeftBracoid d;
      d.bundle = parse_bundle_fields(p, at);
      d.gpd.base = d.bundle.base;
      d.gpd.arrows = d.bundle.size;
      d.gpd.alpha = d.bundle.pi;
      d.gpd.beta = need_vec(p, at, "beta", d.bundle.size, d.bundle.base);
      d.gpd.mul = need_table(p, at, "star", d.bundle.size, d.bundle.size,
                             d.bundle.size, true);
      d.gpd.unit = d.bundle.unit;
      d.gpd.inv = need_vec(p, at, "ginv", d.bundle.size, d.bundle.size);
      doc.data = std::move(d);
      break;
    }
    case Kind::MatchedPair: {
      check_keys(p, at, {"g", "k", "left", "right"});
      MatchedPair d;
      d.g = parse_groupoid(need(p, at, "g"), at + ".g");
      d.k = parse_groupoid(need(p, at, "k"), at + ".k");
      d.left = need_table(p, at, "left", d.g.arrows, d.k.arrows, d.k.arrows, true);
      d.right = need_table(p, at, "right", d.g.arrows, d.k.arrows, d.g.arrows, true);
      doc.data = std::move(d);
      break;
    }
  }
  return doc;
}

std::string emit_document(const Document& doc) {
  json root;
  root["kind"] = kind_name(doc.kind);
  if (!doc.meta.empty()) {
    json meta;
    for (const auto& [key, value] : doc.meta) meta[key] = value;
    root["meta"] = std::move(meta);
  }

  json p;
  switch (doc.kind) {
    case Kind::Group:
      p = group_payload(std::get<FiniteGroup>(doc.data));
      break;
    case Kind::GroupAction: {
      const auto& d = std::get<GroupActionData>(doc.data);
      p["group"] = group_payload(d.group);
      p["m"] = d.m;
      p["act"] = table_json(d.act);
      if (d.tri) p["tri"] = table_json(*d.tri);
      break;
    }
    case Kind::GroupBundle: {
      const auto& d = std::get<GroupBundleData>(doc.data);
      bundle_payload_fields(p, d.bundle);
      if (d.phi) p["phi"] = vec_json(*d.phi);
      break;
    }
    case Kind::PostGroupoid: {
      const auto& d = std::get<PostGroupoid>(doc.data);
      bundle_payload_fields(p, d.bundle);
      p["phi"] = vec_json(d.phi);
      p["tri"] = table_json(d.tri);
      break;
    }
    case Kind::Groupoid:
      p = groupoid_payload(std::get<Groupoid>(doc.data));
      break;
    case Kind::RbInstance: {
      const auto& d = std::get<RelativeRotaBaxter>(doc.data);
      p["groupoid"] = groupoid_payload(d.action.g);
      json b;
      bundle_payload_fields(b, d.action.h);
      p["bundle"] = std::move(b);
      p["act"] = table_json(d.action.act);
      p["b"] = vec_json(d.b);
      break;
    }
    case Kind::BraidedQuiver: {
      const auto& d = std::get<BraidedQuiver>(doc.data);
      p["base"] = d.quiver.base;
      p["arrows"] = d.quiver.arrows;
      p["alpha"] = vec_json(d.quiver.alpha);
      p["beta"] = vec_json(d.quiver.beta);
      p["left"] = table_json(d.left);
      p["right"] = table_json(d.right);
      break;
    }
    case Kind::Bracoid: {
      const auto& d = std::get<SkewLeftBracoid>(doc.data);
      bundle_payload_fields(p, d.bundle);
      p["beta"] = vec_json(d.gpd.beta);
      p["star"] = table_json(d.gpd.mul);
      p["ginv"] = vec_json(d.gpd.inv);
      break;
    }
    case Kind::MatchedPair: {
      const auto& d = std::get<MatchedPair>(doc.data);
      p["g"] = groupoid_payload(d.g);
      p["k"] = groupoid_payload(d.k);
      p["left"] = table_json(d.left);
      p["right"] = table_json(d.right);
      break;
    }
  }
  root["payload"] = std::move(p);
  return root.dump(2) + "\n";
}

Document make_document(Kind kind, std::map<std::string, std::string> meta,
                       PostGroupoid p) {
  if (kind != Kind::PostGroupoid) fail(ErrorKind::Internal, "wrong document kind");
  Document doc;
  doc.kind = kind;
  doc.meta = std::move(meta);
  doc.data = std::move(p);
  return doc;
}

Document make_document(Kind kind, std::map<std::string, std::string> meta,
                       Groupoid g) {
  if (kind != Kind::Groupoid) fail(ErrorKind::Internal, "wrong document kind");
  Document doc;
  doc.kind = kind;
  doc.meta = std::move(meta);
  doc.data = std::move(g);
  return doc;
}

Document make_document(std::map<std::string, std::string> meta, BraidedQuiver bq) {
  Document doc;
  doc.kind = Kind::BraidedQuiver;
  doc.meta = std::move(meta);
  doc.data = std::move(bq);
  return doc;
}

Document make_document(std::map<std::string, std::string> meta, SkewLeftBracoid sb) {
  Document doc;
  doc.kind = Kind::Bracoid;
  doc.meta = std::move(meta);
  doc.data = std::move(sb);
  return doc;
}

Document make_document(std::map<std::string, std::string> meta, MatchedPair mp) {
  Document doc;
  doc.kind = Kind::MatchedPair;
  doc.meta = std::move(meta);
  doc.data = std::move(mp);
  return doc;
}

std::vector<Idx> parse_index_array(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Malformed, std::string("syntax: ") + e.what());
  }
  if (!root.is_array()) fail(ErrorKind::Malformed, "$: expected an array of indices");
  std::vector<Idx> out;
  out.reserve(root.size());
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (!root[i].is_number_integer())
      fail(ErrorKind::Malformed, "$[" + std::to_string(i) + "]: expected an integer");
    long long v = root[i].get<long long>();
    if (v < 0 || v > 1000000)
      fail(ErrorKind::Malformed, "$[" + std::to_string(i) + "]: index out of range");
    out.push_back(static_cast<Idx>(v));
  }
  return out;
}

}  // namespace pgx
