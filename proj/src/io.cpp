#include "derpair/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "derpair/errors.hpp"

namespace derpair {

namespace {

std::size_t index_of(const Json& v, std::size_t dim, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) throw SchemaError(where + ": index must be a non-negative integer");
  const auto i = v.get<unsigned long long>();
  if (i >= dim) throw SchemaError(where + ": index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim));
  return static_cast<std::size_t>(i);
}

Scalar coefficient(const Json& v, const std::string& where) {
  try {
    if (v.is_string()) return Scalar::parse(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(v.get<long>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(where + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw SchemaError(where + ": " + e.what());
  }
  throw SchemaError(where + ": coefficient must be a \"p/q\" string or an integer");
}

// Entries of a k-linear map: k input indices, one output index, one coefficient.
MultiMap read_map(const Json& entries, const Space& space, std::size_t arity, const std::string& where) {
  if (!entries.is_array()) throw SchemaError(where + " must be an array of entries");
  MultiMap m(space, arity);
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t n = 0; n < entries.size(); ++n) {
    const Json& e = entries[n];
    const std::string at = where + "[" + std::to_string(n) + "]";
    if (!e.is_array() || e.size() != arity + 2) {
      throw SchemaError(at + " must have " + std::to_string(arity + 2) + " fields");
    }
    std::vector<std::size_t> key;
    for (std::size_t i = 0; i <= arity; ++i) key.push_back(index_of(e[i], space.dim(), at));
    if (!seen.insert(key).second) throw SchemaError(at + ": duplicate entry");
    const Tuple in(key.begin(), key.end() - 1);
    m.add(in, key.back(), coefficient(e[arity + 1], at));
  }
  return m;
}

Json write_map(const MultiMap& m) {
  Json out = Json::array();
  for (const auto& e : m.entries()) {
    Json row = Json::array();
    for (auto i : e.in) row.push_back(i);
    row.push_back(e.out);
    row.push_back(e.value.str());
    out.push_back(std::move(row));
  }
  return out;
}

Space read_space(const Json& doc) {
  if (!doc.contains("dimension")) throw SchemaError("missing \"dimension\"");
  const Json& d = doc["dimension"];
  if (!d.is_number_integer() || d.get<long long>() < 1) throw SchemaError("\"dimension\" must be a positive integer");
  const auto dim = d.get<std::size_t>();
  if (!doc.contains("labels")) return Space(dim);
  const Json& l = doc["labels"];
  if (!l.is_array() || l.size() != dim) throw SchemaError("\"labels\" must list one string per basis vector");
  std::vector<std::string> labels;
  for (const auto& s : l) {
    if (!s.is_string()) throw SchemaError("\"labels\" must be strings");
    labels.push_back(s.get<std::string>());
  }
  return Space(std::move(labels));
}

void write_space(Json& out, const Space& s) {
  out["dimension"] = s.dim();
  if (s.has_custom_labels()) out["labels"] = s.labels();
}

void require_object(const Json& doc, const char* what) {
  if (!doc.is_object()) throw SchemaError(std::string(what) + " must be a JSON object");
}

void reject_unknown(const Json& doc, const std::set<std::string>& known, const char* what) {
  for (const auto& [k, v] : doc.items()) {
    if (!known.contains(k)) throw SchemaError(std::string("unknown field \"") + k + "\" in " + what);
  }
}

std::map<std::string, MultiMap> read_section(const Json& doc, const char* key, const Space& space, std::size_t arity) {
  std::map<std::string, MultiMap> out;
  if (!doc.contains(key)) return out;
  const Json& sec = doc[key];
  require_object(sec, key);
  for (const auto& [name, entries] : sec.items()) {
    out.emplace(name, read_map(entries, space, arity, std::string(key) + "." + name));
  }
  return out;
}

void reject_extra(const std::map<std::string, MultiMap>& maps, const std::vector<std::string>& wanted,
                  const char* section, Kind k) {
  for (const auto& [name, m] : maps) {
    if (std::find(wanted.begin(), wanted.end(), name) == wanted.end()) {
      throw SchemaError(std::string(section) + "." + name + " is not used by kind " + kind_name(k));
    }
  }
}

}  // namespace

Presentation presentation_from_json(const Json& doc) {
  require_object(doc, "presentation");
  reject_unknown(doc, {"schema", "comment", "dimension", "labels", "kind", "products", "derivations", "operators",
                       "provenance"},
                 "presentation");
  if (doc.contains("schema") && doc["schema"] != "derpair-presentation/1") {
    throw SchemaError("unsupported presentation schema");
  }
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw SchemaError("missing \"kind\"");
  Presentation p(read_space(doc), parse_kind(doc["kind"].get<std::string>()));
  p.products = read_section(doc, "products", p.space, 2);
  p.derivations = read_section(doc, "derivations", p.space, 1);
  p.operators = read_section(doc, "operators", p.space, 1);
  if (doc.contains("provenance")) {
    require_object(doc["provenance"], "provenance");
    for (const auto& [k, v] : doc["provenance"].items()) {
      if (!v.is_string()) throw SchemaError("provenance values must be strings");
      p.provenance[k] = v.get<std::string>();
    }
  }
  p.validate();
  reject_extra(p.products, product_names(p.kind), "products", p.kind);
  reject_extra(p.derivations, derivation_names(p.kind), "derivations", p.kind);
  return p;
}

Json presentation_to_json(const Presentation& p) {
  Json out;
  out["schema"] = "derpair-presentation/1";
  write_space(out, p.space);
  out["kind"] = kind_name(p.kind);
  Json products = Json::object();
  for (const auto& [name, m] : p.products) products[name] = write_map(m);
  out["products"] = std::move(products);
  Json derivations = Json::object();
  for (const auto& [name, m] : p.derivations) derivations[name] = write_map(m);
  out["derivations"] = std::move(derivations);
  if (!p.operators.empty()) {
    Json ops = Json::object();
    for (const auto& [name, m] : p.operators) ops[name] = write_map(m);
    out["operators"] = std::move(ops);
  }
  if (!p.provenance.empty()) {
    Json prov = Json::object();
    for (const auto& [k, v] : p.provenance) prov[k] = v;
    out["provenance"] = std::move(prov);
  }
  return out;
}

CochainFile cochain_from_json(const Json& doc) {
  require_object(doc, "cochain");
  reject_unknown(doc, {"schema", "comment", "dimension", "labels", "arity", "entries", "shadow"}, "cochain");
  if (doc.contains("schema") && doc["schema"] != "derpair-cochain/1") throw SchemaError("unsupported cochain schema");
  const Space space = read_space(doc);
  auto arity_of = [](const Json& d, const char* what) {
    if (!d.contains("arity") || !d["arity"].is_number_integer() || d["arity"].get<long long>() < 0) {
      throw SchemaError(std::string(what) + ": \"arity\" must be a non-negative integer");
    }
    return d["arity"].get<std::size_t>();
  };
  const std::size_t arity = arity_of(doc, "cochain");
  CochainFile f{space, read_map(doc.contains("entries") ? doc["entries"] : Json::array(), space, arity, "entries"),
                std::nullopt};
  if (doc.contains("shadow")) {
    const Json& s = doc["shadow"];
    require_object(s, "shadow");
    reject_unknown(s, {"arity", "entries"}, "shadow");
    const std::size_t sa = arity_of(s, "shadow");
    if (sa + 1 != arity) throw SchemaError("shadow arity must be one less than the cochain arity");
    f.shadow = read_map(s.contains("entries") ? s["entries"] : Json::array(), space, sa, "shadow.entries");
  }
  return f;
}

Json cochain_to_json(const Space& space, const MultiMap& top, const std::optional<MultiMap>& shadow) {
  Json out;
  out["schema"] = "derpair-cochain/1";
  write_space(out, space);
  out["arity"] = top.arity();
  out["entries"] = write_map(top);
  if (shadow) {
    Json s;
    s["arity"] = shadow->arity();
    s["entries"] = write_map(*shadow);
    out["shadow"] = std::move(s);
  }
  return out;
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw SchemaError("cannot write " + path.string());
  out << dump(doc);
  if (!out) throw SchemaError("failed writing " + path.string());
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Presentation read_presentation(const std::filesystem::path& path) {
  try {
    return presentation_from_json(read_json(path));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path.string() + ": " + e.what());
  }
}

}  // namespace derpair
