#include "derpair/presentation.hpp"

#include <array>
#include <cstdio>

#include "derpair/errors.hpp"

namespace derpair {

namespace {

struct KindInfo {
  Kind kind;
  const char* name;
  Family family;
  bool der;
  bool compatible;
};

constexpr std::array<KindInfo, 20> kKinds{{
    {Kind::associative, "associative", Family::associative, false, false},
    {Kind::lie, "lie", Family::lie, false, false},
    {Kind::prelie, "prelie", Family::prelie, false, false},
    {Kind::zinbiel, "zinbiel", Family::zinbiel, false, false},
    {Kind::dendriform, "dendriform", Family::dendriform, false, false},
    {Kind::assder, "assder", Family::associative, true, false},
    {Kind::lieder, "lieder", Family::lie, true, false},
    {Kind::prelieder, "prelieder", Family::prelie, true, false},
    {Kind::dendrider, "dendrider", Family::dendriform, true, false},
    {Kind::zinder, "zinder", Family::zinbiel, true, false},
    {Kind::compatible_associative, "compatible-associative", Family::associative, false, true},
    {Kind::compatible_lie, "compatible-lie", Family::lie, false, true},
    {Kind::compatible_prelie, "compatible-prelie", Family::prelie, false, true},
    {Kind::compatible_zinbiel, "compatible-zinbiel", Family::zinbiel, false, true},
    {Kind::compatible_dendriform, "compatible-dendriform", Family::dendriform, false, true},
    {Kind::compatible_assder, "compatible-assder", Family::associative, true, true},
    {Kind::compatible_lieder, "compatible-lieder", Family::lie, true, true},
    {Kind::compatible_prelieder, "compatible-prelieder", Family::prelie, true, true},
    {Kind::compatible_dendrider, "compatible-dendrider", Family::dendriform, true, true},
    {Kind::compatible_zinder, "compatible-zinder", Family::zinbiel, true, true},
}};

const KindInfo& info(Kind k) {
  for (const auto& i : kKinds) {
    if (i.kind == k) return i;
  }
  throw SchemaError("unknown structure kind");
}

}  // namespace

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds = [] {
    std::vector<Kind> v;
    for (const auto& i : kKinds) v.push_back(i.kind);
    return v;
  }();
  return kinds;
}

std::string kind_name(Kind k) { return info(k).name; }

Kind parse_kind(std::string_view name) {
  for (const auto& i : kKinds) {
    if (name == i.name) return i.kind;
  }
  throw SchemaError("unknown structure kind '" + std::string(name) + "'");
}

Family family(Kind k) { return info(k).family; }
bool has_derivations(Kind k) { return info(k).der; }
bool is_compatible(Kind k) { return info(k).compatible; }

Kind make_kind(Family f, bool with_derivations, bool compatible) {
  for (const auto& i : kKinds) {
    if (i.family == f && i.der == with_derivations && i.compatible == compatible) return i.kind;
  }
  throw SchemaError("no such structure kind");
}

std::vector<std::string> base_product_names(Family f) {
  switch (f) {
    case Family::associative:
      return {"mu"};
    case Family::lie:
      return {"bracket"};
    case Family::prelie:
      return {"circ"};
    case Family::zinbiel:
      return {"star"};
    case Family::dendriform:
      return {"prec", "succ"};
  }
  return {};
}

std::vector<std::string> product_names(Kind k) {
  const auto base = base_product_names(family(k));
  if (!is_compatible(k)) return base;
  std::vector<std::string> out;
  for (const char* suffix : {"1", "2"}) {
    for (const auto& b : base) out.push_back(b + suffix);
  }
  return out;
}

std::vector<std::string> derivation_names(Kind k) {
  if (!has_derivations(k)) return {};
  if (is_compatible(k)) return {"delta1", "delta2"};
  return {"delta"};
}

const MultiMap& Presentation::product(const std::string& name) const {
  auto it = products.find(name);
  if (it == products.end()) throw SchemaError("missing product '" + name + "' for kind " + kind_name(kind));
  return it->second;
}

const MultiMap& Presentation::derivation(const std::string& name) const {
  auto it = derivations.find(name);
  if (it == derivations.end()) {
    throw SchemaError("missing derivation '" + name + "' for kind " + kind_name(kind));
  }
  return it->second;
}

void Presentation::validate() const {
  for (const auto& name : product_names(kind)) {
    const auto& m = product(name);
    if (m.arity() != 2) throw SchemaError("product '" + name + "' must be bilinear");
    if (!(m.space() == space)) throw SchemaError("product '" + name + "' lives on another space");
  }
  for (const auto& name : derivation_names(kind)) {
    const auto& m = derivation(name);
    if (m.arity() != 1) throw SchemaError("derivation '" + name + "' must be linear");
    if (!(m.space() == space)) throw SchemaError("derivation '" + name + "' lives on another space");
  }
  for (const auto& [name, m] : operators) {
    if (m.arity() != 1) throw SchemaError("operator '" + name + "' must be linear");
  }
}

namespace {

void append_map(std::string& out, const std::string& section, const std::string& name, const MultiMap& m) {
  out += section + " " + name + "\n";
  for (const auto& e : m.entries()) {
    for (auto i : e.in) out += std::to_string(i) + " ";
    out += std::to_string(e.out) + " " + e.value.str() + "\n";
  }
}

}  // namespace

std::string canonical_text(const Presentation& p) {
  std::string out = "kind " + kind_name(p.kind) + "\ndimension " + std::to_string(p.space.dim()) + "\n";
  for (const auto& l : p.space.labels()) out += "label " + l + "\n";
  for (const auto& [name, m] : p.products) append_map(out, "product", name, m);
  for (const auto& [name, m] : p.derivations) append_map(out, "derivation", name, m);
  for (const auto& [name, m] : p.operators) append_map(out, "operator", name, m);
  return out;
}

std::string fnv1a_hex(std::string_view text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace derpair
