#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "derpair/cochain.hpp"

namespace derpair {

enum class Kind {
  associative,
  lie,
  prelie,
  zinbiel,
  dendriform,
  assder,
  lieder,
  prelieder,
  dendrider,
  zinder,
  compatible_associative,
  compatible_lie,
  compatible_prelie,
  compatible_zinbiel,
  compatible_dendriform,
  compatible_assder,
  compatible_lieder,
  compatible_prelieder,
  compatible_dendrider,
  compatible_zinder,
};

enum class Family { associative, lie, prelie, zinbiel, dendriform };

const std::vector<Kind>& all_kinds();
std::string kind_name(Kind k);
/// Throws SchemaError on an unknown name.
Kind parse_kind(std::string_view name);

Family family(Kind k);
bool has_derivations(Kind k);
bool is_compatible(Kind k);
Kind make_kind(Family f, bool with_derivations, bool compatible);

/// Product names of a single structure of the family: mu, bracket, circ, star, or prec/succ.
std::vector<std::string> base_product_names(Family f);
/// All product names a kind requires, e.g. prec1, succ1, prec2, succ2.
std::vector<std::string> product_names(Kind k);
/// delta, or delta1/delta2, or nothing.
std::vector<std::string> derivation_names(Kind k);

/// Products and derivations over one space together with a claimed kind.
struct Presentation {
  Space space;
  Kind kind = Kind::associative;
  std::map<std::string, MultiMap> products;
  std::map<std::string, MultiMap> derivations;
  std::map<std::string, MultiMap> operators;
  std::map<std::string, std::string> provenance;

  Presentation() = default;
  Presentation(Space s, Kind k) : space(std::move(s)), kind(k) {}

  /// Throws SchemaError naming the missing map.
  const MultiMap& product(const std::string& name) const;
  const MultiMap& derivation(const std::string& name) const;

  /// Every required name is present with the right arity on the right space.
  void validate() const;

  /// Structural equality: space, kind, products, derivations, operators.
  friend bool operator==(const Presentation& a, const Presentation& b) {
    return a.kind == b.kind && a.space == b.space && a.products == b.products &&
           a.derivations == b.derivations && a.operators == b.operators;
  }
};

/// Deterministic text form, used for provenance hashing.
std::string canonical_text(const Presentation& p);
std::string fnv1a_hex(std::string_view text);

}  // namespace derpair
