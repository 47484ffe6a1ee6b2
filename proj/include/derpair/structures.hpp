#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "derpair/presentation.hpp"

namespace derpair {

/// First failing instance of an identity: lhs ≠ rhs at the basis tuple `witness`.
struct Violation {
  std::string axiom;
  Tuple witness;
  Vec lhs;
  Vec rhs;

  /// "associativity(mu) at (e1,e1,e1): lhs = e1, rhs = 0".
  std::string describe(const Space& space) const;
};

/// Checks every defining identity of p.kind at every basis tuple. Throws SchemaError
/// when a required product or derivation is missing.
std::optional<Violation> check_structure(const Presentation& p);

/// φ must carry every product and intertwine every derivation. Kinds must agree.
std::optional<Violation> check_morphism(const Presentation& src, const Presentation& dst, const MultiMap& phi);
std::optional<Violation> check_morphism(const Presentation& src, const Presentation& dst, const Matrix& phi);

enum class Role { derivation, rota_baxter, nijenhuis, idempotent_endomorphism };

struct OperatorRole {
  Role role = Role::derivation;
  Scalar weight;  // rota-baxter only

  static OperatorRole derivation() { return {Role::derivation, {}}; }
  static OperatorRole rota_baxter(Scalar w = 0) { return {Role::rota_baxter, std::move(w)}; }
  static OperatorRole nijenhuis() { return {Role::nijenhuis, {}}; }
  static OperatorRole idempotent() { return {Role::idempotent_endomorphism, {}}; }
};

/// "derivation", "rota-baxter", "rota-baxter:<weight>", "nijenhuis", "idempotent-endomorphism".
OperatorRole parse_role(std::string_view text);
std::string role_name(const OperatorRole& r);

/// Verifies the role's identities against every product of p; roles other than
/// derivation must also commute with every derivation of p. Throws UnsupportedRole
/// when the role makes no sense on the kind's family.
std::optional<Violation> check_operator(const Presentation& p, const MultiMap& op, const OperatorRole& role);

/// Coefficient matrix of the derivation conditions on p's products, linear in the
/// unknown derivation(s). Unknown i*d+j is the coefficient of e_j in δ(e_i); compatible
/// kinds have 2d² unknowns (δ1 block, then δ2) and include the cross condition.
Matrix derivation_system(const Presentation& p);

/// Derivations read back from a solution vector of derivation_system.
std::vector<MultiMap> derivations_from_solution(const Presentation& p, const Vec& solution);

}  // namespace derpair
