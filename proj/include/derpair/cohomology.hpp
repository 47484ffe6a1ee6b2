#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "derpair/cochain.hpp"
#include "derpair/presentation.hpp"

namespace derpair {

enum class Flavor { hochschild, chevalley_eilenberg, assder, lieder, compatible_associative, cad, cldp };

const std::vector<Flavor>& all_flavors();
std::string flavor_name(Flavor f);
Flavor parse_flavor(std::string_view name);
/// Kinds whose presentations carry the data a flavor needs.
std::vector<Kind> flavor_kinds(Flavor f);

/// Sign of the [w₂,gⁿ] term in the last component of the compatible Der differentials.
/// `repaired` uses the minus sign every other component carries; `verbatim` uses plus.
enum class LastShadowSign { repaired, verbatim };
std::string sign_name(LastShadowSign s);

/// dⁿf = (−1)^{n−1}[μ,f]_G for n ≥ 1. μ must be associative.
MultiMap hochschild_d(const MultiMap& mu, const MultiMap& f);
/// dⁿf = (−1)^{n−1}[w,f]_NR for n ≥ 1. w must satisfy Jacobi.
AltMap ce_d(const AltMap& w, const AltMap& f);

/// (dⁿf, d^{n−1}g + (−1)ⁿDf); at n = 1 the shadow is −Df.
AssDerCochain assder_d(const Presentation& p, const AssDerCochain& c);
LieDerCochain lieder_d(const Presentation& p, const LieDerCochain& c);

/// (−1)^{n−1}(…, [μ₂,f_{i−1}]_G + [μ₁,f_i]_G, …), n+1 components.
std::vector<MultiMap> compat_assoc_d(const Presentation& p, const std::vector<MultiMap>& c);
/// Dimension of {y : μ₁(x,y) − μ₁(y,x) = μ₂(x,y) − μ₂(y,x) for all x}.
std::size_t compat_assoc_c0_dim(const Presentation& p);

CompatCochain<MultiMap> cad_d(const Presentation& p, const CompatCochain<MultiMap>& c,
                              LastShadowSign sign = LastShadowSign::repaired);
CompatCochain<AltMap> cldp_d(const Presentation& p, const CompatCochain<AltMap>& c,
                             LastShadowSign sign = LastShadowSign::repaired);

/// Largest admissible coordinate dimension of a cochain space. 20000 unless
/// DERPAIR_DEGREE_BUDGET says otherwise.
std::size_t degree_budget();

/// A cochain complex in coordinates. The base is checked once, at construction.
class Complex {
 public:
  Complex(Flavor flavor, Presentation base, LastShadowSign sign = LastShadowSign::repaired);

  Flavor flavor() const { return flavor_; }
  const Presentation& base() const { return base_; }

  std::size_t cochain_dim(std::size_t n) const;
  /// As cochain_dim, throwing ResourceError past degree_budget().
  std::size_t cochain_dim_checked(std::size_t n) const;
  /// dⁿ applied to a coordinate vector of Cⁿ.
  Vec apply(std::size_t n, const Vec& coords) const;
  /// dⁿ as a dense matrix, dim C^{n+1} × dim Cⁿ.
  Matrix differential(std::size_t n) const;
  std::size_t rank(std::size_t n) const;
  /// dⁿ∘d^{n−1} vanishes (n ≥ 1).
  bool dd_zero(std::size_t n) const;

 private:
  void check_budget(std::size_t n) const;

  Flavor flavor_;
  Presentation base_;
  LastShadowSign sign_;
  std::vector<Vec> c0_basis_;  // compatible-associative only
};

struct DegreeReport {
  std::size_t degree = 0;
  std::size_t cochain_dim = 0;
  std::size_t rank = 0;          // rank of dⁿ
  std::size_t cocycles = 0;      // dim Zⁿ
  std::size_t coboundaries = 0;  // dim Bⁿ
  std::size_t cohomology = 0;    // dim Hⁿ
};

struct CohomologyReport {
  Flavor flavor = Flavor::hochschild;
  Kind base_kind = Kind::associative;
  std::size_t max_degree = 0;
  std::vector<DegreeReport> degrees;
  bool dd_certified = false;
  LastShadowSign last_shadow_sign = LastShadowSign::repaired;
  /// cad/cldp only: whether the other sign convention also squares to zero.
  std::optional<bool> verbatim_sign_certifies;
};

/// Dimensions of Cⁿ, Zⁿ, Bⁿ, Hⁿ for 0 ≤ n ≤ max_degree and a d∘d = 0 certificate
/// for 1 ≤ n ≤ max_degree. Throws ResourceError past the degree budget and
/// PreconditionError when the base fails its check.
CohomologyReport cohomology(Flavor flavor, const Presentation& base, std::size_t max_degree,
                            LastShadowSign sign = LastShadowSign::repaired);

}  // namespace derpair
