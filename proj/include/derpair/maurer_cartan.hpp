#pragma once

#include <string>
#include <vector>

#include "derpair/cochain.hpp"
#include "derpair/cohomology.hpp"

namespace derpair {

/// A nonzero bracket: its name, the first input tuple where it is nonzero and its value there.
struct Residual {
  std::string name;
  Tuple witness;
  Vec value;
};

struct McVerdict {
  std::vector<Residual> residuals;
  bool holds() const { return residuals.empty(); }
};

/// {(w,δ),(w,δ)} = ([w,w]_NR, −2[w,δ]_NR) = 0.
McVerdict mc_lieder(const AltMap& w, const MultiMap& delta);
/// [[(μ,δ),(μ,δ)]] = ([μ,μ]_G, −2[μ,δ]_G) = 0.
McVerdict mc_assder(const MultiMap& mu, const MultiMap& delta);
/// Both pairs Maurer-Cartan and {(w₁,δ₁),(w₂,δ₂)} = ([w₁,w₂]_NR, −[w₁,δ₂]_NR − [w₂,δ₁]_NR) = 0.
McVerdict mc_pair_lieder(const AltMap& w1, const MultiMap& delta1, const AltMap& w2, const MultiMap& delta2);
/// Both pairs Maurer-Cartan and [[(μ₁,δ₁),(μ₂,δ₂)]] = ([μ₁,μ₂]_G, [δ₁,μ₂]_G − [μ₁,δ₂]_G) = 0.
McVerdict mc_pair_assder(const MultiMap& mu1, const MultiMap& delta1, const MultiMap& mu2, const MultiMap& delta2);

/// {(w,δ),(w₁,δ₁)} + ½{(w₁,δ₁),(w₁,δ₁)} = 0. (w,δ) must be a LieDer pair.
McVerdict deformation_check(const AltMap& w, const MultiMap& delta, const AltMap& w1, const MultiMap& delta1);

/// d₁[n] : Cⁿ → C^{n+1}. Checks d₁[n+1]d₂[n] + d₂[n+1]d₁[n] = 0 wherever both are given.
/// Throws ShapeError when the two lists disagree in shape.
McVerdict bidifferential_check(const std::vector<Matrix>& d1, const std::vector<Matrix>& d2);

/// Matrices d⁰ … d^{max_degree} of the assder or lieder complex of (w,δ).
std::vector<Matrix> der_differentials(Flavor flavor, const MultiMap& w, const MultiMap& delta, std::size_t max_degree);

}  // namespace derpair
