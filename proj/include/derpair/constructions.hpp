#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "derpair/presentation.hpp"

namespace derpair {

enum class Recipe {
  dendriform_to_associative,
  dendriform_to_prelie,
  zinbiel_to_dendriform,
  zinbiel_to_associative,
  associative_to_lie,
  prelie_to_lie,
  compatible_assder_to_compatible_lieder,
  compatible_dendrider_to_compatible_assder,
  compatible_dendrider_to_compatible_prelieder,
  compatible_prelieder_to_compatible_lieder,
  compatible_zinder_to_compatible_assder,
  linear_combine,
};

const std::vector<Recipe>& all_recipes();
std::string recipe_name(Recipe r);
/// Throws SchemaError on an unknown name.
Recipe parse_recipe(std::string_view name);

/// Kinds a recipe accepts; with or without derivations unless the recipe is about
/// compatible structures, where the compatible variants (with or without δ) are accepted.
bool accepts(Recipe r, Kind k);
Kind output_kind(Recipe r, Kind input);

/// Coefficients for linear-combine: k1·P1 + k2·P2 on products, p1·δ1 + p2·δ2 on derivations.
struct Combination {
  Scalar k1 = 1, k2 = 1, p1 = 1, p2 = 1;
};

/// Applies a recipe. The input must have an accepted kind and pass its own check,
/// otherwise PreconditionError. Derivations are carried through unchanged except by
/// linear-combine. The result records the recipe and an input hash in its provenance.
Presentation dendrify(const Presentation& p, Recipe r, const Combination& c = {});

/// μ_N(x,y) = μ(Nx,y) + μ(x,Ny) − N(μ(x,y)). N must be a Nijenhuis operator for μ.
MultiMap nijenhuis_product(const MultiMap& mu, const MultiMap& n);

/// μ_R^i(x,y) = μ_i(Rx,y) + μ_i(x,Ry); R weight-zero Rota-Baxter for both products and commuting with both δ.
Presentation rb_deform_assder(const Presentation& p, const MultiMap& r);

/// [x,y]_i = μ_i(Tx,y) − μ_i(Ty,x) for an idempotent endomorphism T commuting with δ_i.
Presentation endo_brackets(const Presentation& p, const MultiMap& t);

/// x ∘_i y = [Rx,y]_i for a weight-zero Rota-Baxter R commuting with δ_i.
Presentation rb_lie_to_prelie(const Presentation& p, const MultiMap& r);

/// Products built from bilinear maps by common recipes; exposed for tests.
MultiMap commutator(const MultiMap& mu);
MultiMap swapped(const MultiMap& mu);

}  // namespace derpair
