#include "derpair/constructions.hpp"

#include <array>

#include "derpair/errors.hpp"
#include "derpair/structures.hpp"

namespace derpair {

namespace {

struct RecipeInfo {
  Recipe recipe;
  const char* name;
  Family from;
  Family to;
  bool compatible;
};

constexpr std::array<RecipeInfo, 12> kRecipes{{
    {Recipe::dendriform_to_associative, "dendriform-to-associative", Family::dendriform, Family::associative, false},
    {Recipe::dendriform_to_prelie, "dendriform-to-prelie", Family::dendriform, Family::prelie, false},
    {Recipe::zinbiel_to_dendriform, "zinbiel-to-dendriform", Family::zinbiel, Family::dendriform, false},
    {Recipe::zinbiel_to_associative, "zinbiel-to-associative", Family::zinbiel, Family::associative, false},
    {Recipe::associative_to_lie, "associative-to-lie", Family::associative, Family::lie, false},
    {Recipe::prelie_to_lie, "prelie-to-lie", Family::prelie, Family::lie, false},
    {Recipe::compatible_assder_to_compatible_lieder, "compatible-assder-to-compatible-lieder", Family::associative,
     Family::lie, true},
    {Recipe::compatible_dendrider_to_compatible_assder, "compatible-dendrider-to-compatible-assder",
     Family::dendriform, Family::associative, true},
    {Recipe::compatible_dendrider_to_compatible_prelieder, "compatible-dendrider-to-compatible-prelieder",
     Family::dendriform, Family::prelie, true},
    {Recipe::compatible_prelieder_to_compatible_lieder, "compatible-prelieder-to-compatible-lieder", Family::prelie,
     Family::lie, true},
    {Recipe::compatible_zinder_to_compatible_assder, "compatible-zinder-to-compatible-assder", Family::zinbiel,
     Family::associative, true},
    {Recipe::linear_combine, "linear-combine", Family::associative, Family::associative, true},
}};

const RecipeInfo& info(Recipe r) {
  for (const auto& i : kRecipes) {
    if (i.recipe == r) return i;
  }
  throw SchemaError("unknown recipe");
}

MultiMap map_bilinear(const MultiMap& mu, const MultiMap* left, const MultiMap* right) {
  // μ(Lx, Ry) with either side possibly the identity.
  MultiMap out(mu.space(), 2);
  const std::size_t d = mu.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const Vec x = left ? left->eval(Tuple{i}) : basis_vec(d, i);
    for (std::size_t j = 0; j < d; ++j) {
      const Vec y = right ? right->eval(Tuple{j}) : basis_vec(d, j);
      const Vec v = apply2(mu, x, y);
      for (std::size_t k = 0; k < d; ++k) {
        if (!v[k].is_zero()) out.add({i, j}, k, v[k]);
      }
    }
  }
  return out;
}

MultiMap post(const MultiMap& lin, const MultiMap& mu) {
  MultiMap out(mu.space(), 2);
  for (const auto& e : mu.entries()) {
    for (const auto& le : lin.entries()) {
      if (le.in[0] == e.out) out.add(e.in, le.out, e.value * le.value);
    }
  }
  return out;
}

void require_passes(const Presentation& p, const std::string& what) {
  if (auto v = check_structure(p)) {
    throw PreconditionError(what + ": input is not a valid " + kind_name(p.kind) + " (" + v->describe(p.space) + ")");
  }
}

void require_operator(const Presentation& p, const MultiMap& op, const OperatorRole& role, const std::string& what) {
  if (auto v = check_operator(p, op, role)) {
    throw PreconditionError(what + ": operator is not " + role_name(role) + " (" + v->describe(p.space) + ")");
  }
}

Presentation start_output(const Presentation& p, Kind k, const std::string& recipe) {
  Presentation out(p.space, k);
  out.derivations = p.derivations;
  out.provenance["recipe"] = recipe;
  out.provenance["input"] = fnv1a_hex(canonical_text(p));
  return out;
}

std::vector<std::string> suffixes(Kind k) {
  return is_compatible(k) ? std::vector<std::string>{"1", "2"} : std::vector<std::string>{""};
}

}  // namespace

const std::vector<Recipe>& all_recipes() {
  static const std::vector<Recipe> v = [] {
    std::vector<Recipe> out;
    for (const auto& i : kRecipes) out.push_back(i.recipe);
    return out;
  }();
  return v;
}

std::string recipe_name(Recipe r) { return info(r).name; }

Recipe parse_recipe(std::string_view name) {
  for (const auto& i : kRecipes) {
    if (name == i.name) return i.recipe;
  }
  throw SchemaError("unknown recipe '" + std::string(name) + "'");
}

bool accepts(Recipe r, Kind k) {
  if (r == Recipe::linear_combine) return is_compatible(k);
  const auto& i = info(r);
  return family(k) == i.from && is_compatible(k) == i.compatible;
}

Kind output_kind(Recipe r, Kind input) {
  if (!accepts(r, input)) {
    throw PreconditionError("recipe " + recipe_name(r) + " does not accept kind " + kind_name(input));
  }
  if (r == Recipe::linear_combine) return make_kind(family(input), has_derivations(input), false);
  return make_kind(info(r).to, has_derivations(input), is_compatible(input));
}

MultiMap commutator(const MultiMap& mu) { return mu - swapped(mu); }

MultiMap swapped(const MultiMap& mu) {
  MultiMap out(mu.space(), 2);
  for (const auto& e : mu.entries()) out.add({e.in[1], e.in[0]}, e.out, e.value);
  return out;
}

Presentation dendrify(const Presentation& p, Recipe r, const Combination& c) {
  const Kind out_kind = output_kind(r, p.kind);
  const std::string name = recipe_name(r);
  require_passes(p, name);
  Presentation out = start_output(p, out_kind, name);

  if (r == Recipe::linear_combine) {
    out.provenance["coefficients"] = c.k1.str() + "," + c.k2.str() + "," + c.p1.str() + "," + c.p2.str();
    for (const auto& b : base_product_names(family(p.kind))) {
      out.products[b] = c.k1 * p.product(b + "1") + c.k2 * p.product(b + "2");
    }
    out.derivations.clear();
    if (has_derivations(p.kind)) {
      out.derivations["delta"] = c.p1 * p.derivation("delta1") + c.p2 * p.derivation("delta2");
    }
    return out;
  }

  for (const auto& s : suffixes(p.kind)) {
    auto P = [&](const std::string& n) { return p.product(n + s); };
    switch (info(r).from) {
      case Family::dendriform:
        if (info(r).to == Family::associative) {
          out.products["mu" + s] = P("prec") + P("succ");
        } else {
          out.products["circ" + s] = P("succ") - swapped(P("prec"));
        }
        break;
      case Family::zinbiel:
        if (info(r).to == Family::dendriform) {
          out.products["prec" + s] = swapped(P("star"));
          out.products["succ" + s] = P("star");
        } else {
          out.products["mu" + s] = P("star") + swapped(P("star"));
        }
        break;
      case Family::associative:
        out.products["bracket" + s] = commutator(P("mu"));
        break;
      case Family::prelie:
        out.products["bracket" + s] = commutator(P("circ"));
        break;
      case Family::lie:
        throw PreconditionError("no recipe starts from a Lie structure");
    }
  }
  return out;
}

MultiMap nijenhuis_product(const MultiMap& mu, const MultiMap& n) {
  if (mu.arity() != 2 || n.arity() != 1) throw ShapeError("nijenhuis_product needs a bilinear μ and a linear N");
  require_same_space(mu.space(), n.space(), "nijenhuis_product");
  Presentation p(mu.space(), Kind::associative);
  p.products["mu"] = mu;
  require_operator(p, n, OperatorRole::nijenhuis(), "nijenhuis_product");
  return map_bilinear(mu, &n, nullptr) + map_bilinear(mu, nullptr, &n) - post(n, mu);
}

Presentation rb_deform_assder(const Presentation& p, const MultiMap& r) {
  if (p.kind != Kind::compatible_assder && p.kind != Kind::compatible_associative) {
    throw PreconditionError("Rota-Baxter deformation needs a compatible associative structure, got " +
                            kind_name(p.kind));
  }
  require_passes(p, "rb-deform");
  require_operator(p, r, OperatorRole::rota_baxter(0), "rb-deform");
  Presentation out = start_output(p, p.kind, "rb-deform");
  for (const char* s : {"1", "2"}) {
    const auto& mu = p.product(std::string("mu") + s);
    out.products[std::string("mu") + s] = map_bilinear(mu, &r, nullptr) + map_bilinear(mu, nullptr, &r);
  }
  return out;
}

Presentation endo_brackets(const Presentation& p, const MultiMap& t) {
  if (p.kind != Kind::compatible_assder && p.kind != Kind::compatible_associative) {
    throw PreconditionError("endomorphism brackets need a compatible associative structure, got " +
                            kind_name(p.kind));
  }
  require_passes(p, "endo-brackets");
  require_operator(p, t, OperatorRole::idempotent(), "endo-brackets");
  Presentation out =
      start_output(p, p.kind == Kind::compatible_assder ? Kind::compatible_lieder : Kind::compatible_lie, "endo-brackets");
  for (const char* s : {"1", "2"}) {
    const MultiMap left = map_bilinear(p.product(std::string("mu") + s), &t, nullptr);
    out.products[std::string("bracket") + s] = left - swapped(left);
  }
  return out;
}

Presentation rb_lie_to_prelie(const Presentation& p, const MultiMap& r) {
  if (family(p.kind) != Family::lie) {
    throw PreconditionError("Rota-Baxter pre-Lie products need a Lie structure, got " + kind_name(p.kind));
  }
  require_passes(p, "rb-prelie");
  require_operator(p, r, OperatorRole::rota_baxter(0), "rb-prelie");
  Presentation out =
      start_output(p, make_kind(Family::prelie, has_derivations(p.kind), is_compatible(p.kind)), "rb-prelie");
  for (const auto& s : suffixes(p.kind)) {
    out.products["circ" + s] = map_bilinear(p.product("bracket" + s), &r, nullptr);
  }
  return out;
}

}  // namespace derpair
