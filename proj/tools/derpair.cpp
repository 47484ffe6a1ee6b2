// derpair: command-line front end over the derpair library.
#include <chrono>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "derpair/brackets.hpp"
#include "derpair/cohomology.hpp"
#include "derpair/constructions.hpp"
#include "derpair/errors.hpp"
#include "derpair/io.hpp"
#include "derpair/maurer_cartan.hpp"
#include "derpair/structures.hpp"

namespace {

using namespace derpair;

constexpr int kPass = 0;
constexpr int kFinding = 1;
constexpr int kError = 2;

struct Common {
  std::string out;
  bool timestamps = false;
};

Json report_head(const std::string& command, const Common& c) {
  Json r;
  r["schema"] = "derpair-report/1";
  r["command"] = command;
  if (c.timestamps) {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    r["generated_at"] = buf;
  }
  return r;
}

void emit(const Json& doc, const std::string& out) {
  if (out.empty()) {
    std::cout << dump(doc);
  } else {
    write_json(out, doc);
  }
}

Json coefficients(const Vec& v) {
  Json a = Json::array();
  for (const auto& s : v) a.push_back(s.str());
  return a;
}

Json violation_json(const Violation& v, const Space& space) {
  Json j;
  j["axiom"] = v.axiom;
  Json labels = Json::array(), idx = Json::array();
  for (auto i : v.witness) {
    labels.push_back(space.label(i));
    idx.push_back(i);
  }
  j["witness"] = labels;
  j["witness_indices"] = idx;
  j["lhs"] = format_vec(v.lhs, space.labels());
  j["rhs"] = format_vec(v.rhs, space.labels());
  j["lhs_coefficients"] = coefficients(v.lhs);
  j["rhs_coefficients"] = coefficients(v.rhs);
  j["message"] = v.describe(space);
  return j;
}

Json verdict_json(const McVerdict& v, const Space& space) {
  Json j;
  j["holds"] = v.holds();
  Json res = Json::array();
  for (const auto& r : v.residuals) {
    Json e;
    e["name"] = r.name;
    Json labels = Json::array(), idx = Json::array();
    for (auto i : r.witness) {
      labels.push_back(i < space.dim() ? space.label(i) : std::to_string(i));
      idx.push_back(i);
    }
    e["witness"] = labels;
    e["witness_indices"] = idx;
    e["value"] = r.value.size() == space.dim() ? format_vec(r.value, space.labels()) : "";
    e["value_coefficients"] = coefficients(r.value);
    res.push_back(std::move(e));
  }
  j["residuals"] = std::move(res);
  return j;
}

Json provenance_json(const Presentation& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p.provenance) j[k] = v;
  return j;
}

const MultiMap& named_operator(const Presentation& p, const std::string& name) {
  auto it = p.operators.find(name);
  if (it == p.operators.end()) throw SchemaError("no operator named '" + name + "' in the \"operators\" section");
  return it->second;
}

MultiMap derivation_or_zero(const Presentation& p, const std::string& name) {
  auto it = p.derivations.find(name);
  return it == p.derivations.end() ? MultiMap(p.space, 1) : it->second;
}

// ---- check ----

struct CheckArgs {
  std::string file;
  std::string kind;
  std::string op;
  std::string role;
};

int cmd_check(const CheckArgs& a, const Common& c) {
  Presentation p = read_presentation(a.file);
  if (!a.kind.empty()) p.kind = parse_kind(a.kind);
  Json r = report_head("check", c);
  r["kind"] = kind_name(p.kind);
  std::optional<Violation> v;
  if (!a.op.empty()) {
    const OperatorRole role = parse_role(a.role.empty() ? "derivation" : a.role);
    r["operator"] = a.op;
    r["role"] = role_name(role);
    v = check_operator(p, named_operator(p, a.op), role);
  } else {
    v = check_structure(p);
  }
  r["verdict"] = v ? "fail" : "pass";
  Json vs = Json::array();
  if (v) vs.push_back(violation_json(*v, p.space));
  r["violations"] = std::move(vs);
  if (!p.provenance.empty()) r["provenance"] = provenance_json(p);
  emit(r, c.out);
  return v ? kFinding : kPass;
}

// ---- cohomology ----

struct CohomologyArgs {
  std::string file;
  std::string flavor;
  std::size_t max_degree = 2;
  std::string sign = "repaired";
};

int cmd_cohomology(const CohomologyArgs& a, const Common& c) {
  const Presentation p = read_presentation(a.file);
  const Flavor f = parse_flavor(a.flavor);
  LastShadowSign sign;
  if (a.sign == "repaired") {
    sign = LastShadowSign::repaired;
  } else if (a.sign == "verbatim") {
    sign = LastShadowSign::verbatim;
  } else {
    throw SchemaError("--sign must be repaired or verbatim");
  }
  const CohomologyReport rep = cohomology(f, p, a.max_degree, sign);
  Json r = report_head("cohomology", c);
  r["kind"] = kind_name(p.kind);
  r["verdict"] = rep.dd_certified ? "pass" : "fail";
  Json cj;
  cj["flavor"] = flavor_name(rep.flavor);
  cj["max_degree"] = rep.max_degree;
  Json degrees = Json::array();
  for (const auto& d : rep.degrees) {
    Json dj;
    dj["degree"] = d.degree;
    dj["cochain_dim"] = d.cochain_dim;
    dj["rank_d"] = d.rank;
    dj["cocycles_dim"] = d.cocycles;
    dj["coboundaries_dim"] = d.coboundaries;
    dj["cohomology_dim"] = d.cohomology;
    degrees.push_back(std::move(dj));
  }
  cj["degrees"] = std::move(degrees);
  cj["dd_zero_certified"] = rep.dd_certified;
  if (f == Flavor::cad || f == Flavor::cldp) {
    cj["last_shadow_sign"] = sign_name(rep.last_shadow_sign);
    cj["verbatim_sign_certifies"] = *rep.verbatim_sign_certifies;
  }
  r["cohomology"] = std::move(cj);
  if (!p.provenance.empty()) r["provenance"] = provenance_json(p);
  emit(r, c.out);
  return rep.dd_certified ? kPass : kFinding;
}

// ---- mc ----

struct McArgs {
  std::string file;
  bool pair = false;
  std::string perturbation;
};

int cmd_mc(const McArgs& a, const Common& c) {
  const Presentation p = read_presentation(a.file);
  p.validate();
  const Family fam = family(p.kind);
  if (fam != Family::lie && fam != Family::associative) {
    throw PreconditionError("Maurer-Cartan checks apply to Lie and associative kinds, not " + kind_name(p.kind));
  }
  const bool lie = fam == Family::lie;
  Json r = report_head("mc", c);
  r["kind"] = kind_name(p.kind);
  McVerdict v;
  std::string check;
  if (!a.perturbation.empty()) {
    if (!lie || is_compatible(p.kind)) throw PreconditionError("--perturbation needs a lie or lieder base");
    const Presentation q = read_presentation(a.perturbation);
    if (family(q.kind) != Family::lie || is_compatible(q.kind)) {
      throw PreconditionError("--perturbation needs a lie or lieder presentation");
    }
    require_same_space(p.space, q.space, "perturbation");
    check = "deformation";
    v = deformation_check(to_alt(p.product("bracket")), derivation_or_zero(p, "delta"), to_alt(q.product("bracket")),
                          derivation_or_zero(q, "delta"));
  } else if (a.pair) {
    if (!is_compatible(p.kind)) throw PreconditionError("--pair needs a compatible kind, got " + kind_name(p.kind));
    if (lie) {
      check = "pair-lieder";
      // A bracket that is not skew cannot be a Maurer-Cartan element of the alternating complex.
      auto w1 = try_alt(p.product("bracket1"));
      auto w2 = try_alt(p.product("bracket2"));
      if (!w1 || !w2) throw PreconditionError("brackets must be skew-symmetric to enter the Nijenhuis-Richardson algebra");
      v = mc_pair_lieder(*w1, derivation_or_zero(p, "delta1"), *w2, derivation_or_zero(p, "delta2"));
    } else {
      check = "pair-assder";
      v = mc_pair_assder(p.product("mu1"), derivation_or_zero(p, "delta1"), p.product("mu2"),
                         derivation_or_zero(p, "delta2"));
    }
  } else {
    if (is_compatible(p.kind)) throw PreconditionError("compatible kinds need --pair");
    if (lie) {
      check = "lieder";
      auto w = try_alt(p.product("bracket"));
      if (!w) throw PreconditionError("bracket must be skew-symmetric to enter the Nijenhuis-Richardson algebra");
      v = mc_lieder(*w, derivation_or_zero(p, "delta"));
    } else {
      check = "assder";
      v = mc_assder(p.product("mu"), derivation_or_zero(p, "delta"));
    }
  }
  r["verdict"] = v.holds() ? "pass" : "fail";
  Json mj = verdict_json(v, p.space);
  mj["check"] = check;
  r["mc"] = std::move(mj);
  emit(r, c.out);
  return v.holds() ? kPass : kFinding;
}

// ---- dendrify ----

struct DendrifyArgs {
  std::string file;
  std::string recipe;
  std::string op;
  std::string k1 = "1", k2 = "1", p1 = "1", p2 = "1";
};

Scalar scalar_arg(const std::string& s, const char* flag) {
  try {
    return Scalar::parse(s);
  } catch (const std::exception& e) {
    throw SchemaError(std::string(flag) + ": " + e.what());
  }
}

int cmd_dendrify(const DendrifyArgs& a, const Common& c) {
  const Presentation p = read_presentation(a.file);
  Presentation out;
  if (a.recipe == "nijenhuis-product") {
    if (p.kind != Kind::associative && p.kind != Kind::assder) {
      throw PreconditionError("nijenhuis-product needs an associative presentation");
    }
    out = Presentation(p.space, Kind::compatible_associative);
    out.products["mu1"] = p.product("mu");
    out.products["mu2"] = nijenhuis_product(p.product("mu"), named_operator(p, a.op));
    out.provenance["recipe"] = a.recipe;
    out.provenance["input"] = fnv1a_hex(canonical_text(p));
  } else if (a.recipe == "rota-baxter-deform") {
    out = rb_deform_assder(p, named_operator(p, a.op));
  } else if (a.recipe == "endomorphism-brackets") {
    out = endo_brackets(p, named_operator(p, a.op));
  } else if (a.recipe == "rota-baxter-prelie") {
    out = rb_lie_to_prelie(p, named_operator(p, a.op));
  } else {
    const Recipe r = parse_recipe(a.recipe);
    Combination comb{scalar_arg(a.k1, "--k1"), scalar_arg(a.k2, "--k2"), scalar_arg(a.p1, "--p1"),
                     scalar_arg(a.p2, "--p2")};
    out = dendrify(p, r, comb);
  }
  if (!a.op.empty()) out.provenance["operator"] = a.op;
  const auto v = check_structure(out);
  if (c.out.empty()) {
    std::cout << dump(presentation_to_json(out));
  } else {
    write_json(c.out, presentation_to_json(out));
    Json r = report_head("dendrify", Common{"", c.timestamps});
    r["recipe"] = a.recipe;
    r["input_kind"] = kind_name(p.kind);
    r["output_kind"] = kind_name(out.kind);
    r["output"] = c.out;
    r["verdict"] = v ? "fail" : "pass";
    Json vs = Json::array();
    if (v) vs.push_back(violation_json(*v, out.space));
    r["violations"] = std::move(vs);
    r["provenance"] = provenance_json(out);
    std::cout << dump(r);
  }
  if (v) std::cerr << "derpair: output fails its own check: " << v->describe(out.space) << "\n";
  return v ? kFinding : kPass;
}

// ---- bracket ----

struct BracketArgs {
  std::string kind;
  std::string f, g;
};

int cmd_bracket(const BracketArgs& a, const Common& c) {
  const CochainFile f = cochain_from_json(read_json(a.f));
  const CochainFile g = cochain_from_json(read_json(a.g));
  require_same_space(f.space, g.space, "bracket operands");
  MultiMap top;
  std::optional<MultiMap> shadow;
  if (a.kind == "g") {
    top = gerstenhaber(f.top, g.top);
  } else if (a.kind == "nr") {
    top = to_multi(nijenhuis_richardson(to_alt(f.top), to_alt(g.top)));
  } else if (a.kind == "dc") {
    auto lift = [](const CochainFile& x) {
      std::optional<AltMap> s;
      if (x.shadow) s = to_alt(*x.shadow);
      return LieDerCochain(to_alt(x.top), s);
    };
    const LieDerCochain r = dc_bracket(lift(f), lift(g));
    top = to_multi(r.top);
    if (r.shadow) shadow = to_multi(*r.shadow);
  } else if (a.kind == "assder") {
    const AssDerCochain r = assder_bracket(AssDerCochain(f.top, f.shadow), AssDerCochain(g.top, g.shadow));
    top = r.top;
    shadow = r.shadow;
  } else {
    throw SchemaError("--kind must be one of g, nr, dc, assder");
  }
  const Json result = cochain_to_json(f.space, top, shadow);
  if (!c.out.empty()) write_json(c.out, result);
  Json r = report_head("bracket", Common{"", c.timestamps});
  r["bracket"] = a.kind;
  r["verdict"] = "pass";
  r["zero"] = top.is_zero() && (!shadow || shadow->is_zero());
  r["result"] = result;
  std::cout << dump(r);
  return kPass;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--out", c.out, "Write the report (or output file) here instead of stdout");
  sub->add_flag("--timestamps", c.timestamps, "Add a generation time to the report");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"derpair: exact checks for algebras, Der pairs and their compatible variants"};
  app.footer(
      "Files index basis vectors from 0; reports name them e1..en unless labels are given.\n"
      "Exit codes: 0 pass, 1 mathematical finding, 2 operational error.\n"
      "DERPAIR_DEGREE_BUDGET overrides the cochain coordinate budget (default 20000).");
  app.require_subcommand(1);

  Common common;
  CheckArgs check;
  auto* s_check = app.add_subcommand("check", "Verify the axioms of a presentation, or an operator role");
  s_check->add_option("file", check.file, "Presentation file")->required();
  s_check->add_option("--kind", check.kind, "Check as this kind instead of the file's");
  s_check->add_option("--operator", check.op, "Name in the file's \"operators\" section");
  s_check->add_option("--role", check.role,
                      "derivation | rota-baxter[:weight] | nijenhuis | idempotent-endomorphism");
  add_common(s_check, common);

  CohomologyArgs coh;
  auto* s_coh = app.add_subcommand("cohomology", "Cohomology dimensions and a d∘d = 0 certificate");
  s_coh->add_option("file", coh.file, "Presentation file")->required();
  s_coh->add_option("--complex", coh.flavor,
                    "hochschild | chevalley-eilenberg | assder | lieder | compatible-associative | cad | cldp")
      ->required();
  s_coh->add_option("--max-degree", coh.max_degree, "Highest degree reported")->capture_default_str();
  s_coh->add_option("--sign", coh.sign, "Last shadow sign of cad/cldp: repaired | verbatim")->capture_default_str();
  add_common(s_coh, common);

  McArgs mc;
  auto* s_mc = app.add_subcommand("mc", "Maurer-Cartan characterisation of a (compatible) Der pair");
  s_mc->add_option("file", mc.file, "Presentation file")->required();
  s_mc->add_flag("--pair", mc.pair, "Compatible pair check");
  s_mc->add_option("--perturbation", mc.perturbation, "Check the deformation equation for this perturbation");
  add_common(s_mc, common);

  DendrifyArgs den;
  auto* s_den = app.add_subcommand("dendrify", "Transfer a structure along a recipe");
  s_den->add_option("file", den.file, "Presentation file")->required();
  s_den->add_option("--recipe", den.recipe,
                    "A recipe name, or nijenhuis-product | rota-baxter-deform | endomorphism-brackets | "
                    "rota-baxter-prelie with --operator")
      ->required();
  s_den->add_option("--operator", den.op, "Operator name for the operator-induced constructions");
  s_den->add_option("--k1", den.k1, "linear-combine coefficient of the first product");
  s_den->add_option("--k2", den.k2, "linear-combine coefficient of the second product");
  s_den->add_option("--p1", den.p1, "linear-combine coefficient of the first derivation");
  s_den->add_option("--p2", den.p2, "linear-combine coefficient of the second derivation");
  add_common(s_den, common);

  BracketArgs br;
  auto* s_br = app.add_subcommand("bracket", "Graded bracket of two cochain files");
  s_br->add_option("--kind", br.kind, "g | nr | dc | assder")->required();
  s_br->add_option("f", br.f, "First cochain file")->required();
  s_br->add_option("g", br.g, "Second cochain file")->required();
  add_common(s_br, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*s_check) return cmd_check(check, common);
    if (*s_coh) return cmd_cohomology(coh, common);
    if (*s_mc) return cmd_mc(mc, common);
    if (*s_den) return cmd_dendrify(den, common);
    if (*s_br) return cmd_bracket(br, common);
  } catch (const std::exception& e) {
    std::cerr << "derpair: error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
