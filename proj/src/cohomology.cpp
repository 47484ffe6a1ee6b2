#include "derpair/cohomology.hpp"

#include <array>
#include <cstdlib>
#include <utility>

#include "derpair/brackets.hpp"
#include "derpair/errors.hpp"
#include "derpair/structures.hpp"

namespace derpair {

namespace {

Scalar sign_of(long k) { return (k % 2 == 0) ? Scalar(1) : Scalar(-1); }

struct FlavorInfo {
  Flavor flavor;
  const char* name;
  std::vector<Kind> kinds;
};

const std::vector<FlavorInfo>& flavor_table() {
  static const std::vector<FlavorInfo> t{
      {Flavor::hochschild, "hochschild", {Kind::associative, Kind::assder}},
      {Flavor::chevalley_eilenberg, "chevalley-eilenberg", {Kind::lie, Kind::lieder}},
      {Flavor::assder, "assder", {Kind::assder}},
      {Flavor::lieder, "lieder", {Kind::lieder}},
      {Flavor::compatible_associative, "compatible-associative",
       {Kind::compatible_associative, Kind::compatible_assder}},
      {Flavor::cad, "cad", {Kind::compatible_assder}},
      {Flavor::cldp, "cldp", {Kind::compatible_lieder}},
  };
  return t;
}

const FlavorInfo& info(Flavor f) {
  for (const auto& i : flavor_table()) {
    if (i.flavor == f) return i;
  }
  throw SchemaError("unknown cohomology flavor");
}

void require_structure(const Presentation& p, Kind kind, const char* what) {
  Presentation as = p;
  as.kind = kind;
  if (auto v = check_structure(as)) {
    throw PreconditionError(std::string(what) + ": base is not " + kind_name(kind) + " (" + v->describe(p.space) +
                            ")");
  }
}

// ---- unchecked kernels ----

template <class Map>
DerCochain<Map> der_d(const Map& w, const MultiMap& delta, const DerCochain<Map>& c) {
  const long n = static_cast<long>(c.degree());
  Map top = sign_of(n - 1) * bracket(w, c.top);
  Map shadow = sign_of(n) * der_D(delta, c.top);
  if (n >= 2) shadow += sign_of(n - 2) * bracket(w, c.shadow_or_zero());
  return DerCochain<Map>(std::move(top), std::move(shadow));
}

template <class Map>
Map lift_delta(const MultiMap& d) {
  if constexpr (std::is_same_v<Map, AltMap>) {
    return as_alt(d);
  } else {
    return d;
  }
}

template <class Map>
CompatCochain<Map> compat_d(const Map& w1, const Map& w2, const MultiMap& d1, const MultiMap& d2,
                            const CompatCochain<Map>& c, LastShadowSign sign) {
  const std::size_t n = c.degree();
  if (c.parts.size() != n || n == 0) throw ShapeError("compatible cochain of degree n needs n components");
  const Space& space = w1.space();
  const Map delta1 = lift_delta<Map>(d1), delta2 = lift_delta<Map>(d2);
  const Scalar s = sign_of(static_cast<long>(n) - 1);
  CompatCochain<Map> out;
  for (std::size_t j = 0; j <= n; ++j) {
    Map top(space, n + 1);
    Map shadow(space, n);
    if (j >= 1) {
      const auto& prev = c.parts[j - 1];
      top += bracket(w2, prev.top);
      shadow -= bracket(prev.top, delta2);
      if (n >= 2) {
        const Map t = bracket(w2, prev.shadow_or_zero());
        if (j == n && sign == LastShadowSign::verbatim) {
          shadow += t;
        } else {
          shadow -= t;
        }
      }
    }
    if (j < n) {
      const auto& cur = c.parts[j];
      top += bracket(w1, cur.top);
      shadow -= bracket(cur.top, delta1);
      if (n >= 2) shadow -= bracket(w1, cur.shadow_or_zero());
    }
    out.parts.emplace_back(s * top, s * shadow);
  }
  return out;
}

std::vector<MultiMap> compat_assoc_kernel(const MultiMap& mu1, const MultiMap& mu2, const std::vector<MultiMap>& c) {
  const std::size_t n = c.size();
  if (n == 0) throw ShapeError("compatible associative cochain of degree 0 has no components");
  const Scalar s = sign_of(static_cast<long>(n) - 1);
  std::vector<MultiMap> out;
  for (std::size_t j = 0; j <= n; ++j) {
    MultiMap f(mu1.space(), n + 1);
    if (j >= 1) f += gerstenhaber(mu2, c[j - 1]);
    if (j < n) f += gerstenhaber(mu1, c[j]);
    out.push_back(s * f);
  }
  return out;
}

// x ↦ m(x,y) − m(y,x), the degree-0 differential.
MultiMap inner(const MultiMap& m, const Vec& y) {
  MultiMap out(m.space(), 1);
  const std::size_t d = m.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const Vec e = basis_vec(d, i);
    const Vec v = apply2(m, e, y) - apply2(m, y, e);
    for (std::size_t k = 0; k < d; ++k) {
      if (!v[k].is_zero()) out.set({i}, k, v[k]);
    }
  }
  return out;
}

// x ↦ m(x,y).
MultiMap right_fixed(const MultiMap& m, const Vec& y) {
  MultiMap out(m.space(), 1);
  const std::size_t d = m.dim();
  for (std::size_t i = 0; i < d; ++i) {
    const Vec v = apply2(m, basis_vec(d, i), y);
    for (std::size_t k = 0; k < d; ++k) {
      if (!v[k].is_zero()) out.set({i}, k, v[k]);
    }
  }
  return out;
}

AltMap alt_bracket(const Presentation& p, const std::string& name) { return to_alt(p.product(name)); }

std::vector<Vec> c0_basis(const Presentation& p) {
  const std::size_t d = p.space.dim();
  const auto& m1 = p.product("mu1");
  const auto& m2 = p.product("mu2");
  Matrix eq(d * d, d);
  for (std::size_t k = 0; k < d; ++k) {
    const Vec y = basis_vec(d, k);
    const Vec col = coords(inner(m1, y) - inner(m2, y));
    for (std::size_t r = 0; r < col.size(); ++r) eq(r, k) = col[r];
  }
  return kernel_basis(eq);
}

}  // namespace

const std::vector<Flavor>& all_flavors() {
  static const std::vector<Flavor> v = [] {
    std::vector<Flavor> out;
    for (const auto& i : flavor_table()) out.push_back(i.flavor);
    return out;
  }();
  return v;
}

std::string flavor_name(Flavor f) { return info(f).name; }

Flavor parse_flavor(std::string_view name) {
  for (const auto& i : flavor_table()) {
    if (name == i.name) return i.flavor;
  }
  throw SchemaError("unknown cohomology flavor '" + std::string(name) + "'");
}

std::vector<Kind> flavor_kinds(Flavor f) { return info(f).kinds; }

std::string sign_name(LastShadowSign s) { return s == LastShadowSign::repaired ? "repaired" : "verbatim"; }

MultiMap hochschild_d(const MultiMap& mu, const MultiMap& f) {
  Presentation p(mu.space(), Kind::associative);
  p.products["mu"] = mu;
  require_structure(p, Kind::associative, "hochschild_d");
  if (f.arity() == 0) throw ShapeError("hochschild_d: cochains start in degree 1");
  return sign_of(static_cast<long>(f.arity()) - 1) * gerstenhaber(mu, f);
}

AltMap ce_d(const AltMap& w, const AltMap& f) {
  Presentation p(w.space(), Kind::lie);
  p.products["bracket"] = to_multi(w);
  require_structure(p, Kind::lie, "ce_d");
  if (f.arity() == 0) throw ShapeError("ce_d: cochains start in degree 1");
  return sign_of(static_cast<long>(f.arity()) - 1) * nijenhuis_richardson(w, f);
}

AssDerCochain assder_d(const Presentation& p, const AssDerCochain& c) {
  require_structure(p, Kind::assder, "assder_d");
  if (c.degree() == 0) throw ShapeError("assder_d: cochains start in degree 1");
  return der_d(p.product("mu"), p.derivation("delta"), c);
}

LieDerCochain lieder_d(const Presentation& p, const LieDerCochain& c) {
  require_structure(p, Kind::lieder, "lieder_d");
  if (c.degree() == 0) throw ShapeError("lieder_d: cochains start in degree 1");
  return der_d(alt_bracket(p, "bracket"), p.derivation("delta"), c);
}

std::vector<MultiMap> compat_assoc_d(const Presentation& p, const std::vector<MultiMap>& c) {
  require_structure(p, Kind::compatible_associative, "compat_assoc_d");
  for (const auto& f : c) {
    if (f.arity() != c.size()) throw ShapeError("compat_assoc_d: degree-n cochain needs n components of arity n");
  }
  return compat_assoc_kernel(p.product("mu1"), p.product("mu2"), c);
}

std::size_t compat_assoc_c0_dim(const Presentation& p) {
  require_structure(p, Kind::compatible_associative, "compat_assoc_c0_dim");
  return c0_basis(p).size();
}

CompatCochain<MultiMap> cad_d(const Presentation& p, const CompatCochain<MultiMap>& c, LastShadowSign sign) {
  require_structure(p, Kind::compatible_assder, "cad_d");
  return compat_d(p.product("mu1"), p.product("mu2"), p.derivation("delta1"), p.derivation("delta2"), c, sign);
}

CompatCochain<AltMap> cldp_d(const Presentation& p, const CompatCochain<AltMap>& c, LastShadowSign sign) {
  require_structure(p, Kind::compatible_lieder, "cldp_d");
  return compat_d(alt_bracket(p, "bracket1"), alt_bracket(p, "bracket2"), p.derivation("delta1"),
                  p.derivation("delta2"), c, sign);
}

std::size_t degree_budget() {
  if (const char* env = std::getenv("DERPAIR_DEGREE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20000;
}

Complex::Complex(Flavor flavor, Presentation base, LastShadowSign sign)
    : flavor_(flavor), base_(std::move(base)), sign_(sign) {
  bool kind_ok = false;
  for (Kind k : flavor_kinds(flavor)) kind_ok = kind_ok || k == base_.kind;
  if (!kind_ok) {
    throw PreconditionError(flavor_name(flavor) + " cohomology does not apply to kind " + kind_name(base_.kind));
  }
  require_structure(base_, base_.kind, flavor_name(flavor).c_str());
  if (flavor == Flavor::compatible_associative) c0_basis_ = c0_basis(base_);
}

std::size_t Complex::cochain_dim(std::size_t n) const {
  const std::size_t d = base_.space.dim();
  switch (flavor_) {
    case Flavor::hochschild:
      return n == 0 ? d : MultiMap::coord_size(d, n);
    case Flavor::chevalley_eilenberg:
      return n == 0 ? d : AltMap::coord_size(d, n);
    case Flavor::assder:
      return n == 0 ? 0 : der_coord_size<MultiMap>(d, n);
    case Flavor::lieder:
      return n == 0 ? 0 : der_coord_size<AltMap>(d, n);
    case Flavor::compatible_associative:
      return n == 0 ? c0_basis_.size() : n * MultiMap::coord_size(d, n);
    case Flavor::cad:
      return n == 0 ? 0 : compat_coord_size<MultiMap>(d, n);
    case Flavor::cldp:
      return n == 0 ? 0 : compat_coord_size<AltMap>(d, n);
  }
  return 0;
}

void Complex::check_budget(std::size_t n) const {
  const std::size_t budget = degree_budget();
  const std::size_t d = base_.space.dim();
  const bool alternating =
      flavor_ == Flavor::chevalley_eilenberg || flavor_ == Flavor::lieder || flavor_ == Flavor::cldp;
  if (!alternating && n > 0 && d > 1) {
    // dⁿ⁺¹ bounds every non-alternating cochain space from below; stop before it overflows.
    std::size_t p = d;
    for (std::size_t i = 0; i < n; ++i) {
      p *= d;
      if (p > budget) {
        throw ResourceError("degree " + std::to_string(n) + " cochain space has more than " +
                            std::to_string(budget) + " coordinates (budget)");
      }
    }
  }
  const std::size_t dim = cochain_dim(n);
  if (dim > budget) {
    throw ResourceError("degree " + std::to_string(n) + " cochain space has " + std::to_string(dim) +
                        " coordinates, over the budget of " + std::to_string(budget));
  }
}

std::size_t Complex::cochain_dim_checked(std::size_t n) const {
  check_budget(n);
  return cochain_dim(n);
}

Vec Complex::apply(std::size_t n, const Vec& v) const {
  if (v.size() != cochain_dim(n)) throw ShapeError("Complex::apply: coordinate length mismatch");
  const Space& space = base_.space;
  const std::size_t d = space.dim();
  if (n == 0) {
    switch (flavor_) {
      case Flavor::hochschild:
        return coords(inner(base_.product("mu"), v));
      case Flavor::chevalley_eilenberg:
        return coords(right_fixed(base_.product("bracket"), v));
      case Flavor::compatible_associative: {
        Vec y = zero_vec(d);
        for (std::size_t k = 0; k < c0_basis_.size(); ++k) y += v[k] * c0_basis_[k];
        return coords(inner(base_.product("mu1"), y));
      }
      default:
        return {};
    }
  }
  switch (flavor_) {
    case Flavor::hochschild:
      return sign_of(static_cast<long>(n) - 1) *
             coords(gerstenhaber(base_.product("mu"), MultiMap::from_coords(space, n, v)));
    case Flavor::chevalley_eilenberg:
      return sign_of(static_cast<long>(n) - 1) *
             coords(nijenhuis_richardson(alt_bracket(base_, "bracket"), AltMap::from_coords(space, n, v)));
    case Flavor::assder:
      return coords(der_d(base_.product("mu"), base_.derivation("delta"), der_from_coords<MultiMap>(space, n, v)));
    case Flavor::lieder:
      return coords(
          der_d(alt_bracket(base_, "bracket"), base_.derivation("delta"), der_from_coords<AltMap>(space, n, v)));
    case Flavor::compatible_associative: {
      const std::size_t block = MultiMap::coord_size(d, n);
      std::vector<MultiMap> c;
      for (std::size_t i = 0; i < n; ++i) {
        auto first = v.begin() + static_cast<std::ptrdiff_t>(i * block);
        c.push_back(MultiMap::from_coords(space, n, Vec(first, first + static_cast<std::ptrdiff_t>(block))));
      }
      Vec out;
      for (const auto& f : compat_assoc_kernel(base_.product("mu1"), base_.product("mu2"), c)) {
        Vec fc = f.coords();
        out.insert(out.end(), fc.begin(), fc.end());
      }
      return out;
    }
    case Flavor::cad:
      return coords(compat_d(base_.product("mu1"), base_.product("mu2"), base_.derivation("delta1"),
                             base_.derivation("delta2"), compat_from_coords<MultiMap>(space, n, v), sign_));
    case Flavor::cldp:
      return coords(compat_d(alt_bracket(base_, "bracket1"), alt_bracket(base_, "bracket2"),
                             base_.derivation("delta1"), base_.derivation("delta2"),
                             compat_from_coords<AltMap>(space, n, v), sign_));
  }
  return {};
}

Matrix Complex::differential(std::size_t n) const {
  check_budget(n);
  check_budget(n + 1);
  const std::size_t cols = cochain_dim(n);
  const std::size_t rows = cochain_dim(n + 1);
  Matrix m(rows, cols);
  for (std::size_t u = 0; u < cols; ++u) {
    const Vec col = apply(n, basis_vec(cols, u));
    if (col.size() != rows && !(rows == 0 && col.empty())) throw ShapeError("differential column has wrong length");
    m.set_column(u, col.empty() ? zero_vec(rows) : col);
  }
  return m;
}

std::size_t Complex::rank(std::size_t n) const {
  check_budget(n);
  check_budget(n + 1);
  const std::size_t cols = cochain_dim(n);
  if (cols == 0 || cochain_dim(n + 1) == 0) return 0;
  Echelon e;
  for (std::size_t u = 0; u < cols; ++u) e.insert(apply(n, basis_vec(cols, u)));
  return e.rank();
}

bool Complex::dd_zero(std::size_t n) const {
  if (n == 0) return true;
  check_budget(n - 1);
  check_budget(n);
  check_budget(n + 1);
  const std::size_t cols = cochain_dim(n - 1);
  if (cols == 0 || cochain_dim(n + 1) == 0) return true;
  for (std::size_t u = 0; u < cols; ++u) {
    if (!is_zero(apply(n, apply(n - 1, basis_vec(cols, u))))) return false;
  }
  return true;
}

CohomologyReport cohomology(Flavor flavor, const Presentation& base, std::size_t max_degree, LastShadowSign sign) {
  Complex cx(flavor, base, sign);
  // Fail on the budget before any work, so a report is either complete or absent.
  for (std::size_t n = 0; n <= max_degree + 1; ++n) cx.cochain_dim_checked(n);
  CohomologyReport r;
  r.flavor = flavor;
  r.base_kind = base.kind;
  r.max_degree = max_degree;
  r.last_shadow_sign = sign;
  std::size_t prev_rank = 0;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    DegreeReport d;
    d.degree = n;
    d.cochain_dim = cx.cochain_dim(n);
    d.rank = cx.rank(n);
    d.cocycles = d.cochain_dim - d.rank;
    d.coboundaries = prev_rank;
    d.cohomology = d.cocycles - d.coboundaries;
    prev_rank = d.rank;
    r.degrees.push_back(d);
  }
  r.dd_certified = true;
  for (std::size_t n = 1; n <= max_degree; ++n) r.dd_certified = r.dd_certified && cx.dd_zero(n);
  if (flavor == Flavor::cad || flavor == Flavor::cldp) {
    const LastShadowSign other = sign == LastShadowSign::repaired ? LastShadowSign::verbatim : LastShadowSign::repaired;
    Complex alt(flavor, base, other);
    bool ok = true;
    for (std::size_t n = 1; n <= max_degree && ok; ++n) ok = alt.dd_zero(n);
    if (sign == LastShadowSign::repaired) {
      r.verbatim_sign_certifies = ok;
    } else {
      r.verbatim_sign_certifies = r.dd_certified;
    }
  }
  return r;
}

}  // namespace derpair
