#include "derpair/maurer_cartan.hpp"

#include "derpair/brackets.hpp"
#include "derpair/errors.hpp"
#include "derpair/presentation.hpp"
#include "derpair/structures.hpp"

namespace derpair {

namespace {

template <class Map>
void note(McVerdict& v, const std::string& name, const Map& residual) {
  if (residual.is_zero()) return;
  const auto first = residual.entries().front();
  v.residuals.push_back({name, first.in, residual.eval(first.in)});
}

void require_space(const Space& a, const Space& b) { require_same_space(a, b, "Maurer-Cartan check"); }

void check_shapes(const AltMap& w, const MultiMap& delta) {
  if (w.arity() != 2 || delta.arity() != 1) throw ShapeError("Maurer-Cartan check needs a bracket and a linear map");
  require_space(w.space(), delta.space());
}

void check_shapes(const MultiMap& mu, const MultiMap& delta) {
  if (mu.arity() != 2 || delta.arity() != 1) throw ShapeError("Maurer-Cartan check needs a product and a linear map");
  require_space(mu.space(), delta.space());
}

void append(McVerdict& into, const McVerdict& from) {
  into.residuals.insert(into.residuals.end(), from.residuals.begin(), from.residuals.end());
}

McVerdict single_lieder(const AltMap& w, const MultiMap& delta, const std::string& wn, const std::string& dn) {
  check_shapes(w, delta);
  const LieDerCochain p(w, as_alt(delta));
  const LieDerCochain sq = dc_bracket(p, p);
  McVerdict v;
  note(v, "[" + wn + "," + wn + "]_NR", sq.top);
  // The shadow is −2[w,δ]_NR; report the bracket itself.
  note(v, "[" + wn + "," + dn + "]_NR", Scalar(-1, 2) * sq.shadow_or_zero());
  return v;
}

McVerdict single_assder(const MultiMap& mu, const MultiMap& delta, const std::string& mn, const std::string& dn) {
  check_shapes(mu, delta);
  const AssDerCochain p(mu, delta);
  const AssDerCochain sq = assder_bracket(p, p);
  McVerdict v;
  note(v, "[" + mn + "," + mn + "]_G", sq.top);
  note(v, "[" + mn + "," + dn + "]_G", Scalar(-1, 2) * sq.shadow_or_zero());
  return v;
}

}  // namespace

McVerdict mc_lieder(const AltMap& w, const MultiMap& delta) { return single_lieder(w, delta, "w", "delta"); }

McVerdict mc_assder(const MultiMap& mu, const MultiMap& delta) { return single_assder(mu, delta, "mu", "delta"); }

McVerdict mc_pair_lieder(const AltMap& w1, const MultiMap& delta1, const AltMap& w2, const MultiMap& delta2) {
  McVerdict v = single_lieder(w1, delta1, "w1", "delta1");
  append(v, single_lieder(w2, delta2, "w2", "delta2"));
  require_space(w1.space(), w2.space());
  const LieDerCochain cross = dc_bracket(LieDerCochain(w1, as_alt(delta1)), LieDerCochain(w2, as_alt(delta2)));
  note(v, "[w1,w2]_NR", cross.top);
  note(v, "[w1,delta2]_NR + [w2,delta1]_NR", Scalar(-1) * cross.shadow_or_zero());
  return v;
}

McVerdict mc_pair_assder(const MultiMap& mu1, const MultiMap& delta1, const MultiMap& mu2, const MultiMap& delta2) {
  McVerdict v = single_assder(mu1, delta1, "mu1", "delta1");
  append(v, single_assder(mu2, delta2, "mu2", "delta2"));
  require_space(mu1.space(), mu2.space());
  const AssDerCochain cross = assder_bracket(AssDerCochain(mu1, delta1), AssDerCochain(mu2, delta2));
  note(v, "[mu1,mu2]_G", cross.top);
  note(v, "[delta1,mu2]_G - [mu1,delta2]_G", cross.shadow_or_zero());
  return v;
}

McVerdict deformation_check(const AltMap& w, const MultiMap& delta, const AltMap& w1, const MultiMap& delta1) {
  check_shapes(w, delta);
  check_shapes(w1, delta1);
  require_space(w.space(), w1.space());
  if (!mc_lieder(w, delta).holds()) throw PreconditionError("deformation_check: base is not a LieDer pair");
  const LieDerCochain p(w, as_alt(delta));
  const LieDerCochain p1(w1, as_alt(delta1));
  const LieDerCochain eq = dc_bracket(p, p1) + Scalar(1, 2) * dc_bracket(p1, p1);
  McVerdict v;
  note(v, "[w,w1]_NR + 1/2[w1,w1]_NR", eq.top);
  note(v, "-[w,delta1]_NR - [w1,delta]_NR - [w1,delta1]_NR", eq.shadow_or_zero());
  return v;
}

McVerdict bidifferential_check(const std::vector<Matrix>& d1, const std::vector<Matrix>& d2) {
  if (d1.size() != d2.size()) throw ShapeError("bidifferential_check: differentials cover different degrees");
  for (std::size_t n = 0; n < d1.size(); ++n) {
    if (d1[n].rows() != d2[n].rows() || d1[n].cols() != d2[n].cols()) {
      throw ShapeError("bidifferential_check: degree " + std::to_string(n) + " matrices differ in shape");
    }
    if (n + 1 < d1.size() && d1[n + 1].cols() != d1[n].rows()) {
      throw ShapeError("bidifferential_check: degree " + std::to_string(n) + " and " + std::to_string(n + 1) +
                       " do not compose");
    }
  }
  McVerdict v;
  for (std::size_t n = 0; n + 1 < d1.size(); ++n) {
    const Matrix anti = compose(d1[n + 1], d2[n]) + compose(d2[n + 1], d1[n]);
    for (std::size_t c = 0; c < anti.cols(); ++c) {
      const Vec col = anti.column(c);
      if (!is_zero(col)) {
        v.residuals.push_back({"d1 d2 + d2 d1 on degree " + std::to_string(n), Tuple{c}, col});
        break;
      }
    }
  }
  return v;
}

std::vector<Matrix> der_differentials(Flavor flavor, const MultiMap& w, const MultiMap& delta,
                                      std::size_t max_degree) {
  Kind kind;
  if (flavor == Flavor::lieder) {
    kind = Kind::lieder;
  } else if (flavor == Flavor::assder) {
    kind = Kind::assder;
  } else {
    throw PreconditionError("der_differentials: only the assder and lieder complexes apply");
  }
  Presentation p(w.space(), kind);
  p.products[kind == Kind::lieder ? "bracket" : "mu"] = w;
  p.derivations["delta"] = delta;
  const Complex cx(flavor, p);
  std::vector<Matrix> out;
  for (std::size_t n = 0; n <= max_degree; ++n) out.push_back(cx.differential(n));
  return out;
}

}  // namespace derpair
