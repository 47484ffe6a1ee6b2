#pragma once

#include "derpair/cochain.hpp"

namespace derpair {

/// (f∘g)(x_1,…,x_{p+q+1}) = Σ_i (−1)^{(i−1)q} f(x_1,…,g(x_i,…,x_{i+q}),…).
MultiMap circle_g(const MultiMap& f, const MultiMap& g);

/// (f∘̄g)(x_1,…) = Σ_{σ∈Sh(n+1,m)} sgn(σ) f(g(x_σ(1),…,x_σ(n+1)), x_σ(n+2),…).
AltMap circle_nr(const AltMap& f, const AltMap& g);

/// [f,g]_G = f∘g − (−1)^{pq} g∘f, p = arity(f)−1, q = arity(g)−1.
MultiMap gerstenhaber(const MultiMap& f, const MultiMap& g);

/// [f,g]_NR = f∘̄g − (−1)^{mn} g∘̄f, m = arity(f)−1, n = arity(g)−1.
AltMap nijenhuis_richardson(const AltMap& f, const AltMap& g);

inline MultiMap bracket(const MultiMap& f, const MultiMap& g) { return gerstenhaber(f, g); }
inline AltMap bracket(const AltMap& f, const AltMap& g) { return nijenhuis_richardson(f, g); }

/// {(f_{m+1},g_m),(f_{n+1},g_n)} on DC*, of degree m+n.
LieDerCochain dc_bracket(const LieDerCochain& a, const LieDerCochain& b);

/// [[(f_m,f_{m−1}),(g_n,g_{n−1})]] on C*_AssDer, landing in C^{m+n−1}.
AssDerCochain assder_bracket(const AssDerCochain& a, const AssDerCochain& b);

inline LieDerCochain bracket(const LieDerCochain& a, const LieDerCochain& b) { return dc_bracket(a, b); }
inline AssDerCochain bracket(const AssDerCochain& a, const AssDerCochain& b) { return assder_bracket(a, b); }

/// Graded degree of a cochain in its Lie algebra: arity − 1.
template <class Map>
long graded_degree(const Map& f) {
  return static_cast<long>(f.arity()) - 1;
}

/// Graded degree of a Der cochain: arity(top) − 1 in either flavour.
template <class Map>
long graded_degree(const DerCochain<Map>& c) {
  return static_cast<long>(c.top.arity()) - 1;
}

/// Df = Σ_i f∘(1⊗…⊗δ⊗…⊗1) − δ∘f.
MultiMap der_D(const MultiMap& delta, const MultiMap& f);
AltMap der_D(const MultiMap& delta, const AltMap& f);

/// Views an arity-1 map as alternating (every linear map is).
AltMap as_alt(const MultiMap& linear);
MultiMap as_multi(const AltMap& linear);

}  // namespace derpair
