#pragma once

#include <functional>

#include "derpair/cochain.hpp"
#include "derpair/matrix.hpp"

// Slow, dense reference formulas evaluated tuple by tuple. They share no code
// with the sparse bracket engine.
namespace derpair::oracle {

std::vector<Tuple> tuples(std::size_t dim, std::size_t arity);

MultiMap circle_g(const MultiMap& f, const MultiMap& g);
MultiMap gerstenhaber(const MultiMap& f, const MultiMap& g);
/// Shuffle sum over subsets of positions fed to g, evaluated on the full tables.
AltMap circle_nr(const AltMap& f, const AltMap& g);
AltMap nijenhuis_richardson(const AltMap& f, const AltMap& g);

/// (df)(x_0..x_n) = x_0·f(x_1..) + Σ(−1)^{i+1} f(..,x_i x_{i+1},..) + (−1)^{n+1} f(x_0..x_{n−1})·x_n.
/// At n = 0, f is an element a and (da)(x) = x·a − a·x.
MultiMap hochschild_face_sum(const MultiMap& mu, const MultiMap& f);
/// (df)(x_0..x_n) = Σ(−1)^i [x_i, f(..x̂_i..)] + Σ_{i<j}(−1)^{i+j} f([x_i,x_j], ..x̂_i..x̂_j..).
AltMap chevalley_eilenberg(const AltMap& w, const AltMap& f);

/// Compatible Der differential written out component by component:
/// top_j = [w₂,f^{j−1}] + [w₁,f^j], shadow_j = −[f^{j−1},δ₂] − [f^j,δ₁] − [w₂,g^{j−1}] − [w₁,g^j],
/// all times (−1)^{n−1}. `flip_last` turns the [w₂,gⁿ] term of the last component positive.
CompatCochain<MultiMap> compat_der_d(const MultiMap& w1, const MultiMap& w2, const MultiMap& d1, const MultiMap& d2,
                                     const CompatCochain<MultiMap>& c, bool flip_last = false);
CompatCochain<AltMap> compat_der_d(const AltMap& w1, const AltMap& w2, const AltMap& d1, const AltMap& d2,
                                   const CompatCochain<AltMap>& c, bool flip_last = false);

/// Columns are images of basis vectors.
Matrix matrix_of(std::size_t in_dim, const std::function<Vec(const Vec&)>& op);

}  // namespace derpair::oracle
