#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "derpair/matrix.hpp"
#include "derpair/scalar.hpp"

namespace derpair {

using Tuple = std::vector<std::size_t>;

/// Finite-dimensional space with a fixed ordered basis.
class Space {
 public:
  Space() = default;
  explicit Space(std::size_t dim);
  explicit Space(std::vector<std::string> labels);

  std::size_t dim() const { return dim_; }
  std::string label(std::size_t i) const;
  std::vector<std::string> labels() const;
  bool has_custom_labels() const { return labels_ != nullptr; }

  friend bool operator==(const Space& a, const Space& b);

 private:
  std::size_t dim_ = 0;
  std::shared_ptr<const std::vector<std::string>> labels_;
};

enum class Symmetry { kGeneral, kAlternating };

struct Entry {
  Tuple in;
  std::size_t out = 0;
  Scalar value;
};

/// Sparse k-linear map V^{⊗k} → V (kGeneral) or Λ^k V → V (kAlternating).
///
/// Alternating maps store only strictly increasing input tuples; writes at other
/// tuples are sorted with the permutation sign and writes at repeated tuples
/// must be zero.
template <Symmetry S>
class Cochain {
 public:
  static constexpr bool kAlternating = S == Symmetry::kAlternating;

  Cochain() = default;
  Cochain(Space space, std::size_t arity);

  static Cochain identity(const Space& space);

  const Space& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  std::size_t arity() const { return arity_; }

  void add(const Tuple& in, std::size_t out, const Scalar& value);
  void set(const Tuple& in, std::size_t out, const Scalar& value);
  Scalar coeff(const Tuple& in, std::size_t out) const;

  /// Value at a tuple of basis indices.
  Vec eval(const Tuple& args) const;
  /// Value at arbitrary coordinate vectors, by multilinearity.
  Vec eval(const std::vector<Vec>& args) const;

  /// Nonzero coefficients in lexicographic (input, output) order.
  std::vector<Entry> entries() const;
  std::size_t nnz() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  Cochain& operator+=(const Cochain& other);
  Cochain& operator-=(const Cochain& other);
  Cochain& operator*=(const Scalar& s);
  Cochain operator-() const;
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Scalar& s, Cochain a) { return a *= s; }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.arity_ == b.arity_ && a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
  }

  static std::size_t coord_size(std::size_t dim, std::size_t arity);
  std::size_t coord_size() const { return coord_size(dim(), arity_); }
  Vec coords() const;
  static Cochain from_coords(const Space& space, std::size_t arity, const Vec& coords);

 private:
  std::uint64_t key(const Tuple& in, std::size_t out) const;
  Entry decode(std::uint64_t key, const Scalar& value) const;
  void check_tuple(const Tuple& in, std::size_t out) const;

  Space space_;
  std::size_t arity_ = 0;
  std::map<std::uint64_t, Scalar> coeffs_;
};

template <Symmetry S>
Vec coords(const Cochain<S>& c) {
  return c.coords();
}

using MultiMap = Cochain<Symmetry::kGeneral>;
using AltMap = Cochain<Symmetry::kAlternating>;

extern template class Cochain<Symmetry::kGeneral>;
extern template class Cochain<Symmetry::kAlternating>;

/// Sorts a tuple in place; returns the permutation sign, or 0 on a repeat.
int sort_with_sign(Tuple& t);

/// Lexicographic rank of a strictly increasing tuple among all such tuples.
std::size_t combination_rank(const Tuple& t, std::size_t n);
std::size_t binomial(std::size_t n, std::size_t k);

/// Expands an alternating map to its full multilinear table.
MultiMap to_multi(const AltMap& f);
/// Restricts a skew-symmetric multilinear map; nullopt when it is not skew.
std::optional<AltMap> try_alt(const MultiMap& f);
/// As try_alt, throwing ShapeError on a non-skew input.
AltMap to_alt(const MultiMap& f);

/// Linear endomorphism whose column i holds the image of e_i.
MultiMap linear_map(const Space& space, const Matrix& m);
Matrix to_matrix(const MultiMap& f);
/// a∘b for linear endomorphisms.
MultiMap compose1(const MultiMap& a, const MultiMap& b);
/// Linear map applied to a coordinate vector.
Vec apply1(const MultiMap& f, const Vec& x);
Vec apply2(const MultiMap& f, const Vec& x, const Vec& y);

void require_same_space(const Space& a, const Space& b, const char* what);

/// The pair (f_n, g_{n-1}) of the Der-pair complexes. An absent shadow is zero.
template <class Map>
struct DerCochain {
  Map top;
  std::optional<Map> shadow;

  DerCochain() = default;
  explicit DerCochain(Map t, std::optional<Map> s = std::nullopt);

  std::size_t degree() const { return top.arity(); }
  const Space& space() const { return top.space(); }
  Map shadow_or_zero() const;
  bool is_zero() const { return top.is_zero() && (!shadow || shadow->is_zero()); }

  DerCochain& operator+=(const DerCochain& other);
  DerCochain& operator*=(const Scalar& s);
  friend DerCochain operator+(DerCochain a, const DerCochain& b) { return a += b; }
  friend DerCochain operator-(DerCochain a, const DerCochain& b) {
    DerCochain nb = b;
    nb *= Scalar(-1);
    return a += nb;
  }
  friend DerCochain operator*(const Scalar& s, DerCochain a) { return a *= s; }
  friend bool operator==(const DerCochain& a, const DerCochain& b) {
    if (!(a.top == b.top)) return false;
    if (a.degree() == 0) return true;
    return a.shadow_or_zero() == b.shadow_or_zero();
  }
};

/// n-tuple of degree-n Der cochains of the compatible complexes.
template <class Map>
struct CompatCochain {
  std::vector<DerCochain<Map>> parts;

  std::size_t degree() const { return parts.empty() ? 0 : parts.front().degree(); }
  bool is_zero() const;
  friend bool operator==(const CompatCochain& a, const CompatCochain& b) = default;
};

using AssDerCochain = DerCochain<MultiMap>;
using LieDerCochain = DerCochain<AltMap>;

/// Coordinates of a degree-n Der cochain: top block, then the shadow block when n ≥ 2.
template <class Map>
std::size_t der_coord_size(std::size_t dim, std::size_t n);
template <class Map>
Vec coords(const DerCochain<Map>& c);
template <class Map>
DerCochain<Map> der_from_coords(const Space& space, std::size_t n, const Vec& v);

template <class Map>
std::size_t compat_coord_size(std::size_t dim, std::size_t n);
template <class Map>
Vec coords(const CompatCochain<Map>& c);
template <class Map>
CompatCochain<Map> compat_from_coords(const Space& space, std::size_t n, const Vec& v);

}  // namespace derpair
