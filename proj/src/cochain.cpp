#include "derpair/cochain.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "derpair/errors.hpp"

namespace derpair {

Space::Space(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw ShapeError("space dimension must be at least 1");
}

Space::Space(std::vector<std::string> labels) : dim_(labels.size()) {
  if (dim_ == 0) throw ShapeError("space dimension must be at least 1");
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) throw SchemaError("basis labels must be distinct");
  bool default_labels = true;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (labels[i] != "e" + std::to_string(i + 1)) default_labels = false;
  }
  if (!default_labels) labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

std::string Space::label(std::size_t i) const {
  if (labels_) return labels_->at(i);
  return "e" + std::to_string(i + 1);
}

std::vector<std::string> Space::labels() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim_; ++i) out.push_back(label(i));
  return out;
}

bool operator==(const Space& a, const Space& b) {
  if (a.dim_ != b.dim_) return false;
  if (a.labels_ == b.labels_) return true;
  if (!a.labels_ || !b.labels_) return false;
  return *a.labels_ == *b.labels_;
}

void require_same_space(const Space& a, const Space& b, const char* what) {
  if (!(a == b)) {
    throw SpaceMismatch(std::string(what) + ": operands live on different spaces (dim " +
                        std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) + ")");
  }
}

int sort_with_sign(Tuple& t) {
  int sign = 1;
  for (std::size_t i = 1; i < t.size(); ++i) {
    for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
      if (t[j - 1] == t[j]) return 0;
      std::swap(t[j - 1], t[j]);
      sign = -sign;
    }
  }
  return sign;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::size_t combination_rank(const Tuple& t, std::size_t n) {
  const std::size_t k = t.size();
  std::size_t rank = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = start; v < t[i]; ++v) rank += binomial(n - 1 - v, k - 1 - i);
    start = t[i] + 1;
  }
  return rank;
}

namespace {

Tuple unrank_combination(std::size_t rank, std::size_t n, std::size_t k) {
  Tuple t;
  std::size_t v = 0;
  for (std::size_t i = 0; i < k; ++i) {
    while (true) {
      const std::size_t c = binomial(n - 1 - v, k - 1 - i);
      if (rank < c) break;
      rank -= c;
      ++v;
    }
    t.push_back(v++);
  }
  return t;
}

}  // namespace

template <Symmetry S>
Cochain<S>::Cochain(Space space, std::size_t arity) : space_(std::move(space)), arity_(arity) {
  long double size = 1;
  for (std::size_t i = 0; i <= arity; ++i) size *= static_cast<long double>(space_.dim());
  if (size > static_cast<long double>(std::numeric_limits<std::uint64_t>::max() / 4)) {
    throw ShapeError("cochain arity " + std::to_string(arity) + " too large for dimension " +
                     std::to_string(space_.dim()));
  }
}

template <Symmetry S>
Cochain<S> Cochain<S>::identity(const Space& space) {
  Cochain id(space, 1);
  for (std::size_t i = 0; i < space.dim(); ++i) id.add({i}, i, 1);
  return id;
}

template <Symmetry S>
void Cochain<S>::check_tuple(const Tuple& in, std::size_t out) const {
  if (in.size() != arity_) {
    throw ShapeError("expected " + std::to_string(arity_) + " arguments, got " +
                     std::to_string(in.size()));
  }
  const std::size_t d = dim();
  if (out >= d || std::any_of(in.begin(), in.end(), [d](std::size_t i) { return i >= d; })) {
    throw ShapeError("basis index out of range for dimension " + std::to_string(d));
  }
}

template <Symmetry S>
std::uint64_t Cochain<S>::key(const Tuple& in, std::size_t out) const {
  std::uint64_t code = 0;
  for (auto i : in) code = code * dim() + i;
  return code * dim() + out;
}

template <Symmetry S>
Entry Cochain<S>::decode(std::uint64_t k, const Scalar& value) const {
  Entry e;
  e.value = value;
  e.out = static_cast<std::size_t>(k % dim());
  k /= dim();
  e.in.assign(arity_, 0);
  for (std::size_t i = arity_; i > 0; --i) {
    e.in[i - 1] = static_cast<std::size_t>(k % dim());
    k /= dim();
  }
  return e;
}

template <Symmetry S>
void Cochain<S>::add(const Tuple& in, std::size_t out, const Scalar& value) {
  check_tuple(in, out);
  if (value.is_zero()) return;
  if constexpr (kAlternating) {
    Tuple sorted = in;
    const int sign = sort_with_sign(sorted);
    if (sign == 0) throw ShapeError("alternating map written at a repeated index");
    auto k = key(sorted, out);
    auto& slot = coeffs_[k];
    if (sign > 0) {
      slot += value;
    } else {
      slot -= value;
    }
    if (slot.is_zero()) coeffs_.erase(k);
  } else {
    auto k = key(in, out);
    auto& slot = coeffs_[k];
    slot += value;
    if (slot.is_zero()) coeffs_.erase(k);
  }
}

template <Symmetry S>
void Cochain<S>::set(const Tuple& in, std::size_t out, const Scalar& value) {
  check_tuple(in, out);
  Tuple t = in;
  Scalar v = value;
  if constexpr (kAlternating) {
    const int sign = sort_with_sign(t);
    if (sign == 0) {
      if (!value.is_zero()) throw ShapeError("alternating map written at a repeated index");
      return;
    }
    if (sign < 0) v = -v;
  }
  const auto k = key(t, out);
  if (v.is_zero()) {
    coeffs_.erase(k);
  } else {
    coeffs_[k] = v;
  }
}

template <Symmetry S>
Scalar Cochain<S>::coeff(const Tuple& in, std::size_t out) const {
  check_tuple(in, out);
  Tuple t = in;
  int sign = 1;
  if constexpr (kAlternating) {
    sign = sort_with_sign(t);
    if (sign == 0) return Scalar{};
  }
  auto it = coeffs_.find(key(t, out));
  if (it == coeffs_.end()) return Scalar{};
  return sign > 0 ? it->second : -it->second;
}

template <Symmetry S>
Vec Cochain<S>::eval(const Tuple& args) const {
  if (args.size() != arity_) {
    throw ShapeError("expected " + std::to_string(arity_) + " arguments, got " +
                     std::to_string(args.size()));
  }
  Vec out(dim());
  Tuple t = args;
  int sign = 1;
  if constexpr (kAlternating) {
    sign = sort_with_sign(t);
    if (sign == 0) return out;
  }
  check_tuple(t, 0);
  const auto lo = key(t, 0);
  for (auto it = coeffs_.lower_bound(lo); it != coeffs_.end() && it->first < lo + dim(); ++it) {
    out[it->first - lo] = sign > 0 ? it->second : -it->second;
  }
  return out;
}

template <Symmetry S>
Vec Cochain<S>::eval(const std::vector<Vec>& args) const {
  if (args.size() != arity_) {
    throw ShapeError("expected " + std::to_string(arity_) + " arguments, got " +
                     std::to_string(args.size()));
  }
  for (const auto& a : args) {
    if (a.size() != dim()) throw ShapeError("argument vector length mismatch");
  }
  Vec out(dim());
  for (const auto& [k, value] : coeffs_) {
    const Entry e = decode(k, value);
    if constexpr (kAlternating) {
      // Sum over permutations of the stored increasing tuple.
      Tuple perm(arity_);
      for (std::size_t i = 0; i < arity_; ++i) perm[i] = i;
      do {
        Scalar c = e.value;
        for (std::size_t i = 0; i < arity_ && !c.is_zero(); ++i) c *= args[i][e.in[perm[i]]];
        if (c.is_zero()) continue;
        Tuple p = perm;
        if (sort_with_sign(p) < 0) c = -c;
        out[e.out] += c;
      } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
      Scalar c = e.value;
      for (std::size_t i = 0; i < arity_ && !c.is_zero(); ++i) c *= args[i][e.in[i]];
      if (!c.is_zero()) out[e.out] += c;
    }
  }
  return out;
}

template <Symmetry S>
std::vector<Entry> Cochain<S>::entries() const {
  std::vector<Entry> out;
  out.reserve(coeffs_.size());
  for (const auto& [k, v] : coeffs_) out.push_back(decode(k, v));
  return out;
}

template <Symmetry S>
Cochain<S>& Cochain<S>::operator+=(const Cochain& other) {
  require_same_space(space_, other.space_, "cochain sum");
  if (arity_ != other.arity_) throw ShapeError("cochain sum: arity mismatch");
  for (const auto& [k, v] : other.coeffs_) {
    auto& slot = coeffs_[k];
    slot += v;
    if (slot.is_zero()) coeffs_.erase(k);
  }
  return *this;
}

template <Symmetry S>
Cochain<S>& Cochain<S>::operator-=(const Cochain& other) {
  require_same_space(space_, other.space_, "cochain difference");
  if (arity_ != other.arity_) throw ShapeError("cochain difference: arity mismatch");
  for (const auto& [k, v] : other.coeffs_) {
    auto& slot = coeffs_[k];
    slot -= v;
    if (slot.is_zero()) coeffs_.erase(k);
  }
  return *this;
}

template <Symmetry S>
Cochain<S>& Cochain<S>::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, v] : coeffs_) v *= s;
  return *this;
}

template <Symmetry S>
Cochain<S> Cochain<S>::operator-() const {
  Cochain r = *this;
  r *= Scalar(-1);
  return r;
}

template <Symmetry S>
std::size_t Cochain<S>::coord_size(std::size_t dim, std::size_t arity) {
  if constexpr (kAlternating) {
    return binomial(dim, arity) * dim;
  } else {
    std::size_t n = dim;
    for (std::size_t i = 0; i < arity; ++i) n *= dim;
    return n;
  }
}

template <Symmetry S>
Vec Cochain<S>::coords() const {
  Vec v(coord_size());
  for (const auto& [k, value] : coeffs_) {
    if constexpr (kAlternating) {
      const Entry e = decode(k, value);
      v[combination_rank(e.in, dim()) * dim() + e.out] = value;
    } else {
      v[k] = value;
    }
  }
  return v;
}

template <Symmetry S>
Cochain<S> Cochain<S>::from_coords(const Space& space, std::size_t arity, const Vec& coords) {
  Cochain c(space, arity);
  const std::size_t d = space.dim();
  if (coords.size() != coord_size(d, arity)) {
    throw ShapeError("from_coords: expected " + std::to_string(coord_size(d, arity)) +
                     " coordinates, got " + std::to_string(coords.size()));
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    if constexpr (kAlternating) {
      c.coeffs_.emplace(c.key(unrank_combination(i / d, d, arity), i % d), coords[i]);
    } else {
      c.coeffs_.emplace(i, coords[i]);
    }
  }
  return c;
}

template class Cochain<Symmetry::kGeneral>;
template class Cochain<Symmetry::kAlternating>;

MultiMap to_multi(const AltMap& f) {
  MultiMap m(f.space(), f.arity());
  Tuple perm(f.arity());
  for (const auto& e : f.entries()) {
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    do {
      Tuple in(f.arity());
      for (std::size_t i = 0; i < perm.size(); ++i) in[i] = e.in[perm[i]];
      Tuple p = perm;
      m.add(in, e.out, sort_with_sign(p) > 0 ? e.value : -e.value);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return m;
}

std::optional<AltMap> try_alt(const MultiMap& f) {
  AltMap a(f.space(), f.arity());
  for (const auto& e : f.entries()) {
    Tuple t = e.in;
    if (sort_with_sign(t) == 0) return std::nullopt;
    if (t == e.in) a.add(e.in, e.out, e.value);
  }
  if (!(to_multi(a) == f)) return std::nullopt;
  return a;
}

AltMap to_alt(const MultiMap& f) {
  auto a = try_alt(f);
  if (!a) throw ShapeError("map is not alternating");
  return *a;
}

MultiMap linear_map(const Space& space, const Matrix& m) {
  if (m.rows() != space.dim() || m.cols() != space.dim()) throw ShapeError("linear_map: shape mismatch");
  MultiMap f(space, 1);
  for (std::size_t i = 0; i < m.cols(); ++i) {
    for (std::size_t j = 0; j < m.rows(); ++j) f.add({i}, j, m(j, i));
  }
  return f;
}

Matrix to_matrix(const MultiMap& f) {
  if (f.arity() != 1) throw ShapeError("to_matrix: arity must be 1");
  Matrix m(f.dim(), f.dim());
  for (const auto& e : f.entries()) m(e.out, e.in[0]) = e.value;
  return m;
}

MultiMap compose1(const MultiMap& a, const MultiMap& b) {
  require_same_space(a.space(), b.space(), "compose");
  return linear_map(a.space(), compose(to_matrix(a), to_matrix(b)));
}

Vec apply1(const MultiMap& f, const Vec& x) { return f.eval(std::vector<Vec>{x}); }

Vec apply2(const MultiMap& f, const Vec& x, const Vec& y) { return f.eval(std::vector<Vec>{x, y}); }

template <class Map>
DerCochain<Map>::DerCochain(Map t, std::optional<Map> s) : top(std::move(t)), shadow(std::move(s)) {
  if (shadow) {
    require_same_space(top.space(), shadow->space(), "DerCochain");
    if (shadow->arity() + 1 != top.arity()) throw ShapeError("DerCochain: shadow arity must be top arity - 1");
  }
}

template <class Map>
Map DerCochain<Map>::shadow_or_zero() const {
  if (shadow) return *shadow;
  if (top.arity() == 0) throw ShapeError("degree-0 Der cochain has no shadow");
  return Map(top.space(), top.arity() - 1);
}

template <class Map>
DerCochain<Map>& DerCochain<Map>::operator+=(const DerCochain& other) {
  top += other.top;
  if (other.shadow) {
    if (shadow) {
      *shadow += *other.shadow;
    } else {
      shadow = other.shadow;
    }
  }
  return *this;
}

template <class Map>
DerCochain<Map>& DerCochain<Map>::operator*=(const Scalar& s) {
  top *= s;
  if (shadow) *shadow *= s;
  return *this;
}

template <class Map>
bool CompatCochain<Map>::is_zero() const {
  return std::all_of(parts.begin(), parts.end(), [](const auto& p) { return p.is_zero(); });
}

template <class Map>
std::size_t der_coord_size(std::size_t dim, std::size_t n) {
  return Map::coord_size(dim, n) + (n >= 2 ? Map::coord_size(dim, n - 1) : 0);
}

template <class Map>
Vec coords(const DerCochain<Map>& c) {
  Vec v = c.top.coords();
  if (c.degree() >= 2) {
    Vec s = c.shadow_or_zero().coords();
    v.insert(v.end(), s.begin(), s.end());
  }
  return v;
}

template <class Map>
DerCochain<Map> der_from_coords(const Space& space, std::size_t n, const Vec& v) {
  if (v.size() != der_coord_size<Map>(space.dim(), n)) throw ShapeError("der_from_coords: length mismatch");
  const std::size_t top_size = Map::coord_size(space.dim(), n);
  Map top = Map::from_coords(space, n, Vec(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(top_size)));
  if (n < 2) return DerCochain<Map>(std::move(top));
  Map shadow = Map::from_coords(space, n - 1, Vec(v.begin() + static_cast<std::ptrdiff_t>(top_size), v.end()));
  return DerCochain<Map>(std::move(top), std::move(shadow));
}

template <class Map>
std::size_t compat_coord_size(std::size_t dim, std::size_t n) {
  return n * der_coord_size<Map>(dim, n);
}

template <class Map>
Vec coords(const CompatCochain<Map>& c) {
  Vec v;
  for (const auto& p : c.parts) {
    Vec pc = coords(p);
    v.insert(v.end(), pc.begin(), pc.end());
  }
  return v;
}

template <class Map>
CompatCochain<Map> compat_from_coords(const Space& space, std::size_t n, const Vec& v) {
  if (v.size() != compat_coord_size<Map>(space.dim(), n)) throw ShapeError("compat_from_coords: length mismatch");
  const std::size_t block = der_coord_size<Map>(space.dim(), n);
  CompatCochain<Map> c;
  for (std::size_t i = 0; i < n; ++i) {
    auto first = v.begin() + static_cast<std::ptrdiff_t>(i * block);
    c.parts.push_back(der_from_coords<Map>(space, n, Vec(first, first + static_cast<std::ptrdiff_t>(block))));
  }
  return c;
}

template struct DerCochain<MultiMap>;
template struct DerCochain<AltMap>;
template struct CompatCochain<MultiMap>;
template struct CompatCochain<AltMap>;
template std::size_t der_coord_size<MultiMap>(std::size_t, std::size_t);
template std::size_t der_coord_size<AltMap>(std::size_t, std::size_t);
template Vec coords(const DerCochain<MultiMap>&);
template Vec coords(const DerCochain<AltMap>&);
template DerCochain<MultiMap> der_from_coords<MultiMap>(const Space&, std::size_t, const Vec&);
template DerCochain<AltMap> der_from_coords<AltMap>(const Space&, std::size_t, const Vec&);
template std::size_t compat_coord_size<MultiMap>(std::size_t, std::size_t);
template std::size_t compat_coord_size<AltMap>(std::size_t, std::size_t);
template Vec coords(const CompatCochain<MultiMap>&);
template Vec coords(const CompatCochain<AltMap>&);
template CompatCochain<MultiMap> compat_from_coords<MultiMap>(const Space&, std::size_t, const Vec&);
template CompatCochain<AltMap> compat_from_coords<AltMap>(const Space&, std::size_t, const Vec&);

}  // namespace derpair
