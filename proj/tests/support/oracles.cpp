#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace derpair::oracle {

std::vector<Tuple> tuples(std::size_t dim, std::size_t arity) {
  std::vector<Tuple> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < arity; ++i) total *= dim;
  for (std::size_t code = 0; code < total; ++code) {
    Tuple t(arity);
    std::size_t c = code;
    for (std::size_t i = arity; i-- > 0;) {
      t[i] = c % dim;
      c /= dim;
    }
    out.push_back(t);
  }
  return out;
}

namespace {

std::vector<Vec> basis_args(std::size_t dim, const Tuple& t, std::size_t from, std::size_t to) {
  std::vector<Vec> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(basis_vec(dim, t[i]));
  return out;
}

template <class Map>
void add_value(Map& out, const Tuple& t, const Vec& v) {
  for (std::size_t o = 0; o < v.size(); ++o) {
    if (!v[o].is_zero()) out.add(t, o, v[o]);
  }
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

MultiMap full(const AltMap& f) {
  MultiMap out(f.space(), f.arity());
  for (const auto& t : tuples(f.dim(), f.arity())) add_value(out, t, f.eval(t));
  return out;
}

AltMap restrict_alt(const MultiMap& f) {
  AltMap out(f.space(), f.arity());
  for (const auto& t : tuples(f.dim(), f.arity())) {
    if (!std::is_sorted(t.begin(), t.end()) || std::adjacent_find(t.begin(), t.end()) != t.end()) continue;
    add_value(out, t, f.eval(t));
  }
  return out;
}

}  // namespace

MultiMap circle_g(const MultiMap& f, const MultiMap& g) {
  const std::size_t d = f.dim(), p = f.arity() - 1, q = g.arity() - 1;
  MultiMap out(f.space(), p + q + 1);
  for (const auto& t : tuples(d, p + q + 1)) {
    Vec acc = zero_vec(d);
    for (std::size_t i = 0; i <= p; ++i) {
      auto args = basis_args(d, t, 0, i);
      args.push_back(g.eval(Tuple(t.begin() + i, t.begin() + i + q + 1)));
      const auto rest = basis_args(d, t, i + q + 1, t.size());
      args.insert(args.end(), rest.begin(), rest.end());
      const Vec v = f.eval(args);
      acc += (i * q) % 2 ? Scalar(-1) * v : v;
    }
    add_value(out, t, acc);
  }
  return out;
}

MultiMap gerstenhaber(const MultiMap& f, const MultiMap& g) {
  const std::size_t p = f.arity() - 1, q = g.arity() - 1;
  return (p * q) % 2 ? circle_g(f, g) + circle_g(g, f) : circle_g(f, g) - circle_g(g, f);
}

AltMap circle_nr(const AltMap& f, const AltMap& g) {
  const MultiMap ff = full(f), gg = full(g);
  const std::size_t d = f.dim(), m = f.arity() - 1, n = g.arity() - 1, total = m + n + 1;
  MultiMap out(f.space(), total);
  for (const auto& t : tuples(d, total)) {
    Vec acc = zero_vec(d);
    // Choose the n+1 positions fed to g; both blocks stay in increasing order.
    std::vector<bool> mask(total, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(n + 1), true);
    do {
      std::vector<std::size_t> perm;
      for (std::size_t i = 0; i < total; ++i)
        if (mask[i]) perm.push_back(i);
      for (std::size_t i = 0; i < total; ++i)
        if (!mask[i]) perm.push_back(i);
      Tuple inner;
      for (std::size_t i = 0; i <= n; ++i) inner.push_back(t[perm[i]]);
      std::vector<Vec> args{gg.eval(inner)};
      for (std::size_t i = n + 1; i < total; ++i) args.push_back(basis_vec(d, t[perm[i]]));
      acc += Scalar(permutation_sign(perm)) * ff.eval(args);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    add_value(out, t, acc);
  }
  return restrict_alt(out);
}

AltMap nijenhuis_richardson(const AltMap& f, const AltMap& g) {
  const std::size_t m = f.arity() - 1, n = g.arity() - 1;
  return (m * n) % 2 ? circle_nr(f, g) + circle_nr(g, f) : circle_nr(f, g) - circle_nr(g, f);
}

MultiMap hochschild_face_sum(const MultiMap& mu, const MultiMap& f) {
  const std::size_t d = mu.dim(), n = f.arity();
  MultiMap out(mu.space(), n + 1);
  for (const auto& t : tuples(d, n + 1)) {
    const Vec x0 = basis_vec(d, t[0]), xn = basis_vec(d, t[n]);
    Vec acc = mu.eval(std::vector<Vec>{x0, f.eval(Tuple(t.begin() + 1, t.end()))});
    for (std::size_t i = 0; i < n; ++i) {
      auto args = basis_args(d, t, 0, i);
      args.push_back(mu.eval(Tuple{t[i], t[i + 1]}));
      const auto rest = basis_args(d, t, i + 2, t.size());
      args.insert(args.end(), rest.begin(), rest.end());
      const Vec v = f.eval(args);
      acc += i % 2 == 0 ? Scalar(-1) * v : v;
    }
    const Vec last = mu.eval(std::vector<Vec>{f.eval(Tuple(t.begin(), t.begin() + static_cast<long>(n))), xn});
    acc += (n + 1) % 2 ? Scalar(-1) * last : last;
    add_value(out, t, acc);
  }
  return out;
}

AltMap chevalley_eilenberg(const AltMap& w, const AltMap& f) {
  const std::size_t d = w.dim(), n = f.arity();
  const MultiMap ww = full(w), ff = full(f);
  MultiMap out(w.space(), n + 1);
  for (const auto& t : tuples(d, n + 1)) {
    Vec acc = zero_vec(d);
    for (std::size_t i = 0; i <= n; ++i) {
      Tuple rest;
      for (std::size_t k = 0; k <= n; ++k)
        if (k != i) rest.push_back(t[k]);
      const Vec v = ww.eval(std::vector<Vec>{basis_vec(d, t[i]), ff.eval(rest)});
      acc += i % 2 ? Scalar(-1) * v : v;
    }
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        std::vector<Vec> args{ww.eval(Tuple{t[i], t[j]})};
        for (std::size_t k = 0; k <= n; ++k)
          if (k != i && k != j) args.push_back(basis_vec(d, t[k]));
        const Vec v = ff.eval(args);
        acc += (i + j) % 2 ? Scalar(-1) * v : v;
      }
    }
    add_value(out, t, acc);
  }
  return restrict_alt(out);
}

namespace {

MultiMap br(const MultiMap& f, const MultiMap& g) { return gerstenhaber(f, g); }
AltMap br(const AltMap& f, const AltMap& g) { return nijenhuis_richardson(f, g); }

template <class Map>
CompatCochain<Map> compat_d(const Map& w1, const Map& w2, const Map& d1, const Map& d2, const CompatCochain<Map>& c,
                            bool flip_last) {
  const std::size_t n = c.parts.size();
  const Space& s = w1.space();
  CompatCochain<Map> out;
  for (std::size_t j = 1; j <= n + 1; ++j) {
    Map top(s, n + 1), shadow(s, n);
    if (j >= 2) {
      const auto& prev = c.parts[j - 2];
      top += br(w2, prev.top);
      shadow -= br(prev.top, d2);
      if (n >= 2) {
        const Map t = br(w2, *prev.shadow);
        if (flip_last && j == n + 1) {
          shadow += t;
        } else {
          shadow -= t;
        }
      }
    }
    if (j <= n) {
      const auto& cur = c.parts[j - 1];
      top += br(w1, cur.top);
      shadow -= br(cur.top, d1);
      if (n >= 2) shadow -= br(w1, *cur.shadow);
    }
    if (n % 2 == 0) {
      top = Scalar(-1) * top;
      shadow = Scalar(-1) * shadow;
    }
    out.parts.push_back(DerCochain<Map>(top, shadow));
  }
  return out;
}

}  // namespace

CompatCochain<MultiMap> compat_der_d(const MultiMap& w1, const MultiMap& w2, const MultiMap& d1, const MultiMap& d2,
                                     const CompatCochain<MultiMap>& c, bool flip_last) {
  return compat_d(w1, w2, d1, d2, c, flip_last);
}

CompatCochain<AltMap> compat_der_d(const AltMap& w1, const AltMap& w2, const AltMap& d1, const AltMap& d2,
                                   const CompatCochain<AltMap>& c, bool flip_last) {
  return compat_d(w1, w2, d1, d2, c, flip_last);
}

Matrix matrix_of(std::size_t in_dim, const std::function<Vec(const Vec&)>& op) {
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < in_dim; ++i) cols.push_back(op(basis_vec(in_dim, i)));
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  return Matrix::from_columns(rows, cols);
}

}  // namespace derpair::oracle
