#include "derpair/brackets.hpp"

#include "derpair/errors.hpp"

namespace derpair {

namespace {

bool odd(long v) { return (v % 2) != 0; }

std::vector<std::vector<Entry>> by_output(const std::vector<Entry>& entries, std::size_t dim) {
  std::vector<std::vector<Entry>> out(dim);
  for (const auto& e : entries) out[e.out].push_back(e);
  return out;
}

std::size_t result_arity(std::size_t a, std::size_t b, const char* what) {
  if (a + b == 0) throw ShapeError(std::string(what) + ": both operands have arity 0");
  return a + b - 1;
}

}  // namespace

MultiMap circle_g(const MultiMap& f, const MultiMap& g) {
  require_same_space(f.space(), g.space(), "circle_g");
  MultiMap out(f.space(), result_arity(f.arity(), g.arity(), "circle_g"));
  const long q = static_cast<long>(g.arity()) - 1;
  const auto g_by_out = by_output(g.entries(), g.dim());
  Tuple t;
  for (const auto& fe : f.entries()) {
    for (std::size_t i = 0; i < fe.in.size(); ++i) {
      const bool negate = odd(static_cast<long>(i) * q);
      for (const auto& ge : g_by_out[fe.in[i]]) {
        t.assign(fe.in.begin(), fe.in.begin() + static_cast<std::ptrdiff_t>(i));
        t.insert(t.end(), ge.in.begin(), ge.in.end());
        t.insert(t.end(), fe.in.begin() + static_cast<std::ptrdiff_t>(i + 1), fe.in.end());
        const Scalar v = fe.value * ge.value;
        out.add(t, fe.out, negate ? -v : v);
      }
    }
  }
  return out;
}

AltMap circle_nr(const AltMap& f, const AltMap& g) {
  require_same_space(f.space(), g.space(), "circle_nr");
  AltMap out(f.space(), result_arity(f.arity(), g.arity(), "circle_nr"));
  // Index f entries by each input index they contain, with its position.
  struct Slot {
    const Entry* entry;
    std::size_t pos;
  };
  const auto f_entries = f.entries();
  std::vector<std::vector<Slot>> f_by_input(f.dim());
  for (const auto& fe : f_entries) {
    for (std::size_t p = 0; p < fe.in.size(); ++p) f_by_input[fe.in[p]].push_back({&fe, p});
  }
  Tuple rest;
  Tuple merged;
  for (const auto& ge : g.entries()) {
    for (const auto& slot : f_by_input[ge.out]) {
      const Entry& fe = *slot.entry;
      rest.assign(fe.in.begin(), fe.in.end());
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(slot.pos));
      // Merge the sorted tuples, counting inversions between them.
      merged.clear();
      std::size_t i = 0;
      std::size_t j = 0;
      long inversions = 0;
      bool disjoint = true;
      while (i < ge.in.size() || j < rest.size()) {
        if (j == rest.size() || (i < ge.in.size() && ge.in[i] < rest[j])) {
          merged.push_back(ge.in[i++]);
        } else if (i == ge.in.size() || rest[j] < ge.in[i]) {
          inversions += static_cast<long>(ge.in.size() - i);
          merged.push_back(rest[j++]);
        } else {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) continue;
      const Scalar v = ge.value * fe.value;
      out.add(merged, fe.out, odd(inversions + static_cast<long>(slot.pos)) ? -v : v);
    }
  }
  return out;
}

MultiMap gerstenhaber(const MultiMap& f, const MultiMap& g) {
  const long p = static_cast<long>(f.arity()) - 1;
  const long q = static_cast<long>(g.arity()) - 1;
  MultiMap out = circle_g(f, g);
  const MultiMap back = circle_g(g, f);
  if (odd(p * q)) {
    out += back;
  } else {
    out -= back;
  }
  return out;
}

AltMap nijenhuis_richardson(const AltMap& f, const AltMap& g) {
  const long m = static_cast<long>(f.arity()) - 1;
  const long n = static_cast<long>(g.arity()) - 1;
  AltMap out = circle_nr(f, g);
  const AltMap back = circle_nr(g, f);
  if (odd(m * n)) {
    out += back;
  } else {
    out -= back;
  }
  return out;
}

namespace {

template <class Map>
DerCochain<Map> make_der(Map top, Map shadow) {
  if (top.arity() >= 2 || !shadow.is_zero()) return DerCochain<Map>(std::move(top), std::move(shadow));
  return DerCochain<Map>(std::move(top));
}

template <class Map>
void require_positive_degree(const DerCochain<Map>& c, const char* what) {
  if (c.top.arity() == 0) throw ShapeError(std::string(what) + ": top component must have arity >= 1");
}

}  // namespace

LieDerCochain dc_bracket(const LieDerCochain& a, const LieDerCochain& b) {
  require_same_space(a.space(), b.space(), "dc_bracket");
  require_positive_degree(a, "dc_bracket");
  require_positive_degree(b, "dc_bracket");
  const long m = graded_degree(a);
  const long n = graded_degree(b);
  AltMap top = nijenhuis_richardson(a.top, b.top);
  AltMap first = nijenhuis_richardson(a.top, b.shadow_or_zero());
  AltMap second = nijenhuis_richardson(b.top, a.shadow_or_zero());
  if (odd(m)) first *= Scalar(-1);
  if (odd(n * (m + 1))) {
    first += second;
  } else {
    first -= second;
  }
  return make_der(std::move(top), std::move(first));
}

AssDerCochain assder_bracket(const AssDerCochain& a, const AssDerCochain& b) {
  require_same_space(a.space(), b.space(), "assder_bracket");
  require_positive_degree(a, "assder_bracket");
  require_positive_degree(b, "assder_bracket");
  const long m = static_cast<long>(a.top.arity());
  MultiMap top = gerstenhaber(a.top, b.top);
  MultiMap shadow = gerstenhaber(a.top, b.shadow_or_zero());
  if (odd(m + 1)) shadow *= Scalar(-1);
  shadow += gerstenhaber(a.shadow_or_zero(), b.top);
  return make_der(std::move(top), std::move(shadow));
}

MultiMap der_D(const MultiMap& delta, const MultiMap& f) {
  require_same_space(delta.space(), f.space(), "der_D");
  if (delta.arity() != 1) throw ShapeError("der_D: delta must be linear");
  MultiMap out(f.space(), f.arity());
  const auto d_entries = delta.entries();
  const auto d_by_out = by_output(d_entries, delta.dim());
  Tuple t;
  for (const auto& fe : f.entries()) {
    for (std::size_t i = 0; i < fe.in.size(); ++i) {
      for (const auto& de : d_by_out[fe.in[i]]) {
        t = fe.in;
        t[i] = de.in[0];
        out.add(t, fe.out, fe.value * de.value);
      }
    }
  }
  std::vector<std::vector<Entry>> d_by_in(delta.dim());
  for (const auto& de : d_entries) d_by_in[de.in[0]].push_back(de);
  for (const auto& fe : f.entries()) {
    for (const auto& de : d_by_in[fe.out]) out.add(fe.in, de.out, -(fe.value * de.value));
  }
  return out;
}

AltMap der_D(const MultiMap& delta, const AltMap& f) {
  require_same_space(delta.space(), f.space(), "der_D");
  if (delta.arity() != 1) throw ShapeError("der_D: delta must be linear");
  AltMap out(f.space(), f.arity());
  const auto d_entries = delta.entries();
  const auto d_by_out = by_output(d_entries, delta.dim());
  Tuple t;
  for (const auto& fe : f.entries()) {
    for (std::size_t i = 0; i < fe.in.size(); ++i) {
      for (const auto& de : d_by_out[fe.in[i]]) {
        t = fe.in;
        t[i] = de.in[0];
        Tuple s = t;
        if (sort_with_sign(s) == 0) continue;
        out.add(t, fe.out, fe.value * de.value);
      }
    }
  }
  std::vector<std::vector<Entry>> d_by_in(delta.dim());
  for (const auto& de : d_entries) d_by_in[de.in[0]].push_back(de);
  for (const auto& fe : f.entries()) {
    for (const auto& de : d_by_in[fe.out]) out.add(fe.in, de.out, -(fe.value * de.value));
  }
  return out;
}

AltMap as_alt(const MultiMap& linear) {
  if (linear.arity() > 1) throw ShapeError("as_alt: only maps of arity <= 1 convert freely");
  AltMap a(linear.space(), linear.arity());
  for (const auto& e : linear.entries()) a.add(e.in, e.out, e.value);
  return a;
}

MultiMap as_multi(const AltMap& linear) {
  if (linear.arity() > 1) throw ShapeError("as_multi: only maps of arity <= 1 convert freely");
  MultiMap m(linear.space(), linear.arity());
  for (const auto& e : linear.entries()) m.add(e.in, e.out, e.value);
  return m;
}

}  // namespace derpair
