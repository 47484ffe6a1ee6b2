#include "derpair/structures.hpp"

#include <functional>
#include <utility>

#include "derpair/errors.hpp"

namespace derpair {

namespace {

using Args = std::vector<Vec>;
using Sides = std::pair<Vec, Vec>;

struct Bin {
  MultiMap m;
  Vec operator()(const Vec& x, const Vec& y) const { return apply2(m, x, y); }
};

struct Lin {
  MultiMap m;
  Vec operator()(const Vec& x) const { return apply1(m, x); }
};

struct Axiom {
  std::string name;
  std::size_t arity;
  std::function<Sides(const Args&)> eval;
};

bool next_tuple(Tuple& t, std::size_t dim) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < dim) return true;
    t[i] = 0;
  }
  return false;
}

template <class F>
void for_each_tuple(std::size_t dim, std::size_t arity, F&& f) {
  Tuple t(arity, 0);
  do {
    Args args;
    for (auto i : t) args.push_back(basis_vec(dim, i));
    if (!f(t, args)) return;
  } while (next_tuple(t, dim));
}

std::optional<Violation> first_violation(const std::vector<Axiom>& axioms, std::size_t dim) {
  std::optional<Violation> found;
  for (const auto& ax : axioms) {
    for_each_tuple(dim, ax.arity, [&](const Tuple& t, const Args& args) {
      auto [lhs, rhs] = ax.eval(args);
      if (lhs == rhs) return true;
      found = Violation{ax.name, t, std::move(lhs), std::move(rhs)};
      return false;
    });
    if (found) return found;
  }
  return std::nullopt;
}

// Defect lhs − rhs of every axiom at every tuple, concatenated.
Vec defect_vector(const std::vector<Axiom>& axioms, std::size_t dim) {
  Vec out;
  for (const auto& ax : axioms) {
    for_each_tuple(dim, ax.arity, [&](const Tuple&, const Args& args) {
      auto [lhs, rhs] = ax.eval(args);
      lhs -= rhs;
      out.insert(out.end(), lhs.begin(), lhs.end());
      return true;
    });
  }
  return out;
}

Vec zero_like(const Vec& x) { return zero_vec(x.size()); }

// ---- single-structure identities ----

std::vector<Axiom> family_axioms(Family f, const std::vector<std::string>& names, const std::vector<Bin>& ops) {
  std::vector<Axiom> out;
  switch (f) {
    case Family::associative: {
      Bin m = ops[0];
      out.push_back({"associativity(" + names[0] + ")", 3, [m](const Args& a) -> Sides {
                       return {m(m(a[0], a[1]), a[2]), m(a[0], m(a[1], a[2]))};
                     }});
      break;
    }
    case Family::lie: {
      Bin b = ops[0];
      out.push_back({"skew-symmetry(" + names[0] + ")", 2, [b](const Args& a) -> Sides {
                       return {b(a[0], a[1]), Scalar(-1) * b(a[1], a[0])};
                     }});
      out.push_back({"jacobi(" + names[0] + ")", 3, [b](const Args& a) -> Sides {
                       Vec l = b(b(a[0], a[1]), a[2]) + b(b(a[1], a[2]), a[0]) + b(b(a[2], a[0]), a[1]);
                       return {l, zero_like(l)};
                     }});
      break;
    }
    case Family::prelie: {
      Bin c = ops[0];
      out.push_back({"left-symmetry(" + names[0] + ")", 3, [c](const Args& a) -> Sides {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       return {c(c(x, y), z) - c(x, c(y, z)), c(c(y, x), z) - c(y, c(x, z))};
                     }});
      break;
    }
    case Family::zinbiel: {
      Bin s = ops[0];
      out.push_back({"zinbiel(" + names[0] + ")", 3, [s](const Args& a) -> Sides {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       return {s(x, s(y, z)), s(s(x, y), z) + s(s(y, x), z)};
                     }});
      break;
    }
    case Family::dendriform: {
      Bin p = ops[0], q = ops[1];
      const std::string tag = "(" + names[0] + "," + names[1] + ")";
      out.push_back({"dendriform-1" + tag, 3, [p, q](const Args& a) -> Sides {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       return {p(p(x, y), z), p(x, p(y, z) + q(y, z))};
                     }});
      out.push_back({"dendriform-2" + tag, 3, [p, q](const Args& a) -> Sides {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       return {p(q(x, y), z), q(x, p(y, z))};
                     }});
      out.push_back({"dendriform-3" + tag, 3, [p, q](const Args& a) -> Sides {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       return {q(x, q(y, z)), q(p(x, y) + q(x, y), z)};
                     }});
      break;
    }
  }
  return out;
}

Axiom derivation_axiom(const std::string& dname, const std::string& pname, Bin m, Lin d) {
  return {"derivation(" + dname + "," + pname + ")", 2, [m, d](const Args& a) -> Sides {
            return {d(m(a[0], a[1])), m(d(a[0]), a[1]) + m(a[0], d(a[1]))};
          }};
}

// Compatibility of two structures of one family; ops1/ops2 in base-name order.
std::vector<Axiom> compat_axioms(Family f, const std::vector<Bin>& o1, const std::vector<Bin>& o2) {
  std::vector<Axiom> out;
  switch (f) {
    case Family::associative: {
      Bin m1 = o1[0], m2 = o2[0];
      out.push_back({"compatibility(mu1,mu2)", 3, [m1, m2](const Args& a) -> Sides {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       return {m2(m1(x, y), z) + m1(m2(x, y), z), m1(x, m2(y, z)) + m2(x, m1(y, z))};
                     }});
      break;
    }
    case Family::lie: {
      Bin b1 = o1[0], b2 = o2[0];
      out.push_back({"compatibility(bracket1,bracket2)", 3, [b1, b2](const Args& a) -> Sides {
                       Vec l = zero_like(a[0]);
                       for (int r = 0; r < 3; ++r) {
                         const auto &x = a[r], &y = a[(r + 1) % 3], &z = a[(r + 2) % 3];
                         l += b2(x, b1(y, z));
                         l += b1(x, b2(y, z));
                       }
                       return {l, zero_like(l)};
                     }});
      break;
    }
    case Family::prelie: {
      Bin c1 = o1[0], c2 = o2[0];
      out.push_back({"compatibility(circ1,circ2)", 3, [c1, c2](const Args& a) -> Sides {
                       auto side = [&](const Vec& x, const Vec& y, const Vec& z) {
                         return c1(x, c2(y, z)) + c2(x, c1(y, z)) - c1(c2(x, y), z) - c2(c1(x, y), z);
                       };
                       return {side(a[0], a[1], a[2]), side(a[1], a[0], a[2])};
                     }});
      break;
    }
    case Family::zinbiel: {
      Bin s1 = o1[0], s2 = o2[0];
      out.push_back({"compatibility(star1,star2)", 3, [s1, s2](const Args& a) -> Sides {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       return {s1(x, s2(y, z)) + s2(x, s1(y, z)),
                               s1(s2(x, y), z) + s2(s1(x, y), z) + s1(s2(y, x), z) + s2(s1(y, x), z)};
                     }});
      break;
    }
    case Family::dendriform: {
      Bin p1 = o1[0], q1 = o1[1], p2 = o2[0], q2 = o2[1];
      out.push_back({"compatibility-1(prec,succ)", 3, [=](const Args& a) -> Sides {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       return {p2(p1(x, y), z) + p1(p2(x, y), z),
                               p2(x, p1(y, z) + q1(y, z)) + p1(x, p2(y, z) + q2(y, z))};
                     }});
      out.push_back({"compatibility-2(prec,succ)", 3, [=](const Args& a) -> Sides {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       return {p2(q1(x, y), z) + p1(q2(x, y), z), q2(x, p1(y, z)) + q1(x, p2(y, z))};
                     }});
      out.push_back({"compatibility-3(prec,succ)", 3, [=](const Args& a) -> Sides {
                       const auto &x = a[0], &y = a[1], &z = a[2];
                       return {q2(p1(x, y) + q1(x, y), z) + q1(p2(x, y) + q2(x, y), z),
                               q2(x, q1(y, z)) + q1(x, q2(y, z))};
                     }});
      break;
    }
  }
  return out;
}

Axiom cross_axiom(const std::string& base, Bin b1, Bin b2, Lin d1, Lin d2) {
  return {"derivation-compatibility(" + base + ")", 2, [=](const Args& a) -> Sides {
            const auto &x = a[0], &y = a[1];
            return {d1(b2(x, y)) + d2(b1(x, y)),
                    b2(d1(x), y) + b2(x, d1(y)) + b1(d2(x), y) + b1(x, d2(y))};
          }};
}

std::vector<Bin> ops_of(const Presentation& p, const std::vector<std::string>& names) {
  std::vector<Bin> out;
  for (const auto& n : names) out.push_back(Bin{p.product(n)});
  return out;
}

std::vector<std::string> suffixed(const std::vector<std::string>& base, const std::string& s) {
  std::vector<std::string> out;
  for (const auto& b : base) out.push_back(b + s);
  return out;
}

// Derivation conditions for given derivation maps (one for plain kinds, two for compatible).
std::vector<Axiom> derivation_axioms(const Presentation& p, const std::vector<Lin>& ds) {
  const Family f = family(p.kind);
  const auto base = base_product_names(f);
  std::vector<Axiom> out;
  if (!is_compatible(p.kind)) {
    for (const auto& n : base) out.push_back(derivation_axiom("delta", n, Bin{p.product(n)}, ds[0]));
    return out;
  }
  for (const char* s : {"1", "2"}) {
    const Lin& d = ds[s[0] == '1' ? 0 : 1];
    for (const auto& n : base) out.push_back(derivation_axiom(std::string("delta") + s, n + s, Bin{p.product(n + s)}, d));
  }
  for (const auto& n : base) {
    out.push_back(cross_axiom(n, Bin{p.product(n + "1")}, Bin{p.product(n + "2")}, ds[0], ds[1]));
  }
  return out;
}

std::vector<Axiom> structure_axioms(const Presentation& p) {
  const Family f = family(p.kind);
  const auto base = base_product_names(f);
  const bool der = has_derivations(p.kind);
  std::vector<Axiom> out;
  auto append = [&out](std::vector<Axiom> more) {
    for (auto& a : more) out.push_back(std::move(a));
  };
  if (!is_compatible(p.kind)) {
    append(family_axioms(f, base, ops_of(p, base)));
    if (der) {
      for (const auto& n : base) out.push_back(derivation_axiom("delta", n, Bin{p.product(n)}, Lin{p.derivation("delta")}));
    }
    return out;
  }
  for (const char* s : {"1", "2"}) {
    const auto names = suffixed(base, s);
    append(family_axioms(f, names, ops_of(p, names)));
    if (der) {
      const std::string d = std::string("delta") + s;
      for (const auto& n : names) out.push_back(derivation_axiom(d, n, Bin{p.product(n)}, Lin{p.derivation(d)}));
    }
  }
  append(compat_axioms(f, ops_of(p, suffixed(base, "1")), ops_of(p, suffixed(base, "2"))));
  if (der) {
    Lin d1{p.derivation("delta1")}, d2{p.derivation("delta2")};
    for (const auto& n : base) {
      out.push_back(cross_axiom(n, Bin{p.product(n + "1")}, Bin{p.product(n + "2")}, d1, d2));
    }
  }
  return out;
}

}  // namespace

std::string Violation::describe(const Space& space) const {
  std::string at;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i) at += ",";
    at += space.label(witness[i]);
  }
  const auto labels = space.labels();
  return axiom + " at (" + at + "): lhs = " + format_vec(lhs, labels) + ", rhs = " + format_vec(rhs, labels);
}

std::optional<Violation> check_structure(const Presentation& p) {
  p.validate();
  return first_violation(structure_axioms(p), p.space.dim());
}

namespace {

std::optional<Violation> morphism_check(const Presentation& src, const Presentation& dst,
                                        const std::function<Vec(const Vec&)>& f) {
  std::vector<Axiom> axioms;
  for (const auto& n : product_names(src.kind)) {
    Bin a{src.product(n)}, b{dst.product(n)};
    axioms.push_back({"preserves(" + n + ")", 2, [=](const Args& x) -> Sides {
                        return {f(a(x[0], x[1])), b(f(x[0]), f(x[1]))};
                      }});
  }
  for (const auto& n : derivation_names(src.kind)) {
    Lin a{src.derivation(n)}, b{dst.derivation(n)};
    axioms.push_back({"intertwines(" + n + ")", 1, [=](const Args& x) -> Sides { return {f(a(x[0])), b(f(x[0]))}; }});
  }
  return first_violation(axioms, src.space.dim());
}

void require_same_kind(const Presentation& src, const Presentation& dst) {
  if (src.kind != dst.kind) {
    throw PreconditionError("morphism between different kinds: " + kind_name(src.kind) + " and " +
                            kind_name(dst.kind));
  }
  src.validate();
  dst.validate();
}

}  // namespace

std::optional<Violation> check_morphism(const Presentation& src, const Presentation& dst, const Matrix& phi) {
  require_same_kind(src, dst);
  if (phi.rows() != dst.space.dim() || phi.cols() != src.space.dim()) {
    throw ShapeError("morphism matrix must be " + std::to_string(dst.space.dim()) + "x" +
                     std::to_string(src.space.dim()));
  }
  return morphism_check(src, dst, [phi](const Vec& x) { return apply(phi, x); });
}

std::optional<Violation> check_morphism(const Presentation& src, const Presentation& dst, const MultiMap& phi) {
  require_same_kind(src, dst);
  if (phi.arity() != 1) throw ShapeError("morphism must be linear");
  if (phi.dim() != src.space.dim() || dst.space.dim() != src.space.dim()) {
    throw ShapeError("morphism given as an endomorphism needs equal dimensions; pass a matrix instead");
  }
  return morphism_check(src, dst, [phi](const Vec& x) { return apply1(phi, x); });
}

OperatorRole parse_role(std::string_view text) {
  if (text == "derivation") return OperatorRole::derivation();
  if (text == "nijenhuis") return OperatorRole::nijenhuis();
  if (text == "idempotent-endomorphism") return OperatorRole::idempotent();
  if (text == "rota-baxter") return OperatorRole::rota_baxter();
  constexpr std::string_view rb = "rota-baxter:";
  if (text.starts_with(rb)) {
    try {
      return OperatorRole::rota_baxter(Scalar::parse(text.substr(rb.size())));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(std::string("bad Rota-Baxter weight: ") + e.what());
    }
  }
  throw SchemaError("unknown operator role '" + std::string(text) + "'");
}

std::string role_name(const OperatorRole& r) {
  switch (r.role) {
    case Role::derivation:
      return "derivation";
    case Role::rota_baxter:
      return "rota-baxter:" + r.weight.str();
    case Role::nijenhuis:
      return "nijenhuis";
    case Role::idempotent_endomorphism:
      return "idempotent-endomorphism";
  }
  return "?";
}

std::optional<Violation> check_operator(const Presentation& p, const MultiMap& op, const OperatorRole& role) {
  p.validate();
  if (op.arity() != 1) throw ShapeError("operator must be linear");
  require_same_space(op.space(), p.space, "operator");
  const Family f = family(p.kind);
  const auto names = product_names(p.kind);
  const Lin t{op};
  std::vector<Axiom> axioms;
  switch (role.role) {
    case Role::derivation:
      for (const auto& n : names) axioms.push_back(derivation_axiom("operator", n, Bin{p.product(n)}, t));
      return first_violation(axioms, p.space.dim());
    case Role::rota_baxter: {
      const bool ok = f == Family::associative || f == Family::lie ||
                      (f == Family::dendriform && role.weight.is_zero());
      if (!ok) {
        throw UnsupportedRole("Rota-Baxter operator of weight " + role.weight.str() + " is not defined on " +
                              kind_name(p.kind));
      }
      const Scalar w = role.weight;
      for (const auto& n : names) {
        Bin m{p.product(n)};
        axioms.push_back({"rota-baxter(" + n + ")", 2, [=](const Args& a) -> Sides {
                            const auto &x = a[0], &y = a[1];
                            return {m(t(x), t(y)) + w * t(m(x, y)), t(m(t(x), y) + m(x, t(y)))};
                          }});
      }
      break;
    }
    case Role::nijenhuis:
      if (f != Family::associative && f != Family::lie) {
        throw UnsupportedRole("Nijenhuis operator is not defined on " + kind_name(p.kind));
      }
      for (const auto& n : names) {
        Bin m{p.product(n)};
        axioms.push_back({"nijenhuis(" + n + ")", 2, [=](const Args& a) -> Sides {
                            const auto &x = a[0], &y = a[1];
                            return {m(t(x), t(y)), t(m(t(x), y) + m(x, t(y)) - t(m(x, y)))};
                          }});
      }
      break;
    case Role::idempotent_endomorphism:
      if (f != Family::associative) {
        throw UnsupportedRole("idempotent endomorphism operator is not defined on " + kind_name(p.kind));
      }
      axioms.push_back({"idempotent", 1, [=](const Args& a) -> Sides { return {t(t(a[0])), t(a[0])}; }});
      for (const auto& n : names) {
        Bin m{p.product(n)};
        axioms.push_back({"multiplicative(" + n + ")", 2, [=](const Args& a) -> Sides {
                            return {t(m(a[0], a[1])), m(t(a[0]), t(a[1]))};
                          }});
      }
      break;
  }
  for (const auto& dn : derivation_names(p.kind)) {
    Lin d{p.derivation(dn)};
    axioms.push_back({"commutes(" + dn + ")", 1, [=](const Args& a) -> Sides { return {t(d(a[0])), d(t(a[0]))}; }});
  }
  return first_violation(axioms, p.space.dim());
}

Matrix derivation_system(const Presentation& p) {
  for (const auto& n : product_names(p.kind)) {
    const auto& m = p.product(n);
    if (m.arity() != 2 || !(m.space() == p.space)) throw SchemaError("product '" + n + "' malformed");
  }
  const std::size_t d = p.space.dim();
  const std::size_t blocks = is_compatible(p.kind) ? 2 : 1;
  const std::size_t per = d * d;
  std::vector<Vec> columns;
  for (std::size_t u = 0; u < blocks * per; ++u) {
    std::vector<Lin> ds(blocks, Lin{MultiMap(p.space, 1)});
    const std::size_t local = u % per;
    ds[u / per].m.set({local / d}, local % d, 1);
    columns.push_back(defect_vector(derivation_axioms(p, ds), d));
  }
  const std::size_t rows = columns.empty() ? 0 : columns.front().size();
  return Matrix::from_columns(rows, columns);
}

std::vector<MultiMap> derivations_from_solution(const Presentation& p, const Vec& solution) {
  const std::size_t per = p.space.dim() * p.space.dim();
  const std::size_t blocks = is_compatible(p.kind) ? 2 : 1;
  if (solution.size() != blocks * per) throw ShapeError("solution length does not match the derivation system");
  std::vector<MultiMap> out;
  for (std::size_t b = 0; b < blocks; ++b) {
    Vec part(solution.begin() + static_cast<long>(b * per), solution.begin() + static_cast<long>((b + 1) * per));
    out.push_back(MultiMap::from_coords(p.space, 1, part));
  }
  return out;
}

}  // namespace derpair
