#include <gtest/gtest.h>

#include "derpair/constructions.hpp"
#include "derpair/errors.hpp"
#include "derpair/maurer_cartan.hpp"
#include "derpair/structures.hpp"
#include "generators.hpp"

using namespace derpair;
using derpair::testkit::pick;
using derpair::testkit::Rng;

namespace {

MultiMap diag(std::size_t d, std::vector<long> v) {
  MultiMap m(Space(d), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.add({i}, i, v[i]);
  return m;
}

AltMap bracket_e(std::size_t out) {
  AltMap w(Space(2), 2);
  w.add({0, 1}, out, 1);
  return w;
}

const Residual* find(const McVerdict& v, const std::string& name) {
  for (const auto& r : v.residuals)
    if (r.name == name) return &r;
  return nullptr;
}

// δ[x,y] − [δx,y] − [x,δy]
Vec derivation_defect(const MultiMap& w, const MultiMap& delta, std::size_t a, std::size_t b) {
  const std::size_t d = w.dim();
  const Vec x = basis_vec(d, a), y = basis_vec(d, b);
  return apply1(delta, apply2(w, x, y)) - apply2(w, apply1(delta, x), y) - apply2(w, x, apply1(delta, y));
}

Presentation sample(Rng& rng, Kind k) {
  const std::size_t dim = family(k) == Family::lie ? 2 + pick(rng, 2) : 1 + pick(rng, 3);
  auto p = testkit::random_presentation(rng, k, dim);
  return pick(rng, 2) ? testkit::corrupt(rng, p) : p;
}

}  // namespace

TEST(McLieDer, Examples) {
  EXPECT_TRUE(mc_lieder(AltMap(Space(2), 2), MultiMap(Space(2), 1)).holds());
  const AltMap w = bracket_e(0);
  EXPECT_TRUE(mc_lieder(w, diag(2, {1, 0})).holds());
  const auto v = mc_lieder(w, diag(2, {0, 1}));
  ASSERT_FALSE(v.holds());
  ASSERT_EQ(v.residuals.size(), 1u);
  EXPECT_EQ(v.residuals[0].name, "[w,delta]_NR");
  EXPECT_EQ(v.residuals[0].witness, (Tuple{0, 1}));
  // [w,δ]_NR(x,y) = [δx,y] + [x,δy] − δ[x,y], the negated derivation defect
  EXPECT_EQ(derivation_defect(to_multi(w), diag(2, {0, 1}), 0, 1), (Vec{Scalar(-1), Scalar(0)}));
  EXPECT_EQ(v.residuals[0].value, (Vec{Scalar(1), Scalar(0)}));
}

TEST(McAssDer, Examples) {
  EXPECT_TRUE(mc_assder(MultiMap(Space(2), 2), MultiMap(Space(2), 1)).holds());
  MultiMap mu(Space(2), 2);
  mu.add({0, 0}, 1, 1);
  EXPECT_TRUE(mc_assder(mu, diag(2, {1, 2})).holds());
  const auto v = mc_assder(mu, diag(2, {1, 1}));
  ASSERT_FALSE(v.holds());
  EXPECT_NE(find(v, "[mu,delta]_G"), nullptr);
  EXPECT_EQ(find(v, "[mu,mu]_G"), nullptr);
  EXPECT_THROW(mc_assder(mu, diag(3, {1, 1, 1})), SpaceMismatch);
}

TEST(McPairLieDer, Examples) {
  const AltMap w1 = bracket_e(0), w2 = bracket_e(1);
  const MultiMap zero(Space(2), 1);
  EXPECT_TRUE(mc_pair_lieder(w1, zero, w2, zero).holds());
  EXPECT_TRUE(mc_pair_lieder(AltMap(Space(2), 2), zero, AltMap(Space(2), 2), zero).holds());

  const MultiMap d1 = diag(2, {1, 0}), d2 = diag(2, {0, 1});
  EXPECT_TRUE(mc_lieder(w1, d1).holds());
  EXPECT_TRUE(mc_lieder(w2, d2).holds());
  const auto v = mc_pair_lieder(w1, d1, w2, d2);
  ASSERT_EQ(v.residuals.size(), 1u);
  EXPECT_EQ(v.residuals[0].name, "[w1,delta2]_NR + [w2,delta1]_NR");
  // δ₁[x,y]₂ + δ₂[x,y]₁ − ([δ₁x,y]₂ + [x,δ₁y]₂ + [δ₂x,y]₁ + [x,δ₂y]₁) = −(e1+e2) at (e1,e2)
  const Vec cross = derivation_defect(to_multi(w2), d1, 0, 1) + derivation_defect(to_multi(w1), d2, 0, 1);
  EXPECT_EQ(cross, (Vec{Scalar(-1), Scalar(-1)}));
  EXPECT_EQ(v.residuals[0].value, Scalar(-1) * cross);
}

TEST(McPairAssDer, Examples) {
  Rng rng(701);
  for (int i = 0; i < 20; ++i) {
    const auto p = testkit::random_presentation(rng, Kind::assder, 1 + pick(rng, 3));
    EXPECT_TRUE(mc_pair_assder(p.product("mu"), p.derivation("delta"), p.product("mu"), p.derivation("delta")).holds());
  }
  const Space s(2);
  EXPECT_TRUE(mc_pair_assder(MultiMap(s, 2), MultiMap(s, 1), MultiMap(s, 2), MultiMap(s, 1)).holds());
  for (int i = 0; i < 20; ++i) {
    const auto p = testkit::random_presentation(rng, Kind::associative, 1 + pick(rng, 3));
    const auto n = testkit::pick_operator(rng, p, OperatorRole::nijenhuis());
    const MultiMap zero(p.space, 1);
    EXPECT_TRUE(mc_pair_assder(p.product("mu"), zero, nijenhuis_product(p.product("mu"), n), zero).holds());
  }
}

TEST(MaurerCartan, EquivalentToStructureChecks) {
  Rng rng(702);
  int valid[4] = {0, 0, 0, 0}, invalid[4] = {0, 0, 0, 0};
  for (int i = 0; i < 200; ++i) {
    {
      const auto p = sample(rng, Kind::lieder);
      const bool ok = !check_structure(p);
      (ok ? valid : invalid)[0]++;
      EXPECT_EQ(ok, mc_lieder(to_alt(p.product("bracket")), p.derivation("delta")).holds());
    }
    {
      const auto p = sample(rng, Kind::assder);
      const bool ok = !check_structure(p);
      (ok ? valid : invalid)[1]++;
      EXPECT_EQ(ok, mc_assder(p.product("mu"), p.derivation("delta")).holds());
    }
    {
      const auto p = sample(rng, Kind::compatible_lieder);
      const bool ok = !check_structure(p);
      (ok ? valid : invalid)[2]++;
      EXPECT_EQ(ok, mc_pair_lieder(to_alt(p.product("bracket1")), p.derivation("delta1"),
                                   to_alt(p.product("bracket2")), p.derivation("delta2"))
                        .holds());
    }
    {
      const auto p = sample(rng, Kind::compatible_assder);
      const bool ok = !check_structure(p);
      (ok ? valid : invalid)[3]++;
      EXPECT_EQ(ok, mc_pair_assder(p.product("mu1"), p.derivation("delta1"), p.product("mu2"), p.derivation("delta2"))
                        .holds());
    }
  }
  for (int k = 0; k < 4; ++k) {
    EXPECT_GT(valid[k], 50);
    EXPECT_GT(invalid[k], 30);
  }
}

TEST(Deformation, Examples) {
  Rng rng(703);
  for (int i = 0; i < 30; ++i) {
    const auto p = testkit::random_presentation(rng, Kind::lieder, 2 + pick(rng, 2));
    const AltMap w = to_alt(p.product("bracket"));
    const MultiMap& delta = p.derivation("delta");
    EXPECT_TRUE(deformation_check(w, delta, AltMap(p.space, 2), MultiMap(p.space, 1)).holds());
    EXPECT_TRUE(deformation_check(w, delta, w, delta).holds());
    Presentation doubled(p.space, Kind::lieder);
    doubled.products["bracket"] = Scalar(2) * p.product("bracket");
    doubled.derivations["delta"] = Scalar(2) * delta;
    EXPECT_FALSE(check_structure(doubled));
  }
  const AltMap w = bracket_e(0);
  const auto v = deformation_check(w, MultiMap(Space(2), 1), AltMap(Space(2), 2), diag(2, {0, 1}));
  EXPECT_FALSE(v.holds());
  EXPECT_THROW(deformation_check(w, diag(2, {0, 1}), w, diag(2, {0, 0})), PreconditionError);
}

TEST(Deformation, EquivalentToSummedStructure) {
  Rng rng(704);
  int holds = 0, fails = 0;
  for (int i = 0; i < 200; ++i) {
    const auto base = testkit::random_presentation(rng, Kind::lieder, 1 + pick(rng, 3));
    Presentation sum(base.space, Kind::lieder);
    AltMap w1(base.space, 2);
    MultiMap d1(base.space, 1);
    switch (pick(rng, 3)) {
      case 0: {
        // a second valid pair minus the base
        const auto other = testkit::random_presentation(rng, Kind::lieder, base.space.dim());
        w1 = to_alt(other.product("bracket") - base.product("bracket"));
        d1 = other.derivation("delta") - base.derivation("delta");
        break;
      }
      case 1:
        w1 = testkit::random_alt(rng, base.space, 2, 30);
        d1 = testkit::random_multi(rng, base.space, 1, 30);
        break;
      default:
        d1 = testkit::with_random_derivations(rng, base).derivation("delta") - base.derivation("delta");
    }
    sum.products["bracket"] = base.product("bracket") + to_multi(w1);
    sum.derivations["delta"] = base.derivation("delta") + d1;
    const bool ok = !check_structure(sum);
    (ok ? holds : fails)++;
    EXPECT_EQ(ok, deformation_check(to_alt(base.product("bracket")), base.derivation("delta"), w1, d1).holds());
  }
  EXPECT_GT(holds, 40);
  EXPECT_GT(fails, 25);
}

TEST(Bidifferential, Examples) {
  Rng rng(705);
  const auto p = testkit::random_presentation(rng, Kind::lieder, 2);
  const auto d = der_differentials(Flavor::lieder, p.product("bracket"), p.derivation("delta"), 2);
  std::vector<Matrix> zero;
  for (const auto& m : d) zero.emplace_back(m.rows(), m.cols());
  EXPECT_TRUE(bidifferential_check(zero, zero).holds());
  EXPECT_TRUE(bidifferential_check(d, d).holds());
  EXPECT_TRUE(bidifferential_check(d, zero).holds());
  EXPECT_THROW(bidifferential_check(d, std::vector<Matrix>(d.begin(), d.end() - 1)), ShapeError);
  auto wrong = zero;
  wrong[1] = Matrix(wrong[1].rows() + 1, wrong[1].cols());
  EXPECT_THROW(bidifferential_check(d, wrong), ShapeError);
  EXPECT_THROW(der_differentials(Flavor::cad, p.product("bracket"), p.derivation("delta"), 1), PreconditionError);
}

TEST(Bidifferential, CompatiblePairsAnticommute) {
  Rng rng(706);
  for (int i = 0; i < 40; ++i) {
    const bool lie = i % 2;
    const auto p = testkit::random_presentation(rng, lie ? Kind::compatible_lieder : Kind::compatible_assder,
                                                1 + pick(rng, lie ? 3 : 2));
    const Flavor f = lie ? Flavor::lieder : Flavor::assder;
    const std::string b = lie ? "bracket" : "mu";
    const auto d1 = der_differentials(f, p.product(b + "1"), p.derivation("delta1"), 2);
    const auto d2 = der_differentials(f, p.product(b + "2"), p.derivation("delta2"), 2);
    EXPECT_TRUE(bidifferential_check(d1, d2).holds());
  }
}

TEST(Bidifferential, IncompatiblePairsAreDetected) {
  // Two Lie brackets whose sum breaks Jacobi: the anticommutator is the bracket of the two.
  Rng rng(707);
  int detected = 0;
  for (int i = 0; i < 60; ++i) {
    const auto a = testkit::random_presentation(rng, Kind::lieder, 3);
    const auto b = testkit::random_presentation(rng, Kind::lieder, 3);
    Presentation pair(a.space, Kind::compatible_lieder);
    pair.products = {{"bracket1", a.product("bracket")}, {"bracket2", b.product("bracket")}};
    pair.derivations = {{"delta1", a.derivation("delta")}, {"delta2", b.derivation("delta")}};
    const bool compatible = !check_structure(pair);
    const auto d1 = der_differentials(Flavor::lieder, a.product("bracket"), a.derivation("delta"), 2);
    const auto d2 = der_differentials(Flavor::lieder, b.product("bracket"), b.derivation("delta"), 2);
    const bool anti = bidifferential_check(d1, d2).holds();
    if (compatible) {
      EXPECT_TRUE(anti);
    }
    detected += !anti;
  }
  EXPECT_GT(detected, 5);
}
