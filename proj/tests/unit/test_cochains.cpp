#include <gtest/gtest.h>

#include "derpair/cochain.hpp"
#include "derpair/errors.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace derpair;
using derpair::testkit::between;
using derpair::testkit::pick;
using derpair::testkit::random_alt;
using derpair::testkit::random_multi;
using derpair::testkit::Rng;

TEST(Space, LabelsDefaultToE) {
  const Space s(3);
  EXPECT_EQ(s.label(0), "e1");
  EXPECT_FALSE(s.has_custom_labels());
  EXPECT_EQ(Space(std::vector<std::string>{"e1", "e2"}), Space(2));
  EXPECT_NE(Space(std::vector<std::string>{"x", "y"}), Space(2));
  EXPECT_THROW(Space(0), ShapeError);
  EXPECT_THROW(Space(std::vector<std::string>{"x", "x"}), SchemaError);
}

TEST(MultiMap, EvalAtBasisAndVectors) {
  const Space s(2);
  MultiMap mu(s, 2);
  mu.add({0, 0}, 1, 1);
  mu.add({0, 1}, 0, Scalar(1, 2));
  EXPECT_EQ(mu.eval(Tuple{0, 0}), (Vec{Scalar(0), Scalar(1)}));
  // μ(e1+e2, 2e2) = 2μ(e1,e2) = e1
  EXPECT_EQ(mu.eval(std::vector<Vec>{{1, 1}, {0, 2}}), (Vec{Scalar(1), Scalar(0)}));
  EXPECT_EQ(mu.coeff({0, 1}, 0), Scalar(1, 2));
  EXPECT_EQ(mu.nnz(), 2u);
  mu.add({0, 0}, 1, -1);
  EXPECT_EQ(mu.nnz(), 1u);
}

TEST(MultiMap, RejectsBadShapes) {
  MultiMap mu(Space(2), 2);
  EXPECT_THROW(mu.add({0}, 0, 1), ShapeError);
  EXPECT_THROW(mu.add({0, 2}, 0, 1), ShapeError);
  EXPECT_THROW(mu.add({0, 1}, 5, 1), ShapeError);
  EXPECT_THROW(MultiMap::from_coords(Space(2), 2, zero_vec(3)), ShapeError);
}

TEST(AltMap, StoresSortedTuplesWithSign) {
  AltMap w(Space(3), 2);
  w.add({1, 0}, 2, 1);  // [e2,e1] = e3
  EXPECT_EQ(w.coeff({0, 1}, 2), Scalar(-1));
  EXPECT_EQ(w.coeff({1, 0}, 2), Scalar(1));
  EXPECT_EQ(w.entries().front().in, (Tuple{0, 1}));
  EXPECT_THROW(w.add({1, 1}, 0, 1), ShapeError);
  EXPECT_NO_THROW(w.set({1, 1}, 0, 0));
}

TEST(AltMap, RepeatedIndexEvaluatesToZero) {
  Rng rng(201);
  for (int i = 0; i < 100; ++i) {
    const Space s(2 + pick(rng, 2));
    const std::size_t arity = 2 + pick(rng, 2);
    const AltMap f = random_alt(rng, s, arity, 60);
    for (const auto& t : oracle::tuples(s.dim(), arity)) {
      Tuple sorted = t;
      if (sort_with_sign(sorted) == 0) {
        EXPECT_TRUE(is_zero(f.eval(t)));
      }
    }
  }
}

TEST(AltMap, TranspositionNegates) {
  Rng rng(202);
  for (int i = 0; i < 100; ++i) {
    const Space s(2 + pick(rng, 2));
    const std::size_t arity = 2 + pick(rng, 2);
    const AltMap f = random_alt(rng, s, arity, 60);
    Tuple t(arity);
    for (auto& x : t) x = pick(rng, s.dim());
    Tuple u = t;
    const std::size_t a = pick(rng, arity);
    std::size_t b = pick(rng, arity - 1);
    if (b >= a) ++b;
    std::swap(u[a], u[b]);
    EXPECT_EQ(f.eval(u), Scalar(-1) * f.eval(t));
  }
}

TEST(Cochain, CoordinateRoundTrip) {
  Rng rng(203);
  for (int i = 0; i < 200; ++i) {
    const Space s(1 + pick(rng, 3));
    const std::size_t arity = 1 + pick(rng, 3);
    const MultiMap f = random_multi(rng, s, arity);
    EXPECT_EQ(MultiMap::from_coords(s, arity, f.coords()), f);
    EXPECT_EQ(f.coords().size(), MultiMap::coord_size(s.dim(), arity));
    const AltMap g = random_alt(rng, s, arity);
    EXPECT_EQ(AltMap::from_coords(s, arity, g.coords()), g);
    EXPECT_EQ(g.coords().size(), binomial(s.dim(), arity) * s.dim());
  }
}

TEST(Cochain, LinearCoordinatesAreRowMajor) {
  // coefficient of e_j in δ(e_i) sits at i*d + j
  MultiMap d(Space(2), 1);
  d.add({0}, 1, 5);
  EXPECT_EQ(d.coords(), (Vec{Scalar(0), Scalar(5), Scalar(0), Scalar(0)}));
}

TEST(Cochain, MultiAltConversions) {
  Rng rng(204);
  for (int i = 0; i < 60; ++i) {
    const Space s(1 + pick(rng, 3));
    const AltMap g = random_alt(rng, s, 1 + pick(rng, 3));
    const MultiMap full = to_multi(g);
    ASSERT_TRUE(try_alt(full).has_value());
    EXPECT_EQ(*try_alt(full), g);
  }
  MultiMap not_skew(Space(2), 2);
  not_skew.add({0, 1}, 0, 1);
  EXPECT_FALSE(try_alt(not_skew).has_value());
  EXPECT_THROW(to_alt(not_skew), ShapeError);
}

TEST(Cochain, SortAndRankHelpers) {
  Tuple t{2, 0, 1};
  EXPECT_EQ(sort_with_sign(t), 1);
  EXPECT_EQ(t, (Tuple{0, 1, 2}));
  Tuple r{1, 0};
  EXPECT_EQ(sort_with_sign(r), -1);
  Tuple rep{1, 0, 1};
  EXPECT_EQ(sort_with_sign(rep), 0);
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(2, 3), 0u);
  EXPECT_EQ(combination_rank({0, 1}, 3), 0u);
  EXPECT_EQ(combination_rank({0, 2}, 3), 1u);
  EXPECT_EQ(combination_rank({1, 2}, 3), 2u);
}

TEST(Cochain, LinearMapsAndComposition) {
  const Space s(2);
  const Matrix a{{1, 2}, {0, 1}}, b{{0, 1}, {1, 0}};
  EXPECT_EQ(to_matrix(linear_map(s, a)), a);
  EXPECT_EQ(to_matrix(compose1(linear_map(s, a), linear_map(s, b))), compose(a, b));
  EXPECT_EQ(apply1(linear_map(s, a), {1, 1}), (Vec{Scalar(3), Scalar(1)}));
}

TEST(Cochain, AdditionIsCoefficientwise) {
  Rng rng(205);
  for (int i = 0; i < 50; ++i) {
    const Space s(1 + pick(rng, 3));
    const auto f = random_multi(rng, s, 2), g = random_multi(rng, s, 2);
    const Scalar c = between(rng, -3, 3);
    EXPECT_EQ((f + c * g).coords(), f.coords() + c * g.coords());
    EXPECT_TRUE((f - f).is_zero());
  }
}

TEST(Cochain, SpaceMismatchIsReported) {
  MultiMap a(Space(2), 1), b(Space(3), 1);
  EXPECT_THROW(a += b, SpaceMismatch);
}

TEST(DerCochain, CoordinateRoundTrip) {
  Rng rng(206);
  for (int i = 0; i < 50; ++i) {
    const Space s(1 + pick(rng, 3));
    const std::size_t n = 1 + pick(rng, 3);
    LieDerCochain c(random_alt(rng, s, n));
    if (n >= 2) c.shadow = random_alt(rng, s, n - 1);
    const Vec v = coords(c);
    EXPECT_EQ(v.size(), der_coord_size<AltMap>(s.dim(), n));
    EXPECT_EQ(der_from_coords<AltMap>(s, n, v), c);

    CompatCochain<MultiMap> cc;
    for (std::size_t j = 0; j < n; ++j) {
      AssDerCochain part(random_multi(rng, s, n));
      if (n >= 2) part.shadow = random_multi(rng, s, n - 1);
      cc.parts.push_back(part);
    }
    const Vec w = coords(cc);
    EXPECT_EQ(w.size(), compat_coord_size<MultiMap>(s.dim(), n));
    EXPECT_EQ(compat_from_coords<MultiMap>(s, n, w), cc);
  }
}
