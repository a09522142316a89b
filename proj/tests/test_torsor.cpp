#include <gtest/gtest.h>

#include "assocgeom/relation.hpp"
#include "assocgeom/torsor.hpp"
#include "printers.hpp"

using namespace asg;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);
const Field Q = Field::rationals();

using S = Subspace<Fp>;

S e(Field f, std::size_t n, std::initializer_list<std::size_t> idx) { return S::coordinate(f, n, idx); }

template <FieldElement K>
Subspace<K> G(const Subspace<K>& x, const Subspace<K>& a, const Subspace<K>& y, const Subspace<K>& b,
              const Subspace<K>& z) {
  return gamma_extended(Quintuple<K>{x, a, y, b, z});
}

// Random pair (a, b) of equal dimension together with a common complement.
template <FieldElement K>
std::tuple<Subspace<K>, Subspace<K>, Subspace<K>> pair_with_unit(Sampler<K>& s, std::size_t n) {
  for (;;) {
    const auto a = s.subspace(n);
    const auto b = s.coin(3) ? a : s.subspace(n, a.dim());
    if (auto y = s.common_complement_of(a, b)) return {a, b, *y};
  }
}

}  // namespace

TEST(Torsor, ProductExamples) {
  const TorsorContext<Fp> ctx(e(F3, 2, {0}), e(F3, 2, {1}));
  const auto x = S::from_ints(F3, 2, {{1, 1}}), z = S::from_ints(F3, 2, {{1, 2}});
  EXPECT_EQ(torsor_product(ctx, x, x, z), z);
  EXPECT_EQ(torsor_product(ctx, x, z, z), x);
  EXPECT_THROW(torsor_product(ctx, e(F3, 2, {0}), x, z), Error);
  EXPECT_EQ(enumerate_torsor(ctx).size(), 2u);
}

TEST(Torsor, TableOfTwoElementTorsor) {
  // U_ab in GF(3)^2 for the axes: graphs of ±1, with (xyz) = x y⁻¹ z
  const TorsorContext<Fp> ctx(e(F3, 2, {0}), e(F3, 2, {1}));
  const auto els = enumerate_torsor(ctx);
  ASSERT_EQ(els.size(), 2u);
  const auto scalar_of = [](const S& g) {
    const auto& b = g.basis();
    return b(0, 1) / b(0, 0);
  };
  for (const auto& x : els)
    for (const auto& y : els)
      for (const auto& z : els) {
        const Fp expected = scalar_of(x) * scalar_of(y).inv() * scalar_of(z);
        EXPECT_EQ(scalar_of(torsor_product(ctx, x, y, z)), expected);
      }
}

TEST(Torsor, LawsOnUabExhaustive) {
  for (const Field f : {F2, F3, F5}) {
    const TorsorContext<Fp> ctx(e(f, 2, {0}), e(f, 2, {1}));
    const auto els = enumerate_torsor(ctx);
    EXPECT_EQ(els.size(), f.p - 1);
    const TernaryProduct<S> prod = [&](const S& x, const S& y, const S& z) { return G(x, ctx.a, y, ctx.b, z); };
    const auto r = check_ternary_laws(els, prod);
    EXPECT_TRUE(r.torsor());
    EXPECT_TRUE(r.semitorsor());
    EXPECT_TRUE(r.chasle.ok());
    EXPECT_TRUE(r.middle_inverse.ok());
  }
  // non-transversal a, b of equal dimension
  Sampler<Fp> s(F2, 5);
  for (int t = 0; t < 6; ++t) {
    const auto a = s.subspace(3, 1), b = s.subspace(3, 1);
    const TorsorContext<Fp> ctx(a, b);
    const auto els = enumerate_torsor(ctx);
    ASSERT_FALSE(els.empty());
    const TernaryProduct<S> prod = [&](const S& x, const S& y, const S& z) { return G(x, a, y, b, z); };
    const auto r = check_ternary_laws(els, prod);
    EXPECT_TRUE(r.torsor()) << r.g1.witness.value_or("") << r.g2.witness.value_or("");
    EXPECT_TRUE(r.g3.ok() && r.chasle.ok() && r.middle_inverse.ok());
  }
}

TEST(Torsor, CyclicGroupTorsorPasses) {
  const std::vector<int> z4{0, 1, 2, 3};
  const TernaryProduct<int> prod = [](const int& x, const int& y, const int& z) { return ((x - y + z) % 4 + 4) % 4; };
  const auto r = check_ternary_laws(z4, prod);
  EXPECT_TRUE(r.torsor());
  EXPECT_TRUE(r.semitorsor());
  const TernaryProduct<int> bad = [](const int& x, const int& y, const int& z) { return ((x + y + z) % 4); };
  EXPECT_FALSE(check_ternary_laws(z4, bad).torsor());
}

TEST(Torsor, RelationsOnLineFormSemitorsorOnly) {
  std::vector<Relation<Fp>> rels;
  for (const auto& g : enumerate_subspaces(F2, 2)) rels.emplace_back(1, 1, g);
  ASSERT_EQ(rels.size(), 5u);
  const TernaryProduct<Relation<Fp>> prod = [](const Relation<Fp>& x, const Relation<Fp>& y, const Relation<Fp>& z) {
    return relation_semitorsor(x, y, z);
  };
  const auto r = check_ternary_laws(rels, prod);
  EXPECT_TRUE(r.semitorsor());
  EXPECT_FALSE(r.torsor());
  EXPECT_FALSE(r.g2.ok());
}

TEST(Torsor, OppositeAndCommutative) {
  Sampler<Fp> s(F3, 6);
  for (int t = 0; t < 100; ++t) {
    const auto [a, b, y] = pair_with_unit(s, 3);
    const auto x = s.coin(2) ? y : *s.common_complement_of(a, b);
    const auto z = *s.common_complement_of(a, b);
    EXPECT_EQ(G(x, b, y, a, z), G(z, a, y, b, x));
    EXPECT_EQ(G(x, a, y, a, z), G(z, a, y, a, x));
  }
}

TEST(Torsor, GroupAxioms) {
  Sampler<Fp> s(F5, 7);
  for (int t = 0; t < 60; ++t) {
    const auto [a, b, y] = pair_with_unit(s, 3);
    const GroupContext<Fp> g(TorsorContext<Fp>(a, b), y);
    const auto u = *s.common_complement_of(a, b), v = *s.common_complement_of(a, b),
               w = *s.common_complement_of(a, b);
    EXPECT_EQ(group_mul(g, y, u), u);
    EXPECT_EQ(group_mul(g, u, y), u);
    EXPECT_EQ(group_inv(g, y), y);
    EXPECT_EQ(group_mul(g, u, group_inv(g, u)), y);
    EXPECT_EQ(group_mul(g, group_mul(g, u, v), w), group_mul(g, u, group_mul(g, v, w)));
  }
}

TEST(Torsor, GroupTablesOfAxes) {
  for (const Field f : {F2, F3, F5}) {
    const TorsorContext<Fp> ctx(e(f, 2, {0}), e(f, 2, {1}));
    const GroupContext<Fp> g(ctx, S::from_ints(f, 2, {{1, 1}}));
    const auto t = group_table(g);
    EXPECT_EQ(t.elements.size(), f.p - 1);
    EXPECT_TRUE(is_cyclic(t));
    const auto text = format_group_table(t);
    EXPECT_NE(text.find("elements " + std::to_string(f.p - 1)), std::string::npos);
  }
  // GF(2)^2 ⊕ GF(2)^2 with the two halves: GL(2,2) ≅ S3 is not cyclic
  const auto [first, diag, second] = *transversal_triple<Fp>(F2, 4);
  const auto t = group_table(GroupContext<Fp>(TorsorContext<Fp>(first, second), diag));
  EXPECT_EQ(t.elements.size(), 6u);
  EXPECT_FALSE(is_cyclic(t));
}

TEST(Torsor, AffineExamples) {
  const auto a = e(F2, 2, {1}), x = e(F2, 2, {0}), d = S::from_ints(F2, 2, {{1, 1}});
  EXPECT_EQ(affine_add(a, x, d, x), d);
  EXPECT_EQ(affine_add_projector(a, x, d, x), d);
  EXPECT_EQ(affine_add(a, x, d, d), x);
  EXPECT_EQ(affine_scale(a, Fp(1, F2), x, d), d);
  EXPECT_EQ(affine_scale(a, Fp(0, F2), x, d), x);
  EXPECT_THROW(affine_add(a, a, x, x), Error);
}

template <FieldElement K>
void affine_checks(Field f, std::size_t m, std::size_t k, int cases) {
  Sampler<K> s(f, 8);
  // a = o⁻ so that C_a is the chart {column_graph(X)} and the affine structure is that of matrices
  const auto a = row_graph(Matrix<K>(f, k, m));
  for (int t = 0; t < cases; ++t) {
    const auto X = s.matrix(m, k), Y = s.matrix(m, k), Z = s.matrix(m, k);
    const auto x = column_graph(X), y = column_graph(Y), z = column_graph(Z);
    const K r = s.scalar(), q = s.scalar();
    EXPECT_EQ(affine_add(a, x, y, z), column_graph(X - Y + Z));
    EXPECT_EQ(affine_add_projector(a, x, y, z), affine_add(a, x, y, z));
    EXPECT_EQ(affine_scale(a, r, x, y), column_graph((K(1, f) - r) * X + r * Y));
    // x +_y z commutes, is associative, and y is neutral
    EXPECT_EQ(affine_add(a, x, y, z), affine_add(a, z, y, x));
    EXPECT_EQ(affine_add(a, x, y, y), x);
    const auto w = column_graph(s.matrix(m, k));
    EXPECT_EQ(affine_add(a, affine_add(a, x, y, z), y, w), affine_add(a, x, y, affine_add(a, z, y, w)));
    EXPECT_EQ(affine_scale(a, r, x, affine_scale(a, q, x, y)), affine_scale(a, r * q, x, y));
    // projector formula for arbitrary a, not just the chart
    const auto b = s.subspace(m + k);
    const auto u = s.complement(b), v = s.complement(b), p = s.complement(b);
    EXPECT_EQ(affine_add_projector(b, u, v, p), affine_add(b, u, v, p));
  }
}

TEST(Torsor, AffineSpaceGF3) { affine_checks<Fp>(F3, 2, 1, 300); }
TEST(Torsor, AffineSpaceRational) { affine_checks<Rational>(Q, 1, 2, 150); }

TEST(Torsor, Actions) {
  Sampler<Fp> s(F2, 9);
  for (int t = 0; t < 80; ++t) {
    const auto [a, b, y] = pair_with_unit(s, 3);
    const GroupContext<Fp> g(TorsorContext<Fp>(a, b), y);
    const auto u = *s.common_complement_of(a, b), v = *s.common_complement_of(a, b);
    const auto z = s.subspace(3), w = s.subspace(3);
    EXPECT_EQ(left_action(g, y, z), z);
    EXPECT_EQ(right_action(g, z, y), z);
    EXPECT_EQ(left_action(g, u, a), a);
    EXPECT_EQ(left_action(g, u, b), b);
    EXPECT_EQ(right_action(g, a, u), a);
    EXPECT_EQ(right_action(g, b, u), b);
    EXPECT_EQ(left_action(g, group_mul(g, u, v), z), left_action(g, u, left_action(g, v, z)));
    EXPECT_EQ(right_action(g, z, group_mul(g, u, v)), right_action(g, right_action(g, z, u), v));
    EXPECT_EQ(left_action(g, u, right_action(g, z, v)), right_action(g, left_action(g, u, z), v));
    // automorphisms: l_u(Γ(z,a,w,b,z)) = Γ(l_u z, a, l_u w, b, l_u z) since a, b are fixed
    EXPECT_EQ(left_action(g, u, G(z, a, w, b, y)), G(left_action(g, u, z), a, left_action(g, u, w), b,
                                                      left_action(g, u, y)));
  }
}

TEST(Torsor, SemitorsoredPairs) {
  Sampler<Fp> s(F2, 10);
  for (int t = 0; t < 10; ++t) {
    const auto a = s.subspace(4, 2), b = s.subspace(4, 2);
    const auto rep = semitorsored_pair_check(a, b, s, 5);
    EXPECT_TRUE(rep.ok()) << rep.closure.witness.value_or("") << rep.affine.witness.value_or("");
    const auto same = semitorsored_pair_check(a, a, s, 3);
    EXPECT_TRUE(same.ok());
  }
  // different dimensions
  const auto rep = semitorsored_pair_check(s.subspace(4, 1), s.subspace(4, 3), s, 10);
  EXPECT_TRUE(rep.ok());
  Sampler<Fp> s3(F3, 11);
  const auto lin = semitorsored_pair_check(e(F3, 2, {0}), e(F3, 2, {1}), s3, 40);
  EXPECT_TRUE(lin.ok()) << lin.linear.witness.value_or("");
  EXPECT_GT(lin.linear.cases, 0u);
  const auto lin4 = semitorsored_pair_check(e(F3, 4, {0, 1}), e(F3, 4, {2, 3}), s3, 20);
  EXPECT_TRUE(lin4.ok()) << lin4.linear.witness.value_or("") << lin4.affine.witness.value_or("");
}
