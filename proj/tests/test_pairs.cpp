#include <gtest/gtest.h>

#include "assocgeom/pairs.hpp"
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

Vec<Fp> flat(const Matrix<Fp>& m) { return {m.entries().begin(), m.entries().end()}; }

Vec<Fp> random_vec(Sampler<Fp>& s, std::size_t n) {
  Vec<Fp> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(s.scalar());
  return v;
}

// Diagonal {(v, v)} in F^n ⊕ F^n.
S diagonal(Field f, std::size_t n) {
  Matrix<Fp> rows(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) rows(i, i) = rows(i, n + i) = Fp(1, f);
  return S::span(rows);
}

// F^4 with componentwise product: commutative, so not M(2).
Algebra<Fp> diagonal_algebra(Field f, std::size_t d) {
  Algebra<Fp> a(f, d);
  for (std::size_t i = 0; i < d; ++i) a.c(i, i, i) = Fp(1, f);
  a.unit = Vec<Fp>(d, Fp(1, f));
  return a;
}

}  // namespace

TEST(Pairs, HomPairLaws) {
  Sampler<Fp> s(F3, 1);
  for (auto [de, df] : {std::pair{1, 1}, {2, 1}, {1, 2}, {2, 3}}) {
    const auto r = check_pair_laws(hom_pair<Fp>(F3, de, df), s, 40);
    EXPECT_TRUE(r.ok()) << *r.witness;
  }
  Sampler<Rational> sq(Q, 2);
  EXPECT_TRUE(check_pair_laws(hom_pair<Rational>(Q, 2, 2), sq, 20).ok());
}

TEST(Pairs, HomPairProductsAreMatrixProducts) {
  const auto p = hom_pair<Fp>(F5, 2, 3);  // A⁺ is 3×2, A⁻ is 2×3
  Sampler<Fp> s(F5, 3);
  for (int t = 0; t < 20; ++t) {
    const auto X = s.matrix(3, 2), Y = s.matrix(2, 3), Z = s.matrix(3, 2);
    EXPECT_EQ(p.product(Sign::kPlus, flat(X), flat(Y), flat(Z)), flat(X * Y * Z));
    EXPECT_EQ(p.product(Sign::kMinus, flat(Y), flat(X), flat(Y)), flat(Y * X * Y));
  }
}

TEST(Pairs, SwappedExchangesSides) {
  const auto p = hom_pair<Fp>(F3, 1, 2);
  const auto q = swapped(p);
  EXPECT_EQ(q.dims[0], p.dims[1]);
  EXPECT_EQ(q.constants[0], p.constants[1]);
  EXPECT_EQ(swapped(q).constants, p.constants);
}

TEST(Pairs, MatrixAlgebra) {
  const auto m2 = matrix_algebra<Fp>(F2, 2);
  EXPECT_TRUE(is_associative(m2));
  EXPECT_TRUE(is_unit(m2, *m2.unit));
  // E_01 E_10 = E_00, E_10 E_01 = E_11
  Vec<Fp> e01(4, Fp(0, F2)), e10 = e01, e00 = e01, e11 = e01;
  e01[1] = e10[2] = e00[0] = e11[3] = Fp(1, F2);
  EXPECT_EQ(m2.mul(e01, e10), e00);
  EXPECT_EQ(m2.mul(e10, e01), e11);
  EXPECT_EQ(m2.mul(e01, e01), Vec<Fp>(4, Fp(0, F2)));
}

TEST(Pairs, AlgebraIsomorphismSearch) {
  const auto m2 = matrix_algebra<Fp>(F2, 2);
  const auto phi = find_algebra_isomorphism(m2, m2);
  ASSERT_TRUE(phi.has_value());
  EXPECT_EQ(rank(*phi), 4u);
  EXPECT_FALSE(find_algebra_isomorphism(m2, diagonal_algebra(F2, 4)).has_value());
  EXPECT_FALSE(find_algebra_isomorphism(m2, matrix_algebra<Fp>(F2, 1)).has_value());
}

TEST(Pairs, AlgebraIsomorphismIsMultiplicative) {
  // M(2) conjugated by a change of basis of its underlying space
  const auto m2 = matrix_algebra<Fp>(F3, 2);
  Sampler<Fp> s(F3, 4);
  const auto P = s.invertible(4);
  const auto Pinv = *inverse(P);
  Algebra<Fp> b(F3, 4);
  const auto to_b = [&](const Vec<Fp>& x) { return Pinv.transpose().apply(x); };
  const auto from_b = [&](const Vec<Fp>& x) { return P.transpose().apply(x); };
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Vec<Fp> ei(4, Fp(0, F3)), ej = ei;
      ei[i] = ej[j] = Fp(1, F3);
      const auto v = to_b(m2.mul(from_b(ei), from_b(ej)));
      for (std::size_t k = 0; k < 4; ++k) b.c(i, j, k) = v[k];
    }
  b.unit = to_b(*m2.unit);
  ASSERT_TRUE(is_unit(b, *b.unit));
  // p^(d·d) = 3^16 exceeds the guard
  EXPECT_THROW(find_algebra_isomorphism(m2, b), Error);
}

TEST(Pairs, ChartProductsAreMatrixProducts) {
  Sampler<Fp> s(F3, 5);
  const BasePoint<Fp> standard(e(F3, 3, {1, 2}), e(F3, 3, {0}));
  auto rep = check_extracted_pair(standard, s, 30);
  EXPECT_TRUE(rep.ok()) << rep.trilinear.witness.value_or("") << rep.para_associative.witness.value_or("")
                        << rep.matrix_model.witness.value_or("");
  // a base point away from the coordinate axes
  const auto o_minus = s.subspace(4, 2);
  const BasePoint<Fp> skew(s.complement(o_minus), o_minus);
  rep = check_extracted_pair(skew, s, 20);
  EXPECT_TRUE(rep.ok()) << rep.trilinear.witness.value_or("") << rep.para_associative.witness.value_or("")
                        << rep.matrix_model.witness.value_or("");
}

TEST(Pairs, ChartProductsOverRationals) {
  Sampler<Rational> s(Q, 6);
  const auto o_minus = s.subspace(3, 1);
  const BasePoint<Rational> bp(s.complement(o_minus), o_minus);
  const auto rep = check_extracted_pair(bp, s, 15);
  EXPECT_TRUE(rep.ok());
}

TEST(Pairs, BasePointRejectsNonTransversal) {
  EXPECT_THROW(BasePoint<Fp>(e(F2, 3, {0, 1}), e(F2, 3, {1})), Error);
  const BasePoint<Fp> bp(e(F2, 2, {1}), e(F2, 2, {0}));
  EXPECT_THROW(bp.plus_coordinate(e(F2, 2, {0})), Error);
  EXPECT_EQ(bp.plus_point(Matrix<Fp>(F2, 1, 1)), bp.o_plus());
  EXPECT_EQ(bp.minus_point(Matrix<Fp>(F2, 1, 1)), bp.o_minus());
}

TEST(Pairs, ExtractedPairIsHomPair) {
  // A⁺ = Hom(o⁺, o⁻) is dim o⁻ × dim o⁺
  for (auto [m, k] : {std::pair{2, 2}, {1, 3}, {3, 1}}) {
    std::vector<std::size_t> minus_idx, plus_idx;
    for (int i = 0; i < m + k; ++i) (i < m ? minus_idx : plus_idx).push_back(i);
    Matrix<Fp> mrows(F2, 0, 4), prows(F2, 0, 4);
    for (auto i : minus_idx) {
      Vec<Fp> v(4, Fp(0, F2));
      v[i] = Fp(1, F2);
      mrows.append_row(v);
    }
    for (auto i : plus_idx) {
      Vec<Fp> v(4, Fp(0, F2));
      v[i] = Fp(1, F2);
      prows.append_row(v);
    }
    const BasePoint<Fp> base(S::span(prows), S::span(mrows));
    const auto p = extract_pair(base);
    const auto h = hom_pair<Fp>(F2, k, m);
    EXPECT_EQ(p.dims, h.dims);
    EXPECT_EQ(p.constants, h.constants) << m << " " << k;
  }
}

TEST(Pairs, ExtractedAlgebraOnLine) {
  // U_c in GF(3)^2 with a, c the axes and u the diagonal: the field itself
  const auto alg = extract_algebra(e(F3, 2, {1}), diagonal(F3, 1), e(F3, 2, {0}));
  EXPECT_EQ(alg.dim, 1u);
  EXPECT_TRUE(is_associative(alg));
  ASSERT_TRUE(alg.unit.has_value());
  EXPECT_TRUE(is_unit(alg, *alg.unit));
  EXPECT_TRUE(find_algebra_isomorphism(alg, matrix_algebra<Fp>(F3, 1)).has_value());
  EXPECT_THROW(extract_algebra(e(F3, 2, {1}), e(F3, 2, {1}), e(F3, 2, {0})), Error);
}

TEST(Pairs, ExtractedAlgebraIsMatrixAlgebra) {
  const auto alg = extract_algebra(e(F2, 4, {2, 3}), diagonal(F2, 2), e(F2, 4, {0, 1}));
  EXPECT_TRUE(is_associative(alg));
  ASSERT_TRUE(alg.unit.has_value());
  EXPECT_TRUE(is_unit(alg, *alg.unit));
  const auto phi = find_algebra_isomorphism(alg, matrix_algebra<Fp>(F2, 2));
  ASSERT_TRUE(phi.has_value());
}

TEST(Pairs, ExtractedAlgebraAtRandomUnit) {
  Sampler<Fp> s(F3, 7);
  for (int t = 0; t < 10; ++t) {
    const auto a = s.subspace(4, 2);
    const auto c = s.complement(a);
    const auto u = s.common_complement_of(a, c);
    ASSERT_TRUE(u.has_value());
    const auto alg = extract_algebra(a, *u, c);
    EXPECT_TRUE(is_associative(alg));
    EXPECT_TRUE(is_unit(alg, *alg.unit));
  }
}

TEST(Pairs, HomotopeAtInvertibleElementIsUnital) {
  const auto p = hom_pair<Fp>(F3, 2, 2);
  Sampler<Fp> s(F3, 8);
  for (int t = 0; t < 10; ++t) {
    const auto A = s.invertible(2);
    const auto alg = homotope(p, Sign::kPlus, flat(A));
    EXPECT_TRUE(is_associative(alg));
    ASSERT_TRUE(alg.unit.has_value());
    EXPECT_TRUE(is_unit(alg, *alg.unit));
    EXPECT_EQ(*alg.unit, flat(*inverse(A)));
  }
  const auto singular = homotope(p, Sign::kPlus, flat(Matrix<Fp>::from_ints(F3, 2, 2, {1, 0, 0, 0})));
  EXPECT_TRUE(is_associative(singular));
  EXPECT_FALSE(singular.unit.has_value());
}

TEST(Pairs, JordanPolarization) {
  const auto p = hom_pair<Fp>(F5, 2, 3);
  Sampler<Fp> s(F5, 9);
  for (const Sign sg : {Sign::kPlus, Sign::kMinus}) {
    const std::size_t a = p.dim(sg), b = p.dim(opposite(sg));
    for (int t = 0; t < 30; ++t) {
      const auto x = random_vec(s, a), z = random_vec(s, a), y = random_vec(s, b);
      Vec<Fp> xz(a, Fp(0, F5));
      for (std::size_t i = 0; i < a; ++i) xz[i] = x[i] + z[i];
      auto expected = jordan_Q(p, sg, xz, y);
      const auto qx = jordan_Q(p, sg, x, y), qz = jordan_Q(p, sg, z, y);
      for (std::size_t i = 0; i < a; ++i) expected[i] -= qx[i] + qz[i];
      EXPECT_EQ(jordan_T(p, sg, x, y, z), expected);
      EXPECT_EQ(quadratic_operator(p, sg, x).apply(y), jordan_Q(p, sg, x, y));
    }
  }
}

TEST(Pairs, PairInverse) {
  const auto p = hom_pair<Fp>(F5, 2, 2);
  Sampler<Fp> s(F5, 10);
  for (int t = 0; t < 20; ++t) {
    const auto X = s.invertible(2);
    const auto y = pair_inverse(p, Sign::kPlus, flat(X));
    ASSERT_TRUE(y.has_value());
    EXPECT_EQ(*y, flat(*inverse(X)));
    EXPECT_EQ(jordan_Q(p, Sign::kPlus, flat(X), *y), flat(X));
  }
  EXPECT_FALSE(pair_inverse(p, Sign::kPlus, flat(Matrix<Fp>::from_ints(F5, 2, 2, {1, 2, 2, 4}))).has_value());
  // Hom(GF(5), GF(5)^2) has no invertible elements
  const auto r = hom_pair<Fp>(F5, 1, 2);
  EXPECT_FALSE(pair_inverse(r, Sign::kPlus, flat(Matrix<Fp>::from_ints(F5, 2, 1, {1, 0}))).has_value());
}

TEST(Pairs, PeirceDecomposition) {
  const auto imb = standard_imbedding<Fp>(F2, 1, 1);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_EQ(imb.peirce[i][j].dim(), 1u);
  const auto big = standard_imbedding<Fp>(F3, 2, 1);
  EXPECT_EQ(big.peirce[1][1].dim(), 4u);
  EXPECT_EQ(big.peirce[0][0].dim(), 1u);
  EXPECT_EQ(big.peirce[0][1].dim(), 2u);
  EXPECT_EQ(big.peirce[1][0].dim(), 2u);
  Vec<Fp> not_idem(4, Fp(0, F2));
  not_idem[1] = Fp(1, F2);
  EXPECT_THROW(peirce_decomposition(matrix_algebra<Fp>(F2, 2), not_idem), Error);
}

TEST(Pairs, ImbeddedPairIsHomPair) {
  // A01 = fÂe = Hom(E, F) and A10 = eÂf = Hom(F, E)
  for (auto [de, df] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
    const auto p = pair_from_imbedding(standard_imbedding<Fp>(F3, de, df));
    const auto h = hom_pair<Fp>(F3, de, df);
    EXPECT_EQ(p.dims, h.dims);
    EXPECT_EQ(p.constants, h.constants) << de << " " << df;
  }
}

TEST(Pairs, RightIdealsMatchFilter) {
  for (std::size_t n : {1u, 2u}) {
    const auto alg = matrix_algebra<Fp>(F2, n);
    EXPECT_EQ(right_ideals(alg), right_ideals_by_filter(alg));
  }
  const auto m2_3 = matrix_algebra<Fp>(F3, 2);
  EXPECT_EQ(right_ideals(m2_3), right_ideals_by_filter(m2_3));
  EXPECT_EQ(right_ideals(matrix_algebra<Fp>(F2, 2)).size(), 5u);
  EXPECT_EQ(right_ideals(m2_3).size(), 6u);
}

TEST(Pairs, RightIdealsOfM3) {
  // right ideals of M(n) correspond to subspaces of F^n: 1 + 7 + 7 + 1 over GF(2)
  const auto alg = matrix_algebra<Fp>(F2, 3);
  const auto ideals = right_ideals(alg);
  EXPECT_EQ(ideals.size(), 16u);
  for (const auto& i : ideals) EXPECT_TRUE(is_right_ideal(alg, i));
  // closed under meet and join
  for (const auto& a : ideals)
    for (const auto& b : ideals) {
      EXPECT_TRUE(std::binary_search(ideals.begin(), ideals.end(), join(a, b)));
      EXPECT_TRUE(std::binary_search(ideals.begin(), ideals.end(), meet(a, b)));
    }
  EXPECT_THROW(right_ideals_by_filter(alg), Error);
}

TEST(Pairs, RightIdealsClosedUnderGamma) {
  const auto alg = matrix_algebra<Fp>(F2, 2);
  const auto ideals = right_ideals(alg);
  for (const auto& x : ideals)
    for (const auto& a : ideals)
      for (const auto& y : ideals)
        for (const auto& b : ideals)
          for (const auto& z : ideals) EXPECT_TRUE(is_right_ideal(alg, G(x, a, y, b, z)));
}

TEST(Pairs, GeometryRoundTrip) {
  for (auto [de, df] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
    const auto g = geometry_from_pair(F2, de, df);
    const std::size_t d = de * df;
    EXPECT_EQ(g.plus_points, std::size_t{1} << d);
    EXPECT_EQ(g.minus_points, std::size_t{1} << d);
    const auto h = hom_pair<Fp>(F2, de, df);
    ASSERT_EQ(g.extracted.dims, h.dims);
    EXPECT_TRUE(check_pair_laws(g.extracted, *std::make_unique<Sampler<Fp>>(F2, 11), 30).ok());
    EXPECT_TRUE(find_pair_isomorphism(g.extracted, h) || find_pair_isomorphism(g.extracted, swapped(h)))
        << de << " " << df;
  }
}

TEST(Pairs, PairIsomorphismSearch) {
  const auto h = hom_pair<Fp>(F2, 1, 2);
  EXPECT_TRUE(find_pair_isomorphism(h, h).has_value());
  // transposition identifies a Hom pair with its swap
  EXPECT_TRUE(find_pair_isomorphism(h, swapped(h)).has_value());
  // ⟨XYZ⟩⁺ lies in the span of X for Hom(E,F) with dim E = 1, in the span of Z for the mirror
  EXPECT_FALSE(find_pair_isomorphism(h, hom_pair<Fp>(F2, 2, 1)).has_value());
  // the zero pair on the same spaces is not isomorphic
  const PairModel<Fp> zero(F2, 2, 2);
  EXPECT_FALSE(find_pair_isomorphism(h, zero).has_value());
}

TEST(Pairs, CoincidenceIdentity) {
  // z ∈ U_b, x ∈ U_ab, y arbitrary: Γ(x,b,Γ(x,a,y,b,z),b,z) = Γ(z,b,a,y,x)
  Sampler<Fp> s(F2, 12);
  std::size_t cases = 0;
  while (cases < 200) {
    const auto a = s.subspace(4);
    const auto b = s.coin(3) ? a : s.subspace(4, a.dim());
    const auto x = s.common_complement_of(a, b);
    if (!x) continue;
    const auto z = s.complement(b);
    const auto y = s.mixed(4, {a, b, *x, z});
    EXPECT_EQ(G(*x, b, G(*x, a, y, b, z), b, z), G(z, b, a, y, *x));
    ++cases;
  }
}

TEST(Pairs, CoincidenceInChart) {
  // W = o⁻ ⊕ o⁺; x, z ∈ V⁺ = U_{o⁻} and a ∈ U_{o⁺}
  Sampler<Fp> s(F3, 13);
  const std::size_t m = 2, k = 1;
  const auto o_minus = e(F3, 3, {0, 1}), o_plus = e(F3, 3, {2});
  for (int t = 0; t < 200; ++t) {
    const auto X = s.matrix(m, k), Z = s.matrix(m, k);
    const auto A = s.matrix(k, m);
    const auto x = column_graph(X), z = column_graph(Z), a = row_graph(A);
    const auto middle = G(x, a, o_plus, o_minus, z);
    EXPECT_EQ(middle, column_graph(X - Z * A * X + Z));
    const auto lhs = G(z, o_minus, a, o_plus, x);
    EXPECT_EQ(lhs, column_graph(Z * A * X));
    EXPECT_EQ(lhs, affine_add(o_minus, x, middle, z));
  }
}
