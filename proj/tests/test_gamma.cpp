#include <gtest/gtest.h>

#include "assocgeom/gamma.hpp"
#include "assocgeom/sampling.hpp"

using namespace asg;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);
const Field Q = Field::rationals();

using S = Subspace<Fp>;
using Qd = Quintuple<Fp>;

S e(Field f, std::size_t n, std::initializer_list<std::size_t> idx) { return S::coordinate(f, n, idx); }

}  // namespace

TEST(Gamma, DomainFlagsExamples) {
  const Qd all{e(F2, 2, {0}), e(F2, 2, {1}), S::from_ints(F2, 2, {{1, 1}}), e(F2, 2, {0}), e(F2, 2, {1})};
  const auto d = domain_flags(all);
  EXPECT_TRUE(d.in_dl);
  EXPECT_TRUE(d.in_dr);
  EXPECT_TRUE(d.in_dm);
  const Qd bad{e(F2, 2, {0}), e(F2, 2, {0}), e(F2, 2, {1}), e(F2, 2, {0}), e(F2, 2, {1})};
  EXPECT_FALSE(domain_flags(bad).in_dl);
  EXPECT_FALSE(domain_flags(bad).in_dm);
}

TEST(Gamma, OperatorExamples) {
  const auto e1 = e(F2, 2, {0}), e2 = e(F2, 2, {1}), d = S::from_ints(F2, 2, {{1, 1}});
  EXPECT_EQ(gamma_operator(Qd{e1, e2, d, e2, e1}), d);
  // x ∈ C_ab: Γ(x,a,x,b,z) = z, and Γ(x,a,x,b,x) = x
  const auto a = e(F3, 2, {0}), b = e(F3, 2, {1}), x = S::from_ints(F3, 2, {{1, 1}}), z = S::from_ints(F3, 2, {{1, 2}});
  EXPECT_EQ(gamma_operator(Quintuple<Fp>{x, a, x, b, z}), z);
  EXPECT_EQ(gamma_operator(Quintuple<Fp>{x, a, x, b, x}), x);
  EXPECT_THROW(gamma_operator(Qd{e1, e1, e1, e1, e1}), Error);
}

TEST(Gamma, ExtendedExamples) {
  const auto a = e(F2, 3, {0}), b = e(F2, 3, {2}), y = S::from_ints(F2, 3, {{1, 1, 1}});
  EXPECT_EQ(gamma_extended(Qd{a, a, y, b, b}), join(a, b));
  EXPECT_EQ(gamma_extended(Qd{y, a, b, a, a}), a);
  const auto x = e(F2, 3, {0, 1}), a2 = e(F2, 3, {1, 2}), z = S::from_ints(F2, 3, {{1, 0, 1}});
  const Qd q{x, a2, x, b, z};
  EXPECT_EQ(gamma_extended(q), S::from_ints(F2, 3, {{1, 0, 1}, {0, 1, 0}}));
  EXPECT_EQ(gamma_bruteforce(q), gamma_extended(q));
}

TEST(Gamma, BruteforceExamples) {
  Sampler<Fp> s(F2, 1);
  for (int t = 0; t < 50; ++t) {
    const auto x = s.subspace(3), a = s.subspace(3), b = s.subspace(3), y = s.subspace(3);
    EXPECT_EQ(gamma_bruteforce(Qd{x, a, x, b, x}), x);
    EXPECT_EQ(gamma_bruteforce(Qd{a, b, y, a, b}), meet(a, b));
  }
  EXPECT_THROW(gamma_bruteforce(Qd{S(F2, 17), S(F2, 17), S(F2, 17), S(F2, 17), S(F2, 17)}), Error);
}

TEST(Gamma, ExtendedMatchesBruteforceAndDescriptions) {
  for (Field f : {F2, F3}) {
    Sampler<Fp> s(f, 17);
    for (int t = 0; t < 300; ++t) {
      const auto q = s.quintuple(f.p == 2 ? 4 : 3);
      const auto g = gamma_extended(q);
      EXPECT_EQ(gamma_bruteforce(q), g);
      for (auto d : kAllDescriptions) EXPECT_EQ(gamma_description(q, d), g) << description_name(d);
    }
  }
}

TEST(Gamma, OperatorBranchesAgreeWithExtended) {
  Sampler<Fp> s(F3, 23);
  int hits[3] = {0, 0, 0};
  for (int t = 0; t < 400; ++t) {
    const auto q = s.domain_quintuple(3);
    const auto d = domain_flags(q);
    const auto g = gamma_extended(q);
    EXPECT_EQ(gamma_operator(q), g);
    if (d.in_dl) {
      EXPECT_EQ(gamma_operator(q, Branch::kLeft), g);
      ++hits[0];
    }
    if (d.in_dr) {
      EXPECT_EQ(gamma_operator(q, Branch::kRight), g);
      ++hits[1];
    }
    if (d.in_dm) {
      EXPECT_EQ(gamma_operator(q, Branch::kMiddle), g);
      ++hits[2];
    }
  }
  for (int h : hits) EXPECT_GT(h, 20);
}

TEST(Gamma, OperatorExamplesFromDefinitions) {
  Sampler<Fp> s(F3, 4);
  for (int t = 0; t < 100; ++t) {
    const auto a = s.subspace(3), b = s.subspace(3, a.dim());
    const auto x = *s.common_complement_of(a, b);
    EXPECT_TRUE(left_operator(x, a, x, b).is_identity());
    EXPECT_TRUE(right_operator(a, x, b, x).is_identity());
    EXPECT_EQ(middle_operator(x, a, a, x), dilation_operator(Fp(-1, F3), x, a));
    EXPECT_TRUE(dilation_operator(Fp(1, F3), x, a).is_identity());
    EXPECT_EQ(dilation_operator(Fp(0, F3), x, a), projector(x, a));
  }
  // GF(3)^2: M_{xaaz}(a) = a
  const auto x = e(F3, 2, {0}), a = e(F3, 2, {1}), z = S::from_ints(F3, 2, {{1, 1}});
  const auto m = middle_operator(x, a, a, z);
  EXPECT_EQ(m, projector(x, a) - projector(a, z));
  EXPECT_EQ(image(m, a), a);
  EXPECT_THROW(left_operator(x, x, x, a), Error);
}

TEST(Gamma, OperatorIdentities) {
  Sampler<Fp> s(F5, 8);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 1 + s.below(3);
    const auto a = s.subspace(n), b = s.subspace(n, a.dim());
    const auto x = s.complement(a), u = s.complement(a), z = s.complement(b), v = s.complement(b);
    // Klein symmetry of M, as projective classes
    const auto m = middle_operator(x, a, b, z);
    EXPECT_TRUE(proportional(middle_operator(a, x, z, b), m));
    EXPECT_TRUE(proportional(middle_operator(b, z, x, a), m));
    EXPECT_TRUE(proportional(middle_operator(z, b, a, x), m));
    // fundamental relation R_{aubz} L_{xavb} = M_{xabz} M_{uabv} = L_{xavb} R_{aubz}
    const auto mm = m * middle_operator(u, a, b, v);
    EXPECT_TRUE(proportional(right_operator(a, u, b, z) * left_operator(x, a, v, b), mm));
    EXPECT_TRUE(proportional(left_operator(x, a, v, b) * right_operator(a, u, b, z), mm));
    // invertibility on C_ab
    const auto y = *s.common_complement_of(a, b), w = *s.common_complement_of(a, b),
               c = *s.common_complement_of(a, b);
    EXPECT_TRUE(proportional(left_operator(y, a, w, b) * left_operator(w, a, y, b), Matrix<Fp>::identity(F5, n)));
    EXPECT_TRUE(proportional(middle_operator(y, a, b, c) * middle_operator(c, a, b, y), Matrix<Fp>::identity(F5, n)));
    EXPECT_TRUE(proportional(right_operator(a, w, b, c) * right_operator(a, c, b, w), Matrix<Fp>::identity(F5, n)));
    // diagonal values M_{uabz}(u) = z = R_{aubz}(u) for u ∈ C_ab
    EXPECT_EQ(image(middle_operator(y, a, b, z), y), z);
    EXPECT_EQ(image(right_operator(a, y, b, z), y), z);
  }
}

TEST(Gamma, PiExtendedBasics) {
  Sampler<Fp> s(F5, 2);
  for (int t = 0; t < 100; ++t) {
    const auto x = s.subspace(3), a = s.subspace(3), z = s.subspace(3);
    const Fp r = s.scalar();
    EXPECT_EQ(pi_extended(r, x, a, z), pi_extended(Fp(1, F5) - r, z, a, x));
    EXPECT_EQ(pi_extended(r, x, a, x), x);
    EXPECT_EQ(pi_extended(Fp(0, F5), x, a, z), meet(x, join(z, a)));
    EXPECT_EQ(pi_extended(Fp(1, F5), z, a, x), meet(x, join(z, a)));
    EXPECT_EQ(pi_extended(Fp(0, F5), x, a, z), gamma_extended(Quintuple<Fp>{x, a, a, x, z}));
    if (is_transversal(x, a)) {
      // dilation operator agreement
      EXPECT_EQ(pi_extended(r, x, a, z), image(dilation_operator(r, x, a), z)) << r.str();
    }
  }
}

TEST(Gamma, ChartGraphsRoundTrip) {
  Sampler<Rational> s(Q, 3);
  for (int t = 0; t < 50; ++t) {
    const auto X = s.matrix(2, 3), A = s.matrix(3, 2);
    EXPECT_EQ(*column_coordinate(column_graph(X), 2), X);
    EXPECT_EQ(*row_coordinate(row_graph(A), 2), A);
  }
  // o⁺ is the graph of 0, o⁻ the row graph of 0
  EXPECT_EQ(column_graph(Matrix<Fp>(F2, 1, 1)), S::coordinate(F2, 2, {1}));
  EXPECT_EQ(row_graph(Matrix<Fp>(F2, 1, 1)), S::coordinate(F2, 2, {0}));
  EXPECT_FALSE(column_coordinate(S::coordinate(F2, 2, {0}), 1));
}

TEST(Gamma, AffineExamples) {
  const auto one = Matrix<Fp>::identity(F2, 1), zero = Matrix<Fp>(F2, 1, 1);
  EXPECT_EQ(*gamma_affine(one, one, zero, zero, one), one);
  const auto q = Qd{column_graph(one), row_graph(one), column_graph(zero), row_graph(zero), column_graph(one)};
  EXPECT_EQ(gamma_extended(q), column_graph(one));
  // first kind over GF(5): 2·3⁻¹·4 = 1
  const auto m = [](std::int64_t v) { return Matrix<Fp>::from_ints(F5, 1, 1, {v}); };
  EXPECT_EQ(gamma_first_kind(m(2), m(3), m(4)), m(1));
  EXPECT_EQ(gamma_first_kind(m(2), m(1), m(4)), m(3));
  EXPECT_THROW(gamma_first_kind(m(2), m(0), m(4)), Error);
}

template <class K>
void check_affine_against_extended(Field f, std::uint64_t seed) {
  Sampler<K> s(f, seed);
  int present = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t m = 1 + s.below(2), k = 1 + s.below(2);
    const auto X = s.matrix(m, k), Y = s.matrix(m, k), Z = s.matrix(m, k), A = s.matrix(k, m);
    const auto B = s.coin(3) ? Matrix<K>(f, k, m) : s.matrix(k, m);
    const Quintuple<K> q{column_graph(X), row_graph(A), column_graph(Y), row_graph(B), column_graph(Z)};
    const auto g = gamma_extended(q);
    const auto a = gamma_affine(X, A, Y, B, Z);
    if (a) {
      ++present;
      EXPECT_EQ(column_graph(*a), g);
    }
    const auto one = Matrix<K>::identity(f, k);
    const Matrix<K> o_plus(f, m, k), o_minus(f, k, m);
    // Y = O⁺, B = O⁻: X − ZAX + Z
    {
      const Quintuple<K> q0{column_graph(X), row_graph(A), column_graph(o_plus), row_graph(o_minus), column_graph(Z)};
      EXPECT_EQ(gamma_extended(q0), column_graph(X - Z * A * X + Z));
      // B = O⁻: X − (Y−Z)(1−AY)⁻¹(1−AX)
      if (const auto ay = inverse(one - A * Y)) {
        const Quintuple<K> q1{column_graph(X), row_graph(A), column_graph(Y), row_graph(o_minus), column_graph(Z)};
        EXPECT_EQ(gamma_extended(q1), column_graph(X - (Y - Z) * *ay * (one - A * X)));
      }
    }
    // first kind: Γ(X, o⁻, Y, o⁺, Z) = XY⁻¹Z when Y is square invertible
    if (m == k && inverse(Y)) {
      const Quintuple<K> q2{column_graph(X), row_graph(o_minus), column_graph(Y), column_graph(o_plus), column_graph(Z)};
      EXPECT_EQ(gamma_extended(q2), column_graph(gamma_first_kind(X, Y, Z)));
    }
  }
  EXPECT_GT(present, 50);
}

TEST(Gamma, AffineMatchesExtendedGF5) { check_affine_against_extended<Fp>(F5, 31); }
TEST(Gamma, AffineMatchesExtendedRationals) { check_affine_against_extended<Rational>(Q, 37); }

TEST(Gamma, RationalExtendedMatchesOperator) {
  Sampler<Rational> s(Q, 12);
  for (int t = 0; t < 100; ++t) {
    const auto q = s.domain_quintuple(3);
    EXPECT_EQ(gamma_operator(q), gamma_extended(q));
    for (auto d : kAllDescriptions) EXPECT_EQ(gamma_description(q, d), gamma_extended(q));
  }
}
