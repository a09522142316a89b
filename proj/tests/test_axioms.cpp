#include <gtest/gtest.h>

#include "assocgeom/axioms.hpp"

using namespace asg;

namespace {

void expect_all_pass(const AxiomReport& rep) {
  for (const auto& [name, r] : rep.entries()) {
    EXPECT_TRUE(r->ok()) << name << "\n" << r->witness.value_or("");
    EXPECT_GT(r->cases, 0u) << name;
  }
}

}  // namespace

TEST(Axioms, GrassmannianSizes) {
  EXPECT_EQ(FiniteGeometry::grassmannian(Field::prime(2), 3).size(), 16u);
  EXPECT_EQ(FiniteGeometry::grassmannian(Field::prime(3), 2).size(), 6u);
  EXPECT_EQ(FiniteGeometry::grassmannian(Field::prime(5), 2).size(), 8u);
  EXPECT_THROW(FiniteGeometry::grassmannian(Field::prime(2), 4), Error);
  EXPECT_THROW(FiniteGeometry::grassmannian(Field::rationals(), 2), Error);
}

TEST(Axioms, GF3PlaneExhaustive) {
  const auto g = FiniteGeometry::grassmannian(Field::prime(3), 2);
  const auto rep = verify_axioms(g);
  expect_all_pass(rep);
  EXPECT_EQ(rep.semitorsor.cases, 279936u);  // 6^7
}

TEST(Axioms, GF5PlaneExhaustive) { expect_all_pass(verify_axioms(FiniteGeometry::grassmannian(Field::prime(5), 2))); }

TEST(Axioms, GF2SpaceExhaustive) {
  const auto g = FiniteGeometry::grassmannian(Field::prime(2), 3);
  const auto rep = verify_axioms(g);
  expect_all_pass(rep);
  EXPECT_EQ(rep.semitorsor.cases, 268435456u);  // 16^7
}

TEST(Axioms, OppositeGeometry) {
  const auto g = FiniteGeometry::grassmannian(Field::prime(3), 2);
  const auto op = g.opposite();
  expect_all_pass(verify_axioms(op));
  // Γ^op(a,a,y,b,b) is the meet
  const std::size_t zero = g.index(Subspace<Fp>::zero(Field::prime(3), 2));
  const std::size_t full = g.index(Subspace<Fp>::full(Field::prime(3), 2));
  EXPECT_EQ(op.gamma(zero, zero, zero, full, full), zero);
  EXPECT_EQ(g.gamma(zero, zero, zero, full, full), full);
}

TEST(Axioms, MutationIsDetected) {
  const auto g = FiniteGeometry::grassmannian(Field::prime(3), 2);
  const auto bad = g.corrupted(0, g.size() - 1);
  const auto rep = verify_axioms(bad);
  EXPECT_FALSE(rep.ok());
  EXPECT_TRUE(rep.semitorsor_or_diagonal_failed());
  EXPECT_FALSE(rep.diagonal_join.ok());
  ASSERT_TRUE(rep.diagonal_join.witness.has_value());
  EXPECT_NE(rep.diagonal_join.witness->find("[a]"), std::string::npos);
}
