#include <gtest/gtest.h>

#include "assocgeom/text_format.hpp"

using namespace asg;

namespace {

const Field F3 = Field::prime(3);
const Field Q = Field::rationals();

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(TextFormat, SubspaceRoundTrip) {
  Sampler<Fp> s(F3, 1);
  for (int t = 0; t < 50; ++t) {
    const auto x = s.subspace(4);
    EXPECT_EQ(parse_subspace<Fp>(format_subspace(x)), x);
  }
  Sampler<Rational> r(Q, 2);
  for (int t = 0; t < 50; ++t) {
    const auto x = r.subspace(3);
    EXPECT_EQ(parse_subspace<Rational>(format_subspace(x)), x);
  }
}

TEST(TextFormat, ParsesCommentsAndReduces) {
  const auto x = parse_subspace<Fp>("# a line\nfield p=3\nambient 2\n 2 2   # comment\n1 1\n");
  EXPECT_EQ(x, Subspace<Fp>::from_ints(F3, 2, {{1, 1}}));
  const auto zero = parse_subspace<Rational>("field q\nambient 3\n");
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.ambient(), 3u);
  const auto half = parse_subspace<Rational>("field q\nambient 2\n1/2 -3/4\n");
  EXPECT_EQ(half.basis()(0, 1).str(), "-3/2");
}

TEST(TextFormat, FormatIsCanonical) {
  const auto x = Subspace<Fp>::from_ints(F3, 3, {{0, 2, 1}, {1, 0, 0}});
  EXPECT_EQ(format_subspace(x), "field p=3\nambient 3\n1 0 0\n0 1 2\n");
}

TEST(TextFormat, QuintupleAndRelationRoundTrip) {
  Sampler<Fp> s(F3, 3);
  for (int t = 0; t < 30; ++t) {
    const auto q = s.quintuple(3);
    const auto back = parse_quintuple<Fp>(format_quintuple(q));
    EXPECT_EQ(back.x, q.x);
    EXPECT_EQ(back.a, q.a);
    EXPECT_EQ(back.y, q.y);
    EXPECT_EQ(back.b, q.b);
    EXPECT_EQ(back.z, q.z);
    const Relation<Fp> r(2, 1, s.subspace(3));
    EXPECT_EQ(parse_relation<Fp>(format_relation(r)), r);
  }
}

TEST(TextFormat, Errors) {
  EXPECT_EQ(code_of([] { parse_subspace<Fp>("ambient 2\n1 0\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_subspace<Fp>("field p=4\nambient 2\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_subspace<Fp>("field q\nambient 2\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_subspace<Fp>("field p=3\nambient 2\n1 0 1\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_subspace<Fp>("field p=3\nambient 2\n1 x\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_subspace<Fp>("field p=3\nambient two\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_relation<Fp>("relation 1 1\nfield p=3\nambient 3\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_quintuple<Fp>("[x]\nfield p=3\nambient 1\n[y]\nfield p=3\nambient 1\n"); }),
            ErrorCode::kParse);
  try {
    parse_subspace<Fp>("field p=3\nambient 2\n\n1 0\n1 0 0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 5"), std::string::npos);
  }
}

TEST(TextFormat, PeekField) {
  EXPECT_EQ(peek_field("# hi\n[x]\nfield p=7\n"), Field::prime(7));
  EXPECT_EQ(peek_field("relation 1 1\nfield q\n"), Q);
  EXPECT_THROW(peek_field("ambient 2\n"), Error);
}

TEST(TextFormat, StructureConstants) {
  auto m2 = matrix_algebra<Fp>(Field::prime(2), 2);
  const auto text = format_algebra(m2);
  EXPECT_EQ(text.substr(0, text.find('\n')), "algebra dim=4 field p=2");
  const auto back = parse_algebra<Fp>(text);
  EXPECT_EQ(back.constants, m2.constants);
  EXPECT_EQ(back.unit, m2.unit);
  EXPECT_EQ(peek_field(text), Field::prime(2));

  const auto h = hom_pair<Rational>(Q, 1, 2);
  const auto ptext = format_pair(h);
  EXPECT_EQ(ptext.substr(0, ptext.find('\n')), "pair dim+=2 dim-=2 field q");
  const auto hb = parse_pair<Rational>(ptext);
  EXPECT_EQ(hb.constants, h.constants);
  EXPECT_EQ(hb.dims, h.dims);

  EXPECT_EQ(code_of([] { parse_algebra<Fp>("algebra dim=1 field p=2\n1\nunit 0\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_algebra<Fp>("algebra dim=2 field p=2\n1 0\n"); }), ErrorCode::kParse);
  EXPECT_EQ(code_of([] { parse_pair<Fp>("pair dim+=1 dim-=1 field p=2\n[minus]\n1\n[plus]\n1\n"); }),
            ErrorCode::kParse);
  try {
    parse_algebra<Fp>("algebra dim=1 field p=3\n# c\n1 2\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}
