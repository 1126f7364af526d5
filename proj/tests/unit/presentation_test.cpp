#include <gtest/gtest.h>

#include "quiverhh/algebra.hpp"
#include "quiverhh/errors.hpp"
#include "quiverhh/rewriting.hpp"

using namespace quiverhh;

namespace {

const char* kL2 = R"(
field Q
quiver {
  v
  a: v -> v
  b: v -> v
}
relations {
  a*a
  b*b
  a*b + b*a
}
)";

std::string jw(unsigned p, const std::string& rel) {
  return "field GF(" + std::to_string(p) + ")\nquiver { v; u: v -> v }\nrelations { " + rel + " }\n";
}

Path path(const Quiver& q, const std::string& s) {
  Element e = parse_element(s, q, Field::rationals());
  return e.leading_path();
}

}  // namespace

TEST(Dsl, SemicolonForm) {
  Presentation p = parse_presentation("field GF(5); quiver {v; u: v->v}; relations {u^5}");
  EXPECT_EQ(p.field.characteristic(), 5u);
  EXPECT_EQ(p.quiver.num_arrows(), 1u);
  ASSERT_EQ(p.relations.size(), 1u);
  EXPECT_EQ(p.relations[0].leading_path().length(), 5u);
  EXPECT_EQ(p.degree_bound, 10u);
}

TEST(Dsl, EmptyRelations) {
  Presentation p = parse_presentation("field Q\nquiver { 1 2\n a: 1 -> 2 }\nrelations { }\n");
  EXPECT_TRUE(p.relations.empty());
  EXPECT_EQ(p.degree_bound, 1u);
}

TEST(Dsl, Errors) {
  const char* nonparallel = "field Q\nquiver { 1 2\n a: 1 -> 1\n b: 2 -> 2 }\nrelations { a*a - b*b }\n";
  try {
    parse_presentation(nonparallel);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("non-parallel relation"), std::string::npos);
  }
  EXPECT_THROW(parse_presentation("field Q\nquiver { v\n a: v -> w }\nrelations { }"), InputError);
  EXPECT_THROW(parse_presentation("field Q\nquiver { v\n a: v -> v }\nrelations { c*c }"), InputError);
  EXPECT_THROW(parse_presentation("field Q\nquiver { 1 2\n a: 1 -> 2 }\nrelations { a*a }"), InputError);
  EXPECT_THROW(parse_presentation("field GF(2)\nquiver { v\n a: v -> v }\nrelations { 2*a*a }"), InputError);
  EXPECT_THROW(parse_presentation("field GF(3)\nquiver { v\n a: v -> v }\nrelations { 1/3*a*a }"), InputError);
  try {
    parse_presentation("field Q\nquiver { v\n  a: v -> }\nrelations { }");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(Dsl, FieldAndBoundOverrides) {
  ParseOptions o;
  o.field_override = Field::prime(3);
  o.degree_bound = 7;
  Presentation p = parse_presentation(kL2, o);
  EXPECT_EQ(p.field.characteristic(), 3u);
  EXPECT_EQ(p.degree_bound, 7u);
  o.degree_bound = 1;
  EXPECT_THROW(parse_presentation(kL2, o), InputError);
}

TEST(Dsl, ElementSyntax) {
  Presentation p = parse_presentation(kL2);
  Element x = parse_element("2*a*b - 1/3*e(v) + (a + b)^2", p.quiver, p.field);
  EXPECT_EQ(x.coefficient(path(p.quiver, "a*b")), 3);
  EXPECT_EQ(x.coefficient(Path::trivial(0)), mpq_class(-1, 3));
  EXPECT_EQ(x.coefficient(path(p.quiver, "b*a")), 1);
  Element one = parse_element("1", p.quiver, p.field);
  EXPECT_EQ(one.coefficient(Path::trivial(0)), 1);
}

TEST(Rewriting, MonomialPower) {
  for (unsigned p : {2u, 3u, 5u}) {
    auto pres = parse_presentation(jw(p, "u^" + std::to_string(p)));
    RewriteSystem rs = complete_rewriting(pres);
    ASSERT_EQ(rs.rules().size(), 1u);
    EXPECT_TRUE(rs.rules()[0].tail.is_zero());
    auto basis = rs.irreducible_paths();
    ASSERT_EQ(basis.size(), p);
    for (std::size_t i = 0; i < p; ++i) EXPECT_EQ(basis[i].length(), i);
  }
}

TEST(Rewriting, NonAdmissibleUnitRelation) {
  auto pres = parse_presentation(jw(3, "u^3 - 1"));
  RewriteSystem rs = complete_rewriting(pres);
  ASSERT_EQ(rs.rules().size(), 1u);
  EXPECT_EQ(rs.rules()[0].tail, Element::of(Path::trivial(0)));
  EXPECT_EQ(rs.irreducible_paths().size(), 3u);
  Algebra a = build_algebra(pres, rs);
  EXPECT_EQ(a.dim(), 3u);
}

TEST(Rewriting, ShiftedPowerNormalForm) {
  auto pres = parse_presentation(jw(5, "u^5 - 32"));
  RewriteSystem rs = complete_rewriting(pres);
  Element u5 = Element::of(path(pres.quiver, "u^5"));
  EXPECT_EQ(rs.normal_form(u5), Element::of(Path::trivial(0), pres.field.make(32)));
  EXPECT_EQ(rs.normal_form(Path::trivial(0)), Element::of(Path::trivial(0)));
}

TEST(Rewriting, QuantumPlane) {
  Presentation p = parse_presentation("field Q\nquiver { v\n x1: v -> v\n x2: v -> v }\n"
                                      "relations { x1^2\n x2^3\n x1*x2 - 2*x2*x1 }\n");
  RewriteSystem rs = complete_rewriting(p);
  bool found = false;
  for (const auto& r : rs.rules()) {
    if (r.lead == path(p.quiver, "x2*x1")) {
      found = true;
      EXPECT_EQ(r.tail, Element::of(path(p.quiver, "x1*x2"), mpq_class(1, 2)));
    }
  }
  EXPECT_TRUE(found);
  auto basis = rs.irreducible_paths();
  EXPECT_EQ(basis.size(), 6u);
  for (const auto& b : basis) {
    auto c = arrow_counts(p.quiver, b);
    EXPECT_LT(c[0], 2);
    EXPECT_LT(c[1], 3);
    EXPECT_EQ(b, path(p.quiver, b.is_trivial() ? "e(v)" : b.to_string(p.quiver)));
  }
}

TEST(Rewriting, AnticommutingLoops) {
  Presentation p = parse_presentation(kL2);
  RewriteSystem rs = complete_rewriting(p);
  EXPECT_TRUE(rs.normal_form(Element::of(path(p.quiver, "a*b*a"))).is_zero());
  Element ba = rs.normal_form(Element::of(path(p.quiver, "b*a")));
  EXPECT_EQ(ba, Element::of(path(p.quiver, "a*b"), -1));
}

TEST(Rewriting, BoundErrors) {
  ParseOptions o;
  o.degree_bound = 2;
  Presentation p = parse_presentation("field Q\nquiver { v\n u: v -> v }\nrelations { u^2 - u^2 + u*u }\n", o);
  RewriteSystem rs = complete_rewriting(p);
  EXPECT_THROW(rs.normal_form(Element::of(path(p.quiver, "u^3"))), BoundExceeded);

  Presentation free_loop = parse_presentation("field Q\nquiver { v\n u: v -> v }\nrelations { }\n");
  RewriteSystem rs2 = complete_rewriting(free_loop);
  try {
    rs2.irreducible_paths();
    FAIL();
  } catch (const BoundExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("not finite dimensional at bound"), std::string::npos);
  }
}

TEST(Algebra, TruncatedPolynomial) {
  Algebra a = build_algebra(parse_presentation(jw(3, "u^3")));
  EXPECT_EQ(a.dim(), 3u);
  EXPECT_TRUE(a.product(1, 2).empty());
  EXPECT_EQ(a.product(1, 1), SparseVec::unit(2));
  EXPECT_EQ(cartan_trace(a), 3u);
}

TEST(Algebra, A2PathAlgebra) {
  Presentation p = parse_presentation("field Q\nquiver { 1 2\n a: 1 -> 2 }\nrelations { }\n");
  Algebra a = build_algebra(p);
  EXPECT_EQ(a.dim(), 3u);
  EXPECT_EQ(a.labels(), (std::vector<std::string>{"e(1)", "e(2)", "a"}));
  EXPECT_EQ(cartan_trace(a), 2u);
}

TEST(Algebra, ExteriorTwoLoops) {
  Presentation p = parse_presentation(kL2);
  Algebra a = build_algebra(p);
  EXPECT_EQ(a.labels(), (std::vector<std::string>{"e(v)", "a", "b", "a*b"}));
  SparseVec ba = a.product(2, 1);
  EXPECT_EQ(ba.get(3), -1);
  EXPECT_FALSE(associativity_defect(a));
}

TEST(Algebra, StructureConstantIngestion) {
  Algebra z2 = ingest_structure_constants("dim 2\nfield GF(2)\nidempotents 0\n0 0 -> 0\n0 1 -> 1\n1 0 -> 1\n1 1 -> 0\n");
  EXPECT_EQ(z2.dim(), 2u);
  Algebra klein = load_structure_constants(QUIVERHH_CORPUS_DIR "/group_z2z2.alg");
  EXPECT_EQ(klein.dim(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(klein.product(i, j), klein.product(j, i));
  }
  // b0 is the unit, so b1 alone is not
  EXPECT_THROW(ingest_structure_constants("dim 2\nfield Q\nidempotents 1\n0 0 -> 0\n0 1 -> 1\n1 0 -> 1\n1 1 -> 1\n"
                                          "# products\n"),
               InputError);
  EXPECT_THROW(ingest_structure_constants("dim 2\nfield Q\nidempotents 0 1\n0 0 -> 0\n1 1 -> 1\n0 1 -> 1\n"),
               InputError);
  EXPECT_THROW(ingest_structure_constants("dim 2\nfield Q\nidempotents 0\n0 0 -> 0\n0 1 -> 1\n1 0 -> 1\n1 1 -> x\n"),
               InputError);
  EXPECT_THROW(ingest_structure_constants("dim 2\nfield Q\n0 0 -> 0\n"), InputError);
}

TEST(Algebra, NonAssociativeTableRejected) {
  // b1 b1 = b2, b1 b2 = b2, b2 b1 = 0
  const char* t = "dim 3\nfield Q\nidempotents 0\n0 0 -> 0\n0 1 -> 1\n1 0 -> 1\n0 2 -> 2\n2 0 -> 2\n1 1 -> 2\n1 2 -> 2\n";
  try {
    ingest_structure_constants(t);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("associative"), std::string::npos);
  }
}

TEST(Minimality, Examples) {
  Presentation adm = parse_presentation(jw(2, "u^2"));
  EXPECT_TRUE(minimality_check(adm, build_algebra(adm)).minimal);
  Presentation shifted = parse_presentation(jw(3, "u^3 - 1"));
  EXPECT_TRUE(minimality_check(shifted, build_algebra(shifted)).minimal);
  Presentation twice = parse_presentation("field Q\nquiver { v\n u: v -> v\n w: v -> v }\n"
                                          "relations { u^2\n u - w }\n");
  Algebra a = build_algebra(twice);
  auto m = minimality_check(twice, a);
  EXPECT_FALSE(m.minimal);
  ASSERT_TRUE(m.redundant_arrow);
  EXPECT_EQ(twice.quiver.arrow(*m.redundant_arrow).label, "w");
}
