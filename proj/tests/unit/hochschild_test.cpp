#include <gtest/gtest.h>

#include "quiverhh/errors.hpp"
#include "quiverhh/hochschild.hpp"

using namespace quiverhh;

namespace {

struct Built {
  Presentation p;
  std::unique_ptr<RewriteSystem> rs;
  std::unique_ptr<Algebra> a;
  std::unique_ptr<HH1> h;
  HomotopyAnalysis hom;
};

Built build(const std::string& text) {
  Built b;
  b.p = parse_presentation(text);
  b.rs = std::make_unique<RewriteSystem>(complete_rewriting(b.p));
  b.a = std::make_unique<Algebra>(build_algebra(b.p, *b.rs));
  b.h = std::make_unique<HH1>(*b.a);
  b.hom = analyze_homotopy(b.p, *b.rs, *b.a);
  return b;
}

std::string jw(unsigned p, const std::string& rel) {
  return "field GF(" + std::to_string(p) + ")\nquiver { v; u: v -> v }\nrelations { " + rel + " }\n";
}

// x^i d/dx on the basis 1, x, ..., x^{p-1}
Endomorphism witt(const Field& k, std::size_t p, std::size_t i) {
  Endomorphism f(p);
  for (std::size_t j = 1; j < p; ++j) {
    if (i + j - 1 < p) {
      SparseVec v;
      v.push_back(i + j - 1, k.make(static_cast<long>(j)));
      f.column(j) = v;
    }
  }
  return f;
}

std::vector<Scalar> unit_coords(std::size_t n, std::size_t i) {
  std::vector<Scalar> v(n, 0);
  v[i] = 1;
  return v;
}

}  // namespace

TEST(Derivations, DualNumbersCharZero) {
  Built b = build("field Q\nquiver { v; u: v -> v }\nrelations { u^2 }\n");
  auto der = derivation_space(*b.a, DerivationFlavor::der);
  ASSERT_EQ(der.basis.size(), 1u);
  EXPECT_EQ(der.basis[0].column(1), SparseVec::unit(1));
  EXPECT_TRUE(der.basis[0].column(0).empty());
  EXPECT_TRUE(derivation_space(*b.a, DerivationFlavor::inn).basis.empty());
}

TEST(Derivations, TruncatedPolynomialCharP) {
  for (unsigned p : {2u, 3u, 5u}) {
    Built b = build(jw(p, "u^" + std::to_string(p)));
    auto der = derivation_space(*b.a, DerivationFlavor::der);
    EXPECT_EQ(der.basis.size(), p);
    for (const auto& f : der.basis) EXPECT_TRUE(satisfies_leibniz(*b.a, f));
    for (std::size_t i = 0; i < p; ++i) EXPECT_TRUE(satisfies_leibniz(*b.a, witt(b.p.field, p, i)));
  }
}

TEST(Derivations, CommutativeHasNoInner) {
  Built b = build("field Q\nquiver { v\n x: v -> v\n y: v -> v }\nrelations { x^2\n y^2\n x*y - y*x }\n");
  EXPECT_TRUE(derivation_space(*b.a, DerivationFlavor::inn).basis.empty());
  EXPECT_EQ(b.h->inner_dim(), 0u);
}

TEST(HH1, A2IsZero) {
  Built b = build("field Q\nquiver { 1 2\n a: 1 -> 2 }\nrelations { }\n");
  EXPECT_EQ(b.h->dim(), 0u);
  EXPECT_EQ(b.h->der0_dim(), 1u);
  EXPECT_EQ(b.h->inner_dim(), 1u);
  auto n = nilpotency_report(*b.h);
  EXPECT_TRUE(n.lie_nilpotent);
  EXPECT_EQ(n.nilpotency_class, 0u);
}

TEST(HH1, WittBrackets) {
  for (unsigned p : {2u, 3u, 5u}) {
    Built b = build(jw(p, "u^" + std::to_string(p)));
    const Field& k = b.p.field;
    ASSERT_EQ(b.h->dim(), p);
    std::vector<std::vector<Scalar>> w;
    for (std::size_t i = 0; i < p; ++i) w.push_back(b.h->coordinates(witt(k, p, i)));
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = 0; j < p; ++j) {
        std::vector<Scalar> expect(p, 0);
        if (i + j >= 1 && i + j - 1 < p) {
          Scalar c = k.make(static_cast<long>(j) - static_cast<long>(i));
          expect = b.h->coordinates(scaled(k, witt(k, p, i + j - 1), c));
        }
        EXPECT_EQ(b.h->bracket(w[i], w[j]), expect) << "p=" << p << " i=" << i << " j=" << j;
      }
    }
    auto px = b.h->ppower(w[1]);
    EXPECT_EQ(px, w[1]);
    EXPECT_EQ(b.h->ppower(w[0]), std::vector<Scalar>(p, 0));
    EXPECT_TRUE(is_toral(*b.h, w[1]));
    EXPECT_FALSE(is_toral(*b.h, w[0]));
  }
}

TEST(HH1, JacobsonFormula) {
  Built b = build(jw(3, "u^3"));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_TRUE(jacobson_formula_holds(*b.h, unit_coords(3, i), unit_coords(3, j)));
    }
  }
}

TEST(HH1, LiftAndCoordinatesRoundTrip) {
  Built b = build("field Q\nquiver { 1 2\n a: 1 -> 2\n b: 1 -> 2 }\nrelations { }\n");
  EXPECT_EQ(b.h->dim(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    Endomorphism f = b.h->lift(unit_coords(3, i));
    EXPECT_TRUE(b.h->in_der0(f));
    EXPECT_EQ(b.h->coordinates(f), unit_coords(3, i));
  }
  Endomorphism not_der(b.a->dim());
  not_der.column(0) = SparseVec::unit(2);
  EXPECT_THROW(b.h->coordinates(not_der), InvariantViolation);
}

TEST(Torus, Examples) {
  Built tree = build("field Q\nquiver { 1 2 3\n a: 1 -> 2\n b: 2 -> 3 }\nrelations { a*b }\n");
  EXPECT_EQ(diagonal_torus(tree.p, *tree.rs, *tree.h).dim(), 0u);

  Built jwx = build(jw(3, "u^3"));
  Torus t = diagonal_torus(jwx.p, *jwx.rs, *jwx.h);
  ASSERT_EQ(t.dim(), 1u);
  EXPECT_EQ(jwx.h->rank_modulo_inner({t.derivations[0], witt(jwx.p.field, 3, 1)}), 1u);

  Built mono = build("field Q\nquiver { v\n x: v -> v\n y: v -> v }\nrelations { x^2\n y^2\n x*y\n y*x }\n");
  EXPECT_EQ(diagonal_torus(mono.p, *mono.rs, *mono.h).dim(), 2u);
}

TEST(Theta, ZeroCharacter) {
  Built b = build(jw(3, "u^3"));
  Character zero = Character::from_chord_values(b.p.quiver, b.p.field, {0});
  auto w = spanning_walk_system(b.p.quiver);
  EXPECT_EQ(theta(*b.h, b.p.quiver, w, b.hom.complex, zero), std::vector<Scalar>(3, 0));
}

TEST(Theta, LoopCharacterGivesEulerField) {
  Built b = build(jw(5, "u^5"));
  Character f = Character::from_chord_values(b.p.quiver, b.p.field, {1});
  auto w = spanning_walk_system(b.p.quiver);
  EXPECT_EQ(theta(*b.h, b.p.quiver, w, b.hom.complex, f), b.h->coordinates(witt(b.p.field, 5, 1)));
  EXPECT_EQ(theta_image_dimension(*b.h, b.p.quiver, w, b.hom.complex), 1u);
}

TEST(Theta, ShiftedPresentation) {
  Built b = build(jw(3, "u^3 - 1"));
  auto w = spanning_walk_system(b.p.quiver);
  EXPECT_EQ(theta_image_dimension(*b.h, b.p.quiver, w, b.hom.complex), 1u);
  // over Q the only character of Z/3 is zero
  Built q = build("field Q\nquiver { v; u: v -> v }\nrelations { u^3 - 1 }\n");
  EXPECT_TRUE(character_space_basis(q.p.quiver, q.p.field, q.hom.complex).empty());
  Character bad = Character::from_chord_values(q.p.quiver, q.p.field, {1});
  EXPECT_FALSE(is_character(q.p.quiver, q.p.field, q.hom.complex, bad));
  EXPECT_THROW(theta_derivation(*q.a, q.p.quiver, spanning_walk_system(q.p.quiver), q.hom.complex, bad), InputError);
}

TEST(Theta, Kronecker) {
  Built b = build("field Q\nquiver { 1 2\n a: 1 -> 2\n b: 1 -> 2 }\nrelations { }\n");
  auto w = spanning_walk_system(b.p.quiver);
  Character f = Character::from_chord_values(b.p.quiver, b.p.field, {1});
  Endomorphism d = theta_derivation(*b.a, b.p.quiver, w, b.hom.complex, f);
  // basis e1, e2, a, b
  EXPECT_TRUE(d.column(2).empty());
  EXPECT_EQ(d.column(3), SparseVec::unit(3));
  EXPECT_TRUE(d.column(0).empty());
  EXPECT_TRUE(d.column(1).empty());
  EXPECT_EQ(theta_image_dimension(*b.h, b.p.quiver, w, b.hom.complex), 1u);
}

TEST(Theta, TwoLoopMonomialAndA2) {
  Built mono = build("field Q\nquiver { v\n x: v -> v\n y: v -> v }\nrelations { x^2\n y^2\n x*y\n y*x }\n");
  EXPECT_EQ(theta_image_dimension(*mono.h, mono.p.quiver, spanning_walk_system(mono.p.quiver), mono.hom.complex), 2u);
  Built a2 = build("field Q\nquiver { 1 2\n a: 1 -> 2 }\nrelations { }\n");
  EXPECT_EQ(theta_image_dimension(*a2.h, a2.p.quiver, spanning_walk_system(a2.p.quiver), a2.hom.complex), 0u);
}

TEST(Toral, Search) {
  Built b = build(jw(3, "u^3"));
  auto t = find_toral(*b.h);
  ASSERT_TRUE(t);
  EXPECT_TRUE(is_toral(*b.h, *t));
  EXPECT_THROW(find_toral(*b.h, 10), BoundExceeded);

  Built zero = build("field GF(3)\nquiver { 1 2\n a: 1 -> 2 }\nrelations { }\n");
  EXPECT_FALSE(find_toral(*zero.h));
  Built q = build("field Q\nquiver { v; u: v -> v }\nrelations { u^2 }\n");
  EXPECT_THROW(find_toral(*q.h), InputError);
}

TEST(Nilpotency, Examples) {
  Built a3 = build("field Q\nquiver { 1 2 3\n a: 1 -> 2\n b: 2 -> 3 }\nrelations { a*b }\n");
  EXPECT_TRUE(nilpotency_report(*a3.h).lie_nilpotent);
  for (unsigned p : {3u, 5u}) {
    Built b = build(jw(p, "u^" + std::to_string(p)));
    auto r = nilpotency_report(*b.h);
    EXPECT_FALSE(r.lie_nilpotent);
    EXPECT_FALSE(r.nilpotency_class);
    EXPECT_EQ(r.lower_central_series.front(), p);
    EXPECT_TRUE(r.toral_search_complete);
    EXPECT_FALSE(r.p_nilpotent_witnessed);
  }
}

TEST(Endomorphism, Algebra) {
  Field k = Field::prime(5);
  Endomorphism d = Endomorphism::diagonal({k.make(1), k.make(2), k.make(0)});
  EXPECT_TRUE(d.is_diagonal());
  EXPECT_EQ(power(k, d, 5), d);
  EXPECT_TRUE(bracket(k, d, d).is_zero());
  EXPECT_EQ(Endomorphism::from_vector(d.vectorize(), 3), d);
}
