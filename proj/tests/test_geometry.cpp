#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <daw/geometry.hpp>

using namespace daw;

namespace {

VectorV alpha(const AffineCartanData& c, int i) { return basis_V(c, i - 1); }

TildeRoot troot(const AffineCartanData& c, std::vector<Rat> base, Rat m, Rat n,
                bool half = false) {
  return TildeRoot{LatticeVector{std::move(base), Rat(0)}, m, n, half};
}

}  // namespace

TEST_CASE("form_V pairing table") {
  auto c = load_catalog("A2~1");
  CHECK(form_V(c, lambda1(c), delta1(c)) == Rat(1));
  CHECK(form_V(c, lambda1(c), delta2(c)) == Rat(0));
  CHECK(form_V(c, lambda2(c), delta2(c)) == Rat(1));
  CHECK(form_V(c, lambda1(c), lambda2(c)) == Rat(0));
  CHECK(form_V(c, lambda1(c), lambda1(c)) == Rat(0));
  CHECK(form_V(c, delta1(c), delta2(c)) == Rat(0));
  CHECK(form_V(c, delta1(c), alpha(c, 1)) == Rat(0));
  CHECK(form_V(c, lambda1(c), alpha(c, 1)) == Rat(0));
  CHECK(form_V(c, add_V(delta1(c), alpha(c, 1)),
               add_V(delta2(c), alpha(c, 1))) == Rat(2));
}

TEST_CASE("form_V is nondegenerate") {
  for (const auto& id : {"A2~1", "A2~2", "D4~2"}) {
    auto c = load_catalog(id);
    CHECK_NOTHROW(gram_V(c).inverse());
  }
}

TEST_CASE("reflect basics") {
  auto c = load_catalog("A2~1");
  Mat s1 = reflect(c, alpha(c, 1));
  CHECK(s1.apply(alpha(c, 1).coords) == scale_V(Rat(-1), alpha(c, 1)).coords);
  CHECK((s1 * s1).is_identity());
  CHECK(preserves_form(c, s1));
  CHECK_THROWS_AS(reflect(c, delta1(c)), IsotropicRootError);
}

TEST_CASE("reflect of delta1 - theta moves Lambda1 as hand-computed") {
  auto c = load_catalog("A2~1");
  VectorV a = sub_V(delta1(c), embed_finite(c, theta(c)));
  // independent computation: (a,a) = |theta|^2 = 2, (Lambda1, a) = 1, so
  // s_a(Lambda1) = Lambda1 - (delta1 - theta) = Lambda1 - delta1 + theta
  VectorV expect = add_V(sub_V(lambda1(c), delta1(c)), embed_finite(c, theta(c)));
  CHECK(reflect(c, a).apply(lambda1(c).coords) == expect.coords);
}

TEST_CASE("generator matrices") {
  for (const auto& id : {"A2~1", "A3~1", "D4~1", "A2~2", "A4~2", "D3~2"}) {
    CAPTURE(id);
    auto c = load_catalog(id);
    std::vector<std::string> gens = {"s_01", "s_02", "s_03", "tau"};
    for (int i = 1; i <= c.n; ++i) gens.push_back("s_" + std::to_string(i));
    for (const auto& g : gens) {
      CAPTURE(g);
      Mat m = generator_matrix(c, g);
      CHECK(preserves_form(c, m));
      if (g != "tau") CHECK((m * m).is_identity());
      // V_{(0,0)} = {c_L1 = c_L2 = 0} is invariant
      for (std::size_t j = 0; j + 2 < dim_V(c); ++j) {
        auto col = m.apply(basis_V(c, j).coords);
        CHECK(col[c.n + 2] == 0);
        CHECK(col[c.n + 3] == 0);
      }
    }
    // tau is the identity on V_{(0,0)}
    Mat t = generator_matrix(c, "tau");
    for (std::size_t j = 0; j + 2 < dim_V(c); ++j)
      CHECK(t.apply(basis_V(c, j).coords) == basis_V(c, j).coords);
  }
  auto c = load_catalog("A2~1");
  CHECK_THROWS_AS(generator_matrix(c, "s_3"), UnknownGeneratorError);
  CHECK_THROWS_AS(generator_matrix(c, "x"), UnknownGeneratorError);
}

TEST_CASE("tau acts as stated") {
  auto c = load_catalog("A2~1");
  Mat t = generator_matrix(c, "tau");
  CHECK(t.apply(lambda1(c).coords) == sub_V(lambda1(c), delta2(c)).coords);
  CHECK(t.apply(lambda2(c).coords) == add_V(lambda2(c), delta1(c)).coords);
  CHECK(t.apply(delta1(c).coords) == delta1(c).coords);
  auto c2 = load_catalog("A2~2");  // a_0^{-1} = 1/2
  Mat t2 = generator_matrix(c2, "tau");
  CHECK(t2.apply(lambda1(c2).coords) ==
        sub_V(lambda1(c2), scale_V(Rat(1, 2), delta2(c2))).coords);
}

TEST_CASE("translation matrices") {
  auto c = load_catalog("A2~1");
  LatticeVector a1{{Rat(1), Rat(0)}, Rat(0)};
  Mat lm = translation_matrix(c, TranslationKind::Lambda, a1);
  CHECK(lm.apply(delta1(c).coords) == delta1(c).coords);
  CHECK(lm.apply(lambda1(c).coords) ==
        sub_V(add_V(lambda1(c), alpha(c, 1)), delta1(c)).coords);
  Mat tm = translation_matrix(c, TranslationKind::Tau, a1);
  CHECK(tm.apply(lambda1(c).coords) == lambda1(c).coords);
  CHECK(preserves_form(c, lm));
  CHECK(preserves_form(c, tm));
  // homomorphism in the lattice argument
  LatticeVector a2{{Rat(0), Rat(1)}, Rat(0)};
  LatticeVector sum{{Rat(1), Rat(1)}, Rat(0)};
  CHECK(translation_matrix(c, TranslationKind::Lambda, sum) ==
        lm * translation_matrix(c, TranslationKind::Lambda, a2));
  CHECK_THROWS_AS(
      translation_matrix(c, TranslationKind::Lambda,
                         LatticeVector{{Rat(1, 2), Rat(0)}, Rat(0)}),
      NotInLatticeError);
}

TEST_CASE("in_tilde_R membership") {
  auto a21 = load_catalog("A2~1");
  CHECK(in_tilde_R(a21, troot(a21, {Rat(1), Rat(0)}, Rat(3), Rat(-1))));
  CHECK_FALSE(in_tilde_R(a21, troot(a21, {Rat(1), Rat(0)}, Rat(1, 2), Rat(0))));
  CHECK_FALSE(in_tilde_R(a21, troot(a21, {Rat(2), Rat(0)}, Rat(0), Rat(0))));
  // half components do not exist in root-lattice types
  CHECK_FALSE(
      in_tilde_R(a21, troot(a21, {Rat(1, 2), Rat(1, 2)}, Rat(1, 2), Rat(1, 2), true)));

  auto a42 = load_catalog("A4~2");
  // alpha_2 is long (r = 2): delta multiples must be even
  CHECK_FALSE(in_tilde_R(a42, troot(a42, {Rat(0), Rat(1)}, Rat(1), Rat(0))));
  CHECK(in_tilde_R(a42, troot(a42, {Rat(0), Rat(1)}, Rat(2), Rat(0))));
  // alpha_1 is short
  CHECK(in_tilde_R(a42, troot(a42, {Rat(1), Rat(0)}, Rat(1), Rat(-3))));
  // half of a long root with half-integer delta parts
  CHECK(in_tilde_R(a42, troot(a42, {Rat(0), Rat(1, 2)}, Rat(1, 2), Rat(1, 2), true)));
  CHECK_FALSE(in_tilde_R(a42, troot(a42, {Rat(0), Rat(1, 2)}, Rat(1), Rat(1, 2), true)));
  CHECK_FALSE(in_tilde_R(a42, troot(a42, {Rat(1, 2), Rat(0)}, Rat(1, 2), Rat(1, 2), true)));

  auto a22 = load_catalog("A2~2");
  CHECK(in_tilde_R(a22, troot(a22, {Rat(1, 2)}, Rat(1, 2), Rat(1, 2), true)));
  CHECK(in_tilde_R(a22, troot(a22, {Rat(1)}, Rat(4), Rat(-4))));  // r = 4
  CHECK_FALSE(in_tilde_R(a22, troot(a22, {Rat(1)}, Rat(2), Rat(0))));
}

TEST_CASE("reflection conjugation") {
  auto c = load_catalog("A3~1");
  // w s_a w^{-1} = s_{w(a)} at the matrix level
  Mat w = generator_matrix(c, "s_1") * generator_matrix(c, "s_02");
  VectorV a = add_V(alpha(c, 2), delta1(c));
  VectorV wa{w.apply(a.coords)};
  CHECK(reflect(c, wa) == w * reflect(c, a) * w.inverse());
}
