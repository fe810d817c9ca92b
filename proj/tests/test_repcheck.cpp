#include <catch2/catch_amalgamated.hpp>

#include "qsh/bases.hpp"
#include "qsh/repcheck.hpp"
#include "qsh/words.hpp"

using namespace qsh;

namespace {
const LaurentPoly kTwoOdd =
    LaurentPoly::monomial(-1, 1) + LaurentPoly::q_power(-1);
}

TEST_CASE("Q polynomials") {
  RootDatum d(3);
  QuiverData quiver(d);
  CHECK(quiver.d(1, 2) == 1);
  CHECK(quiver.d(2, 1) == 0);
  CHECK(quiver.d(1, 3) == 0);
  CHECK(quiver.d(3, 1) == 0);
  CHECK(quiver.u_exponent(2) == 1);  // s_2 = 2, so u^{2/s} = u
  CHECK(quiver.u_exponent(3) == 2);  // s_3 = 1
  // Q_{2,3} = -(u - v^2), Q_{3,2} = u^2 - v in text
  CHECK(q_polynomial_text(quiver, 2, 3) == "-(u - v^2)");
  CHECK(q_polynomial_text(quiver, 3, 2) == "(u^2 - v)");
  CHECK(q_polynomial_text(quiver, 2, 2) == "0");
}

TEST_CASE("cuspidal modules for alpha roots") {
  RootDatum d(2);
  const GradedSuperModule m = cuspidal_module(d, make_alpha(d, 1, 2));
  CHECK(m.dim() == 1);
  CHECK(character(m) == Element(Word{1, 2}));
  CHECK(verify_relations(m, QuiverData(d)).ok());
  CHECK(highest_weight(character(m)) == Word{1, 2});
}

TEST_CASE("cuspidal modules for beta roots") {
  RootDatum d(2);
  const GradedSuperModule m = cuspidal_module(d, make_beta(d, 1, 2));
  REQUIRE(m.dim() == 2);
  CHECK(m.basis[0].deg == 1);
  CHECK(m.basis[0].parity == 1);
  CHECK(m.basis[1].deg == -1);
  CHECK(m.basis[1].parity == 0);
  CHECK(m.basis[0].block == Word{1, 2, 2});
  const Element ch = character(m);
  CHECK(ch == RationalFunction(kTwoOdd) * Element(Word{1, 2, 2}));
  CHECK(verify_relations(m, QuiverData(d)).ok());

  RootDatum d3(3);
  const GradedSuperModule m3 = cuspidal_module(d3, make_beta(d3, 1, 2));
  REQUIRE(m3.dim() == 2);
  CHECK(m3.basis[0].block == Word{1, 2, 3, 3, 2});
  // tau_3 v_1 = v_-1 at position n - i + 1 = 3
  CHECK(m3.tau[2][1][0] == 1);
  CHECK(verify_relations(m3, QuiverData(d3)).ok());
}

TEST_CASE("every cuspidal module satisfies the relations, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    RootDatum d(n);
    QuiverData quiver(d);
    for (const auto& root : reduced_positive_roots(d)) {
      const GradedSuperModule m = cuspidal_module(d, root);
      const VerifyReport rep = verify_relations(m, quiver);
      if (!rep.ok()) FAIL(root.to_string() + ": " + rep.to_string());
      CHECK(character(m) == dual_pbw(d, iota_plus(d, root)));
      CHECK(highest_weight(character(m)) == iota_plus(d, root));
    }
  }
}

TEST_CASE("the zero module passes") {
  RootDatum d(2);
  GradedSuperModule z;
  z.nu = Weight({1, 2});
  z.y.assign(3, Mat{});
  z.tau.assign(2, Mat{});
  CHECK(verify_relations(z, QuiverData(d)).ok());
}

TEST_CASE("a perturbed module fails with a localized report") {
  RootDatum d(2);
  GradedSuperModule m = cuspidal_module(d, make_beta(d, 1, 2));
  const int pos = d.rank();  // n - i + 1 with i = 1
  m.tau[pos - 1][1][0] = 2;
  const VerifyReport rep = verify_relations(m, QuiverData(d));
  CHECK_FALSE(rep.ok());
  bool localized = false;
  for (auto& v : rep.violations)
    if (v.find("relation") != std::string::npos) localized = true;
  CHECK(localized);
}

TEST_CASE("homogeneity violations are caught") {
  RootDatum d(2);
  GradedSuperModule m = cuspidal_module(d, make_beta(d, 1, 2));
  m.basis[0].deg = 5;
  CHECK_FALSE(verify_relations(m, QuiverData(d)).ok());
}

TEST_CASE("induced characters") {
  RootDatum d(2);
  const GradedSuperModule a2 = cuspidal_module(d, make_alpha(d, 2, 2));
  // ch(L ° L) = ch(L) <> ch(L) = (2)<>(2) = (1 - q^-2)(2,2)
  const Element ch = induced_character(d, character(a2), character(a2));
  CHECK(ch.terms().size() == 1);
  CHECK(ch.coeff(Word{2, 2}) ==
        RationalFunction(1) -
            RationalFunction(LaurentPoly::q_power(-2)));
  // inducing with the trivial weight-0 module changes nothing
  const Element triv(Word{});
  CHECK(induced_character(d, character(a2), triv) == character(a2));
}

TEST_CASE("standard characters") {
  RootDatum d(2);
  // Lyndon words give the cuspidal characters back
  for (const auto& root : reduced_positive_roots(d))
    CHECK(standard_character(d, iota_plus(d, root)) ==
          character(cuspidal_module(d, root)));
  // (2,2): -q (2)<>(2) = -(q - q^-1)(2,2)
  const Element ch = standard_character(d, Word{2, 2});
  CHECK(ch == RationalFunction(kTwoOdd) * Element(Word{2, 2}));
  CHECK(ch == dual_pbw(d, Word{2, 2}));
  // highest weight and top coefficient
  for (const Word& w : dominant_words(d, Weight({1, 2}))) {
    const Element s = standard_character(d, w);
    CHECK(highest_weight(s) == w);
    CHECK(max_word(s).second == RationalFunction(kappa(d, w)));
    CHECK(s == dual_pbw(d, w));
  }
}

TEST_CASE("standard characters are independent per weight") {
  RootDatum d(2);
  const Weight nu({2, 2});
  const auto doms = dominant_words(d, nu);
  std::set<Word> tops;
  for (const Word& w : doms) tops.insert(highest_weight(standard_character(d, w)));
  CHECK(tops.size() == doms.size());
}

TEST_CASE("powers of cuspidal characters match the dual canonical basis") {
  for (int n = 2; n <= 3; ++n) {
    RootDatum d(n);
    for (const auto& root : reduced_positive_roots(d)) {
      const Word w = iota_plus(d, root);
      for (int m = 1; m <= 3; ++m) {
        if (m * w.length() > 6) continue;
        const Word wm = w.power(m);
        Element ch = character(cuspidal_module(d, root));
        for (int k = 1; k < m; ++k)
          ch = induced_character(d, ch,
                                 character(cuspidal_module(d, root)));
        const auto [xi, s] = xi_and_s(d, wm);
        const auto dc = dual_canonical(d, weight_of(d, wm));
        const Element want =
            RationalFunction(
                LaurentPoly::monomial((xi % 2 != 0) ? -1 : 1, -s)) *
            dc.basis.at(wm);
        CHECK(ch == want);
      }
    }
  }
}
