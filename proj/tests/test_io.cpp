#include <catch2/catch_amalgamated.hpp>

#include "qsh/bases.hpp"
#include "qsh/io.hpp"
#include "qsh/repcheck.hpp"

using namespace qsh;

TEST_CASE("word parsing") {
  CHECK(parse_word("(1,2,2)") == Word{1, 2, 2});
  CHECK(parse_word("( 2 , 1 )") == Word{2, 1});
  CHECK(parse_word("()") == Word{});
  CHECK_THROWS_AS(parse_word("1,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("(1,x)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("(1,)"), std::invalid_argument);
  CHECK_THROWS_WITH(parse_word("(1,x)"),
                    Catch::Matchers::ContainsSubstring("'x'"));
}

TEST_CASE("root parsing") {
  RootDatum d(2);
  CHECK(parse_root(d, "alpha(1,2)") == make_alpha(d, 1, 2));
  CHECK(parse_root(d, "beta(1,2)") == make_beta(d, 1, 2));
  CHECK_THROWS_AS(parse_root(d, "gamma(1,2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_root(d, "alpha(1)"), std::invalid_argument);
}

TEST_CASE("weight parsing") {
  RootDatum d(2);
  CHECK(parse_weight(d, "1,2") == Weight({1, 2}));
  CHECK(parse_weight(d, "[0,3]") == Weight({0, 3}));
  CHECK_THROWS_AS(parse_weight(d, "1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight(d, "1,-2"), std::invalid_argument);
}

TEST_CASE("Laurent text round-trips") {
  for (const char* s :
       {"0", "1", "-1", "q^2", "-q + q^-1", "q^2 - 1 + q^-2",
        "2*q^5 - 4*q^-2", "3"}) {
    const LaurentPoly p = parse_laurent(s);
    CHECK(p.to_string() == s);
  }
  CHECK_THROWS_AS(parse_laurent("q^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("q^x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("w"), std::invalid_argument);
}

TEST_CASE("scalar text round-trips") {
  RootDatum d(2);
  FormCache cache(d);
  const RationalFunction norm = pbw_norm(cache, Word{2, 2});
  CHECK(parse_scalar(norm.to_string()) == norm);
  CHECK(parse_scalar("(q^-1)/(q - q^-1)") == norm);
  CHECK(parse_scalar("-q + q^-1") ==
        RationalFunction(parse_laurent("-q + q^-1")));
}

TEST_CASE("element JSON round-trips") {
  RootDatum d(2);
  const Element x = shuffle_words(d, Word{2}, Word{1});
  const json j = element_to_json(d, x);
  CHECK(j.at("weight") == json::array({1, 1}));
  CHECK(j.at("terms").size() == 2);
  // decreasing word order
  CHECK(word_from_json(j.at("terms")[0].at("word")) == Word{2, 1});
  CHECK(element_from_json(j) == x);
  const Element mixed = Element(Word{1}) + Element(Word{2});
  CHECK_THROWS_AS(element_to_json(d, mixed), std::domain_error);
}

TEST_CASE("module JSON round-trips") {
  RootDatum d(2);
  const GradedSuperModule m = cuspidal_module(d, make_beta(d, 1, 2));
  const json j = module_to_json(d, m);
  int n = 0;
  const GradedSuperModule back = module_from_json(j, &n);
  CHECK(n == 2);
  CHECK(back.nu == m.nu);
  REQUIRE(back.basis.size() == m.basis.size());
  for (size_t k = 0; k < m.basis.size(); ++k) {
    CHECK(back.basis[k].deg == m.basis[k].deg);
    CHECK(back.basis[k].parity == m.basis[k].parity);
    CHECK(back.basis[k].block == m.basis[k].block);
  }
  CHECK(back.y == m.y);
  CHECK(back.tau == m.tau);
  CHECK(verify_relations(back, QuiverData(d)).ok());
}

TEST_CASE("rational matrix entries") {
  CHECK(mpq_from_string("3/4") == mpq_class(3, 4));
  CHECK(mpq_to_string(mpq_class(-5, 2)) == "-5/2");
  CHECK_THROWS_AS(mpq_from_string("x"), std::invalid_argument);
}
