#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "refl/group.hpp"

#include <random>
#include <set>

using namespace refl;

TEST_CASE("parse_word tokenizes and canonicalizes") {
  GroupParams p(1, 3, 3);
  GenWord w = parse_word("t1 t0 s3", p);
  REQUIRE(w.tokens.size() == 3);
  CHECK(w.tokens[0] == tok_t(1));
  CHECK(w.tokens[2] == tok_s(3));

  GenWord w2 = parse_word("s2 s3", p); // s2 := t0
  CHECK(w2.tokens[0] == tok_t(0));
  CHECK(w2.str() == "t0 s3");

  CHECK_THROWS_AS(parse_word("z t1", p), bad_token);
  CHECK_THROWS_AS(parse_word("t5", GroupParams(1, 3, 3)), bad_token);
  CHECK_THROWS_AS(parse_word("q3", p), bad_token);
  CHECK(parse_word("t1.t0.s3", p).tokens.size() == 3); // '.' separator
}

TEST_CASE("generator matrices match the presentation") {
  GroupParams p(1, 3, 3);
  Element t1 = generator_element(tok_t(1), p);
  // row 1 entry zeta^{-1} in column 2, row 2 entry zeta in column 1
  CHECK(t1.col(0) == 1);
  CHECK(t1.col(1) == 0);
  CHECK(t1.exp(0) == 2);
  CHECK(t1.exp(1) == 1);

  Element s3 = generator_element(tok_s(3), p);
  CHECK(s3.col(1) == 2);
  CHECK(s3.col(2) == 1);
  CHECK(s3.exp(1) == 0);

  Element t0 = generator_element(tok_t(0), p);
  CHECK(t0.exp(0) == 0);
  CHECK(t0.exp(1) == 0);

  GroupParams q(3, 1, 3);
  Element z = generator_element(tok_z(), q);
  CHECK(z.is_diagonal());
  CHECK(z.exp(0) == 1); // zeta_3 = zeta_de^e with de = 3, e = 1
}

TEST_CASE("multiply, inverse, involutions") {
  GroupParams p(1, 3, 3);
  Element t0 = generator_element(tok_t(0), p);
  Element t1 = generator_element(tok_t(1), p);
  Element s3 = generator_element(tok_s(3), p);
  CHECK(multiply(t0, t0).is_identity());
  CHECK(multiply(s3, s3).is_identity());
  // direct 3x3 product: t1*t0 = diag(zeta^{-1}, zeta, 1)
  Element d = multiply(t1, t0);
  CHECK(d.is_diagonal());
  CHECK(d.exp(0) == 2);
  CHECK(d.exp(1) == 1);

  GroupParams q(3, 1, 3);
  Element z = generator_element(tok_z(), q);
  CHECK(inverse(z) == multiply(z, z)); // z has order d = 3
  CHECK(multiply(z, inverse(z)).is_identity());

  CHECK_THROWS_AS(multiply(t0, z), param_mismatch);
}

TEST_CASE("evaluate reproduces the worked matrices") {
  GroupParams p(1, 3, 4);
  Element w = evaluate(parse_word("t0 s3 t1 t0 s4 s3 t0", p));
  // rows (0,0,0,1),(0,z3^2,0,0),(0,0,z3,0),(1,0,0,0)
  CHECK(w.col(0) == 3);
  CHECK(w.exp(0) == 0);
  CHECK(w.col(1) == 1);
  CHECK(w.exp(1) == 2);
  CHECK(w.col(2) == 2);
  CHECK(w.exp(2) == 1);
  CHECK(w.col(3) == 0);
  CHECK(w.exp(3) == 0);

  GroupParams q(3, 1, 3);
  Element v = evaluate(parse_word("z s2 z z s2 s3 s2 z z", q));
  // rows (0,zeta3,0),(0,0,zeta3^2),(zeta3^2,0,0)
  CHECK(v.col(0) == 1);
  CHECK(v.exp(0) == 1);
  CHECK(v.col(1) == 2);
  CHECK(v.exp(1) == 2);
  CHECK(v.col(2) == 0);
  CHECK(v.exp(2) == 2);
}

TEST_CASE("group laws on random triples") {
  GroupParams p(3, 3, 4);
  auto elems = all_elements(GroupParams(1, 3, 3));
  std::mt19937 rng(12345);
  GroupParams big(3, 3, 4);
  std::vector<Element> sample;
  {
    auto gens = generator_tokens(big);
    std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
    for (int s = 0; s < 40; ++s) {
      Element x = Element::identity(big);
      for (int i = 0; i < 12; ++i)
        x = multiply(x, generator_element(gens[pick(rng)], big));
      sample.push_back(x);
    }
  }
  std::uniform_int_distribution<size_t> pick(0, sample.size() - 1);
  for (int it = 0; it < 200; ++it) {
    const Element &x = sample[pick(rng)];
    const Element &y = sample[pick(rng)];
    const Element &z = sample[pick(rng)];
    CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    CHECK(multiply(x, inverse(x)).is_identity());
    CHECK(multiply(inverse(x), x).is_identity());
    CHECK(multiply(x, Element::identity(big)) == x);
    // transpose is an involutive anti-automorphism
    CHECK(transpose(transpose(x)) == x);
    CHECK(transpose(multiply(x, y)) == multiply(transpose(y), transpose(x)));
  }
}

TEST_CASE("full relation catalogs hold") {
  for (GroupParams p : {GroupParams(1, 3, 3), GroupParams(1, 4, 3),
                        GroupParams(1, 2, 4), GroupParams(3, 3, 3),
                        GroupParams(2, 2, 3), GroupParams(3, 1, 3),
                        GroupParams(2, 1, 4)}) {
    for (const auto &[lhs, rhs] : relation_catalog(p)) {
      CAPTURE(lhs.str());
      CHECK(evaluate(lhs) == evaluate(rhs));
    }
  }
}

TEST_CASE("enumerate_group counts and uniqueness") {
  CHECK(GroupParams(1, 3, 3).order() == 54);
  CHECK(GroupParams(2, 1, 2).order() == 8);
  CHECK(GroupParams(1, 4, 3).order() == 96);
  for (GroupParams p : {GroupParams(1, 3, 3), GroupParams(2, 1, 2),
                        GroupParams(1, 4, 3), GroupParams(3, 1, 2),
                        GroupParams(2, 2, 3), GroupParams(3, 3, 2)}) {
    auto v = all_elements(p);
    CHECK(v.size() == p.order());
    std::set<Element> s(v.begin(), v.end());
    CHECK(s.size() == v.size());
  }
  CHECK_THROWS_AS(all_elements(GroupParams(10, 10, 8)), group_too_large);
}

TEST_CASE("json round trip") {
  GroupParams p(1, 3, 4);
  Element w = evaluate(parse_word("t0 s3 t1 t0 s4 s3 t0", p));
  Element back = element_from_json(element_to_json(w));
  CHECK(back == w);
  CHECK_THROWS(element_from_json("{\"d\":1,\"e\":3,\"n\":3,\"col\":[1,1,2],\"exp\":[0,0,0]}"));
}
