#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "refl/ncgb.hpp"

#include <random>

using namespace refl;

namespace {
template <class F>
NcPoly<F> poly(const F &field, const MonomialOrder &order,
               std::vector<std::pair<std::vector<int>, long>> terms) {
  NpRelation r;
  for (auto &[w, c] : terms)
    r.terms.emplace_back(w, mpq_class(c));
  return to_poly(field, order, r);
}
} // namespace

TEST_CASE("single quadratic relation: group algebra of Z/2") {
  FieldQ F;
  MonomialOrder ord = MonomialOrder::natural(1);
  NcGroebner<FieldQ> gb(F, 1, ord);
  gb.add_relation(poly(F, ord, {{{0, 0}, 1}, {{}, -1}})); // x^2 - 1
  gb.run();
  CHECK(gb.complete());
  CHECK(gb.basis().size() == 1);
  auto qb = gb.quotient_basis();
  REQUIRE(qb.size() == 2);
  CHECK(qb[0] == Word{});
  CHECK(qb[1] == Word{0});
  // reduce(x^3) = x
  auto r = gb.reduce(poly(F, ord, {{{0, 0, 0}, 1}}));
  REQUIRE(r.terms.size() == 1);
  CHECK(r.lm() == Word{0});
  // reduce of a relation is zero, reduction idempotent and linear
  CHECK(gb.reduce(poly(F, ord, {{{0, 0}, 1}, {{}, -1}})).is_zero());
  auto p = poly(F, ord, {{{0, 0, 0, 0}, 3}, {{0}, 2}});
  auto r1 = gb.reduce(p);
  CHECK(gb.reduce(r1).terms == r1.terms);
}

TEST_CASE("free algebra stays infinite") {
  FieldQ F;
  MonomialOrder ord = MonomialOrder::natural(2);
  NcGroebner<FieldQ> gb(F, 2, ord);
  gb.add_relation(poly(F, ord, {{{0, 0}, 1}})); // x^2 = 0 only
  gb.run();
  CHECK(gb.complete());
  CHECK_THROWS_AS(gb.quotient_basis(100), infinite_dimensional);
}

TEST_CASE("dihedral group algebra via braid + involution relations") {
  // t0, t1, t2 with t_i t_{i-1} all equal and t_i^2 = 1: |I2(3)| = 6
  FieldQ F;
  MonomialOrder ord = MonomialOrder::natural(3);
  NcGroebner<FieldQ> gb(F, 3, ord);
  gb.add_relation(poly(F, ord, {{{1, 0}, 1}, {{2, 1}, -1}}));
  gb.add_relation(poly(F, ord, {{{1, 0}, 1}, {{0, 2}, -1}}));
  for (int i = 0; i < 3; ++i)
    gb.add_relation(poly(F, ord, {{{i, i}, 1}, {{}, -1}}));
  gb.run();
  CHECK(gb.complete());
  CHECK(gb.quotient_basis().size() == 6);
}

TEST_CASE("prime field arithmetic") {
  FieldP F{103};
  CHECK(F.mul(F.inv(5), 5) == 1);
  CHECK(F.from_rational(mpq_class(-1)) == 102);
  CHECK(F.from_rational(mpq_class(1, 2)) == F.inv(2));
  MonomialOrder ord = MonomialOrder::natural(1);
  NcGroebner<FieldP> gb(F, 1, ord);
  NpRelation r;
  r.terms.emplace_back(std::vector<int>{0, 0}, mpq_class(1));
  r.terms.emplace_back(std::vector<int>{}, mpq_class(-1, 4));
  gb.add_relation(to_poly(F, ord, r)); // x^2 = 1/4 mod 103
  gb.run();
  CHECK(gb.quotient_basis().size() == 2);
}

TEST_CASE("degree cap reports incompleteness") {
  FieldQ F;
  MonomialOrder ord = MonomialOrder::natural(2);
  NcGroebner<FieldQ> gb(F, 2, ord, 3);
  // xy - yx needs overlaps beyond tiny degree to complete in general;
  // use a relation pair known to spawn higher obstructions
  gb.add_relation(poly(F, ord, {{{0, 1}, 1}, {{1, 0, 1, 0}, -1}}));
  gb.run();
  // either it resolved below the cap or the cap flag is set; both legal,
  // but with this relation the cap must trip
  CHECK(gb.capped());
  CHECK_FALSE(gb.complete());
}

TEST_CASE("zero relation rejected") {
  FieldQ F;
  MonomialOrder ord = MonomialOrder::natural(1);
  NcGroebner<FieldQ> gb(F, 1, ord);
  CHECK_THROWS_AS(
      gb.add_relation(poly(F, ord, {{{0}, 1}, {{0}, -1}})), ncgb_error);
}

TEST_CASE("confluence: one normal form under shuffled insertion") {
  std::mt19937 rng(77);
  FieldQ F;
  MonomialOrder ord = MonomialOrder::natural(3);
  std::vector<std::pair<std::vector<int>, long>> rel1 = {{{1, 0}, 1},
                                                         {{2, 1}, -1}};
  std::vector<std::pair<std::vector<int>, long>> rel2 = {{{1, 0}, 1},
                                                         {{0, 2}, -1}};
  std::vector<std::vector<std::pair<std::vector<int>, long>>> quads;
  for (int i = 0; i < 3; ++i)
    quads.push_back({{{i, i}, 1}, {{}, -1}});
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<int> perm = {0, 1, 2, 3, 4};
    std::shuffle(perm.begin(), perm.end(), rng);
    NcGroebner<FieldQ> gb(F, 3, ord);
    for (int which : perm) {
      if (which == 0)
        gb.add_relation(poly(F, ord, rel1));
      else if (which == 1)
        gb.add_relation(poly(F, ord, rel2));
      else
        gb.add_relation(poly(F, ord, quads[which - 2]));
    }
    gb.run();
    auto p = poly(F, ord, {{{2, 1, 0, 2, 1}, 7}, {{0, 1, 2}, -3}, {{1}, 1}});
    static std::vector<std::pair<Word, mpq_class>> first_nf;
    auto nf = gb.reduce(p);
    if (trial == 0)
      first_nf = nf.terms;
    else
      CHECK(nf.terms == first_nf);
  }
}

TEST_CASE("relation JSON round trip") {
  NpRelation r1;
  r1.terms.emplace_back(std::vector<int>{6, 1}, mpq_class(1));
  r1.terms.emplace_back(std::vector<int>{}, mpq_class(-1, 3));
  NpRelation r2;
  r2.terms.emplace_back(std::vector<int>{0, 0}, mpq_class(5));
  std::string text = relations_to_json({r1, r2});
  int ngens = 0;
  auto back = relations_from_json(text, &ngens);
  REQUIRE(back.size() == 2);
  CHECK(ngens == 7);
  CHECK(back[0].terms[0].first == std::vector<int>{6, 1});
  CHECK(back[0].terms[1].second == mpq_class(-1, 3));
  CHECK(back[1].terms[0].second == 5);
  CHECK_THROWS(relations_from_json("[{\"terms\":[{\"word\":[0],\"coeff\":1}]}]"));
}

TEST_CASE("mult-matrix style reductions") {
  // x^2 = 1: right multiplication by x on {1, x} is the swap matrix
  FieldQ F;
  MonomialOrder ord = MonomialOrder::natural(1);
  NcGroebner<FieldQ> gb(F, 1, ord);
  gb.add_relation(poly(F, ord, {{{0, 0}, 1}, {{}, -1}}));
  gb.run();
  auto qb = gb.quotient_basis();
  std::vector<std::vector<mpq_class>> mat(qb.size(),
                                          std::vector<mpq_class>(qb.size(), 0));
  for (size_t i = 0; i < qb.size(); ++i) {
    Word w = qb[i];
    w.push_back(0);
    NcPoly<FieldQ> p;
    p.terms.emplace_back(std::move(w), mpq_class(1));
    auto r = gb.reduce(std::move(p));
    for (auto &[mono, c] : r.terms)
      for (size_t j = 0; j < qb.size(); ++j)
        if (qb[j] == mono)
          mat[i][j] = c;
  }
  CHECK(mat[0][1] == 1);
  CHECK(mat[1][0] == 1);
  CHECK(mat[0][0] == 0);
  CHECK(mat[1][1] == 0);
}
