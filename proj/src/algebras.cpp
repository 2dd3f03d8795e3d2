#include "refl/algebras.hpp"

#include <numeric>

namespace refl {

mpq_class AlgebraSpec::scalar(const std::string &name) const {
  auto it = scalars.find(name);
  if (it == scalars.end())
    throw algebra_error("missing scalar '" + name + "'");
  return it->second;
}

mpq_class bmw_x_parameter(const mpq_class &m, const mpq_class &l) {
  if (m == 0 || l == 0)
    throw algebra_error("x parameter needs m != 0, l != 0");
  return (m * l - l * l + 1) / (m * l);
}

namespace {

NpRelation rel(std::vector<std::vector<int>> words1,
               std::vector<mpq_class> coeffs) {
  if (words1.size() != coeffs.size())
    throw algebra_error("malformed relation");
  NpRelation r;
  for (size_t i = 0; i < words1.size(); ++i) {
    std::vector<int> w;
    for (int g : words1[i])
      w.push_back(g - 1); // appendix NP form is 1-based
    r.terms.emplace_back(std::move(w), coeffs[i]);
  }
  return r;
}

// word = difference of two monomials
NpRelation eq(std::vector<int> lhs1, std::vector<int> rhs1) {
  return rel({std::move(lhs1), std::move(rhs1)}, {1, -1});
}

// alternating word a b a b ... of the given length (1-based letters)
std::vector<int> alt(int first, int second, int len) {
  std::vector<int> w;
  for (int i = 0; i < len; ++i)
    w.push_back(i % 2 == 0 ? first : second);
  return w;
}

std::vector<int> cat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> w;
  for (const auto &p : parts)
    w.insert(w.end(), p.begin(), p.end());
  return w;
}

} // namespace

Presentation hecke_presentation(const AlgebraSpec &spec) {
  Presentation P;
  if (spec.family == AlgebraFamily::HeckeEEN) {
    const int e = spec.e, n = spec.n;
    if (spec.d != 1)
      throw algebra_error("H(e,e,n) requires d = 1");
    if (n == 2 && e % 2 == 0 && !spec.two_param)
      throw algebra_error("H(e,e,2) with e even has two conjugacy classes; "
                          "request the two-parameter variant explicitly");
    for (int i = 0; i < e; ++i)
      P.gen_names.push_back("t" + std::to_string(i));
    for (int j = 3; j <= n; ++j)
      P.gen_names.push_back("s" + std::to_string(j));
    auto t = [](int i, int e_) { return ((i % e_) + e_) % e_ + 1; };
    auto s = [e](int j) { return e + j - 2; };
    for (int i = 0; i < e; ++i)
      if (i != 1 && e >= 2)
        P.relations.push_back(eq({t(i, e), t(i - 1, e)}, {t(1, e), t(0, e)}));
    if (n >= 3)
      for (int i = 0; i < e; ++i)
        P.relations.push_back(
            eq({t(i, e), s(3), t(i, e)}, {s(3), t(i, e), s(3)}));
    for (int i = 0; i < e; ++i)
      for (int j = 4; j <= n; ++j)
        P.relations.push_back(eq({s(j), t(i, e)}, {t(i, e), s(j)}));
    for (int i = 3; i <= n - 1; ++i)
      P.relations.push_back(eq({s(i), s(i + 1), s(i)}, {s(i + 1), s(i), s(i + 1)}));
    for (int i = 3; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j)
        P.relations.push_back(eq({s(i), s(j)}, {s(j), s(i)}));
    // deformed involutions x^2 - a x - 1
    for (int i = 0; i < e; ++i) {
      mpq_class a = (spec.two_param && n == 2)
                        ? spec.scalar(i % 2 == 0 ? "a1" : "a2")
                        : spec.scalar("a");
      P.relations.push_back(
          rel({{t(i, e), t(i, e)}, {t(i, e)}, {}}, {1, -a, -1}));
    }
    for (int j = 3; j <= n; ++j)
      P.relations.push_back(
          rel({{s(j), s(j)}, {s(j)}, {}}, {1, -spec.scalar("a"), -1}));
  } else if (spec.family == AlgebraFamily::HeckeD1N) {
    const int d = spec.d, n = spec.n;
    if (spec.e != 1 || d < 2)
      throw algebra_error("H(d,1,n) requires e = 1 and d >= 2");
    P.gen_names.push_back("z");
    for (int j = 2; j <= n; ++j)
      P.gen_names.push_back("s" + std::to_string(j));
    const int z = 1;
    auto s = [](int j) { return j; }; // s_j at position j (1-based gen index)
    P.relations.push_back(eq({z, s(2), z, s(2)}, {s(2), z, s(2), z}));
    for (int j = 3; j <= n; ++j)
      P.relations.push_back(eq({z, s(j)}, {s(j), z}));
    for (int i = 2; i <= n - 1; ++i)
      P.relations.push_back(eq({s(i), s(i + 1), s(i)}, {s(i + 1), s(i), s(i + 1)}));
    for (int i = 2; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j)
        P.relations.push_back(eq({s(i), s(j)}, {s(j), s(i)}));
    // z^d - b1 z^{d-1} - ... - b_{d-1} z - 1
    NpRelation zr;
    zr.terms.emplace_back(std::vector<int>(static_cast<size_t>(d), 0), mpq_class(1));
    for (int i = 1; i <= d - 1; ++i)
      zr.terms.emplace_back(std::vector<int>(static_cast<size_t>(d - i), 0),
                            -spec.scalar("b" + std::to_string(i)));
    zr.terms.emplace_back(std::vector<int>{}, mpq_class(-1));
    P.relations.push_back(std::move(zr));
    for (int j = 2; j <= n; ++j)
      P.relations.push_back(
          rel({{s(j), s(j)}, {s(j)}, {}}, {1, -spec.scalar("a"), -1}));
  } else {
    throw algebra_error("not a Hecke family");
  }
  P.order = MonomialOrder::natural(P.num_gens());
  return P;
}

namespace {

// appendix generator numbering for BMW(e,e,3):
// 1=t0 2=t1 3=s3 4=e0 5=e1 6=f3, then h1 (e = 3) or h0,h1
struct BmwCtx {
  int e;
  mpq_class m, l, v;
  int h0 = 0, h1 = 0; // 1-based indices, 0 if absent

  // braid-group word for T_i over t0,t1 and the inverse markers
  std::vector<int> T(int i) const {
    i = ((i % e) + e) % e;
    if (i == 0)
      return {1};
    if (i == 1)
      return {2};
    std::vector<int> w = alt(2, 1, i);
    std::vector<int> inv = alt(2, 1, i - 1);
    std::reverse(inv.begin(), inv.end());
    for (int g : inv)
      w.push_back(g == 1 ? h0 : h1);
    return w;
  }
  // E_i = W e_par W^{-1} with W the alternating prefix of length i-1
  std::vector<int> Wpref(int i) const { return alt(2, 1, i - 1); }
  int epar(int i) const { return i % 2 == 0 ? 4 : 5; }
  std::vector<int> Hrev(const std::vector<int> &w) const {
    std::vector<int> out(w.rbegin(), w.rend());
    for (int &g : out)
      g = (g == 1 ? h0 : h1);
    return out;
  }
};

std::vector<NpRelation> bmw_relations_e3(const BmwCtx &C) {
  const mpq_class &m = C.m, &l = C.l;
  std::vector<NpRelation> L;
  // M0: h1 = t1^{-1}
  L.push_back(eq({7, 2}, {2, 7}));
  L.push_back(rel({{7, 2}, {}}, {1, -1}));
  // M1
  L.push_back(eq({1, 2, 1}, {2, 1, 2}));
  L.push_back(eq({1, 3, 1}, {3, 1, 3}));
  L.push_back(eq({2, 3, 2}, {3, 2, 3}));
  L.push_back(eq({3, 2, 1, 7, 3, 2}, {2, 1, 7, 3, 2, 1}));
  // M2: m E = l(T^2 + mT - 1)
  L.push_back(rel({{4}, {1, 1}, {1}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{5}, {2, 2}, {2}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{6}, {3, 3}, {3}, {}}, {1, -l / m, -l, l / m}));
  // M3: T E = l^{-1} E
  L.push_back(rel({{1, 4}, {4}}, {1, -1 / l}));
  L.push_back(rel({{2, 5}, {5}}, {1, -1 / l}));
  L.push_back(rel({{3, 6}, {6}}, {1, -1 / l}));
  // M4
  L.push_back(rel({{4, 2, 4}, {4}}, {1, -l}));
  L.push_back(rel({{5, 1, 5}, {5}}, {1, -l}));
  L.push_back(rel({{5, 3, 5}, {5}}, {1, -l}));
  L.push_back(rel({{6, 2, 6}, {6}}, {1, -l}));
  L.push_back(rel({{4, 3, 4}, {4}}, {1, -l}));
  L.push_back(rel({{6, 1, 6}, {6}}, {1, -l}));
  L.push_back(rel({{6, 2, 1, 7, 6}, {6}}, {1, -l}));
  L.push_back(rel({{4, 7, 3, 2, 4}, {4}}, {1, -l}));
  return L;
}

std::vector<NpRelation> bmw_relations_e4(const BmwCtx &C) {
  const mpq_class &m = C.m, &l = C.l, &v = C.v;
  std::vector<NpRelation> L;
  // M0: h0 = t0^{-1}, h1 = t1^{-1}
  L.push_back(eq({7, 1}, {1, 7}));
  L.push_back(rel({{7, 1}, {}}, {1, -1}));
  L.push_back(eq({8, 2}, {2, 8}));
  L.push_back(rel({{8, 2}, {}}, {1, -1}));
  // M1
  L.push_back(eq({1, 3, 1}, {3, 1, 3}));
  L.push_back(eq({2, 3, 2}, {3, 2, 3}));
  L.push_back(eq({1, 2, 1, 2}, {2, 1, 2, 1}));
  L.push_back(eq({3, 2, 1, 8, 3}, {2, 1, 8, 3, 2, 1, 8}));
  L.push_back(eq({3, 2, 1, 2, 7, 8, 3}, {2, 1, 2, 7, 8, 3, 2, 1, 2, 7, 8}));
  // M2, M3
  L.push_back(rel({{4}, {1, 1}, {1}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{5}, {2, 2}, {2}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{6}, {3, 3}, {3}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{1, 4}, {4}}, {1, -1 / l}));
  L.push_back(rel({{2, 5}, {5}}, {1, -1 / l}));
  L.push_back(rel({{3, 6}, {6}}, {1, -1 / l}));
  // M4
  L.push_back(rel({{6, 1, 6}, {6}}, {1, -l}));
  L.push_back(rel({{4, 3, 4}, {4}}, {1, -l}));
  L.push_back(rel({{6, 2, 6}, {6}}, {1, -l}));
  L.push_back(rel({{5, 3, 5}, {5}}, {1, -l}));
  L.push_back(rel({{6, 2, 1, 8, 6}, {6}}, {1, -l}));
  L.push_back(rel({{2, 4, 8, 3, 2, 4}, {2, 4}}, {1, -l}));
  L.push_back(rel({{6, 2, 1, 2, 7, 8, 6}, {6}}, {1, -l}));
  L.push_back(rel({{5, 7, 8, 3, 2, 1, 5}, {5}}, {1, -l}));
  // M5
  L.push_back(eq({2, 1, 2, 4}, {4, 2, 1, 2}));
  L.push_back(eq({1, 2, 1, 5}, {5, 1, 2, 1}));
  L.push_back(rel({{1, 2, 1, 2, 4}, {4}}, {1, -1 / (l * v)}));
  L.push_back(rel({{1, 2, 1, 2, 5}, {5}}, {1, -1 / (l * v)}));
  L.push_back(rel({{4, 2, 4}, {4}}, {1, -(1 / v) - l}));
  L.push_back(rel({{5, 1, 5}, {5}}, {1, -(1 / v) - l}));
  L.push_back(rel({{4, 5}}, {1}));
  L.push_back(rel({{5, 4}}, {1}));
  return L;
}

std::vector<NpRelation> bmw_relations_e5(const BmwCtx &C) {
  const mpq_class &m = C.m, &l = C.l;
  std::vector<NpRelation> L;
  L.push_back(eq({7, 1}, {1, 7}));
  L.push_back(rel({{7, 1}, {}}, {1, -1}));
  L.push_back(eq({8, 2}, {2, 8}));
  L.push_back(rel({{8, 2}, {}}, {1, -1}));
  L.push_back(eq({1, 3, 1}, {3, 1, 3}));
  L.push_back(eq({2, 3, 2}, {3, 2, 3}));
  L.push_back(eq({1, 2, 1, 2, 1}, {2, 1, 2, 1, 2}));
  L.push_back(eq({3, 2, 1, 8, 3}, {2, 1, 8, 3, 2, 1, 8}));
  L.push_back(eq({3, 2, 1, 2, 7, 8, 3}, {2, 1, 2, 7, 8, 3, 2, 1, 2, 7, 8}));
  L.push_back(eq({3, 2, 1, 2, 1, 8, 7, 8, 3},
                 {2, 1, 2, 1, 8, 7, 8, 3, 2, 1, 2, 1, 8, 7, 8}));
  L.push_back(rel({{6}, {3, 3}, {3}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{4}, {1, 1}, {1}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{5}, {2, 2}, {2}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{1, 4}, {4}}, {1, -1 / l}));
  L.push_back(rel({{2, 5}, {5}}, {1, -1 / l}));
  L.push_back(rel({{3, 6}, {6}}, {1, -1 / l}));
  L.push_back(rel({{6, 1, 6}, {6}}, {1, -l}));
  L.push_back(rel({{4, 3, 4}, {4}}, {1, -l}));
  L.push_back(rel({{4, 2, 4}, {4}}, {1, -l}));
  L.push_back(rel({{4, 2, 1, 2, 4}, {4}}, {1, -l}));
  L.push_back(rel({{5, 1, 5}, {5}}, {1, -l}));
  L.push_back(rel({{5, 1, 2, 1, 5}, {5}}, {1, -l}));
  L.push_back(rel({{6, 2, 6}, {6}}, {1, -l}));
  L.push_back(rel({{5, 3, 5}, {5}}, {1, -l}));
  L.push_back(rel({{6, 2, 1, 8, 6}, {6}}, {1, -l}));
  L.push_back(rel({{2, 4, 8, 3, 2, 4}, {2, 4}}, {1, -l}));
  L.push_back(rel({{6, 2, 1, 2, 7, 8, 6}, {6}}, {1, -l}));
  L.push_back(rel({{2, 1, 5, 7, 8, 3, 2, 1, 5}, {2, 1, 5}}, {1, -l}));
  L.push_back(rel({{6, 2, 1, 2, 1, 8, 7, 8, 6}, {6}}, {1, -l}));
  L.push_back(rel({{2, 1, 2, 4, 8, 7, 8, 3, 2, 1, 2, 4}, {2, 1, 2, 4}},
                  {1, -l}));
  L.push_back(rel({{4, 5, 4}, {4}}, {1, -1}));
  L.push_back(rel({{5, 4, 5}, {5}}, {1, -1}));
  L.push_back(rel({{4, 8, 7, 8, 4}, {4}}, {1, -1 / l}));
  L.push_back(rel({{5, 7, 8, 7, 5}, {5}}, {1, -1 / l}));
  return L;
}

std::vector<NpRelation> bmw_relations_e6(const BmwCtx &C) {
  const mpq_class &m = C.m, &l = C.l, &v = C.v;
  std::vector<NpRelation> L;
  L.push_back(eq({7, 1}, {1, 7}));
  L.push_back(rel({{7, 1}, {}}, {1, -1}));
  L.push_back(eq({8, 2}, {2, 8}));
  L.push_back(rel({{8, 2}, {}}, {1, -1}));
  L.push_back(eq({1, 3, 1}, {3, 1, 3}));
  L.push_back(eq({2, 3, 2}, {3, 2, 3}));
  L.push_back(eq({1, 2, 1, 2, 1, 2}, {2, 1, 2, 1, 2, 1}));
  L.push_back(eq({3, 2, 1, 8, 3}, {2, 1, 8, 3, 2, 1, 8}));
  L.push_back(eq({3, 2, 1, 2, 7, 8, 3}, {2, 1, 2, 7, 8, 3, 2, 1, 2, 7, 8}));
  L.push_back(eq({3, 2, 1, 2, 1, 8, 7, 8, 3},
                 {2, 1, 2, 1, 8, 7, 8, 3, 2, 1, 2, 1, 8, 7, 8}));
  L.push_back(eq({3, 2, 1, 2, 1, 2, 7, 8, 7, 8, 3},
                 {2, 1, 2, 1, 2, 7, 8, 7, 8, 3, 2, 1, 2, 1, 2, 7, 8, 7, 8}));
  L.push_back(rel({{6}, {3, 3}, {3}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{4}, {1, 1}, {1}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{5}, {2, 2}, {2}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{1, 4}, {4}}, {1, -1 / l}));
  L.push_back(rel({{2, 5}, {5}}, {1, -1 / l}));
  L.push_back(rel({{3, 6}, {6}}, {1, -1 / l}));
  L.push_back(rel({{6, 1, 6}, {6}}, {1, -l}));
  L.push_back(rel({{4, 3, 4}, {4}}, {1, -l}));
  L.push_back(rel({{6, 2, 6}, {6}}, {1, -l}));
  L.push_back(rel({{5, 3, 5}, {5}}, {1, -l}));
  L.push_back(rel({{6, 2, 1, 8, 6}, {6}}, {1, -l}));
  L.push_back(rel({{4, 8, 3, 2, 4}, {4}}, {1, -l}));
  L.push_back(rel({{6, 2, 1, 2, 7, 8, 6}, {6}}, {1, -l}));
  L.push_back(rel({{5, 7, 8, 3, 2, 1, 5}, {5}}, {1, -l}));
  L.push_back(rel({{6, 2, 1, 2, 1, 8, 7, 8, 6}, {6}}, {1, -l}));
  L.push_back(rel({{4, 8, 7, 8, 3, 2, 1, 2, 4}, {4}}, {1, -l}));
  L.push_back(rel({{6, 2, 1, 2, 1, 2, 7, 8, 7, 8, 6}, {6}}, {1, -l}));
  L.push_back(rel({{5, 7, 8, 7, 8, 3, 2, 1, 2, 1, 5}, {5}}, {1, -l}));
  L.push_back(eq({2, 1, 2, 1, 2, 4}, {4, 2, 1, 2, 1, 2}));
  L.push_back(eq({1, 2, 1, 2, 1, 5}, {5, 1, 2, 1, 2, 1}));
  L.push_back(rel({{1, 2, 1, 2, 1, 2, 4}, {4}}, {1, -(1 / l) * (1 / v)}));
  L.push_back(rel({{1, 2, 1, 2, 1, 2, 5}, {5}}, {1, -(1 / l) * (1 / v)}));
  L.push_back(rel({{4, 2, 4}, {4}}, {1, -(1 / v) - l}));
  L.push_back(rel({{5, 1, 5}, {5}}, {1, -(1 / v) - l}));
  L.push_back(rel({{4, 5}}, {1}));
  L.push_back(rel({{5, 4}}, {1}));
  return L;
}

// assembled from the same encoding scheme for parameters outside the
// hand-checked e = 3..6 lists (callers flag these runs experimental)
std::vector<NpRelation> bmw_relations_general(const BmwCtx &C) {
  const int e = C.e;
  const mpq_class &m = C.m, &l = C.l;
  std::vector<NpRelation> L;
  L.push_back(eq({C.h0, 1}, {1, C.h0}));
  L.push_back(rel({{C.h0, 1}, {}}, {1, -1}));
  L.push_back(eq({C.h1, 2}, {2, C.h1}));
  L.push_back(rel({{C.h1, 2}, {}}, {1, -1}));
  L.push_back(eq({1, 3, 1}, {3, 1, 3}));
  L.push_back(eq({2, 3, 2}, {3, 2, 3}));
  L.push_back(eq(alt(1, 2, e), alt(2, 1, e)));
  for (int i = 2; i <= e - 1; ++i)
    L.push_back(eq(cat({{3}, C.T(i), {3}}), cat({C.T(i), {3}, C.T(i)})));
  L.push_back(rel({{4}, {1, 1}, {1}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{5}, {2, 2}, {2}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{6}, {3, 3}, {3}, {}}, {1, -l / m, -l, l / m}));
  L.push_back(rel({{1, 4}, {4}}, {1, -1 / l}));
  L.push_back(rel({{2, 5}, {5}}, {1, -1 / l}));
  L.push_back(rel({{3, 6}, {6}}, {1, -1 / l}));
  for (int i = 0; i <= e - 1; ++i)
    L.push_back(rel({cat({{6}, C.T(i), {6}}), {6}}, {1, -l}));
  L.push_back(rel({{4, 3, 4}, {4}}, {1, -l}));
  L.push_back(rel({{5, 3, 5}, {5}}, {1, -l}));
  for (int i = 2; i <= e - 1; ++i) {
    std::vector<int> W = C.Wpref(i);
    int ep = C.epar(i);
    // W ep W^{-1} s3 W ep = l W ep
    std::vector<int> lhs = cat({W, {ep}, C.Hrev(W), {3}, W, {ep}});
    std::vector<int> rhs = cat({W, {ep}});
    L.push_back(rel({lhs, rhs}, {1, -l}));
  }
  if (e % 2 == 1) {
    for (int kk = 1; kk <= e - 2; kk += 2) {
      L.push_back(rel({cat({{4}, alt(2, 1, kk), {4}}), {4}}, {1, -l}));
      L.push_back(rel({cat({{5}, alt(1, 2, kk), {5}}), {5}}, {1, -l}));
    }
    L.push_back(eq(cat({alt(2, 1, e - 1), {5}}), cat({{4}, alt(2, 1, e - 1)})));
    L.push_back(eq(cat({alt(1, 2, e - 1), {4}}), cat({{5}, alt(1, 2, e - 1)})));
  } else {
    const mpq_class &v = C.v;
    for (int i = 1; i < e / 2; i += 2) {
      L.push_back(
          rel({cat({{5}, alt(1, 2, i), {5}}), {5}}, {1, -(1 / v) - l}));
      L.push_back(
          rel({cat({{4}, alt(2, 1, i), {4}}), {4}}, {1, -(1 / v) - l}));
    }
    L.push_back(eq(cat({alt(2, 1, e - 1), {4}}), cat({{4}, alt(2, 1, e - 1)})));
    L.push_back(eq(cat({alt(1, 2, e - 1), {5}}), cat({{5}, alt(1, 2, e - 1)})));
    L.push_back(rel({cat({alt(1, 2, e), {4}}), {4}}, {1, -1 / (l * v)}));
    L.push_back(rel({cat({alt(2, 1, e), {5}}), {5}}, {1, -1 / (l * v)}));
    L.push_back(rel({{4, 5}}, {1}));
    L.push_back(rel({{5, 4}}, {1}));
  }
  return L;
}

} // namespace

Presentation bmw_presentation(const AlgebraSpec &spec) {
  if (spec.family != AlgebraFamily::BmwEEN)
    throw algebra_error("not a BMW spec");
  if (spec.d != 1 || spec.e < 3 || spec.n != 3)
    throw algebra_error("BMW(e,e,n) presentations are built for n = 3, e >= 3");
  BmwCtx C;
  C.e = spec.e;
  C.l = spec.scalar("l");
  if (spec.e % 2 == 0) {
    C.v = spec.scalar("v");
    if (C.v == 0)
      throw algebra_error("v must be nonzero");
    C.m = C.v - 1 / C.v;
  } else {
    C.m = spec.scalar("m");
  }
  if (C.m == 0 || C.l == 0)
    throw algebra_error("degenerate specialization (m = 0 or l = 0)");
  Presentation P;
  P.gen_names = {"t0", "t1", "s3", "e0", "e1", "f3"};
  if (spec.e == 3) {
    C.h1 = 7;
    P.gen_names.push_back("h1");
    P.relations = bmw_relations_e3(C);
  } else {
    C.h0 = 7;
    C.h1 = 8;
    P.gen_names.push_back("h0");
    P.gen_names.push_back("h1");
    switch (spec.e) {
    case 4:
      P.relations = bmw_relations_e4(C);
      break;
    case 5:
      P.relations = bmw_relations_e5(C);
      break;
    case 6:
      P.relations = bmw_relations_e6(C);
      break;
    default:
      P.relations = bmw_relations_general(C);
      break;
    }
  }
  P.order = MonomialOrder::natural(P.num_gens());
  return P;
}

Presentation brauer_presentation(const AlgebraSpec &spec) {
  if (spec.family != AlgebraFamily::BrauerEEN)
    throw algebra_error("not a Brauer spec");
  if (spec.d != 1 || spec.e < 3 || spec.n != 3)
    throw algebra_error("Br(e,e,n) presentations are built for n = 3, e >= 3");
  const int e = spec.e;
  const mpq_class x = spec.scalar("x");
  Presentation P;
  P.gen_names = {"t0", "t1", "s3", "e0", "e1", "f3"};
  std::vector<NpRelation> L;
  // involutions
  for (int g : {1, 2, 3})
    L.push_back(rel({{g, g}, {}}, {1, -1}));
  // dihedral relation and T_i words (no inverses needed)
  auto Tword = [e](int i) {
    i = ((i % e) + e) % e;
    if (i == 0)
      return std::vector<int>{1};
    return alt(2, 1, 2 * i - 1);
  };
  auto Eword = [e](int i) {
    i = ((i % e) + e) % e;
    std::vector<int> W = alt(2, 1, i == 0 ? 0 : i - 1);
    std::vector<int> Wr(W.rbegin(), W.rend());
    int ep = (i % 2 == 0) ? 4 : 5;
    return cat({W, {ep}, Wr});
  };
  L.push_back(eq(alt(2, 1, e), alt(1, 2, e)));
  for (int i = 2; i <= e - 1; ++i)
    L.push_back(eq(cat({{3}, Tword(i), {3}}), cat({Tword(i), {3}, Tword(i)})));
  // E/F idempotent-like laws and commutations
  for (int g : {4, 5, 6})
    L.push_back(rel({{g, g}, {g}}, {1, -x}));
  L.push_back(rel({{1, 4}, {4}}, {1, -1}));
  L.push_back(rel({{4, 1}, {4}}, {1, -1}));
  L.push_back(rel({{2, 5}, {5}}, {1, -1}));
  L.push_back(rel({{5, 2}, {5}}, {1, -1}));
  L.push_back(rel({{3, 6}, {6}}, {1, -1}));
  L.push_back(rel({{6, 3}, {6}}, {1, -1}));
  // adjacency laws along t_i -- s3
  for (int i = 0; i <= e - 1; ++i) {
    std::vector<int> Ti = Tword(i), Ei = Eword(i);
    L.push_back(rel({cat({{6}, Ti, {6}}), {6}}, {1, -1}));
    L.push_back(rel({cat({Ei, {3}, Ei}), Ei}, {1, -1}));
    // S_j S_i F_j = F_i S_j S_i = F_i F_j in both orders
    L.push_back(eq(cat({{3}, Ti, {6}}), cat({Ei, {3}, Ti})));
    L.push_back(eq(cat({Ei, {3}, Ti}), cat({Ei, {6}})));
    L.push_back(eq(cat({Ti, {3}, Ei}), cat({{6}, Ti, {3}})));
    L.push_back(eq(cat({{6}, Ti, {3}}), cat({{6}, Ei})));
  }
  if (e % 2 == 1) {
    for (int kk = 1; kk <= e - 2; kk += 2) {
      L.push_back(rel({cat({{5}, alt(1, 2, kk), {5}}), {5}}, {1, -1}));
      L.push_back(rel({cat({{4}, alt(2, 1, kk), {4}}), {4}}, {1, -1}));
    }
    L.push_back(eq(cat({alt(2, 1, e - 1), {5}}), cat({{4}, alt(2, 1, e - 1)})));
    L.push_back(eq(cat({alt(1, 2, e - 1), {4}}), cat({{5}, alt(1, 2, e - 1)})));
  } else {
    for (int i = 1; i < e / 2; i += 2) {
      L.push_back(rel({cat({{5}, alt(1, 2, i), {5}}), {5}}, {1, -1}));
      L.push_back(rel({cat({{4}, alt(2, 1, i), {4}}), {4}}, {1, -1}));
    }
    L.push_back(rel({cat({alt(2, 1, e - 1), {4}}), {4}}, {1, -1}));
    L.push_back(rel({cat({{4}, alt(2, 1, e - 1)}), {4}}, {1, -1}));
    L.push_back(rel({cat({alt(1, 2, e - 1), {5}}), {5}}, {1, -1}));
    L.push_back(rel({cat({{5}, alt(1, 2, e - 1)}), {5}}, {1, -1}));
    // E0 A E1 = E1 A E0 = 0 over square-free words of length <= e-1
    for (int len = 0; len <= e - 1; ++len) {
      std::vector<std::vector<int>> mids;
      if (len == 0)
        mids.push_back({});
      else {
        mids.push_back(alt(1, 2, len));
        mids.push_back(alt(2, 1, len));
      }
      for (const auto &mid : mids) {
        L.push_back(rel({cat({{4}, mid, {5}})}, {1}));
        L.push_back(rel({cat({{5}, mid, {4}})}, {1}));
      }
    }
  }
  P.relations = std::move(L);
  P.order = MonomialOrder::natural(P.num_gens());
  return P;
}

std::vector<std::vector<int>> lambda_basis(const AlgebraSpec &spec) {
  std::vector<std::vector<std::vector<int>>> rows;
  if (spec.family == AlgebraFamily::HeckeEEN) {
    const int e = spec.e, n = spec.n;
    auto t = [](int k) { return k; };            // 0-based generator index
    auto s = [e](int j) { return e + j - 3; };   // j >= 3
    // Lambda_2
    std::vector<std::vector<int>> l2;
    l2.push_back({});
    for (int k = 0; k < e; ++k)
      l2.push_back({t(k)});
    for (int k = 1; k < e; ++k)
      l2.push_back({t(k), t(0)});
    rows.push_back(std::move(l2));
    for (int i = 3; i <= n; ++i) {
      std::vector<std::vector<int>> li;
      li.push_back({});
      for (int ip = 3; ip <= i; ++ip) {
        std::vector<int> w;
        for (int j = i; j >= ip; --j)
          w.push_back(s(j));
        li.push_back(std::move(w));
      }
      for (int k = 0; k < e; ++k) {
        std::vector<int> w;
        for (int j = i; j >= 3; --j)
          w.push_back(s(j));
        w.push_back(t(k));
        li.push_back(std::move(w));
      }
      for (int k = 1; k < e; ++k)
        for (int ip = 2; ip <= i; ++ip) {
          std::vector<int> w;
          for (int j = i; j >= 3; --j)
            w.push_back(s(j));
          w.push_back(t(k));
          w.push_back(t(0)); // s_2 = t_0
          for (int j = 3; j <= ip; ++j)
            w.push_back(s(j));
          li.push_back(std::move(w));
        }
      rows.push_back(std::move(li));
    }
  } else if (spec.family == AlgebraFamily::HeckeD1N) {
    const int d = spec.d, n = spec.n;
    const int z = 0;
    auto s = [](int j) { return j - 1; }; // s_j, j >= 2
    std::vector<std::vector<int>> l1;
    for (int k = 0; k < d; ++k)
      l1.push_back(std::vector<int>(static_cast<size_t>(k), z));
    rows.push_back(std::move(l1));
    for (int i = 2; i <= n; ++i) {
      std::vector<std::vector<int>> li;
      li.push_back({});
      for (int ip = 2; ip <= i; ++ip) {
        std::vector<int> w;
        for (int j = i; j >= ip; --j)
          w.push_back(s(j));
        li.push_back(std::move(w));
      }
      for (int k = 1; k < d; ++k) {
        std::vector<int> w;
        for (int j = i; j >= 2; --j)
          w.push_back(s(j));
        w.insert(w.end(), static_cast<size_t>(k), z);
        li.push_back(std::move(w));
      }
      for (int k = 1; k < d; ++k)
        for (int ip = 2; ip <= i; ++ip) {
          std::vector<int> w;
          for (int j = i; j >= 2; --j)
            w.push_back(s(j));
          w.insert(w.end(), static_cast<size_t>(k), z);
          for (int j = 2; j <= ip; ++j)
            w.push_back(s(j));
          li.push_back(std::move(w));
        }
      rows.push_back(std::move(li));
    }
  } else {
    throw algebra_error("Lambda bases are defined for the Hecke families");
  }
  std::vector<std::vector<int>> out = {{}};
  for (const auto &choices : rows) {
    std::vector<std::vector<int>> next;
    for (const auto &head : out)
      for (const auto &c : choices) {
        std::vector<int> w = head;
        w.insert(w.end(), c.begin(), c.end());
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

bool GroebnerRun::complete() const {
  return engine_q ? engine_q->complete() : engine_p->complete();
}

size_t GroebnerRun::dimension(size_t bound) const {
  return engine_q ? engine_q->quotient_basis(bound).size()
                  : engine_p->quotient_basis(bound).size();
}

GroebnerRun run_groebner(const Presentation &pres, unsigned long prime,
                         int degree_cap) {
  GroebnerRun run;
  run.pres = pres;
  if (prime == 0) {
    FieldQ F;
    run.engine_q = std::make_shared<NcGroebner<FieldQ>>(F, pres.num_gens(),
                                                        pres.order, degree_cap);
    for (const NpRelation &r : pres.relations)
      run.engine_q->add_relation(to_poly(F, pres.order, r));
    run.engine_q->run();
  } else {
    FieldP F{prime};
    run.engine_p = std::make_shared<NcGroebner<FieldP>>(F, pres.num_gens(),
                                                        pres.order, degree_cap);
    for (const NpRelation &r : pres.relations)
      run.engine_p->add_relation(to_poly(F, pres.order, r));
    run.engine_p->run();
  }
  return run;
}

namespace {

template <class F>
size_t rank_of_rows(const F &field,
                    std::vector<std::vector<typename F::Elem>> rows) {
  size_t rank = 0;
  const size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && field.is_zero(rows[piv][col]))
      ++piv;
    if (piv == rows.size())
      continue;
    std::swap(rows[rank], rows[piv]);
    auto s = field.inv(rows[rank][col]);
    for (size_t j = col; j < ncols; ++j)
      rows[rank][j] = field.mul(rows[rank][j], s);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || field.is_zero(rows[i][col]))
        continue;
      auto c = rows[i][col];
      for (size_t j = col; j < ncols; ++j)
        rows[i][j] = field.sub(rows[i][j], field.mul(c, rows[rank][j]));
    }
    ++rank;
  }
  return rank;
}

template <class F>
LambdaReport lambda_report(const F &field, NcGroebner<F> &engine,
                           const AlgebraSpec &spec) {
  LambdaReport rep;
  GroupParams params(spec.d, spec.e, spec.n);
  rep.group_order = params.order();
  std::vector<Word> qb = engine.quotient_basis();
  rep.quotient_dim = qb.size();
  std::map<Word, size_t> index;
  for (size_t i = 0; i < qb.size(); ++i)
    index[qb[i]] = i;
  auto words = lambda_basis(spec);
  rep.lambda_count = words.size();
  std::vector<std::vector<typename F::Elem>> rows;
  for (const auto &w : words) {
    NcPoly<F> p;
    Word word;
    for (int g : w)
      word.push_back(static_cast<uint16_t>(g));
    p.terms.emplace_back(std::move(word), field.one());
    NcPoly<F> r = engine.reduce(std::move(p));
    std::vector<typename F::Elem> row(qb.size(), field.zero());
    for (const auto &[mono, c] : r.terms)
      row[index.at(mono)] = c;
    rows.push_back(std::move(row));
  }
  rep.rank = rank_of_rows(field, std::move(rows));
  return rep;
}

} // namespace

LambdaReport verify_lambda_basis(const AlgebraSpec &spec, unsigned long prime,
                                 int degree_cap) {
  Presentation pres = hecke_presentation(spec);
  GroebnerRun run = run_groebner(pres, prime, degree_cap);
  if (!run.complete())
    throw cap_exceeded();
  if (run.engine_q)
    return lambda_report(run.engine_q->field(), *run.engine_q, spec);
  return lambda_report(run.engine_p->field(), *run.engine_p, spec);
}

bool verify_identity(const GroebnerRun &run, const NpRelation &lhs,
                     const NpRelation &rhs) {
  NpRelation diff = lhs;
  for (const auto &[w, c] : rhs.terms)
    diff.terms.emplace_back(w, -c);
  if (run.engine_q) {
    auto p = to_poly(run.engine_q->field(), run.pres.order, diff);
    return run.engine_q->reduce(std::move(p)).is_zero();
  }
  auto p = to_poly(run.engine_p->field(), run.pres.order, diff);
  return run.engine_p->reduce(std::move(p)).is_zero();
}

} // namespace refl
