#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

// Noncommutative Groebner bases over an exact field (Q or a prime field):
// plain Buchberger/Mora completion under a deg-lex order, standard-monomial
// quotient bases, normal-form reduction, and multiplication matrices.

namespace refl {

struct ncgb_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct cap_exceeded : ncgb_error {
  cap_exceeded() : ncgb_error("degree cap exceeded during completion") {}
};
struct infinite_dimensional : ncgb_error {
  infinite_dimensional() : ncgb_error("quotient basis exceeds growth bound") {}
};

using Word = std::vector<uint16_t>; // generator indices, 0-based

// exact rational field
struct FieldQ {
  using Elem = mpq_class;
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  bool is_zero(const Elem &a) const { return a == 0; }
  Elem add(const Elem &a, const Elem &b) const { return a + b; }
  Elem sub(const Elem &a, const Elem &b) const { return a - b; }
  Elem mul(const Elem &a, const Elem &b) const { return a * b; }
  Elem neg(const Elem &a) const { return -a; }
  Elem inv(const Elem &a) const { return Elem(1) / a; }
  Elem from_rational(const mpq_class &q) const { return q; }
  std::string str(const Elem &a) const { return a.get_str(); }
};

// Z/p for a runtime prime p
struct FieldP {
  unsigned long p = 103;
  using Elem = unsigned long;
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  bool is_zero(const Elem &a) const { return a == 0; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b % p) % p; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem inv(Elem a) const;
  Elem from_rational(const mpq_class &q) const;
  std::string str(const Elem &a) const { return std::to_string(a); }
};

// degree first, then lexicographic on a precedence permutation
struct MonomialOrder {
  std::vector<int> rank; // rank[gen] = position, smaller = smaller variable

  static MonomialOrder natural(int num_gens) {
    MonomialOrder o;
    o.rank.resize(num_gens);
    for (int i = 0; i < num_gens; ++i)
      o.rank[i] = i;
    return o;
  }
  bool less(const Word &a, const Word &b) const {
    if (a.size() != b.size())
      return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i)
      if (rank[a[i]] != rank[b[i]])
        return rank[a[i]] < rank[b[i]];
    return false;
  }
};

template <class F> struct NcPoly {
  // sorted descending in the order; leading term first; no zero coefficients
  std::vector<std::pair<Word, typename F::Elem>> terms;
  bool is_zero() const { return terms.empty(); }
  const Word &lm() const { return terms.front().first; }
  const typename F::Elem &lc() const { return terms.front().second; }
};

template <class F>
void normalize_poly(const F &field, const MonomialOrder &order, NcPoly<F> &p) {
  std::sort(p.terms.begin(), p.terms.end(),
            [&order](const auto &a, const auto &b) {
              return order.less(b.first, a.first);
            });
  std::vector<std::pair<Word, typename F::Elem>> out;
  for (auto &t : p.terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second = field.add(out.back().second, t.second);
    else {
      if (!out.empty() && field.is_zero(out.back().second))
        out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && field.is_zero(out.back().second))
    out.pop_back();
  p.terms = std::move(out);
}

template <class F>
void make_monic(const F &field, NcPoly<F> &p) {
  if (p.is_zero())
    return;
  auto s = field.inv(p.lc());
  for (auto &t : p.terms)
    t.second = field.mul(t.second, s);
}

// position of u as a subword of w, or npos
inline size_t find_subword(const Word &w, const Word &u) {
  if (u.empty() || u.size() > w.size())
    return static_cast<size_t>(-1);
  for (size_t pos = 0; pos + u.size() <= w.size(); ++pos) {
    bool ok = true;
    for (size_t i = 0; i < u.size(); ++i)
      if (w[pos + i] != u[i]) {
        ok = false;
        break;
      }
    if (ok)
      return pos;
  }
  return static_cast<size_t>(-1);
}

template <class F> class NcGroebner {
public:
  NcGroebner(F field, int num_gens, MonomialOrder order, int degree_cap = 24)
      : field_(field), num_gens_(num_gens), order_(std::move(order)),
        cap_(degree_cap) {}

  const F &field() const { return field_; }
  int num_gens() const { return num_gens_; }
  const MonomialOrder &order() const { return order_; }
  bool complete() const { return done_ && !capped_; }
  bool capped() const { return capped_; }
  const std::vector<NcPoly<F>> &basis() const { return basis_; }

  void add_relation(NcPoly<F> p) {
    normalize_poly(field_, order_, p);
    if (p.is_zero())
      throw ncgb_error("zero relation");
    pending_.push_back(std::move(p));
    done_ = false;
  }

  // Buchberger/Mora completion up to the degree cap
  void run() {
    for (auto &p : pending_)
      insert_reduced(std::move(p));
    pending_.clear();
    while (!queue_.empty()) {
      auto ob = queue_.top();
      queue_.pop();
      if (ob.gen_a >= basis_.size() || ob.gen_b >= basis_.size() ||
          !alive_[ob.gen_a] || !alive_[ob.gen_b])
        continue;
      if (static_cast<int>(ob.degree) > cap_) {
        capped_ = true;
        continue;
      }
      NcPoly<F> s = s_poly(ob);
      insert_reduced(std::move(s));
    }
    done_ = true;
  }

  // full normal form with respect to the current basis
  NcPoly<F> reduce(NcPoly<F> p) const {
    normalize_poly(field_, order_, p);
    NcPoly<F> out;
    size_t guard = 0;
    while (!p.is_zero()) {
      if (++guard > 20000000)
        throw ncgb_error("reduction failed to terminate");
      const Word &w = p.lm();
      int g = -1;
      size_t pos = 0;
      find_reducer(w, g, pos);
      if (g < 0) {
        out.terms.push_back(std::move(p.terms.front()));
        p.terms.erase(p.terms.begin());
        continue;
      }
      // p -= c * L * basis[g] * R; the embedding m -> L m R preserves the
      // deg-lex term order, so the shifted polynomial needs no re-sort
      const NcPoly<F> &f = basis_[static_cast<size_t>(g)];
      typename F::Elem c = p.lc();
      const size_t flm = f.lm().size();
      NcPoly<F> sub;
      sub.terms.reserve(f.terms.size());
      for (const auto &t : f.terms) {
        Word m;
        m.reserve(pos + t.first.size() + (w.size() - pos - flm));
        m.insert(m.end(), w.begin(), w.begin() + pos);
        m.insert(m.end(), t.first.begin(), t.first.end());
        m.insert(m.end(), w.begin() + pos + flm, w.end());
        sub.terms.emplace_back(std::move(m), field_.mul(c, t.second));
      }
      p = poly_sub(p, sub);
    }
    // out is already sorted descending
    return out;
  }

  bool is_standard(const Word &w) const {
    for (size_t len = 1; len <= w.size(); ++len) {
      if (static_cast<int>(len) > max_lm_len_)
        break;
      // any occurrence is fine to check; suffix check is done by callers
      for (size_t pos = 0; pos + len <= w.size(); ++pos) {
        Word sub(w.begin() + pos, w.begin() + pos + len);
        if (lm_set_.count(sub))
          return false;
      }
    }
    return true;
  }

  // standard monomials by breadth-first growth; throws infinite_dimensional
  // past the bound
  std::vector<Word> quotient_basis(size_t bound = 200000) const {
    if (!complete())
      throw ncgb_error("quotient basis requires a complete basis");
    std::vector<Word> out;
    std::vector<Word> layer = {Word{}};
    if (lm_set_.count(Word{}))
      return {};
    while (!layer.empty()) {
      for (const Word &w : layer) {
        out.push_back(w);
        if (out.size() > bound)
          throw infinite_dimensional();
      }
      std::vector<Word> next;
      for (const Word &w : layer)
        for (int g = 0; g < num_gens_; ++g) {
          Word w2 = w;
          w2.push_back(static_cast<uint16_t>(g));
          // prefixes are standard; only suffixes can hit a leading monomial
          bool ok = true;
          for (size_t len = 1; len <= w2.size() && ok; ++len) {
            if (static_cast<int>(len) > max_lm_len_)
              break;
            Word suf(w2.end() - len, w2.end());
            if (lm_set_.count(suf))
              ok = false;
          }
          if (ok)
            next.push_back(std::move(w2));
        }
      layer = std::move(next);
    }
    return out;
  }

private:
  struct Obstruction {
    size_t degree;
    size_t seq;
    size_t gen_a, gen_b; // suffix of lm(a) = prefix of lm(b), overlap olen
    size_t olen;
    bool operator>(const Obstruction &o) const {
      if (degree != o.degree)
        return degree > o.degree;
      return seq > o.seq;
    }
  };

  F field_;
  int num_gens_;
  MonomialOrder order_;
  int cap_;
  bool capped_ = false;
  bool done_ = false;
  std::vector<NcPoly<F>> basis_;
  std::vector<bool> alive_;
  std::map<Word, size_t> lm_set_; // lm -> basis index (alive only)
  // alive leading monomials bucketed by first letter, for subword scans
  std::vector<std::vector<size_t>> lm_by_first_;
  int max_lm_len_ = 0;
  std::vector<NcPoly<F>> pending_;
  std::priority_queue<Obstruction, std::vector<Obstruction>,
                      std::greater<Obstruction>>
      queue_;
  size_t seq_ = 0;

  NcPoly<F> poly_sub(const NcPoly<F> &a, const NcPoly<F> &b) const {
    NcPoly<F> r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
      if (j == b.terms.size() ||
          (i < a.terms.size() &&
           order_.less(b.terms[j].first, a.terms[i].first))) {
        r.terms.push_back(a.terms[i++]);
      } else if (i == a.terms.size() ||
                 order_.less(a.terms[i].first, b.terms[j].first)) {
        r.terms.emplace_back(b.terms[j].first, field_.neg(b.terms[j].second));
        ++j;
      } else {
        auto c = field_.sub(a.terms[i].second, b.terms[j].second);
        if (!field_.is_zero(c))
          r.terms.emplace_back(a.terms[i].first, c);
        ++i;
        ++j;
      }
    }
    return r;
  }

  void find_reducer(const Word &w, int &gen, size_t &pos) const {
    gen = -1;
    if (lm_by_first_.empty())
      return;
    size_t best_len = 0;
    for (size_t start = 0; start < w.size(); ++start) {
      const size_t avail = w.size() - start;
      for (size_t idx : lm_by_first_[w[start]]) {
        const Word &u = basis_[idx].lm();
        if (u.size() > avail)
          continue;
        if (gen >= 0 && u.size() >= best_len)
          continue; // prefer the shortest match at the leftmost position
        if (std::equal(u.begin() + 1, u.end(), w.begin() + start + 1)) {
          gen = static_cast<int>(idx);
          pos = start;
          best_len = u.size();
        }
      }
      if (gen >= 0)
        return;
    }
  }

  NcPoly<F> s_poly(const Obstruction &ob) const {
    const NcPoly<F> &f = basis_[ob.gen_a];
    const NcPoly<F> &g = basis_[ob.gen_b];
    const Word &u = f.lm();
    const Word &v = g.lm();
    // u and v overlap: suffix(u, olen) == prefix(v, olen)
    Word right(v.begin() + ob.olen, v.end());
    Word left(u.begin(), u.end() - ob.olen);
    NcPoly<F> a; // f * right
    for (const auto &t : f.terms) {
      Word m = t.first;
      m.insert(m.end(), right.begin(), right.end());
      a.terms.emplace_back(std::move(m), t.second);
    }
    normalize_poly(field_, order_, a);
    NcPoly<F> b; // left * g
    for (const auto &t : g.terms) {
      Word m = left;
      m.insert(m.end(), t.first.begin(), t.first.end());
      b.terms.emplace_back(std::move(m), t.second);
    }
    normalize_poly(field_, order_, b);
    return poly_sub(a, b);
  }

  void attach_lm(size_t idx) {
    const Word &u = basis_[idx].lm();
    lm_set_[u] = idx;
    if (lm_by_first_.empty())
      lm_by_first_.resize(static_cast<size_t>(num_gens_));
    lm_by_first_[u[0]].push_back(idx);
    max_lm_len_ = std::max(max_lm_len_, static_cast<int>(u.size()));
  }

  void detach_lm(size_t idx) {
    const Word &u = basis_[idx].lm();
    lm_set_.erase(u);
    auto &bucket = lm_by_first_[u[0]];
    bucket.erase(std::remove(bucket.begin(), bucket.end(), idx), bucket.end());
  }

  void insert_reduced(NcPoly<F> p) {
    p = reduce(std::move(p));
    if (p.is_zero())
      return;
    make_monic(field_, p);
    size_t idx = basis_.size();
    // retire basis elements whose lead is now reducible
    std::vector<size_t> retired;
    for (const auto &[u, j] : lm_set_)
      if (find_subword(u, p.lm()) != static_cast<size_t>(-1))
        retired.push_back(j);
    basis_.push_back(std::move(p));
    alive_.push_back(true);
    attach_lm(idx);
    for (size_t r : retired) {
      detach_lm(r);
      alive_[r] = false;
    }
    for (size_t r : retired)
      pending_retire(r);
    // enqueue overlaps with all alive elements (including itself)
    for (const auto &[lm, j] : lm_set_) {
      add_overlaps(idx, j);
      if (j != idx)
        add_overlaps(j, idx);
    }
  }

  void pending_retire(size_t r) {
    // the retired polynomial still holds valid information; push its
    // reduction back through the queue as a degree-|lm| obstruction
    NcPoly<F> p = basis_[r];
    p = reduce(std::move(p));
    if (!p.is_zero()) {
      make_monic(field_, p);
      // re-insert directly (recursion depth bounded by lead-term descent)
      insert_reduced(std::move(p));
    }
  }

  void add_overlaps(size_t ia, size_t ib) {
    const Word &u = basis_[ia].lm();
    const Word &v = basis_[ib].lm();
    size_t maxo = std::min(u.size(), v.size()) - 1;
    for (size_t olen = 1; olen <= maxo; ++olen) {
      bool ok = true;
      for (size_t i = 0; i < olen; ++i)
        if (u[u.size() - olen + i] != v[i]) {
          ok = false;
          break;
        }
      if (!ok)
        continue;
      queue_.push(Obstruction{u.size() + v.size() - olen, seq_++, ia, ib, olen});
    }
  }
};

// field-independent relation: words with exact rational coefficients
struct NpRelation {
  std::vector<std::pair<std::vector<int>, mpq_class>> terms; // 0-based words
};

template <class F>
NcPoly<F> to_poly(const F &field, const MonomialOrder &order,
                  const NpRelation &rel) {
  NcPoly<F> p;
  for (const auto &[w, c] : rel.terms) {
    Word word;
    for (int g : w)
      word.push_back(static_cast<uint16_t>(g));
    p.terms.emplace_back(std::move(word), field.from_rational(c));
  }
  normalize_poly(field, order, p);
  return p;
}

// JSON: list of {"terms":[{"word":[1-based ints],"coeff":int|"num/den"}]}
std::string relations_to_json(const std::vector<NpRelation> &rels);
std::vector<NpRelation> relations_from_json(const std::string &text,
                                            int *num_gens_out = nullptr);

mpq_class parse_rational(const std::string &s);

} // namespace refl
