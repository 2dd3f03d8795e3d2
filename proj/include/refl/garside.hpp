#pragma once

#include "refl/interval.hpp"

#include <memory>

// The interval Garside monoid B+k(e,e,n) on the simples [1, lambda^k] and
// Delta-power greedy normal forms in its group of fractions B(k)(e,e,n).
// Simples are represented by their Element in G(e,e,n); products, division
// and descent tests are matrix operations.

namespace refl {

struct garside_error : group_error {
  using group_error::group_error;
};

struct GarsideElement {
  int pd = 0;                // power of Delta (left)
  std::vector<Element> seq;  // left-greedy, no trivial or Delta entries

  bool is_positive() const { return pd >= 0; }
  bool is_trivial() const { return pd == 0 && seq.empty(); }
  bool operator==(const GarsideElement &o) const {
    return pd == o.pd && seq == o.seq;
  }
  bool operator!=(const GarsideElement &o) const { return !(*this == o); }
};

// signed atom letter of a group word
struct AtomLetter {
  int atom = 0;
  bool inverse = false;
};

class GarsideMonoid {
public:
  GarsideMonoid(const GroupParams &params, int k,
                unsigned long long cap = 2'000'000ULL);

  const GroupParams &params() const { return params_; }
  int k() const { return k_; }
  const std::vector<Element> &atoms() const { return atoms_; }
  const std::vector<Token> &atom_tokens() const { return atom_tokens_; }
  int num_atoms() const { return static_cast<int>(atoms_.size()); }
  const Element &delta() const { return delta_; }
  int delta_order() const { return delta_order_; }
  const Interval &simples() const { return *simples_; }

  int atom_index(const Token &tok) const; // -1 if not an atom token

  // s = atoms[i] * rest with additive lengths
  bool is_left_descending(const Element &simple, int i) const;
  bool is_right_descending(const Element &simple, int i) const;
  // simple * atoms[i] still divides Delta
  bool is_right_ascending(const Element &simple, int i) const;
  bool is_left_ascending(const Element &simple, int i) const;

  // Delta^p s Delta^{-p}; permutes the simples (and the atoms)
  Element delta_conj(const Element &simple, int p) const;

  GarsideElement one() const { return {}; }
  GarsideElement from_atom(int i, bool inv = false) const;
  GarsideElement from_simple(const Element &s) const;
  GarsideElement delta_power(int p) const { return GarsideElement{p, {}}; }

  GarsideElement mul(const GarsideElement &a, const GarsideElement &b) const;
  GarsideElement inv(const GarsideElement &a) const;

  // left-greedy canonical form of a word over signed atoms
  GarsideElement normal_form(const std::vector<AtomLetter> &word) const;
  GarsideElement normal_form_tokens(const std::vector<Token> &toks) const;

  // maximal simple left-dividing a positive word
  Element head(const std::vector<AtomLetter> &word) const;
  Element head(const GarsideElement &a) const;

  bool equal(const GarsideElement &a, const GarsideElement &b) const {
    return a == b;
  }

  // "d^p . w1 . w2 ..." with simples printed as reduced words
  std::string str(const GarsideElement &a) const;

  // defining relations of the presentation of B+k as token-word pairs
  std::vector<std::pair<std::vector<Token>, std::vector<Token>>>
  defining_relations() const;

  // anti-isomorphism onto the monoid with parameter e-k (x -> x^{-1} when
  // e = 2k); reverse(reverse(a)) == a
  const GarsideMonoid &rev_monoid() const;
  GarsideElement reverse(const GarsideElement &a) const;

  // generator map t_i -> t_{ik mod e} realizing B+1 = B+k; throws unless
  // gcd(k, e) = 1. Returns images of the atom tokens of B+1.
  std::vector<Token> iso_from_corran_picantin() const;
  // checks every defining relation of B+1 maps to equal normal forms
  bool iso_check() const;

  // all reduced expressions of w map to one monoid element
  bool matsumoto_check(const Element &w, size_t max_len = 8) const;

private:
  GroupParams params_;
  int k_;
  std::vector<Element> atoms_;
  std::vector<Token> atom_tokens_;
  Element delta_;
  int delta_order_ = 1;
  std::shared_ptr<Interval> simples_;
  mutable std::shared_ptr<GarsideMonoid> rev_;

  void normalize(GarsideElement &a) const;
  // make the pair (u, v) left-weighted; returns true if anything moved
  bool slide(Element &u, Element &v) const;
};

} // namespace refl
