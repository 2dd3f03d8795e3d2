#pragma once

#include "refl/normal_form.hpp"

#include <optional>
#include <unordered_map>

// Divisibility orders on G(e,e,n), the interval [1, lambda^k] via the bullet
// criterion, and its lattice structure (meets/joins for both orders).

namespace refl {

struct interval_error : group_error {
  using group_error::group_error;
};

// l(u) + l(u^{-1} w) == l(w)
bool left_divides(const Element &u, const Element &w);
// l(w u^{-1}) + l(u) == l(w)
bool right_divides(const Element &u, const Element &w);

// Indices (0-based rows) whose nonzero entry sits at a bullet position:
// no earlier row has its entry in a column weakly to the left.
std::vector<bool> bullet_rows(const Element &w);

// Matrix criterion: every nonzero entry at a non-bullet index is 1 or
// zeta_e^k. Agrees with left_divides(w, lambda^k).
bool divides_lambda_k(const Element &w, int k);

// {u : u <= w} == {u : u <=_r w}; enumerates the group.
bool is_balanced(const Element &w, unsigned long long cap = 200000);

class Interval {
public:
  // Builds [1, lambda^k] in G(e,e,n) two ways (RE_i shape catalog and
  // exhaustive divisor scan) and requires agreement.
  Interval(const GroupParams &params, int k,
           unsigned long long cap = 2'000'000ULL);

  const GroupParams &params() const { return params_; }
  int k() const { return k_; }
  const Element &top() const { return top_; } // lambda^k
  const std::vector<Element> &elements() const { return elements_; }
  size_t size() const { return elements_.size(); }
  int index_of(const Element &w) const; // -1 if absent
  bool contains(const Element &w) const { return index_of(w) >= 0; }

  // least common left-multiple inside the interval (always exists; the
  // interval is bounded by lambda^k); computed by the atom-square recursion
  Element join(const Element &u, const Element &v) const;
  // greatest common left-divisor (join of the common-divisor set)
  Element meet(const Element &u, const Element &v) const;
  // same for the right order, via the transpose anti-automorphism
  Element join_r(const Element &u, const Element &v) const;
  Element meet_r(const Element &u, const Element &v) const;

  // covers of the Hasse diagram of (interval, left divisibility)
  std::vector<std::pair<int, int>> hasse_covers() const;
  std::string hasse_dot() const;

  struct LatticeReport {
    bool ok = true;
    size_t pairs = 0;
    std::string failure; // first violation, if any
  };
  // exhaustive meet/join existence + extremality check for both orders
  LatticeReport verify_lattice() const;

private:
  GroupParams params_;
  int k_;
  Element top_;
  std::vector<Element> elements_;
  std::unordered_map<Element, int> index_;
  mutable std::unordered_map<uint64_t, Element> join_memo_;
  mutable std::unordered_map<uint64_t, uint8_t> join_inflight_;

  Element join_rec(const Element &u, const Element &v, int depth) const;
  Element atom_join(const Token &x, const Token &y) const;
};

// Catalog count prod_{i=2}^n (e + 2i - 2); the brute force is authoritative,
// the constructor cross-checks.
unsigned long long predicted_interval_size(const GroupParams &params);

} // namespace refl
