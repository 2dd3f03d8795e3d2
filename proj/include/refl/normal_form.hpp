#pragma once

#include "refl/group.hpp"

// Geodesic normal forms RE(w) over the Corran-Picantin / Corran-Lee-Lee /
// classical generators, the length function they compute, descent predicates
// read off the matrix in O(n), and the elements of maximal length.

namespace refl {

struct ReducedExpr {
  GenWord word;
  size_t length() const { return word.size(); }
};

// The canonical geodesic word emitted by the row-reduction algorithm for the
// family of params (dispatch: d = 1 -> G(e,e,n); e = 1 -> G(d,1,n); general
// otherwise). evaluate(word) == w and |word| == length(w).
ReducedExpr reduced_expression(const Element &w);

size_t length(const Element &w);

// Signed change length(g*w) - length(w), from the matrix criteria alone.
// +-1 for t/s generators; z can drop by d-1.
int length_change(const Token &g, const Element &w);

// true iff length(g*w) == length(w) - 1
bool is_left_descent(const Token &g, const Element &w);

struct LongestElements {
  size_t max_length = 0;
  unsigned long long count = 0;
  std::vector<Element> witnesses; // all of them, constructed directly
};

LongestElements longest_elements(const GroupParams &params);

// lambda^k in G(e,e,n): diagonal, exp(i) = k for i >= 2, exp(1) = -k(n-1).
Element lambda_power(const GroupParams &params, int k);

// Brute-force geodesic distances over the generating set, by directed BFS
// from the identity (words use generators only, no inverses; z has order d).
// Returns map element -> distance for the whole group.
std::vector<std::pair<Element, size_t>> bfs_lengths(const GroupParams &params,
                                                    unsigned long long cap = 200000);

} // namespace refl
