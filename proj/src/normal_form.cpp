#include "refl/normal_form.hpp"

#include <deque>
#include <queue>
#include <unordered_map>

namespace refl {

namespace {

Token s_or_t0(int j) { return j == 2 ? tok_t(0) : tok_s(j); } // bold s_2 = t_0

// Simulates the paper's algorithms: repeatedly clear row i by right
// multiplication, prepending the corresponding bold tokens.
ReducedExpr re_een(const Element &w) { // d = 1 (includes e = 1, the symmetric group)
  const GroupParams &params = w.params();
  const int n = params.n;
  std::deque<Token> out;
  Element cur = w;
  auto rmul = [&cur, &params](const Token &tok) {
    cur = multiply(cur, generator_element(tok, params));
  };
  for (int i = n; i >= 2; --i) {
    int c = cur.col(i - 1) + 1; // 1-based column of the row-i entry
    int k = cur.exp(i - 1);
    if (k != 0) {
      // w' := w' s_c ... s_3 s_2 t_k ; RE := t_k s_2 s_3 ... s_c RE
      std::deque<Token> chunk;
      chunk.push_back(tok_t(k));
      if (c >= 2)
        chunk.push_back(tok_t(0)); // bold s_2 = t_0
      for (int j = 3; j <= c; ++j)
        chunk.push_back(tok_s(j));
      for (int j = c; j >= 3; --j)
        rmul(tok_s(j));
      if (c >= 2)
        rmul(tok_t(0));
      rmul(tok_t(k));
      out.insert(out.begin(), chunk.begin(), chunk.end());
      c = 2;
    }
    std::deque<Token> chunk;
    for (int j = i; j >= c + 1; --j)
      chunk.push_back(s_or_t0(j));
    for (int j = c + 1; j <= i; ++j)
      rmul(s_or_t0(j));
    out.insert(out.begin(), chunk.begin(), chunk.end());
  }
  return ReducedExpr{GenWord{params, {out.begin(), out.end()}}};
}

ReducedExpr re_deen(const Element &w) { // d > 1, e > 1
  const GroupParams &params = w.params();
  const int n = params.n;
  std::deque<Token> out;
  Element cur = w;
  auto rmul = [&cur, &params](const Token &tok) {
    cur = multiply(cur, generator_element(tok, params));
  };
  for (int i = n; i >= 2; --i) {
    int c = cur.col(i - 1) + 1;
    int k = cur.exp(i - 1);
    if (k != 0) {
      std::deque<Token> chunk;
      chunk.push_back(tok_t(k));
      if (c >= 2)
        chunk.push_back(tok_t(0));
      for (int j = 3; j <= c; ++j)
        chunk.push_back(tok_s(j));
      for (int j = c; j >= 3; --j)
        rmul(tok_s(j));
      if (c >= 2)
        rmul(tok_t(0));
      rmul(tok_t(k));
      out.insert(out.begin(), chunk.begin(), chunk.end());
      c = 2;
    }
    std::deque<Token> chunk;
    for (int j = i; j >= c + 1; --j)
      chunk.push_back(s_or_t0(j));
    for (int j = c + 1; j <= i; ++j)
      rmul(s_or_t0(j));
    out.insert(out.begin(), chunk.begin(), chunk.end());
  }
  // remaining diagonal entry is zeta_d^k = zeta_de^{e k}
  int res = cur.exp(0);
  int k = res / params.e;
  if (k != 0)
    out.insert(out.begin(), static_cast<size_t>(k), tok_z());
  return ReducedExpr{GenWord{params, {out.begin(), out.end()}}};
}

ReducedExpr re_d1n(const Element &w) { // e = 1, d > 1
  const GroupParams &params = w.params();
  const int n = params.n;
  std::deque<Token> out;
  Element cur = w;
  auto rmul = [&cur, &params](const Token &tok) {
    cur = multiply(cur, generator_element(tok, params));
  };
  for (int i = n; i >= 1; --i) {
    int c = cur.col(i - 1) + 1;
    int k = cur.exp(i - 1);
    if (k != 0) {
      // w' := w' s_c ... s_2 z^{-k} ; RE := z^k s_2 ... s_c RE ; c := 1
      std::deque<Token> chunk(static_cast<size_t>(k), tok_z());
      for (int j = 2; j <= c; ++j)
        chunk.push_back(tok_s(j));
      for (int j = c; j >= 2; --j)
        rmul(tok_s(j));
      for (int j = 0; j < params.d - k; ++j)
        rmul(tok_z()); // z^{-k} = z^{d-k}
      out.insert(out.begin(), chunk.begin(), chunk.end());
      c = 1;
    }
    std::deque<Token> chunk;
    for (int j = i; j >= c + 1; --j)
      chunk.push_back(tok_s(j));
    for (int j = c + 1; j <= i; ++j)
      rmul(tok_s(j));
    out.insert(out.begin(), chunk.begin(), chunk.end());
  }
  return ReducedExpr{GenWord{params, {out.begin(), out.end()}}};
}

} // namespace

ReducedExpr reduced_expression(const Element &w) {
  const GroupParams &params = w.params();
  if (params.d == 1)
    return re_een(w);
  if (params.e == 1)
    return re_d1n(w);
  return re_deen(w);
}

size_t length(const Element &w) { return reduced_expression(w).length(); }

int length_change(const Token &g, const Element &w) {
  const GroupParams &params = w.params();
  if (!token_valid(g, params))
    throw bad_token("invalid generator token");
  const int n = params.n;
  const int de = params.de();
  auto c = [&w](int row) { return w.col(row - 1) + 1; };
  auto a_is_one = [&w](int row) { return w.exp(row - 1) == 0; };
  if (g.kind == TokKind::S && g.index >= 3) {
    int i = g.index;
    if (c(i - 1) < c(i))
      return a_is_one(i) ? +1 : -1;
    return a_is_one(i - 1) ? -1 : +1;
  }
  if (g.kind == TokKind::S && g.index == 2) {
    // transposition of rows 1,2 in G(d,1,n); same two-row analysis with the
    // row-i criteria specialized to i = 2 (entries are zeta_d powers)
    if (c(1) < c(2))
      return a_is_one(2) ? +1 : -1;
    return a_is_one(1) ? -1 : +1;
  }
  if (g.kind == TokKind::T) {
    int k = g.index;
    if (c(1) < c(2))
      return a_is_one(2) ? +1 : -1;
    return (w.exp(0) == ((de - k) % de)) ? -1 : +1;
  }
  // z: the leading zeta_d power of RE_1 cycles; drop is d-1 at the top.
  // For G(d,1,n) the block w_1 is the first-row entry, for G(de,e,n) it is
  // the product of all entries.
  int kz;
  if (params.e == 1) {
    kz = w.exp(0);
  } else {
    int sum = 0;
    for (int i = 0; i < n; ++i)
      sum += w.exp(i);
    kz = ((sum % de) + de) % de / params.e;
  }
  return (kz == params.d - 1) ? -(params.d - 1) : +1;
}

bool is_left_descent(const Token &g, const Element &w) {
  return length_change(g, w) == -1;
}

LongestElements longest_elements(const GroupParams &params) {
  LongestElements out;
  const int n = params.n;
  if (params.d == 1) {
    if (params.e == 1) { // symmetric group: unique longest, length n(n-1)/2
      out.max_length = static_cast<size_t>(n) * (n - 1) / 2;
      out.count = 1;
      std::vector<int> col(n), exp(n, 0);
      for (int i = 0; i < n; ++i)
        col[i] = n - 1 - i;
      out.witnesses.emplace_back(params, std::move(col), std::move(exp));
      return out;
    }
    out.max_length = static_cast<size_t>(n) * (n - 1);
    out.count = 1;
    for (int i = 1; i < n; ++i)
      out.count *= static_cast<unsigned long long>(params.e - 1);
    std::vector<int> ks(n - 1, 1); // k_i in 1..e-1 per row 2..n
    while (true) {
      std::vector<int> col(n), exp(n, 0);
      int sum = 0;
      for (int i = 0; i < n; ++i)
        col[i] = i;
      for (int i = 1; i < n; ++i) {
        exp[i] = ks[i - 1];
        sum += exp[i];
      }
      exp[0] = ((-sum) % params.e + params.e) % params.e;
      out.witnesses.emplace_back(params, std::move(col), std::move(exp));
      int pos = 0;
      while (pos < n - 1 && ++ks[pos] == params.e) {
        ks[pos] = 1;
        ++pos;
      }
      if (pos == n - 1)
        break;
    }
    return out;
  }
  if (params.e == 1) { // G(d,1,n): unique, length n(n+d-2)
    out.max_length = static_cast<size_t>(n) * (n + params.d - 2);
    out.count = 1;
    std::vector<int> col(n), exp(n, params.d - 1);
    for (int i = 0; i < n; ++i)
      col[i] = i;
    out.witnesses.emplace_back(params, std::move(col), std::move(exp));
    return out;
  }
  // G(de,e,n), d > 1, e > 1: length n(n-1) + d-1, count (de-1)^(n-1)
  const int de = params.de();
  out.max_length = static_cast<size_t>(n) * (n - 1) + params.d - 1;
  out.count = 1;
  for (int i = 1; i < n; ++i)
    out.count *= static_cast<unsigned long long>(de - 1);
  std::vector<int> ks(n - 1, 1);
  while (true) {
    std::vector<int> col(n), exp(n, 0);
    int sum = 0;
    for (int i = 0; i < n; ++i)
      col[i] = i;
    for (int i = 1; i < n; ++i) {
      exp[i] = ks[i - 1];
      sum += exp[i];
    }
    // product of entries must be zeta_d^{d-1} = zeta_de^{e(d-1)}
    exp[0] = ((params.e * (params.d - 1) - sum) % de + de) % de;
    out.witnesses.emplace_back(params, std::move(col), std::move(exp));
    int pos = 0;
    while (pos < n - 1 && ++ks[pos] == de) {
      ks[pos] = 1;
      ++pos;
    }
    if (pos == n - 1)
      break;
  }
  return out;
}

Element lambda_power(const GroupParams &params, int k) {
  if (params.d != 1)
    throw group_error("lambda is defined in G(e,e,n) only (d = 1)");
  if (k < 1 || k > params.e - 1)
    throw group_error("k must satisfy 1 <= k <= e-1");
  const int n = params.n;
  std::vector<int> col(n), exp(n, k);
  for (int i = 0; i < n; ++i)
    col[i] = i;
  exp[0] = ((-k * (n - 1)) % params.e + params.e) % params.e;
  return Element(params, std::move(col), std::move(exp));
}

std::vector<std::pair<Element, size_t>> bfs_lengths(const GroupParams &params,
                                                    unsigned long long cap) {
  if (params.order() > cap)
    throw group_too_large("BFS oracle capped at " + std::to_string(cap));
  std::vector<Element> gens;
  for (const Token &tok : generator_tokens(params))
    gens.push_back(generator_element(tok, params));
  std::unordered_map<Element, size_t> dist;
  std::queue<Element> q;
  Element id = Element::identity(params);
  dist[id] = 0;
  q.push(id);
  while (!q.empty()) {
    Element u = q.front();
    q.pop();
    size_t du = dist[u];
    for (const Element &g : gens) {
      Element v = multiply(g, u); // left multiplication, matching l(gw)
      auto it = dist.find(v);
      if (it == dist.end()) {
        dist[v] = du + 1;
        q.push(v);
      }
    }
  }
  return {dist.begin(), dist.end()};
}

} // namespace refl
