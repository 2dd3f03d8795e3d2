#include "refl/homology.hpp"

#include <algorithm>
#include <sstream>

namespace refl {

bool ge_less(const GarsideElement &a, const GarsideElement &b) {
  if (a.pd != b.pd)
    return a.pd < b.pd;
  return std::lexicographical_compare(a.seq.begin(), a.seq.end(),
                                      b.seq.begin(), b.seq.end());
}

HomologyComplex::HomologyComplex(const GarsideMonoid &M) : M_(M) {
  const int e = M.params().e;
  const int n = M.params().n;
  rank_.assign(M.num_atoms(), 0);
  // s_n < s_{n-1} < ... < s_3 < t_0 < t_1 < ... < t_{e-1}
  for (int i = 0; i < e; ++i)
    rank_[i] = (n - 2) + i;
  for (int j = 3; j <= n; ++j)
    rank_[e + (j - 3)] = n - j;
  by_rank_.assign(M.num_atoms(), 0);
  for (int a = 0; a < M.num_atoms(); ++a)
    by_rank_[rank_[a]] = a;
}

Element HomologyComplex::right_lcm(const Element &a, const Element &b) const {
  // u <=_r w iff transpose(u) <= transpose(w); transpose preserves D_k
  return transpose(M_.simples().join(transpose(a), transpose(b)));
}

Element HomologyComplex::cell_lcm(const Cell &c) const {
  Element acc = Element::identity(M_.params());
  for (int atom : c)
    acc = right_lcm(acc, M_.atoms()[atom]);
  return acc;
}

int HomologyComplex::least_right_divisor(const Element &simple) const {
  for (int atom : by_rank_)
    if (M_.is_right_descending(simple, atom))
      return atom;
  return -1;
}

int HomologyComplex::least_right_divisor(const GarsideElement &x) const {
  if (x.is_trivial())
    return -1;
  if (!x.is_positive())
    throw homology_error("coefficient left the monoid");
  for (int atom : by_rank_) {
    GarsideElement q = M_.mul(x, M_.from_atom(atom, true));
    if (q.is_positive())
      return atom;
  }
  return -1;
}

std::vector<Cell> HomologyComplex::cells(int r) const {
  if (r < 0)
    throw homology_error("negative degree");
  if (r == 0)
    return {Cell{}};
  std::vector<Cell> prev = {Cell{}};
  for (int deg = 1; deg <= r; ++deg) {
    std::vector<Cell> next;
    for (int atom : by_rank_) {
      for (const Cell &c : prev) {
        if (!c.empty() && rank_[atom] >= rank_[c.front()])
          continue;
        Cell cand;
        cand.push_back(atom);
        cand.insert(cand.end(), c.begin(), c.end());
        // tail conditions hold by induction; check the new head
        if (least_right_divisor(cell_lcm(cand)) == atom)
          next.push_back(std::move(cand));
      }
    }
    std::sort(next.begin(), next.end(), [this](const Cell &a, const Cell &b) {
      std::vector<int> ra, rb;
      for (int x : a)
        ra.push_back(rank_[x]);
      for (int x : b)
        rb.push_back(rank_[x]);
      return ra < rb;
    });
    prev = std::move(next);
  }
  return prev;
}

namespace {
void chain_add(Chain &ch, const ChainKey &key, long long c) {
  if (c == 0)
    return;
  auto it = ch.find(key);
  if (it == ch.end()) {
    ch.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0)
      ch.erase(it);
  }
}
Chain chain_scale_left(const GarsideMonoid &M, const Chain &ch,
                       const GarsideElement &m) {
  Chain out;
  for (const auto &[key, c] : ch)
    chain_add(out, ChainKey{M.mul(m, key.coeff), key.cell}, c);
  return out;
}
} // namespace

Chain HomologyComplex::s_map(const GarsideElement &x, const Cell &A,
                             int r) const {
  Element lcmA = cell_lcm(A);
  GarsideElement it = M_.mul(x, M_.from_simple(lcmA));
  if (it.is_trivial())
    return {};
  int alpha = least_right_divisor(it);
  if (alpha < 0)
    throw homology_error("positive element with no right divisor");
  Element alphaA =
      multiply(right_lcm(M_.atoms()[alpha], lcmA), inverse(lcmA));
  GarsideElement yy = M_.mul(x, M_.inv(M_.from_simple(alphaA)));
  if (!yy.is_positive())
    throw homology_error("section produced a non-positive coefficient");
  if (r > 0 && alpha == A.front())
    return {};
  Cell bigger;
  bigger.push_back(alpha);
  bigger.insert(bigger.end(), A.begin(), A.end());
  Chain out = s_map(
      chain_scale_left(M_, u_map(M_.from_simple(alphaA), A, r), yy), r);
  chain_add(out, ChainKey{yy, bigger}, 1);
  return out;
}

Chain HomologyComplex::s_map(const Chain &ch, int r) const {
  Chain out;
  for (const auto &[key, c] : ch) {
    Chain part = s_map(key.coeff, key.cell, r);
    for (const auto &[k2, c2] : part)
      chain_add(out, k2, c * c2);
  }
  return out;
}

Chain HomologyComplex::u_map(const GarsideElement &x, const Cell &A,
                             int r) const {
  if (r == 0) {
    // u_0(f[0]) = [0]
    Chain out;
    chain_add(out, ChainKey{M_.one(), Cell{}}, 1);
    return out;
  }
  return s_map(boundary(x, A, r), r - 1);
}

Chain HomologyComplex::u_map(const Chain &ch, int r) const {
  Chain out;
  for (const auto &[key, c] : ch) {
    Chain part = u_map(key.coeff, key.cell, r);
    for (const auto &[k2, c2] : part)
      chain_add(out, k2, c * c2);
  }
  return out;
}

Chain HomologyComplex::boundary(const GarsideElement &x, const Cell &A,
                                int r) const {
  if (static_cast<int>(A.size()) != r)
    throw homology_error("cell degree mismatch");
  if (r == 0)
    return {};
  Chain out;
  if (r == 1) {
    // x (alpha [0] - [0])
    chain_add(out, ChainKey{M_.mul(x, M_.from_atom(A[0])), Cell{}}, 1);
    chain_add(out, ChainKey{x, Cell{}}, -1);
    return out;
  }
  int alpha = A.front();
  Cell tail(A.begin() + 1, A.end());
  Element lcmT = cell_lcm(tail);
  Element alphaA =
      multiply(right_lcm(M_.atoms()[alpha], lcmT), inverse(lcmT));
  GarsideElement coeff = M_.from_simple(alphaA);
  Chain ret = u_map(coeff, tail, r - 1);
  for (auto &kv : ret)
    kv.second = -kv.second;
  chain_add(ret, ChainKey{coeff, tail}, 1);
  return chain_scale_left(M_, ret, x);
}

Chain HomologyComplex::boundary(const Chain &ch, int r) const {
  Chain out;
  for (const auto &[key, c] : ch) {
    Chain part = boundary(key.coeff, key.cell, r);
    for (const auto &[k2, c2] : part)
      chain_add(out, k2, c * c2);
  }
  return out;
}

IntMatrix HomologyComplex::differential_matrix(int r) const {
  std::vector<Cell> rows = cells(r - 1);
  std::vector<Cell> cols = cells(r);
  std::map<Cell, size_t> row_index;
  for (size_t i = 0; i < rows.size(); ++i)
    row_index[rows[i]] = i;
  IntMatrix m(rows.size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    Chain ch = boundary(M_.one(), cols[j], r);
    for (const auto &[key, c] : ch)
      m.at(row_index.at(key.cell), j) += static_cast<long>(c); // trivialized
  }
  return m;
}

std::string HomologyComplex::AbelianGroup::str() const {
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1)
      os << "^" << free_rank;
    first = false;
  }
  for (const mpz_class &t : torsion) {
    if (!first)
      os << " x ";
    os << "Z/" << t.get_str();
    first = false;
  }
  if (first)
    os << "0";
  return os.str();
}

HomologyComplex::AbelianGroup HomologyComplex::homology_group(int r) const {
  if (r < 1)
    throw homology_error("degree must be >= 1");
  IntMatrix dr = differential_matrix(r);
  IntMatrix drp1 = differential_matrix(r + 1);
  size_t ker = dr.cols - int_rank(dr);
  SmithForm snf = smith_normal_form(drp1);
  AbelianGroup out;
  out.free_rank = ker - snf.rank();
  for (const mpz_class &f : snf.invariant_factors)
    if (f > 1)
      out.torsion.push_back(f);
  return out;
}

HomologyComplex::AbelianGroup homology_of(const GroupParams &params, int k,
                                          int degree) {
  GarsideMonoid M(params, k);
  HomologyComplex H(M);
  return H.homology_group(degree);
}

} // namespace refl
