#include "refl/snf.hpp"

#include <sstream>
#include <stdexcept>

namespace refl {

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols, rows);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j)
      t.at(j, i) = at(i, j);
  return t;
}

std::string IntMatrix::to_text() const {
  std::ostringstream os;
  os << rows << " " << cols << "\n";
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j)
      os << (j ? " " : "") << at(i, j).get_str();
    os << "\n";
  }
  return os.str();
}

IntMatrix IntMatrix::from_text(const std::string &text) {
  std::istringstream is(text);
  size_t r = 0, c = 0;
  if (!(is >> r >> c))
    throw std::runtime_error("bad matrix header");
  IntMatrix m(r, c);
  for (size_t i = 0; i < r * c; ++i) {
    std::string tok;
    if (!(is >> tok))
      throw std::runtime_error("bad matrix body");
    m.a[i] = mpz_class(tok);
  }
  return m;
}

namespace {

// position of the entry with minimal nonzero |value| in the trailing block
bool min_pivot(const IntMatrix &m, size_t s, size_t &pi, size_t &pj) {
  bool found = false;
  mpz_class best;
  for (size_t i = s; i < m.rows; ++i)
    for (size_t j = s; j < m.cols; ++j) {
      if (m.at(i, j) == 0)
        continue;
      mpz_class v = abs(m.at(i, j));
      if (!found || v < best) {
        best = v;
        pi = i;
        pj = j;
        found = true;
      }
    }
  return found;
}

} // namespace

SmithForm smith_normal_form(IntMatrix m) {
  SmithForm out;
  size_t s = 0;
  const size_t lim = std::min(m.rows, m.cols);
  while (s < lim) {
    size_t pi = s, pj = s;
    if (!min_pivot(m, s, pi, pj))
      break;
    // move pivot to (s, s)
    if (pi != s)
      for (size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(pi, j), m.at(s, j));
    if (pj != s)
      for (size_t i = 0; i < m.rows; ++i)
        std::swap(m.at(i, pj), m.at(i, s));
    // clear row and column; restart if a remainder appears (its absolute
    // value is strictly smaller, so this terminates)
    bool dirty = false;
    for (size_t i = s + 1; i < m.rows && !dirty; ++i) {
      if (m.at(i, s) == 0)
        continue;
      mpz_class q = m.at(i, s) / m.at(s, s); // truncated division
      for (size_t j = s; j < m.cols; ++j)
        m.at(i, j) -= q * m.at(s, j);
      if (m.at(i, s) != 0)
        dirty = true;
    }
    if (dirty)
      continue;
    for (size_t j = s + 1; j < m.cols && !dirty; ++j) {
      if (m.at(s, j) == 0)
        continue;
      mpz_class q = m.at(s, j) / m.at(s, s);
      for (size_t i = s; i < m.rows; ++i)
        m.at(i, j) -= q * m.at(i, s);
      if (m.at(s, j) != 0)
        dirty = true;
    }
    if (dirty)
      continue;
    // enforce divisibility: fold any non-multiple into column s
    bool fixed = false;
    for (size_t i = s + 1; i < m.rows && !fixed; ++i)
      for (size_t j = s + 1; j < m.cols && !fixed; ++j)
        if (m.at(i, j) % m.at(s, s) != 0) {
          for (size_t jj = s; jj < m.cols; ++jj)
            m.at(s, jj) += m.at(i, jj);
          fixed = true;
        }
    if (fixed)
      continue;
    ++s;
  }
  for (size_t i = 0; i < s; ++i)
    out.invariant_factors.push_back(abs(m.at(i, i)));
  return out;
}

size_t int_rank(IntMatrix m) { return smith_normal_form(std::move(m)).rank(); }

mpz_class minor_gcd(const IntMatrix &m, size_t k) {
  if (k == 0 || k > std::min(m.rows, m.cols))
    return 0;
  std::vector<size_t> ri(k), ci(k);
  mpz_class g = 0;
  // iterate over k-subsets of rows and columns
  std::vector<size_t> rsel(k), csel(k);
  for (size_t i = 0; i < k; ++i)
    rsel[i] = i;
  auto next_subset = [](std::vector<size_t> &sel, size_t n) {
    size_t k2 = sel.size();
    size_t i = k2;
    while (i-- > 0) {
      if (sel[i] + (k2 - i) < n) {
        ++sel[i];
        for (size_t j = i + 1; j < k2; ++j)
          sel[j] = sel[j - 1] + 1;
        return true;
      }
    }
    return false;
  };
  auto det = [&](const std::vector<size_t> &rs, const std::vector<size_t> &cs) {
    // fraction-free Gaussian (Bareiss) on the k x k minor
    std::vector<mpz_class> d(k * k);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j)
        d[i * k + j] = m.at(rs[i], cs[j]);
    mpz_class prev = 1;
    int sign = 1;
    for (size_t p = 0; p < k; ++p) {
      if (d[p * k + p] == 0) {
        size_t q = p + 1;
        while (q < k && d[q * k + p] == 0)
          ++q;
        if (q == k)
          return mpz_class(0);
        for (size_t j = 0; j < k; ++j)
          std::swap(d[p * k + j], d[q * k + j]);
        sign = -sign;
      }
      for (size_t i = p + 1; i < k; ++i)
        for (size_t j = p + 1; j < k; ++j) {
          d[i * k + j] = d[i * k + j] * d[p * k + p] - d[i * k + p] * d[p * k + j];
          d[i * k + j] /= prev;
        }
      prev = d[p * k + p];
    }
    return mpz_class(sign * d[(k - 1) * k + (k - 1)]);
  };
  do {
    for (size_t i = 0; i < k; ++i)
      csel[i] = i;
    do {
      mpz_class dd = det(rsel, csel);
      g = gcd(g, dd);
    } while (next_subset(csel, m.cols));
  } while (next_subset(rsel, m.rows));
  return abs(g);
}

} // namespace refl
