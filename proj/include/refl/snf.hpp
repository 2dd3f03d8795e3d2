#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

// Integer matrices and Smith normal form over Z with exact bignum entries.

namespace refl {

struct IntMatrix {
  size_t rows = 0, cols = 0;
  std::vector<mpz_class> a; // row-major

  IntMatrix() = default;
  IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
  mpz_class &at(size_t i, size_t j) { return a[i * cols + j]; }
  const mpz_class &at(size_t i, size_t j) const { return a[i * cols + j]; }

  IntMatrix transposed() const;
  // "rows cols" header then row-major space-separated entries
  std::string to_text() const;
  static IntMatrix from_text(const std::string &text);
};

struct SmithForm {
  std::vector<mpz_class> invariant_factors; // d_1 | d_2 | ..., all positive
  size_t rank() const { return invariant_factors.size(); }
};

SmithForm smith_normal_form(IntMatrix m);
size_t int_rank(IntMatrix m); // rank over Q

// gcd of all k x k minors, brute force; oracle for SNF tests
mpz_class minor_gcd(const IntMatrix &m, size_t k);

} // namespace refl
