#pragma once

#include "refl/garside.hpp"
#include "refl/snf.hpp"

#include <map>

// The Dehornoy-Lafont order complex of B+k(e,e,n): cells are increasing
// atom tuples under the order s_n < ... < s_3 < t_0 < ... < t_{e-1}, the
// differential is the recursive one (via the section s_r and u_r = s o d),
// and integral homology comes out of Smith normal form of the trivialized
// matrices.

namespace refl {

struct homology_error : group_error {
  using group_error::group_error;
};

using Cell = std::vector<int>; // monoid atom indices, increasing in the
                               // homology atom order

bool ge_less(const GarsideElement &a, const GarsideElement &b);

struct ChainKey {
  GarsideElement coeff; // monoid element
  Cell cell;
  bool operator<(const ChainKey &o) const {
    if (cell != o.cell)
      return cell < o.cell;
    return ge_less(coeff, o.coeff);
  }
  bool operator==(const ChainKey &o) const {
    return cell == o.cell && coeff == o.coeff;
  }
};

using Chain = std::map<ChainKey, long long>;

class HomologyComplex {
public:
  explicit HomologyComplex(const GarsideMonoid &M);

  const GarsideMonoid &monoid() const { return M_; }
  // position of atom i in the homology order (0 = least)
  int rank(int atom) const { return rank_[atom]; }
  // atoms sorted by rank
  const std::vector<int> &ordered_atoms() const { return by_rank_; }

  // least common right-multiple of two simples (a simple again)
  Element right_lcm(const Element &a, const Element &b) const;
  Element cell_lcm(const Cell &c) const;
  // least atom (homology order) right-dividing a positive element; -1 if
  // the element is trivial
  int least_right_divisor(const GarsideElement &x) const;
  int least_right_divisor(const Element &simple) const;

  std::vector<Cell> cells(int r) const;

  // differential of a single chain generator x[A] of degree r
  Chain boundary(const GarsideElement &x, const Cell &A, int r) const;
  Chain boundary(const Chain &ch, int r) const;

  // d_r with trivial coefficients; rows = (r-1)-cells, cols = r-cells
  IntMatrix differential_matrix(int r) const;

  struct AbelianGroup {
    size_t free_rank = 0;
    std::vector<mpz_class> torsion; // invariant factors > 1
    std::string str() const;
    bool operator==(const AbelianGroup &o) const {
      return free_rank == o.free_rank && torsion == o.torsion;
    }
  };
  AbelianGroup homology_group(int r) const;

private:
  const GarsideMonoid &M_;
  std::vector<int> rank_;
  std::vector<int> by_rank_;

  Chain s_map(const GarsideElement &x, const Cell &A, int r) const;
  Chain s_map(const Chain &ch, int r) const;
  Chain u_map(const GarsideElement &x, const Cell &A, int r) const;
  Chain u_map(const Chain &ch, int r) const;
};

// convenience: H_r(B(k)(e,e,n), Z)
HomologyComplex::AbelianGroup homology_of(const GroupParams &params, int k,
                                          int degree);

} // namespace refl
