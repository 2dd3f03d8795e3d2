#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic for the complex reflection groups G(de,e,n), realized as
// monomial matrices over de-th roots of unity. An element stores, per row,
// the column of its nonzero entry and the exponent of that entry, so all
// group operations are permutation/residue arithmetic.

namespace refl {

struct group_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct param_mismatch : group_error {
  param_mismatch() : group_error("elements live in different groups") {}
};
struct bad_token : group_error {
  using group_error::group_error;
};
struct group_too_large : group_error {
  using group_error::group_error;
};

struct GroupParams {
  int d = 1;
  int e = 1;
  int n = 2;

  GroupParams() = default;
  GroupParams(int d_, int e_, int n_);

  int de() const { return d * e; }
  // d^n e^(n-1) n!; throws group_too_large past 2^62.
  unsigned long long order() const;

  bool operator==(const GroupParams &o) const {
    return d == o.d && e == o.e && n == o.n;
  }
  bool operator!=(const GroupParams &o) const { return !(*this == o); }
};

enum class TokKind : uint8_t { T, S, Z };

struct Token {
  TokKind kind;
  int index; // t: 0..de-1, s: 2..n, z: unused (0)

  bool operator==(const Token &o) const {
    return kind == o.kind && index == o.index;
  }
  std::string str(const GroupParams &params) const;
};

Token tok_t(int i);
Token tok_s(int j);
Token tok_z();

struct GenWord {
  GroupParams params;
  std::vector<Token> tokens;

  size_t size() const { return tokens.size(); }
  std::string str() const;
};

// Valid tokens for params; "s2" is parsed as t0 unless e = 1, where it is a
// genuine transposition generator. t-tokens are rejected in G(d,1,n) and z
// is rejected when d = 1.
bool token_valid(const Token &tok, const GroupParams &params);
GenWord parse_word(const std::string &text, const GroupParams &params);

class Element {
public:
  Element() = default;
  static Element identity(const GroupParams &params);
  // col entries are 0-based rows->columns, exp entries reduced mod de.
  Element(const GroupParams &params, std::vector<int> col, std::vector<int> exp);

  const GroupParams &params() const { return params_; }
  int n() const { return params_.n; }
  // 0-based accessors
  int col(int row) const { return col_[row]; }
  int exp(int row) const { return exp_[row]; }
  const std::vector<int> &cols() const { return col_; }
  const std::vector<int> &exps() const { return exp_; }

  bool is_identity() const;
  bool is_diagonal() const;

  bool operator==(const Element &o) const {
    return params_ == o.params_ && col_ == o.col_ && exp_ == o.exp_;
  }
  bool operator!=(const Element &o) const { return !(*this == o); }
  bool operator<(const Element &o) const; // arbitrary total order, for maps

  size_t hash() const;
  std::string str() const; // compact "(cols|exps)" form

private:
  GroupParams params_;
  std::vector<int> col_;
  std::vector<int> exp_;
};

Element generator_element(const Token &tok, const GroupParams &params);
Element multiply(const Element &x, const Element &y);
Element inverse(const Element &x);
// transpose; the length-preserving anti-automorphism t_i -> t_{-i}, s_j -> s_j
Element transpose(const Element &x);
Element evaluate(const GenWord &word);
Element power(const Element &x, long long k);

// All generator matrices of the presentation attached to params, in the
// canonical order (t_0..t_{de-1}, s_3..s_n | z first when d > 1; z, s_2..s_n
// when e = 1). Used by BFS oracles and enumeration tests.
std::vector<Token> generator_tokens(const GroupParams &params);

// Defining relations of the presentation (Corran-Picantin for d = 1,
// Corran-Lee-Lee for d > 1, classical for e = 1), as pairs of words that
// must evaluate to equal elements.
std::vector<std::pair<GenWord, GenWord>> relation_catalog(const GroupParams &params);

// Yields each group element exactly once.
void enumerate_group(const GroupParams &params,
                     const std::function<void(const Element &)> &fn,
                     unsigned long long cap = 10'000'000ULL);
std::vector<Element> all_elements(const GroupParams &params,
                                  unsigned long long cap = 10'000'000ULL);

// JSON element format {"d":..,"e":..,"n":..,"col":[1-based],"exp":[..]}
std::string element_to_json(const Element &x);
Element element_from_json(const std::string &json_text);

} // namespace refl

template <> struct std::hash<refl::Element> {
  size_t operator()(const refl::Element &x) const { return x.hash(); }
};
