#include "refl/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace refl {

GroupParams::GroupParams(int d_, int e_, int n_) : d(d_), e(e_), n(n_) {
  if (d < 1 || e < 1 || n < 2)
    throw group_error("inadmissible parameters (need d >= 1, e >= 1, n >= 2)");
}

unsigned long long GroupParams::order() const {
  unsigned long long r = 1;
  auto mul = [&r](unsigned long long f) {
    if (f != 0 && r > (1ULL << 62) / f)
      throw group_too_large("group order exceeds 2^62");
    r *= f;
  };
  for (int i = 0; i < n; ++i)
    mul(static_cast<unsigned long long>(d));
  for (int i = 0; i + 1 < n; ++i)
    mul(static_cast<unsigned long long>(e));
  for (int i = 2; i <= n; ++i)
    mul(static_cast<unsigned long long>(i));
  return r;
}

Token tok_t(int i) { return Token{TokKind::T, i}; }
Token tok_s(int j) { return Token{TokKind::S, j}; }
Token tok_z() { return Token{TokKind::Z, 0}; }

std::string Token::str(const GroupParams &) const {
  switch (kind) {
  case TokKind::T:
    return "t" + std::to_string(index);
  case TokKind::S:
    return "s" + std::to_string(index);
  case TokKind::Z:
    return "z";
  }
  return "?";
}

std::string GenWord::str() const {
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i)
      out += ' ';
    out += tokens[i].str(params);
  }
  return out;
}

bool token_valid(const Token &tok, const GroupParams &params) {
  switch (tok.kind) {
  case TokKind::T:
    if (params.e == 1 && params.d > 1)
      return false; // G(d,1,n) uses z, s_2..s_n
    return tok.index >= 0 && tok.index < params.de();
  case TokKind::S:
    if (tok.index == 2)
      return params.e == 1 && params.d > 1;
    return tok.index >= 3 && tok.index <= params.n;
  case TokKind::Z:
    return params.d > 1;
  }
  return false;
}

GenWord parse_word(const std::string &text, const GroupParams &params) {
  GenWord w{params, {}};
  std::string cur;
  auto flush = [&]() {
    if (cur.empty())
      return;
    Token tok{};
    if (cur == "z") {
      tok = tok_z();
      if (params.d == 1)
        throw bad_token("token 'z' not allowed when d = 1");
    } else if (cur[0] == 't' || cur[0] == 's') {
      int idx = 0;
      try {
        size_t pos = 0;
        idx = std::stoi(cur.substr(1), &pos);
        if (pos + 1 != cur.size())
          throw std::invalid_argument(cur);
      } catch (const std::exception &) {
        throw bad_token("unknown token '" + cur + "'");
      }
      tok = (cur[0] == 't') ? tok_t(idx) : tok_s(idx);
      if (tok.kind == TokKind::S && tok.index == 2 && params.e > 1)
        tok = tok_t(0); // s_2 := t_0
      if (!token_valid(tok, params))
        throw bad_token("token '" + cur + "' out of range for these parameters");
    } else {
      throw bad_token("unknown token '" + cur + "'");
    }
    w.tokens.push_back(tok);
    cur.clear();
  };
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '.')
      flush();
    else
      cur += c;
  }
  flush();
  return w;
}

Element Element::identity(const GroupParams &params) {
  std::vector<int> col(params.n), exp(params.n, 0);
  std::iota(col.begin(), col.end(), 0);
  return Element(params, std::move(col), std::move(exp));
}

Element::Element(const GroupParams &params, std::vector<int> col,
                 std::vector<int> exp)
    : params_(params), col_(std::move(col)), exp_(std::move(exp)) {
  const int de = params_.de();
  for (int &v : exp_)
    v = ((v % de) + de) % de;
}

bool Element::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (col_[i] != i || exp_[i] != 0)
      return false;
  return true;
}

bool Element::is_diagonal() const {
  for (int i = 0; i < n(); ++i)
    if (col_[i] != i)
      return false;
  return true;
}

bool Element::operator<(const Element &o) const {
  if (col_ != o.col_)
    return col_ < o.col_;
  return exp_ < o.exp_;
}

size_t Element::hash() const {
  size_t h = 0x9e3779b97f4a7c15ULL;
  for (int i = 0; i < n(); ++i) {
    h ^= static_cast<size_t>(col_[i] * 131 + exp_[i]) + 0x9e3779b9 + (h << 6) +
         (h >> 2);
  }
  return h;
}

std::string Element::str() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < n(); ++i)
    os << (i ? "," : "") << col_[i] + 1;
  os << "|";
  for (int i = 0; i < n(); ++i)
    os << (i ? "," : "") << exp_[i];
  os << ")";
  return os.str();
}

Element generator_element(const Token &tok, const GroupParams &params) {
  if (!token_valid(tok, params))
    throw bad_token("token '" + tok.str(params) + "' invalid for these parameters");
  const int n = params.n;
  std::vector<int> col(n), exp(n, 0);
  std::iota(col.begin(), col.end(), 0);
  switch (tok.kind) {
  case TokKind::T:
    // row 1 carries zeta^{-i}, row 2 carries zeta^{i}
    col[0] = 1;
    col[1] = 0;
    exp[0] = -tok.index;
    exp[1] = tok.index;
    break;
  case TokKind::S:
    std::swap(col[tok.index - 2], col[tok.index - 1]);
    break;
  case TokKind::Z:
    exp[0] = params.e; // zeta_de^e = zeta_d
    break;
  }
  return Element(params, std::move(col), std::move(exp));
}

Element multiply(const Element &x, const Element &y) {
  if (x.params() != y.params())
    throw param_mismatch();
  const int n = x.n();
  std::vector<int> col(n), exp(n);
  for (int i = 0; i < n; ++i) {
    col[i] = y.col(x.col(i));
    exp[i] = x.exp(i) + y.exp(x.col(i));
  }
  return Element(x.params(), std::move(col), std::move(exp));
}

Element inverse(const Element &x) {
  const int n = x.n();
  std::vector<int> col(n), exp(n);
  for (int i = 0; i < n; ++i) {
    col[x.col(i)] = i;
    exp[x.col(i)] = -x.exp(i);
  }
  return Element(x.params(), std::move(col), std::move(exp));
}

Element transpose(const Element &x) {
  const int n = x.n();
  std::vector<int> col(n), exp(n);
  for (int i = 0; i < n; ++i) {
    col[x.col(i)] = i;
    exp[x.col(i)] = x.exp(i);
  }
  return Element(x.params(), std::move(col), std::move(exp));
}

Element evaluate(const GenWord &word) {
  Element acc = Element::identity(word.params);
  for (const Token &tok : word.tokens)
    acc = multiply(acc, generator_element(tok, word.params));
  return acc;
}

Element power(const Element &x, long long k) {
  Element acc = Element::identity(x.params());
  Element base = k >= 0 ? x : inverse(x);
  unsigned long long m = static_cast<unsigned long long>(k >= 0 ? k : -k);
  while (m) {
    if (m & 1)
      acc = multiply(acc, base);
    base = multiply(base, base);
    m >>= 1;
  }
  return acc;
}

std::vector<Token> generator_tokens(const GroupParams &params) {
  std::vector<Token> out;
  if (params.d > 1)
    out.push_back(tok_z());
  if (params.e == 1 && params.d > 1) {
    for (int j = 2; j <= params.n; ++j)
      out.push_back(tok_s(j));
  } else {
    for (int i = 0; i < params.de(); ++i)
      out.push_back(tok_t(i));
    for (int j = 3; j <= params.n; ++j)
      out.push_back(tok_s(j));
  }
  return out;
}

std::vector<std::pair<GenWord, GenWord>>
relation_catalog(const GroupParams &params) {
  std::vector<std::pair<GenWord, GenWord>> rels;
  auto W = [&params](std::vector<Token> toks) {
    return GenWord{params, std::move(toks)};
  };
  const int n = params.n;
  if (params.e == 1 && params.d > 1) {
    // classical presentation of G(d,1,n): z, s_2..s_n
    rels.emplace_back(W({tok_z(), tok_s(2), tok_z(), tok_s(2)}),
                      W({tok_s(2), tok_z(), tok_s(2), tok_z()}));
    for (int j = 3; j <= n; ++j)
      rels.emplace_back(W({tok_z(), tok_s(j)}), W({tok_s(j), tok_z()}));
    for (int i = 2; i <= n - 1; ++i)
      rels.emplace_back(W({tok_s(i), tok_s(i + 1), tok_s(i)}),
                        W({tok_s(i + 1), tok_s(i), tok_s(i + 1)}));
    for (int i = 2; i <= n; ++i)
      for (int j = i + 2; j <= n; ++j)
        rels.emplace_back(W({tok_s(i), tok_s(j)}), W({tok_s(j), tok_s(i)}));
    std::vector<Token> zd(static_cast<size_t>(params.d), tok_z());
    rels.emplace_back(W(zd), W({}));
    for (int j = 2; j <= n; ++j)
      rels.emplace_back(W({tok_s(j), tok_s(j)}), W({}));
    return rels;
  }
  const int de = params.de();
  auto tmod = [de](int i) { return tok_t(((i % de) + de) % de); };
  if (params.d > 1) {
    // Corran-Lee-Lee: z t_i = t_{i-e} z, z s_j = s_j z, z^d = 1
    for (int i = 0; i < de; ++i)
      rels.emplace_back(W({tok_z(), tmod(i)}), W({tmod(i - params.e), tok_z()}));
    for (int j = 3; j <= n; ++j)
      rels.emplace_back(W({tok_z(), tok_s(j)}), W({tok_s(j), tok_z()}));
    std::vector<Token> zd(static_cast<size_t>(params.d), tok_z());
    rels.emplace_back(W(zd), W({}));
  }
  for (int i = 0; i < de; ++i)
    if (i != 1 && de >= 2)
      rels.emplace_back(W({tmod(i), tmod(i - 1)}), W({tmod(1), tmod(0)}));
  if (n >= 3)
    for (int i = 0; i < de; ++i)
      rels.emplace_back(W({tmod(i), tok_s(3), tmod(i)}),
                        W({tok_s(3), tmod(i), tok_s(3)}));
  for (int i = 0; i < de; ++i)
    for (int j = 4; j <= n; ++j)
      rels.emplace_back(W({tok_s(j), tmod(i)}), W({tmod(i), tok_s(j)}));
  for (int i = 3; i <= n - 1; ++i)
    rels.emplace_back(W({tok_s(i), tok_s(i + 1), tok_s(i)}),
                      W({tok_s(i + 1), tok_s(i), tok_s(i + 1)}));
  for (int i = 3; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      rels.emplace_back(W({tok_s(i), tok_s(j)}), W({tok_s(j), tok_s(i)}));
  for (int i = 0; i < de; ++i)
    rels.emplace_back(W({tmod(i), tmod(i)}), W({}));
  for (int j = 3; j <= n; ++j)
    rels.emplace_back(W({tok_s(j), tok_s(j)}), W({}));
  return rels;
}

void enumerate_group(const GroupParams &params,
                     const std::function<void(const Element &)> &fn,
                     unsigned long long cap) {
  unsigned long long ord = params.order();
  if (ord > cap)
    throw group_too_large("group order " + std::to_string(ord) +
                          " exceeds cap " + std::to_string(cap));
  const int n = params.n;
  const int de = params.de();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // exp(2..n) free in Z/de; exp(1) determined mod e, free mod d
    std::vector<int> exp(n, 0);
    std::vector<int> digits(n - 1, 0);
    while (true) {
      int sum = 0;
      for (int i = 1; i < n; ++i) {
        exp[i] = digits[i - 1];
        sum += exp[i];
      }
      int r = ((-sum) % params.e + params.e) % params.e;
      for (int j = 0; j < params.d; ++j) {
        exp[0] = r + j * params.e;
        fn(Element(params, perm, exp));
      }
      int pos = 0;
      while (pos < n - 1 && ++digits[pos] == de) {
        digits[pos] = 0;
        ++pos;
      }
      if (pos == n - 1)
        break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Element> all_elements(const GroupParams &params,
                                  unsigned long long cap) {
  std::vector<Element> out;
  out.reserve(params.order());
  enumerate_group(params, [&out](const Element &w) { out.push_back(w); }, cap);
  return out;
}

std::string element_to_json(const Element &x) {
  nlohmann::json j;
  j["d"] = x.params().d;
  j["e"] = x.params().e;
  j["n"] = x.params().n;
  std::vector<int> col1;
  for (int i = 0; i < x.n(); ++i)
    col1.push_back(x.col(i) + 1);
  j["col"] = col1;
  j["exp"] = x.exps();
  return j.dump();
}

Element element_from_json(const std::string &json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  GroupParams params(j.at("d").get<int>(), j.at("e").get<int>(),
                     j.at("n").get<int>());
  std::vector<int> col = j.at("col").get<std::vector<int>>();
  std::vector<int> exp = j.at("exp").get<std::vector<int>>();
  if (static_cast<int>(col.size()) != params.n ||
      static_cast<int>(exp.size()) != params.n)
    throw group_error("col/exp size does not match n");
  std::vector<int> seen(params.n, 0);
  for (int &c : col) {
    c -= 1;
    if (c < 0 || c >= params.n || seen[c]++)
      throw group_error("col is not a permutation");
  }
  Element x(params, std::move(col), std::move(exp));
  int sum = 0;
  for (int i = 0; i < params.n; ++i)
    sum += x.exp(i);
  if (sum % params.e != 0)
    throw group_error("exponent sum not divisible by e");
  return x;
}

} // namespace refl
