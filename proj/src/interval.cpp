#include "refl/interval.hpp"

#include <algorithm>
#include <sstream>

namespace refl {

bool left_divides(const Element &u, const Element &w) {
  if (u.params() != w.params())
    throw param_mismatch();
  return length(u) + length(multiply(inverse(u), w)) == length(w);
}

bool right_divides(const Element &u, const Element &w) {
  if (u.params() != w.params())
    throw param_mismatch();
  return length(multiply(w, inverse(u))) + length(u) == length(w);
}

std::vector<bool> bullet_rows(const Element &w) {
  const int n = w.n();
  std::vector<bool> bullet(n, true);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (w.col(j) <= w.col(i)) {
        bullet[i] = false;
        break;
      }
  return bullet;
}

bool divides_lambda_k(const Element &w, int k) {
  const GroupParams &params = w.params();
  if (params.d != 1)
    throw interval_error("bullet criterion lives in G(e,e,n)");
  if (k < 1 || k > params.e - 1)
    throw interval_error("k must satisfy 1 <= k <= e-1");
  std::vector<bool> bullet = bullet_rows(w);
  for (int i = 0; i < w.n(); ++i)
    if (!bullet[i] && w.exp(i) != 0 && w.exp(i) != k)
      return false;
  return true;
}

bool is_balanced(const Element &w, unsigned long long cap) {
  const GroupParams &params = w.params();
  std::vector<Element> left, right;
  enumerate_group(
      params,
      [&](const Element &u) {
        if (left_divides(u, w))
          left.push_back(u);
        if (right_divides(u, w))
          right.push_back(u);
      },
      cap);
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return left == right;
}

unsigned long long predicted_interval_size(const GroupParams &params) {
  unsigned long long r = 1;
  for (int i = 2; i <= params.n; ++i)
    r *= static_cast<unsigned long long>(params.e + 2 * i - 2);
  return r;
}

Interval::Interval(const GroupParams &params, int k, unsigned long long cap)
    : params_(params), k_(k), top_(lambda_power(params, k)) {
  if (predicted_interval_size(params) > cap)
    throw interval_error("interval larger than cap");
  // catalog enumeration: RE_i(w) ranges over the three families of shapes
  std::vector<std::vector<std::vector<Token>>> rows; // choices per row i
  for (int i = 2; i <= params_.n; ++i) {
    std::vector<std::vector<Token>> opts;
    auto s_or_t0 = [](int j) { return j == 2 ? tok_t(0) : tok_s(j); };
    // s_i ... s_{i'} for 2 <= i' <= i, plus the empty word
    opts.push_back({});
    for (int ip = i; ip >= 2; --ip) {
      std::vector<Token> word;
      for (int j = i; j >= ip; --j)
        word.push_back(s_or_t0(j));
      opts.push_back(std::move(word));
    }
    // s_i ... s_3 t_{k'} for k' = 1..e-1 (k' = 0 coincides with i' = 2 above)
    for (int kp = 1; kp <= params_.e - 1; ++kp) {
      std::vector<Token> word;
      for (int j = i; j >= 3; --j)
        word.push_back(tok_s(j));
      word.push_back(tok_t(kp));
      opts.push_back(std::move(word));
    }
    // s_i ... s_3 t_k t_0 s_3 ... s_{i'} for 2 <= i' <= i
    for (int ip = 2; ip <= i; ++ip) {
      std::vector<Token> word;
      for (int j = i; j >= 3; --j)
        word.push_back(tok_s(j));
      word.push_back(tok_t(k_));
      word.push_back(tok_t(0));
      for (int j = 3; j <= ip; ++j)
        word.push_back(tok_s(j));
      opts.push_back(std::move(word));
    }
    rows.push_back(std::move(opts));
  }
  std::vector<size_t> idx(rows.size(), 0);
  while (true) {
    GenWord w{params_, {}};
    for (size_t r = 0; r < rows.size(); ++r)
      w.tokens.insert(w.tokens.end(), rows[r][idx[r]].begin(),
                      rows[r][idx[r]].end());
    Element el = evaluate(w);
    if (index_.emplace(el, static_cast<int>(elements_.size())).second)
      elements_.push_back(el);
    size_t pos = 0;
    while (pos < rows.size() && ++idx[pos] == rows[pos].size()) {
      idx[pos] = 0;
      ++pos;
    }
    if (pos == rows.size())
      break;
  }
  if (elements_.size() != predicted_interval_size(params_))
    throw interval_error("catalog enumeration produced duplicate elements");
  // authoritative cross-check against the divisibility definition
  unsigned long long brute = 0;
  enumerate_group(params_, [&](const Element &w) {
    bool by_bullets = divides_lambda_k(w, k_);
    if (by_bullets)
      ++brute;
    if (by_bullets != contains(w))
      throw interval_error("catalog and bullet criterion disagree at " + w.str());
  });
  if (brute != elements_.size())
    throw interval_error("catalog size disagrees with brute force");
  std::sort(elements_.begin(), elements_.end(),
            [](const Element &a, const Element &b) {
              size_t la = length(a), lb = length(b);
              if (la != lb)
                return la < lb;
              return a < b;
            });
  index_.clear();
  for (size_t i = 0; i < elements_.size(); ++i)
    index_[elements_[i]] = static_cast<int>(i);
}

int Interval::index_of(const Element &w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

Element Interval::atom_join(const Token &x, const Token &y) const {
  auto ev = [this](std::vector<Token> toks) {
    return evaluate(GenWord{params_, std::move(toks)});
  };
  if (x == y)
    return ev({x});
  if (x.kind == TokKind::T && y.kind == TokKind::T)
    return ev({tok_t(k_), tok_t(0)}); // t_i v t_j = t_k t_0
  if (x.kind == TokKind::S && y.kind == TokKind::S) {
    if (std::abs(x.index - y.index) == 1)
      return ev({x, y, x});
    return ev({x, y});
  }
  const Token &t = x.kind == TokKind::T ? x : y;
  const Token &s = x.kind == TokKind::T ? y : x;
  if (s.index == 3)
    return ev({t, s, t});
  return ev({t, s});
}

namespace {
uint64_t pair_key(int a, int b) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(a)) << 32) |
         static_cast<uint32_t>(b);
}
Token first_letter(const Element &w) {
  return reduced_expression(w).word.tokens.front();
}
} // namespace

Element Interval::join_rec(const Element &u, const Element &v,
                           int depth) const {
  if (depth > 4 * params_.n * params_.n * params_.e)
    throw interval_error("join recursion failed to terminate");
  if (u.is_identity())
    return v;
  if (v.is_identity())
    return u;
  if (u == v)
    return u;
  int iu = index_of(u), iv = index_of(v);
  if (iu < 0 || iv < 0)
    throw interval_error("join argument outside the interval");
  uint64_t key = pair_key(std::min(iu, iv), std::max(iu, iv));
  auto memo = join_memo_.find(key);
  if (memo != join_memo_.end())
    return memo->second;
  if (join_inflight_.count(key))
    throw interval_error("join recursion cycled");
  join_inflight_[key] = 1;

  Token xt = first_letter(u), yt = first_letter(v);
  Element x = generator_element(xt, params_);
  Element y = generator_element(yt, params_);
  Element u1 = multiply(x, u); // u = x u1
  Element v1 = multiply(y, v);
  Element result = Element::identity(params_);
  if (xt == yt) {
    result = multiply(x, join_rec(u1, v1, depth + 1));
  } else {
    Element J = atom_join(xt, yt); // x v y = x y1 = y x1
    Element y1 = multiply(x, J);
    Element x1 = multiply(y, J);
    Element A = join_rec(x1, v1, depth + 1); // = v1 x2 = x1 v2
    Element v2 = multiply(inverse(x1), A);
    Element B = join_rec(y1, u1, depth + 1); // = u1 y2 = y1 u2
    Element y2 = multiply(inverse(u1), B);
    Element u2 = multiply(inverse(y1), B);
    Element C = join_rec(u2, v2, depth + 1); // = v2 u3 = u2 v3
    Element v3 = multiply(inverse(u2), C);
    result = multiply(u, multiply(y2, v3));
  }
  join_inflight_.erase(key);
  join_memo_[key] = result;
  return result;
}

Element Interval::join(const Element &u, const Element &v) const {
  return join_rec(u, v, 0);
}

Element Interval::meet(const Element &u, const Element &v) const {
  if (index_of(u) < 0 || index_of(v) < 0)
    throw interval_error("meet argument outside the interval");
  Element acc = Element::identity(params_);
  for (const Element &h : elements_)
    if (left_divides(h, u) && left_divides(h, v))
      acc = join(acc, h);
  return acc;
}

Element Interval::join_r(const Element &u, const Element &v) const {
  return transpose(join(transpose(u), transpose(v)));
}

Element Interval::meet_r(const Element &u, const Element &v) const {
  return transpose(meet(transpose(u), transpose(v)));
}

std::vector<std::pair<int, int>> Interval::hasse_covers() const {
  std::vector<std::pair<int, int>> covers;
  for (size_t a = 0; a < elements_.size(); ++a)
    for (size_t b = 0; b < elements_.size(); ++b) {
      if (a == b)
        continue;
      if (length(elements_[b]) == length(elements_[a]) + 1 &&
          left_divides(elements_[a], elements_[b]))
        covers.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return covers;
}

std::string Interval::hasse_dot() const {
  std::ostringstream os;
  os << "digraph interval {\n  rankdir=BT;\n";
  for (size_t i = 0; i < elements_.size(); ++i) {
    std::string label = reduced_expression(elements_[i]).word.str();
    if (label.empty())
      label = "1";
    os << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (auto [a, b] : hasse_covers())
    os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

Interval::LatticeReport Interval::verify_lattice() const {
  LatticeReport rep;
  const size_t N = elements_.size();
  auto fail = [&rep](const std::string &msg) {
    rep.ok = false;
    if (rep.failure.empty())
      rep.failure = msg;
  };
  for (size_t a = 0; a < N && rep.ok; ++a) {
    for (size_t b = a; b < N && rep.ok; ++b) {
      const Element &u = elements_[a], &v = elements_[b];
      ++rep.pairs;
      Element j = join(u, v);
      if (!left_divides(u, j) || !left_divides(v, j))
        fail("join is not a common multiple");
      Element m = meet(u, v);
      if (!left_divides(m, u) || !left_divides(m, v))
        fail("meet is not a common divisor");
      Element jr = join_r(u, v);
      Element mr = meet_r(u, v);
      if (!right_divides(u, jr) || !right_divides(v, jr))
        fail("right join is not a common right multiple");
      if (!right_divides(mr, u) || !right_divides(mr, v))
        fail("right meet is not a common right divisor");
      for (const Element &w : elements_) {
        if (left_divides(u, w) && left_divides(v, w) && !left_divides(j, w))
          fail("join not minimal");
        if (left_divides(w, u) && left_divides(w, v) && !left_divides(w, m))
          fail("meet not maximal");
        if (right_divides(u, w) && right_divides(v, w) && !right_divides(jr, w))
          fail("right join not minimal");
        if (right_divides(w, u) && right_divides(w, v) && !right_divides(w, mr))
          fail("right meet not maximal");
      }
    }
  }
  return rep;
}

} // namespace refl
