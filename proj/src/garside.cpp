#include "refl/garside.hpp"

#include <numeric>
#include <sstream>

namespace refl {

GarsideMonoid::GarsideMonoid(const GroupParams &params, int k,
                             unsigned long long cap)
    : params_(params), k_(k) {
  if (params.d != 1)
    throw garside_error("interval monoids are built over G(e,e,n)");
  if (k < 1 || k > params.e - 1)
    throw garside_error("k must satisfy 1 <= k <= e-1");
  for (int i = 0; i < params.e; ++i)
    atom_tokens_.push_back(tok_t(i));
  for (int j = 3; j <= params.n; ++j)
    atom_tokens_.push_back(tok_s(j));
  for (const Token &tok : atom_tokens_)
    atoms_.push_back(generator_element(tok, params_));
  delta_ = lambda_power(params_, k_);
  Element p = delta_;
  delta_order_ = 1;
  while (!p.is_identity()) {
    p = multiply(p, delta_);
    ++delta_order_;
  }
  simples_ = std::make_shared<Interval>(params_, k_, cap);
}

int GarsideMonoid::atom_index(const Token &tok) const {
  for (size_t i = 0; i < atom_tokens_.size(); ++i)
    if (atom_tokens_[i] == tok)
      return static_cast<int>(i);
  return -1;
}

bool GarsideMonoid::is_left_descending(const Element &simple, int i) const {
  return is_left_descent(atom_tokens_[i], simple);
}

bool GarsideMonoid::is_right_descending(const Element &simple, int i) const {
  // atoms square to 1 in G, so right division mirrors through the inverse
  return is_left_descent(atom_tokens_[i], inverse(simple));
}

bool GarsideMonoid::is_right_ascending(const Element &simple, int i) const {
  return is_left_descent(atom_tokens_[i], multiply(inverse(simple), delta_));
}

bool GarsideMonoid::is_left_ascending(const Element &simple, int i) const {
  return is_right_descending(multiply(delta_, inverse(simple)), i);
}

Element GarsideMonoid::delta_conj(const Element &simple, int p) const {
  Element dp = power(delta_, p);
  return multiply(multiply(dp, simple), inverse(dp));
}

GarsideElement GarsideMonoid::from_atom(int i, bool inv) const {
  if (!inv)
    return GarsideElement{0, {atoms_[i]}};
  // a^{-1} = Delta^{-1} (Delta a^{-1})
  return GarsideElement{-1, {multiply(delta_, inverse(atoms_[i]))}};
}

GarsideElement GarsideMonoid::from_simple(const Element &s) const {
  if (!simples_->contains(s))
    throw garside_error("element is not a simple");
  GarsideElement a{0, {s}};
  normalize(a);
  return a;
}

bool GarsideMonoid::slide(Element &u, Element &v) const {
  bool changed = false;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < num_atoms(); ++i) {
      if (is_left_descending(v, i) && is_right_ascending(u, i)) {
        u = multiply(u, atoms_[i]);
        v = multiply(atoms_[i], v); // atom is an involution in G
        moved = changed = true;
      }
    }
  }
  return changed;
}

void GarsideMonoid::normalize(GarsideElement &a) const {
  // drop trivial entries, then local left-weighting passes until stable
  auto compact = [&a]() {
    std::vector<Element> out;
    for (const Element &s : a.seq)
      if (!s.is_identity())
        out.push_back(s);
    a.seq = std::move(out);
  };
  compact();
  bool changed = true;
  size_t guard = 0;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < a.seq.size(); ++i)
      if (slide(a.seq[i], a.seq[i + 1]))
        changed = true;
    compact();
    if (++guard > 64 * (a.seq.size() + 2) * (a.seq.size() + 2))
      throw garside_error("normalization failed to stabilize");
  }
  // absorb leading Deltas into the power
  size_t lead = 0;
  while (lead < a.seq.size() && a.seq[lead] == delta_)
    ++lead;
  if (lead) {
    a.pd += static_cast<int>(lead);
    a.seq.erase(a.seq.begin(), a.seq.begin() + lead);
  }
}

GarsideElement GarsideMonoid::mul(const GarsideElement &x,
                                  const GarsideElement &y) const {
  GarsideElement r;
  r.pd = x.pd + y.pd;
  r.seq.reserve(x.seq.size() + y.seq.size());
  for (const Element &s : x.seq)
    r.seq.push_back(delta_conj(s, -y.pd)); // s Delta^q = Delta^q tau^{-q}(s)
  for (const Element &s : y.seq)
    r.seq.push_back(s);
  normalize(r);
  return r;
}

GarsideElement GarsideMonoid::inv(const GarsideElement &x) const {
  // (Delta^p s_1 ... s_r)^{-1} = s_r^{-1} ... s_1^{-1} Delta^{-p}
  GarsideElement r = one();
  for (auto it = x.seq.rbegin(); it != x.seq.rend(); ++it) {
    GarsideElement si{-1, {multiply(delta_, inverse(*it))}};
    normalize(si);
    r = mul(r, si);
  }
  return mul(r, delta_power(-x.pd));
}

GarsideElement
GarsideMonoid::normal_form(const std::vector<AtomLetter> &word) const {
  GarsideElement acc = one();
  for (const AtomLetter &l : word) {
    if (l.atom < 0 || l.atom >= num_atoms())
      throw garside_error("atom index out of range");
    acc = mul(acc, from_atom(l.atom, l.inverse));
  }
  return acc;
}

GarsideElement
GarsideMonoid::normal_form_tokens(const std::vector<Token> &toks) const {
  std::vector<AtomLetter> word;
  for (const Token &tok : toks) {
    int i = atom_index(tok);
    if (i < 0)
      throw garside_error("token '" + tok.str(params_) + "' is not an atom");
    word.push_back({i, false});
  }
  return normal_form(word);
}

Element GarsideMonoid::head(const GarsideElement &a) const {
  if (a.pd > 0)
    return delta_;
  if (a.pd < 0)
    throw garside_error("head of a non-positive element");
  if (a.seq.empty())
    return Element::identity(params_);
  return a.seq.front();
}

Element GarsideMonoid::head(const std::vector<AtomLetter> &word) const {
  return head(normal_form(word));
}

std::string GarsideMonoid::str(const GarsideElement &a) const {
  std::ostringstream os;
  bool first = true;
  if (a.pd != 0 || a.seq.empty()) {
    if (a.pd == 0)
      os << "1";
    else if (a.pd == 1)
      os << "d";
    else
      os << "d^" << a.pd;
    first = false;
  }
  for (const Element &s : a.seq) {
    if (!first)
      os << " . ";
    os << reduced_expression(s).word.str();
    first = false;
  }
  return os.str();
}

std::vector<std::pair<std::vector<Token>, std::vector<Token>>>
GarsideMonoid::defining_relations() const {
  std::vector<std::pair<std::vector<Token>, std::vector<Token>>> rels;
  const int e = params_.e;
  const int n = params_.n;
  auto tmod = [e](int i) { return tok_t(((i % e) + e) % e); };
  for (int i = 3; i <= n - 1; ++i)
    rels.push_back({{tok_s(i), tok_s(i + 1), tok_s(i)},
                    {tok_s(i + 1), tok_s(i), tok_s(i + 1)}});
  for (int i = 3; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      rels.push_back({{tok_s(i), tok_s(j)}, {tok_s(j), tok_s(i)}});
  if (n >= 3)
    for (int i = 0; i < e; ++i)
      rels.push_back({{tok_s(3), tmod(i), tok_s(3)},
                      {tmod(i), tok_s(3), tmod(i)}});
  for (int i = 0; i < e; ++i)
    for (int j = 4; j <= n; ++j)
      rels.push_back({{tok_s(j), tmod(i)}, {tmod(i), tok_s(j)}});
  for (int i = 1; i < e; ++i)
    rels.push_back({{tmod(i), tmod(i - k_)}, {tmod(0), tmod(-k_)}});
  // (i = 0 is the right-hand side itself)
  return rels;
}

const GarsideMonoid &GarsideMonoid::rev_monoid() const {
  if (params_.e == 2 * k_)
    return *this; // Delta^2 = 1: reversal is x -> x^{-1} inside this monoid
  if (!rev_) {
    rev_ = std::make_shared<GarsideMonoid>(params_, params_.e - k_);
  }
  return *rev_;
}

GarsideElement GarsideMonoid::reverse(const GarsideElement &a) const {
  // simples map to their inverses in reversed order; Delta_k maps to the
  // reverse monoid's Delta, so s_r^{-1}...s_1^{-1} Delta'^p becomes
  // Delta'^p tau'^{-p}(s_r^{-1}) ... tau'^{-p}(s_1^{-1})
  const GarsideMonoid &rm = rev_monoid();
  GarsideElement res = rm.delta_power(a.pd);
  std::vector<Element> rev_simples;
  for (auto it = a.seq.rbegin(); it != a.seq.rend(); ++it)
    rev_simples.push_back(rm.delta_conj(inverse(*it), -a.pd));
  GarsideElement tail{0, std::move(rev_simples)};
  rm.normalize(tail);
  return rm.mul(res, tail);
}

std::vector<Token> GarsideMonoid::iso_from_corran_picantin() const {
  if (std::gcd(k_, params_.e) != 1)
    throw garside_error("B+k(e,e,n) is isomorphic to B+(e,e,n) only for gcd(k,e) = 1");
  std::vector<Token> images;
  for (int i = 0; i < params_.e; ++i)
    images.push_back(tok_t((i * k_) % params_.e));
  for (int j = 3; j <= params_.n; ++j)
    images.push_back(tok_s(j));
  return images;
}

bool GarsideMonoid::iso_check() const {
  std::vector<Token> images = iso_from_corran_picantin();
  GarsideMonoid base(params_, 1);
  auto map_word = [&](const std::vector<Token> &toks) {
    std::vector<Token> out;
    for (const Token &tok : toks) {
      int i = base.atom_index(tok);
      if (i < 0)
        throw garside_error("bad token in relation");
      out.push_back(images[static_cast<size_t>(i)]);
    }
    return out;
  };
  for (const auto &[lhs, rhs] : base.defining_relations())
    if (normal_form_tokens(map_word(lhs)) != normal_form_tokens(map_word(rhs)))
      return false;
  return true;
}

namespace {
void all_reduced_expressions(const GarsideMonoid &M, const Element &w,
                             std::vector<Token> &prefix,
                             std::vector<std::vector<Token>> &out,
                             size_t limit) {
  if (w.is_identity()) {
    out.push_back(prefix);
    if (out.size() > limit)
      throw garside_error("too many reduced expressions");
    return;
  }
  for (int i = 0; i < M.num_atoms(); ++i) {
    if (is_left_descent(M.atom_tokens()[i], w)) {
      prefix.push_back(M.atom_tokens()[i]);
      all_reduced_expressions(M, multiply(M.atoms()[i], w), prefix, out, limit);
      prefix.pop_back();
    }
  }
}
} // namespace

bool GarsideMonoid::matsumoto_check(const Element &w, size_t max_len) const {
  if (!simples_->contains(w))
    throw garside_error("element is not in the interval");
  if (length(w) > max_len)
    throw garside_error("element too long for exhaustive geodesic enumeration");
  std::vector<std::vector<Token>> words;
  std::vector<Token> prefix;
  all_reduced_expressions(*this, w, prefix, words, 1'000'000);
  if (words.empty())
    return false;
  GarsideElement first = normal_form_tokens(words.front());
  for (const auto &word : words)
    if (normal_form_tokens(word) != first)
      return false;
  return true;
}

} // namespace refl
