#include "refl/ncgb.hpp"

#include <json.hpp>

namespace refl {

FieldP::Elem FieldP::inv(Elem a) const {
  if (a == 0)
    throw ncgb_error("division by zero in prime field");
  // extended Euclid
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
  while (newr != 0) {
    long long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (r != 1)
    throw ncgb_error("modulus is not prime");
  return static_cast<Elem>((t % static_cast<long long>(p) + p) % p);
}

FieldP::Elem FieldP::from_rational(const mpq_class &q) const {
  mpz_class num = (q.get_num() % static_cast<long>(p)) + static_cast<long>(p);
  mpz_class den = (q.get_den() % static_cast<long>(p)) + static_cast<long>(p);
  Elem n = mpz_class(num % static_cast<long>(p)).get_ui();
  Elem d = mpz_class(den % static_cast<long>(p)).get_ui();
  return mul(n, inv(d));
}

mpq_class parse_rational(const std::string &s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw ncgb_error("bad rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

std::string relations_to_json(const std::vector<NpRelation> &rels) {
  nlohmann::json out = nlohmann::json::array();
  for (const NpRelation &rel : rels) {
    nlohmann::json jr;
    jr["terms"] = nlohmann::json::array();
    for (const auto &[w, c] : rel.terms) {
      nlohmann::json jt;
      std::vector<int> w1;
      for (int g : w)
        w1.push_back(g + 1);
      jt["word"] = w1;
      if (c.get_den() == 1 && c.get_num().fits_slong_p())
        jt["coeff"] = static_cast<long>(c.get_num().get_si());
      else
        jt["coeff"] = c.get_str();
      jr["terms"].push_back(jt);
    }
    out.push_back(jr);
  }
  return out.dump(1);
}

std::vector<NpRelation> relations_from_json(const std::string &text,
                                            int *num_gens_out) {
  nlohmann::json in = nlohmann::json::parse(text);
  std::vector<NpRelation> rels;
  int maxgen = 0;
  for (const auto &jr : in) {
    NpRelation rel;
    for (const auto &jt : jr.at("terms")) {
      std::vector<int> w;
      for (int g : jt.at("word").get<std::vector<int>>()) {
        if (g < 1)
          throw ncgb_error("word indices are 1-based positive integers");
        w.push_back(g - 1);
        maxgen = std::max(maxgen, g);
      }
      mpq_class c;
      if (jt.at("coeff").is_string())
        c = parse_rational(jt.at("coeff").get<std::string>());
      else
        c = mpq_class(jt.at("coeff").get<long>());
      rel.terms.emplace_back(std::move(w), std::move(c));
    }
    rels.push_back(std::move(rel));
  }
  if (num_gens_out)
    *num_gens_out = maxgen;
  return rels;
}

} // namespace refl
