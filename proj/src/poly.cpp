#include "dendri/poly.hpp"

#include <sstream>

namespace dendri {

namespace {

void require_word_in(Alphabet a, const LWord& u) {
  if (u.max_generator() > a.size)
    throw AlphabetMismatch("word " + to_string(u) + " is not over an alphabet of size " + std::to_string(a.size));
}

}  // namespace

Polynomial Polynomial::monomial(Alphabet alphabet, const LWord& u, const Rational& c) {
  Polynomial p(alphabet);
  p.add_term(u, c);
  return p;
}

Rational Polynomial::coefficient(const LWord& u) const {
  auto it = terms_.find(u);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const LWord& u, const Rational& c) {
  if (sgn(c) == 0) return;
  require_word_in(alphabet_, u);
  auto [it, inserted] = terms_.try_emplace(u, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::add_scaled(const Rational& c, const Polynomial& p) {
  require_same_alphabet(p);
  if (sgn(c) == 0) return;
  for (const auto& [u, a] : p.terms_) add_term(u, c * a);
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
  add_scaled(1, q);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
  add_scaled(-1, q);
  return *this;
}

void Polynomial::require_same_alphabet(const Polynomial& q) const {
  if (!(alphabet_ == q.alphabet_))
    throw AlphabetMismatch("alphabet sizes differ: " + std::to_string(alphabet_.size) + " vs " +
                           std::to_string(q.alphabet_.size));
}

Polynomial add(const Polynomial& p, const Polynomial& q) {
  Polynomial r = p;
  r += q;
  return r;
}

Polynomial scale(const Rational& a, const Polynomial& p) {
  Polynomial r(p.alphabet());
  r.add_scaled(a, p);
  return r;
}

Polynomial mul(const Polynomial& p, Op op, const Polynomial& q) {
  if (!(p.alphabet() == q.alphabet()))
    throw AlphabetMismatch("alphabet sizes differ: " + std::to_string(p.alphabet().size) + " vs " +
                           std::to_string(q.alphabet().size));
  Polynomial r(p.alphabet());
  for (const auto& [u, a] : p.terms())
    for (const auto& [v, b] : q.terms()) r.add_term(l_product(op, u, v), a * b);
  return r;
}

std::pair<LWord, Rational> leading(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("leading term of the zero polynomial");
  const auto& [u, a] = *p.terms().begin();
  return {u, a};
}

Polynomial apply_context(const Context& c, const Polynomial& p) {
  if (c.max_generator() > p.alphabet().size)
    throw AlphabetMismatch("context " + to_string(c) + " is not over an alphabet of size " +
                           std::to_string(p.alphabet().size));
  Polynomial r(p.alphabet());
  for (const auto& [u, a] : p.terms()) r.add_term(normalize(c.substitute(u)), a);
  return r;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, a] : p.terms()) {
    Rational mag = abs(a);
    if (first) {
      if (sgn(a) < 0) os << '-';
    } else {
      os << (sgn(a) < 0 ? " - " : " + ");
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << to_string(u);
    first = false;
  }
  return os.str();
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [u, a] : p.terms()) terms.push_back({{"coeff", a.get_str()}, {"word", to_string(u)}});
  return {{"n", p.alphabet().size}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  Alphabet a{j.at("n").get<std::size_t>()};
  Polynomial p(a);
  for (const auto& t : j.at("terms")) {
    Rational c(t.at("coeff").get<std::string>());
    c.canonicalize();
    LWord u = parse_lword(t.at("word").get<std::string>(), a);
    if (!is_normal(u)) throw std::invalid_argument("term word is not a normal L-word: " + to_string(u));
    p.add_term(u, c);
  }
  return p;
}

}  // namespace dendri
