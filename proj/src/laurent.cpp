#include "crystalr/laurent.hpp"

#include <cctype>
#include <stdexcept>

#include "crystalr/errors.hpp"

namespace crystalr {

LaurentPolynomial LaurentPolynomial::monomial(int exponent, Coeff c) {
  LaurentPolynomial p;
  p.add_term(exponent, c);
  return p;
}

LaurentPolynomial::Coeff LaurentPolynomial::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPolynomial::max_exponent() const {
  if (terms_.empty()) throw std::domain_error("zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

void LaurentPolynomial::add_term(int exponent, Coeff c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(exponent, c);
  if (!fresh && (it->second += c) == 0) terms_.erase(it);
}

LaurentPolynomial LaurentPolynomial::shifted(int by) const {
  LaurentPolynomial p;
  for (auto [e, c] : terms_) p.terms_.emplace(e + by, c);
  return p;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
  for (auto [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial p;
  for (auto [e1, c1] : a.terms_)
    for (auto [e2, c2] : b.terms_) p.add_term(e1 + e2, c1 * c2);
  return p;
}

std::string LaurentPolynomial::render(char var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto [e, c] : terms_) {
    Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag);
    out += var;
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty polynomial text");
  if (s == "0") return {};
  LaurentPolynomial p;
  std::size_t i = 0;
  auto fail = [&]() { throw ParseError("malformed polynomial '" + text + "'"); };
  auto read_int = [&](std::size_t& j) {
    std::size_t start = j;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == start || j - start > 18) fail();
    return std::stoll(s.substr(start, j - start));
  };
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      fail();
    }
    first = false;
    if (i >= s.size()) fail();
    Coeff c = 1;
    bool has_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      c = read_int(i);
      has_coeff = true;
    }
    int e = 0;
    if (i < s.size() && s[i] == '*') {
      if (!has_coeff) fail();
      ++i;
      if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) fail();
    }
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        int esign = 1;
        if (i < s.size() && s[i] == '-') {
          esign = -1;
          ++i;
        }
        e = esign * static_cast<int>(read_int(i));
      }
    } else if (!has_coeff) {
      fail();
    }
    p.add_term(e, sign * c);
  }
  return p;
}

}  // namespace crystalr
