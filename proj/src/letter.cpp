#include "crystalr/letter.hpp"

#include <cctype>
#include <sstream>

#include "crystalr/errors.hpp"

namespace crystalr {

std::string to_string(Letter a) {
  std::string s = std::to_string(a.value);
  if (a.barred) s += 'b';
  return s;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

Letter parse_letter(const std::string& token) {
  std::size_t i = 0;
  while (i < token.size() && std::isdigit(static_cast<unsigned char>(token[i]))) ++i;
  if (i == 0 || i > 6) throw ParseError("bad letter token '" + token + "'");
  bool barred = false;
  if (i < token.size()) {
    if (token[i] != 'b' || i + 1 != token.size())
      throw ParseError("bad letter token '" + token + "'");
    barred = true;
  }
  return Letter{std::stoi(token.substr(0, i)), barred};
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  Word w;
  std::string tok;
  while (in >> tok) w.push_back(parse_letter(tok));
  return w;
}

Word sigma_embed(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter a : w) out.push_back(Letter{a.value + 1, a.barred});
  return out;
}

}  // namespace crystalr
