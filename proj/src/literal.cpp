#include "crystalr/literal.hpp"

#include <sstream>
#include <vector>

#include "crystalr/errors.hpp"
#include "crystalr/tableau.hpp"

namespace crystalr {

OneRowElement parse_element(const std::string& text, Family family, int n) {
  Word w = parse_word(text);
  if (w.empty()) throw ParseError("empty element literal");
  try {
    return from_word(w, family, n);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

namespace {

std::vector<int> parse_list(const std::string& part, int n) {
  std::vector<std::string> toks;
  std::stringstream in(part);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::string t;
    for (char c : tok)
      if (c != ' ') t += c;
    toks.push_back(t);
  }
  std::vector<int> out;
  int fill = -1;
  for (const auto& t : toks) {
    if (t == "-" || t == "\u2014") {
      if (fill >= 0) throw ParseError("at most one '-' per coordinate list");
      fill = static_cast<int>(out.size());
      continue;
    }
    if (t.empty() || t.size() > 6 || t.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad coordinate '" + t + "'");
    out.push_back(std::stoi(t));
  }
  if (fill >= 0) {
    if (static_cast<int>(out.size()) > n) throw ParseError("too many coordinates");
    out.insert(out.begin() + fill, n - out.size(), 0);
  }
  if (static_cast<int>(out.size()) != n)
    throw ParseError("expected " + std::to_string(n) + " coordinates in '" + part + "'");
  return out;
}

}  // namespace

OneRowElement parse_coords(const std::string& text, Family family, int n) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string p;
  while (std::getline(in, p, ';')) parts.push_back(p);
  if (parts.size() != 3) throw ParseError("coordinate literal needs the form x;xbar;l");
  std::vector<int> x = parse_list(parts[0], n);
  std::vector<int> xb_desc = parse_list(parts[1], n);  // xb_n .. xb_1
  std::string lt;
  for (char c : parts[2])
    if (c != ' ') lt += c;
  if (lt.empty() || lt.size() > 6 || lt.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad capacity '" + parts[2] + "'");
  std::vector<int> c = x;
  c.insert(c.end(), xb_desc.begin(), xb_desc.end());
  try {
    return OneRowElement(family, n, std::stoi(lt), std::move(c));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace crystalr
