#pragma once

#include <string>
#include <vector>

#include "crystalr/crystal.hpp"
#include "crystalr/literal.hpp"
#include "crystalr/tableau.hpp"

namespace testing_helpers {

inline crystalr::OneRowElement c1(const std::string& w, int n) {
  return crystalr::parse_element(w, crystalr::Family::C1, n);
}
inline crystalr::OneRowElement a2(const std::string& w, int n) {
  return crystalr::parse_element(w, crystalr::Family::A2, n);
}
inline std::string word(const crystalr::OneRowElement& b) {
  return crystalr::to_string(crystalr::to_tableau(b));
}
inline crystalr::OneRowElement coords(crystalr::Family f, int n, int l, std::vector<int> c) {
  return crystalr::OneRowElement(f, n, l, std::move(c));
}

}  // namespace testing_helpers
