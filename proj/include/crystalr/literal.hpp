#pragma once

#include <string>

#include "crystalr/crystal.hpp"

namespace crystalr {

// Word literal such as "0 1 2b 0b"; the capacity is the word length.
OneRowElement parse_element(const std::string& text, Family family, int n);

// Coordinate literal "x1,...,xn;xbn,...,xb1;l".  Inside either list a single
// "-" stands for as many zeros as needed to reach n entries.
OneRowElement parse_coords(const std::string& text, Family family, int n);

}  // namespace crystalr
