#include <doctest.h>

#include <sstream>

#include "crystalr/diagram.hpp"
#include "crystalr/oracle.hpp"
#include "crystalr/sweep.hpp"
#include "helpers.hpp"

using namespace crystalr;
using namespace testing_helpers;

TEST_CASE("diagram reproduces the insertion rule on small examples") {
  auto r = rmap_diagram_c(c1("1 2 3", 3), c1("2b 1b", 3));
  CHECK(word(r.image_left) == "2 3");
  CHECK(word(r.image_right) == "0 2b 0b");
  CHECK(r.energy == 0);

  r = rmap_diagram_c(c1("1 1 2 3", 3), c1("1 1b 1b", 3));
  CHECK(word(r.image_left) == "1 2 3");
  CHECK(word(r.image_right) == "0 1 1b 0b");
}

TEST_CASE("diagram trace output") {
  std::ostringstream out;
  DiagramOptions opt;
  opt.trace = &out;
  rmap_diagram_c(c1("1 2 3", 3), c1("2b 1b", 3), opt);
  CHECK(out.str().find('|') != std::string::npos);
  CHECK(out.str().find("(+)") != std::string::npos);
}

TEST_CASE("diagram equals rule exhaustively, n = 2 and 3") {
  for (int n = 2; n <= 3; ++n)
    for (int l = 1; l <= 3; ++l)
      for (int k = 1; k <= 3; ++k) {
        auto rep = sweep_rule_vs_diagram_serial(n, l, k);
        INFO(n, " ", l, " ", k, " ", rep.first_failure.value_or(""));
        CHECK(rep.ok());
      }
}

TEST_CASE("random tie-breaking does not change the result") {
  for (int l = 1; l <= 4; ++l)
    for (int k = 1; k <= 4; ++k)
      for (const auto& b1 : enumerate_b(Family::C1, 2, l))
        for (const auto& b2 : enumerate_b(Family::C1, 2, k)) {
          auto base = rmap_diagram_c(b1, b2);
          for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            DiagramOptions opt;
            opt.choice_seed = seed;
            auto r = rmap_diagram_c(b1, b2, opt);
            CHECK(r.image_left == base.image_left);
            CHECK(r.image_right == base.image_right);
            CHECK(r.energy == base.energy);
          }
        }
}
