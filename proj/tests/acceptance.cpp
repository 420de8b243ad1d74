#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "crystalr/diagram.hpp"
#include "crystalr/errors.hpp"
#include "crystalr/kostka.hpp"
#include "crystalr/literal.hpp"
#include "crystalr/onedsum.hpp"
#include "crystalr/oracle.hpp"
#include "crystalr/rmatrix.hpp"
#include "crystalr/sweep.hpp"
#include "crystalr/table.hpp"
#include "crystalr/tableau.hpp"

using namespace crystalr;

namespace {

struct GoldenEntry {
  const char* lambda;
  const char* mu;
  const char* x;
};

const GoldenEntry kGolden[] = {
#include "golden_tables.inc"
};

struct Outcome {
  bool ok = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++count_;
    if (!cond && first_.empty()) first_ = what;
    ok_ = ok_ && cond;
  }
  Outcome done(const std::string& summary) const {
    return {ok_, ok_ ? summary : summary + "; first failure: " + first_};
  }
  int count() const { return count_; }

 private:
  bool ok_ = true;
  int count_ = 0;
  std::string first_;
};

std::string word_of(const OneRowElement& b) { return to_string(to_tableau(b)); }

TwoRowTableau tableau(const std::string& r1, const std::string& r2) {
  return TwoRowTableau(parse_word(r1), parse_word(r2));
}

bool image_is(const RMatrixResult& r, const std::string& left, const std::string& right, int h) {
  return word_of(r.image_left) == left && word_of(r.image_right) == right && r.energy == h;
}

Outcome golden_tables() {
  Check c;
  std::map<int, XTable> tables;
  for (int s = 2; s <= 6; ++s) tables.emplace(s, compute_table(s));
  for (const auto& g : kGolden) {
    Partition lam = Partition::parse(g.lambda), mu = Partition::parse(g.mu);
    auto got = tables.at(mu.size()).at(lam, mu);
    c.expect(got == LaurentPolynomial::parse(g.x),
             std::string("X_{") + g.lambda + "," + g.mu + "} = " + got.render() + ", expected " + g.x);
  }
  std::size_t cells = 0;
  for (const auto& [s, t] : tables) cells += t.rows.size() * t.columns.size();
  c.expect(cells == std::size(kGolden), "table shape differs from the golden data");
  return c.done(std::to_string(c.count() - 1) + " table entries, |mu| = 2..6");
}

Outcome worked_examples() {
  Check c;
  {
    auto b1 = parse_coords("2,0,1,1;0,1,1,1;9", Family::C1, 4);
    auto b2 = parse_coords("0,0,0,0;3,0,0,2;7", Family::C1, 4);
    auto r = rmap_c(b1, b2, true);
    c.expect(r.trace->z == 1 && r.trace->l_prime == 7 && r.trace->k_prime == 5, "B9 x B7: z, l', k'");
    c.expect(r.trace->insertion == tableau("0 0 3 4 3b 2b 1b", "4b 4b 4b 0b 0b"), "B9 x B7: P-hat");
    c.expect(r.image_left == parse_coords("1,0,0,2;0,0,1,1;7", Family::C1, 4), "B9 x B7: b2'");
    c.expect(r.image_right == parse_coords("0,0,0,0;4,0,0,1;9", Family::C1, 4), "B9 x B7: b1'");
    c.expect(r.energy == 0, "B9 x B7: energy");
  }
  for (int n = 3; n <= 4; ++n) {
    auto rc = rmap_c(parse_element("1 1 2 3", Family::C1, n), parse_element("1 1b 1b", Family::C1, n), true);
    c.expect(image_is(rc, "1 2 3", "0 1 1b 0b", 0), "1123 x 11b1b (C1)");
    c.expect(rc.trace->insertion == tableau("0 1 2 3", "1 1b 0b"), "1123 x 11b1b (C1): P-hat");
    auto ra = rmap_a(parse_element("1 1 2 3", Family::A2, n), parse_element("1 1b 1b", Family::A2, n), true);
    c.expect(image_is(ra, "1 1 3", "1 2 1b 1b", 2), "1123 x 11b1b (A2)");
    c.expect(ra.trace->insertion == tableau("1 2 3", ""), "1123 x 11b1b (A2): P");

    auto sc = rmap_c(parse_element("1 2 3", Family::C1, n), parse_element("2b 1b", Family::C1, n));
    c.expect(word_of(sc.image_left) == "2 3" && word_of(sc.image_right) == "0 2b 0b", "123 x 2b1b (C1)");
    auto sa = rmap_a(parse_element("1 2 3", Family::A2, n), parse_element("2b 1b", Family::A2, n));
    c.expect(word_of(sa.image_left) == "1 3" && word_of(sa.image_right) == "1 1b 1b", "123 x 2b1b (A2)");
    for (Family f : {Family::C1, Family::A2}) {
      auto r = rmap(parse_element("1 1 2", f, n), parse_element("2 3", f, n));
      c.expect(word_of(r.image_left) == "1 2" && word_of(r.image_right) == "1 2 3",
               "112 x 23 (" + to_string(f) + ")");
    }
  }
  return c.done(std::to_string(c.count()) + " checks");
}

Outcome diagram_algorithm() {
  Check c;
  auto e1 = rmap_diagram_c(parse_element("1 1 3 4 3b 2b 1b", Family::C1, 4),
                           parse_element("4b 4b 4b 1b 1b", Family::C1, 4));
  c.expect(image_is(e1, "1 4 4 2b 1b", "0 4b 4b 4b 4b 1b 0b", 0), "first diagram example");
  auto e2 = rmap_diagram_c(parse_element("0 2b 2b 1b 1b 1b 0b", Family::C1, 2),
                           parse_element("1 1 1 2 2b 1b", Family::C1, 2));
  c.expect(image_is(e2, "0 2b 1b 1b 1b 0b", "1 1 1 2 2b 2b 1b", 4), "second diagram example");
  std::size_t checked = 0;
  for (int n = 2; n <= 3; ++n)
    for (int l = 1; l <= 4; ++l)
      for (int k = 1; k <= l; ++k) {
        auto rep = sweep_rule_vs_diagram(n, l, k);
        checked += rep.checked;
        c.expect(rep.ok(), rep.first_failure.value_or("diagram sweep"));
      }
  return c.done(std::to_string(checked) + " elements, n = 2..3, k <= l <= 4");
}

struct OracleRange {
  std::size_t elements = 0, zero_edges = 0, violations = 0, failures = 0;
  std::string first_failure;
};

const OracleRange& oracle_range() {
  static const OracleRange result = [] {
    OracleRange r;
    for (Family f : {Family::C1, Family::A2})
      for (int n = 2; n <= 3; ++n)
        for (int l = 1; l <= 4; ++l)
          for (int k = 1; k <= 4; ++k) {
            auto rep = sweep_rule_vs_oracle(f, n, l, k);
            r.elements += rep.checked;
            r.failures += rep.failures;
            if (!rep.ok() && r.first_failure.empty()) r.first_failure = *rep.first_failure;
            auto o = rmap_bruteforce(f, n, l, k);
            r.violations += o.energy_axiom_violations();
            for (int v = 0; v < o.source().size(); ++v) r.zero_edges += o.source().f(0, v) >= 0;
          }
    return r;
  }();
  return result;
}

Outcome oracle_equivalence() {
  const auto& r = oracle_range();
  Outcome o{r.failures == 0, std::to_string(r.elements) + " elements, both families, n = 2..3, l,k = 1..4"};
  if (!o.ok) o.detail += "; " + std::to_string(r.failures) + " failures, first: " + r.first_failure;
  return o;
}

Outcome energy_axiom() {
  const auto& r = oracle_range();
  return {r.violations == 0 && r.zero_edges > 0,
          std::to_string(r.zero_edges) + " 0-edges, " + std::to_string(r.violations) + " violations"};
}

Outcome highest_closed_forms() {
  Check c;
  std::size_t type1 = 0, type2 = 0;
  for (int n = 2; n <= 4; ++n)
    for (int l = 1; l <= 5; ++l)
      for (int k = 1; k <= l; ++k) {
        auto left = enumerate_b(Family::C1, n, l);
        auto right = enumerate_b(Family::C1, n, k);
        for (const auto& b1 : left)
          for (const auto& b2 : right) {
            if (b1.x0() > 0 && b2.x0() > 0) continue;
            if (!is_cn_highest(TensorElement({b1, b2}))) continue;
            auto type = classify_highest(b1, b2);
            (type == HighestType::TypeI ? type1 : type2)++;
            auto closed = highest_image_c(b1, b2);
            auto r = rmap_c(b1, b2);
            c.expect(closed.image_left == r.image_left && closed.image_right == r.image_right &&
                         closed.energy == r.energy,
                     to_string(b1) + " (x) " + to_string(b2));
          }
      }
  return c.done(std::to_string(type1) + " type I and " + std::to_string(type2) +
                " type II highest elements, n = 2..4, k <= l <= 5");
}

Outcome structural_invariants() {
  Check c;
  for (Family f : {Family::C1, Family::A2})
    for (int n = 2; n <= 3; ++n)
      for (int l = 1; l <= 4; ++l)
        for (int k = 1; k <= 4; ++k) {
          auto left = enumerate_b(f, n, l);
          auto right = enumerate_b(f, n, k);
          for (const auto& b1 : left)
            for (const auto& b2 : right) {
              const std::string where = to_string(f) + " " + to_string(b1) + " (x) " + to_string(b2);
              auto r = rmap(b1, b2, false);
              auto back = rmap(r.image_left, r.image_right, false);
              c.expect(back.image_left == b1 && back.image_right == b2 && back.energy == r.energy,
                       "involution at " + where);
              c.expect(r.trace->z == back.trace->z, "z preserved at " + where);
              c.expect(r.trace->insertion == back.trace->insertion, "insertion tableau at " + where);
            }
          if (f == Family::C1 && l >= 3 && k >= 3) {
            for (const auto& c1 : enumerate_b(f, n, l - 2))
              for (const auto& c2 : enumerate_b(f, n, k - 2)) {
                auto small = rmap(c1, c2);
                auto big = rmap(tau_c(c1), tau_c(c2));
                c.expect(big.image_left == tau_c(small.image_left) &&
                             big.image_right == tau_c(small.image_right) && big.energy == small.energy,
                         "tau at " + to_string(c1) + " (x) " + to_string(c2));
              }
          }
          if (f == Family::A2 && l >= 2 && k >= 2) {
            for (const auto& c1 : enumerate_b(f, n, l - 1))
              for (const auto& c2 : enumerate_b(f, n, k - 1)) {
                auto small = rmap(c1, c2);
                auto big = rmap(tau_a_acute(c1), tau_a_grave(c2));
                c.expect(big.image_left == tau_a_acute(small.image_left) &&
                             big.image_right == tau_a_grave(small.image_right) &&
                             big.energy == small.energy,
                         "acute/grave tau at " + to_string(c1) + " (x) " + to_string(c2));
              }
          }
        }
  return c.done(std::to_string(c.count()) + " checks");
}

Outcome kostka_crosscheck() {
  Check c;
  std::ostringstream shifts;
  int pairs = 0;
  for (int s = 1; s <= 6; ++s)
    for (const auto& mu : partitions_of(s))
      for (const auto& lam : partitions_of(s)) {
        if (lam.length() > mu.length()) continue;
        const int n = std::max(2, mu.length());
        auto x = x_polynomial(lam, mu, n);
        auto k = kostka_fermionic(lam, mu, n);
        const std::string where = "(" + lam.render() + "),(" + mu.render() + ")";
        if (x.is_zero() || k.is_zero()) {
          c.expect(x.is_zero() && k.is_zero(), "zero pattern at " + where);
          continue;
        }
        const int shift = x.min_exponent() - k.min_exponent();
        c.expect(k.shifted(shift) == x, "shifted polynomials differ at " + where);
        ++pairs;
        shifts << ' ' << lam.render_compact() << '/' << mu.render_compact() << ':' << shift;
      }
  auto out = c.done(std::to_string(pairs) + " nonzero pairs, |lambda| = |mu| <= 6");
  out.detail += "\n  shifts (lambda/mu:power of t):" + shifts.str();
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden 1dsum tables", golden_tables},
      {"worked examples", worked_examples},
      {"diagram algorithm", diagram_algorithm},
      {"oracle equivalence", oracle_equivalence},
      {"energy axiom", energy_axiom},
      {"highest-element closed forms", highest_closed_forms},
      {"structural invariants", structural_invariants},
      {"Kostka cross-check", kostka_crosscheck},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu (%s): %s [%.1fs]\n", o.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
