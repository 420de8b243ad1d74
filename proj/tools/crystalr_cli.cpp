#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

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
using nlohmann::json;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;

std::string word_of(const OneRowElement& b) { return to_string(to_tableau(b)); }

json coords_json(const OneRowElement& b) { return json(b.coords()); }

void print_inserts(std::ostream& out, const std::vector<InsertRecord>& inserts) {
  for (const auto& rec : inserts) {
    out << "insert " << to_string(rec.inserted);
    if (!rec.bumped.empty()) out << "  bumped " << to_string(rec.bumped);
    out << '\n' << render(rec.after) << "\n\n";
  }
}

struct RmapArgs {
  std::string family = "c1";
  int n = 0;
  std::string lhs, rhs, lhs_coords, rhs_coords;
  std::string algo = "insert";
  std::string dump_graph;
  bool trace = false;
  bool as_json = false;
};

int cmd_rmap(const RmapArgs& a) {
  Family family = parse_family(a.family);
  auto element = [&](const std::string& word, const std::string& coords, const char* side) {
    if (!word.empty() && !coords.empty())
      throw ParseError(std::string("give either --") + side + " or --" + side + "-coords");
    if (!coords.empty()) return parse_coords(coords, family, a.n);
    if (word.empty()) throw ParseError(std::string("missing --") + side);
    return parse_element(word, family, a.n);
  };
  OneRowElement b1 = element(a.lhs, a.lhs_coords, "lhs");
  OneRowElement b2 = element(a.rhs, a.rhs_coords, "rhs");

  std::ostringstream trace;
  RMatrixResult r = [&]() {
    if (a.algo == "insert") return rmap(b1, b2, a.trace);
    if (a.algo == "diagram") {
      DiagramOptions opt;
      if (a.trace) opt.trace = &trace;
      return rmap_diagram_c(b1, b2, opt);
    }
    if (a.algo == "oracle") {
      BruteForceRMatrix o = rmap_bruteforce(family, a.n, b1.capacity(), b2.capacity());
      if (!a.dump_graph.empty()) {
        std::ofstream f(a.dump_graph);
        if (!f) throw PreconditionError("cannot write " + a.dump_graph);
        o.source().dump(f);
      }
      return o.lookup(b1, b2);
    }
    throw ParseError("unknown --algo '" + a.algo + "' (insert, diagram, oracle)");
  }();

  if (a.trace && r.trace) {
    print_inserts(trace, r.trace->inserts);
    trace << "P\n" << render(r.trace->insertion) << "\n\n";
    for (std::size_t s = 0; s < r.trace->bumps.ejected.size(); ++s)
      trace << "eject " << to_string(r.trace->bumps.ejected[s]) << '\n'
            << render(r.trace->bumps.snapshots[s]) << "\n\n";
  }

  if (a.as_json) {
    json j;
    j["family"] = to_string(family);
    j["n"] = a.n;
    j["algo"] = a.algo;
    j["lhs"] = word_of(b1);
    j["rhs"] = word_of(b2);
    j["image_left"] = word_of(r.image_left);
    j["image_right"] = word_of(r.image_right);
    j["image_left_coords"] = coords_json(r.image_left);
    j["image_right_coords"] = coords_json(r.image_right);
    j["energy"] = r.energy;
    if (r.trace) {
      j["z"] = r.trace->z;
      j["l_prime"] = r.trace->l_prime;
      j["k_prime"] = r.trace->k_prime;
      j["m"] = r.trace->m;
      j["ejected"] = to_string(r.trace->bumps.ejected);
    }
    if (a.trace) j["trace"] = trace.str();
    std::cout << j.dump() << '\n';
    return 0;
  }
  if (a.trace) std::cout << trace.str();
  std::cout << "image: " << word_of(r.image_left) << " (x) " << word_of(r.image_right) << '\n';
  std::cout << "energy: " << r.energy << '\n';
  if (r.trace)
    std::cout << "z=" << r.trace->z << " l'=" << r.trace->l_prime << " k'=" << r.trace->k_prime
              << " m=" << r.trace->m << '\n';
  return 0;
}

struct InsertArgs {
  int n = 0;
  std::string target, letters;
  bool trace = false;
  bool as_json = false;
};

TwoRowTableau parse_tableau(const std::string& text) {
  auto slash = text.find('/');
  Word r1 = parse_word(text.substr(0, slash));
  Word r2 = slash == std::string::npos ? Word{} : parse_word(text.substr(slash + 1));
  if (!is_semistandard(r1, r2)) throw ParseError("target is not a semistandard two-row tableau");
  return TwoRowTableau(r1, r2);
}

int cmd_insert(const InsertArgs& a) {
  if (a.n < 2) throw ParseError("--n must be at least 2");
  TwoRowTableau t = parse_tableau(a.target);
  Word w = parse_word(a.letters);
  for (Letter x : w)
    if (x.value > a.n) throw ParseError("letter " + to_string(x) + " exceeds rank");
  for (Letter x : t.row1())
    if (x.value > a.n) throw ParseError("letter " + to_string(x) + " exceeds rank");
  if (!std::is_sorted(w.begin(), w.end())) throw ParseError("--letters must be a one-row (sorted) word");
  std::vector<InsertRecord> rec;
  TwoRowTableau p = insert_word(w, t, &rec);
  if (a.as_json) {
    json j;
    j["row1"] = to_string(p.row1());
    j["row2"] = to_string(p.row2());
    if (a.trace) {
      json steps = json::array();
      for (const auto& r : rec)
        steps.push_back({{"inserted", to_string(r.inserted)},
                         {"bumped", to_string(r.bumped)},
                         {"row1", to_string(r.after.row1())},
                         {"row2", to_string(r.after.row2())}});
      j["steps"] = steps;
    }
    std::cout << j.dump() << '\n';
    return 0;
  }
  if (a.trace) print_inserts(std::cout, rec);
  std::cout << render(p) << '\n';
  return 0;
}

struct SumArgs {
  int n = 0;
  std::string lambda, mu;
  bool kostka = false;
  bool as_json = false;
};

int cmd_onedsum(const SumArgs& a) {
  Partition lam = Partition::parse(a.lambda), mu = Partition::parse(a.mu);
  if (mu.length() == 0) throw ParseError("--mu must be nonempty");
  if (a.kostka && lam.size() != mu.size()) throw ParseError("--kostka needs |lambda| = |mu|");
  int n = a.n ? a.n : std::max({2, mu.length(), lam.length()});
  LaurentPolynomial x = x_polynomial(lam, mu, n);
  std::optional<LaurentPolynomial> k;
  if (a.kostka) k = kostka_fermionic(lam, mu, n);
  if (a.as_json) {
    json j{{"lambda", lam.render()}, {"mu", mu.render()}, {"n", n}, {"X", x.render()}};
    if (k) j["K"] = k->render('q');
    std::cout << j.dump() << '\n';
    return 0;
  }
  std::cout << x.render() << '\n';
  if (k) std::cout << "K: " << k->render('q') << '\n';
  return 0;
}

struct TableArgs {
  int min_size = 2, max_size = 6;
  std::string format = "text";
  bool serial = false;
};

int cmd_table(const TableArgs& a) {
  if (a.format != "text" && a.format != "records") throw ParseError("--format is text or records");
  for (int s = a.min_size; s <= a.max_size; ++s) {
    XTable t = compute_table(s, !a.serial);
    if (a.format == "text") {
      if (s > a.min_size) std::cout << '\n';
      std::cout << render_table_text(t);
    } else {
      std::cout << render_table_records(t);
    }
  }
  return 0;
}

struct VerifyArgs {
  std::string family = "c1";
  int n = 2, lmax = 3, kmax = 3;
  bool serial = false;
};

int cmd_verify(const VerifyArgs& a) {
  Family family = parse_family(a.family);
  bool all_ok = true;
  auto report = [&](const std::string& what, const SweepReport& r) {
    std::cout << (r.ok() ? "PASS " : "FAIL ") << what << " (" << r.checked << " elements)";
    if (r.first_failure) std::cout << "\n  counterexample: " << *r.first_failure;
    std::cout << '\n';
    all_ok = all_ok && r.ok();
  };
  for (int l = 1; l <= a.lmax; ++l)
    for (int k = 1; k <= a.kmax; ++k) {
      std::string tag = " n=" + std::to_string(a.n) + " l=" + std::to_string(l) + " k=" + std::to_string(k);
      report("rule vs oracle" + tag, a.serial ? sweep_rule_vs_oracle_serial(family, a.n, l, k)
                                               : sweep_rule_vs_oracle(family, a.n, l, k));
      if (family == Family::C1)
        report("rule vs diagram" + tag,
               a.serial ? sweep_rule_vs_diagram_serial(a.n, l, k) : sweep_rule_vs_diagram(a.n, l, k));
    }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-row affine crystals: combinatorial R matrices, energies and 1dsums"};
  app.require_subcommand(1);

  RmapArgs ra;
  auto* rm = app.add_subcommand("rmap", "Image and energy of b1 (x) b2 under the R matrix");
  rm->add_option("--family", ra.family, "c1 or a2")->capture_default_str();
  rm->add_option("--n", ra.n, "rank")->required();
  rm->add_option("--lhs", ra.lhs, "left factor as a word, e.g. \"1 2 3\"");
  rm->add_option("--rhs", ra.rhs, "right factor as a word, e.g. \"2b 1b\"");
  rm->add_option("--lhs-coords", ra.lhs_coords, "left factor as x1,..,xn;xbn,..,xb1;l");
  rm->add_option("--rhs-coords", ra.rhs_coords, "right factor as x1,..,xn;xbn,..,xb1;l");
  rm->add_option("--algo", ra.algo, "insert, diagram or oracle")->capture_default_str();
  rm->add_option("--dump-graph", ra.dump_graph, "with --algo oracle: write the crystal graph here");
  rm->add_flag("--trace", ra.trace, "print intermediate tableaux or diagrams");
  rm->add_flag("--json", ra.as_json, "emit one JSON record");

  InsertArgs ia;
  auto* ins = app.add_subcommand("insert", "Column-insert a one-row word into a tableau");
  ins->add_option("--n", ia.n, "rank")->required();
  ins->add_option("--target", ia.target, "tableau \"row1 / row2\" (may be empty)");
  ins->add_option("--letters", ia.letters, "one-row word to insert")->required();
  ins->add_flag("--trace", ia.trace, "show every intermediate tableau");
  ins->add_flag("--json", ia.as_json, "emit one JSON record");

  SumArgs sa;
  auto* sum = app.add_subcommand("onedsum", "Classically restricted 1dsum X_{lambda,mu}(t)");
  sum->add_option("--n", sa.n, "rank (default max(2, length(mu), length(lambda)))");
  sum->add_option("--lambda", sa.lambda, "partition, e.g. \"2,1\" (empty for the empty partition)");
  sum->add_option("--mu", sa.mu, "partition, e.g. \"2,1,1\"")->required();
  sum->add_flag("--kostka", sa.kostka, "also print the fermionic Kostka polynomial (|lambda| = |mu|)");
  sum->add_flag("--json", sa.as_json, "emit one JSON record");

  TableArgs ta;
  auto* tab = app.add_subcommand("table", "Tables of X_{lambda,mu}(t) by |mu|");
  tab->add_option("--min-mu-size", ta.min_size, "smallest |mu|")->capture_default_str();
  tab->add_option("--max-mu-size", ta.max_size, "largest |mu|")->capture_default_str();
  tab->add_option("--format", ta.format, "text or records")->capture_default_str();
  tab->add_flag("--serial", ta.serial, "use the single-threaded reference kernel");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Sweep insertion rule against oracle and diagram");
  ver->add_option("--family", va.family, "c1 or a2")->capture_default_str();
  ver->add_option("--n", va.n, "rank")->capture_default_str();
  ver->add_option("--lmax", va.lmax, "largest l")->capture_default_str();
  ver->add_option("--kmax", va.kmax, "largest k")->capture_default_str();
  ver->add_flag("--serial", va.serial, "use the single-threaded reference sweep");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*rm) return cmd_rmap(ra);
    if (*ins) return cmd_insert(ia);
    if (*sum) return cmd_onedsum(sa);
    if (*tab) return cmd_table(ta);
    if (*ver) return cmd_verify(va);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitPrecondition;
  }
  return 0;
}
