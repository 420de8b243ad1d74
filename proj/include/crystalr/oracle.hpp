#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <vector>

#include "crystalr/crystal.hpp"
#include "crystalr/rmatrix.hpp"

namespace crystalr {

// All elements of B_l, lexicographic in the coordinate vector.
std::vector<OneRowElement> enumerate_b(Family family, int n, int l);

// Precomputed Kashiwara operators on one B_l, addressed by element index.
class FactorTable {
 public:
  FactorTable(Family family, int n, int l);

  int size() const { return static_cast<int>(elems_.size()); }
  int rank() const { return n_; }
  const OneRowElement& element(int a) const { return elems_[a]; }
  const std::vector<OneRowElement>& elements() const { return elems_; }
  int index_of(const OneRowElement& b) const;

  // -1 stands for the null element.
  int e(int i, int a) const { return e_[i][a]; }
  int f(int i, int a) const { return f_[i][a]; }
  StringLengths lengths(int i, int a) const { return sl_[i][a]; }

 private:
  int n_;
  std::vector<OneRowElement> elems_;
  std::vector<std::vector<int>> e_, f_;
  std::vector<std::vector<StringLengths>> sl_;
};

// The affine crystal graph of B_l ⊗ B_k with vertex id a * |B_k| + b.
class CrystalGraph {
 public:
  CrystalGraph(std::shared_ptr<const FactorTable> left, std::shared_ptr<const FactorTable> right);

  int size() const { return left_->size() * right_->size(); }
  int rank() const { return left_->rank(); }
  int vertex(int a, int b) const { return a * right_->size() + b; }
  int left_of(int v) const { return v / right_->size(); }
  int right_of(int v) const { return v % right_->size(); }
  const FactorTable& left() const { return *left_; }
  const FactorTable& right() const { return *right_; }

  int e(int i, int v) const;
  int f(int i, int v) const;
  StringLengths lengths(int i, int v) const;

  // Line-oriented dump: "v <id> <left coords> | <right coords>" then "f <i> <from> <to>".
  void dump(std::ostream& out) const;

 private:
  std::shared_ptr<const FactorTable> left_, right_;
};

class BruteForceRMatrix {
 public:
  Family family() const { return family_; }
  int rank() const { return n_; }
  int l() const { return l_; }
  int k() const { return k_; }
  const CrystalGraph& source() const { return *src_; }
  const CrystalGraph& target() const { return *dst_; }

  // Image vertex in B_k ⊗ B_l and energy of a source vertex.
  int image(int v) const { return image_[v]; }
  int energy(int v) const { return energy_[v]; }
  // Energy of (l,0,...,0) ⊗ (k,0,...,0) after normalization.
  int anchor_energy() const { return anchor_energy_; }

  RMatrixResult lookup(const OneRowElement& b1, const OneRowElement& b2) const;

  // Number of 0-edges on which the three-branch energy rule fails.
  std::size_t energy_axiom_violations() const;

 private:
  friend BruteForceRMatrix rmap_bruteforce(Family, int, int, int, std::size_t);
  Family family_ = Family::C1;
  int n_ = 0, l_ = 0, k_ = 0;
  std::unique_ptr<CrystalGraph> src_, dst_;
  std::vector<int> image_, energy_;
  int anchor_energy_ = 0;
};

// Builds the R matrix and energy of B_l ⊗ B_k from the crystal graph alone,
// starting at the anchor (l,0,...,0) ⊗ (k,0,...,0).
BruteForceRMatrix rmap_bruteforce(Family family, int n, int l, int k,
                                  std::size_t vertex_cap = 2'000'000);

}  // namespace crystalr
