#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sqid/modular.hpp"

namespace sqid {

// Dense row-major matrix over Z/p with exact elimination-based rank and
// kernel. No pivoting heuristics beyond first nonzero: arithmetic is exact.
class FMatrix {
 public:
  FMatrix(std::size_t rows, std::size_t cols, Modulus mod);

  static FMatrix identity(std::size_t k, Modulus mod);
  static FMatrix from_rows(const std::vector<std::vector<fe_t>>& rows, Modulus mod);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Modulus modulus() const { return mod_; }

  fe_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  fe_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  std::span<const fe_t> row(std::size_t i) const {
    return std::span<const fe_t>(a_.data() + i * cols_, cols_);
  }
  std::span<fe_t> row(std::size_t i) {
    return std::span<fe_t>(a_.data() + i * cols_, cols_);
  }

  FMatrix transposed() const;
  std::vector<fe_t> mul_vec(std::span<const fe_t> v) const;  // ShapeMismatch
  FMatrix mul(const FMatrix& rhs) const;                     // ShapeMismatch

  std::size_t rank() const;

  // Columns span the right kernel {x : Mx = 0}; shape cols x nullity.
  FMatrix kernel_basis() const;

  bool is_zero() const;
  bool operator==(const FMatrix& o) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Modulus mod_;
  std::vector<fe_t> a_;
};

// Rank of a horizontally stacked matrix [B1 | B2 | ...] fed block by block.
// Keeps a normalized echelon basis of the accumulated column space; add_*
// become no-ops once the optional target rank is reached.
class RankAccumulator {
 public:
  RankAccumulator(std::size_t rows, Modulus mod,
                  std::optional<std::size_t> target = std::nullopt);

  void add_column(std::span<const fe_t> col);  // ShapeMismatch on bad length
  void add_block(const FMatrix& block);        // ShapeMismatch on bad row count

  std::size_t rows() const { return rows_; }
  std::size_t rank() const { return basis_.size(); }
  bool target_reached() const { return target_ && basis_.size() >= *target_; }

 private:
  std::size_t rows_;
  Modulus mod_;
  std::optional<std::size_t> target_;
  std::vector<std::vector<fe_t>> basis_;  // echelon columns, pivot entry 1
  std::vector<std::size_t> pivots_;       // pivot row of each basis column
};

// Rank of the stack of all blocks the supplier yields (nullopt ends the
// stream). The first block fixes the row count; later mismatches raise
// ShapeMismatch. Stops pulling blocks once `target` is reached.
std::size_t rank_lower_bound_streaming(
    const std::function<std::optional<FMatrix>()>& supplier,
    std::optional<std::size_t> target = std::nullopt);

}  // namespace sqid
