#include "sqid/fmatrix.hpp"

#include <algorithm>
#include <utility>

namespace sqid {

FMatrix::FMatrix(std::size_t rows, std::size_t cols, Modulus mod)
    : rows_(rows), cols_(cols), mod_(mod), a_(rows * cols, 0) {}

FMatrix FMatrix::identity(std::size_t k, Modulus mod) {
  FMatrix m(k, k, mod);
  for (std::size_t i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

FMatrix FMatrix::from_rows(const std::vector<std::vector<fe_t>>& rows,
                           Modulus mod) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows[0].size();
  FMatrix m(r, c, mod);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeMismatch("ragged row list");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

FMatrix FMatrix::transposed() const {
  FMatrix t(cols_, rows_, mod_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

std::vector<fe_t> FMatrix::mul_vec(std::span<const fe_t> v) const {
  if (v.size() != cols_) throw ShapeMismatch("vector length != column count");
  const std::uint64_t p = mod_.p();
  std::vector<fe_t> out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    const fe_t* r = a_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) {
      acc += static_cast<std::uint64_t>(r[j]) * v[j] % p;
    }
    out[i] = static_cast<fe_t>(acc % p);
  }
  return out;
}

FMatrix FMatrix::mul(const FMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ShapeMismatch("inner dimensions differ");
  if (mod_ != rhs.mod_) throw ShapeMismatch("mixed moduli in matrix product");
  const std::uint64_t p = mod_.p();
  FMatrix out(rows_, rhs.cols_, mod_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      fe_t aik = at(i, k);
      if (aik == 0) continue;
      const fe_t* rrow = rhs.a_.data() + k * rhs.cols_;
      fe_t* orow = out.a_.data() + i * out.cols_;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        orow[j] = static_cast<fe_t>(
            (orow[j] + static_cast<std::uint64_t>(aik) * rrow[j]) % p);
      }
    }
  }
  return out;
}

namespace {

// Forward elimination to row echelon form; returns pivot columns. `reduced`
// additionally clears entries above pivots (RREF), as kernel extraction needs.
std::vector<std::size_t> echelonize(FMatrix& w, bool reduced) {
  const Modulus mod = w.modulus();
  const std::uint64_t p = mod.p();
  const std::size_t R = w.rows(), C = w.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    std::size_t pr = rank;
    while (pr < R && w.at(pr, col) == 0) ++pr;
    if (pr == R) continue;
    if (pr != rank) {
      auto a = w.row(pr), b = w.row(rank);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    fe_t piv = w.at(rank, col);
    if (piv != 1) {
      fe_t pinv = mod.inv(piv);
      fe_t* row = w.row(rank).data();
      for (std::size_t j = col; j < C; ++j) {
        row[j] = static_cast<fe_t>(static_cast<std::uint64_t>(row[j]) * pinv % p);
      }
    }
    const fe_t* prow = w.row(rank).data();
    for (std::size_t r = rank + 1; r < R; ++r) {
      fe_t f = w.at(r, col);
      if (f == 0) continue;
      fe_t nf = mod.neg(f);
      fe_t* row = w.row(r).data();
      for (std::size_t j = col; j < C; ++j) {
        row[j] = static_cast<fe_t>(
            (row[j] + static_cast<std::uint64_t>(nf) * prow[j]) % p);
      }
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  if (reduced) {
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
      std::size_t col = pivot_cols[k];
      const fe_t* prow = w.row(k).data();
      for (std::size_t r = 0; r < k; ++r) {
        fe_t f = w.at(r, col);
        if (f == 0) continue;
        fe_t nf = mod.neg(f);
        fe_t* row = w.row(r).data();
        for (std::size_t j = col; j < C; ++j) {
          row[j] = static_cast<fe_t>(
              (row[j] + static_cast<std::uint64_t>(nf) * prow[j]) % p);
        }
      }
    }
  }
  return pivot_cols;
}

}  // namespace

std::size_t FMatrix::rank() const {
  FMatrix w(*this);
  return echelonize(w, false).size();
}

FMatrix FMatrix::kernel_basis() const {
  FMatrix w(*this);
  std::vector<std::size_t> pivot_cols = echelonize(w, true);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivot_cols) is_pivot[c] = true;
  std::size_t nullity = cols_ - pivot_cols.size();
  FMatrix k(cols_, nullity, mod_);
  std::size_t out = 0;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    k.at(free_col, out) = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      fe_t v = w.at(i, free_col);
      if (v != 0) k.at(pivot_cols[i], out) = mod_.neg(v);
    }
    ++out;
  }
  return k;
}

bool FMatrix::is_zero() const {
  for (fe_t v : a_) {
    if (v != 0) return false;
  }
  return true;
}

bool FMatrix::operator==(const FMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && mod_ == o.mod_ && a_ == o.a_;
}

RankAccumulator::RankAccumulator(std::size_t rows, Modulus mod,
                                 std::optional<std::size_t> target)
    : rows_(rows), mod_(mod), target_(target) {}

void RankAccumulator::add_column(std::span<const fe_t> col) {
  if (col.size() != rows_) throw ShapeMismatch("column length != row count");
  if (target_reached()) return;
  const std::uint64_t p = mod_.p();
  std::vector<fe_t> v(col.begin(), col.end());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    fe_t f = v[pivots_[k]];
    if (f == 0) continue;
    fe_t nf = mod_.neg(f);
    const std::vector<fe_t>& b = basis_[k];
    for (std::size_t i = 0; i < rows_; ++i) {
      v[i] = static_cast<fe_t>((v[i] + static_cast<std::uint64_t>(nf) * b[i]) % p);
    }
  }
  std::size_t piv = rows_;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (v[i] != 0) {
      piv = i;
      break;
    }
  }
  if (piv == rows_) return;  // dependent column
  fe_t pinv = mod_.inv(v[piv]);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = mod_.mul(v[i], pinv);
  basis_.push_back(std::move(v));
  pivots_.push_back(piv);
}

void RankAccumulator::add_block(const FMatrix& block) {
  if (block.rows() != rows_) throw ShapeMismatch("block row count mismatch");
  if (block.modulus() != mod_) throw ShapeMismatch("block modulus mismatch");
  std::vector<fe_t> col(rows_);
  for (std::size_t j = 0; j < block.cols(); ++j) {
    if (target_reached()) return;
    for (std::size_t i = 0; i < rows_; ++i) col[i] = block.at(i, j);
    add_column(col);
  }
}

std::size_t rank_lower_bound_streaming(
    const std::function<std::optional<FMatrix>()>& supplier,
    std::optional<std::size_t> target) {
  std::optional<FMatrix> first = supplier();
  if (!first) return 0;
  RankAccumulator acc(first->rows(), first->modulus(), target);
  acc.add_block(*first);
  while (!acc.target_reached()) {
    std::optional<FMatrix> next = supplier();
    if (!next) break;
    acc.add_block(*next);
  }
  return acc.rank();
}

}  // namespace sqid
