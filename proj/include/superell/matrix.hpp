#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "superell/prime_field.hpp"

namespace superell {

using Vec = std::vector<std::uint64_t>;

// Dense row-major matrix over F_p. Everything in scope stays small
// (dimensions of a few hundred at most), so no sparse or blocked paths.
class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix(PrimeField field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), e_(rows * cols, 0) {}

  static PrimeFieldMatrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint64_t at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::uint64_t v) {
    e_[r * cols_ + c] = v % field_.modulus();
  }

  Vec row(std::size_t r) const;

  PrimeFieldMatrix operator*(const PrimeFieldMatrix& o) const;
  PrimeFieldMatrix operator+(const PrimeFieldMatrix& o) const;
  PrimeFieldMatrix operator-(const PrimeFieldMatrix& o) const;
  PrimeFieldMatrix scaled(std::uint64_t c) const;
  Vec apply(const Vec& v) const;  // matrix * column vector
  PrimeFieldMatrix transpose() const;

  bool is_zero() const;
  bool operator==(const PrimeFieldMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_ &&
           field_ == o.field_;
  }

  const std::vector<std::uint64_t>& entries() const { return e_; }
  std::vector<std::uint64_t>& entries() { return e_; }

 private:
  PrimeField field_;
  std::size_t rows_, cols_;
  std::vector<std::uint64_t> e_;
};

struct RankNullspace {
  std::size_t rank;
  std::vector<Vec> nullspace;  // reduced-echelon normal form, deterministic
};

// Rank plus an echelonized kernel basis; rank + nullspace.size() == cols.
RankNullspace rank_nullspace(const PrimeFieldMatrix& m);

std::size_t rank(const PrimeFieldMatrix& m);

PrimeFieldMatrix rref(const PrimeFieldMatrix& m);

std::uint64_t determinant(const PrimeFieldMatrix& m);

std::optional<PrimeFieldMatrix> try_inverse(const PrimeFieldMatrix& m);
PrimeFieldMatrix inverse(const PrimeFieldMatrix& m);  // throws if singular

// Some x with m*x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve_linear(const PrimeFieldMatrix& m, const Vec& b);

// Incrementally maintained reduced-echelon basis of a subspace of F_p^n.
// Rows are kept fully reduced with monic pivots in increasing column order,
// so two equal subspaces always produce byte-identical bases.
class EchelonBasis {
 public:
  EchelonBasis(PrimeField field, std::size_t n)
      : field_(field), n_(n), pivot_of_col_(n, kNoPivot) {}

  // Reduces v against the basis; inserts the remainder if nonzero.
  // Returns true when the basis grew.
  bool insert(Vec v);

  // Remainder of v after reduction against the basis.
  Vec reduce(Vec v) const;

  bool contains(const Vec& v) const;

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return n_; }
  // Rows sorted by pivot column (canonical order).
  std::vector<Vec> rows() const;
  // Rows in insertion order; index dim()-1 is the latest insert.
  const Vec& row_unsorted(std::size_t i) const { return rows_[i]; }

  // Flattened canonical form, usable as a dedup key.
  std::vector<std::uint64_t> key() const;

 private:
  static constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);
  PrimeField field_;
  std::size_t n_;
  std::vector<Vec> rows_;                 // unordered internally
  std::vector<std::size_t> pivot_col_;    // pivot column of rows_[i]
  std::vector<std::size_t> pivot_of_col_; // col -> row index or kNoPivot
};

}  // namespace superell
