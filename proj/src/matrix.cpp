#include "superell/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace superell {

PrimeFieldMatrix PrimeFieldMatrix::identity(PrimeField field, std::size_t n) {
  PrimeFieldMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Vec PrimeFieldMatrix::row(std::size_t r) const {
  return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

PrimeFieldMatrix PrimeFieldMatrix::operator*(const PrimeFieldMatrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_)
    throw std::invalid_argument("matrix multiply: shape mismatch");
  PrimeFieldMatrix r(field_, rows_, o.cols_);
  const std::uint64_t p = field_.modulus();
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = e_[i * cols_ + k];
      if (!a) continue;
      const std::uint64_t* src = &o.e_[k * o.cols_];
      std::uint64_t* dst = &r.e_[i * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j)
        dst[j] = (dst[j] + a * src[j]) % p;
    }
  }
  return r;
}

PrimeFieldMatrix PrimeFieldMatrix::operator+(const PrimeFieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    throw std::invalid_argument("matrix add: shape mismatch");
  PrimeFieldMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    r.e_[i] = field_.add(e_[i], o.e_[i]);
  return r;
}

PrimeFieldMatrix PrimeFieldMatrix::operator-(const PrimeFieldMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    throw std::invalid_argument("matrix subtract: shape mismatch");
  PrimeFieldMatrix r(field_, rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    r.e_[i] = field_.sub(e_[i], o.e_[i]);
  return r;
}

PrimeFieldMatrix PrimeFieldMatrix::scaled(std::uint64_t c) const {
  PrimeFieldMatrix r(field_, rows_, cols_);
  c %= field_.modulus();
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = field_.mul(e_[i], c);
  return r;
}

Vec PrimeFieldMatrix::apply(const Vec& v) const {
  if (v.size() != cols_)
    throw std::invalid_argument("matrix apply: dimension mismatch");
  Vec r(rows_, 0);
  const std::uint64_t p = field_.modulus();
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    const std::uint64_t* row = &e_[i * cols_];
    for (std::size_t j = 0; j < cols_; ++j) acc = (acc + row[j] * v[j]) % p;
    r[i] = acc;
  }
  return r;
}

PrimeFieldMatrix PrimeFieldMatrix::transpose() const {
  PrimeFieldMatrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

bool PrimeFieldMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(),
                     [](std::uint64_t v) { return v == 0; });
}

namespace {

// In-place Gauss-Jordan to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref_in_place(PrimeFieldMatrix& m) {
  const PrimeField& F = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && m.at(pr, c) == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = 0; j < cols; ++j) {
        std::uint64_t t = m.at(r, j);
        m.set(r, j, m.at(pr, j));
        m.set(pr, j, t);
      }
    std::uint64_t piv_inv = F.inv(m.at(r, c));
    for (std::size_t j = c; j < cols; ++j)
      m.set(r, j, F.mul(m.at(r, j), piv_inv));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint64_t f = m.at(i, c);
      if (!f) continue;
      for (std::size_t j = c; j < cols; ++j)
        m.set(i, j, F.sub(m.at(i, j), F.mul(f, m.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

PrimeFieldMatrix rref(const PrimeFieldMatrix& m) {
  PrimeFieldMatrix r = m;
  rref_in_place(r);
  return r;
}

std::size_t rank(const PrimeFieldMatrix& m) {
  PrimeFieldMatrix r = m;
  return rref_in_place(r).size();
}

RankNullspace rank_nullspace(const PrimeFieldMatrix& m) {
  const PrimeField& F = m.field();
  PrimeFieldMatrix r = m;
  std::vector<std::size_t> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;

  RankNullspace out;
  out.rank = pivots.size();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    Vec v(m.cols(), 0);
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = F.neg(r.at(i, c));
    out.nullspace.push_back(std::move(v));
  }
  // Normalize the kernel basis itself to reduced echelon form.
  if (!out.nullspace.empty()) {
    EchelonBasis basis(F, m.cols());
    for (const Vec& v : out.nullspace) basis.insert(v);
    out.nullspace = basis.rows();
  }
  return out;
}

std::uint64_t determinant(const PrimeFieldMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix not square");
  const PrimeField& F = m.field();
  PrimeFieldMatrix a = m;
  const std::size_t n = a.rows();
  std::uint64_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && a.at(pr, c) == 0) ++pr;
    if (pr == n) return 0;
    if (pr != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t t = a.at(c, j);
        a.set(c, j, a.at(pr, j));
        a.set(pr, j, t);
      }
      det = F.neg(det);
    }
    std::uint64_t piv = a.at(c, c);
    det = F.mul(det, piv);
    std::uint64_t piv_inv = F.inv(piv);
    for (std::size_t i = c + 1; i < n; ++i) {
      std::uint64_t f = F.mul(a.at(i, c), piv_inv);
      if (!f) continue;
      for (std::size_t j = c; j < n; ++j)
        a.set(i, j, F.sub(a.at(i, j), F.mul(f, a.at(c, j))));
    }
  }
  return det;
}

std::optional<PrimeFieldMatrix> try_inverse(const PrimeFieldMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  PrimeFieldMatrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, n + i, 1);
  }
  if (rref_in_place(aug).size() != n) return std::nullopt;
  PrimeFieldMatrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.set(i, j, aug.at(i, n + j));
  return inv;
}

PrimeFieldMatrix inverse(const PrimeFieldMatrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw std::domain_error("inverse: matrix is singular");
  return *inv;
}

std::optional<Vec> solve_linear(const PrimeFieldMatrix& m, const Vec& b) {
  if (b.size() != m.rows())
    throw std::invalid_argument("solve_linear: dimension mismatch");
  const PrimeField& F = m.field();
  PrimeFieldMatrix aug(F, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m.at(i, j));
    aug.set(i, m.cols(), b[i]);
  }
  std::vector<std::size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug.at(i, m.cols());
  return x;
}

bool EchelonBasis::insert(Vec v) {
  if (v.size() != n_)
    throw std::invalid_argument("EchelonBasis: dimension mismatch");
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < n_ && v[piv] == 0) ++piv;
  if (piv == n_) return false;
  std::uint64_t inv = field_.inv(v[piv]);
  for (auto& x : v) x = field_.mul(x, inv);
  // Back-substitute the new pivot into existing rows.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    std::uint64_t f = rows_[i][piv];
    if (!f) continue;
    for (std::size_t j = 0; j < n_; ++j)
      rows_[i][j] = field_.sub(rows_[i][j], field_.mul(f, v[j]));
  }
  pivot_of_col_[piv] = rows_.size();
  rows_.push_back(std::move(v));
  pivot_col_.push_back(piv);
  return true;
}

Vec EchelonBasis::reduce(Vec v) const {
  for (std::size_t c = 0; c < n_; ++c) {
    if (v[c] == 0) continue;
    std::size_t r = pivot_of_col_[c];
    if (r == kNoPivot) continue;
    std::uint64_t f = v[c];
    const Vec& row = rows_[r];
    for (std::size_t j = c; j < n_; ++j)
      v[j] = field_.sub(v[j], field_.mul(f, row[j]));
  }
  return v;
}

bool EchelonBasis::contains(const Vec& v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(),
                     [](std::uint64_t x) { return x == 0; });
}

std::vector<Vec> EchelonBasis::rows() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
    return pivot_col_[a] < pivot_col_[b];
  });
  std::vector<Vec> out;
  out.reserve(rows_.size());
  for (std::size_t i : order) out.push_back(rows_[i]);
  return out;
}

std::vector<std::uint64_t> EchelonBasis::key() const {
  std::vector<std::uint64_t> k;
  k.push_back(rows_.size());
  for (const Vec& r : rows()) k.insert(k.end(), r.begin(), r.end());
  return k;
}

}  // namespace superell
