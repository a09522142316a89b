#include "assocgeom/matrix.hpp"

#include <utility>

namespace asg {

template <FieldElement K>
Matrix<K>::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, K(0, field)) {}

template <FieldElement K>
Matrix<K> Matrix<K>::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1, field);
  return m;
}

template <FieldElement K>
Matrix<K> Matrix<K>::from_ints(Field field, std::size_t rows, std::size_t cols,
                               std::initializer_list<std::int64_t> entries) {
  if (entries.size() != rows * cols) {
    throw Error(ErrorCode::kInvalidArgument, "matrix literal has wrong entry count");
  }
  Matrix m(field, rows, cols);
  std::size_t i = 0;
  for (auto v : entries) m.data_[i++] = K(v, field);
  return m;
}

template <FieldElement K>
Matrix<K> Matrix<K>::from_rows(Field field, std::size_t cols, const std::vector<std::vector<K>>& rows) {
  Matrix m(field, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

template <FieldElement K>
std::vector<K> Matrix<K>::col_vector(std::size_t c) const {
  std::vector<K> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

template <FieldElement K>
void Matrix<K>::append_row(std::span<const K> values) {
  if (values.size() != cols_) throw Error(ErrorCode::kMismatch, "row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

template <FieldElement K>
Matrix<K> Matrix<K>::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

template <FieldElement K>
Matrix<K> Matrix<K>::row_block(std::size_t r0, std::size_t count) const {
  Matrix out(field_, 0, cols_);
  out.data_.assign(data_.begin() + static_cast<std::ptrdiff_t>(r0 * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r0 + count) * cols_));
  out.rows_ = count;
  return out;
}

template <FieldElement K>
Matrix<K> Matrix<K>::col_block(std::size_t c0, std::size_t count) const {
  Matrix out(field_, rows_, count);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, c0 + c);
  return out;
}

template <FieldElement K>
Matrix<K> Matrix<K>::vstack(const Matrix& below) const {
  if (below.cols_ != cols_) throw Error(ErrorCode::kMismatch, "vstack: column counts differ");
  Matrix out = *this;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  out.rows_ += below.rows_;
  return out;
}

template <FieldElement K>
Matrix<K> Matrix<K>::hstack(const Matrix& right) const {
  if (right.rows_ != rows_) throw Error(ErrorCode::kMismatch, "hstack: row counts differ");
  Matrix out(field_, rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) out(r, cols_ + c) = right(r, c);
  }
  return out;
}

template <FieldElement K>
std::vector<K> Matrix<K>::apply(std::span<const K> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::kMismatch, "apply: vector length does not match column count");
  std::vector<K> out(rows_, K(0, field_));
  for (std::size_t r = 0; r < rows_; ++r) {
    K acc(0, field_);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero()) acc += (*this)(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

template <FieldElement K>
bool Matrix<K>::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

template <FieldElement K>
bool Matrix<K>::is_identity() const {
  if (rows_ != cols_) return false;
  const K one(1, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? one : K(0, field_))) return false;
  return true;
}

template <FieldElement K>
Matrix<K> Matrix<K>::operator-() const {
  Matrix out = *this;
  for (auto& e : out.data_) e = -e;
  return out;
}

template <FieldElement K>
Matrix<K> Matrix<K>::combine(const Matrix& other, bool subtract) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorCode::kMismatch, "matrix shapes differ");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (subtract)
      out.data_[i] -= other.data_[i];
    else
      out.data_[i] += other.data_[i];
  }
  return out;
}

template <FieldElement K>
Matrix<K> Matrix<K>::multiply(const Matrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::kMismatch, "matrix product: inner dimensions differ");
  Matrix out(field_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const K& a = (*this)(r, k);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

template <FieldElement K>
Matrix<K> Matrix<K>::scaled(const K& s) const {
  Matrix out = *this;
  for (auto& e : out.data_) e = s * e;
  return out;
}

template <FieldElement K>
std::string Matrix<K>::str() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ' ';
      out += (*this)(r, c).str();
    }
    out += '\n';
  }
  return out;
}

template <FieldElement K>
Rref<K> rref(const Matrix<K>& m) {
  Matrix<K> a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t piv = lead;
    while (piv < rows && a(piv, c).is_zero()) ++piv;
    if (piv == rows) continue;
    if (piv != lead) {
      auto r1 = a.row(piv), r2 = a.row(lead);
      for (std::size_t j = c; j < cols; ++j) std::swap(r1[j], r2[j]);
    }
    auto prow = a.row(lead);
    if (!prow[c].is_one()) {
      const K inv = prow[c].inv();
      for (std::size_t j = c; j < cols; ++j) prow[j] = prow[j] * inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead) continue;
      auto row = a.row(r);
      if (row[c].is_zero()) continue;
      const K f = row[c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!prow[j].is_zero()) row[j] -= f * prow[j];
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return {a.row_block(0, lead), std::move(pivots)};
}

template <FieldElement K>
std::size_t rank(const Matrix<K>& m) {
  return rref(m).pivots.size();
}

template <FieldElement K>
Matrix<K> kernel(const Matrix<K>& m) {
  const auto r = rref(m);
  const std::size_t n = m.cols();
  const Field f = m.field();
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  Matrix<K> basis(f, 0, n);
  std::vector<K> v(n, K(0, f));
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), K(0, f));
    v[free] = K(1, f);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.form(i, free);
    basis.append_row(v);
  }
  return rref(basis).form;
}

template <FieldElement K>
std::optional<std::vector<K>> solve(const Matrix<K>& m, std::span<const K> b) {
  if (b.size() != m.rows()) throw Error(ErrorCode::kMismatch, "solve: right-hand side length differs from row count");
  const Field f = m.field();
  Matrix<K> aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return std::nullopt;
  std::vector<K> x(m.cols(), K(0, f));
  for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.form(i, m.cols());
  return x;
}

template <FieldElement K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  const auto red = rref(m.hstack(Matrix<K>::identity(m.field(), n)));
  if (red.pivots.size() < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  return red.form.col_block(n, n);
}

template <FieldElement K>
bool proportional(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  const auto ea = a.entries(), eb = b.entries();
  std::optional<K> lambda;
  for (std::size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].is_zero() != eb[i].is_zero()) return false;
    if (ea[i].is_zero()) continue;
    const K q = ea[i] * eb[i].inv();
    if (!lambda) lambda = q;
    else if (*lambda != q) return false;
  }
  return true;
}

#define ASG_INSTANTIATE_MATRIX(K)                                                  \
  template class Matrix<K>;                                                        \
  template Rref<K> rref(const Matrix<K>&);                                         \
  template std::size_t rank(const Matrix<K>&);                                     \
  template Matrix<K> kernel(const Matrix<K>&);                                     \
  template std::optional<std::vector<K>> solve(const Matrix<K>&, std::span<const K>); \
  template std::optional<Matrix<K>> inverse(const Matrix<K>&);                     \
  template bool proportional(const Matrix<K>&, const Matrix<K>&);

ASG_INSTANTIATE_MATRIX(Fp)
ASG_INSTANTIATE_MATRIX(Rational)

}  // namespace asg
