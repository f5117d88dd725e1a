#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "screwsr/errors.hpp"
#include "screwsr/scalar.hpp"

namespace screwsr {

using cplx = std::complex<double>;

/// Dense row-major matrix over R, C or H. Entries are quaternions; the field
/// tag records which components may be non-zero and is kept uniform by every
/// operation in this header.
class Mat
{
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols, Field field = Field::Real)
      : rows_(rows), cols_(cols), field_(field), data_(rows * cols)
  {}

  static Mat zeros(std::size_t rows, std::size_t cols, Field field = Field::Real)
  {
    return Mat(rows, cols, field);
  }

  static Mat identity(std::size_t n, Field field = Field::Real)
  {
    Mat m(n, n, field);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  /// Real matrix from nested rows.
  static Mat real(std::initializer_list<std::initializer_list<double>> rows)
  {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    Mat m(r, c, Field::Real);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("Mat::real: ragged rows");
      std::size_t j = 0;
      for (double v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }
  Field field() const { return field_; }

  Quaternion& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Quaternion& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Quaternion>& data() { return data_; }
  const std::vector<Quaternion>& data() const { return data_; }

  /// Re-tag as a wider field. Narrowing drops components and is only done by
  /// the explicit `project_to`.
  Mat promoted(Field f) const
  {
    Mat m = *this;
    m.field_ = wider(field_, f);
    return m;
  }

  Mat project_to(Field f) const
  {
    Mat m = *this;
    m.field_ = f;
    for (auto& q : m.data_) {
      if (f == Field::Real) q = Quaternion(q.w);
      else if (f == Field::Complex) q = Quaternion(q.w, q.x, 0.0, 0.0);
    }
    return m;
  }

  /// Conjugate transpose.
  Mat adjoint() const
  {
    Mat m(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j).conj();
    return m;
  }

  Mat transpose() const
  {
    Mat m(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
  {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("Mat::block: out of range");
    Mat m(nr, nc, field_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  void set_block(std::size_t r0, std::size_t c0, const Mat& b)
  {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("Mat::set_block: out of range");
    field_ = wider(field_, b.field_);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Mat& operator+=(const Mat& o)
  {
    require_same_shape(o, "operator+=");
    field_ = wider(field_, o.field_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o)
  {
    require_same_shape(o, "operator-=");
    field_ = wider(field_, o.field_);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(double s)
  {
    for (auto& q : data_) q *= s;
    return *this;
  }

  /// Left multiplication of every entry by a scalar of the matching field.
  Mat scaled_left(const Quaternion& q, Field qfield) const
  {
    Mat m = *this;
    m.field_ = wider(field_, qfield);
    for (auto& e : m.data_) e = q * e;
    return m;
  }

  void require_same_shape(const Mat& o, const char* what) const
  {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string(what) + ": shape mismatch " + shape_string() + " vs " + o.shape_string());
  }

  std::string shape_string() const
  {
    return std::to_string(rows_) + "x" + std::to_string(cols_) + std::string(field_name(field_));
  }

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::Real;
  std::vector<Quaternion> data_;
};

inline Mat operator+(Mat a, const Mat& b) { return a += b; }
inline Mat operator-(Mat a, const Mat& b) { return a -= b; }
inline Mat operator-(Mat a) { return a *= -1.0; }
inline Mat operator*(double s, Mat a) { return a *= s; }
inline Mat operator*(Mat a, double s) { return a *= s; }

inline Mat operator*(const Mat& a, const Mat& b)
{
  if (a.cols() != b.rows())
    throw DimensionError("matrix product: " + a.shape_string() + " * " + b.shape_string());
  const Field f = wider(a.field(), b.field());
  Mat c(a.rows(), b.cols(), f);
  const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
  const auto& ad = a.data();
  const auto& bd = b.data();
  auto& cd = c.data();
  switch (f) {
    case Field::Real:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
          const double aik = ad[i * m + k].w;
          if (aik == 0.0) continue;
          for (std::size_t j = 0; j < p; ++j) cd[i * p + j].w += aik * bd[k * p + j].w;
        }
      break;
    case Field::Complex:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
          const double ar = ad[i * m + k].w, ai = ad[i * m + k].x;
          if (ar == 0.0 && ai == 0.0) continue;
          for (std::size_t j = 0; j < p; ++j) {
            const Quaternion& bq = bd[k * p + j];
            cd[i * p + j].w += ar * bq.w - ai * bq.x;
            cd[i * p + j].x += ar * bq.x + ai * bq.w;
          }
        }
      break;
    case Field::Quaternion:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
          const Quaternion& aq = ad[i * m + k];
          if (aq.norm2() == 0.0) continue;
          for (std::size_t j = 0; j < p; ++j) cd[i * p + j] += aq * bd[k * p + j];
        }
      break;
  }
  return c;
}

inline double frobenius_norm(const Mat& a)
{
  double s = 0.0;
  for (const auto& q : a.data()) s += q.norm2();
  return std::sqrt(s);
}

inline double max_abs(const Mat& a)
{
  double m = 0.0;
  for (const auto& q : a.data()) m = std::max(m, q.abs());
  return m;
}

/// Frobenius norm of a - b.
inline double distance(const Mat& a, const Mat& b)
{
  a.require_same_shape(b, "distance");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += (a.data()[k] - b.data()[k]).norm2();
  return std::sqrt(s);
}

/// ||X + X*||, zero exactly for anti-Hermitian X.
inline double anti_hermitian_residual(const Mat& x) { return frobenius_norm(x + x.adjoint()); }

/// ||U* U - I||.
inline double unitarity_residual(const Mat& u)
{
  return distance(u.adjoint() * u, Mat::identity(u.cols(), u.field()));
}

// ---------------------------------------------------------------------------
// Complex carrier used by the spectral and exponential kernels.

/// Dense row-major complex matrix.
struct CMat
{
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<cplx> a;

  CMat() = default;
  CMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  static CMat identity(std::size_t n)
  {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  cplx& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  double norm() const
  {
    double s = 0.0;
    for (const auto& v : a) s += std::norm(v);
    return std::sqrt(s);
  }
};

inline CMat operator*(const CMat& x, const CMat& y)
{
  if (x.cols != y.rows) throw DimensionError("CMat product: shape mismatch");
  CMat c(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const cplx xik = x(i, k);
      if (xik == 0.0) continue;
      const cplx* yr = &y.a[k * y.cols];
      cplx* cr = &c.a[i * c.cols];
      for (std::size_t j = 0; j < y.cols; ++j) cr[j] += xik * yr[j];
    }
  return c;
}

inline CMat operator-(CMat x, const CMat& y)
{
  if (x.rows != y.rows || x.cols != y.cols) throw DimensionError("CMat difference: shape mismatch");
  for (std::size_t k = 0; k < x.a.size(); ++k) x.a[k] -= y.a[k];
  return x;
}

inline CMat operator+(CMat x, const CMat& y)
{
  if (x.rows != y.rows || x.cols != y.cols) throw DimensionError("CMat sum: shape mismatch");
  for (std::size_t k = 0; k < x.a.size(); ++k) x.a[k] += y.a[k];
  return x;
}

inline CMat operator*(double s, CMat x)
{
  for (auto& v : x.a) v *= s;
  return x;
}

inline CMat adjoint(const CMat& x)
{
  CMat c(x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j) c(j, i) = std::conj(x(i, j));
  return c;
}

/// Complex image of a matrix. Real and complex matrices map to themselves;
/// a quaternionic n x m matrix Q = A + B j maps to the 2n x 2m matrix
/// [[A, B], [-conj(B), conj(A)]], which is multiplicative and sends Q* to
/// the complex conjugate transpose.
inline CMat embed_complex(const Mat& m)
{
  if (m.field() != Field::Quaternion) {
    CMat c(m.rows(), m.cols());
    for (std::size_t k = 0; k < m.size(); ++k) c.a[k] = m.data()[k].a();
    return c;
  }
  const std::size_t n = m.rows(), p = m.cols();
  CMat c(2 * n, 2 * p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      const cplx a = m(i, j).a(), b = m(i, j).b();
      c(i, j) = a;
      c(i, p + j) = b;
      c(n + i, j) = -std::conj(b);
      c(n + i, p + j) = std::conj(a);
    }
  return c;
}

/// Inverse of `embed_complex` for a target field; components outside the
/// field (and the redundant lower blocks of a quaternionic image) are dropped.
inline Mat unembed_complex(const CMat& c, Field field)
{
  if (field != Field::Quaternion) {
    Mat m(c.rows, c.cols, field);
    for (std::size_t k = 0; k < c.a.size(); ++k)
      m.data()[k] = field == Field::Real ? Quaternion(c.a[k].real()) : Quaternion::from_complex(c.a[k]);
    return m;
  }
  if (c.rows % 2 || c.cols % 2) throw DimensionError("unembed_complex: odd size for quaternionic image");
  const std::size_t n = c.rows / 2, p = c.cols / 2;
  Mat m(n, p, Field::Quaternion);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) m(i, j) = Quaternion::from_pair(c(i, j), c(i, p + j));
  return m;
}

/// Largest deviation of a complex matrix from the [[A, B], [-conj B, conj A]]
/// pattern.
inline double quaternionic_pattern_residual(const CMat& c)
{
  const std::size_t n = c.rows / 2, p = c.cols / 2;
  double r = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      r = std::max(r, std::abs(c(n + i, p + j) - std::conj(c(i, j))));
      r = std::max(r, std::abs(c(n + i, j) + std::conj(c(i, p + j))));
    }
  return r;
}

/// Block matrix [[a, b], [c, d]] from equally sized square blocks.
inline Mat block2x2(const Mat& a, const Mat& b, const Mat& c, const Mat& d)
{
  const std::size_t n = a.rows();
  Field f = wider(wider(a.field(), b.field()), wider(c.field(), d.field()));
  Mat m(2 * n, 2 * n, f);
  m.set_block(0, 0, a);
  m.set_block(0, n, b);
  m.set_block(n, 0, c);
  m.set_block(n, n, d);
  return m;
}

}  // namespace screwsr
