#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "screwsr/errors.hpp"
#include "screwsr/linalg.hpp"
#include "screwsr/matrix.hpp"
#include "screwsr/random.hpp"

namespace screwsr {

enum class Family { SO, SU, Sp };

/// One of the compact classical groups SO(n), SU(n), Sp(n).
struct CompactGroupId
{
  Family family = Family::SO;
  int n = 3;

  /// Semisimplicity guard: SO(n) needs n >= 3, SU(n) n >= 2, Sp(n) n >= 1.
  bool valid() const
  {
    switch (family) {
      case Family::SO: return n >= 3;
      case Family::SU: return n >= 2;
      case Family::Sp: return n >= 1;
    }
    return false;
  }

  void require_valid() const
  {
    if (!valid()) throw DomainError(name() + " is not a compact semisimple group in this family");
  }

  Field field() const
  {
    switch (family) {
      case Family::SO: return Field::Real;
      case Family::SU: return Field::Complex;
      case Family::Sp: return Field::Quaternion;
    }
    return Field::Real;
  }

  /// dim of the Lie algebra.
  int dim() const
  {
    switch (family) {
      case Family::SO: return n * (n - 1) / 2;
      case Family::SU: return n * n - 1;
      case Family::Sp: return n * (2 * n + 1);
    }
    return 0;
  }

  std::string name() const
  {
    const char* f = family == Family::SO ? "SO" : family == Family::SU ? "SU" : "Sp";
    return std::string(f) + "(" + std::to_string(n) + ")";
  }

  bool operator==(const CompactGroupId&) const = default;
};

/// Accepts "SU2", "SU:2", "SU(2)", "su2", "Sp:1", ...
inline CompactGroupId parse_group(std::string_view text)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != ':' && c != '(' && c != ')') s += c;
  std::size_t digits = s.size();
  while (digits > 0 && std::isdigit(static_cast<unsigned char>(s[digits - 1]))) --digits;
  if (digits == s.size() || digits == 0) throw DomainError("cannot parse group '" + std::string(text) + "'");
  std::string fam = s.substr(0, digits);
  for (auto& c : fam) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  CompactGroupId id;
  if (fam == "SO") id.family = Family::SO;
  else if (fam == "SU") id.family = Family::SU;
  else if (fam == "SP") id.family = Family::Sp;
  else throw DomainError("unknown group family '" + fam + "'");
  id.n = std::stoi(s.substr(digits));
  id.require_valid();
  return id;
}

/// Ordered basis of the compact Lie algebra, orthonormal for
/// `re_trace_inner`.
struct AlgebraBasis
{
  CompactGroupId group;
  std::vector<Mat> elements;
  /// Row-major Gram matrix of `elements`.
  std::vector<double> gram;

  std::size_t size() const { return elements.size(); }
};

namespace detail {

inline Mat unit_pair(std::size_t n, std::size_t i, std::size_t j, Quaternion q, Field f)
{
  // (q E_ij - conj(q) E_ji) / sqrt 2
  Mat m(n, n, f);
  m(i, j) = (1.0 / std::sqrt(2.0)) * q;
  m(j, i) = -(1.0 / std::sqrt(2.0)) * q.conj();
  return m;
}

}  // namespace detail

/// Standard orthonormal anti-Hermitian basis:
///  - SO(n): (E_ij - E_ji)/sqrt2, i < j lexicographic;
///  - SU(n): for each i < j the real and imaginary pair elements, then the
///    normalized diagonal generators i diag(1,..,1,-m,0,..)/sqrt(m(m+1));
///  - Sp(n): q E_ii for q in {i, j, k}, then (q E_ij - conj q E_ji)/sqrt2 for
///    q in {1, i, j, k}.
inline AlgebraBasis algebra_basis(const CompactGroupId& id)
{
  id.require_valid();
  const auto n = static_cast<std::size_t>(id.n);
  const Field f = id.field();
  AlgebraBasis basis{id, {}, {}};
  auto& el = basis.elements;
  switch (id.family) {
    case Family::SO:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) el.push_back(detail::unit_pair(n, i, j, 1.0, f));
      break;
    case Family::SU:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          el.push_back(detail::unit_pair(n, i, j, 1.0, f));
          el.push_back(detail::unit_pair(n, i, j, kI, f));
        }
      for (std::size_t m = 1; m < n; ++m) {
        Mat d(n, n, f);
        const double s = 1.0 / std::sqrt(static_cast<double>(m * (m + 1)));
        for (std::size_t i = 0; i < m; ++i) d(i, i) = s * kI;
        d(m, m) = (-static_cast<double>(m) * s) * kI;
        el.push_back(d);
      }
      break;
    case Family::Sp:
      for (std::size_t i = 0; i < n; ++i)
        for (Quaternion q : {kI, kJ, kK}) {
          Mat d(n, n, f);
          d(i, i) = q;
          el.push_back(d);
        }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          for (Quaternion q : {Quaternion(1.0), kI, kJ, kK}) el.push_back(detail::unit_pair(n, i, j, q, f));
      break;
  }
  basis.gram = gram_matrix(basis.elements);
  return basis;
}

/// Coordinates of an algebra element in an orthonormal basis.
inline std::vector<double> coordinates(const AlgebraBasis& basis, const Mat& x)
{
  std::vector<double> c(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) c[i] = re_trace_inner(basis.elements[i], x);
  return c;
}

inline Mat combine(const AlgebraBasis& basis, const std::vector<double>& coeffs)
{
  if (coeffs.size() != basis.size()) throw DimensionError("combine: coefficient count mismatch");
  const auto n = static_cast<std::size_t>(basis.group.n);
  Mat x(n, n, basis.group.field());
  for (std::size_t i = 0; i < coeffs.size(); ++i) x += coeffs[i] * basis.elements[i];
  return x;
}

/// Ad(g) x = g x g^{-1}.
inline Mat adjoint(const Mat& g, const Mat& x)
{
  if (!g.square() || !x.square() || g.rows() != x.rows())
    throw DimensionError("adjoint: size mismatch " + g.shape_string() + " / " + x.shape_string());
  return g * x * inverse(g);
}

/// Seeded algebra element scale * sum c_i b_i with c_i uniform in [-1, 1).
inline Mat random_algebra_element(const CompactGroupId& id, std::uint64_t seed, double scale = 1.0)
{
  if (!(scale > 0.0)) throw DomainError("random_algebra_element: scale must be positive");
  const AlgebraBasis basis = algebra_basis(id);
  Rng rng(seed);
  std::vector<double> c(basis.size());
  for (auto& v : c) v = scale * rng.uniform(-1.0, 1.0);
  return combine(basis, c);
}

inline Mat random_group_element(const CompactGroupId& id, std::uint64_t seed, double scale = 1.0)
{
  return mat_exp(random_algebra_element(id, seed, scale));
}

}  // namespace screwsr
