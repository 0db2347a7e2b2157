#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace holex {

using Integer = mpz_class;
using Rational = mpq_class;

/// num / den in canonical form (den != 0).
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Integer coordinate vector in a fixed lattice basis.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t n) : coords_(n, 0) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords);

  static LatticeVector zero(std::size_t n) { return LatticeVector(n); }
  static LatticeVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  bool empty() const { return coords_.empty(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Integer>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const;

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& s);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& s, LatticeVector v) { return v *= s; }
  friend LatticeVector operator-(LatticeVector v) { return v *= Integer(-1); }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const LatticeVector& a, const LatticeVector& b) { return a.coords_ < b.coords_; }

  /// Comma-separated coordinates, e.g. "1,-2,0".
  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const;
  LatticeVector col(std::size_t j) const;
  IntMatrix transpose() const;
  LatticeVector operator*(const LatticeVector& v) const;
  IntMatrix operator*(const IntMatrix& other) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// Semicolon-separated rows, e.g. "-2,0;0,-1".
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

enum class Definiteness {
  negative_definite,
  negative_semidefinite_degenerate,
  indefinite_or_positive,
};

const char* to_string(Definiteness d);

/// Free abelian group of finite rank with a symmetric integer bilinear form.
/// Models the Neron-Severi group of a surface with its intersection product.
/// Torsion in NS is not represented; it pairs trivially with everything.
class IntersectionLattice {
 public:
  IntersectionLattice() = default;
  /// Throws DimensionError if gram is not square, DomainError if not symmetric.
  explicit IntersectionLattice(IntMatrix gram);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }

  friend bool operator==(const IntersectionLattice&, const IntersectionLattice&) = default;

 private:
  IntMatrix gram_;
};

/// Radical of a negative semi-definite lattice and the definite quotient.
///
/// `basis_change` is unimodular; its first `quotient_rank` columns are the
/// quotient basis lifted to the lattice, the remaining columns span the
/// (saturated) radical. `projection` is the first `quotient_rank` rows of
/// its inverse.
struct QuotientData {
  std::vector<LatticeVector> radical_basis;
  IntMatrix projection;      // quotient_rank x rank
  IntMatrix lift;            // rank x quotient_rank, projection * lift = identity
  IntMatrix quotient_gram;   // negative definite

  std::size_t quotient_rank() const { return quotient_gram.rows(); }
  LatticeVector project(const LatticeVector& x) const { return projection * x; }
  LatticeVector lift_vector(const LatticeVector& y) const { return lift * y; }
};

/// x^T gram y.
Integer pairing(const IntersectionLattice& lattice, const LatticeVector& x, const LatticeVector& y);

/// Same as pairing(lattice, x, x).
Integer square(const IntersectionLattice& lattice, const LatticeVector& x);

/// Exact sign classification by rational symmetric elimination.
Definiteness classify_definiteness(const IntersectionLattice& lattice);

/// classify_definiteness(lattice) != indefinite_or_positive.
bool is_negative_semidefinite(const IntersectionLattice& lattice);

/// Throws DomainError for indefinite_or_positive lattices.
QuotientData radical_and_quotient(const IntersectionLattice& lattice);

/// True iff v lies in k * lattice, i.e. every coordinate is divisible by k.
bool in_scaled_sublattice(const IntersectionLattice& lattice, const LatticeVector& v, const Integer& k);

/// Throws DimensionError unless v.size() == lattice.rank().
void require_dimension(const IntersectionLattice& lattice, const LatticeVector& v, const char* what);

}  // namespace holex
