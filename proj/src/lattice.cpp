#include "holex/lattice.hpp"

#include "holex/errors.hpp"

#include <sstream>
#include <utility>

namespace holex {

LatticeVector::LatticeVector(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

LatticeVector LatticeVector::unit(std::size_t n, std::size_t i) {
  LatticeVector v(n);
  v[i] = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.size() != size()) throw DimensionError("vector length mismatch in addition");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.size() != size()) throw DimensionError("vector length mismatch in subtraction");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

std::string LatticeVector::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) out << ',';
    out << coords_[i];
  }
  return out.str();
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

LatticeVector IntMatrix::row(std::size_t i) const {
  LatticeVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

LatticeVector IntMatrix::col(std::size_t j) const {
  LatticeVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

LatticeVector IntMatrix::operator*(const LatticeVector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  LatticeVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (other.rows_ != cols_) throw DimensionError("matrix-matrix size mismatch");
  IntMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += a * other(k, j);
    }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ';';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ',';
      out << (*this)(i, j);
    }
  }
  return out.str();
}

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::negative_definite: return "negative_definite";
    case Definiteness::negative_semidefinite_degenerate: return "negative_semidefinite_degenerate";
    case Definiteness::indefinite_or_positive: return "indefinite_or_positive";
  }
  return "?";
}

IntersectionLattice::IntersectionLattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw DimensionError("gram matrix is not square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i))
        throw DomainError("gram not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

void require_dimension(const IntersectionLattice& lattice, const LatticeVector& v, const char* what) {
  if (v.size() != lattice.rank())
    throw DimensionError(std::string(what) + " has length " + std::to_string(v.size()) +
                         ", lattice rank is " + std::to_string(lattice.rank()));
}

Integer pairing(const IntersectionLattice& lattice, const LatticeVector& x, const LatticeVector& y) {
  require_dimension(lattice, x, "left operand");
  require_dimension(lattice, y, "right operand");
  const auto& g = lattice.gram();
  Integer acc = 0;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    if (x[i] == 0) continue;
    Integer row = 0;
    for (std::size_t j = 0; j < lattice.rank(); ++j) row += g(i, j) * y[j];
    acc += x[i] * row;
  }
  return acc;
}

Integer square(const IntersectionLattice& lattice, const LatticeVector& x) { return pairing(lattice, x, x); }

Definiteness classify_definiteness(const IntersectionLattice& lattice) {
  // Symmetric elimination on A = -gram with diagonal pivoting. A is positive
  // semi-definite iff every pivot is positive and, once no positive diagonal
  // entry remains, the residual block is identically zero.
  const std::size_t n = lattice.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = -lattice.gram()(i, j);

  std::vector<std::size_t> alive(n);
  for (std::size_t i = 0; i < n; ++i) alive[i] = i;
  std::size_t positive_pivots = 0;

  while (!alive.empty()) {
    std::size_t pivot_pos = alive.size();
    for (std::size_t p = 0; p < alive.size(); ++p) {
      const auto& d = a[alive[p]][alive[p]];
      if (d < 0) return Definiteness::indefinite_or_positive;
      if (d > 0 && pivot_pos == alive.size()) pivot_pos = p;
    }
    if (pivot_pos == alive.size()) {
      for (std::size_t i : alive)
        for (std::size_t j : alive)
          if (a[i][j] != 0) return Definiteness::indefinite_or_positive;
      break;
    }
    const std::size_t k = alive[pivot_pos];
    alive.erase(alive.begin() + static_cast<std::ptrdiff_t>(pivot_pos));
    const Rational pivot = a[k][k];
    for (std::size_t i : alive) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / pivot;
      for (std::size_t j : alive) a[i][j] -= f * a[k][j];
    }
    ++positive_pivots;
  }
  return positive_pivots == n ? Definiteness::negative_definite : Definiteness::negative_semidefinite_degenerate;
}

bool is_negative_semidefinite(const IntersectionLattice& lattice) {
  return classify_definiteness(lattice) != Definiteness::indefinite_or_positive;
}

namespace {

// Row echelon form over Z with unimodular transform: transform * gram = echelon.
// inverse tracks transform^{-1}. Returns the number of nonzero echelon rows.
std::size_t unimodular_echelon(const IntMatrix& gram, IntMatrix& transform, IntMatrix& inverse) {
  const std::size_t n = gram.rows();
  IntMatrix h = gram;
  transform = IntMatrix::identity(n);
  inverse = IntMatrix::identity(n);

  // rows p and i become M * (row p, row i) with M = [[s, t], [-b/g, a/g]], det M = 1.
  auto combine = [&](std::size_t p, std::size_t i, const Integer& a, const Integer& b) {
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    const Integer ag = a / g, bg = b / g;
    auto rows = [&](IntMatrix& m) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        Integer x = m(p, c), y = m(i, c);
        m(p, c) = s * x + t * y;
        m(i, c) = -bg * x + ag * y;
      }
    };
    rows(h);
    rows(transform);
    // inverse <- inverse * M^{-1}, M^{-1} = [[a/g, -t], [b/g, s]]
    for (std::size_t r = 0; r < n; ++r) {
      Integer x = inverse(r, p), y = inverse(r, i);
      inverse(r, p) = x * ag + y * bg;
      inverse(r, i) = -x * t + y * s;
    }
  };

  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < n && pivot_row < n; ++col) {
    for (std::size_t i = pivot_row + 1; i < n; ++i)
      if (h(i, col) != 0) combine(pivot_row, i, h(pivot_row, col), h(i, col));
    if (h(pivot_row, col) != 0) ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

QuotientData radical_and_quotient(const IntersectionLattice& lattice) {
  const Definiteness d = classify_definiteness(lattice);
  if (d == Definiteness::indefinite_or_positive)
    throw DomainError("lattice not negative semi-definite (algebraic surface: m is -infinity)");

  const std::size_t n = lattice.rank();
  QuotientData out;
  if (d == Definiteness::negative_definite) {
    out.projection = IntMatrix::identity(n);
    out.lift = IntMatrix::identity(n);
    out.quotient_gram = lattice.gram();
    return out;
  }

  IntMatrix transform, inverse;
  const std::size_t q = unimodular_echelon(lattice.gram(), transform, inverse);

  // Rows q.. of transform annihilate gram; by symmetry they span ker(gram).
  for (std::size_t r = q; r < n; ++r) out.radical_basis.push_back(transform.row(r));

  out.lift = IntMatrix(n, q);
  out.projection = IntMatrix(q, n);
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      out.lift(i, k) = transform(k, i);
      out.projection(k, i) = inverse(i, k);
    }
  out.quotient_gram = out.lift.transpose() * lattice.gram() * out.lift;
  return out;
}

bool in_scaled_sublattice(const IntersectionLattice& lattice, const LatticeVector& v, const Integer& k) {
  require_dimension(lattice, v, "vector");
  if (k < 1) throw DomainError("scale factor must be positive");
  for (const auto& c : v)
    if (mpz_divisible_p(c.get_mpz_t(), k.get_mpz_t()) == 0) return false;
  return true;
}

}  // namespace holex
