#include "holex/m_invariant.hpp"

#include "holex/errors.hpp"

#include <cstdint>
#include <iostream>
#include <limits>
#include <optional>

namespace holex {

namespace {

void check_inputs(const IntersectionLattice& lattice, int r, const LatticeVector& a) {
  if (r < 1) throw DomainError("rank r must be at least 1");
  require_dimension(lattice, a, "class a");
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// round(a / r) with halves rounded up; only used to centre search boxes.
Integer nearest(const Integer& a, int r) { return floor_div(2 * a + r, Integer(2 * r)); }

MResult finish(const IntersectionLattice& lattice, int r, const LatticeVector& a,
               std::vector<LatticeVector> decomposition) {
  MResult out;
  out.scaled_objective = scaled_objective(lattice, r, a, decomposition);
  out.decomposition = std::move(decomposition);
  out.value = ratio(out.scaled_objective, r);
  out.integral = mpz_divisible_ui_p(out.scaled_objective.get_mpz_t(), static_cast<unsigned long>(r)) != 0;
  if (!out.integral)
    std::cerr << "holex: integrality violated: r = " << r << " does not divide T = " << out.scaled_objective
              << "; reporting m = " << out.value << " exactly\n";
  return out;
}

// The decomposition (0, ..., 0, a); optimal whenever every deviation is radical.
std::vector<LatticeVector> trivial_decomposition(int r, const LatticeVector& a) {
  std::vector<LatticeVector> d(static_cast<std::size_t>(r), LatticeVector::zero(a.size()));
  d.back() = a;
  return d;
}

std::vector<LatticeVector> assemble(const QuotientData& q, const LatticeVector& a,
                                    const std::vector<LatticeVector>& quotient_summands) {
  std::vector<LatticeVector> d;
  d.reserve(quotient_summands.size() + 1);
  LatticeVector rest = a;
  for (const auto& y : quotient_summands) {
    d.push_back(q.lift_vector(y));
    rest -= d.back();
  }
  d.push_back(std::move(rest));
  return d;
}

// Exact LDL^T of a symmetric positive definite rational matrix.
struct Ldl {
  std::vector<std::vector<Rational>> lower;  // unit lower triangular
  std::vector<Rational> diag;
};

Ldl ldl(const std::vector<std::vector<Rational>>& b) {
  const std::size_t n = b.size();
  Ldl f;
  f.lower.assign(n, std::vector<Rational>(n));
  f.diag.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational d = b[j][j];
    for (std::size_t k = 0; k < j; ++k) d -= f.lower[j][k] * f.lower[j][k] * f.diag[k];
    if (d <= 0) throw std::logic_error("substituted form is not positive definite");
    f.diag[j] = d;
    f.lower[j][j] = 1;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rational v = b[i][j];
      for (std::size_t k = 0; k < j; ++k) v -= f.lower[i][k] * f.lower[j][k] * f.diag[k];
      f.lower[i][j] = v / d;
    }
  }
  return f;
}

// Branch and bound over x = (y_1, ..., y_{r-1}) in quotient coordinates.
// With q = -quotient_gram and abar the projected class,
//   T(x) = sum_{i<r} q(abar - r y_i) + q(abar - r y_r),  y_r = abar - sum y_i
//        = r^2 (x - x*)^T ((I + J) (x) q) (x - x*),       x* = (abar/r, ...).
class Enumerator {
 public:
  Enumerator(const IntersectionLattice& lattice, const QuotientData& quotient, int r, const LatticeVector& a)
      : lattice_(lattice), quotient_(quotient), r_(r), a_(a), s_(quotient.quotient_rank()),
        n_(static_cast<std::size_t>(r - 1) * s_) {
    const LatticeVector abar = quotient.project(a);
    center_.resize(n_);
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(r); ++i)
      for (std::size_t j = 0; j < s_; ++j) center_[i * s_ + j] = ratio(abar[j], r);

    std::vector<std::vector<Rational>> form(n_, std::vector<Rational>(n_));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < n_; ++k) {
        const std::size_t bi = i / s_, bk = k / s_;
        form[i][k] = -quotient.quotient_gram(i % s_, k % s_) * (bi == bk ? 2 : 1);
      }
    factor_ = ldl(form);
    x_.assign(n_, 0);
    offset_.assign(n_, Rational(0));
  }

  std::vector<LatticeVector> solve(const std::vector<LatticeVector>& seed) {
    best_ = seed;
    best_t_ = scaled_objective(lattice_, r_, a_, seed);
    budget_ = ratio(best_t_, r_ * r_);
    search(n_, Rational(0));
    return best_;
  }

 private:
  void search(std::size_t level, const Rational& partial) {
    if (level == 0) {
      leaf();
      return;
    }
    const std::size_t k = level - 1;
    Rational c = center_[k];
    for (std::size_t j = k + 1; j < n_; ++j) c -= factor_.lower[j][k] * offset_[j];

    const Integer start = floor_div(2 * c.get_num() + c.get_den(), 2 * c.get_den());
    auto visit = [&](const Integer& x) {
      const Rational dev = Rational(x) - c;
      const Rational value = partial + factor_.diag[k] * dev * dev;
      if (value > budget_) return false;
      x_[k] = x;
      offset_[k] = Rational(x) - center_[k];
      search(k, value);
      return true;
    };
    for (Integer x = start;; ++x)
      if (!visit(x)) break;
    for (Integer x = start - 1;; --x)
      if (!visit(x)) break;
  }

  void leaf() {
    std::vector<LatticeVector> summands;
    summands.reserve(static_cast<std::size_t>(r_ - 1));
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(r_); ++i) {
      LatticeVector y(s_);
      for (std::size_t j = 0; j < s_; ++j) y[j] = x_[i * s_ + j];
      summands.push_back(std::move(y));
    }
    auto candidate = assemble(quotient_, a_, summands);
    const Integer t = scaled_objective(lattice_, r_, a_, candidate);
    if (t < best_t_ || (t == best_t_ && candidate < best_)) {
      best_t_ = t;
      best_ = std::move(candidate);
      budget_ = ratio(best_t_, r_ * r_);
    }
  }

  const IntersectionLattice& lattice_;
  const QuotientData& quotient_;
  int r_;
  const LatticeVector& a_;
  std::size_t s_;
  std::size_t n_;
  std::vector<Rational> center_;
  Ldl factor_;
  std::vector<Integer> x_;
  std::vector<Rational> offset_;
  std::vector<LatticeVector> best_;
  Integer best_t_;
  Rational budget_;
};

// Dense table over an axis-aligned integer box.
struct Box {
  std::vector<std::int64_t> lo, hi;

  std::size_t size() const {
    std::size_t n = 1;
    for (std::size_t j = 0; j < lo.size(); ++j) n *= static_cast<std::size_t>(hi[j] - lo[j] + 1);
    return n;
  }
  std::optional<std::size_t> index(const std::vector<std::int64_t>& p) const {
    std::size_t idx = 0;
    for (std::size_t j = 0; j < lo.size(); ++j) {
      if (p[j] < lo[j] || p[j] > hi[j]) return std::nullopt;
      idx = idx * static_cast<std::size_t>(hi[j] - lo[j] + 1) + static_cast<std::size_t>(p[j] - lo[j]);
    }
    return idx;
  }
  std::vector<std::int64_t> point(std::size_t idx) const {
    std::vector<std::int64_t> p(lo.size());
    for (std::size_t j = lo.size(); j-- > 0;) {
      const auto w = static_cast<std::size_t>(hi[j] - lo[j] + 1);
      p[j] = lo[j] + static_cast<std::int64_t>(idx % w);
      idx /= w;
    }
    return p;
  }
};

constexpr std::size_t kOracleTableLimit = 20'000'000;

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw DomainError("oracle coordinates exceed 64-bit range");
  return x.get_si();
}

// Suffix dynamic program: table k holds the least cost of mu_{k+1}..mu_r
// (0-based k = 1..r-1) in the box summing to a given partial sum.
template <class Value>
struct SuffixProgram {
  static constexpr Value kInf = std::numeric_limits<Value>::max();

  const Box& summand_box;
  const std::vector<Value>& cost;  // cost of one summand, indexed by summand_box
  std::vector<Box> regions;
  std::vector<std::vector<Value>> tables;

  Value lookup(std::size_t k, const std::vector<std::int64_t>& sigma) const {
    auto idx = regions[k].index(sigma);
    return idx ? tables[k][*idx] : kInf;
  }

  void build(int r, const std::vector<std::int64_t>& abar) {
    const std::size_t s = abar.size();
    const auto radius = summand_box.hi.empty() ? 0 : (summand_box.hi[0] - summand_box.lo[0]) / 2;
    std::vector<std::int64_t> centre(s);
    for (std::size_t j = 0; j < s; ++j) centre[j] = summand_box.lo[j] + radius;

    regions.assign(static_cast<std::size_t>(r), Box{});
    tables.assign(static_cast<std::size_t>(r), {});
    for (int k = r - 1; k >= 1; --k) {
      const std::int64_t before = k, after = r - k;
      Box region;
      region.lo.resize(s);
      region.hi.resize(s);
      for (std::size_t j = 0; j < s; ++j) {
        region.lo[j] = std::max(abar[j] - before * (centre[j] + radius), after * (centre[j] - radius));
        region.hi[j] = std::min(abar[j] - before * (centre[j] - radius), after * (centre[j] + radius));
      }
      bool empty = false;
      for (std::size_t j = 0; j < s; ++j) empty = empty || region.lo[j] > region.hi[j];
      auto& table = tables[static_cast<std::size_t>(k)];
      regions[static_cast<std::size_t>(k)] = region;
      if (empty) continue;
      if (region.size() > kOracleTableLimit) throw DomainError("oracle search space too large");
      table.assign(region.size(), kInf);
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        const auto sigma = region.point(idx);
        if (k == r - 1) {
          if (auto b = summand_box.index(sigma)) table[idx] = cost[*b];
          continue;
        }
        Value best = kInf;
        std::vector<std::int64_t> rest(s);
        for (std::size_t b = 0; b < cost.size(); ++b) {
          const auto mu = summand_box.point(b);
          for (std::size_t j = 0; j < s; ++j) rest[j] = sigma[j] - mu[j];
          const Value tail = lookup(static_cast<std::size_t>(k + 1), rest);
          if (tail == kInf) continue;
          const Value total = cost[b] + tail;
          if (total < best) best = total;
        }
        table[idx] = best;
      }
    }
  }
};

template <class Value>
std::vector<std::vector<std::int64_t>> oracle_search(int r, const std::vector<std::int64_t>& abar, const Box& box,
                                                     const std::vector<Value>& cost,
                                                     const std::vector<LatticeVector>& lifted) {
  SuffixProgram<Value> program{box, cost, {}, {}};
  program.build(r, abar);

  // Greedy reconstruction: at each step keep the optimal summand whose lift
  // is lexicographically smallest. Lifts are injective, so this yields the
  // lexicographically smallest optimal tuple.
  const std::size_t s = abar.size();
  std::vector<std::vector<std::int64_t>> chosen;
  std::vector<std::int64_t> sigma = abar;
  for (int k = 0; k + 1 < r; ++k) {
    Value best = SuffixProgram<Value>::kInf;
    std::optional<std::size_t> pick;
    std::vector<std::int64_t> rest(s);
    for (std::size_t b = 0; b < cost.size(); ++b) {
      const auto mu = box.point(b);
      for (std::size_t j = 0; j < s; ++j) rest[j] = sigma[j] - mu[j];
      const Value tail = program.lookup(static_cast<std::size_t>(k + 1), rest);
      if (tail == SuffixProgram<Value>::kInf) continue;
      const Value total = cost[b] + tail;
      if (total < best || (total == best && lifted[b] < lifted[*pick])) {
        best = total;
        pick = b;
      }
    }
    if (!pick) throw std::logic_error("oracle box admits no decomposition");
    const auto mu = box.point(*pick);
    for (std::size_t j = 0; j < s; ++j) sigma[j] -= mu[j];
    chosen.push_back(mu);
  }
  return chosen;
}

// Inverse of a positive definite rational matrix by Gauss-Jordan.
std::vector<std::vector<Rational>> invert(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational d = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c] == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace

Integer MResult::integer_value() const {
  if (!integral) throw DomainError("m is not an integer: " + value.get_str());
  return value.get_num();
}

Integer scaled_objective(const IntersectionLattice& lattice, int r, const LatticeVector& a,
                         const std::vector<LatticeVector>& decomposition) {
  check_inputs(lattice, r, a);
  if (decomposition.size() != static_cast<std::size_t>(r))
    throw DomainError("decomposition must have exactly r summands");
  LatticeVector sum = LatticeVector::zero(a.size());
  Integer t = 0;
  for (const auto& mu : decomposition) {
    require_dimension(lattice, mu, "summand");
    sum += mu;
    const LatticeVector deviation = a - Integer(r) * mu;
    t -= square(lattice, deviation);
  }
  if (!(sum == a)) throw DomainError("summands do not add up to a");
  return t;
}

std::vector<LatticeVector> balanced_decomposition(int r, const LatticeVector& a) {
  if (r < 1) throw DomainError("rank r must be at least 1");
  std::vector<LatticeVector> d(static_cast<std::size_t>(r), LatticeVector(a.size()));
  for (std::size_t j = 0; j < a.size(); ++j) {
    const Integer base = floor_div(a[j], Integer(r));
    const Integer residue = a[j] - base * r;
    for (std::size_t i = 0; i < d.size(); ++i) d[i][j] = base + (Integer(static_cast<long>(i)) < residue ? 1 : 0);
  }
  return d;
}

LatticeVector m_translate_reduce(const IntersectionLattice& lattice, int r, const LatticeVector& a) {
  check_inputs(lattice, r, a);
  LatticeVector out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    mpz_fdiv_r_ui(out[j].get_mpz_t(), a[j].get_mpz_t(), static_cast<unsigned long>(r));
  }
  return out;
}

MResult m_compute(const IntersectionLattice& lattice, int r, const LatticeVector& a) {
  check_inputs(lattice, r, a);
  const QuotientData quotient = radical_and_quotient(lattice);
  if (r == 1 || quotient.quotient_rank() == 0) return finish(lattice, r, a, trivial_decomposition(r, a));

  auto seed_quotient = balanced_decomposition(r, quotient.project(a));
  seed_quotient.pop_back();
  const auto seed = assemble(quotient, a, seed_quotient);
  Enumerator search(lattice, quotient, r, a);
  return finish(lattice, r, a, search.solve(seed));
}

OracleResult m_oracle(const IntersectionLattice& lattice, int r, const LatticeVector& a, int radius) {
  check_inputs(lattice, r, a);
  if (radius < 1) throw DomainError("oracle radius must be positive");
  const QuotientData quotient = radical_and_quotient(lattice);
  const std::size_t s = quotient.quotient_rank();

  OracleResult out;
  if (r == 1 || s == 0) {
    out.result = finish(lattice, r, a, trivial_decomposition(r, a));
    out.certified_global = true;
    return out;
  }

  const LatticeVector abar_exact = quotient.project(a);
  std::vector<std::int64_t> abar(s);
  Box box;
  box.lo.resize(s);
  box.hi.resize(s);
  for (std::size_t j = 0; j < s; ++j) {
    abar[j] = to_int64(abar_exact[j]);
    const std::int64_t c = to_int64(nearest(abar_exact[j], r));
    box.lo[j] = c - radius;
    box.hi[j] = c + radius;
  }
  if (box.size() > kOracleTableLimit) throw DomainError("oracle search space too large");

  // Cost of a single summand: -(a - r mu)^2 evaluated in the original lattice.
  std::vector<Integer> cost(box.size());
  std::vector<LatticeVector> lifted(box.size());
  Integer worst = 0;
  for (std::size_t b = 0; b < box.size(); ++b) {
    const auto p = box.point(b);
    LatticeVector y(s);
    for (std::size_t j = 0; j < s; ++j) y[j] = static_cast<long>(p[j]);
    lifted[b] = quotient.lift_vector(y);
    cost[b] = -square(lattice, a - Integer(r) * lifted[b]);
    if (cost[b] > worst) worst = cost[b];
  }

  if (Integer(worst * r) >= Integer(std::numeric_limits<std::int64_t>::max() / 4))
    throw DomainError("oracle costs exceed 64-bit range");
  std::vector<std::int64_t> small(cost.size());
  for (std::size_t b = 0; b < cost.size(); ++b) small[b] = cost[b].get_si();
  const auto chosen = oracle_search<std::int64_t>(r, abar, box, small, lifted);

  std::vector<LatticeVector> summands;
  for (const auto& p : chosen) {
    LatticeVector y(s);
    for (std::size_t j = 0; j < s; ++j) y[j] = static_cast<long>(p[j]);
    summands.push_back(std::move(y));
  }
  out.result = finish(lattice, r, a, assemble(quotient, a, summands));

  // Leaving the box in coordinate j forces |y_j - abar_j / r| >= t_j for some
  // summand, and min { q(v) : v_j = t } = t^2 / (q^{-1})_jj.
  std::vector<std::vector<Rational>> q(s, std::vector<Rational>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) q[i][j] = -quotient.quotient_gram(i, j);
  const auto q_inv = invert(q);
  std::optional<Rational> bound;
  for (std::size_t j = 0; j < s; ++j) {
    const Rational abar_over_r = ratio(abar_exact[j], r);
    const Rational centre_offset = Rational(static_cast<long>(box.lo[j] + radius)) - abar_over_r;
    const Rational gap = Rational(radius + 1) - abs(centre_offset);
    const Rational b = Rational(r * r) * gap * gap / q_inv[j][j];
    if (!bound || b < *bound) bound = b;
  }
  out.out_of_box_bound = *bound;
  out.certified_global = Rational(out.result.scaled_objective) < out.out_of_box_bound;
  return out;
}

}  // namespace holex
