#pragma once

#include "brute_force.hpp"
#include "holex/lattice.hpp"

namespace holex::test {

inline brute::Gram to_gram(const IntersectionLattice& l) {
  brute::Gram g(l.rank(), brute::Vec(l.rank()));
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) g[i][j] = l.gram()(i, j).get_si();
  return g;
}

inline brute::Vec to_vec(const LatticeVector& v) {
  brute::Vec out;
  for (const auto& c : v) out.push_back(c.get_si());
  return out;
}

inline LatticeVector from_vec(const brute::Vec& v) {
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = static_cast<long>(v[i]);
  return out;
}

inline IntersectionLattice lattice(std::initializer_list<std::initializer_list<long>> rows) {
  return IntersectionLattice(IntMatrix(rows));
}

}  // namespace holex::test
