#pragma once

#include <vector>

#include "assocgeom/subspace.hpp"

namespace asg::detail {

// One constraint "c_ω·ω + Σ c_j·w_j ∈ target", where w_j ranges over witnesses[j].
template <FieldElement K>
struct Constraint {
  const Subspace<K>* target;
  K omega;
  std::vector<K> coeffs;  // one per witness
};

/// {ω ∈ F^n : ∃ w_j ∈ witnesses[j] satisfying every constraint}.
/// Unknown layout: ω coordinates, then the coefficient vector of each witness in order.
template <FieldElement K>
Subspace<K> eliminate(Field f, std::size_t n, const std::vector<const Subspace<K>*>& witnesses,
                      const std::vector<Constraint<K>>& constraints) {
  std::vector<std::size_t> offset;
  std::size_t cols = n;
  for (const auto* w : witnesses) {
    offset.push_back(cols);
    cols += w->dim();
  }
  Matrix<K> system(f, 0, cols);
  for (const auto& c : constraints) {
    const Matrix<K> ann = c.target->is_zero() ? Matrix<K>::identity(f, n) : c.target->annihilator();
    if (ann.rows() == 0) continue;  // target is everything
    Matrix<K> block(f, ann.rows(), cols);
    for (std::size_t r = 0; r < ann.rows(); ++r) {
      if (!c.omega.is_zero())
        for (std::size_t j = 0; j < n; ++j) block(r, j) = c.omega * ann(r, j);
      for (std::size_t w = 0; w < witnesses.size(); ++w) {
        if (c.coeffs[w].is_zero()) continue;
        const auto& basis = witnesses[w]->basis();
        for (std::size_t i = 0; i < basis.rows(); ++i) {
          K acc(0, f);
          for (std::size_t j = 0; j < n; ++j) acc += ann(r, j) * basis(i, j);
          block(r, offset[w] + i) = c.coeffs[w] * acc;
        }
      }
    }
    system = system.vstack(block);
  }
  if (system.rows() == 0) return Subspace<K>::full(f, n);
  const Matrix<K> sol = kernel(system);
  if (sol.rows() == 0) return Subspace<K>::zero(f, n);
  return Subspace<K>::span(sol.col_block(0, n));
}

}  // namespace asg::detail
