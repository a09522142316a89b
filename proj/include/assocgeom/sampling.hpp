#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "assocgeom/gamma.hpp"

namespace asg {

/// Seeded generator of random field elements, matrices and subspaces.
/// Draws use raw mt19937_64 output reduced modulo the bound, so a seed gives
/// the same stream on every platform.
template <FieldElement K>
class Sampler {
 public:
  Sampler(Field field, std::uint64_t seed) : field_(field), rng_(seed) {}

  Field field() const noexcept { return field_; }

  std::uint64_t below(std::uint64_t bound) { return rng_() % bound; }
  bool coin(std::uint64_t one_in) { return below(one_in) == 0; }

  /// Uniform in GF(p); over ℚ, ±u/v with 0 ≤ u ≤ 9 and 1 ≤ v ≤ 9.
  K scalar();
  K nonzero_scalar();
  Matrix<K> matrix(std::size_t rows, std::size_t cols);
  Matrix<K> invertible(std::size_t n);

  Subspace<K> subspace(std::size_t n, std::size_t k);
  /// Dimension uniform in [0, n].
  Subspace<K> subspace(std::size_t n);
  /// Graph of a random map from the greedy complement of a into a.
  Subspace<K> complement(const Subspace<K>& a);
  /// Random element of C_ab (common complements), or nothing if dim a != dim b.
  std::optional<Subspace<K>> common_complement_of(const Subspace<K>& a, const Subspace<K>& b);

  /// Each slot is fresh, a repeat of an earlier slot, or a complement of an earlier slot,
  /// so diagonal and transversal configurations are hit often.
  Quintuple<K> quintuple(std::size_t n);
  /// Quintuple inside D_L ∪ D_R ∪ D_M; falls back to building one from complements.
  Quintuple<K> domain_quintuple(std::size_t n);

  /// Pick from an earlier list of subspaces, or draw a fresh one.
  Subspace<K> mixed(std::size_t n, const std::vector<Subspace<K>>& earlier);

 private:
  Field field_;
  std::mt19937_64 rng_;
};

}  // namespace asg
