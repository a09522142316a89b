#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "assocgeom/matrix.hpp"

namespace asg {

/// Subspace of F^n stored by its RREF basis, so equality is entrywise comparison.
template <FieldElement K>
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of F^n.
  Subspace(Field field, std::size_t n);

  static Subspace zero(Field field, std::size_t n) { return Subspace(field, n); }
  static Subspace full(Field field, std::size_t n);
  /// Row span of an arbitrary matrix.
  static Subspace span(const Matrix<K>& rows);
  static Subspace from_ints(Field field, std::size_t n, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  /// Span of the standard basis vectors e_i for the listed indices.
  static Subspace coordinate(Field field, std::size_t n, std::initializer_list<std::size_t> indices);

  Field field() const noexcept { return basis_.field(); }
  std::size_t ambient() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix<K>& basis() const noexcept { return basis_; }

  bool is_zero() const noexcept { return dim() == 0; }
  bool is_full() const noexcept { return dim() == ambient(); }

  bool contains(std::span<const K> v) const;
  bool contains(const Subspace& other) const;

  /// Rows spanning {w : w·v = 0 for all v in this}.
  Matrix<K> annihilator() const { return kernel(basis_); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
  /// Total order: by ambient, dimension, then basis entries.
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.compare(b) < 0; }

  std::string str() const { return basis_.str(); }

 private:
  explicit Subspace(Matrix<K> rref_basis) : basis_(std::move(rref_basis)) {}
  int compare(const Subspace& other) const;

  Matrix<K> basis_;
};

template <FieldElement K>
Subspace<K> meet(const Subspace<K>& x, const Subspace<K>& y);
template <FieldElement K>
Subspace<K> join(const Subspace<K>& x, const Subspace<K>& y);

/// x ∧ a = 0 and x ∨ a = W.
template <FieldElement K>
bool is_transversal(const Subspace<K>& x, const Subspace<K>& a);

/// Projector with image x and kernel a; throws kDomain unless x ⊤ a.
template <FieldElement K>
Matrix<K> projector(const Subspace<K>& x, const Subspace<K>& a);

/// Greedy complement built from standard basis vectors in index order.
template <FieldElement K>
Subspace<K> find_complement(const Subspace<K>& a);

/// Some s with s ⊤ a and s ⊤ b; absent iff dim a != dim b.
template <FieldElement K>
std::optional<Subspace<K>> common_complement(const Subspace<K>& a, const Subspace<K>& b);

/// All k-dimensional subspaces of GF(p)^n, ordered by pivot set then free entries.
/// Throws kGuard when p^n > 2^20.
std::vector<Subspace<Fp>> enumerate_subspaces(Field field, std::size_t n, std::size_t k);
/// Every subspace, by increasing dimension.
std::vector<Subspace<Fp>> enumerate_subspaces(Field field, std::size_t n);

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q);

template <FieldElement K>
bool same_component(const Subspace<K>& x, const Subspace<K>& y);

/// (first-half coordinates, diagonal, second-half coordinates) when n is even.
template <FieldElement K>
std::optional<std::array<Subspace<K>, 3>> transversal_triple(Field field, std::size_t n);

/// f(x) for the operator f acting on column vectors.
template <FieldElement K>
Subspace<K> image(const Matrix<K>& f, const Subspace<K>& x);
/// f⁻¹(y).
template <FieldElement K>
Subspace<K> preimage(const Matrix<K>& f, const Subspace<K>& y);
/// Image of f as a subspace of the target.
template <FieldElement K>
Subspace<K> image(const Matrix<K>& f);
/// Kernel of f as a subspace of the source.
template <FieldElement K>
Subspace<K> kernel_space(const Matrix<K>& f);

/// Throws kMismatch unless both live in the same ambient over the same field.
template <FieldElement K>
void require_compatible(const Subspace<K>& x, const Subspace<K>& y);

}  // namespace asg
