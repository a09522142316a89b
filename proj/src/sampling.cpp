#include "assocgeom/sampling.hpp"

namespace asg {

template <>
Fp Sampler<Fp>::scalar() {
  return Fp(static_cast<std::int64_t>(below(field_.p)), field_);
}

template <>
Rational Sampler<Rational>::scalar() {
  const auto num = static_cast<std::int64_t>(below(10));
  const auto den = static_cast<std::int64_t>(1 + below(9));
  return Rational(Rational::Int(coin(2) ? -num : num), Rational::Int(den));
}

template <FieldElement K>
K Sampler<K>::nonzero_scalar() {
  for (;;) {
    K s = scalar();
    if (!s.is_zero()) return s;
  }
}

template <FieldElement K>
Matrix<K> Sampler<K>::matrix(std::size_t rows, std::size_t cols) {
  Matrix<K> m(field_, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar();
  return m;
}

template <FieldElement K>
Matrix<K> Sampler<K>::invertible(std::size_t n) {
  for (;;) {
    auto m = matrix(n, n);
    if (rank(m) == n) return m;
  }
}

template <FieldElement K>
Subspace<K> Sampler<K>::subspace(std::size_t n, std::size_t k) {
  for (;;) {
    auto s = Subspace<K>::span(matrix(k, n));
    if (s.dim() == k) return s;
  }
}

template <FieldElement K>
Subspace<K> Sampler<K>::subspace(std::size_t n) {
  return subspace(n, below(n + 1));
}

template <FieldElement K>
Subspace<K> Sampler<K>::complement(const Subspace<K>& a) {
  const auto s = find_complement(a);
  if (s.is_zero() || a.is_zero()) return s;
  // {v + φ(v) : v ∈ s} for a random φ: s → a
  const auto phi = matrix(s.dim(), a.dim());
  return Subspace<K>::span(s.basis() + phi * a.basis());
}

template <FieldElement K>
std::optional<Subspace<K>> Sampler<K>::common_complement_of(const Subspace<K>& a, const Subspace<K>& b) {
  if (a.dim() != b.dim()) return std::nullopt;
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto s = complement(a);
    if (is_transversal(s, b)) return s;
  }
  return common_complement(a, b);
}

template <FieldElement K>
Subspace<K> Sampler<K>::mixed(std::size_t n, const std::vector<Subspace<K>>& earlier) {
  if (earlier.empty()) return subspace(n);
  switch (below(4)) {
    case 0:
      return earlier[below(earlier.size())];
    case 1:
      return complement(earlier[below(earlier.size())]);
    default:
      return subspace(n);
  }
}

template <FieldElement K>
Quintuple<K> Sampler<K>::quintuple(std::size_t n) {
  std::vector<Subspace<K>> slots;
  for (int i = 0; i < 5; ++i) slots.push_back(mixed(n, slots));
  return {slots[0], slots[1], slots[2], slots[3], slots[4]};
}

template <FieldElement K>
Quintuple<K> Sampler<K>::domain_quintuple(std::size_t n) {
  for (int attempt = 0; attempt < 8; ++attempt) {
    auto q = quintuple(n);
    if (domain_flags(q).any()) return q;
  }
  // a, b of equal dimension; x, z complements of a, b; y anything
  const std::size_t k = below(n + 1);
  Quintuple<K> q;
  q.a = subspace(n, k);
  q.b = coin(3) ? q.a : subspace(n, k);
  q.x = complement(q.a);
  q.z = complement(q.b);
  q.y = coin(2) ? subspace(n) : *common_complement_of(q.a, q.b);
  return q;
}

template class Sampler<Fp>;
template class Sampler<Rational>;

}  // namespace asg
