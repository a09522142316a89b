#pragma once

#include <functional>

#include "assocgeom/gamma.hpp"
#include "assocgeom/report.hpp"
#include "assocgeom/sampling.hpp"

namespace asg {

/// Linear relation W → W′ stored as its graph in W ⊕ W′ (source coordinates first).
template <FieldElement K>
class Relation {
 public:
  Relation() = default;
  /// Throws kMismatch unless graph.ambient() == src + dst.
  Relation(std::size_t src, std::size_t dst, Subspace<K> graph);

  static Relation identity(Field field, std::size_t n);
  /// Graph {(v, f v)} of an operator f: F^cols → F^rows.
  static Relation of_map(const Matrix<K>& f);

  std::size_t src_dim() const noexcept { return src_; }
  std::size_t dst_dim() const noexcept { return dst_; }
  Field field() const noexcept { return graph_.field(); }
  const Subspace<K>& graph() const noexcept { return graph_; }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.graph_ == b.graph_;
  }

 private:
  std::size_t src_ = 0, dst_ = 0;
  Subspace<K> graph_;
};

/// s ∘ r = {(u, w) : ∃v, (u,v) ∈ r, (v,w) ∈ s}.
template <FieldElement K>
Relation<K> compose(const Relation<K>& s, const Relation<K>& r);

template <FieldElement K>
Relation<K> reverse(const Relation<K>& r);

/// z ∘ y⁻¹ ∘ x.
template <FieldElement K>
Relation<K> relation_semitorsor(const Relation<K>& x, const Relation<K>& y, const Relation<K>& z);

/// r(x) = {ω′ : ∃ξ ∈ x, (ξ, ω′) ∈ r}.
template <FieldElement K>
Subspace<K> pushforward(const Relation<K>& r, const Subspace<K>& x);
/// r⁻¹(y) = {ω : ∃η ∈ y, (ω, η) ∈ r}.
template <FieldElement K>
Subspace<K> pullback(const Relation<K>& r, const Subspace<K>& y);

/// l = {(ζ, ω) : ∃ξ ∈ x, ω+ζ ∈ a, ω+ζ+ξ ∈ y, ω+ξ ∈ b}; its pushforward is Γ(x,a,y,b,·).
template <FieldElement K>
Relation<K> left_mult_relation(const Subspace<K>& x, const Subspace<K>& a, const Subspace<K>& y, const Subspace<K>& b);

/// Reads a relation F^n → F^m off a subspace of F^(n+m).
template <FieldElement K>
Relation<K> relation_from_blocks(const Subspace<K>& graph, std::size_t n);

/// Which two slots of Γ carry the pulled-back arguments in the structurality condition.
enum class StructuralSlots { kAB, kYB, kXZ };

template <FieldElement K>
using SubspaceMap = std::function<Subspace<K>(const Subspace<K>&)>;

/// Samples the two conditions
///   f(Γ(…, g u′, …, g v′, …)) = Γ′(f …, u′, f …, v′, f …)   (u′, v′ in the chosen slots of 𝒳′)
///   g(Γ′(…, f u, …, f v, …)) = Γ(g …, u, g …, v, g …)
/// with f: Gras(F^n) → Gras(F^n′) and g the other way. Counterexamples are recorded as quintuples.
template <FieldElement K>
CheckResult check_structural_pair(const SubspaceMap<K>& f, const SubspaceMap<K>& g, std::size_t n, std::size_t n_prime,
                                  Sampler<K>& sampler, std::size_t budget, StructuralSlots slots = StructuralSlots::kAB);

}  // namespace asg
