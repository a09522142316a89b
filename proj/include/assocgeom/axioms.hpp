#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "assocgeom/gamma.hpp"
#include "assocgeom/report.hpp"

namespace asg {

/// A finite geometry as tables over an indexed point set: Γ, Π_r, meet, join and transversality.
/// Built from Gras(GF(p)^n), or derived from another table (opposite, corrupted).
class FiniteGeometry {
 public:
  /// All subspaces of GF(p)^n, sorted. Throws kGuard when |𝒳|^7 > 2^28.
  static FiniteGeometry grassmannian(Field field, std::size_t n);

  Field field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Subspace<Fp>>& points() const { return points_; }
  /// Throws kDomain for a subspace that is not a point.
  std::size_t index(const Subspace<Fp>& s) const;

  std::size_t gamma(std::size_t x, std::size_t a, std::size_t y, std::size_t b, std::size_t z) const {
    const std::size_t n = size();
    return gamma_[(((x * n + a) * n + y) * n + b) * n + z];
  }
  /// Π_r(x,a,y) for the r-th field element (r = 0, …, p−1).
  std::size_t pi(std::size_t r, std::size_t x, std::size_t a, std::size_t y) const {
    const std::size_t n = size();
    return pi_[((r * n + x) * n + a) * n + y];
  }
  std::size_t meet(std::size_t x, std::size_t y) const { return meet_[x * size() + y]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x * size() + y]; }
  bool transversal(std::size_t x, std::size_t y) const { return transversal_[x * size() + y] != 0; }

  /// Γ^op(x,a,y,b,z) = Γ(z,a,y,b,x) with the dual lattice; Π unchanged.
  FiniteGeometry opposite() const;
  /// Exchanges the table entries Γ(x,x,x,x,x) and Γ(y,y,y,y,y): a single swapped pair of outputs.
  FiniteGeometry corrupted(std::size_t x, std::size_t y) const;

  /// Labeled subspace blocks ([name] followed by the point), for counterexamples.
  std::string describe(std::initializer_list<std::pair<const char*, std::size_t>> named) const;

 private:
  FiniteGeometry() = default;

  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Subspace<Fp>> points_;
  std::vector<std::uint16_t> gamma_, pi_, meet_, join_;
  std::vector<std::uint8_t> transversal_;
};

/// A self-map of the points, by index.
using PointMap = std::vector<std::uint16_t>;

/// f(Γ(x,h(u),y,h(v),z)) = Γ(f(x),u,f(y),v,f(z)) for all points; one direction only.
bool structural_for_gamma(const FiniteGeometry& g, const PointMap& f, const PointMap& h);
/// f(Π_r(x,h(u),y)) = Π_r(f(x),u,f(y)) for all points and scalars; one direction only.
bool structural_for_pi(const FiniteGeometry& g, const PointMap& f, const PointMap& h);

/// One line per axiom; derived consequences are listed after the axioms.
struct AxiomReport {
  CheckResult semitorsor;
  CheckResult klein_reversal;   // Γ(x,a,y,b,z) = Γ(z,b,y,a,x)
  CheckResult klein_swap;       // Γ(x,a,y,b,z) = Γ(a,x,y,z,b)
  CheckResult structural;       // L, M, R pairs, Γ and Π both ways
  CheckResult diagonal_join;    // Γ(a,a,y,b,b) = a ∨ b
  CheckResult diagonal_meet;    // Γ(a,b,y,a,b) = a ∧ b
  CheckResult diagonal_idempotent;  // Γ(x,a,x,b,z) = z = Γ(z,b,x,a,x) for x ∈ C_ab
  CheckResult diagonal_b;       // Γ(x,a,y,b,b) = b for x ⊤ a, y ⊤ b
  CheckResult diagonal_a;       // Γ(x,a,y,b,a) = a for a ⊤ y, b ⊤ x
  CheckResult affine;           // C_a is an affine space
  CheckResult semitorsored_pairs;
  CheckResult left_inverse;     // (L_{xayb})⁻¹ = L_{yaxb} on U_ab
  CheckResult middle_inverse;   // (M_{xaby})⁻¹ = M_{xbay} on U_ab
  CheckResult torsor_stable;    // Γ(C_ab, a, C_ab, b, C_ab) ⊂ C_ab

  std::vector<std::pair<std::string, const CheckResult*>> entries() const;
  bool ok() const;
  /// The semitorsor and diagonal-value laws only; used by the mutation self-test.
  bool semitorsor_or_diagonal_failed() const;
};

/// Every axiom quantified over all points (structural pairs deduplicated as maps).
AxiomReport verify_axioms(const FiniteGeometry& g);
/// The semitorsor law alone.
CheckResult check_semitorsor_law(const FiniteGeometry& g);
/// Klein symmetries: reversal, then swap.
std::pair<CheckResult, CheckResult> check_klein_laws(const FiniteGeometry& g);

}  // namespace asg
