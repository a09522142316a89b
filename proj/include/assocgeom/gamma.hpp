#pragma once

#include <optional>
#include <string_view>

#include "assocgeom/subspace.hpp"

namespace asg {

template <FieldElement K>
struct Quintuple {
  Subspace<K> x, a, y, b, z;
};

struct DomainFlags {
  bool in_dl = false;  // x ⊤ a and y ⊤ b
  bool in_dr = false;  // y ⊤ a and z ⊤ b
  bool in_dm = false;  // x ⊤ a, z ⊤ b and a, b have a common complement
  bool any() const noexcept { return in_dl || in_dr || in_dm; }
};

enum class Branch { kLeft, kRight, kMiddle };

template <FieldElement K>
DomainFlags domain_flags(const Quintuple<K>& q);

/// 1 − P_a^x P_y^b. Needs a ⊤ x and y ⊤ b.
template <FieldElement K>
Matrix<K> left_operator(const Subspace<K>& x, const Subspace<K>& a, const Subspace<K>& y, const Subspace<K>& b);
/// P_x^a − P_b^z. Needs a ⊤ x and z ⊤ b.
template <FieldElement K>
Matrix<K> middle_operator(const Subspace<K>& x, const Subspace<K>& a, const Subspace<K>& b, const Subspace<K>& z);
/// 1 − P_b^z P_y^a. Needs a ⊤ y and z ⊤ b.
template <FieldElement K>
Matrix<K> right_operator(const Subspace<K>& a, const Subspace<K>& y, const Subspace<K>& b, const Subspace<K>& z);
/// s·P_a^x + P_x^a. Needs x ⊤ a.
template <FieldElement K>
Matrix<K> dilation_operator(const K& s, const Subspace<K>& x, const Subspace<K>& a);

/// Γ on its operator domain: L(z) on D_L, else R(x) on D_R, else M(y) on D_M.
/// Throws kDomain outside D_L ∪ D_R ∪ D_M.
template <FieldElement K>
Subspace<K> gamma_operator(const Quintuple<K>& q);
/// Γ through one named branch; throws kDomain if q is not in that branch's domain.
template <FieldElement K>
Subspace<K> gamma_operator(const Quintuple<K>& q, Branch branch);

/// Γ on all quintuples:
/// {ω : ∃ξ∈x, α∈a, η∈y, β∈b, ζ∈z with ω = ζ+α = α+η+β = ξ+β}.
/// Unknowns are laid out as ω | ξ | α | η | β | ζ.
template <FieldElement K>
Subspace<K> gamma_extended(const Quintuple<K>& q);

enum class Description { kXZ, kXA, kBZ, kYB, kYZ, kAB };
inline constexpr Description kAllDescriptions[] = {Description::kXZ, Description::kXA, Description::kBZ,
                                                   Description::kYB, Description::kYZ, Description::kAB};
std::string_view description_name(Description d);

/// Γ computed by eliminating only the two witnesses named by the variant.
template <FieldElement K>
Subspace<K> gamma_description(const Quintuple<K>& q, Description variant);

/// Enumerates every ω and keeps it iff the witness system with ω fixed is solvable.
/// Throws kGuard when p^n > 2^16.
Subspace<Fp> gamma_bruteforce(const Quintuple<Fp>& q);

/// {ω : ∃α∈a, ζ∈z, ξ∈x with ω = (1−r)ξ + rζ and ζ − ξ = α}.
template <FieldElement K>
Subspace<K> pi_extended(const K& r, const Subspace<K>& x, const Subspace<K>& a, const Subspace<K>& z);

// Affine chart on W = o⁻ ⊕ o⁺ with o⁻ the first m coordinates and o⁺ the remaining k.

/// {(Xv, v)} for X: o⁺ → o⁻ (an m×k matrix).
template <FieldElement K>
Subspace<K> column_graph(const Matrix<K>& X);
/// {(u, Au)} for A: o⁻ → o⁺ (a k×m matrix); the row vector (−A, 1) of the chart.
template <FieldElement K>
Subspace<K> row_graph(const Matrix<K>& A);
/// X with s = column_graph(X), or nothing if s is not transversal to o⁻.
template <FieldElement K>
std::optional<Matrix<K>> column_coordinate(const Subspace<K>& s, std::size_t m);
/// A with s = row_graph(A), or nothing if s is not transversal to o⁺.
template <FieldElement K>
std::optional<Matrix<K>> row_coordinate(const Subspace<K>& s, std::size_t m);

/// N·D⁻¹ with
///   D = (1−AX)⁻¹(1−AY) − 1 + (1−BZ)⁻¹(1−BY),
///   N = X(1−AX)⁻¹(1−AY) − Y + Z(1−BZ)⁻¹(1−BY).
/// When B = O⁻ this reduces to X − (Y−Z)(1−AY)⁻¹(1−AX), and further to X − ZAX + Z when Y = O⁺;
/// those forms are used directly. Absent when a needed inverse does not exist (the result leaves the chart).
template <FieldElement K>
std::optional<Matrix<K>> gamma_affine(const Matrix<K>& X, const Matrix<K>& A, const Matrix<K>& Y, const Matrix<K>& B,
                                      const Matrix<K>& Z);

/// X·Y⁻¹·Z, the value of Γ(X, o⁻, Y, o⁺, Z); throws kDomain if Y is singular.
template <FieldElement K>
Matrix<K> gamma_first_kind(const Matrix<K>& X, const Matrix<K>& Y, const Matrix<K>& Z);

}  // namespace asg
