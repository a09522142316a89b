#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "assocgeom/gamma.hpp"
#include "assocgeom/report.hpp"
#include "assocgeom/sampling.hpp"

namespace asg {

template <FieldElement K>
using Vec = std::vector<K>;

/// Finite-dimensional algebra by structure constants: e_i e_j = Σ_k c[(i·d + j)·d + k] e_k.
template <FieldElement K>
struct Algebra {
  Field field;
  std::size_t dim = 0;
  std::vector<K> constants;
  std::optional<Vec<K>> unit;

  Algebra(Field f, std::size_t d) : field(f), dim(d), constants(d * d * d, K(0, f)) {}

  K& c(std::size_t i, std::size_t j, std::size_t k) { return constants[(i * dim + j) * dim + k]; }
  const K& c(std::size_t i, std::size_t j, std::size_t k) const { return constants[(i * dim + j) * dim + k]; }

  Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const;
  /// Matrix of v ↦ x·v (left = true) or v ↦ v·x, acting on column coordinate vectors.
  Matrix<K> multiplication_operator(const Vec<K>& x, bool left) const;
};

/// M(n, F) with basis E_ij at index i·n + j.
template <FieldElement K>
Algebra<K> matrix_algebra(Field field, std::size_t n);

/// Exhaustive over basis triples.
template <FieldElement K>
bool is_associative(const Algebra<K>& a);
/// u·e_i = e_i·u = e_i for every basis vector.
template <FieldElement K>
bool is_unit(const Algebra<K>& a, const Vec<K>& u);

/// Linear bijection φ (row i = φ(e_i)) with φ(xy) = φ(x)φ(y) and φ(1) = 1, found by exhaustive search.
/// Throws kGuard when p^(d·d) > 2^20.
std::optional<Matrix<Fp>> find_algebra_isomorphism(const Algebra<Fp>& a, const Algebra<Fp>& b);

enum class Sign { kPlus, kMinus };

inline Sign opposite(Sign s) { return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus; }

/// Associative pair by structure constants. ⟨·,·,·⟩^+ : A⁺ × A⁻ × A⁺ → A⁺ and
/// ⟨·,·,·⟩^- : A⁻ × A⁺ × A⁻ → A⁻, indexed like Algebra (three inputs, then output).
template <FieldElement K>
struct PairModel {
  Field field;
  std::array<std::size_t, 2> dims{};  // dims[0] = dim A⁺, dims[1] = dim A⁻
  std::array<std::vector<K>, 2> constants;

  PairModel(Field f, std::size_t plus, std::size_t minus);

  std::size_t dim(Sign s) const { return dims[s == Sign::kPlus ? 0 : 1]; }
  K& c(Sign s, std::size_t i, std::size_t j, std::size_t k, std::size_t l);
  const K& c(Sign s, std::size_t i, std::size_t j, std::size_t k, std::size_t l) const;

  /// ⟨xyz⟩^s.
  Vec<K> product(Sign s, const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) const;
};

/// (Hom(E,F), Hom(F,E)) with ⟨XYZ⟩⁺ = XYZ and ⟨XYZ⟩⁻ = ZYX; matrices flattened row-major.
template <FieldElement K>
PairModel<K> hom_pair(Field field, std::size_t dim_e, std::size_t dim_f);
/// (A, A) with ⟨xyz⟩⁺ = xyz and ⟨xyz⟩⁻ = zyx.
template <FieldElement K>
PairModel<K> algebra_pair(const Algebra<K>& a);
/// (A⁻, A⁺) with the two products exchanged.
template <FieldElement K>
PairModel<K> swapped(const PairModel<K>& p);

/// Para-associativity ⟨xy⟨zuv⟩⟩ = ⟨⟨xyz⟩uv⟩ = ⟨x⟨uzy⟩v⟩ for both signs on random elements.
template <FieldElement K>
CheckResult check_pair_laws(const PairModel<K>& p, Sampler<K>& sampler, std::size_t budget);

/// Pair of linear bijections intertwining both products. Throws kGuard when the search exceeds 2^20.
std::optional<std::array<Matrix<Fp>, 2>> find_pair_isomorphism(const PairModel<Fp>& p, const PairModel<Fp>& q);

/// x ·_a y = ⟨x a y⟩^s on A^s, for a ∈ A^(−s).
template <FieldElement K>
Algebra<K> homotope(const PairModel<K>& p, Sign s, const Vec<K>& a);
/// Q(x)y = ⟨xyx⟩^s.
template <FieldElement K>
Vec<K> jordan_Q(const PairModel<K>& p, Sign s, const Vec<K>& x, const Vec<K>& y);
/// T(x,y,z) = ⟨xyz⟩^s + ⟨zyx⟩^s.
template <FieldElement K>
Vec<K> jordan_T(const PairModel<K>& p, Sign s, const Vec<K>& x, const Vec<K>& y, const Vec<K>& z);
/// Matrix of Q(x) : A^(−s) → A^s.
template <FieldElement K>
Matrix<K> quadratic_operator(const PairModel<K>& p, Sign s, const Vec<K>& x);
/// Q(x)⁻¹x ∈ A^(−s) when Q(x) is invertible, else nothing.
template <FieldElement K>
std::optional<Vec<K>> pair_inverse(const PairModel<K>& p, Sign s, const Vec<K>& x);

/// The chart W = o⁻ ⊕ o⁺ at a base point. A⁺ = U_{o⁻} ≅ Hom(o⁺, o⁻) and A⁻ = U_{o⁺} ≅ Hom(o⁻, o⁺),
/// with coordinates taken in the bases of o⁻ and o⁺.
template <FieldElement K>
class BasePoint {
 public:
  /// Throws kDomain unless o⁺ ⊤ o⁻.
  BasePoint(Subspace<K> o_plus, Subspace<K> o_minus);

  const Subspace<K>& o_plus() const { return o_plus_; }
  const Subspace<K>& o_minus() const { return o_minus_; }
  std::size_t dim_plus() const { return o_plus_.dim(); }
  std::size_t dim_minus() const { return o_minus_.dim(); }

  /// The point of A⁺ with coordinate X (dim o⁻ × dim o⁺).
  Subspace<K> plus_point(const Matrix<K>& X) const;
  /// The point of A⁻ with coordinate A (dim o⁺ × dim o⁻).
  Subspace<K> minus_point(const Matrix<K>& A) const;
  /// Throws kDomain unless s ⊤ o⁻.
  Matrix<K> plus_coordinate(const Subspace<K>& s) const;
  /// Throws kDomain unless s ⊤ o⁺.
  Matrix<K> minus_coordinate(const Subspace<K>& s) const;

  /// ⟨XBZ⟩⁺ = Γ(x, o⁻, b, o⁺, z) in coordinates.
  Matrix<K> product_plus(const Matrix<K>& X, const Matrix<K>& B, const Matrix<K>& Z) const;
  /// ⟨AYC⟩⁻ = Γ(a, o⁻, y, o⁺, c) in coordinates.
  Matrix<K> product_minus(const Matrix<K>& A, const Matrix<K>& Y, const Matrix<K>& C) const;

 private:
  Subspace<K> to_chart(const Subspace<K>& s) const;
  Subspace<K> from_chart(const Subspace<K>& s) const;

  Subspace<K> o_plus_, o_minus_;
  Matrix<K> basis_;      // rows: basis of o⁻, then basis of o⁺
  Matrix<K> inverse_;
};

/// Structure constants of the pair at a base point. The optional bases (coordinate matrices
/// flattened row-major) restrict A± to subspaces of the chart; by default all matrix units are used.
template <FieldElement K>
PairModel<K> extract_pair(const BasePoint<K>& bp, const std::vector<Matrix<K>>& plus_basis = {},
                          const std::vector<Matrix<K>>& minus_basis = {});

/// Samples trilinearity (additivity and homogeneity in every slot, vanishing at the origins) and
/// para-associativity of the geometric products, plus agreement with XBZ / CYA in the chart.
struct ExtractionReport {
  CheckResult trilinear;
  CheckResult para_associative;
  CheckResult matrix_model;
  bool ok() const { return trilinear.ok() && para_associative.ok() && matrix_model.ok(); }
};
template <FieldElement K>
ExtractionReport check_extracted_pair(const BasePoint<K>& bp, Sampler<K>& sampler, std::size_t budget);

/// U_c with origin a, unit u and product xz = Γ(x,a,u,c,z), in the coordinates of Hom(a, c).
/// Throws kDomain unless a, u, c are mutually transversal.
template <FieldElement K>
Algebra<K> extract_algebra(const Subspace<K>& a, const Subspace<K>& u, const Subspace<K>& c);

/// Algebra with an idempotent and its Peirce blocks A_ij = {x : ex = ix, xe = jx}.
template <FieldElement K>
struct ImbeddedAlgebra {
  Algebra<K> algebra;
  Vec<K> idempotent;
  std::array<std::array<Subspace<K>, 2>, 2> peirce;  // peirce[i][j] = A_ij
};

/// Peirce decomposition of (a, e). Throws kInvalidArgument unless e·e = e.
template <FieldElement K>
ImbeddedAlgebra<K> peirce_decomposition(const Algebra<K>& a, const Vec<K>& e);
/// End(E ⊕ F) = M(dim E + dim F) with e the projector onto E (the first coordinates).
template <FieldElement K>
ImbeddedAlgebra<K> standard_imbedding(Field field, std::size_t dim_e, std::size_t dim_f);
/// (A⁺, A⁻) = (A01, A10) with ⟨xyz⟩⁺ = xyz, ⟨xyz⟩⁻ = zyx, in the RREF bases of the blocks.
template <FieldElement K>
PairModel<K> pair_from_imbedding(const ImbeddedAlgebra<K>& imb);

/// Right ideals of a finite algebra as sorted subspaces: sums of cyclic ideals xÂ, closed under join.
/// Throws kGuard when p^dim > 2^16.
std::vector<Subspace<Fp>> right_ideals(const Algebra<Fp>& a);
/// Same set by filtering every subspace; throws kGuard when p^dim > 2^8.
std::vector<Subspace<Fp>> right_ideals_by_filter(const Algebra<Fp>& a);
bool is_right_ideal(const Algebra<Fp>& a, const Subspace<Fp>& s);

/// The geometry of right ideals of the standard imbedding of (Hom(E,F), Hom(F,E)), with base point
/// (eÂ, fÂ), and the pair read off it: A± are the right ideals transversal to o∓.
struct PairGeometry {
  ImbeddedAlgebra<Fp> imbedding;
  std::vector<Subspace<Fp>> ideals;
  BasePoint<Fp> base;
  std::size_t plus_points = 0;   // right ideals transversal to o⁻
  std::size_t minus_points = 0;  // right ideals transversal to o⁺
  PairModel<Fp> extracted;
};
PairGeometry geometry_from_pair(Field field, std::size_t dim_e, std::size_t dim_f);

}  // namespace asg
