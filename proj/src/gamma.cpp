#include "assocgeom/gamma.hpp"

#include "eliminate.hpp"

namespace asg {

namespace {

template <FieldElement K>
void require_quintuple(const Quintuple<K>& q) {
  require_compatible(q.x, q.a);
  require_compatible(q.x, q.y);
  require_compatible(q.x, q.b);
  require_compatible(q.x, q.z);
}

template <FieldElement K>
void require_transversal(const Subspace<K>& u, const Subspace<K>& v, const char* what) {
  if (!is_transversal(u, v)) throw Error(ErrorCode::kDomain, std::string(what) + ": required transversality fails");
}

}  // namespace

template <FieldElement K>
DomainFlags domain_flags(const Quintuple<K>& q) {
  require_quintuple(q);
  DomainFlags d;
  const bool xa = is_transversal(q.x, q.a);
  const bool zb = is_transversal(q.z, q.b);
  d.in_dl = xa && is_transversal(q.y, q.b);
  d.in_dr = is_transversal(q.y, q.a) && zb;
  d.in_dm = xa && zb && common_complement(q.a, q.b).has_value();
  return d;
}

template <FieldElement K>
Matrix<K> left_operator(const Subspace<K>& x, const Subspace<K>& a, const Subspace<K>& y, const Subspace<K>& b) {
  require_transversal(a, x, "left operator");
  require_transversal(y, b, "left operator");
  const auto one = Matrix<K>::identity(x.field(), x.ambient());
  return one - projector(a, x) * projector(y, b);
}

template <FieldElement K>
Matrix<K> middle_operator(const Subspace<K>& x, const Subspace<K>& a, const Subspace<K>& b, const Subspace<K>& z) {
  require_transversal(a, x, "middle operator");
  require_transversal(z, b, "middle operator");
  return projector(x, a) - projector(b, z);
}

template <FieldElement K>
Matrix<K> right_operator(const Subspace<K>& a, const Subspace<K>& y, const Subspace<K>& b, const Subspace<K>& z) {
  require_transversal(a, y, "right operator");
  require_transversal(z, b, "right operator");
  const auto one = Matrix<K>::identity(a.field(), a.ambient());
  return one - projector(b, z) * projector(y, a);
}

template <FieldElement K>
Matrix<K> dilation_operator(const K& s, const Subspace<K>& x, const Subspace<K>& a) {
  require_transversal(x, a, "dilation operator");
  return s * projector(a, x) + projector(x, a);
}

template <FieldElement K>
Subspace<K> gamma_operator(const Quintuple<K>& q, Branch branch) {
  require_quintuple(q);
  switch (branch) {
    case Branch::kLeft:
      return image(left_operator(q.x, q.a, q.y, q.b), q.z);
    case Branch::kRight:
      return image(right_operator(q.a, q.y, q.b, q.z), q.x);
    case Branch::kMiddle:
      if (!common_complement(q.a, q.b)) throw Error(ErrorCode::kDomain, "middle branch: a and b have no common complement");
      return image(middle_operator(q.x, q.a, q.b, q.z), q.y);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown branch");
}

template <FieldElement K>
Subspace<K> gamma_operator(const Quintuple<K>& q) {
  const auto d = domain_flags(q);
  if (d.in_dl) return gamma_operator(q, Branch::kLeft);
  if (d.in_dr) return gamma_operator(q, Branch::kRight);
  if (d.in_dm) return gamma_operator(q, Branch::kMiddle);
  throw Error(ErrorCode::kDomain, "quintuple lies outside the operator domain of gamma");
}

template <FieldElement K>
Subspace<K> gamma_extended(const Quintuple<K>& q) {
  require_quintuple(q);
  const Field f = q.x.field();
  const std::size_t n = q.x.ambient();
  const K o(0, f), p(1, f), m(-1, f);
  const Subspace<K> zero(f, n);
  // witnesses ξ α η β ζ
  const std::vector<const Subspace<K>*> w{&q.x, &q.a, &q.y, &q.b, &q.z};
  return detail::eliminate<K>(f, n, w,
                              {
                                  {&zero, p, {o, m, o, o, m}},  // ω − α − ζ
                                  {&zero, p, {o, m, m, m, o}},  // ω − α − η − β
                                  {&zero, p, {m, o, o, m, o}},  // ω − ξ − β
                              });
}

std::string_view description_name(Description d) {
  switch (d) {
    case Description::kXZ: return "xz";
    case Description::kXA: return "xa";
    case Description::kBZ: return "bz";
    case Description::kYB: return "yb";
    case Description::kYZ: return "yz";
    case Description::kAB: return "ab";
  }
  return "?";
}

template <FieldElement K>
Subspace<K> gamma_description(const Quintuple<K>& q, Description variant) {
  require_quintuple(q);
  const Field f = q.x.field();
  const std::size_t n = q.x.ambient();
  const K o(0, f), p(1, f), m(-1, f);
  using C = detail::Constraint<K>;
  // each variant: two witnesses (u, v) and three membership conditions on c_ω·ω + c_u·u + c_v·v
  switch (variant) {
    case Description::kXZ:  // ξ∈x, ζ∈z: ζ+ω ∈ a, ζ+ω+ξ ∈ y, ω+ξ ∈ b
      return detail::eliminate<K>(f, n, {&q.x, &q.z}, {C{&q.a, p, {o, p}}, C{&q.y, p, {p, p}}, C{&q.b, p, {p, o}}});
    case Description::kXA:  // ξ∈x, α∈a: ω−α ∈ z, ξ−α ∈ y, ω−ξ ∈ b
      return detail::eliminate<K>(f, n, {&q.x, &q.a}, {C{&q.z, p, {o, m}}, C{&q.y, o, {p, m}}, C{&q.b, p, {m, o}}});
    case Description::kBZ:  // β∈b, ζ∈z: ζ−ω ∈ a, ζ−β ∈ y, ω−β ∈ x
      return detail::eliminate<K>(f, n, {&q.b, &q.z}, {C{&q.a, m, {o, p}}, C{&q.y, o, {m, p}}, C{&q.x, p, {m, o}}});
    case Description::kYB:  // η∈y, β∈b: ω−η−β ∈ a, β+η ∈ z, ω−β ∈ x
      return detail::eliminate<K>(f, n, {&q.y, &q.b}, {C{&q.a, p, {m, m}}, C{&q.z, o, {p, p}}, C{&q.x, p, {o, m}}});
    case Description::kYZ:  // η∈y, ζ∈z: ω+ζ ∈ a, ζ+η ∈ b, ω+ζ+η ∈ x
      return detail::eliminate<K>(f, n, {&q.y, &q.z}, {C{&q.a, p, {o, p}}, C{&q.b, o, {p, p}}, C{&q.x, p, {p, p}}});
    case Description::kAB:  // α∈a, β∈b: ω+α ∈ z, ω+α+β ∈ y, ω+β ∈ x
      return detail::eliminate<K>(f, n, {&q.a, &q.b}, {C{&q.z, p, {p, o}}, C{&q.y, p, {p, p}}, C{&q.x, p, {o, p}}});
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown description variant");
}

Subspace<Fp> gamma_bruteforce(const Quintuple<Fp>& q) {
  require_quintuple(q);
  const Field f = q.x.field();
  const std::size_t n = q.x.ambient();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= f.p;
    if (total > (1u << 16)) throw Error(ErrorCode::kGuard, "brute force guard: p^n exceeds 2^16");
  }
  // columns: coefficients of ξ α η β ζ; rows: ζ+α, α+η+β, ξ+β (each = ω)
  const Subspace<Fp>* w[5] = {&q.x, &q.a, &q.y, &q.b, &q.z};
  const int uses[3][5] = {{0, 1, 0, 0, 1}, {0, 1, 1, 1, 0}, {1, 0, 0, 1, 0}};
  std::size_t cols = 0;
  for (const auto* s : w) cols += s->dim();
  Matrix<Fp> m(f, 3 * n, cols);
  for (std::size_t e = 0; e < 3; ++e) {
    std::size_t off = 0;
    for (std::size_t j = 0; j < 5; ++j) {
      if (uses[e][j])
        for (std::size_t i = 0; i < w[j]->dim(); ++i)
          for (std::size_t c = 0; c < n; ++c) m(e * n + c, off + i) = w[j]->basis()(i, c);
      off += w[j]->dim();
    }
  }
  Matrix<Fp> kept(f, 0, n);
  std::vector<Fp> omega(n, Fp(0, f)), rhs(3 * n, Fp(0, f));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (std::size_t c = 0; c < n; ++c) {
      omega[c] = Fp(static_cast<std::int64_t>(r % f.p), f);
      r /= f.p;
    }
    for (std::size_t e = 0; e < 3; ++e)
      for (std::size_t c = 0; c < n; ++c) rhs[e * n + c] = omega[c];
    if (solve(m, std::span<const Fp>(rhs))) kept.append_row(omega);
  }
  return Subspace<Fp>::span(kept);
}

template <FieldElement K>
Subspace<K> pi_extended(const K& r, const Subspace<K>& x, const Subspace<K>& a, const Subspace<K>& z) {
  require_compatible(x, a);
  require_compatible(x, z);
  const Field f = x.field();
  const std::size_t n = x.ambient();
  const K o(0, f), p(1, f), m(-1, f);
  const Subspace<K> zero(f, n);
  // witnesses ξ α ζ
  return detail::eliminate<K>(f, n, {&x, &a, &z},
                              {
                                  {&zero, p, {-(p - r), o, -r}},  // ω − (1−r)ξ − rζ
                                  {&zero, o, {m, m, p}},          // ζ − ξ − α
                              });
}

template <FieldElement K>
Subspace<K> column_graph(const Matrix<K>& X) {
  // rows (X e_j, e_j)
  const std::size_t m = X.rows(), k = X.cols();
  Matrix<K> rows(X.field(), k, m + k);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < m; ++i) rows(j, i) = X(i, j);
    rows(j, m + j) = K(1, X.field());
  }
  return Subspace<K>::span(rows);
}

template <FieldElement K>
Subspace<K> row_graph(const Matrix<K>& A) {
  // rows (e_i, A e_i)
  const std::size_t k = A.rows(), m = A.cols();
  Matrix<K> rows(A.field(), m, m + k);
  for (std::size_t i = 0; i < m; ++i) {
    rows(i, i) = K(1, A.field());
    for (std::size_t j = 0; j < k; ++j) rows(i, m + j) = A(j, i);
  }
  return Subspace<K>::span(rows);
}

template <FieldElement K>
std::optional<Matrix<K>> column_coordinate(const Subspace<K>& s, std::size_t m) {
  const std::size_t k = s.ambient() - m;
  if (s.dim() != k) return std::nullopt;
  const auto lower = inverse(s.basis().col_block(m, k));
  if (!lower) return std::nullopt;
  return (*lower * s.basis().col_block(0, m)).transpose();
}

template <FieldElement K>
std::optional<Matrix<K>> row_coordinate(const Subspace<K>& s, std::size_t m) {
  if (s.dim() != m) return std::nullopt;
  const std::size_t k = s.ambient() - m;
  const auto upper = inverse(s.basis().col_block(0, m));
  if (!upper) return std::nullopt;
  return (*upper * s.basis().col_block(m, k)).transpose();
}

template <FieldElement K>
std::optional<Matrix<K>> gamma_affine(const Matrix<K>& X, const Matrix<K>& A, const Matrix<K>& Y, const Matrix<K>& B,
                                      const Matrix<K>& Z) {
  const Field f = X.field();
  const std::size_t k = X.cols();
  const auto one = Matrix<K>::identity(f, k);
  // the special cases need fewer invertibility conditions than N·D⁻¹
  if (B.is_zero()) {
    if (Y.is_zero()) return X - Z * A * X + Z;
    const auto ay = inverse(one - A * Y);
    if (!ay) return std::nullopt;
    return X - (Y - Z) * *ay * (one - A * X);
  }
  const auto ax = inverse(one - A * X);
  const auto bz = inverse(one - B * Z);
  if (!ax || !bz) return std::nullopt;
  const auto left = *ax * (one - A * Y);
  const auto right = *bz * (one - B * Y);
  const auto d = inverse(left - one + right);
  if (!d) return std::nullopt;
  return (X * left - Y + Z * right) * *d;
}

template <FieldElement K>
Matrix<K> gamma_first_kind(const Matrix<K>& X, const Matrix<K>& Y, const Matrix<K>& Z) {
  const auto yi = inverse(Y);
  if (!yi) throw Error(ErrorCode::kDomain, "first-kind product: middle argument is singular");
  return X * *yi * Z;
}

#define ASG_INSTANTIATE_GAMMA(K)                                                                                   \
  template DomainFlags domain_flags(const Quintuple<K>&);                                                          \
  template Matrix<K> left_operator(const Subspace<K>&, const Subspace<K>&, const Subspace<K>&, const Subspace<K>&);   \
  template Matrix<K> middle_operator(const Subspace<K>&, const Subspace<K>&, const Subspace<K>&, const Subspace<K>&); \
  template Matrix<K> right_operator(const Subspace<K>&, const Subspace<K>&, const Subspace<K>&, const Subspace<K>&);  \
  template Matrix<K> dilation_operator(const K&, const Subspace<K>&, const Subspace<K>&);                          \
  template Subspace<K> gamma_operator(const Quintuple<K>&);                                                        \
  template Subspace<K> gamma_operator(const Quintuple<K>&, Branch);                                                \
  template Subspace<K> gamma_extended(const Quintuple<K>&);                                                        \
  template Subspace<K> gamma_description(const Quintuple<K>&, Description);                                        \
  template Subspace<K> pi_extended(const K&, const Subspace<K>&, const Subspace<K>&, const Subspace<K>&);           \
  template Subspace<K> column_graph(const Matrix<K>&);                                                             \
  template Subspace<K> row_graph(const Matrix<K>&);                                                                \
  template std::optional<Matrix<K>> column_coordinate(const Subspace<K>&, std::size_t);                            \
  template std::optional<Matrix<K>> row_coordinate(const Subspace<K>&, std::size_t);                               \
  template std::optional<Matrix<K>> gamma_affine(const Matrix<K>&, const Matrix<K>&, const Matrix<K>&,             \
                                                 const Matrix<K>&, const Matrix<K>&);                              \
  template Matrix<K> gamma_first_kind(const Matrix<K>&, const Matrix<K>&, const Matrix<K>&);

ASG_INSTANTIATE_GAMMA(Fp)
ASG_INSTANTIATE_GAMMA(Rational)

}  // namespace asg
