#include "assocgeom/pairs.hpp"

#include <functional>
#include <set>

namespace asg {

namespace {

template <FieldElement K>
Vec<K> zeros(Field f, std::size_t n) {
  return Vec<K>(n, K(0, f));
}

template <FieldElement K>
Vec<K> unit_vector(Field f, std::size_t n, std::size_t i) {
  auto v = zeros<K>(f, n);
  v[i] = K(1, f);
  return v;
}

template <FieldElement K>
Subspace<K> span_rows(Field f, std::size_t n, const Matrix<K>& rows) {
  return rows.rows() == 0 ? Subspace<K>::zero(f, n) : Subspace<K>::span(rows);
}

template <FieldElement K>
Vec<K> flatten(const Matrix<K>& m) {
  return {m.entries().begin(), m.entries().end()};
}

template <FieldElement K>
Matrix<K> unflatten(Field f, std::size_t rows, std::size_t cols, const Vec<K>& v) {
  Matrix<K> m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = v[i * cols + j];
  return m;
}

// Coordinates of v in the basis given by the rows of `basis`; throws kDomain outside the span.
template <FieldElement K>
Vec<K> coordinates(const Matrix<K>& basis, const Vec<K>& v, const char* what) {
  const auto c = solve(basis.transpose(), std::span<const K>(v));
  if (!c) throw Error(ErrorCode::kDomain, std::string(what) + " leaves the span of the basis");
  return *c;
}

// Odometer over F^n; calls visit until it returns false.
void for_each_vector(Field f, std::size_t n, const std::function<bool(const Vec<Fp>&)>& visit) {
  Vec<Fp> v(n, Fp(0, f));
  for (;;) {
    if (!visit(v)) return;
    std::size_t i = n;
    while (i > 0) {
      --i;
      v[i] = v[i] + Fp(1, f);
      if (!v[i].is_zero()) break;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

void guard_power(Field f, std::size_t exponent, std::size_t bits, const char* what) {
  double size = 1;
  for (std::size_t i = 0; i < exponent; ++i) size *= f.p;
  if (size > static_cast<double>(1ull << bits)) {
    throw Error(ErrorCode::kGuard, std::string(what) + " exceeds 2^" + std::to_string(bits) + " candidates");
  }
}

std::vector<Matrix<Fp>> invertible_matrices(Field f, std::size_t d) {
  std::vector<Matrix<Fp>> out;
  for_each_vector(f, d * d, [&](const Vec<Fp>& v) {
    auto m = unflatten(f, d, d, v);
    if (rank(m) == d) out.push_back(std::move(m));
    return true;
  });
  return out;
}

// x ↦ Σ x_i Φ_i for Φ with rows φ(e_i).
Vec<Fp> apply_rows(const Matrix<Fp>& phi, const Vec<Fp>& x) {
  auto out = zeros<Fp>(phi.field(), phi.cols());
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < phi.cols(); ++j) out[j] += x[i] * phi(i, j);
  }
  return out;
}

}  // namespace

template <FieldElement K>
Vec<K> Algebra<K>::mul(const Vec<K>& x, const Vec<K>& y) const {
  auto out = zeros<K>(field, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      const K xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k) out[k] += xy * c(i, j, k);
    }
  }
  return out;
}

template <FieldElement K>
Matrix<K> Algebra<K>::multiplication_operator(const Vec<K>& x, bool left) const {
  Matrix<K> m(field, dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const auto ej = unit_vector<K>(field, dim, j);
    const auto col = left ? mul(x, ej) : mul(ej, x);
    for (std::size_t k = 0; k < dim; ++k) m(k, j) = col[k];
  }
  return m;
}

template <FieldElement K>
Algebra<K> matrix_algebra(Field field, std::size_t n) {
  Algebra<K> a(field, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) a.c(i * n + j, j * n + l, i * n + l) = K(1, field);
  a.unit = flatten(Matrix<K>::identity(field, n));
  return a;
}

template <FieldElement K>
bool is_associative(const Algebra<K>& a) {
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) {
        const auto ei = unit_vector<K>(a.field, a.dim, i), ej = unit_vector<K>(a.field, a.dim, j),
                   ek = unit_vector<K>(a.field, a.dim, k);
        if (a.mul(a.mul(ei, ej), ek) != a.mul(ei, a.mul(ej, ek))) return false;
      }
  return true;
}

template <FieldElement K>
bool is_unit(const Algebra<K>& a, const Vec<K>& u) {
  for (std::size_t i = 0; i < a.dim; ++i) {
    const auto ei = unit_vector<K>(a.field, a.dim, i);
    if (a.mul(u, ei) != ei || a.mul(ei, u) != ei) return false;
  }
  return true;
}

std::optional<Matrix<Fp>> find_algebra_isomorphism(const Algebra<Fp>& a, const Algebra<Fp>& b) {
  if (a.dim != b.dim || !(a.field == b.field)) return std::nullopt;
  const Field f = a.field;
  const std::size_t d = a.dim;
  guard_power(f, d * d, 20, "algebra isomorphism search");
  // highest basis index in the support of e_i e_j; a product is checkable once rows up to it are set
  std::vector<std::vector<std::size_t>> reach(d, std::vector<std::size_t>(d, 0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!a.c(i, j, k).is_zero()) reach[i][j] = k;
  Matrix<Fp> phi(f, d, d);
  std::vector<Vec<Fp>> candidates;
  for_each_vector(f, d, [&](const Vec<Fp>& v) {
    candidates.push_back(v);
    return true;
  });
  const auto consistent = [&](std::size_t r) {
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j <= r; ++j) {
        if (i != r && j != r) continue;
        if (reach[i][j] > r) continue;
        Vec<Fp> lhs = zeros<Fp>(f, d);
        for (std::size_t k = 0; k <= r; ++k) {
          if (a.c(i, j, k).is_zero()) continue;
          for (std::size_t m = 0; m < d; ++m) lhs[m] += a.c(i, j, k) * phi(k, m);
        }
        if (lhs != b.mul(phi.row_vector(i), phi.row_vector(j))) return false;
      }
    return true;
  };
  std::function<bool(std::size_t)> place = [&](std::size_t r) -> bool {
    if (r == d) {
      if (rank(phi) != d) return false;
      // products whose support reaches past every row were checked at the last row
      if (a.unit && b.unit && apply_rows(phi, *a.unit) != *b.unit) return false;
      return true;
    }
    for (const auto& v : candidates) {
      for (std::size_t m = 0; m < d; ++m) phi(r, m) = v[m];
      if (rank(phi.row_block(0, r + 1)) != r + 1) continue;
      if (consistent(r) && place(r + 1)) return true;
    }
    return false;
  };
  if (!place(0)) return std::nullopt;
  return phi;
}

template <FieldElement K>
PairModel<K>::PairModel(Field f, std::size_t plus, std::size_t minus) : field(f), dims{plus, minus} {
  constants[0].assign(plus * minus * plus * plus, K(0, f));
  constants[1].assign(minus * plus * minus * minus, K(0, f));
}

template <FieldElement K>
K& PairModel<K>::c(Sign s, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  const std::size_t a = dim(s), b = dim(opposite(s));
  return constants[s == Sign::kPlus ? 0 : 1][((i * b + j) * a + k) * a + l];
}

template <FieldElement K>
const K& PairModel<K>::c(Sign s, std::size_t i, std::size_t j, std::size_t k, std::size_t l) const {
  const std::size_t a = dim(s), b = dim(opposite(s));
  return constants[s == Sign::kPlus ? 0 : 1][((i * b + j) * a + k) * a + l];
}

template <FieldElement K>
Vec<K> PairModel<K>::product(Sign s, const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) const {
  const std::size_t a = dim(s), b = dim(opposite(s));
  if (x.size() != a || y.size() != b || z.size() != a) throw Error(ErrorCode::kMismatch, "pair product: wrong sizes");
  auto out = zeros<K>(field, a);
  for (std::size_t i = 0; i < a; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < b; ++j) {
      if (y[j].is_zero()) continue;
      const K xy = x[i] * y[j];
      for (std::size_t k = 0; k < a; ++k) {
        if (z[k].is_zero()) continue;
        const K xyz = xy * z[k];
        for (std::size_t l = 0; l < a; ++l) out[l] += xyz * c(s, i, j, k, l);
      }
    }
  }
  return out;
}

namespace {

// Fills structure constants from a trilinear map evaluated on basis vectors.
template <FieldElement K>
PairModel<K> pair_from_trilinear(Field f, std::size_t plus, std::size_t minus,
                                 const std::function<Vec<K>(Sign, const Vec<K>&, const Vec<K>&, const Vec<K>&)>& fn) {
  PairModel<K> p(f, plus, minus);
  for (const Sign s : {Sign::kPlus, Sign::kMinus}) {
    const std::size_t a = p.dim(s), b = p.dim(opposite(s));
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j)
        for (std::size_t k = 0; k < a; ++k) {
          const auto v = fn(s, unit_vector<K>(f, a, i), unit_vector<K>(f, b, j), unit_vector<K>(f, a, k));
          for (std::size_t l = 0; l < a; ++l) p.c(s, i, j, k, l) = v[l];
        }
  }
  return p;
}

}  // namespace

template <FieldElement K>
PairModel<K> hom_pair(Field field, std::size_t dim_e, std::size_t dim_f) {
  // A⁺ = Hom(E,F): dim_f × dim_e; A⁻ = Hom(F,E): dim_e × dim_f
  const std::size_t rows_plus = dim_f, cols_plus = dim_e;
  return pair_from_trilinear<K>(field, dim_e * dim_f, dim_e * dim_f,
                                [&](Sign s, const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) {
                                  const std::size_t r = s == Sign::kPlus ? rows_plus : cols_plus;
                                  const std::size_t c = s == Sign::kPlus ? cols_plus : rows_plus;
                                  const auto X = unflatten(field, r, c, x), Y = unflatten(field, c, r, y),
                                             Z = unflatten(field, r, c, z);
                                  return flatten<K>(s == Sign::kPlus ? X * Y * Z : Z * Y * X);
                                });
}

template <FieldElement K>
PairModel<K> algebra_pair(const Algebra<K>& a) {
  return pair_from_trilinear<K>(a.field, a.dim, a.dim, [&](Sign s, const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) {
    return s == Sign::kPlus ? a.mul(a.mul(x, y), z) : a.mul(a.mul(z, y), x);
  });
}

template <FieldElement K>
PairModel<K> swapped(const PairModel<K>& p) {
  PairModel<K> q(p.field, p.dims[1], p.dims[0]);
  q.constants = {p.constants[1], p.constants[0]};
  return q;
}

template <FieldElement K>
CheckResult check_pair_laws(const PairModel<K>& p, Sampler<K>& sampler, std::size_t budget) {
  CheckResult res;
  const auto random = [&](std::size_t n) {
    Vec<K> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(sampler.scalar());
    return v;
  };
  for (std::size_t t = 0; t < budget; ++t)
    for (const Sign s : {Sign::kPlus, Sign::kMinus}) {
      const Sign o = opposite(s);
      const auto x = random(p.dim(s)), z = random(p.dim(s)), v = random(p.dim(s));
      const auto y = random(p.dim(o)), u = random(p.dim(o));
      const auto first = p.product(s, x, y, p.product(s, z, u, v));
      const auto second = p.product(s, p.product(s, x, y, z), u, v);
      const auto third = p.product(s, x, p.product(o, u, z, y), v);
      res.record(first == second && second == third,
                 [&] { return std::string(s == Sign::kPlus ? "plus" : "minus") + " para-associativity"; });
    }
  return res;
}

std::optional<std::array<Matrix<Fp>, 2>> find_pair_isomorphism(const PairModel<Fp>& p, const PairModel<Fp>& q) {
  if (p.dims != q.dims || !(p.field == q.field)) return std::nullopt;
  const Field f = p.field;
  guard_power(f, p.dims[0] * p.dims[0] + p.dims[1] * p.dims[1], 20, "pair isomorphism search");
  const auto plus = invertible_matrices(f, p.dims[0]);
  const auto minus = invertible_matrices(f, p.dims[1]);
  for (const auto& a : plus)
    for (const auto& b : minus) {
      bool ok = true;
      for (const Sign s : {Sign::kPlus, Sign::kMinus}) {
        const auto& phi_s = s == Sign::kPlus ? a : b;
        const auto& phi_o = s == Sign::kPlus ? b : a;
        const std::size_t da = p.dim(s), db = p.dim(opposite(s));
        for (std::size_t i = 0; i < da && ok; ++i)
          for (std::size_t j = 0; j < db && ok; ++j)
            for (std::size_t k = 0; k < da && ok; ++k) {
              const auto ei = unit_vector<Fp>(f, da, i), ej = unit_vector<Fp>(f, db, j), ek = unit_vector<Fp>(f, da, k);
              ok = apply_rows(phi_s, p.product(s, ei, ej, ek)) ==
                   q.product(s, phi_s.row_vector(i), phi_o.row_vector(j), phi_s.row_vector(k));
            }
      }
      if (ok) return std::array<Matrix<Fp>, 2>{a, b};
    }
  return std::nullopt;
}

template <FieldElement K>
Algebra<K> homotope(const PairModel<K>& p, Sign s, const Vec<K>& a) {
  const std::size_t d = p.dim(s);
  Algebra<K> alg(p.field, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const auto v = p.product(s, unit_vector<K>(p.field, d, i), a, unit_vector<K>(p.field, d, j));
      for (std::size_t k = 0; k < d; ++k) alg.c(i, j, k) = v[k];
    }
  alg.unit = pair_inverse(p, opposite(s), a);
  return alg;
}

template <FieldElement K>
Vec<K> jordan_Q(const PairModel<K>& p, Sign s, const Vec<K>& x, const Vec<K>& y) {
  return p.product(s, x, y, x);
}

template <FieldElement K>
Vec<K> jordan_T(const PairModel<K>& p, Sign s, const Vec<K>& x, const Vec<K>& y, const Vec<K>& z) {
  auto out = p.product(s, x, y, z);
  const auto other = p.product(s, z, y, x);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other[i];
  return out;
}

template <FieldElement K>
Matrix<K> quadratic_operator(const PairModel<K>& p, Sign s, const Vec<K>& x) {
  const std::size_t a = p.dim(s), b = p.dim(opposite(s));
  Matrix<K> q(p.field, a, b);
  for (std::size_t j = 0; j < b; ++j) {
    const auto col = jordan_Q(p, s, x, unit_vector<K>(p.field, b, j));
    for (std::size_t i = 0; i < a; ++i) q(i, j) = col[i];
  }
  return q;
}

template <FieldElement K>
std::optional<Vec<K>> pair_inverse(const PairModel<K>& p, Sign s, const Vec<K>& x) {
  const auto q = quadratic_operator(p, s, x);
  if (q.rows() != q.cols() || q.rows() == 0) return std::nullopt;
  const auto inv = inverse(q);
  if (!inv) return std::nullopt;
  return inv->apply(x);
}

template <FieldElement K>
BasePoint<K>::BasePoint(Subspace<K> o_plus, Subspace<K> o_minus)
    : o_plus_(std::move(o_plus)), o_minus_(std::move(o_minus)) {
  require_compatible(o_plus_, o_minus_);
  if (!is_transversal(o_plus_, o_minus_)) throw Error(ErrorCode::kDomain, "base point: o+ and o- are not transversal");
  const Field f = o_plus_.field();
  const std::size_t n = o_plus_.ambient();
  basis_ = Matrix<K>(f, 0, n);
  if (o_minus_.dim()) basis_ = basis_.vstack(o_minus_.basis());
  if (o_plus_.dim()) basis_ = basis_.vstack(o_plus_.basis());
  inverse_ = *inverse(basis_);
}

template <FieldElement K>
Subspace<K> BasePoint<K>::to_chart(const Subspace<K>& s) const {
  if (s.dim() == 0) return s;
  return Subspace<K>::span(s.basis() * inverse_);
}

template <FieldElement K>
Subspace<K> BasePoint<K>::from_chart(const Subspace<K>& s) const {
  if (s.dim() == 0) return s;
  return Subspace<K>::span(s.basis() * basis_);
}

template <FieldElement K>
Subspace<K> BasePoint<K>::plus_point(const Matrix<K>& X) const {
  if (X.rows() != dim_minus() || X.cols() != dim_plus()) throw Error(ErrorCode::kMismatch, "plus coordinate has wrong shape");
  return from_chart(column_graph(X));
}

template <FieldElement K>
Subspace<K> BasePoint<K>::minus_point(const Matrix<K>& A) const {
  if (A.rows() != dim_plus() || A.cols() != dim_minus()) throw Error(ErrorCode::kMismatch, "minus coordinate has wrong shape");
  return from_chart(row_graph(A));
}

template <FieldElement K>
Matrix<K> BasePoint<K>::plus_coordinate(const Subspace<K>& s) const {
  auto X = column_coordinate(to_chart(s), dim_minus());
  if (!X) throw Error(ErrorCode::kDomain, "point is not transversal to o-");
  return *X;
}

template <FieldElement K>
Matrix<K> BasePoint<K>::minus_coordinate(const Subspace<K>& s) const {
  auto A = row_coordinate(to_chart(s), dim_minus());
  if (!A) throw Error(ErrorCode::kDomain, "point is not transversal to o+");
  return *A;
}

template <FieldElement K>
Matrix<K> BasePoint<K>::product_plus(const Matrix<K>& X, const Matrix<K>& B, const Matrix<K>& Z) const {
  return plus_coordinate(gamma_extended(Quintuple<K>{plus_point(X), o_minus_, minus_point(B), o_plus_, plus_point(Z)}));
}

template <FieldElement K>
Matrix<K> BasePoint<K>::product_minus(const Matrix<K>& A, const Matrix<K>& Y, const Matrix<K>& C) const {
  return minus_coordinate(gamma_extended(Quintuple<K>{minus_point(A), o_minus_, plus_point(Y), o_plus_, minus_point(C)}));
}

namespace {

template <FieldElement K>
std::vector<Matrix<K>> matrix_units(Field f, std::size_t rows, std::size_t cols) {
  std::vector<Matrix<K>> out;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Matrix<K> m(f, rows, cols);
      m(i, j) = K(1, f);
      out.push_back(std::move(m));
    }
  return out;
}

template <FieldElement K>
Matrix<K> stack_flat(Field f, std::size_t width, const std::vector<Matrix<K>>& ms) {
  Matrix<K> out(f, 0, width);
  for (const auto& m : ms) out.append_row(flatten(m));
  return out;
}

}  // namespace

template <FieldElement K>
PairModel<K> extract_pair(const BasePoint<K>& bp, const std::vector<Matrix<K>>& plus_basis,
                          const std::vector<Matrix<K>>& minus_basis) {
  const Field f = bp.o_plus().field();
  const std::size_t m = bp.dim_minus(), k = bp.dim_plus();
  const auto pb = plus_basis.empty() ? matrix_units<K>(f, m, k) : plus_basis;
  const auto mb = minus_basis.empty() ? matrix_units<K>(f, k, m) : minus_basis;
  const auto plus_rows = stack_flat(f, m * k, pb), minus_rows = stack_flat(f, m * k, mb);
  PairModel<K> p(f, pb.size(), mb.size());
  for (const Sign s : {Sign::kPlus, Sign::kMinus}) {
    const auto& outer = s == Sign::kPlus ? pb : mb;
    const auto& inner = s == Sign::kPlus ? mb : pb;
    const auto& rows = s == Sign::kPlus ? plus_rows : minus_rows;
    for (std::size_t i = 0; i < outer.size(); ++i)
      for (std::size_t j = 0; j < inner.size(); ++j)
        for (std::size_t l = 0; l < outer.size(); ++l) {
          const auto value = s == Sign::kPlus ? bp.product_plus(outer[i], inner[j], outer[l])
                                              : bp.product_minus(outer[i], inner[j], outer[l]);
          const auto coords = coordinates(rows, flatten(value), "pair product");
          for (std::size_t r = 0; r < outer.size(); ++r) p.c(s, i, j, l, r) = coords[r];
        }
  }
  return p;
}

template <FieldElement K>
ExtractionReport check_extracted_pair(const BasePoint<K>& bp, Sampler<K>& sampler, std::size_t budget) {
  const std::size_t m = bp.dim_minus(), k = bp.dim_plus();
  const Field f = bp.o_plus().field();
  ExtractionReport rep;
  const auto P = [&](Sign s, const Matrix<K>& x, const Matrix<K>& y, const Matrix<K>& z) {
    return s == Sign::kPlus ? bp.product_plus(x, y, z) : bp.product_minus(x, y, z);
  };
  for (std::size_t t = 0; t < budget; ++t)
    for (const Sign s : {Sign::kPlus, Sign::kMinus}) {
      const Sign o = opposite(s);
      // shapes: A⁺ is m×k, A⁻ is k×m
      const auto draw = [&](Sign which) { return which == Sign::kPlus ? sampler.matrix(m, k) : sampler.matrix(k, m); };
      const auto zero = [&](Sign which) { return which == Sign::kPlus ? Matrix<K>(f, m, k) : Matrix<K>(f, k, m); };
      std::array<Matrix<K>, 3> args{draw(s), draw(o), draw(s)};
      const K r = sampler.scalar();
      const auto describe = [&] {
        return std::string(s == Sign::kPlus ? "plus" : "minus") + "\n[x]\n" + args[0].str() + "\n[y]\n" + args[1].str() +
               "\n[z]\n" + args[2].str() + "\n";
      };
      const auto value = P(s, args[0], args[1], args[2]);
      bool linear = true;
      for (int slot = 0; slot < 3; ++slot) {
        const Sign which = slot == 1 ? o : s;
        const auto extra = draw(which);
        auto with = [&](const Matrix<K>& v) {
          auto c = args;
          c[slot] = v;
          return P(s, c[0], c[1], c[2]);
        };
        linear = linear && with(args[slot] + extra) == value + with(extra);
        linear = linear && with(r * args[slot]) == r * value;
        linear = linear && with(zero(which)).is_zero();
      }
      rep.trilinear.record(linear, describe);
      const auto expected = s == Sign::kPlus ? args[0] * args[1] * args[2] : args[2] * args[1] * args[0];
      rep.matrix_model.record(value == expected, describe);
      const auto v = draw(s), u = draw(o);
      const auto first = P(s, args[0], args[1], P(s, args[2], u, v));
      const auto second = P(s, P(s, args[0], args[1], args[2]), u, v);
      const auto third = P(s, args[0], P(o, u, args[2], args[1]), v);
      rep.para_associative.record(first == second && second == third, describe);
    }
  return rep;
}

template <FieldElement K>
Algebra<K> extract_algebra(const Subspace<K>& a, const Subspace<K>& u, const Subspace<K>& c) {
  require_compatible(a, u);
  require_compatible(a, c);
  if (!is_transversal(a, u) || !is_transversal(u, c) || !is_transversal(a, c)) {
    throw Error(ErrorCode::kDomain, "algebra: (a, u, c) is not a transversal triple");
  }
  const BasePoint<K> bp(a, c);  // U_c = A⁺ with origin a
  const Field f = a.field();
  const std::size_t m = c.dim(), k = a.dim();
  const auto units = matrix_units<K>(f, m, k);
  Algebra<K> alg(f, m * k);
  for (std::size_t i = 0; i < units.size(); ++i)
    for (std::size_t j = 0; j < units.size(); ++j) {
      const auto value =
          bp.plus_coordinate(gamma_extended(Quintuple<K>{bp.plus_point(units[i]), a, u, c, bp.plus_point(units[j])}));
      const auto flat = flatten(value);
      for (std::size_t l = 0; l < units.size(); ++l) alg.c(i, j, l) = flat[l];
    }
  alg.unit = flatten(bp.plus_coordinate(u));
  return alg;
}

template <FieldElement K>
ImbeddedAlgebra<K> peirce_decomposition(const Algebra<K>& a, const Vec<K>& e) {
  if (a.mul(e, e) != e) throw Error(ErrorCode::kInvalidArgument, "peirce: element is not idempotent");
  const Field f = a.field;
  const auto L = a.multiplication_operator(e, true), R = a.multiplication_operator(e, false);
  const auto id = Matrix<K>::identity(f, a.dim);
  ImbeddedAlgebra<K> out{a, e, {}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const auto system = (L - K(i, f) * id).vstack(R - K(j, f) * id);
      out.peirce[i][j] = span_rows(f, a.dim, kernel(system));
    }
  return out;
}

template <FieldElement K>
ImbeddedAlgebra<K> standard_imbedding(Field field, std::size_t dim_e, std::size_t dim_f) {
  const std::size_t n = dim_e + dim_f;
  const auto alg = matrix_algebra<K>(field, n);
  Matrix<K> e(field, n, n);
  for (std::size_t i = 0; i < dim_e; ++i) e(i, i) = K(1, field);
  return peirce_decomposition(alg, flatten(e));
}

template <FieldElement K>
PairModel<K> pair_from_imbedding(const ImbeddedAlgebra<K>& imb) {
  const auto& alg = imb.algebra;
  const auto& plus = imb.peirce[0][1];
  const auto& minus = imb.peirce[1][0];
  PairModel<K> p(alg.field, plus.dim(), minus.dim());
  for (const Sign s : {Sign::kPlus, Sign::kMinus}) {
    const auto& outer = s == Sign::kPlus ? plus.basis() : minus.basis();
    const auto& inner = s == Sign::kPlus ? minus.basis() : plus.basis();
    for (std::size_t i = 0; i < outer.rows(); ++i)
      for (std::size_t j = 0; j < inner.rows(); ++j)
        for (std::size_t k = 0; k < outer.rows(); ++k) {
          const auto x = outer.row_vector(i), y = inner.row_vector(j), z = outer.row_vector(k);
          const auto v = s == Sign::kPlus ? alg.mul(alg.mul(x, y), z) : alg.mul(alg.mul(z, y), x);
          const auto coords = coordinates(outer, v, "imbedded pair product");
          for (std::size_t l = 0; l < outer.rows(); ++l) p.c(s, i, j, k, l) = coords[l];
        }
  }
  return p;
}

bool is_right_ideal(const Algebra<Fp>& a, const Subspace<Fp>& s) {
  const auto& b = s.basis();
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t i = 0; i < a.dim; ++i)
      if (!s.contains(a.mul(b.row_vector(r), unit_vector<Fp>(a.field, a.dim, i)))) return false;
  return true;
}

std::vector<Subspace<Fp>> right_ideals(const Algebra<Fp>& a) {
  const Field f = a.field;
  guard_power(f, a.dim, 16, "right ideal enumeration");
  std::set<Subspace<Fp>> found{Subspace<Fp>::zero(f, a.dim)};
  for_each_vector(f, a.dim, [&](const Vec<Fp>& x) {
    Matrix<Fp> rows(f, 0, a.dim);
    rows.append_row(x);
    for (std::size_t i = 0; i < a.dim; ++i) rows.append_row(a.mul(x, unit_vector<Fp>(f, a.dim, i)));
    found.insert(span_rows(f, a.dim, rows));
    return true;
  });
  // every right ideal is the sum of the cyclic ideals of its elements
  std::vector<Subspace<Fp>> all(found.begin(), found.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      auto s = join(all[i], all[j]);
      if (found.insert(s).second) all.push_back(std::move(s));
    }
  return {found.begin(), found.end()};
}

std::vector<Subspace<Fp>> right_ideals_by_filter(const Algebra<Fp>& a) {
  guard_power(a.field, a.dim, 8, "right ideal filter");
  std::vector<Subspace<Fp>> out;
  for (auto& s : enumerate_subspaces(a.field, a.dim))
    if (is_right_ideal(a, s)) out.push_back(std::move(s));
  std::sort(out.begin(), out.end());
  return out;
}

PairGeometry geometry_from_pair(Field field, std::size_t dim_e, std::size_t dim_f) {
  auto imb = standard_imbedding<Fp>(field, dim_e, dim_f);
  const auto& alg = imb.algebra;
  auto ideals = right_ideals(alg);
  auto generated = [&](const Vec<Fp>& x) {
    Matrix<Fp> rows(field, 0, alg.dim);
    for (std::size_t i = 0; i < alg.dim; ++i) rows.append_row(alg.mul(x, unit_vector<Fp>(field, alg.dim, i)));
    return span_rows(field, alg.dim, rows);
  };
  Vec<Fp> f = *alg.unit;
  for (std::size_t i = 0; i < f.size(); ++i) f[i] -= imb.idempotent[i];
  BasePoint<Fp> base(generated(imb.idempotent), generated(f));
  const std::size_t m = base.dim_minus(), k = base.dim_plus();
  Matrix<Fp> plus_rows(field, 0, m * k), minus_rows(field, 0, m * k);
  std::size_t plus_points = 0, minus_points = 0;
  for (const auto& s : ideals) {
    if (is_transversal(s, base.o_minus())) {
      ++plus_points;
      plus_rows.append_row(flatten(base.plus_coordinate(s)));
    }
    if (is_transversal(s, base.o_plus())) {
      ++minus_points;
      minus_rows.append_row(flatten(base.minus_coordinate(s)));
    }
  }
  const auto to_matrices = [&](const Matrix<Fp>& rows, std::size_t r, std::size_t c) {
    std::vector<Matrix<Fp>> out;
    const auto basis = span_rows(field, m * k, rows).basis();
    for (std::size_t i = 0; i < basis.rows(); ++i) out.push_back(unflatten(field, r, c, basis.row_vector(i)));
    return out;
  };
  auto extracted = extract_pair(base, to_matrices(plus_rows, m, k), to_matrices(minus_rows, k, m));
  return PairGeometry{std::move(imb), std::move(ideals), std::move(base), plus_points, minus_points, std::move(extracted)};
}

#define ASG_INSTANTIATE_PAIRS(K)                                                                                    \
  template struct Algebra<K>;                                                                                       \
  template Algebra<K> matrix_algebra(Field, std::size_t);                                                           \
  template bool is_associative(const Algebra<K>&);                                                                  \
  template bool is_unit(const Algebra<K>&, const Vec<K>&);                                                          \
  template struct PairModel<K>;                                                                                     \
  template PairModel<K> hom_pair(Field, std::size_t, std::size_t);                                                  \
  template PairModel<K> algebra_pair(const Algebra<K>&);                                                            \
  template PairModel<K> swapped(const PairModel<K>&);                                                               \
  template CheckResult check_pair_laws(const PairModel<K>&, Sampler<K>&, std::size_t);                             \
  template Algebra<K> homotope(const PairModel<K>&, Sign, const Vec<K>&);                                           \
  template Vec<K> jordan_Q(const PairModel<K>&, Sign, const Vec<K>&, const Vec<K>&);                                \
  template Vec<K> jordan_T(const PairModel<K>&, Sign, const Vec<K>&, const Vec<K>&, const Vec<K>&);                 \
  template Matrix<K> quadratic_operator(const PairModel<K>&, Sign, const Vec<K>&);                                  \
  template std::optional<Vec<K>> pair_inverse(const PairModel<K>&, Sign, const Vec<K>&);                            \
  template class BasePoint<K>;                                                                                      \
  template PairModel<K> extract_pair(const BasePoint<K>&, const std::vector<Matrix<K>>&,                            \
                                     const std::vector<Matrix<K>>&);                                                \
  template ExtractionReport check_extracted_pair(const BasePoint<K>&, Sampler<K>&, std::size_t);                    \
  template Algebra<K> extract_algebra(const Subspace<K>&, const Subspace<K>&, const Subspace<K>&);                  \
  template ImbeddedAlgebra<K> peirce_decomposition(const Algebra<K>&, const Vec<K>&);                               \
  template ImbeddedAlgebra<K> standard_imbedding(Field, std::size_t, std::size_t);                                  \
  template PairModel<K> pair_from_imbedding(const ImbeddedAlgebra<K>&);

ASG_INSTANTIATE_PAIRS(Fp)
ASG_INSTANTIATE_PAIRS(Rational)

}  // namespace asg
