#include "assocgeom/subspace.hpp"

#include <algorithm>

namespace asg {

template <FieldElement K>
Subspace<K>::Subspace(Field field, std::size_t n) : basis_(field, 0, n) {}

template <FieldElement K>
Subspace<K> Subspace<K>::full(Field field, std::size_t n) {
  return Subspace(Matrix<K>::identity(field, n));
}

template <FieldElement K>
Subspace<K> Subspace<K>::span(const Matrix<K>& rows) {
  return Subspace(rref(rows).form);
}

template <FieldElement K>
Subspace<K> Subspace<K>::from_ints(Field field, std::size_t n,
                                   std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  Matrix<K> m(field, 0, n);
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorCode::kInvalidArgument, "basis row has wrong length");
    std::vector<K> v;
    for (auto e : r) v.emplace_back(e, field);
    m.append_row(v);
  }
  return span(m);
}

template <FieldElement K>
Subspace<K> Subspace<K>::coordinate(Field field, std::size_t n, std::initializer_list<std::size_t> indices) {
  Matrix<K> m(field, 0, n);
  std::vector<K> v(n, K(0, field));
  for (auto i : indices) {
    std::fill(v.begin(), v.end(), K(0, field));
    v.at(i) = K(1, field);
    m.append_row(v);
  }
  return span(m);
}

template <FieldElement K>
bool Subspace<K>::contains(std::span<const K> v) const {
  if (v.size() != ambient()) throw Error(ErrorCode::kMismatch, "vector length differs from ambient dimension");
  // reduce v against the RREF basis; each row's pivot is its first nonzero entry
  std::vector<K> r(v.begin(), v.end());
  std::size_t p = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    while (basis_(i, p).is_zero()) ++p;
    if (r[p].is_zero()) continue;
    const K f = r[p];
    for (std::size_t j = p; j < ambient(); ++j) r[j] -= f * basis_(i, j);
  }
  for (const auto& e : r)
    if (!e.is_zero()) return false;
  return true;
}

template <FieldElement K>
bool Subspace<K>::contains(const Subspace& other) const {
  require_compatible(*this, other);
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

template <FieldElement K>
int Subspace<K>::compare(const Subspace& other) const {
  if (ambient() != other.ambient()) return ambient() < other.ambient() ? -1 : 1;
  if (dim() != other.dim()) return dim() < other.dim() ? -1 : 1;
  const auto a = basis_.entries(), b = other.basis_.entries();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

template <FieldElement K>
void require_compatible(const Subspace<K>& x, const Subspace<K>& y) {
  if (x.ambient() != y.ambient() || !(x.field() == y.field())) {
    throw Error(ErrorCode::kMismatch, "subspaces live in different ambient spaces (" + x.field().name() + "^" +
                                          std::to_string(x.ambient()) + " vs " + y.field().name() + "^" +
                                          std::to_string(y.ambient()) + ")");
  }
}

template <FieldElement K>
Subspace<K> meet(const Subspace<K>& x, const Subspace<K>& y) {
  require_compatible(x, y);
  if (x.is_full()) return y;
  if (y.is_full()) return x;
  return Subspace<K>::span(kernel(x.annihilator().vstack(y.annihilator())));
}

template <FieldElement K>
Subspace<K> join(const Subspace<K>& x, const Subspace<K>& y) {
  require_compatible(x, y);
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  return Subspace<K>::span(x.basis().vstack(y.basis()));
}

template <FieldElement K>
bool is_transversal(const Subspace<K>& x, const Subspace<K>& a) {
  require_compatible(x, a);
  if (x.dim() + a.dim() != x.ambient()) return false;
  return rank(x.basis().vstack(a.basis())) == x.ambient();
}

template <FieldElement K>
Matrix<K> projector(const Subspace<K>& x, const Subspace<K>& a) {
  if (!is_transversal(x, a)) throw Error(ErrorCode::kDomain, "projector: image and kernel are not transversal");
  const std::size_t n = x.ambient();
  // columns of s: basis of x, then basis of a
  const Matrix<K> s = x.basis().vstack(a.basis()).transpose();
  Matrix<K> d(x.field(), n, n);
  for (std::size_t i = 0; i < x.dim(); ++i) d(i, i) = K(1, x.field());
  return s * d * *inverse(s);
}

template <FieldElement K>
Subspace<K> find_complement(const Subspace<K>& a) {
  const Field f = a.field();
  const std::size_t n = a.ambient();
  Matrix<K> s(f, 0, n);
  Subspace<K> sum = a;
  std::vector<K> e(n, K(0, f));
  for (std::size_t i = 0; i < n && !sum.is_full(); ++i) {
    std::fill(e.begin(), e.end(), K(0, f));
    e[i] = K(1, f);
    if (sum.contains(std::span<const K>(e))) continue;
    s.append_row(e);
    sum = Subspace<K>::span(sum.basis().vstack(Matrix<K>::from_rows(f, n, {e})));
  }
  return Subspace<K>::span(s);
}

template <FieldElement K>
std::optional<Subspace<K>> common_complement(const Subspace<K>& a, const Subspace<K>& b) {
  require_compatible(a, b);
  if (a.dim() != b.dim()) return std::nullopt;
  const Field f = a.field();
  const std::size_t n = a.ambient();
  auto unit = [&](std::size_t i) {
    std::vector<K> e(n, K(0, f));
    e[i] = K(1, f);
    return e;
  };
  Matrix<K> s(f, 0, n);
  Subspace<K> as = a, bs = b;
  auto add = [&](const std::vector<K>& v) {
    const auto row = Matrix<K>::from_rows(f, n, {v});
    s.append_row(v);
    as = Subspace<K>::span(as.basis().vstack(row));
    bs = Subspace<K>::span(bs.basis().vstack(row));
  };
  while (!as.is_full()) {
    bool added = false;
    for (std::size_t i = 0; i < n && !added; ++i) {
      const auto e = unit(i);
      if (!as.contains(std::span<const K>(e)) && !bs.contains(std::span<const K>(e))) {
        add(e);
        added = true;
      }
    }
    if (added) continue;
    // every e_i lies in a+s or in b+s; mix one from each side
    std::optional<std::vector<K>> u, w;
    for (std::size_t i = 0; i < n; ++i) {
      const auto e = unit(i);
      if (!u && !bs.contains(std::span<const K>(e))) u = e;
      if (!w && !as.contains(std::span<const K>(e))) w = e;
    }
    std::vector<K> v(n, K(0, f));
    for (std::size_t j = 0; j < n; ++j) v[j] = (*u)[j] + (*w)[j];
    add(v);
  }
  return Subspace<K>::span(s);
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  // [n k]_q = prod_{i<k} (q^{n-i} - 1) / (q^{i+1} - 1), computed as exact running quotients
  auto pw = [q](std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= q;
    return r;
  };
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < k; ++i) {
    result = result * (pw(n - i) - 1) / (pw(i + 1) - 1);
  }
  return result;
}

namespace {

void check_guard(Field field, std::size_t n) {
  if (!field.is_prime()) throw Error(ErrorCode::kInvalidArgument, "enumeration needs a finite field");
  long double size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= field.p;
  if (size > static_cast<long double>(1u << 20)) {
    throw Error(ErrorCode::kGuard, "enumeration guard: p^n = " + std::to_string(field.p) + "^" +
                                       std::to_string(n) + " exceeds 2^20");
  }
}

}  // namespace

std::vector<Subspace<Fp>> enumerate_subspaces(Field field, std::size_t n, std::size_t k) {
  check_guard(field, n);
  std::vector<Subspace<Fp>> out;
  if (k > n) return out;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    // free positions: (row i, column j > piv[i]) with j not a pivot
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = piv[i] + 1; j < n; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end()) free.emplace_back(i, j);
    std::vector<std::uint32_t> digits(free.size(), 0);
    bool more = true;
    while (more) {
      Matrix<Fp> m(field, k, n);
      for (std::size_t i = 0; i < k; ++i) m(i, piv[i]) = Fp(1, field);
      for (std::size_t t = 0; t < free.size(); ++t) m(free[t].first, free[t].second) = Fp(digits[t], field);
      out.push_back(Subspace<Fp>::span(m));
      // odometer, last position fastest
      more = false;
      for (std::size_t t = free.size(); t-- > 0;) {
        if (++digits[t] < field.p) {
          more = true;
          break;
        }
        digits[t] = 0;
      }
    }
    // next pivot combination
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return out;
}

std::vector<Subspace<Fp>> enumerate_subspaces(Field field, std::size_t n) {
  check_guard(field, n);
  std::vector<Subspace<Fp>> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto part = enumerate_subspaces(field, n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

template <FieldElement K>
bool same_component(const Subspace<K>& x, const Subspace<K>& y) {
  require_compatible(x, y);
  return x.dim() == y.dim();
}

template <FieldElement K>
std::optional<std::array<Subspace<K>, 3>> transversal_triple(Field field, std::size_t n) {
  if (n % 2 != 0) return std::nullopt;
  const std::size_t h = n / 2;
  Matrix<K> first(field, h, n), diag(field, h, n), second(field, h, n);
  for (std::size_t i = 0; i < h; ++i) {
    first(i, i) = K(1, field);
    second(i, h + i) = K(1, field);
    diag(i, i) = K(1, field);
    diag(i, h + i) = K(1, field);
  }
  return std::array<Subspace<K>, 3>{Subspace<K>::span(first), Subspace<K>::span(diag), Subspace<K>::span(second)};
}

template <FieldElement K>
Subspace<K> image(const Matrix<K>& f, const Subspace<K>& x) {
  if (f.cols() != x.ambient()) throw Error(ErrorCode::kMismatch, "image: operator and subspace dimensions differ");
  if (x.is_zero()) return Subspace<K>::zero(f.field(), f.rows());
  return Subspace<K>::span(x.basis() * f.transpose());
}

template <FieldElement K>
Subspace<K> preimage(const Matrix<K>& f, const Subspace<K>& y) {
  if (f.rows() != y.ambient()) throw Error(ErrorCode::kMismatch, "preimage: operator and subspace dimensions differ");
  if (y.is_full()) return Subspace<K>::full(f.field(), f.cols());
  return Subspace<K>::span(kernel(y.annihilator() * f));
}

template <FieldElement K>
Subspace<K> image(const Matrix<K>& f) {
  return Subspace<K>::span(f.transpose());
}

template <FieldElement K>
Subspace<K> kernel_space(const Matrix<K>& f) {
  return Subspace<K>::span(kernel(f));
}

#define ASG_INSTANTIATE_SUBSPACE(K)                                                              \
  template class Subspace<K>;                                                                    \
  template void require_compatible(const Subspace<K>&, const Subspace<K>&);                      \
  template Subspace<K> meet(const Subspace<K>&, const Subspace<K>&);                             \
  template Subspace<K> join(const Subspace<K>&, const Subspace<K>&);                             \
  template bool is_transversal(const Subspace<K>&, const Subspace<K>&);                          \
  template Matrix<K> projector(const Subspace<K>&, const Subspace<K>&);                          \
  template Subspace<K> find_complement(const Subspace<K>&);                                      \
  template std::optional<Subspace<K>> common_complement(const Subspace<K>&, const Subspace<K>&); \
  template bool same_component(const Subspace<K>&, const Subspace<K>&);                          \
  template std::optional<std::array<Subspace<K>, 3>> transversal_triple<K>(Field, std::size_t);  \
  template Subspace<K> image(const Matrix<K>&, const Subspace<K>&);                              \
  template Subspace<K> preimage(const Matrix<K>&, const Subspace<K>&);                           \
  template Subspace<K> image(const Matrix<K>&);                                                  \
  template Subspace<K> kernel_space(const Matrix<K>&);

ASG_INSTANTIATE_SUBSPACE(Fp)
ASG_INSTANTIATE_SUBSPACE(Rational)

}  // namespace asg
