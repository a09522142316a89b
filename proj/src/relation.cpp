#include "assocgeom/relation.hpp"

#include <array>

#include "assocgeom/text_format.hpp"

namespace asg {

template <FieldElement K>
Relation<K>::Relation(std::size_t src, std::size_t dst, Subspace<K> graph)
    : src_(src), dst_(dst), graph_(std::move(graph)) {
  if (graph_.ambient() != src + dst) {
    throw Error(ErrorCode::kMismatch, "relation graph has ambient " + std::to_string(graph_.ambient()) +
                                          ", expected " + std::to_string(src + dst));
  }
}

template <FieldElement K>
Relation<K> Relation<K>::identity(Field field, std::size_t n) {
  return of_map(Matrix<K>::identity(field, n));
}

template <FieldElement K>
Relation<K> Relation<K>::of_map(const Matrix<K>& f) {
  // rows (e_j, f e_j)
  const auto rows = Matrix<K>::identity(f.field(), f.cols()).hstack(f.transpose());
  return Relation(f.cols(), f.rows(), Subspace<K>::span(rows));
}

template <FieldElement K>
Relation<K> compose(const Relation<K>& s, const Relation<K>& r) {
  if (r.dst_dim() != s.src_dim()) throw Error(ErrorCode::kMismatch, "compose: middle dimensions differ");
  if (!(r.field() == s.field())) throw Error(ErrorCode::kMismatch, "compose: fields differ");
  const Field f = r.field();
  const std::size_t n = r.src_dim(), m = r.dst_dim(), p = s.dst_dim();
  // a zero graph still holds (0, 0); a single zero row stands in for its empty basis
  const auto padded = [f](const Matrix<K>& b) { return b.rows() ? b : Matrix<K>(f, 1, b.cols()); };
  const auto rb = padded(r.graph().basis());
  const auto sb = padded(s.graph().basis());
  const std::size_t dr = rb.rows(), ds = sb.rows();
  // coefficient vectors (c_r, c_s) with c_r·R_mid = c_s·S_mid
  const Matrix<K> system = rb.col_block(n, m).transpose().hstack(-sb.col_block(0, m).transpose());
  const Matrix<K> coeffs = m == 0 ? Matrix<K>::identity(f, dr + ds) : kernel(system);
  if (coeffs.rows() == 0) return Relation<K>(n, p, Subspace<K>::zero(f, n + p));
  const auto left = coeffs.col_block(0, dr) * rb.col_block(0, n);
  const auto right = coeffs.col_block(dr, ds) * sb.col_block(m, p);
  return Relation<K>(n, p, Subspace<K>::span(left.hstack(right)));
}

template <FieldElement K>
Relation<K> reverse(const Relation<K>& r) {
  const auto& b = r.graph().basis();
  const std::size_t n = r.src_dim(), m = r.dst_dim();
  if (b.rows() == 0) return Relation<K>(m, n, Subspace<K>::zero(r.field(), n + m));
  return Relation<K>(m, n, Subspace<K>::span(b.col_block(n, m).hstack(b.col_block(0, n))));
}

template <FieldElement K>
Relation<K> relation_semitorsor(const Relation<K>& x, const Relation<K>& y, const Relation<K>& z) {
  return compose(z, compose(reverse(y), x));
}

template <FieldElement K>
Subspace<K> pushforward(const Relation<K>& r, const Subspace<K>& x) {
  if (x.ambient() != r.src_dim()) throw Error(ErrorCode::kMismatch, "pushforward: subspace is not in the source");
  // x as a relation from F^0
  return compose(r, Relation<K>(0, x.ambient(), x)).graph();
}

template <FieldElement K>
Subspace<K> pullback(const Relation<K>& r, const Subspace<K>& y) {
  return pushforward(reverse(r), y);
}

template <FieldElement K>
Relation<K> left_mult_relation(const Subspace<K>& x, const Subspace<K>& a, const Subspace<K>& y,
                               const Subspace<K>& b) {
  require_compatible(x, a);
  require_compatible(x, y);
  require_compatible(x, b);
  const Field f = x.field();
  const std::size_t n = x.ambient(), d = x.dim();
  // unknowns ζ | ω | ξ-coefficients; constraints ω+ζ ∈ a, ω+ζ+ξ ∈ y, ω+ξ ∈ b
  struct Row {
    const Subspace<K>* target;
    bool zeta, xi;
  };
  const std::array<Row, 3> rows{Row{&a, true, false}, Row{&y, true, true}, Row{&b, false, true}};
  Matrix<K> system(f, 0, 2 * n + d);
  for (const auto& row : rows) {
    const auto ann = row.target->annihilator();
    if (ann.rows() == 0) continue;
    Matrix<K> block(f, ann.rows(), 2 * n + d);
    const auto xi_part = ann * x.basis().transpose();
    for (std::size_t r = 0; r < ann.rows(); ++r) {
      for (std::size_t j = 0; j < n; ++j) {
        if (row.zeta) block(r, j) = ann(r, j);
        block(r, n + j) = ann(r, j);
      }
      if (row.xi)
        for (std::size_t i = 0; i < d; ++i) block(r, 2 * n + i) = xi_part(r, i);
    }
    system = system.vstack(block);
  }
  if (system.rows() == 0) return Relation<K>(n, n, Subspace<K>::full(f, 2 * n));
  const auto sol = kernel(system);
  if (sol.rows() == 0) return Relation<K>(n, n, Subspace<K>::zero(f, 2 * n));
  return Relation<K>(n, n, Subspace<K>::span(sol.col_block(0, 2 * n)));
}

template <FieldElement K>
Relation<K> relation_from_blocks(const Subspace<K>& graph, std::size_t n) {
  if (n > graph.ambient()) throw Error(ErrorCode::kMismatch, "relation source larger than ambient");
  return Relation<K>(n, graph.ambient() - n, graph);
}

namespace {

template <FieldElement K>
std::array<bool, 5> pulled_slots(StructuralSlots s) {
  switch (s) {
    case StructuralSlots::kAB: return {false, true, false, true, false};
    case StructuralSlots::kYB: return {false, false, true, true, false};
    case StructuralSlots::kXZ: return {true, false, false, false, true};
  }
  return {};
}

template <FieldElement K>
std::string describe_case(const std::array<Subspace<K>, 5>& here, const std::array<Subspace<K>, 5>& there,
                          const std::array<bool, 5>& pulled) {
  static const char* names[5] = {"x", "a", "y", "b", "z"};
  std::string out;
  for (int i = 0; i < 5; ++i) {
    out += pulled[i] ? std::string("[") + names[i] + "']\n" : std::string("[") + names[i] + "]\n";
    out += format_subspace(pulled[i] ? there[i] : here[i]);
  }
  return out;
}

// One direction: f(Γ(slots from 𝒳, g(slots from 𝒳′))) = Γ′(f(slots from 𝒳), slots from 𝒳′).
template <FieldElement K>
bool one_direction(const SubspaceMap<K>& f, const SubspaceMap<K>& g, const std::array<Subspace<K>, 5>& here,
                   const std::array<Subspace<K>, 5>& there, const std::array<bool, 5>& pulled) {
  std::array<Subspace<K>, 5> src, dst;
  for (int i = 0; i < 5; ++i) {
    src[i] = pulled[i] ? g(there[i]) : here[i];
    dst[i] = pulled[i] ? there[i] : f(here[i]);
  }
  const auto lhs = f(gamma_extended(Quintuple<K>{src[0], src[1], src[2], src[3], src[4]}));
  const auto rhs = gamma_extended(Quintuple<K>{dst[0], dst[1], dst[2], dst[3], dst[4]});
  return lhs == rhs;
}

}  // namespace

template <FieldElement K>
CheckResult check_structural_pair(const SubspaceMap<K>& f, const SubspaceMap<K>& g, std::size_t n,
                                  std::size_t n_prime, Sampler<K>& sampler, std::size_t budget,
                                  StructuralSlots slots) {
  const auto pulled = pulled_slots<K>(slots);
  CheckResult result;
  for (std::size_t t = 0; t < budget; ++t) {
    // samples mix fresh subspaces with images under f and g so that degenerate cases occur
    std::vector<Subspace<K>> pool, pool_prime;
    std::array<Subspace<K>, 5> here, there;
    for (int i = 0; i < 5; ++i) {
      here[i] = sampler.mixed(n, pool);
      pool.push_back(here[i]);
    }
    for (int i = 0; i < 5; ++i) pool_prime.push_back(f(here[i]));
    for (int i = 0; i < 5; ++i) {
      there[i] = sampler.coin(3) ? pool_prime[sampler.below(5)] : sampler.mixed(n_prime, {});
    }
    result.record(one_direction(f, g, here, there, pulled),
                  [&] { return "direction f\n" + describe_case(here, there, pulled); });
    // mirror: roles of the two geometries exchanged
    std::array<Subspace<K>, 5> here_m, there_m;
    for (int i = 0; i < 5; ++i) {
      here_m[i] = there[i];
      there_m[i] = here[i];
    }
    result.record(one_direction(g, f, here_m, there_m, pulled),
                  [&] { return "direction g\n" + describe_case(here_m, there_m, pulled); });
  }
  return result;
}

#define ASG_INSTANTIATE_RELATION(K)                                                                             \
  template class Relation<K>;                                                                                   \
  template Relation<K> compose(const Relation<K>&, const Relation<K>&);                                         \
  template Relation<K> reverse(const Relation<K>&);                                                             \
  template Relation<K> relation_semitorsor(const Relation<K>&, const Relation<K>&, const Relation<K>&);         \
  template Subspace<K> pushforward(const Relation<K>&, const Subspace<K>&);                                     \
  template Subspace<K> pullback(const Relation<K>&, const Subspace<K>&);                                        \
  template Relation<K> left_mult_relation(const Subspace<K>&, const Subspace<K>&, const Subspace<K>&,           \
                                          const Subspace<K>&);                                                  \
  template Relation<K> relation_from_blocks(const Subspace<K>&, std::size_t);                                   \
  template CheckResult check_structural_pair(const SubspaceMap<K>&, const SubspaceMap<K>&, std::size_t,         \
                                             std::size_t, Sampler<K>&, std::size_t, StructuralSlots);

ASG_INSTANTIATE_RELATION(Fp)
ASG_INSTANTIATE_RELATION(Rational)

}  // namespace asg
