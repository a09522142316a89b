#include "assocgeom/torsor.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "assocgeom/text_format.hpp"

namespace asg {

template <FieldElement K>
TorsorContext<K>::TorsorContext(Subspace<K> a_, Subspace<K> b_) : a(std::move(a_)), b(std::move(b_)) {
  require_compatible(a, b);
}

template <FieldElement K>
bool TorsorContext<K>::contains(const Subspace<K>& x) const {
  return is_transversal(x, a) && is_transversal(x, b);
}

template <FieldElement K>
void TorsorContext<K>::require(const Subspace<K>& x, const char* what) const {
  require_compatible(x, a);
  if (!contains(x)) throw Error(ErrorCode::kDomain, std::string(what) + " is not transversal to both a and b");
}

template <FieldElement K>
GroupContext<K>::GroupContext(TorsorContext<K> c, Subspace<K> y) : ctx(std::move(c)), unit(std::move(y)) {
  ctx.require(unit, "unit");
}

template <FieldElement K>
Subspace<K> torsor_product(const TorsorContext<K>& ctx, const Subspace<K>& x, const Subspace<K>& y,
                           const Subspace<K>& z) {
  ctx.require(x, "x");
  ctx.require(y, "y");
  ctx.require(z, "z");
  return gamma_extended(Quintuple<K>{x, ctx.a, y, ctx.b, z});
}

template <FieldElement K>
Subspace<K> group_mul(const GroupContext<K>& g, const Subspace<K>& x, const Subspace<K>& z) {
  return torsor_product(g.ctx, x, g.unit, z);
}

template <FieldElement K>
Subspace<K> group_inv(const GroupContext<K>& g, const Subspace<K>& x) {
  return torsor_product(g.ctx, g.unit, x, g.unit);
}

namespace {

template <FieldElement K>
void require_in_ca(const Subspace<K>& a, const Subspace<K>& x, const char* what) {
  require_compatible(a, x);
  if (!is_transversal(x, a)) throw Error(ErrorCode::kDomain, std::string(what) + " is not transversal to a");
}

}  // namespace

template <FieldElement K>
Subspace<K> affine_add(const Subspace<K>& a, const Subspace<K>& x, const Subspace<K>& y, const Subspace<K>& z) {
  require_in_ca(a, x, "x");
  require_in_ca(a, y, "y");
  require_in_ca(a, z, "z");
  return gamma_extended(Quintuple<K>{x, a, y, a, z});
}

template <FieldElement K>
Subspace<K> affine_scale(const Subspace<K>& a, const K& r, const Subspace<K>& x, const Subspace<K>& y) {
  require_in_ca(a, x, "x");
  require_in_ca(a, y, "y");
  return pi_extended(r, x, a, y);
}

template <FieldElement K>
Subspace<K> affine_add_projector(const Subspace<K>& a, const Subspace<K>& x, const Subspace<K>& y,
                                 const Subspace<K>& z) {
  require_in_ca(a, x, "x");
  require_in_ca(a, y, "y");
  require_in_ca(a, z, "z");
  return image(projector(x, a) - projector(y, a) + projector(z, a));
}

template <FieldElement K>
Subspace<K> left_action(const GroupContext<K>& g, const Subspace<K>& x, const Subspace<K>& z) {
  g.ctx.require(x, "x");
  require_compatible(x, z);
  return gamma_extended(Quintuple<K>{x, g.ctx.a, g.unit, g.ctx.b, z});
}

template <FieldElement K>
Subspace<K> right_action(const GroupContext<K>& g, const Subspace<K>& x, const Subspace<K>& z) {
  g.ctx.require(z, "z");
  require_compatible(x, z);
  return gamma_extended(Quintuple<K>{x, g.ctx.a, g.unit, g.ctx.b, z});
}

std::vector<Subspace<Fp>> enumerate_torsor(const TorsorContext<Fp>& ctx) {
  const Field f = ctx.a.field();
  const std::size_t n = ctx.a.ambient();
  double size = 1;
  for (std::size_t i = 0; i < n; ++i) size *= f.p;
  if (size > 4096) throw Error(ErrorCode::kGuard, "torsor enumeration limited to p^n <= 4096");
  std::vector<Subspace<Fp>> out;
  if (ctx.a.dim() != ctx.b.dim()) return out;
  for (auto& x : enumerate_subspaces(f, n, n - ctx.a.dim()))
    if (ctx.contains(x)) out.push_back(std::move(x));
  std::sort(out.begin(), out.end());
  return out;
}

GroupTable group_table(const GroupContext<Fp>& g) {
  GroupTable t;
  t.elements = enumerate_torsor(g.ctx);
  const auto index = [&](const Subspace<Fp>& s) {
    const auto it = std::lower_bound(t.elements.begin(), t.elements.end(), s);
    if (it == t.elements.end() || !(*it == s)) throw Error(ErrorCode::kDomain, "group product left C_ab");
    return static_cast<std::size_t>(it - t.elements.begin());
  };
  t.unit = index(g.unit);
  t.mul.assign(t.elements.size(), std::vector<std::size_t>(t.elements.size()));
  for (std::size_t i = 0; i < t.elements.size(); ++i)
    for (std::size_t j = 0; j < t.elements.size(); ++j) t.mul[i][j] = index(group_mul(g, t.elements[i], t.elements[j]));
  return t;
}

bool is_cyclic(const GroupTable& t) {
  const std::size_t n = t.elements.size();
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t order = 1, power = g;
    while (power != t.unit && order <= n) {
      power = t.mul[power][g];
      ++order;
    }
    if (order == n) return true;
  }
  return false;
}

std::string format_group_table(const GroupTable& t) {
  std::ostringstream out;
  out << "elements " << t.elements.size() << "\nunit " << t.unit << "\n";
  for (std::size_t i = 0; i < t.elements.size(); ++i) out << "element " << i << " " << format_subspace_line(t.elements[i]) << "\n";
  out << "table\n";
  for (const auto& row : t.mul) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  return out.str();
}

template <FieldElement K>
PairCheckReport semitorsored_pair_check(const Subspace<K>& a, const Subspace<K>& b, Sampler<K>& sampler,
                                        std::size_t budget) {
  require_compatible(a, b);
  const bool linear = is_transversal(a, b);
  const auto G = [](const Subspace<K>& x, const Subspace<K>& y, const Subspace<K>& z, const Subspace<K>& a_,
                    const Subspace<K>& b_) { return gamma_extended(Quintuple<K>{x, a_, y, b_, z}); };
  PairCheckReport rep;
  // sign = +1: (xyz)^+ on U_a × U_b × U_a; sign = −1: (xyz)^- on U_b × U_a × U_b
  for (int sign : {+1, -1}) {
    const Subspace<K>& outer = sign > 0 ? a : b;  // the outer slots and the value live in U_outer
    const Subspace<K>& inner = sign > 0 ? b : a;
    const auto product = [&](const Subspace<K>& x, const Subspace<K>& y, const Subspace<K>& z) {
      return G(x, y, z, a, b);
    };
    for (std::size_t t = 0; t < budget; ++t) {
      std::array<Subspace<K>, 3> args{sampler.complement(outer), sampler.complement(inner), sampler.complement(outer)};
      const auto describe = [&] {
        return std::string(sign > 0 ? "(xyz)+" : "(xyz)-") + "\n[x]\n" + args[0].str() + "\n[y]\n" + args[1].str() +
               "\n[z]\n" + args[2].str() + "\n";
      };
      const auto value = product(args[0], args[1], args[2]);
      rep.closure.record(is_transversal(value, outer), describe);
      // affine in each slot separately
      for (int slot = 0; slot < 3; ++slot) {
        const Subspace<K>& space = slot == 1 ? inner : outer;
        const auto p = sampler.complement(space), q = sampler.complement(space), s = sampler.complement(space);
        const K r = sampler.scalar();
        auto with = [&](const Subspace<K>& v) {
          auto c = args;
          c[slot] = v;
          return product(c[0], c[1], c[2]);
        };
        const bool add_ok = with(affine_add(space, p, q, s)) == affine_add(outer, with(p), with(q), with(s));
        const bool scale_ok = with(affine_scale(space, r, p, q)) == affine_scale(outer, r, with(p), with(q));
        rep.affine.record(add_ok && scale_ok, describe);
        if (linear) {
          // origins: b ∈ U_a and a ∈ U_b; the product vanishes when one slot is at its origin
          const Subspace<K>& origin_in = slot == 1 ? (sign > 0 ? a : b) : (sign > 0 ? b : a);
          const Subspace<K>& origin_out = sign > 0 ? b : a;
          const bool zero_ok = with(origin_in) == origin_out;
          const bool additive = with(affine_add(space, p, origin_in, q)) == affine_add(outer, with(p), origin_out, with(q));
          const bool homogeneous = with(affine_scale(space, r, origin_in, p)) == affine_scale(outer, r, origin_out, with(p));
          rep.linear.record(zero_ok && additive && homogeneous, describe);
        }
      }
    }
  }
  return rep;
}

#define ASG_INSTANTIATE_TORSOR(K)                                                                                  \
  template struct TorsorContext<K>;                                                                                \
  template struct GroupContext<K>;                                                                                 \
  template Subspace<K> torsor_product(const TorsorContext<K>&, const Subspace<K>&, const Subspace<K>&,             \
                                      const Subspace<K>&);                                                         \
  template Subspace<K> group_mul(const GroupContext<K>&, const Subspace<K>&, const Subspace<K>&);                  \
  template Subspace<K> group_inv(const GroupContext<K>&, const Subspace<K>&);                                      \
  template Subspace<K> affine_add(const Subspace<K>&, const Subspace<K>&, const Subspace<K>&, const Subspace<K>&); \
  template Subspace<K> affine_scale(const Subspace<K>&, const K&, const Subspace<K>&, const Subspace<K>&);         \
  template Subspace<K> affine_add_projector(const Subspace<K>&, const Subspace<K>&, const Subspace<K>&,            \
                                            const Subspace<K>&);                                                   \
  template Subspace<K> left_action(const GroupContext<K>&, const Subspace<K>&, const Subspace<K>&);                \
  template Subspace<K> right_action(const GroupContext<K>&, const Subspace<K>&, const Subspace<K>&);               \
  template PairCheckReport semitorsored_pair_check(const Subspace<K>&, const Subspace<K>&, Sampler<K>&, std::size_t);

ASG_INSTANTIATE_TORSOR(Fp)
ASG_INSTANTIATE_TORSOR(Rational)

}  // namespace asg
