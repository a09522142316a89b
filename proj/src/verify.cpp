#include "assocgeom/verify.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "assocgeom/axioms.hpp"
#include "assocgeom/pairs.hpp"
#include "assocgeom/relation.hpp"
#include "assocgeom/text_format.hpp"
#include "assocgeom/torsor.hpp"

namespace asg {

namespace {

constexpr std::size_t kExhaustiveLimit = std::size_t{1} << 19;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (const char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return splitmix(seed ^ h);
}

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > (std::size_t{1} << 40) / std::max<std::size_t>(base, 1)) return std::size_t{1} << 40;
    r *= base;
  }
  return r;
}

std::size_t grassmannian_size(Field f, std::size_t n) {
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += gaussian_binomial(n, k, f.p);
  return total;
}

bool finite_geometry_fits(Field f, std::size_t n) {
  return f.is_prime() && power(grassmannian_size(f, n), 7) <= (std::size_t{1} << 28);
}

template <FieldElement K>
using S = Subspace<K>;
template <FieldElement K>
using Tuple = std::vector<S<K>>;

template <FieldElement K>
S<K> G(const S<K>& x, const S<K>& a, const S<K>& y, const S<K>& b, const S<K>& z) {
  return gamma_extended(Quintuple<K>{x, a, y, b, z});
}

template <FieldElement K>
std::string labeled(std::initializer_list<std::pair<const char*, const S<K>*>> named) {
  std::string out;
  for (const auto& [name, s] : named) out += std::string("[") + name + "]\n" + format_subspace(*s);
  return out;
}

template <FieldElement K>
std::string labeled_tuple(const char* names, const Tuple<K>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += std::string("[") + names[i] + "]\n" + format_subspace(v[i]);
  return out;
}

template <FieldElement K>
std::string quintuple_text(const S<K>& x, const S<K>& a, const S<K>& y, const S<K>& b, const S<K>& z) {
  return format_quintuple(Quintuple<K>{x, a, y, b, z});
}

template <FieldElement K>
S<K> coordinates_span(Field f, std::size_t n, std::size_t from, std::size_t count) {
  Matrix<K> rows(f, count, n);
  for (std::size_t i = 0; i < count; ++i) rows(i, from + i) = K(1, f);
  return count == 0 ? S<K>::zero(f, n) : S<K>::span(rows);
}

template <FieldElement K>
class Runner {
 public:
  Runner(const RunConfig& cfg, std::vector<CheckLine>& out) : cfg_(cfg), f_(cfg.field), n_(cfg.n), out_(out) {}

  void run(const std::string& suite) {
    suite_ = suite;
    if (suite == "gamma") gamma_suite();
    else if (suite == "semitorsor") semitorsor_suite();
    else if (suite == "klein") klein_suite();
    else if (suite == "lattice-diagonals") lattice_suite();
    else if (suite == "torsor") torsor_suite();
    else if (suite == "affine") affine_suite();
    else if (suite == "structural") structural_suite();
    else if (suite == "dilation") dilation_suite();
    else if (suite == "pair") pair_suite();
    else if (suite == "axioms") axioms_suite();
  }

 private:
  static constexpr bool kFinite = std::is_same_v<K, Fp>;

  Sampler<K> sampler(std::string_view check) const {
    return Sampler<K>(f_, derive_seed(cfg_.seed, suite_ + "/" + std::string(check)));
  }

  void add(std::string name, std::string mode, CheckResult r) {
    out_.push_back(CheckLine{suite_, std::move(name), std::move(mode), std::move(r)});
  }
  void skip(std::string name, const std::string& reason) { add(std::move(name), "skipped: " + reason, {}); }

  S<K> full() const { return S<K>::full(f_, n_); }
  S<K> zero() const { return S<K>::zero(f_, n_); }

  // all points of the geometry, when the user asked for exhaustion and it is finite
  const std::vector<S<K>>* points() {
    if constexpr (kFinite) {
      if (!cfg_.exhaustive) return nullptr;
      if (!points_) {
        if (power(f_.p, n_) > (std::size_t{1} << 12)) return nullptr;
        auto pts = enumerate_subspaces(f_, n_);
        std::sort(pts.begin(), pts.end());
        points_ = std::move(pts);
      }
      return &*points_;
    } else {
      return nullptr;
    }
  }

  const FiniteGeometry* geometry() {
    if constexpr (kFinite) {
      if (!cfg_.exhaustive || !finite_geometry_fits(f_, n_)) return nullptr;
      if (!geometry_) geometry_ = FiniteGeometry::grassmannian(f_, n_);
      return &*geometry_;
    } else {
      return nullptr;
    }
  }

  std::vector<K> scalars(Sampler<K>& s) const {
    std::vector<K> out;
    if constexpr (kFinite) {
      for (std::uint32_t r = 0; r < f_.p; ++r) out.push_back(K(r, f_));
    } else {
      for (const auto& [num, den] : {std::pair{0, 1}, {1, 1}, {2, 1}, {-1, 1}, {1, 2}, {-3, 4}, {5, 3}})
        out.push_back(K(num, f_) * K(den, f_).inv());
      out.push_back(s.scalar());
    }
    return out;
  }

  Tuple<K> pool(Sampler<K>& s, std::size_t k) const {
    Tuple<K> v;
    for (std::size_t i = 0; i < k; ++i) v.push_back(s.mixed(n_, v));
    return v;
  }

  // random subspace of c
  S<K> inside(Sampler<K>& s, const S<K>& c) const {
    if (c.dim() == 0) return c;
    const std::size_t k = s.below(c.dim() + 1);
    if (k == 0) return zero();
    return S<K>::span(s.matrix(k, c.dim()) * c.basis());
  }
  // y with y ∨ x = W
  S<K> spanning_with(Sampler<K>& s, const S<K>& x) const { return join(s.complement(x), s.subspace(n_)); }
  // y with y ∧ x = 0
  S<K> meeting_trivially(Sampler<K>& s, const S<K>& x) const { return inside(s, s.complement(x)); }

  // Runs body over every k-tuple of points when that is small enough, else over `budget` drawn tuples.
  // Returns the mode string.
  std::string quantify(std::size_t k, std::size_t budget, const std::function<Tuple<K>()>& draw,
                       const std::function<void(const Tuple<K>&)>& body) {
    const auto* pts = points();
    if (pts && power(pts->size(), k) <= kExhaustiveLimit) {
      std::vector<std::size_t> idx(k, 0);
      Tuple<K> v(k);
      for (;;) {
        for (std::size_t i = 0; i < k; ++i) v[i] = (*pts)[idx[i]];
        body(v);
        std::size_t i = k;
        while (i > 0 && ++idx[i - 1] == pts->size()) idx[--i] = 0;
        if (i == 0) break;
      }
      return "exhaustive";
    }
    for (std::size_t t = 0; t < budget; ++t) body(draw());
    return "sampled";
  }

  // ---- gamma: oracle, descriptions and operator coincidence
  void gamma_suite() {
    if constexpr (kFinite) {
      auto s = sampler("oracle");
      CheckResult r;
      const auto mode = quantify(
          5, cfg_.budget,
          [&] {
            const auto q = s.quintuple(n_);
            return Tuple<K>{q.x, q.a, q.y, q.b, q.z};
          },
          [&](const Tuple<K>& v) {
            const Quintuple<K> q{v[0], v[1], v[2], v[3], v[4]};
            r.record(gamma_bruteforce(q) == gamma_extended(q), [&] { return format_quintuple(q); });
          });
      add("extended = bruteforce", mode, r);
    } else {
      skip("extended = bruteforce", "enumeration needs a finite field");
    }
    {
      auto s = sampler("descriptions");
      CheckResult r;
      for (std::size_t t = 0; t < cfg_.budget; ++t) {
        const auto q = s.quintuple(n_);
        const auto g = gamma_extended(q);
        bool same = true;
        for (const auto d : kAllDescriptions) same = same && gamma_description(q, d) == g;
        r.record(same, [&] { return format_quintuple(q); });
      }
      add("two-witness descriptions agree", "sampled", r);
    }
    {
      auto s = sampler("coincidence");
      CheckResult r;
      for (std::size_t t = 0; t < cfg_.budget; ++t) {
        const auto q = s.domain_quintuple(n_);
        const auto d = domain_flags(q);
        if (!d.any()) continue;
        const auto g = gamma_extended(q);
        bool same = gamma_operator(q) == g;
        if (d.in_dl) same = same && gamma_operator(q, Branch::kLeft) == g;
        if (d.in_dr) same = same && gamma_operator(q, Branch::kRight) == g;
        if (d.in_dm) same = same && gamma_operator(q, Branch::kMiddle) == g;
        r.record(same, [&] { return format_quintuple(q); });
      }
      add("operator = extended on D_L, D_R, D_M", "sampled", r);
    }
  }

  // ---- semitorsor
  void semitorsor_suite() {
    if (const auto* g = geometry()) {
      add("gamma para-associativity", "exhaustive", check_semitorsor_law(*g));
    } else {
      auto s = sampler("gamma");
      CheckResult r;
      for (std::size_t t = 0; t < cfg_.budget; ++t) {
        const auto v = pool(s, 7);
        const auto &x = v[0], &a = v[1], &y = v[2], &b = v[3], &z = v[4], &u = v[5], &w = v[6];
        const auto left = G(G(x, a, y, b, z), a, u, b, w);
        const auto middle = G(x, a, G(u, a, z, b, y), b, w);
        const auto right = G(x, a, y, b, G(z, a, u, b, w));
        r.record(left == middle && middle == right, [&] { return labeled_tuple("xaybzuv", v); });
      }
      add("gamma para-associativity", "sampled", r);
    }
    const std::size_t k = std::max<std::size_t>(1, n_ / 2), m = std::max<std::size_t>(1, n_ - n_ / 2);
    {
      auto s = sampler("relations");
      CheckResult r;
      const auto rel = [&] { return Relation<K>(k, m, s.subspace(k + m)); };
      for (std::size_t t = 0; t < cfg_.budget; ++t) {
        const auto x = rel(), y = rel(), z = rel(), u = rel(), v = rel();
        const auto left = relation_semitorsor(relation_semitorsor(x, y, z), u, v);
        const auto middle = relation_semitorsor(x, relation_semitorsor(u, z, y), v);
        const auto right = relation_semitorsor(x, y, relation_semitorsor(z, u, v));
        r.record(left == middle && middle == right, [&] {
          return format_relation(x) + format_relation(y) + format_relation(z) + format_relation(u) + format_relation(v);
        });
      }
      add("relation semitorsor para-associativity", "sampled", r);
    }
    {
      // relations k → m are subspaces of F^k ⊕ F^m; z∘y⁻¹∘x = Γ(x, F^k, y, F^m, z)
      auto s = sampler("split");
      CheckResult r;
      const std::size_t total = k + m;
      const auto a = coordinates_span<K>(f_, total, 0, k), b = coordinates_span<K>(f_, total, k, m);
      for (std::size_t t = 0; t < cfg_.budget; ++t) {
        const Relation<K> x(k, m, s.subspace(total)), y(k, m, s.subspace(total)), z(k, m, s.subspace(total));
        r.record(relation_semitorsor(x, y, z).graph() == G(x.graph(), a, y.graph(), b, z.graph()),
                 [&] { return quintuple_text(x.graph(), a, y.graph(), b, z.graph()); });
      }
      add("z y^-1 x = gamma on split space", "sampled", r);
    }
  }

  // ---- klein
  void klein_suite() {
    if (const auto* g = geometry()) {
      const auto [reversal, swap] = check_klein_laws(*g);
      add("reversal", "exhaustive", reversal);
      add("swap", "exhaustive", swap);
      return;
    }
    auto s = sampler("klein");
    CheckResult reversal, swap;
    for (std::size_t t = 0; t < cfg_.budget; ++t) {
      const auto q = s.quintuple(n_);
      const auto v = gamma_extended(q);
      reversal.record(v == G(q.z, q.b, q.y, q.a, q.x), [&] { return format_quintuple(q); });
      swap.record(v == G(q.a, q.x, q.y, q.z, q.b), [&] { return format_quintuple(q); });
    }
    add("reversal", "sampled", reversal);
    add("swap", "sampled", swap);
  }

  // ---- lattice-diagonals
  struct LatticeLaw {
    const char* name;
    const char* vars;  // names of the free variables
    std::function<Quintuple<K>(const Tuple<K>&)> build;
    std::function<std::vector<S<K>>(const Tuple<K>&)> expected;
    std::function<bool(const Tuple<K>&)> pre;           // empty: always
    std::function<Tuple<K>(Sampler<K>&)> draw;          // empty: pooled draw
  };

  void lattice_suite() {
    const auto W = full(), O = zero();
    using V = const Tuple<K>&;
    const auto M = [](const S<K>& p, const S<K>& q) { return meet(p, q); };
    const auto J = [](const S<K>& p, const S<K>& q) { return join(p, q); };
    std::vector<LatticeLaw> laws = {
        {"x=y", "xabz", [](V v) { return Quintuple<K>{v[0], v[1], v[0], v[2], v[3]}; },
         [&](V v) { return std::vector{M(J(v[3], M(v[0], v[1])), J(v[2], v[0]))}; }, {}, {}},
        {"x=y=z", "xab", [](V v) { return Quintuple<K>{v[0], v[1], v[0], v[2], v[0]}; },
         [](V v) { return std::vector{v[0]}; }, {}, {}},
        {"x=y=a", "xbz", [](V v) { return Quintuple<K>{v[0], v[0], v[0], v[1], v[2]}; },
         [&](V v) { return std::vector{M(J(v[2], v[0]), J(v[1], v[0]))}; }, {}, {}},
        {"x=y=a, b=z", "xz", [](V v) { return Quintuple<K>{v[0], v[0], v[0], v[1], v[1]}; },
         [&](V v) { return std::vector{J(v[1], v[0])}; }, {}, {}},
        {"x=y=b", "xaz", [](V v) { return Quintuple<K>{v[0], v[1], v[0], v[0], v[2]}; },
         [&](V v) { return std::vector{M(J(v[2], M(v[0], v[1])), v[0])}; }, {}, {}},
        {"x=y=b, a=z", "xa", [](V v) { return Quintuple<K>{v[0], v[1], v[0], v[0], v[1]}; },
         [&](V v) { return std::vector{M(v[1], v[0])}; }, {}, {}},
        {"x=y, a=z", "xab", [](V v) { return Quintuple<K>{v[0], v[1], v[0], v[2], v[1]}; },
         [&](V v) { return std::vector{M(v[1], J(v[2], v[0]))}; }, {}, {}},
        {"x=y, a=b", "xaz", [](V v) { return Quintuple<K>{v[0], v[1], v[0], v[1], v[2]}; },
         [&](V v) { return std::vector{M(J(v[2], M(v[0], v[1])), J(v[0], v[1]))}; }, {}, {}},
        {"x=y, z=b", "xaz", [](V v) { return Quintuple<K>{v[0], v[1], v[0], v[2], v[2]}; },
         [&](V v) { return std::vector{J(v[2], M(v[0], v[1]))}; }, {}, {}},
        {"a=z", "xayb", [](V v) { return Quintuple<K>{v[0], v[1], v[2], v[3], v[1]}; },
         [&](V v) { return std::vector{M(v[1], J(v[3], M(v[0], J(v[2], v[1]))))}; }, {}, {}},
        {"a=z, x=b", "xay", [](V v) { return Quintuple<K>{v[0], v[1], v[2], v[0], v[1]}; },
         [&](V v) { return std::vector{M(v[1], v[0])}; }, {}, {}},
        {"b=z", "xayb", [](V v) { return Quintuple<K>{v[0], v[1], v[2], v[3], v[3]}; },
         [&](V v) { return std::vector{J(v[3], M(v[1], J(v[0], M(v[2], v[3]))))}; }, {}, {}},
        {"b=z, x=a", "ayb", [](V v) { return Quintuple<K>{v[0], v[0], v[1], v[2], v[2]}; },
         [&](V v) { return std::vector{J(v[2], v[0])}; }, {}, {}},
        {"a=b=z", "xay", [](V v) { return Quintuple<K>{v[0], v[1], v[2], v[1], v[1]}; },
         [](V v) { return std::vector{v[1]}; }, {}, {}},
        {"dual form of x=y", "xabz", [](V v) { return Quintuple<K>{v[0], v[1], v[0], v[2], v[3]}; },
         [&](V v) { return std::vector{J(M(v[3], J(v[0], v[2])), M(v[1], v[0]))}; }, {}, {}},
        {"modular law", "xaz", [](V v) { return Quintuple<K>{v[0], v[1], v[0], v[0], v[2]}; },
         [&](V v) { return std::vector{J(M(v[2], v[0]), M(v[1], v[0])), M(J(M(v[2], v[0]), v[1]), v[0])}; }, {}, {}},
        {"b+x=W, a^x=0 gives z", "xabz", [](V v) { return Quintuple<K>{v[0], v[1], v[0], v[2], v[3]}; },
         [](V v) { return std::vector{v[3]}; },
         [=](V v) { return J(v[2], v[0]) == W && M(v[1], v[0]) == O; },
         [this](Sampler<K>& s) {
           const auto x = s.subspace(n_);
           return Tuple<K>{x, meeting_trivially(s, x), spanning_with(s, x), s.subspace(n_)};
         }},
        {"a+y=W, b+x=W gives a", "xayb", [](V v) { return Quintuple<K>{v[0], v[1], v[2], v[3], v[1]}; },
         [](V v) { return std::vector{v[1]}; },
         [=](V v) { return J(v[1], v[2]) == W && J(v[3], v[0]) == W; },
         [this](Sampler<K>& s) {
           const auto x = s.subspace(n_), y = s.subspace(n_);
           return Tuple<K>{x, spanning_with(s, y), y, spanning_with(s, x)};
         }},
        {"x^a=0, y^b=0 gives b", "xayb", [](V v) { return Quintuple<K>{v[0], v[1], v[2], v[3], v[3]}; },
         [](V v) { return std::vector{v[3]}; },
         [=](V v) { return M(v[0], v[1]) == O && M(v[2], v[3]) == O; },
         [this](Sampler<K>& s) {
           const auto x = s.subspace(n_), y = s.subspace(n_);
           return Tuple<K>{x, meeting_trivially(s, x), y, meeting_trivially(s, y)};
         }},
    };
    for (const auto& law : laws) {
      auto s = sampler(law.name);
      const std::size_t k = std::string_view(law.vars).size();
      CheckResult r;
      const auto mode = quantify(
          k, cfg_.budget, [&] { return law.draw ? law.draw(s) : pool(s, k); },
          [&](const Tuple<K>& v) {
            if (law.pre && !law.pre(v)) return;
            const auto q = law.build(v);
            const auto value = gamma_extended(q);
            bool same = true;
            for (const auto& e : law.expected(v)) same = same && value == e;
            r.record(same, [&] { return format_quintuple(q); });
          });
      add(law.name, mode, r);
    }
  }

  // ---- torsor
  std::optional<TorsorContext<K>> axes_context() const {
    const std::size_t k = n_ / 2;
    if (k == 0) return std::nullopt;
    return TorsorContext<K>(coordinates_span<K>(f_, n_, 0, k), coordinates_span<K>(f_, n_, k, k));
  }

  void torsor_suite() {
    const auto ctx = axes_context();
    if (!ctx) {
      skip("laws on U_ab", "needs n >= 2");
    } else {
      bool done = false;
      if constexpr (kFinite) {
        if (cfg_.exhaustive && power(f_.p, n_) <= 4096) {
          const auto elements = enumerate_torsor(*ctx);
          if (power(elements.size(), 5) <= (std::size_t{1} << 22)) {
            const auto rep = check_ternary_laws<S<K>>(
                elements, [&](const S<K>& x, const S<K>& y, const S<K>& z) { return G(x, ctx->a, y, ctx->b, z); });
            add("closure of U_ab", "exhaustive", rep.closure);
            add("G1", "exhaustive", rep.g1);
            add("G2", "exhaustive", rep.g2);
            add("para-associativity", "exhaustive", rep.g3);
            add("Chasle relation", "exhaustive", rep.chasle);
            add("middle multiplications", "exhaustive", rep.middle_inverse);
            done = true;
          }
        }
      }
      if (!done) {
        auto s = sampler("laws");
        CheckResult closure, g1, g2;
        for (std::size_t t = 0; t < cfg_.budget; ++t) {
          const auto draw = [&] { return *s.common_complement_of(ctx->a, ctx->b); };
          const auto x = draw(), y = draw(), z = draw(), u = draw(), v = draw();
          const auto P = [&](const S<K>& p, const S<K>& q, const S<K>& w) { return G(p, ctx->a, q, ctx->b, w); };
          const auto describe = [&] { return labeled<K>({{"x", &x}, {"y", &y}, {"z", &z}, {"u", &u}, {"v", &v}}); };
          closure.record(ctx->contains(P(x, y, z)), describe);
          g1.record(P(x, y, P(z, u, v)) == P(P(x, y, z), u, v), describe);
          g2.record(P(x, x, y) == y && P(y, x, x) == y, describe);
        }
        add("closure of U_ab", "sampled", closure);
        add("G1", "sampled", g1);
        add("G2", "sampled", g2);
      }
    }
    if (const auto* g = geometry()) every_torsor(*g);
    if constexpr (kFinite) {
      const TorsorContext<Fp> plane(coordinates_span<Fp>(f_, 2, 0, 1), coordinates_span<Fp>(f_, 2, 1, 1));
      const auto elements = enumerate_torsor(plane);
      const GroupContext<Fp> group(plane, *std::find_if(elements.begin(), elements.end(), [&](const S<Fp>& e) {
        return e == S<Fp>::span(Matrix<Fp>::from_ints(f_, 1, 2, {1, 1}));
      }));
      const auto table = group_table(group);
      CheckResult r;
      r.record(table.elements.size() == f_.p - 1 && is_cyclic(table), [&] { return format_group_table(table); });
      add("group table of the axes in F^2 is cyclic of order p-1", "exhaustive", r);
    } else {
      skip("group table of the axes in F^2 is cyclic of order p-1", "needs a finite field");
    }
    {
      auto s = sampler("group");
      CheckResult axioms, actions;
      for (std::size_t t = 0; t < cfg_.budget; ++t) {
        const auto a = s.subspace(n_);
        const auto b = s.coin(3) ? a : s.subspace(n_, a.dim());
        const auto unit = s.common_complement_of(a, b);
        if (!unit) continue;
        const GroupContext<K> g(TorsorContext<K>(a, b), *unit);
        const auto x = *s.common_complement_of(a, b), z = *s.common_complement_of(a, b);
        const auto w = s.mixed(n_, {a, b, x, z});
        const auto describe = [&] {
          return labeled<K>({{"a", &a}, {"b", &b}, {"unit", &*unit}, {"x", &x}, {"z", &z}, {"w", &w}});
        };
        const auto xz = group_mul(g, x, z);
        axioms.record(group_mul(g, xz, w.dim() == x.dim() && g.ctx.contains(w) ? w : x) ==
                              group_mul(g, x, group_mul(g, z, w.dim() == x.dim() && g.ctx.contains(w) ? w : x)) &&
                          group_mul(g, *unit, x) == x && group_mul(g, x, *unit) == x &&
                          group_mul(g, x, group_inv(g, x)) == *unit && group_mul(g, group_inv(g, x), x) == *unit,
                      describe);
        // left and right actions commute and fix a and b
        actions.record(left_action(g, x, right_action(g, w, z)) == right_action(g, left_action(g, x, w), z) &&
                           left_action(g, x, a) == a && left_action(g, x, b) == b && right_action(g, a, z) == a &&
                           right_action(g, b, z) == b,
                       describe);
      }
      add("group axioms with unit y", "sampled", axioms);
      add("left and right actions", "sampled", actions);
    }
  }

  // G1, G2 and closure on U_ab for every pair of points a, b, by table lookup
  void every_torsor(const FiniteGeometry& g) {
    const std::size_t N = g.size();
    CheckResult closure, g1, g2;
    std::vector<std::size_t> c;
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = 0; b < N; ++b) {
        c.clear();
        for (std::size_t x = 0; x < N; ++x)
          if (g.transversal(x, a) && g.transversal(x, b)) c.push_back(x);
        const auto P = [&](std::size_t x, std::size_t y, std::size_t z) { return g.gamma(x, a, y, b, z); };
        for (const auto x : c)
          for (const auto y : c) {
            g2.record(P(x, x, y) == y && P(y, x, x) == y, [&] { return g.describe({{"a", a}, {"b", b}, {"x", x}, {"y", y}}); });
            for (const auto z : c) {
              const auto xyz = P(x, y, z);
              closure.record(g.transversal(xyz, a) && g.transversal(xyz, b),
                             [&] { return g.describe({{"a", a}, {"b", b}, {"x", x}, {"y", y}, {"z", z}}); });
              for (const auto u : c)
                for (const auto v : c)
                  g1.record(P(x, y, P(z, u, v)) == P(xyz, u, v), [&] {
                    return g.describe({{"a", a}, {"b", b}, {"x", x}, {"y", y}, {"z", z}, {"u", u}, {"v", v}});
                  });
            }
          }
      }
    add("closure of every U_ab", "exhaustive", closure);
    add("G1 on every U_ab", "exhaustive", g1);
    add("G2 on every U_ab", "exhaustive", g2);
  }

  // ---- affine
  void affine_suite() {
    auto s = sampler("affine");
    CheckResult agree, axioms;
    const auto sc = scalars(s);
    const auto one = K(1, f_);
    for (std::size_t t = 0; t < cfg_.budget; ++t) {
      const auto a = s.subspace(n_);
      const auto x = s.complement(a), y = s.complement(a), z = s.complement(a), o = s.complement(a);
      const auto describe = [&] { return labeled<K>({{"a", &a}, {"x", &x}, {"y", &y}, {"z", &z}, {"o", &o}}); };
      agree.record(affine_add(a, x, y, z) == affine_add_projector(a, x, y, z), describe);
      // vector space (C_a, o)
      const auto add_ = [&](const S<K>& p, const S<K>& q) { return affine_add(a, p, o, q); };
      const auto neg = [&](const S<K>& p) { return affine_add(a, o, p, o); };
      const auto scale = [&](const K& r, const S<K>& p) { return affine_scale(a, r, o, p); };
      const K r = sc[s.below(sc.size())], q = sc[s.below(sc.size())];
      bool ok = affine_add(a, x, y, z) == affine_add(a, z, y, x) && affine_add(a, x, x, y) == y &&
                affine_add(a, x, y, y) == x && affine_add(a, x, y, affine_add(a, z, o, y)) == affine_add(a, affine_add(a, x, y, z), o, y);
      ok = ok && add_(x, y) == add_(y, x) && add_(add_(x, y), z) == add_(x, add_(y, z)) && add_(o, x) == x &&
           add_(x, neg(x)) == o && affine_add(a, x, y, z) == add_(add_(x, neg(y)), z);
      ok = ok && is_transversal(affine_scale(a, r, x, y), a) &&
           affine_scale(a, r, x, y) == add_(scale(one - r, x), scale(r, y)) &&
           scale(r, scale(q, x)) == scale(r * q, x) && scale(r + q, x) == add_(scale(r, x), scale(q, x)) &&
           scale(r, add_(x, y)) == add_(scale(r, x), scale(r, y)) && scale(one, x) == x && scale(K(0, f_), x) == o;
      axioms.record(ok, [&] { return describe() + "# r = " + r.str() + ", s = " + q.str() + "\n"; });
    }
    add("gamma = projector formula", "sampled", agree);
    add("affine space axioms", "sampled", axioms);
    // chart: a = o⁻ (first m coordinates), x = {(Xv, v)}
    const std::size_t m = std::max<std::size_t>(1, n_ / 2), k = n_ - m;
    if (k == 0) {
      skip("chart: X - Y + Z and (1-r)X + rY", "needs n >= 2");
      return;
    }
    auto c = sampler("chart");
    CheckResult chart;
    const auto a = coordinates_span<K>(f_, n_, 0, m);
    for (std::size_t t = 0; t < cfg_.budget; ++t) {
      const auto X = c.matrix(m, k), Y = c.matrix(m, k), Z = c.matrix(m, k);
      const K r = c.scalar();
      const auto x = column_graph(X), y = column_graph(Y), z = column_graph(Z);
      chart.record(affine_add(a, x, y, z) == column_graph(X - Y + Z) &&
                       affine_scale(a, r, x, y) == column_graph((K(1, f_) - r) * X + r * Y),
                   [&] { return labeled<K>({{"a", &a}, {"x", &x}, {"y", &y}, {"z", &z}}) + "# r = " + r.str() + "\n"; });
    }
    add("chart: X - Y + Z and (1-r)X + rY", "sampled", chart);
  }

  // ---- structural
  void structural_suite() {
    const std::size_t cases = std::max<std::size_t>(1, cfg_.budget / 4);
    {
      auto s = sampler("relations");
      CheckResult r;
      for (std::size_t t = 0; t < cases; ++t) {
        const Relation<K> rel(n_, n_, s.subspace(2 * n_));
        const SubspaceMap<K> push = [rel](const S<K>& x) { return pushforward(rel, x); };
        const SubspaceMap<K> pull = [rel](const S<K>& y) { return pullback(rel, y); };
        auto one = check_structural_pair(push, pull, n_, n_, s, 1);
        if (one.witness) one.witness = format_relation(rel) + *one.witness;
        r += one;
      }
      add("(r_*, r^*) for relations F^n -> F^n", "sampled", r);
    }
    {
      auto s = sampler("partial maps");
      CheckResult l, m, rr;
      for (std::size_t t = 0; t < cases; ++t) {
        const auto q = s.quintuple(n_);
        const auto& [x, a, y, b, z] = q;
        const SubspaceMap<K> L = [=](const S<K>& w) { return G(x, a, y, b, w); };
        const SubspaceMap<K> Lt = [=](const S<K>& w) { return G(y, a, x, b, w); };
        const SubspaceMap<K> Mm = [=](const S<K>& w) { return G(x, a, w, b, z); };
        const SubspaceMap<K> Mt = [=](const S<K>& w) { return G(z, a, w, b, x); };
        const SubspaceMap<K> R = [=](const S<K>& w) { return G(w, a, y, b, z); };
        const SubspaceMap<K> Rt = [=](const S<K>& w) { return G(w, a, z, b, y); };
        const auto tag = [&](CheckResult c) {
          if (c.witness) c.witness = "# parameters\n" + format_quintuple(q) + *c.witness;
          return c;
        };
        l += tag(check_structural_pair(L, Lt, n_, n_, s, 1));
        m += tag(check_structural_pair(Mm, Mt, n_, n_, s, 1));
        rr += tag(check_structural_pair(R, Rt, n_, n_, s, 1));
      }
      add("(L_xayb, L_yaxb)", "sampled", l);
      add("(M_xabz, M_zabx)", "sampled", m);
      add("(R_aybz, R_azby)", "sampled", rr);
    }
    {
      auto s = sampler("self-distributivity");
      CheckResult left, right;
      for (std::size_t t = 0; t < cases; ++t) {
        const auto v = pool(s, 10);
        const auto &x = v[0], &a = v[1], &y = v[2], &b = v[3], &z = v[4], &u = v[5], &w = v[6], &p = v[7], &c = v[8],
                   &d = v[9];
        const auto describe = [&] { return labeled_tuple("xaybzuvwcd", v); };
        left.record(G(x, a, G(u, G(a, z, c, x, b), w, G(a, z, d, x, b), p), b, z) ==
                        G(G(x, a, u, b, z), c, G(x, a, w, b, z), d, G(x, a, p, b, z)),
                    describe);
        right.record(G(x, a, y, b, G(u, G(y, a, x, b, c), w, G(y, a, x, b, d), p)) ==
                         G(G(x, a, y, b, u), c, G(x, a, y, b, w), d, G(x, a, y, b, p)),
                     describe);
      }
      add("self-distributivity of M", "sampled", left);
      add("self-distributivity of L", "sampled", right);
    }
  }

  // ---- dilation
  void dilation_suite() {
    auto s = sampler("dilation");
    const auto sc = scalars(s);
    const K one(1, f_);
    const auto P = [](const K& r, const S<K>& x, const S<K>& a, const S<K>& z) { return pi_extended(r, x, a, z); };
    CheckResult symmetry, mult, diag, delta, inverse;
    const auto m1 = quantify(3, cfg_.budget, [&] { return pool(s, 3); }, [&](const Tuple<K>& v) {
      const auto &x = v[0], &a = v[1], &z = v[2];
      const auto describe = [&] { return labeled_tuple("xaz", v); };
      bool sym = true, dg = true, inv = true;
      for (const auto& r : sc) {
        sym = sym && P(r, x, a, z) == P(one - r, z, a, x);
        dg = dg && P(r, x, a, x) == x;
        if (!r.is_zero()) inv = inv && P(r, a, x, z) == P(r.inv(), x, a, z);
      }
      const auto base = meet(x, join(z, a));
      dg = dg && P(K(0, f_), x, a, z) == base && P(one, z, a, x) == base && G(x, a, a, x, z) == base;
      symmetry.record(sym, describe);
      diag.record(dg, describe);
      inverse.record(inv, describe);
    });
    const auto m2 = quantify(
        3, cfg_.budget,
        [&] {
          const auto a = s.subspace(n_);
          return Tuple<K>{s.complement(a), a, s.mixed(n_, {a})};
        },
        [&](const Tuple<K>& v) {
          const auto &x = v[0], &a = v[1], &y = v[2];
          if (!is_transversal(x, a)) return;
          const auto describe = [&] { return labeled_tuple("xay", v); };
          bool mu = true, de = true;
          for (const auto& r : sc) {
            de = de && P(r, x, a, y) == image(dilation_operator(r, x, a), y);
            for (const auto& q : sc) mu = mu && P(r, x, a, P(q, x, a, y)) == P(r * q, x, a, y);
          }
          mult.record(mu, describe);
          delta.record(de, describe);
        });
    add("symmetry", m1, symmetry);
    add("diagonal values", m1, diag);
    add("inverse scalar", m1, inverse);
    add("multiplicativity on x T a", m2, mult);
    add("delta operator agreement on x T a", m2, delta);
    dilation_structural(sc);
  }

  void dilation_structural(const std::vector<K>& sc) {
    const K one(1, f_);
    if constexpr (kFinite) {
      if (const auto* g = geometry()) {
        // pairs (λ^r_xa, λ^r_ax) and (μ^r_xz, μ^r_zx) as maps on all points, for r(1−r) ≠ 0
        const std::size_t N = g->size();
        CheckResult gamma_r, pi_r;
        PointMap f(N), h(N);
        for (std::size_t r = 0; r < f_.p; ++r) {
          if ((K(static_cast<std::int64_t>(r), f_) * (one - K(static_cast<std::int64_t>(r), f_))).is_zero()) continue;
          for (std::size_t x = 0; x < N; ++x)
            for (std::size_t a = 0; a < N; ++a)
              for (int family = 0; family < 2; ++family) {
                for (std::size_t w = 0; w < N; ++w) {
                  f[w] = static_cast<std::uint16_t>(family == 0 ? g->pi(r, x, a, w) : g->pi(r, x, w, a));
                  h[w] = static_cast<std::uint16_t>(family == 0 ? g->pi(r, a, x, w) : g->pi(r, a, w, x));
                }
                const auto describe = [&] {
                  return std::string(family == 0 ? "# lambda pair, r = " : "# mu pair, r = ") + std::to_string(r) +
                         "\n" + g->describe({{"x", x}, {family == 0 ? "a" : "z", a}});
                };
                gamma_r.record(structural_for_gamma(*g, f, h) && structural_for_gamma(*g, h, f), describe);
                pi_r.record(structural_for_pi(*g, f, h) && structural_for_pi(*g, h, f), describe);
              }
        }
        add("partial maps of Pi structural for gamma", "exhaustive", gamma_r);
        add("partial maps of Pi structural for Pi", "exhaustive", pi_r);
        return;
      }
    }
    auto s = sampler("dilation structural");
    CheckResult r;
    std::vector<K> good;
    for (const auto& q : sc)
      if (!(q * (one - q)).is_zero()) good.push_back(q);
    if (good.empty()) {
      skip("partial maps of Pi structural for gamma", "no scalar with r(1-r) invertible");
      return;
    }
    for (std::size_t t = 0; t < std::max<std::size_t>(1, cfg_.budget / 4); ++t) {
      const auto x = s.subspace(n_), a = s.mixed(n_, {x});
      const K q = good[s.below(good.size())];
      const SubspaceMap<K> lam = [=](const S<K>& w) { return pi_extended(q, x, a, w); };
      const SubspaceMap<K> lam_t = [=](const S<K>& w) { return pi_extended(q, a, x, w); };
      const SubspaceMap<K> mu = [=](const S<K>& w) { return pi_extended(q, x, w, a); };
      const SubspaceMap<K> mu_t = [=](const S<K>& w) { return pi_extended(q, a, w, x); };
      auto c = check_structural_pair(lam, lam_t, n_, n_, s, 1);
      c += check_structural_pair(mu, mu_t, n_, n_, s, 1);
      if (c.witness) c.witness = "# r = " + q.str() + "\n" + labeled<K>({{"x", &x}, {"a", &a}}) + *c.witness;
      r += c;
    }
    add("partial maps of Pi structural for gamma", "sampled", r);
  }

  // ---- pair
  void pair_suite() {
    const std::size_t cases = std::max<std::size_t>(1, cfg_.budget / 5);
    {
      auto s = sampler("hom laws");
      CheckResult r;
      r += check_pair_laws(hom_pair<K>(f_, 1, 2), s, cases);
      r += check_pair_laws(hom_pair<K>(f_, 2, 2), s, cases);
      add("Hom model para-associativity", "sampled", r);
    }
    if (n_ < 2) {
      skip("extracted pair", "needs n >= 2");
    } else {
      auto s = sampler("extraction");
      const auto o_minus = s.subspace(n_, n_ / 2);
      const BasePoint<K> bp(s.complement(o_minus), o_minus);
      const auto rep = check_extracted_pair(bp, s, cases);
      add("extracted products trilinear", "sampled", rep.trilinear);
      add("extracted pair para-associativity", "sampled", rep.para_associative);
      add("extracted products are XBZ and CYA", "sampled", rep.matrix_model);
      const auto model = extract_pair(bp);
      CheckResult hom;
      hom.record(model.constants == hom_pair<K>(f_, bp.dim_plus(), bp.dim_minus()).constants,
                 [&] { return labeled<K>({{"o+", &bp.o_plus()}, {"o-", &bp.o_minus()}}); });
      add("extract_pair = Hom model", "exhaustive", hom);
    }
    {
      auto s = sampler("semitorsored");
      CheckResult closure, affine, linear;
      for (std::size_t t = 0; t < std::max<std::size_t>(4, cfg_.budget / 50); ++t) {
        const auto a = s.subspace(n_);
        const auto b = t % 2 == 0 ? s.complement(a) : s.subspace(n_);
        const auto rep = semitorsored_pair_check(a, b, s, 2);
        closure += rep.closure;
        affine += rep.affine;
        linear += rep.linear;
      }
      add("semitorsored pair closure", "sampled", closure);
      add("semitorsored pair affine in each slot", "sampled", affine);
      add("semitorsored pair linear when a T b", "sampled", linear);
    }
    algebra_checks();
    coincidence_checks(cases);
    jordan_checks(cases);
    if constexpr (kFinite) {
      round_trip_checks();
    } else {
      skip("round trip through right ideals", "needs a finite field");
      skip("right ideals", "needs a finite field");
    }
  }

  void algebra_checks() {
    const std::size_t k = std::max<std::size_t>(1, n_ / 2);
    // (o⁺, Δ, o⁻) in F^k ⊕ F^k
    const auto c = coordinates_span<K>(f_, 2 * k, 0, k), a = coordinates_span<K>(f_, 2 * k, k, k);
    Matrix<K> rows(f_, k, 2 * k);
    for (std::size_t i = 0; i < k; ++i) rows(i, i) = rows(i, k + i) = K(1, f_);
    const auto u = S<K>::span(rows);
    const auto alg = extract_algebra(a, u, c);
    CheckResult laws;
    laws.record(is_associative(alg) && alg.unit && is_unit(alg, *alg.unit),
                [&] { return labeled<K>({{"a", &a}, {"u", &u}, {"c", &c}}); });
    add("algebra of (o+, diagonal, o-) associative with unit", "exhaustive", laws);
    if constexpr (kFinite) {
      if (power(f_.p, k * k * k * k) <= (std::size_t{1} << 20)) {
        CheckResult iso;
        iso.record(find_algebra_isomorphism(alg, matrix_algebra<Fp>(f_, k)).has_value(),
                   [&] { return labeled<K>({{"a", &a}, {"u", &u}, {"c", &c}}); });
        add("algebra isomorphic to M(k)", "exhaustive", iso);
      } else {
        skip("algebra isomorphic to M(k)", "search space above 2^20");
      }
    } else {
      skip("algebra isomorphic to M(k)", "search needs a finite field");
    }
    {
      auto s = sampler("algebra random unit");
      CheckResult r;
      for (std::size_t t = 0; t < 10; ++t) {
        const auto aa = s.subspace(2 * k, k);
        const auto cc = s.complement(aa);
        const auto uu = *s.common_complement_of(aa, cc);
        const auto al = extract_algebra(aa, uu, cc);
        r.record(is_associative(al) && is_unit(al, *al.unit), [&] { return labeled<K>({{"a", &aa}, {"u", &uu}, {"c", &cc}}); });
      }
      add("algebras at random transversal triples", "sampled", r);
    }
  }

  void coincidence_checks(std::size_t cases) {
    {
      auto s = sampler("coincidence identity");
      CheckResult r;
      for (std::size_t t = 0; t < cases;) {
        const auto a = s.subspace(n_);
        const auto b = s.coin(3) ? a : s.subspace(n_, a.dim());
        const auto x = s.common_complement_of(a, b);
        if (!x) continue;
        const auto z = s.complement(b);
        const auto y = s.mixed(n_, {a, b, *x, z});
        r.record(G(*x, b, G(*x, a, y, b, z), b, z) == G(z, b, a, y, *x),
                 [&] { return labeled<K>({{"x", &*x}, {"a", &a}, {"y", &y}, {"b", &b}, {"z", &z}}); });
        ++t;
      }
      add("Gamma(x,b,Gamma(x,a,y,b,z),b,z) = Gamma(z,b,a,y,x)", "sampled", r);
    }
    if (n_ < 2) {
      skip("chart: X - ZAX + Z and ZAX", "needs n >= 2");
      return;
    }
    auto s = sampler("coincidence chart");
    const std::size_t m = n_ / 2, k = n_ - m;
    const auto o_minus = coordinates_span<K>(f_, n_, 0, m), o_plus = coordinates_span<K>(f_, n_, m, k);
    CheckResult r;
    for (std::size_t t = 0; t < cases; ++t) {
      const auto X = s.matrix(m, k), Z = s.matrix(m, k), A = s.matrix(k, m);
      const auto x = column_graph(X), z = column_graph(Z), a = row_graph(A);
      const auto middle = G(x, a, o_plus, o_minus, z);
      const auto lhs = G(z, o_minus, a, o_plus, x);
      r.record(middle == column_graph(X - Z * A * X + Z) && lhs == column_graph(Z * A * X) &&
                   lhs == affine_add(o_minus, x, middle, z),
               [&] { return labeled<K>({{"x", &x}, {"a", &a}, {"z", &z}}); });
    }
    add("chart: X - ZAX + Z and ZAX", "sampled", r);
  }

  void jordan_checks(std::size_t cases) {
    auto s = sampler("jordan");
    const auto p = hom_pair<K>(f_, 2, 3);
    CheckResult polar;
    const auto vec = [&](std::size_t d) {
      Vec<K> v;
      for (std::size_t i = 0; i < d; ++i) v.push_back(s.scalar());
      return v;
    };
    for (std::size_t t = 0; t < cases; ++t)
      for (const Sign sg : {Sign::kPlus, Sign::kMinus}) {
        const std::size_t d = p.dim(sg), e = p.dim(opposite(sg));
        const auto x = vec(d), z = vec(d), y = vec(e);
        Vec<K> xz(d, K(0, f_));
        for (std::size_t i = 0; i < d; ++i) xz[i] = x[i] + z[i];
        auto expected = jordan_Q(p, sg, xz, y);
        const auto qx = jordan_Q(p, sg, x, y), qz = jordan_Q(p, sg, z, y);
        for (std::size_t i = 0; i < d; ++i) expected[i] = expected[i] - qx[i] - qz[i];
        polar.record(jordan_T(p, sg, x, y, z) == expected, [] { return std::string("# Hom(F^2, F^3) model\n"); });
      }
    add("Jordan polarization Q(x+z) - Q(x) - Q(z) = T", "sampled", polar);
    const auto sq = hom_pair<K>(f_, 2, 2);
    const auto rect = hom_pair<K>(f_, 1, 2);
    CheckResult inv;
    for (std::size_t t = 0; t < cases; ++t) {
      const auto X = s.invertible(2);
      const Vec<K> flat(X.entries().begin(), X.entries().end());
      const auto y = pair_inverse(sq, Sign::kPlus, flat);
      const auto Xi = *inverse(X);
      const Vec<K> expected(Xi.entries().begin(), Xi.entries().end());
      const auto R = s.matrix(2, 1);
      const Vec<K> rflat(R.entries().begin(), R.entries().end());
      inv.record(y && *y == expected && !pair_inverse(rect, Sign::kPlus, rflat),
                 [&] { return "# X\n" + X.str() + "\n# R\n" + R.str() + "\n"; });
    }
    add("invertible elements: square yes, rectangular no", "sampled", inv);
    CheckResult imb;
    for (const auto& [e, f] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}, {2, 1}}) {
      const auto im = standard_imbedding<K>(f_, e, f);
      const bool dims = im.peirce[0][1].dim() == e * f && im.peirce[1][0].dim() == e * f &&
                        im.peirce[1][1].dim() == e * e && im.peirce[0][0].dim() == f * f;
      imb.record(dims && pair_from_imbedding(im).constants == hom_pair<K>(f_, e, f).constants,
                 [&, e = e, f = f] { return "# dim E = " + std::to_string(e) + ", dim F = " + std::to_string(f) + "\n"; });
    }
    add("standard imbedding: Peirce blocks and (A01, A10) = Hom model", "exhaustive", imb);
  }

  void round_trip_checks() {
    CheckResult trip, ideals;
    for (const auto& [e, f] : {std::pair<std::size_t, std::size_t>{1, 1}, {1, 2}}) {
      const std::size_t dim = (e + f) * (e + f);
      if (power(f_.p, dim) > (std::size_t{1} << 16)) continue;
      const auto geo = geometry_from_pair(f_, e, f);
      const auto hom = hom_pair<Fp>(f_, e, f);
      const std::size_t points = power(f_.p, e * f);
      const bool matches = geo.extracted.dims == hom.dims && geo.plus_points == points && geo.minus_points == points &&
                           (find_pair_isomorphism(geo.extracted, hom) || find_pair_isomorphism(geo.extracted, swapped(hom)));
      trip.record(matches, [&, e = e, f = f] {
        return "# dim E = " + std::to_string(e) + ", dim F = " + std::to_string(f) + "\n";
      });
      // right ideals of M(e+f) correspond to subspaces of F^(e+f), and the set is closed
      const std::size_t n = e + f;
      std::size_t subspaces = 0;
      for (std::size_t k = 0; k <= n; ++k) subspaces += gaussian_binomial(n, k, f_.p);
      bool closed = geo.ideals.size() == subspaces;
      for (const auto& i : geo.ideals) {
        closed = closed && is_right_ideal(geo.imbedding.algebra, i);
        for (const auto& j : geo.ideals) {
          closed = closed && std::binary_search(geo.ideals.begin(), geo.ideals.end(), join(i, j)) &&
                   std::binary_search(geo.ideals.begin(), geo.ideals.end(), meet(i, j));
        }
      }
      if (power(f_.p, dim) <= (std::size_t{1} << 8)) {
        closed = closed && geo.ideals == right_ideals_by_filter(geo.imbedding.algebra);
      }
      ideals.record(closed, [&, n = n] { return "# right ideals of M(" + std::to_string(n) + ")\n"; });
    }
    add("round trip through right ideals", "exhaustive", trip);
    add("right ideals", "exhaustive", ideals);
  }

  // ---- axioms
  void axioms_suite() {
    if constexpr (kFinite) {
      std::size_t m = n_;
      while (m > 1 && !finite_geometry_fits(f_, m)) --m;
      const auto base = m == n_ && geometry() ? *geometry() : FiniteGeometry::grassmannian(f_, m);
      const std::string where = "Gras(GF(" + std::to_string(f_.p) + ")^" + std::to_string(m) + ") ";
      if (cfg_.corrupt) {
        const auto rep = verify_axioms(base.corrupted(0, base.size() - 1));
        for (const auto& [name, r] : rep.entries()) add(where + name + " [corrupted]", "exhaustive", *r);
        return;
      }
      const auto rep = verify_axioms(base);
      for (const auto& [name, r] : rep.entries()) add(where + name, "exhaustive", *r);
      CheckResult mutation;
      const auto bad = verify_axioms(base.corrupted(0, base.size() - 1));
      mutation.record(bad.semitorsor_or_diagonal_failed(),
                      [] { return std::string("# corrupted table passed the semitorsor and diagonal laws\n"); });
      add(where + "mutation detected", "exhaustive", mutation);
    } else {
      skip("geometry axioms", "needs a finite field");
    }
  }

  const RunConfig& cfg_;
  Field f_;
  std::size_t n_;
  std::vector<CheckLine>& out_;
  std::string suite_;
  std::optional<std::vector<S<K>>> points_;
  std::optional<FiniteGeometry> geometry_;
};

std::string config_text(const RunConfig& c) {
  return "field=" + c.field.name() + " n=" + std::to_string(c.n) + " seed=" + std::to_string(c.seed) +
         " budget=" + std::to_string(c.budget) + " exhaustive=" + (c.exhaustive ? "yes" : "no") +
         (c.corrupt ? " corrupt=yes" : "");
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"gamma",   "semitorsor", "klein",    "lattice-diagonals", "torsor",
                                                 "affine",  "structural", "dilation", "pair",              "axioms"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return name == "all" || std::find(n.begin(), n.end(), name) != n.end();
}

VerifyReport run_verify(const std::string& suite, const RunConfig& config) {
  if (!is_suite(suite)) throw Error(ErrorCode::kInvalidArgument, "unknown suite '" + suite + "'");
  if (config.n == 0) throw Error(ErrorCode::kInvalidArgument, "ambient dimension must be positive");
  VerifyReport rep{config, {}};
  const auto run = [&](auto&& runner) {
    if (suite != "all") return runner.run(suite);
    for (const auto& name : suite_names()) runner.run(name);
  };
  if (config.field.is_prime()) {
    run(Runner<Fp>(config, rep.lines));
  } else {
    run(Runner<Rational>(config, rep.lines));
  }
  return rep;
}

bool VerifyReport::ok() const {
  return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.result.ok(); });
}

const CheckLine* VerifyReport::find(const std::string& suite, const std::string& name) const {
  for (const auto& l : lines)
    if (l.suite == suite && l.name == name) return &l;
  return nullptr;
}

std::string VerifyReport::text() const {
  std::ostringstream out;
  out << "verify " << config_text(config) << "\n";
  std::size_t failed = 0, skipped = 0;
  for (const auto& l : lines) {
    const char* status = l.skipped() ? "SKIP" : (l.result.ok() ? "PASS" : "FAIL");
    out << status << "  " << l.suite << ": " << l.name << "  [" << l.mode << "]";
    if (!l.skipped()) out << " cases=" << l.result.cases << " failures=" << l.result.failures;
    out << "\n";
    if (l.skipped()) ++skipped;
    if (!l.result.ok()) {
      ++failed;
      out << "counterexample:\n" << l.result.witness.value_or("") << "end counterexample\n";
    }
  }
  out << "result " << (failed == 0 ? "PASS" : "FAIL") << ": " << lines.size() << " checks, " << failed << " failed, "
      << skipped << " skipped\n";
  return out.str();
}

std::string VerifyReport::json() const {
  nlohmann::ordered_json j;
  j["field"] = config.field.name();
  j["n"] = config.n;
  j["seed"] = config.seed;
  j["budget"] = config.budget;
  j["exhaustive"] = config.exhaustive;
  if (config.corrupt) j["corrupt"] = true;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& l : lines) {
    nlohmann::ordered_json c;
    c["suite"] = l.suite;
    c["check"] = l.name;
    c["mode"] = l.mode;
    c["status"] = l.skipped() ? "skip" : (l.result.ok() ? "pass" : "fail");
    c["cases"] = l.result.cases;
    c["failures"] = l.result.failures;
    if (l.result.witness) c["counterexample"] = *l.result.witness;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["pass"] = ok();
  return j.dump(2) + "\n";
}

}  // namespace asg
