#include "assocgeom/axioms.hpp"

#include <algorithm>
#include <map>

#include "assocgeom/text_format.hpp"

namespace asg {

namespace {

template <class F>
void note(CheckResult& r, bool passed, F&& describe) {
  ++r.cases;
  if (passed) return;
  ++r.failures;
  if (!r.witness) r.witness = describe();
}

}  // namespace

FiniteGeometry FiniteGeometry::grassmannian(Field field, std::size_t n) {
  if (!field.is_prime()) throw Error(ErrorCode::kInvalidArgument, "finite geometry needs a prime field");
  FiniteGeometry g;
  g.field_ = field;
  g.ambient_ = n;
  double total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += static_cast<double>(gaussian_binomial(n, k, field.p));
  double power = 1;
  for (int i = 0; i < 7; ++i) power *= total;
  if (power > static_cast<double>(1ull << 28)) throw Error(ErrorCode::kGuard, "finite geometry limited to |X|^7 <= 2^28");
  g.points_ = enumerate_subspaces(field, n);
  std::sort(g.points_.begin(), g.points_.end());
  const std::size_t N = g.points_.size();
  const auto& P = g.points_;
  g.gamma_.resize(N * N * N * N * N);
  std::size_t i = 0;
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t y = 0; y < N; ++y)
        for (std::size_t b = 0; b < N; ++b)
          for (std::size_t z = 0; z < N; ++z)
            g.gamma_[i++] = static_cast<std::uint16_t>(g.index(gamma_extended(Quintuple<Fp>{P[x], P[a], P[y], P[b], P[z]})));
  g.pi_.resize(field.p * N * N * N);
  i = 0;
  for (std::size_t r = 0; r < field.p; ++r)
    for (std::size_t x = 0; x < N; ++x)
      for (std::size_t a = 0; a < N; ++a)
        for (std::size_t y = 0; y < N; ++y)
          g.pi_[i++] = static_cast<std::uint16_t>(g.index(pi_extended(Fp(static_cast<std::int64_t>(r), field), P[x], P[a], P[y])));
  g.meet_.resize(N * N);
  g.join_.resize(N * N);
  g.transversal_.resize(N * N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t y = 0; y < N; ++y) {
      g.meet_[x * N + y] = static_cast<std::uint16_t>(g.index(asg::meet(P[x], P[y])));
      g.join_[x * N + y] = static_cast<std::uint16_t>(g.index(asg::join(P[x], P[y])));
      g.transversal_[x * N + y] = is_transversal(P[x], P[y]) ? 1 : 0;
    }
  return g;
}

std::size_t FiniteGeometry::index(const Subspace<Fp>& s) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), s);
  if (it == points_.end() || !(*it == s)) throw Error(ErrorCode::kDomain, "subspace is not a point of the geometry");
  return static_cast<std::size_t>(it - points_.begin());
}

FiniteGeometry FiniteGeometry::opposite() const {
  FiniteGeometry g = *this;
  const std::size_t N = size();
  std::size_t i = 0;
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t y = 0; y < N; ++y)
        for (std::size_t b = 0; b < N; ++b)
          for (std::size_t z = 0; z < N; ++z) g.gamma_[i++] = static_cast<std::uint16_t>(gamma(z, a, y, b, x));
  std::swap(g.meet_, g.join_);
  return g;
}

FiniteGeometry FiniteGeometry::corrupted(std::size_t x, std::size_t y) const {
  FiniteGeometry g = *this;
  const std::size_t N = size();
  const auto diag = [N](std::size_t p) { return (((p * N + p) * N + p) * N + p) * N + p; };
  std::swap(g.gamma_[diag(x)], g.gamma_[diag(y)]);
  return g;
}

std::string FiniteGeometry::describe(std::initializer_list<std::pair<const char*, std::size_t>> named) const {
  std::string out;
  for (const auto& [name, i] : named) out += std::string("[") + name + "]\n" + format_subspace(points_[i]);
  return out;
}

std::vector<std::pair<std::string, const CheckResult*>> AxiomReport::entries() const {
  return {{"semitorsor", &semitorsor},
          {"klein reversal", &klein_reversal},
          {"klein swap", &klein_swap},
          {"structural partial maps", &structural},
          {"Gamma(a,a,y,b,b) = a+b", &diagonal_join},
          {"Gamma(a,b,y,a,b) = a^b", &diagonal_meet},
          {"x = y in C_ab gives z", &diagonal_idempotent},
          {"x T a, y T b gives b", &diagonal_b},
          {"a T y, b T x gives a", &diagonal_a},
          {"C_a affine", &affine},
          {"semitorsored pairs", &semitorsored_pairs},
          {"L inverse", &left_inverse},
          {"M inverse", &middle_inverse},
          {"C_ab stable", &torsor_stable}};
}

bool AxiomReport::ok() const {
  for (const auto& [name, r] : entries())
    if (!r->ok()) return false;
  return true;
}

bool AxiomReport::semitorsor_or_diagonal_failed() const {
  return !semitorsor.ok() || !diagonal_join.ok() || !diagonal_meet.ok() || !diagonal_idempotent.ok() ||
         !diagonal_b.ok() || !diagonal_a.ok();
}

namespace {

using Map = PointMap;

void check_semitorsor(const FiniteGeometry& g, AxiomReport& rep) {
  const std::size_t N = g.size();
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y)
          for (std::size_t z = 0; z < N; ++z) {
            const std::size_t xyz = g.gamma(x, a, y, b, z);
            for (std::size_t u = 0; u < N; ++u) {
              const std::size_t uzy = g.gamma(u, a, z, b, y);
              for (std::size_t v = 0; v < N; ++v) {
                const std::size_t left = g.gamma(xyz, a, u, b, v);
                const std::size_t middle = g.gamma(x, a, uzy, b, v);
                const std::size_t right = g.gamma(x, a, y, b, g.gamma(z, a, u, b, v));
                note(rep.semitorsor, left == middle && middle == right, [&] {
                  return g.describe({{"x", x}, {"a", a}, {"y", y}, {"b", b}, {"z", z}, {"u", u}, {"v", v}});
                });
              }
            }
          }
}

void check_klein(const FiniteGeometry& g, AxiomReport& rep) {
  const std::size_t N = g.size();
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t y = 0; y < N; ++y)
        for (std::size_t b = 0; b < N; ++b)
          for (std::size_t z = 0; z < N; ++z) {
            const auto describe = [&] { return g.describe({{"x", x}, {"a", a}, {"y", y}, {"b", b}, {"z", z}}); };
            const std::size_t v = g.gamma(x, a, y, b, z);
            note(rep.klein_reversal, v == g.gamma(z, b, y, a, x), describe);
            note(rep.klein_swap, v == g.gamma(a, x, y, z, b), describe);
          }
}

struct PairOrigin {
  const char* family;
  std::size_t x, a, y, b;
};

}  // namespace

bool structural_for_gamma(const FiniteGeometry& g, const PointMap& f, const PointMap& h) {
  const std::size_t N = g.size();
  for (std::size_t u = 0; u < N; ++u)
    for (std::size_t v = 0; v < N; ++v) {
      const std::size_t hu = h[u], hv = h[v];
      for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y)
          for (std::size_t z = 0; z < N; ++z)
            if (f[g.gamma(x, hu, y, hv, z)] != g.gamma(f[x], u, f[y], v, f[z])) return false;
    }
  return true;
}

bool structural_for_pi(const FiniteGeometry& g, const PointMap& f, const PointMap& h) {
  const std::size_t N = g.size();
  for (std::size_t r = 0; r < g.field().p; ++r)
    for (std::size_t u = 0; u < N; ++u)
      for (std::size_t x = 0; x < N; ++x)
        for (std::size_t y = 0; y < N; ++y)
          if (f[g.pi(r, x, h[u], y)] != g.pi(r, f[x], u, f[y])) return false;
  return true;
}

namespace {

void check_structural(const FiniteGeometry& g, AxiomReport& rep) {
  const std::size_t N = g.size();
  // many quadruples induce the same pair of maps; each distinct pair is checked once
  std::map<std::pair<Map, Map>, PairOrigin> pairs;
  Map l1(N), l2(N), m1(N), m2(N), r1(N), r2(N);
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t y = 0; y < N; ++y)
        for (std::size_t b = 0; b < N; ++b) {
          for (std::size_t w = 0; w < N; ++w) {
            l1[w] = static_cast<std::uint16_t>(g.gamma(x, a, y, b, w));  // L_{xayb}
            l2[w] = static_cast<std::uint16_t>(g.gamma(y, a, x, b, w));  // L_{yaxb}
            m1[w] = static_cast<std::uint16_t>(g.gamma(x, a, w, b, y));  // M_{xaby}
            m2[w] = static_cast<std::uint16_t>(g.gamma(y, a, w, b, x));  // M_{yabx}
            r1[w] = static_cast<std::uint16_t>(g.gamma(w, a, x, b, y));  // R_{axby}
            r2[w] = static_cast<std::uint16_t>(g.gamma(w, a, y, b, x));  // R_{aybx}
          }
          pairs.try_emplace({l1, l2}, PairOrigin{"L", x, a, y, b});
          pairs.try_emplace({m1, m2}, PairOrigin{"M", x, a, y, b});
          pairs.try_emplace({r1, r2}, PairOrigin{"R", x, a, y, b});
        }
  for (const auto& [maps, origin] : pairs) {
    const auto& [f, h] = maps;
    const bool passed = structural_for_gamma(g, f, h) && structural_for_gamma(g, h, f) && structural_for_pi(g, f, h) &&
                        structural_for_pi(g, h, f);
    note(rep.structural, passed, [&, &o = origin] {
      return std::string("# ") + o.family + " pair at\n" + g.describe({{"x", o.x}, {"a", o.a}, {"y", o.y}, {"b", o.b}});
    });
  }
}

void check_diagonal(const FiniteGeometry& g, AxiomReport& rep) {
  const std::size_t N = g.size();
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t y = 0; y < N; ++y)
      for (std::size_t b = 0; b < N; ++b) {
        const auto describe = [&] { return g.describe({{"a", a}, {"y", y}, {"b", b}}); };
        note(rep.diagonal_join, g.gamma(a, a, y, b, b) == g.join(a, b), describe);
        note(rep.diagonal_meet, g.gamma(a, b, y, a, b) == g.meet(a, b), describe);
      }
  for (std::size_t x = 0; x < N; ++x)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t y = 0; y < N; ++y)
        for (std::size_t b = 0; b < N; ++b) {
          const auto describe = [&] { return g.describe({{"x", x}, {"a", a}, {"y", y}, {"b", b}}); };
          if (x == y && g.transversal(x, a) && g.transversal(x, b)) {
            for (std::size_t z = 0; z < N; ++z)
              note(rep.diagonal_idempotent, g.gamma(x, a, x, b, z) == z && g.gamma(z, b, x, a, x) == z,
                   [&] { return g.describe({{"x", x}, {"a", a}, {"b", b}, {"z", z}}); });
          }
          if (g.transversal(a, x) && g.transversal(y, b)) note(rep.diagonal_b, g.gamma(x, a, y, b, b) == b, describe);
          if (g.transversal(a, y) && g.transversal(b, x)) note(rep.diagonal_a, g.gamma(x, a, y, b, a) == a, describe);
        }
}

void check_affine(const FiniteGeometry& g, AxiomReport& rep) {
  const std::size_t N = g.size(), p = g.field().p;
  for (std::size_t a = 0; a < N; ++a) {
    std::vector<std::size_t> ca;
    for (std::size_t x = 0; x < N; ++x)
      if (g.transversal(x, a)) ca.push_back(x);
    const auto in_ca = [&](std::size_t x) { return g.transversal(x, a); };
    for (const std::size_t o : ca) {
      // the vector space (C_a, o): x + z = Γ(x,a,o,a,z), r·y = Π_r(o,a,y)
      const auto add = [&](std::size_t x, std::size_t z) { return g.gamma(x, a, o, a, z); };
      const auto scale = [&](std::size_t r, std::size_t y) { return g.pi(r, o, a, y); };
      const auto neg = [&](std::size_t x) { return g.gamma(o, a, x, a, o); };
      for (const std::size_t x : ca)
        for (const std::size_t y : ca) {
          const auto describe = [&] { return g.describe({{"a", a}, {"o", o}, {"x", x}, {"y", y}}); };
          bool passed = in_ca(add(x, y)) && add(x, y) == add(y, x) && add(o, x) == x && add(x, neg(x)) == o;
          for (std::size_t r = 0; r < p && passed; ++r) {
            passed = in_ca(g.pi(r, x, a, y)) && in_ca(scale(r, x));
            // Π_r(x,a,y) = (1−r)x + ry
            passed = passed && g.pi(r, x, a, y) == add(scale((p + 1 - r) % p, x), scale(r, y));
            passed = passed && scale(r, add(x, y)) == add(scale(r, x), scale(r, y));
            for (std::size_t s = 0; s < p && passed; ++s) {
              passed = scale(r, scale(s, x)) == scale(r * s % p, x) && scale((r + s) % p, x) == add(scale(r, x), scale(s, x));
            }
          }
          passed = passed && scale(1, x) == x && scale(0, x) == o;
          for (const std::size_t z : ca) {
            // x − y + z computed in the vector space, and associativity of +
            passed = passed && g.gamma(x, a, y, a, z) == add(add(x, neg(y)), z) && add(add(x, y), z) == add(x, add(y, z));
          }
          note(rep.affine, passed, describe);
        }
    }
  }
}

void check_pairs_and_torsors(const FiniteGeometry& g, AxiomReport& rep) {
  const std::size_t N = g.size();
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) {
      std::vector<std::size_t> ua, ub, uab;
      for (std::size_t x = 0; x < N; ++x) {
        if (g.transversal(x, a)) ua.push_back(x);
        if (g.transversal(x, b)) ub.push_back(x);
        if (g.transversal(x, a) && g.transversal(x, b)) uab.push_back(x);
      }
      for (const std::size_t x : ua)
        for (const std::size_t y : ub)
          for (const std::size_t z : ua)
            note(rep.semitorsored_pairs, g.transversal(g.gamma(x, a, y, b, z), a),
                 [&] { return g.describe({{"x", x}, {"a", a}, {"y", y}, {"b", b}, {"z", z}}); });
      for (const std::size_t x : ub)
        for (const std::size_t y : ua)
          for (const std::size_t z : ub)
            note(rep.semitorsored_pairs, g.transversal(g.gamma(x, a, y, b, z), b),
                 [&] { return g.describe({{"x", x}, {"a", a}, {"y", y}, {"b", b}, {"z", z}}); });
      for (const std::size_t x : uab)
        for (const std::size_t y : uab) {
          bool left = true, middle = true;
          for (std::size_t z = 0; z < N; ++z) {
            left = left && g.gamma(y, a, x, b, g.gamma(x, a, y, b, z)) == z;
            middle = middle && g.gamma(x, b, g.gamma(x, a, z, b, y), a, y) == z;
          }
          const auto describe = [&] { return g.describe({{"x", x}, {"a", a}, {"y", y}, {"b", b}}); };
          note(rep.left_inverse, left, describe);
          note(rep.middle_inverse, middle, describe);
          for (const std::size_t z : uab) {
            const std::size_t v = g.gamma(x, a, y, b, z);
            note(rep.torsor_stable, g.transversal(v, a) && g.transversal(v, b),
                 [&] { return g.describe({{"x", x}, {"a", a}, {"y", y}, {"b", b}, {"z", z}}); });
          }
        }
    }
}

}  // namespace

AxiomReport verify_axioms(const FiniteGeometry& g) {
  AxiomReport rep;
  check_semitorsor(g, rep);
  check_klein(g, rep);
  check_structural(g, rep);
  check_diagonal(g, rep);
  check_affine(g, rep);
  check_pairs_and_torsors(g, rep);
  return rep;
}

CheckResult check_semitorsor_law(const FiniteGeometry& g) {
  AxiomReport rep;
  check_semitorsor(g, rep);
  return rep.semitorsor;
}

std::pair<CheckResult, CheckResult> check_klein_laws(const FiniteGeometry& g) {
  AxiomReport rep;
  check_klein(g, rep);
  return {rep.klein_reversal, rep.klein_swap};
}

}  // namespace asg
