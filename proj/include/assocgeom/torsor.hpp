#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "assocgeom/gamma.hpp"
#include "assocgeom/report.hpp"
#include "assocgeom/sampling.hpp"

namespace asg {

/// The pair (a, b) fixing the torsor U_ab = C_ab.
template <FieldElement K>
struct TorsorContext {
  Subspace<K> a, b;

  TorsorContext(Subspace<K> a_, Subspace<K> b_);
  /// x ⊤ a and x ⊤ b.
  bool contains(const Subspace<K>& x) const;
  /// Throws kDomain if x is not in C_ab.
  void require(const Subspace<K>& x, const char* what) const;
};

/// U_ab with a chosen unit.
template <FieldElement K>
struct GroupContext {
  TorsorContext<K> ctx;
  Subspace<K> unit;

  GroupContext(TorsorContext<K> c, Subspace<K> y);
};

/// Γ(x,a,y,b,z) for x, y, z ∈ C_ab.
template <FieldElement K>
Subspace<K> torsor_product(const TorsorContext<K>& ctx, const Subspace<K>& x, const Subspace<K>& y,
                           const Subspace<K>& z);
/// Γ(x,a,y,b,z) with y the unit.
template <FieldElement K>
Subspace<K> group_mul(const GroupContext<K>& g, const Subspace<K>& x, const Subspace<K>& z);
/// Γ(y,a,x,b,y) with y the unit.
template <FieldElement K>
Subspace<K> group_inv(const GroupContext<K>& g, const Subspace<K>& x);

/// x − y + z in the affine space C_a: Γ(x,a,y,a,z).
template <FieldElement K>
Subspace<K> affine_add(const Subspace<K>& a, const Subspace<K>& x, const Subspace<K>& y, const Subspace<K>& z);
/// (1−r)x + ry in C_a: Π_r(x,a,y).
template <FieldElement K>
Subspace<K> affine_scale(const Subspace<K>& a, const K& r, const Subspace<K>& x, const Subspace<K>& y);
/// Image of P_x^a − P_y^a + P_z^a, the projector picture of affine_add.
template <FieldElement K>
Subspace<K> affine_add_projector(const Subspace<K>& a, const Subspace<K>& x, const Subspace<K>& y,
                                 const Subspace<K>& z);

/// Γ(x,a,y,b,z) for x ∈ U_ab and arbitrary z.
template <FieldElement K>
Subspace<K> left_action(const GroupContext<K>& g, const Subspace<K>& x, const Subspace<K>& z);
/// Γ(x,a,y,b,z) for arbitrary x and z ∈ U_ab.
template <FieldElement K>
Subspace<K> right_action(const GroupContext<K>& g, const Subspace<K>& x, const Subspace<K>& z);

/// All elements of C_ab, sorted. Throws kGuard when p^n > 2^12.
std::vector<Subspace<Fp>> enumerate_torsor(const TorsorContext<Fp>& ctx);

struct GroupTable {
  std::vector<Subspace<Fp>> elements;
  std::size_t unit = 0;
  std::vector<std::vector<std::size_t>> mul;  // mul[i][j] = index of elements[i]·elements[j]
};

GroupTable group_table(const GroupContext<Fp>& g);
bool is_cyclic(const GroupTable& t);
/// Element list followed by the multiplication table of indices.
std::string format_group_table(const GroupTable& t);

/// Ternary laws on a finite set. Laws are quantified over the given elements;
/// products falling outside the set are still evaluated, and counted as closure failures.
struct TernaryLawReport {
  CheckResult closure;
  CheckResult g1;              // (xy(zuv)) = ((xyz)uv)
  CheckResult g2;              // (xxy) = y = (yxx)
  CheckResult g3;              // (xy(zuv)) = (x(uzy)v) = ((xyz)uv)
  CheckResult chasle;          // l_{x,y} ∘ l_{y,u} = l_{x,u}
  CheckResult middle_inverse;  // m_{x,z} ∘ m_{z,x} = id

  bool torsor() const { return closure.ok() && g1.ok() && g2.ok(); }
  bool semitorsor() const { return closure.ok() && g3.ok(); }
};

template <class T>
using TernaryProduct = std::function<T(const T&, const T&, const T&)>;

namespace detail {

template <class T>
class Interned {
 public:
  Interned(const std::vector<T>& base, TernaryProduct<T> product) : items_(base), product_(std::move(product)) {}

  std::size_t operator()(std::size_t x, std::size_t y, std::size_t z) {
    const auto key = std::make_tuple(x, y, z);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    const T value = product_(items_[x], items_[y], items_[z]);
    std::size_t idx = 0;
    while (idx < items_.size() && !(items_[idx] == value)) ++idx;
    if (idx == items_.size()) items_.push_back(value);
    return memo_[key] = idx;
  }

 private:
  std::vector<T> items_;
  TernaryProduct<T> product_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> memo_;
};

inline std::string indices(std::initializer_list<std::pair<const char*, std::size_t>> named) {
  std::string out;
  for (const auto& [name, i] : named) out += std::string(out.empty() ? "" : " ") + name + "=#" + std::to_string(i);
  return out;
}

}  // namespace detail

/// Exhaustive over elements⁵ for the five-variable laws.
template <class T>
TernaryLawReport check_ternary_laws(const std::vector<T>& elements, const TernaryProduct<T>& product) {
  using detail::indices;
  detail::Interned<T> p(elements, product);
  const std::size_t n = elements.size();
  TernaryLawReport r;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        r.closure.record(p(x, y, z) < n, [&] { return indices({{"x", x}, {"y", y}, {"z", z}}); });
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      r.g2.record(p(x, x, y) == y && p(y, x, x) == y, [&] { return indices({{"x", x}, {"y", y}}); });
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t u = 0; u < n; ++u) {
          r.chasle.record(p(x, y, p(y, u, z)) == p(x, u, z),
                          [&] { return indices({{"x", x}, {"y", y}, {"u", u}, {"z", z}}); });
          for (std::size_t v = 0; v < n; ++v) {
            const auto right = p(x, y, p(z, u, v));
            const auto left = p(p(x, y, z), u, v);
            const auto middle = p(x, p(u, z, y), v);
            const auto describe = [&] { return indices({{"x", x}, {"y", y}, {"z", z}, {"u", u}, {"v", v}}); };
            r.g1.record(right == left, describe);
            r.g3.record(right == middle && middle == left, describe);
          }
        }
        // m_{x,z}(m_{z,x}(y)) = y
        r.middle_inverse.record(p(x, p(z, y, x), z) == y, [&] { return indices({{"x", x}, {"y", y}, {"z", z}}); });
      }
    }
  return r;
}

/// Samples Γ(U_a,a,U_b,b,U_a) ⊂ U_a and the mirror, tri-affineness of both products slot by slot
/// (preservation of x − y + z and of (1−r)x + ry), and, when a ⊤ b, trilinearity with origins b ∈ U_a, a ∈ U_b.
struct PairCheckReport {
  CheckResult closure;
  CheckResult affine;
  CheckResult linear;  // only counted when a ⊤ b
  bool ok() const { return closure.ok() && affine.ok() && linear.ok(); }
};

template <FieldElement K>
PairCheckReport semitorsored_pair_check(const Subspace<K>& a, const Subspace<K>& b, Sampler<K>& sampler,
                                           std::size_t budget);

}  // namespace asg
