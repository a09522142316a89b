// Prints one PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "assocgeom/verify.hpp"

using namespace asg;

namespace {

RunConfig config(std::uint32_t p, std::size_t n, std::size_t budget, bool exhaustive = false) {
  RunConfig c;
  c.field = p == 0 ? Field::rationals() : Field::prime(p);
  c.n = n;
  c.budget = budget;
  c.seed = 7;
  c.exhaustive = exhaustive;
  return c;
}

std::string where(const RunConfig& c) {
  return (c.field.is_prime() ? "GF(" + std::to_string(c.field.p) + ")^" : "Q^") + std::to_string(c.n);
}

// Collects failed requirements for one criterion.
class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)) {}

  // The named check must exist, must not be skipped, must pass, and must have at least min_cases cases.
  void need(const VerifyReport& rep, const std::string& suite, const std::string& name, std::size_t min_cases = 1,
            const char* mode = nullptr) {
    const auto* l = rep.find(suite, name);
    const std::string id = where(rep.config) + " " + suite + ": " + name;
    if (!l) return fail(id + " missing");
    if (l->skipped()) return fail(id + " " + l->mode);
    if (!l->result.ok()) return fail(id + " failed");
    if (l->result.cases < min_cases) {
      return fail(id + " ran " + std::to_string(l->result.cases) + " < " + std::to_string(min_cases) + " cases");
    }
    if (mode && l->mode != mode) fail(id + " ran " + l->mode + ", expected " + mode);
  }

  // Every line of the suite passes and none is skipped.
  void need_all(const VerifyReport& rep, const std::string& suite) {
    std::size_t seen = 0;
    for (const auto& l : rep.lines) {
      if (l.suite != suite) continue;
      ++seen;
      need(rep, suite, l.name);
    }
    if (seen == 0) fail(where(rep.config) + " " + suite + " produced no checks");
  }

  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }

  bool print(int number) const {
    std::cout << (problems_.empty() ? "PASS" : "FAIL") << "  criterion " << number << ": " << title_ << "\n";
    for (const auto& p : problems_) std::cout << "      " << p << "\n";
    return problems_.empty();
  }

 private:
  void fail(const std::string& what) { problems_.push_back(what); }

  std::string title_;
  std::vector<std::string> problems_;
};

const char* kEx = "exhaustive";

}  // namespace

int main() {
  std::vector<std::function<Criterion()>> criteria = {
      [] {
        Criterion c("extended Gamma equals the brute-force oracle");
        const auto two = run_verify("gamma", config(2, 2, 10, true));
        c.need(two, "gamma", "extended = bruteforce", 3125, kEx);
        const auto three = run_verify("gamma", config(3, 2, 10, true));
        c.need(three, "gamma", "extended = bruteforce", 7776, kEx);
        c.need(run_verify("gamma", config(2, 4, 1000)), "gamma", "extended = bruteforce", 1000);
        c.need(run_verify("gamma", config(3, 3, 1000)), "gamma", "extended = bruteforce", 1000);
        return c;
      },
      [] {
        Criterion c("operator formula equals extended Gamma on D_L, D_R, D_M");
        for (const auto& cfg : {config(2, 4, 1000), config(3, 3, 1000), config(0, 3, 1000)}) {
          const auto rep = run_verify("gamma", cfg);
          c.need(rep, "gamma", "operator = extended on D_L, D_R, D_M", 1000);
          c.need(rep, "gamma", "two-witness descriptions agree", 1000);
        }
        return c;
      },
      [] {
        Criterion c("semitorsor law and both Klein symmetries");
        const auto ex = config(3, 2, 10, true);
        const auto semi = run_verify("semitorsor", ex);
        const auto klein = run_verify("klein", ex);
        c.need(semi, "semitorsor", "gamma para-associativity", 279936, kEx);
        c.need(klein, "klein", "reversal", 7776, kEx);
        c.need(klein, "klein", "swap", 7776, kEx);
        const auto sampled = config(2, 4, 1000);
        c.need(run_verify("semitorsor", sampled), "semitorsor", "gamma para-associativity", 1000);
        const auto k = run_verify("klein", sampled);
        c.need(k, "klein", "reversal", 1000);
        c.need(k, "klein", "swap", 1000);
        return c;
      },
      [] {
        Criterion c("lattice formulas on the diagonals, modular identities, transversal cases");
        for (const auto& cfg : {config(2, 4, 500), config(3, 3, 500), config(0, 3, 500)}) {
          const auto rep = run_verify("lattice-diagonals", cfg);
          std::size_t laws = 0;
          for (const auto& l : rep.lines) {
            c.need(rep, l.suite, l.name, 500);
            ++laws;
          }
          c.expect(laws == 19, where(cfg) + ": expected 19 laws, got " + std::to_string(laws));
        }
        return c;
      },
      [] {
        Criterion c("torsor laws on U_ab and cyclic group tables of order p-1");
        for (const std::uint32_t p : {2u, 3u, 5u}) {
          const auto rep = run_verify("torsor", config(p, 2, 200, true));
          for (const char* name : {"closure of U_ab", "G1", "G2", "closure of every U_ab", "G1 on every U_ab",
                                   "G2 on every U_ab", "group table of the axes in F^2 is cyclic of order p-1"})
            c.need(rep, "torsor", name, 1, kEx);
          c.need_all(rep, "torsor");
        }
        return c;
      },
      [] {
        Criterion c("affine structure of C_a: projector formula and affine axioms");
        for (const auto& cfg : {config(3, 3, 500), config(0, 3, 500)}) {
          const auto rep = run_verify("affine", cfg);
          c.need(rep, "affine", "gamma = projector formula", 500);
          c.need(rep, "affine", "affine space axioms", 500);
          c.need_all(rep, "affine");
        }
        return c;
      },
      [] {
        Criterion c("structural pairs and self-distributivity");
        const auto rep = run_verify("structural", config(2, 3, 1000));
        for (const char* name : {"(r_*, r^*) for relations F^n -> F^n", "(L_xayb, L_yaxb)", "(M_xabz, M_zabx)",
                                 "(R_aybz, R_azby)", "self-distributivity of M", "self-distributivity of L"})
          c.need(rep, "structural", name, 200);
        return c;
      },
      [] {
        Criterion c("dilations: symmetry, multiplicativity, diagonal values, operator agreement");
        const auto rep = run_verify("dilation", config(5, 2, 10, true));
        for (const char* name : {"symmetry", "diagonal values", "multiplicativity on x T a",
                                 "delta operator agreement on x T a", "inverse scalar"})
          c.need(rep, "dilation", name, 1, kEx);
        c.need_all(rep, "dilation");
        return c;
      },
      [] {
        Criterion c("pair extraction, the algebra M(2,GF(2)), coincidence identities");
        const auto rep = run_verify("pair", config(2, 4, 1000));
        c.need(rep, "pair", "extracted products trilinear", 200);
        c.need(rep, "pair", "extracted pair para-associativity", 200);
        c.need(rep, "pair", "extracted products are XBZ and CYA", 200);
        c.need(rep, "pair", "algebra of (o+, diagonal, o-) associative with unit");
        c.need(rep, "pair", "algebra isomorphic to M(k)");
        c.need(rep, "pair", "Gamma(x,b,Gamma(x,a,y,b,z),b,z) = Gamma(z,b,a,y,x)", 200);
        c.need(rep, "pair", "chart: X - ZAX + Z and ZAX", 200);
        return c;
      },
      [] {
        Criterion c("round trip through the geometry of right ideals");
        const auto rep = run_verify("pair", config(2, 2, 50));
        c.need(rep, "pair", "round trip through right ideals", 2, kEx);
        c.need(rep, "pair", "right ideals", 2, kEx);
        return c;
      },
      [] {
        Criterion c("geometry axioms on finite Grassmannians; corrupted table is caught");
        for (const auto& [p, n] : {std::pair{2u, std::size_t{3}}, {3u, std::size_t{2}}}) {
          const auto rep = run_verify("axioms", config(p, n, 10, true));
          c.need_all(rep, "axioms");
          const std::string where = "Gras(GF(" + std::to_string(p) + ")^" + std::to_string(n) + ") ";
          c.need(rep, "axioms", where + "semitorsor", 1, kEx);
          c.need(rep, "axioms", where + "mutation detected", 1, kEx);
          auto bad = config(p, n, 10, true);
          bad.corrupt = true;
          const auto corrupted = run_verify("axioms", bad);
          c.expect(!corrupted.ok() && corrupted.text().find("counterexample:\n[") != std::string::npos,
                   where + "corrupted table was not reported with a witness");
        }
        return c;
      },
      [] {
        Criterion c("same seed and configuration give byte-identical reports");
        const auto cfg = config(2, 4, 1000);
        const auto first = run_verify("all", cfg);
        const auto second = run_verify("all", cfg);
        c.expect(first.ok(), "verify all did not pass");
        c.expect(first.text() == second.text(), "text reports differ");
        c.expect(first.json() == second.json(), "JSON reports differ");
        return c;
      },
  };
  bool ok = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) ok = criteria[i]().print(static_cast<int>(i + 1)) && ok;
  std::cout << (ok ? "acceptance PASS" : "acceptance FAIL") << "\n";
  return ok ? 0 : 1;
}
