#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "assocgeom/assocgeom.h"

namespace {

constexpr int kPass = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;

struct Failure {
  int code;
  std::string message;
};

void check(asg_status s, const std::string& context = {}) {
  if (s == ASG_OK) return;
  std::string msg = std::string(asg_status_name(s)) + " error";
  if (!context.empty()) msg += " in " + context;
  msg += ": " + std::string(asg_last_error());
  throw Failure{kUsage, msg};
}

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw Failure{kUsage, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), {}};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  asg_string_free(s);
  return out;
}

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Subspace = std::unique_ptr<asg_subspace, Deleter<asg_subspace, asg_subspace_free>>;
using Relation = std::unique_ptr<asg_relation, Deleter<asg_relation, asg_relation_free>>;
using Pair = std::unique_ptr<asg_pair, Deleter<asg_pair, asg_pair_free>>;
using Report = std::unique_ptr<asg_report, Deleter<asg_report, asg_report_free>>;

Subspace load_subspace(const std::string& path) {
  asg_subspace* s = nullptr;
  check(asg_subspace_parse(read_file(path).c_str(), &s), path);
  return Subspace(s);
}

Subspace parse_subspace(const std::string& text) {
  asg_subspace* s = nullptr;
  check(asg_subspace_parse(text.c_str(), &s));
  return Subspace(s);
}

Relation load_relation(const std::string& path) {
  asg_relation* r = nullptr;
  check(asg_relation_parse(read_file(path).c_str(), &r), path);
  return Relation(r);
}

std::string subspace_text(const asg_subspace* s) {
  char* out = nullptr;
  check(asg_subspace_format(s, &out));
  return take(out);
}

std::string relation_text(const asg_relation* r) {
  char* out = nullptr;
  check(asg_relation_format(r, &out));
  return take(out);
}

std::string pair_text(const asg_pair* p) {
  char* out = nullptr;
  check(asg_pair_format(p, &out));
  return take(out);
}

// Coordinate subspace of F^n spanned by e_from, ..., e_{from+count-1}, or the graph of the identity.
std::string coordinate_block(const std::string& field, std::size_t n, std::size_t from, std::size_t count,
                             bool diagonal = false) {
  std::ostringstream out;
  out << "field " << field << "\nambient " << n << "\n";
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const bool one = diagonal ? (j == i || j == i + count) : j == from + i;
      out << (j ? " " : "") << (one ? 1 : 0);
    }
    out << "\n";
  }
  return out.str();
}

std::pair<std::size_t, std::size_t> dims_arg(const std::vector<std::size_t>& dims) {
  if (dims.size() != 2) throw Failure{kUsage, "--dims takes two values E,F"};
  return {dims[0], dims[1]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with the quintary product of Grassmannians"};
  app.require_subcommand(1);

  // gamma
  auto* gamma = app.add_subcommand("gamma", "Gamma(x,a,y,b,z) of a quintuple file, or of five subspace files");
  std::string form = "extended";
  std::vector<std::string> gamma_files;
  gamma->add_option("--form", form, "extended, operator or bruteforce")
      ->check(CLI::IsMember({"extended", "operator", "bruteforce"}));
  gamma->add_option("files", gamma_files, "one quintuple file, or x a y b z ('-' reads stdin)")->required();

  // pi
  auto* pi = app.add_subcommand("pi", "Pi_r(x,a,z) of three subspace files");
  std::string scalar;
  std::vector<std::string> pi_files;
  pi->add_option("--r", scalar, "scalar r, e.g. 2 or -1/3")->required();
  pi->add_option("files", pi_files, "x a z")->required()->expected(3);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "all subspaces of F^n, one per line");
  std::string field = "p=2";
  std::size_t n = 3;
  long dim = -1;
  bool json = false;
  enumerate->add_option("--field", field, "p=<prime>");
  enumerate->add_option("--n", n, "ambient dimension");
  enumerate->add_option("--dim", dim, "only subspaces of this dimension");
  enumerate->add_flag("--json", json, "JSON array instead of lines");

  // group-table
  auto* table = app.add_subcommand("group-table", "multiplication table of U_ab with a chosen unit");
  std::string file_a, file_b, file_unit;
  table->add_option("--field", field, "field for the default axes");
  table->add_option("--n", n, "even ambient dimension for the default axes");
  table->add_option("--a", file_a, "subspace file for a (default: first n/2 coordinates)");
  table->add_option("--b", file_b, "subspace file for b (default: last n/2 coordinates)");
  table->add_option("--unit", file_unit, "subspace file for the unit (default: the diagonal)");

  // pair
  auto* pair = app.add_subcommand("pair", "associative pairs by structure constants");
  pair->require_subcommand(1);
  std::vector<std::size_t> dims;
  std::uint64_t seed = 1;
  std::size_t budget = 1000;
  auto* pair_hom = pair->add_subcommand("hom", "constants of (Hom(E,F), Hom(F,E))");
  pair_hom->add_option("--field", field, "p=<prime> or q");
  pair_hom->add_option("--dims", dims, "dim E, dim F")->delimiter(',')->required()->expected(2);
  auto* pair_extract = pair->add_subcommand("extract", "pair of the geometry at a base point (o+, o-)");
  std::vector<std::string> base_files;
  pair_extract->add_option("files", base_files, "o+ o-")->required()->expected(2);
  auto* pair_check = pair->add_subcommand("check", "sample para-associativity of a pair file");
  std::string pair_file;
  pair_check->add_option("file", pair_file, "pair file")->required();
  pair_check->add_option("--seed", seed);
  pair_check->add_option("--budget", budget);
  auto* pair_algebra = pair->add_subcommand("algebra", "algebra U_c with origin a and unit u");
  std::vector<std::string> algebra_files;
  pair_algebra->add_option("files", algebra_files, "a u c")->required()->expected(3);
  auto* pair_trip = pair->add_subcommand("round-trip", "geometry of right ideals of End(E+F), then its pair");
  pair_trip->add_option("--field", field, "p=<prime>");
  pair_trip->add_option("--dims", dims, "dim E, dim F")->delimiter(',')->required()->expected(2);

  // imbed
  auto* imbed = app.add_subcommand("imbed", "standard imbedding of a Hom pair into End(E+F)");
  std::string pair_name;
  imbed->add_option("--pair", pair_name, "scalar-gf<p>, or hom with --field and --dims")->required();
  imbed->add_option("--field", field, "p=<prime> or q");
  imbed->add_option("--dims", dims, "dim E, dim F")->delimiter(',')->expected(2);

  // relation
  auto* relation = app.add_subcommand("relation", "calculus of linear relations");
  relation->require_subcommand(1);
  std::vector<std::string> rel_files;
  auto* rel_compose = relation->add_subcommand("compose", "s o r");
  rel_compose->add_option("files", rel_files, "s r")->required()->expected(2);
  auto* rel_reverse = relation->add_subcommand("reverse", "r^-1");
  rel_reverse->add_option("files", rel_files, "r")->required()->expected(1);
  auto* rel_semi = relation->add_subcommand("semitorsor", "z o y^-1 o x");
  rel_semi->add_option("files", rel_files, "x y z")->required()->expected(3);
  auto* rel_push = relation->add_subcommand("push", "image r(x) of a subspace");
  rel_push->add_option("files", rel_files, "r x")->required()->expected(2);
  auto* rel_pull = relation->add_subcommand("pull", "preimage r^-1(y) of a subspace");
  rel_pull->add_option("files", rel_files, "r y")->required()->expected(2);

  // verify
  auto* verify = app.add_subcommand("verify", "run identity suites; exit 1 on a counterexample");
  std::string suite = "all";
  bool exhaustive = false, corrupt = false;
  std::string output;
  std::vector<std::string> suites{"all"};
  for (std::size_t i = 0; i < asg_suite_count(); ++i) suites.emplace_back(asg_suite_name(i));
  verify->add_option("suite", suite, "suite name or all")->check(CLI::IsMember(suites));
  verify->add_option("--field", field, "p=<prime> or q");
  verify->add_option("--n", n, "ambient dimension");
  verify->add_option("--seed", seed, "seed for every sampled case");
  verify->add_option("--budget", budget, "cases per sampled check");
  verify->add_flag("--exhaustive", exhaustive, "enumerate all points where the geometry is small enough");
  verify->add_flag("--corrupt", corrupt, "self-test: check the axioms against a corrupted table");
  verify->add_flag("--json", json, "JSON report");
  verify->add_option("--output", output, "write the report to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (gamma->parsed()) {
      std::vector<Subspace> parts;
      if (gamma_files.size() == 1) {
        asg_subspace* q[5] = {};
        check(asg_quintuple_parse(read_file(gamma_files[0]).c_str(), q), gamma_files[0]);
        for (auto* s : q) parts.emplace_back(s);
      } else if (gamma_files.size() == 5) {
        for (const auto& f : gamma_files) parts.push_back(load_subspace(f));
      } else {
        throw Failure{kUsage, "gamma takes one quintuple file or five subspace files"};
      }
      const asg_gamma_form f = form == "operator"     ? ASG_GAMMA_OPERATOR
                               : form == "bruteforce" ? ASG_GAMMA_BRUTEFORCE
                                                      : ASG_GAMMA_EXTENDED;
      asg_subspace* out = nullptr;
      check(asg_gamma(parts[0].get(), parts[1].get(), parts[2].get(), parts[3].get(), parts[4].get(), f, &out));
      std::cout << subspace_text(Subspace(out).get());
    } else if (pi->parsed()) {
      const auto x = load_subspace(pi_files[0]), a = load_subspace(pi_files[1]), z = load_subspace(pi_files[2]);
      asg_subspace* out = nullptr;
      check(asg_pi(scalar.c_str(), x.get(), a.get(), z.get(), &out));
      std::cout << subspace_text(Subspace(out).get());
    } else if (enumerate->parsed()) {
      char* out = nullptr;
      check(asg_enumerate(field.c_str(), n, dim, &out));
      const auto text = take(out);
      if (json) {
        auto arr = nlohmann::ordered_json::array();
        std::istringstream lines(text);
        for (std::string line; std::getline(lines, line);) arr.push_back(line);
        std::cout << arr.dump(2) << "\n";
      } else {
        std::cout << text;
      }
    } else if (table->parsed()) {
      if ((file_a.empty() || file_b.empty() || file_unit.empty()) && n % 2 != 0) {
        throw Failure{kUsage, "default axes need an even --n"};
      }
      const auto a = file_a.empty() ? parse_subspace(coordinate_block(field, n, 0, n / 2)) : load_subspace(file_a);
      const auto b = file_b.empty() ? parse_subspace(coordinate_block(field, n, n / 2, n / 2)) : load_subspace(file_b);
      const auto u =
          file_unit.empty() ? parse_subspace(coordinate_block(field, n, 0, n / 2, true)) : load_subspace(file_unit);
      char* out = nullptr;
      check(asg_group_table(a.get(), b.get(), u.get(), &out));
      std::cout << take(out);
    } else if (pair_hom->parsed()) {
      const auto [e, f] = dims_arg(dims);
      asg_pair* p = nullptr;
      check(asg_pair_hom(field.c_str(), e, f, &p));
      std::cout << pair_text(Pair(p).get());
    } else if (pair_extract->parsed()) {
      const auto plus = load_subspace(base_files[0]), minus = load_subspace(base_files[1]);
      asg_pair* p = nullptr;
      check(asg_pair_extract(plus.get(), minus.get(), &p));
      std::cout << pair_text(Pair(p).get());
    } else if (pair_check->parsed()) {
      asg_pair* raw = nullptr;
      check(asg_pair_parse(read_file(pair_file).c_str(), &raw), pair_file);
      const Pair p(raw);
      int passed = 0;
      char* witness = nullptr;
      check(asg_pair_check(p.get(), seed, budget, &passed, &witness));
      const auto w = take(witness);
      if (!passed) {
        std::cout << "FAIL para-associativity\ncounterexample:\n" << w << "end counterexample\n";
        return kCounterexample;
      }
      std::cout << "PASS para-associativity cases=" << budget << "\n";
    } else if (pair_algebra->parsed()) {
      const auto a = load_subspace(algebra_files[0]), u = load_subspace(algebra_files[1]),
                 c = load_subspace(algebra_files[2]);
      char* out = nullptr;
      check(asg_algebra_extract(a.get(), u.get(), c.get(), &out));
      std::cout << take(out);
    } else if (pair_trip->parsed()) {
      const auto [e, f] = dims_arg(dims);
      int iso = 0;
      char* out = nullptr;
      check(asg_round_trip(field.c_str(), e, f, &iso, &out));
      std::cout << take(out);
      if (!iso) return kCounterexample;
    } else if (imbed->parsed()) {
      std::size_t e = 1, f = 1;
      if (pair_name.rfind("scalar-gf", 0) == 0) {
        field = "p=" + pair_name.substr(9);
      } else if (pair_name == "hom") {
        std::tie(e, f) = dims_arg(dims);
      } else {
        throw Failure{kUsage, "unknown pair '" + pair_name + "'; use scalar-gf<p> or hom"};
      }
      char* out = nullptr;
      check(asg_imbed_hom(field.c_str(), e, f, &out));
      std::cout << take(out);
    } else if (relation->parsed()) {
      asg_relation* r = nullptr;
      asg_subspace* s = nullptr;
      if (rel_compose->parsed()) {
        check(asg_relation_compose(load_relation(rel_files[0]).get(), load_relation(rel_files[1]).get(), &r));
      } else if (rel_reverse->parsed()) {
        check(asg_relation_reverse(load_relation(rel_files[0]).get(), &r));
      } else if (rel_semi->parsed()) {
        check(asg_relation_semitorsor(load_relation(rel_files[0]).get(), load_relation(rel_files[1]).get(),
                                      load_relation(rel_files[2]).get(), &r));
      } else if (rel_push->parsed()) {
        check(asg_relation_pushforward(load_relation(rel_files[0]).get(), load_subspace(rel_files[1]).get(), &s));
      } else {
        check(asg_relation_pullback(load_relation(rel_files[0]).get(), load_subspace(rel_files[1]).get(), &s));
      }
      std::cout << (r ? relation_text(Relation(r).get()) : subspace_text(Subspace(s).get()));
    } else if (verify->parsed()) {
      const asg_run_config config{field.c_str(), n, seed, budget, exhaustive ? 1 : 0, corrupt ? 1 : 0};
      asg_report* raw = nullptr;
      check(asg_verify(suite.c_str(), &config, &raw));
      const Report report(raw);
      char* out = nullptr;
      check(json ? asg_report_json(report.get(), &out) : asg_report_text(report.get(), &out));
      const auto text = take(out);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream file(output);
        if (!(file << text)) throw Failure{kUsage, "cannot write " + output};
      }
      return asg_report_passed(report.get()) ? kPass : kCounterexample;
    }
  } catch (const Failure& f) {
    std::cerr << "asgeom: " << f.message << "\n";
    return f.code;
  }
  return kPass;
}
