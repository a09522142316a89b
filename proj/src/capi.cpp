#include "assocgeom/assocgeom.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "assocgeom/pairs.hpp"
#include "assocgeom/relation.hpp"
#include "assocgeom/text_format.hpp"
#include "assocgeom/torsor.hpp"
#include "assocgeom/verify.hpp"

using asg::Field;
using asg::Fp;
using asg::Rational;

struct asg_subspace {
  std::variant<asg::Subspace<Fp>, asg::Subspace<Rational>> v;
};
struct asg_relation {
  std::variant<asg::Relation<Fp>, asg::Relation<Rational>> v;
};
struct asg_pair {
  std::variant<asg::PairModel<Fp>, asg::PairModel<Rational>> v;
};
struct asg_report {
  asg::VerifyReport report;
};

namespace {

thread_local std::string last_error;

asg_status status_of(asg::ErrorCode c) {
  switch (c) {
    case asg::ErrorCode::kMismatch: return ASG_ERR_MISMATCH;
    case asg::ErrorCode::kDomain: return ASG_ERR_DOMAIN;
    case asg::ErrorCode::kGuard: return ASG_ERR_GUARD;
    case asg::ErrorCode::kParse: return ASG_ERR_PARSE;
    case asg::ErrorCode::kInvalidArgument: return ASG_ERR_INVALID_ARGUMENT;
  }
  return ASG_ERR_INTERNAL;
}

template <class Fn>
asg_status guarded(Fn&& fn) {
  last_error.clear();
  try {
    fn();
    return ASG_OK;
  } catch (const asg::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return ASG_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw asg::Error(asg::ErrorCode::kInvalidArgument, what);
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Calls fn with the unwrapped values when every handle is over a prime field, or every one over ℚ.
template <class Fn, class... H>
void dispatch(Fn&& fn, const H*... h) {
  require(((h != nullptr) && ...), "null handle");
  if (((h->v.index() == 0) && ...)) {
    fn(std::get<0>(h->v)...);
  } else if (((h->v.index() == 1) && ...)) {
    fn(std::get<1>(h->v)...);
  } else {
    throw asg::Error(asg::ErrorCode::kMismatch, "arguments over different fields");
  }
}

Field field_arg(const char* text) {
  require(text != nullptr, "null field");
  return Field::parse(text);
}

template <asg::FieldElement K>
using S = asg::Subspace<K>;

}  // namespace

extern "C" {

const char* asg_last_error(void) { return last_error.c_str(); }

const char* asg_status_name(asg_status status) {
  switch (status) {
    case ASG_OK: return "ok";
    case ASG_ERR_MISMATCH: return "mismatch";
    case ASG_ERR_DOMAIN: return "domain";
    case ASG_ERR_GUARD: return "guard";
    case ASG_ERR_PARSE: return "parse";
    case ASG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case ASG_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void asg_string_free(char* s) { std::free(s); }

asg_status asg_subspace_parse(const char* text, asg_subspace** out) {
  return guarded([&] {
    require(text && out, "null argument");
    if (asg::peek_field(text).is_prime()) {
      *out = new asg_subspace{asg::parse_subspace<Fp>(text)};
    } else {
      *out = new asg_subspace{asg::parse_subspace<Rational>(text)};
    }
  });
}

asg_status asg_subspace_format(const asg_subspace* s, char** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch([&](const auto& x) { *out = copy_out(asg::format_subspace(x)); }, s);
  });
}

asg_status asg_subspace_format_line(const asg_subspace* s, char** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch([&](const auto& x) { *out = copy_out(asg::format_subspace_line(x)); }, s);
  });
}

size_t asg_subspace_dim(const asg_subspace* s) {
  return s ? std::visit([](const auto& x) { return x.dim(); }, s->v) : 0;
}

size_t asg_subspace_ambient(const asg_subspace* s) {
  return s ? std::visit([](const auto& x) { return x.ambient(); }, s->v) : 0;
}

int asg_subspace_equal(const asg_subspace* s, const asg_subspace* t) { return s && t && s->v == t->v; }

void asg_subspace_free(asg_subspace* s) { delete s; }

asg_status asg_quintuple_parse(const char* text, asg_subspace** out) {
  return guarded([&] {
    require(text && out, "null argument");
    const auto store = [&](const auto& q) {
      out[0] = new asg_subspace{q.x};
      out[1] = new asg_subspace{q.a};
      out[2] = new asg_subspace{q.y};
      out[3] = new asg_subspace{q.b};
      out[4] = new asg_subspace{q.z};
    };
    if (asg::peek_field(text).is_prime()) {
      store(asg::parse_quintuple<Fp>(text));
    } else {
      store(asg::parse_quintuple<Rational>(text));
    }
  });
}

asg_status asg_gamma(const asg_subspace* x, const asg_subspace* a, const asg_subspace* y, const asg_subspace* b,
                     const asg_subspace* z, asg_gamma_form form, asg_subspace** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch(
        [&]<class K>(const S<K>& x_, const S<K>& a_, const S<K>& y_, const S<K>& b_, const S<K>& z_) {
          const asg::Quintuple<K> q{x_, a_, y_, b_, z_};
          switch (form) {
            case ASG_GAMMA_EXTENDED:
              *out = new asg_subspace{asg::gamma_extended(q)};
              return;
            case ASG_GAMMA_OPERATOR:
              *out = new asg_subspace{asg::gamma_operator(q)};
              return;
            case ASG_GAMMA_BRUTEFORCE:
              if constexpr (std::is_same_v<K, Fp>) {
                *out = new asg_subspace{asg::gamma_bruteforce(q)};
                return;
              } else {
                throw asg::Error(asg::ErrorCode::kDomain, "the brute-force form needs a prime field");
              }
          }
          throw asg::Error(asg::ErrorCode::kInvalidArgument, "unknown gamma form");
        },
        x, a, y, b, z);
  });
}

asg_status asg_pi(const char* r, const asg_subspace* x, const asg_subspace* a, const asg_subspace* z,
                  asg_subspace** out) {
  return guarded([&] {
    require(r && out, "null argument");
    dispatch(
        [&]<class K>(const S<K>& x_, const S<K>& a_, const S<K>& z_) {
          const K scalar = asg::parse_scalar<K>(r, x_.field());
          *out = new asg_subspace{asg::pi_extended(scalar, x_, a_, z_)};
        },
        x, a, z);
  });
}

asg_status asg_enumerate(const char* field, size_t n, long dim, char** out) {
  return guarded([&] {
    require(out, "null argument");
    const Field f = field_arg(field);
    if (!f.is_prime()) throw asg::Error(asg::ErrorCode::kDomain, "enumeration needs a prime field");
    require(dim <= static_cast<long>(n), "dimension exceeds the ambient space");
    const auto all = dim < 0 ? asg::enumerate_subspaces(f, n) : asg::enumerate_subspaces(f, n, static_cast<size_t>(dim));
    std::string text;
    for (const auto& s : all) text += asg::format_subspace_line(s) + "\n";
    *out = copy_out(text);
  });
}

asg_status asg_group_table(const asg_subspace* a, const asg_subspace* b, const asg_subspace* unit, char** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch(
        [&]<class K>(const S<K>& a_, const S<K>& b_, const S<K>& u_) {
          if constexpr (std::is_same_v<K, Fp>) {
            const asg::GroupContext<Fp> g(asg::TorsorContext<Fp>(a_, b_), u_);
            const auto table = asg::group_table(g);
            *out = copy_out(asg::format_group_table(table) + "cyclic " + (asg::is_cyclic(table) ? "yes" : "no") +
                            "\n");
          } else {
            throw asg::Error(asg::ErrorCode::kDomain, "group tables need a prime field");
          }
        },
        a, b, unit);
  });
}

asg_status asg_relation_parse(const char* text, asg_relation** out) {
  return guarded([&] {
    require(text && out, "null argument");
    if (asg::peek_field(text).is_prime()) {
      *out = new asg_relation{asg::parse_relation<Fp>(text)};
    } else {
      *out = new asg_relation{asg::parse_relation<Rational>(text)};
    }
  });
}

asg_status asg_relation_format(const asg_relation* r, char** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch([&](const auto& x) { *out = copy_out(asg::format_relation(x)); }, r);
  });
}

void asg_relation_free(asg_relation* r) { delete r; }

asg_status asg_relation_compose(const asg_relation* s, const asg_relation* r, asg_relation** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch([&](const auto& s_, const auto& r_) { *out = new asg_relation{asg::compose(s_, r_)}; }, s, r);
  });
}

asg_status asg_relation_reverse(const asg_relation* r, asg_relation** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch([&](const auto& r_) { *out = new asg_relation{asg::reverse(r_)}; }, r);
  });
}

asg_status asg_relation_semitorsor(const asg_relation* x, const asg_relation* y, const asg_relation* z,
                                   asg_relation** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch([&](const auto& x_, const auto& y_, const auto& z_) {
      *out = new asg_relation{asg::relation_semitorsor(x_, y_, z_)};
    }, x, y, z);
  });
}

asg_status asg_relation_pushforward(const asg_relation* r, const asg_subspace* x, asg_subspace** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch([&](const auto& r_, const auto& x_) { *out = new asg_subspace{asg::pushforward(r_, x_)}; }, r, x);
  });
}

asg_status asg_relation_pullback(const asg_relation* r, const asg_subspace* y, asg_subspace** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch([&](const auto& r_, const auto& y_) { *out = new asg_subspace{asg::pullback(r_, y_)}; }, r, y);
  });
}

asg_status asg_pair_parse(const char* text, asg_pair** out) {
  return guarded([&] {
    require(text && out, "null argument");
    if (asg::peek_field(text).is_prime()) {
      *out = new asg_pair{asg::parse_pair<Fp>(text)};
    } else {
      *out = new asg_pair{asg::parse_pair<Rational>(text)};
    }
  });
}

asg_status asg_pair_format(const asg_pair* p, char** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch([&](const auto& p_) { *out = copy_out(asg::format_pair(p_)); }, p);
  });
}

void asg_pair_free(asg_pair* p) { delete p; }

asg_status asg_pair_hom(const char* field, size_t e, size_t f, asg_pair** out) {
  return guarded([&] {
    require(out, "null argument");
    const Field fl = field_arg(field);
    if (fl.is_prime()) {
      *out = new asg_pair{asg::hom_pair<Fp>(fl, e, f)};
    } else {
      *out = new asg_pair{asg::hom_pair<Rational>(fl, e, f)};
    }
  });
}

asg_status asg_pair_extract(const asg_subspace* o_plus, const asg_subspace* o_minus, asg_pair** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch([&]<class K>(const S<K>& p, const S<K>& m) {
      *out = new asg_pair{asg::extract_pair(asg::BasePoint<K>(p, m))};
    }, o_plus, o_minus);
  });
}

asg_status asg_pair_check(const asg_pair* p, uint64_t seed, size_t budget, int* passed, char** witness) {
  return guarded([&] {
    require(passed, "null argument");
    dispatch([&]<class K>(const asg::PairModel<K>& p_) {
      asg::Sampler<K> sampler(p_.field, seed);
      const auto r = asg::check_pair_laws(p_, sampler, budget);
      *passed = r.ok() ? 1 : 0;
      if (witness) *witness = r.witness ? copy_out(*r.witness) : nullptr;
    }, p);
  });
}

asg_status asg_algebra_extract(const asg_subspace* a, const asg_subspace* u, const asg_subspace* c, char** out) {
  return guarded([&] {
    require(out, "null argument");
    dispatch([&](const auto& a_, const auto& u_, const auto& c_) {
      *out = copy_out(asg::format_algebra(asg::extract_algebra(a_, u_, c_)));
    }, a, u, c);
  });
}

asg_status asg_imbed_hom(const char* field, size_t e, size_t f, char** out) {
  return guarded([&] {
    require(out, "null argument");
    const Field fl = field_arg(field);
    const auto emit = [&]<class K>(const asg::ImbeddedAlgebra<K>& im) {
      std::string text = asg::format_algebra(im.algebra) + "idempotent";
      for (const auto& c : im.idempotent) text += " " + c.str();
      text += "\npeirce A00=" + std::to_string(im.peirce[0][0].dim()) + " A01=" + std::to_string(im.peirce[0][1].dim()) +
              " A10=" + std::to_string(im.peirce[1][0].dim()) + " A11=" + std::to_string(im.peirce[1][1].dim()) + "\n";
      *out = copy_out(text + asg::format_pair(asg::pair_from_imbedding(im)));
    };
    if (fl.is_prime()) {
      emit(asg::standard_imbedding<Fp>(fl, e, f));
    } else {
      emit(asg::standard_imbedding<Rational>(fl, e, f));
    }
  });
}

asg_status asg_round_trip(const char* field, size_t e, size_t f, int* isomorphic, char** out) {
  return guarded([&] {
    require(out && isomorphic, "null argument");
    const Field fl = field_arg(field);
    if (!fl.is_prime()) throw asg::Error(asg::ErrorCode::kDomain, "right ideals are enumerated over prime fields only");
    const auto geo = asg::geometry_from_pair(fl, e, f);
    const auto hom = asg::hom_pair<Fp>(fl, e, f);
    const char* match = "no";
    if (asg::find_pair_isomorphism(geo.extracted, hom)) {
      match = "yes";
    } else if (asg::find_pair_isomorphism(geo.extracted, asg::swapped(hom))) {
      match = "after swapping + and -";
    }
    *isomorphic = std::strcmp(match, "no") != 0;
    *out = copy_out("right ideals " + std::to_string(geo.ideals.size()) + "\nplus points " +
                    std::to_string(geo.plus_points) + "\nminus points " + std::to_string(geo.minus_points) + "\n" +
                    asg::format_pair(geo.extracted) + "isomorphic to Hom pair: " + match + "\n");
  });
}

asg_status asg_verify(const char* suite, const asg_run_config* config, asg_report** out) {
  return guarded([&] {
    require(suite && config && out, "null argument");
    asg::RunConfig c;
    c.field = field_arg(config->field);
    c.n = config->n;
    c.seed = config->seed;
    c.budget = config->budget;
    c.exhaustive = config->exhaustive != 0;
    c.corrupt = config->corrupt != 0;
    *out = new asg_report{asg::run_verify(suite, c)};
  });
}

size_t asg_suite_count(void) { return asg::suite_names().size(); }

const char* asg_suite_name(size_t i) {
  const auto& names = asg::suite_names();
  return i < names.size() ? names[i].c_str() : nullptr;
}

int asg_report_passed(const asg_report* r) { return r && r->report.ok(); }

asg_status asg_report_text(const asg_report* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = copy_out(r->report.text());
  });
}

asg_status asg_report_json(const asg_report* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = copy_out(r->report.json());
  });
}

void asg_report_free(asg_report* r) { delete r; }

}  // extern "C"
