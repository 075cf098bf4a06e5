#include "catalan/catalan.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "catalan/bijection.hpp"
#include "catalan/canonical.hpp"
#include "catalan/census.hpp"
#include "catalan/error.hpp"
#include "catalan/formulas.hpp"
#include "catalan/lattices.hpp"
#include "catalan/serialize.hpp"
#include "catalan/stack.hpp"

struct catalan_path {
  catalan::DyckPath value;
};

struct catalan_realizer {
  catalan::Realizer value;
};

namespace {

thread_local std::string last_error;

catalan_status set_error(catalan_status status, const std::string& message) {
  last_error = message;
  return status;
}

catalan_status status_of(catalan::Errc code) { return static_cast<catalan_status>(static_cast<int>(code) + 1); }

template <class F>
catalan_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return CATALAN_OK;
  } catch (const catalan::Error& e) {
    return set_error(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CATALAN_E_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CATALAN_E_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

catalan::LatticeKind lattice(const char* name) {
  if (!name) throw catalan::Error(catalan::Errc::parse_error, "lattice name is null");
  const auto kind = catalan::parse_lattice(name);
  if (!kind) throw catalan::Error(catalan::Errc::parse_error, std::string("unknown lattice '") + name + "'");
  return *kind;
}

#define CATALAN_REQUIRE(cond)                                                                 \
  do {                                                                                        \
    if (!(cond)) return set_error(CATALAN_E_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* catalan_last_error(void) { return last_error.c_str(); }

const char* catalan_status_name(catalan_status status) {
  if (status == CATALAN_OK) return "ok";
  if (status == CATALAN_E_INVALID_ARGUMENT) return "invalid_argument";
  if (status == CATALAN_E_OUT_OF_MEMORY) return "out_of_memory";
  if (status > CATALAN_OK && status <= CATALAN_E_INTERNAL) return catalan::errc_name(static_cast<catalan::Errc>(status - 1));
  return "unknown";
}

void catalan_string_free(char* text) { std::free(text); }

catalan_status catalan_path_parse(const char* word, catalan_path** out) {
  CATALAN_REQUIRE(word && out);
  return guarded([&] { *out = new catalan_path{catalan::DyckPath::parse(word)}; });
}

catalan_status catalan_path_from_descents(const int* descents, size_t n, catalan_path** out) {
  CATALAN_REQUIRE(out && (descents || n == 0));
  return guarded([&] { *out = new catalan_path{catalan::DyckPath::from_descents(std::vector<int>(descents, descents + n))}; });
}

void catalan_path_free(catalan_path* path) { delete path; }

size_t catalan_path_size(const catalan_path* path) { return path ? path->value.size() : 0; }

catalan_status catalan_path_word(const catalan_path* path, char** out) {
  CATALAN_REQUIRE(path && out);
  return guarded([&] { *out = copy_string(path->value.word()); });
}

catalan_status catalan_path_exceedence(const catalan_path* path, size_t i, int* out) {
  CATALAN_REQUIRE(path && out);
  return guarded([&] { *out = path->value.exceedence(i); });
}

catalan_status catalan_convert(const char* from, const char* to, const char* input, char** out) {
  CATALAN_REQUIRE(from && to && input && out);
  return guarded([&] { *out = copy_string(catalan::convert(from, to, input)); });
}

catalan_status catalan_order(const char* name, const catalan_path* lower, const catalan_path* upper, int* out) {
  CATALAN_REQUIRE(lower && upper && out);
  return guarded([&] { *out = catalan::leq(lattice(name), lower->value, upper->value) ? 1 : 0; });
}

catalan_status catalan_covers_json(const char* name, const catalan_path* path, char** out) {
  CATALAN_REQUIRE(path && out);
  return guarded([&] { *out = copy_string(catalan::paths_to_json(catalan::covers(lattice(name), path->value))); });
}

catalan_status catalan_count_intervals(const char* name, size_t n, uint64_t* out) {
  CATALAN_REQUIRE(out);
  return guarded([&] { *out = catalan::count_intervals(lattice(name), n); });
}

catalan_status catalan_formula(const char* name, size_t n, char** out) {
  CATALAN_REQUIRE(out);
  return guarded([&] { *out = copy_string(catalan::formula(lattice(name), n).str()); });
}

catalan_status catalan_phi(const catalan_path* lower, const catalan_path* upper, catalan_realizer** out) {
  CATALAN_REQUIRE(lower && upper && out);
  return guarded([&] { *out = new catalan_realizer{catalan::phi(lower->value, upper->value, true)}; });
}

void catalan_realizer_free(catalan_realizer* realizer) { delete realizer; }

size_t catalan_realizer_size(const catalan_realizer* realizer) { return realizer ? realizer->value.size() : 0; }

catalan_status catalan_realizer_to_json(const catalan_realizer* realizer, char** out) {
  CATALAN_REQUIRE(realizer && out);
  return guarded([&] { *out = copy_string(catalan::realizer_to_json(realizer->value)); });
}

catalan_status catalan_realizer_from_json(const char* json, catalan_realizer** out) {
  CATALAN_REQUIRE(json && out);
  return guarded([&] { *out = new catalan_realizer{catalan::realizer_from_json(json)}; });
}

catalan_status catalan_realizer_to_dot(const catalan_realizer* realizer, char** out) {
  CATALAN_REQUIRE(realizer && out);
  return guarded([&] { *out = copy_string(catalan::realizer_to_dot(realizer->value)); });
}

catalan_status catalan_realizer_code(const catalan_realizer* realizer, int colored, char** out) {
  CATALAN_REQUIRE(realizer && out);
  return guarded([&] {
    const std::string code = colored ? catalan::canonical_code(realizer->value) : catalan::canonical_code(realizer->value.triangulation());
    *out = copy_string(catalan::to_hex(code));
  });
}

catalan_status catalan_psi(const catalan_realizer* realizer, catalan_path** lower, catalan_path** upper) {
  CATALAN_REQUIRE(realizer && lower && upper);
  return guarded([&] {
    auto [p, q] = catalan::psi(realizer->value);
    auto* a = new catalan_path{std::move(p)};
    try {
      *upper = new catalan_path{std::move(q)};
    } catch (...) {
      delete a;
      throw;
    }
    *lower = a;
  });
}

catalan_status catalan_classify(const catalan_realizer* realizer, catalan_classification* out) {
  CATALAN_REQUIRE(realizer && out);
  return guarded([&] {
    const catalan::Realizer& r = realizer->value;
    catalan_classification c{};
    c.valid = catalan::validate_realizer(r).ok() ? 1 : 0;
    c.cw_triangles = catalan::find_cw_triangles(r).size();
    c.ccw_triangles = catalan::find_ccw_triangles(r).size();
    c.minimal = c.cw_triangles == 0;
    c.maximal = c.ccw_triangles == 0;
    c.min_and_max = catalan::is_min_and_max(r) ? 1 : 0;
    c.stack = catalan::is_stack(r.triangulation()) ? 1 : 0;
    *out = c;
  });
}

catalan_status catalan_census(size_t n, size_t shards, int counts_only, size_t cap, char** report_json, int* passed) {
  CATALAN_REQUIRE(report_json && passed);
  return guarded([&] {
    catalan::CensusOptions options;
    options.n = n;
    options.shards = shards;
    options.counts_only = counts_only != 0;
    options.cap = cap;
    const catalan::CensusReport report = catalan::run_census(options);
    *report_json = copy_string(report.to_json());
    *passed = report.passed ? 1 : 0;
  });
}

catalan_status catalan_hasse_dot(const char* name, size_t n, char** out) {
  CATALAN_REQUIRE(out);
  return guarded([&] { *out = copy_string(catalan::hasse_dot(lattice(name), n)); });
}

}  // extern "C"
