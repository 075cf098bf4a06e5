#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "catalan/catalan.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitIdentity = 2;
constexpr int kExitUsage = 64;

struct DomainError {
  catalan_status status;
  std::string message;
};

void check(catalan_status status) {
  if (status != CATALAN_OK) throw DomainError{status, catalan_last_error()};
}

using PathPtr = std::unique_ptr<catalan_path, decltype(&catalan_path_free)>;
using RealizerPtr = std::unique_ptr<catalan_realizer, decltype(&catalan_realizer_free)>;

std::string take(char* text) {
  std::string s(text);
  catalan_string_free(text);
  return s;
}

PathPtr path(const std::string& word) {
  catalan_path* p = nullptr;
  check(catalan_path_parse(word.c_str(), &p));
  return PathPtr(p, catalan_path_free);
}

std::string read_input(const std::string& file) {
  if (file == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(file);
  if (!in) throw DomainError{CATALAN_E_INVALID_ARGUMENT, "cannot open " + file};
  return std::string(std::istreambuf_iterator<char>(in), {});
}

RealizerPtr load_realizer(const std::string& file) {
  catalan_realizer* r = nullptr;
  check(catalan_realizer_from_json(read_input(file).c_str(), &r));
  return RealizerPtr(r, catalan_realizer_free);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(output);
  if (!out) throw DomainError{CATALAN_E_INVALID_ARGUMENT, "cannot write " + output};
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catalan lattices, Schnyder realizers and the bijection between them"};
  app.require_subcommand(1);
  const std::vector<std::string> forms{"word", "tree", "binary", "partition"};
  const std::vector<std::string> lattices{"stanley", "tamari", "kreweras"};

  std::string from = "word", to = "word", input;
  auto* convert = app.add_subcommand("convert", "Convert between Dyck words, plane trees, binary trees and partitions");
  convert->add_option("--from", from, "Input form")->check(CLI::IsMember(forms));
  convert->add_option("--to", to, "Output form")->check(CLI::IsMember(forms));
  convert->add_option("input", input, "Word or JSON value")->required();

  std::string lattice = "stanley", lower, upper;
  auto* order = app.add_subcommand("order", "Test lower <= upper in a lattice");
  order->add_option("--lattice", lattice)->check(CLI::IsMember(lattices));
  order->add_option("lower", lower)->required();
  order->add_option("upper", upper)->required();

  auto* covers = app.add_subcommand("covers", "List the elements covering a path");
  covers->add_option("--lattice", lattice)->check(CLI::IsMember(lattices));
  covers->add_option("path", lower)->required();

  bool as_dot = false, as_json = false;
  std::string output;
  auto* phi = app.add_subcommand("phi", "Build the realizer of an interval");
  phi->add_option("lower", lower)->required();
  phi->add_option("upper", upper)->required();
  auto* phi_json = phi->add_flag("--json", as_json, "JSON output (default)");
  phi->add_flag("--dot", as_dot, "Graphviz output")->excludes(phi_json);
  phi->add_option("-o,--output", output, "Output file");

  std::string file;
  auto* psi = app.add_subcommand("psi", "Recover the interval of a realizer");
  psi->add_option("--json", file, "Realizer JSON file, - for stdin")->required();

  auto* classify = app.add_subcommand("classify", "Minimal, maximal and stack verdicts for a realizer");
  classify->add_option("--json", file, "Realizer JSON file, - for stdin")->required();

  std::size_t n = 0, shards = 1, cap = 0;
  bool counts_only = false;
  auto* census = app.add_subcommand("census", "Exhaustive census of all intervals of size N");
  census->add_option("N", n)->required()->check(CLI::PositiveNumber);
  census->add_option("--shards", shards, "Parallel shards")->check(CLI::PositiveNumber);
  census->add_flag("--counts-only", counts_only, "Only count intervals");
  census->add_option("--cap", cap, "Override the size cap")->check(CLI::PositiveNumber);

  auto* hasse = app.add_subcommand("export-hasse", "Hasse diagram of a lattice in DOT");
  hasse->add_option("--lattice", lattice)->check(CLI::IsMember(lattices));
  hasse->add_option("N", n)->required()->check(CLI::PositiveNumber);
  hasse->add_flag("--dot", as_dot, "DOT output (the only format)");
  hasse->add_option("-o,--output", output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*convert) {
      char* out = nullptr;
      check(catalan_convert(from.c_str(), to.c_str(), input.c_str(), &out));
      emit(take(out), "");
    } else if (*order) {
      int result = 0;
      check(catalan_order(lattice.c_str(), path(lower).get(), path(upper).get(), &result));
      std::cout << (result ? "true" : "false") << '\n';
    } else if (*covers) {
      char* out = nullptr;
      check(catalan_covers_json(lattice.c_str(), path(lower).get(), &out));
      emit(take(out), "");
    } else if (*phi) {
      catalan_realizer* raw = nullptr;
      check(catalan_phi(path(lower).get(), path(upper).get(), &raw));
      RealizerPtr r(raw, catalan_realizer_free);
      char* out = nullptr;
      check(as_dot ? catalan_realizer_to_dot(r.get(), &out) : catalan_realizer_to_json(r.get(), &out));
      emit(take(out), output);
    } else if (*psi) {
      RealizerPtr r = load_realizer(file);
      catalan_path* p = nullptr;
      catalan_path* q = nullptr;
      check(catalan_psi(r.get(), &p, &q));
      PathPtr pp(p, catalan_path_free), qq(q, catalan_path_free);
      char* pw = nullptr;
      char* qw = nullptr;
      check(catalan_path_word(pp.get(), &pw));
      const std::string lw = take(pw);
      check(catalan_path_word(qq.get(), &qw));
      nlohmann::ordered_json j{{"lower", lw}, {"upper", take(qw)}};
      emit(j.dump(2), "");
    } else if (*classify) {
      RealizerPtr r = load_realizer(file);
      catalan_classification c{};
      check(catalan_classify(r.get(), &c));
      nlohmann::ordered_json j{{"n", catalan_realizer_size(r.get())},
                               {"valid", c.valid != 0},
                               {"minimal", c.minimal != 0},
                               {"maximal", c.maximal != 0},
                               {"min_and_max", c.min_and_max != 0},
                               {"stack", c.stack != 0},
                               {"cw_triangles", c.cw_triangles},
                               {"ccw_triangles", c.ccw_triangles}};
      emit(j.dump(2), "");
    } else if (*census) {
      if (cap) std::cerr << "warning: census cap overridden to " << cap << "; large sizes may take very long\n";
      char* out = nullptr;
      int passed = 0;
      check(catalan_census(n, shards, counts_only ? 1 : 0, cap, &out, &passed));
      emit(take(out), "");
      if (!passed) {
        std::cerr << "census: identity check failed\n";
        return kExitIdentity;
      }
    } else if (*hasse) {
      char* out = nullptr;
      check(catalan_hasse_dot(lattice.c_str(), n, &out));
      emit(take(out), output);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << catalan_status_name(e.status) << ": " << e.message << '\n';
    return kExitDomain;
  }
  return kExitOk;
}
