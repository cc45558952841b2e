// weylindex: degrees, Chern indices and Euler characteristics of reductive
// groups from a JSON job file.
//
//   weylindex compute job.json [--method both] [--flag-path] [--format structured]
//   weylindex check job.json
//   weylindex selftest
//
// Exit status: 0 ok, 1 invalid input, 2 computation failed, 3 two
// computation paths disagreed (a bug, never bad input).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "weylindex/error.hpp"
#include "weylindex/job.hpp"

namespace wi = weylindex;

namespace {

enum Exit { kOk = 0, kInvalid = 1, kFailed = 2, kDisagree = 3 };

int exit_code(wi::Errc code) {
  switch (code) {
    case wi::Errc::config_invalid:
    case wi::Errc::invalid_cartan_type:
    case wi::Errc::length_mismatch:
    case wi::Errc::malformed_rational:
    case wi::Errc::singular_lattice:
    case wi::Errc::weight_outside_lattice:
    case wi::Errc::index_out_of_range:
    case wi::Errc::wrong_argument_count:
      return kInvalid;
    case wi::Errc::cross_check_failed:
      return kDisagree;
    default:
      return kFailed;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw wi::Error(wi::Errc::config_invalid, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Overrides {
  std::string method;
  bool flag_path = false;
  std::string format = "text";
};

wi::JobConfig load(const std::string& path, const Overrides& o) {
  auto cfg = wi::parse_config(read_file(path));
  if (!o.method.empty()) cfg.method = wi::parse_method(o.method);
  if (o.flag_path) cfg.flag_path = true;
  return cfg;
}

// Every job here asks for both integration methods and, where the polytope
// is regular, the flag path as well; run() throws on any disagreement.
const char* const kSelftestJobs[] = {
    R"({"group": {"factors": [{"type": "A", "rank": 1}]},
        "representation": {"highest_weight": [1]},
        "tasks": ["degree", "chern:1", "chern:2", "euler"],
        "options": {"method": "both", "flag_path": true}})",
    R"({"group": {"factors": [{"type": "A", "rank": 1}]},
        "representation": {"highest_weight": [3]},
        "tasks": ["degree", "chern:1", "chern:2", "euler"],
        "options": {"method": "both", "flag_path": true}})",
    R"({"group": {"factors": [{"type": "A", "rank": 1}, {"type": "A", "rank": 1}]},
        "representation": {"highest_weight": [1, 1]},
        "tasks": ["degree", "chern:1", "chern:2", "chern:3", "chern:4", "euler"],
        "options": {"method": "both", "flag_path": true}})",
    R"({"group": {"factors": [{"type": "A", "rank": 2}]},
        "lattice": "adjoint",
        "representation": {"highest_weight": [1, 1]},
        "tasks": ["degree", "chern:1", "chern:3", "chern:6", "euler", "orbits"],
        "options": {"method": "both", "flag_path": true}})",
    R"({"group": {"factors": [{"type": "B", "rank": 2}]},
        "representation": {"highest_weight": [1, 1]},
        "tasks": ["degree", "chern:2", "chern:8", "euler"],
        "options": {"method": "both", "flag_path": true}})",
    R"({"group": {"factors": [{"type": "A", "rank": 1}], "central_rank": 1},
        "representation": {"weights": [[1, 1], [1, -1], [1, 0], [-1, 1]]},
        "tasks": ["degree", "chern:0", "euler"],
        "options": {"method": "both"}})",
};

int selftest() {
  int failures = 0;
  for (const char* job : kSelftestJobs) {
    try {
      auto reports = wi::run(wi::parse_config(job));
      for (const auto& r : reports) {
        std::cout << "ok    " << r.group << " " << r.task;
        if (r.value) std::cout << " = " << wi::to_string(*r.value);
        std::cout << "\n";
      }
    } catch (const wi::Error& e) {
      ++failures;
      std::cout << "FAIL  " << e.what() << "\n";
    }
  }
  std::cout << (failures ? "selftest failed\n" : "selftest passed\n");
  return failures ? kDisagree : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Enumerative invariants of reductive groups from root data and weight polytopes"};
  app.require_subcommand(1);

  Overrides o;
  std::string config_path;

  auto* compute = app.add_subcommand("compute", "run every task of a job file");
  compute->add_option("config", config_path, "job file (JSON)")->required();
  compute->add_option("--method", o.method, "monomial, polarization or both")
      ->check(CLI::IsMember({"monomial", "polarization", "both"}));
  compute->add_flag("--flag-path", o.flag_path, "also compute Chern indices through the flag subdivision");
  compute->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));

  auto* check = app.add_subcommand("check", "validate a job file without computing");
  check->add_option("config", config_path, "job file (JSON)")->required();

  auto* self = app.add_subcommand("selftest", "run the built-in dual-path suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInvalid;
  }

  try {
    if (*self) return selftest();
    auto cfg = load(config_path, o);
    if (*check) {
      std::cout << config_path << ": ok (" << cfg.root_system().describe() << ", " << cfg.tasks.size()
                << " tasks)\n";
      return kOk;
    }
    auto reports = wi::run(cfg);
    std::cout << wi::render(reports, wi::parse_format(o.format));
    return kOk;
  } catch (const wi::Error& e) {
    std::cerr << "weylindex: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "weylindex: " << e.what() << "\n";
    return kFailed;
  }
}
