#include "weylindex/job.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "weylindex/error.hpp"

namespace weylindex {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& field, const std::string& what) {
  throw Error(Errc::config_invalid, field + ": " + what);
}

void allow_keys(const json& obj, const std::string& field, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) invalid(field, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; }))
      invalid(field + "/" + key, "unknown field");
  }
}

const json& require(const json& obj, const std::string& field, const char* key) {
  if (!obj.contains(key)) invalid(field + "/" + key, "missing required field");
  return obj.at(key);
}

int as_int(const json& v, const std::string& field) {
  if (!v.is_number_integer()) invalid(field, "expected an integer");
  return v.get<int>();
}

Rational as_rational(const json& v, const std::string& field) {
  if (v.is_number_integer()) return Rational(Integer(v.dump(), 10));
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const Error& e) {
      invalid(field, e.what());
    }
  }
  invalid(field, "expected an integer or a rational string such as \"3/2\"");
}

WeightVector as_vector(const json& v, const std::string& field, std::size_t k) {
  if (!v.is_array()) invalid(field, "expected a list");
  if (v.size() != k)
    invalid(field, "expected " + std::to_string(k) + " coordinates, got " + std::to_string(v.size()));
  WeightVector out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_rational(v[i], field + "/" + std::to_string(i)));
  return out;
}

std::vector<WeightVector> as_vector_list(const json& v, const std::string& field, std::size_t k) {
  if (!v.is_array() || v.empty()) invalid(field, "expected a nonempty list of weights");
  std::vector<WeightVector> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(as_vector(v[i], field + "/" + std::to_string(i), k));
  return out;
}

TaskSpec parse_task(const std::string& label, const std::string& field) {
  using Kind = TaskSpec::Kind;
  if (label == "degree") return {Kind::degree, -1, label};
  if (label == "euler") return {Kind::euler, -1, label};
  if (label == "orbits") return {Kind::orbits, -1, label};
  if (label == "regularity") return {Kind::regularity, -1, label};
  if (label == "mixed") return {Kind::mixed, -1, label};
  if (label.rfind("chern:", 0) == 0) {
    std::string digits = label.substr(6);
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
      invalid(field, "malformed Chern task '" + label + "'");
    return {Kind::chern, std::stoi(digits), label};
  }
  invalid(field, "unknown task '" + label + "'");
}

void check_cosets(const std::vector<WeightVector>& weights, const LatticeSpec& lattice, const std::string& field) {
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (!lattice.contains(sub(weights[i], weights.front())))
      invalid(field + "/" + std::to_string(i), "weight " + to_string(weights[i]) +
                                                   " is not congruent to the first weight modulo the lattice");
}

}  // namespace

MethodChoice parse_method(std::string_view name) {
  if (name == "monomial") return MethodChoice::monomial;
  if (name == "polarization") return MethodChoice::polarization;
  if (name == "both") return MethodChoice::both;
  throw Error(Errc::config_invalid, "method must be monomial, polarization or both, got '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::text;
  if (name == "structured") return OutputFormat::structured;
  throw Error(Errc::config_invalid, "format must be text or structured, got '" + std::string(name) + "'");
}

RootSystem JobConfig::root_system() const { return build_root_system(factors, central_rank); }

LatticeSpec JobConfig::lattice() const {
  auto rs = root_system();
  if (lattice_basis) return LatticeSpec::from_basis(*lattice_basis, "custom");
  if (lattice_name == "adjoint") return LatticeSpec::adjoint(rs);
  return LatticeSpec::simply_connected(rs);
}

std::vector<WeightVector> JobConfig::representation_weights() const {
  if (highest_weight) return {*highest_weight};
  return weights;
}

JobConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::config_invalid, std::string("malformed JSON: ") + e.what());
  }
  allow_keys(doc, "", {"schema_version", "description", "group", "lattice", "representation", "weight_lists", "tasks",
                       "options"});
  if (doc.contains("schema_version") && as_int(doc["schema_version"], "/schema_version") != kSchemaVersion)
    invalid("/schema_version", "unsupported schema version");
  if (doc.contains("description") && !doc["description"].is_string()) invalid("/description", "expected a string");

  JobConfig cfg;
  const auto& group = require(doc, "", "group");
  allow_keys(group, "/group", {"factors", "central_rank"});
  if (group.contains("factors")) {
    const auto& factors = group["factors"];
    if (!factors.is_array()) invalid("/group/factors", "expected a list");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const std::string field = "/group/factors/" + std::to_string(i);
      allow_keys(factors[i], field, {"type", "rank"});
      const auto& type = require(factors[i], field, "type");
      if (!type.is_string() || type.get<std::string>().size() != 1) invalid(field + "/type", "expected a letter A-G");
      CartanType t{type.get<std::string>()[0], as_int(require(factors[i], field, "rank"), field + "/rank")};
      try {
        cartan_matrix(t);
      } catch (const Error& e) {
        invalid(field, e.what());
      }
      cfg.factors.push_back(t);
    }
  }
  if (group.contains("central_rank")) {
    cfg.central_rank = as_int(group["central_rank"], "/group/central_rank");
    if (cfg.central_rank < 0) invalid("/group/central_rank", "must be nonnegative");
  }
  const RootSystem rs = cfg.root_system();
  const std::size_t k = rs.total_rank;
  const int n = rs.dimension();
  if (k == 0) invalid("/group", "the group has rank 0");

  if (doc.contains("lattice")) {
    const auto& lat = doc["lattice"];
    if (lat.is_string()) {
      cfg.lattice_name = lat.get<std::string>();
      if (cfg.lattice_name != "simply_connected" && cfg.lattice_name != "adjoint")
        invalid("/lattice", "expected \"simply_connected\", \"adjoint\" or {\"basis\": ...}");
    } else {
      allow_keys(lat, "/lattice", {"basis"});
      const auto& rows = require(lat, "/lattice", "basis");
      if (!rows.is_array() || rows.size() != k) invalid("/lattice/basis", "expected " + std::to_string(k) + " rows");
      linalg::Matrix basis;
      for (std::size_t r = 0; r < k; ++r) basis.push_back(as_vector(rows[r], "/lattice/basis/" + std::to_string(r), k));
      if (!linalg::inverse(basis)) invalid("/lattice/basis", "basis matrix is singular");
      cfg.lattice_name = "custom";
      cfg.lattice_basis = std::move(basis);
    }
  }
  const LatticeSpec lattice = cfg.lattice();
  // A character lattice contains the roots; otherwise Weyl orbits leave the
  // coset of the given weights.
  for (const auto& alpha : rs.simple_roots)
    if (!lattice.contains(alpha)) invalid("/lattice", "lattice does not contain the simple root " + to_string(alpha));

  bool needs_representation = false, needs_lists = false;
  const auto& tasks = require(doc, "", "tasks");
  if (!tasks.is_array()) invalid("/tasks", "expected a list");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string field = "/tasks/" + std::to_string(i);
    if (!tasks[i].is_string()) invalid(field, "expected a task name");
    auto task = parse_task(tasks[i].get<std::string>(), field);
    if (task.kind == TaskSpec::Kind::chern && task.parameter > n - static_cast<int>(k))
      invalid(field, "Chern index " + std::to_string(task.parameter) + " outside [0, " +
                         std::to_string(n - static_cast<int>(k)) + "]");
    if (task.kind == TaskSpec::Kind::mixed)
      needs_lists = true;
    else
      needs_representation = true;
    cfg.tasks.push_back(std::move(task));
  }

  if (doc.contains("representation")) {
    const auto& rep = doc["representation"];
    allow_keys(rep, "/representation", {"highest_weight", "weights"});
    if (rep.contains("highest_weight") == rep.contains("weights"))
      invalid("/representation", "give exactly one of highest_weight and weights");
    if (rep.contains("highest_weight")) {
      cfg.highest_weight = as_vector(rep["highest_weight"], "/representation/highest_weight", k);
    } else {
      cfg.weights = as_vector_list(rep["weights"], "/representation/weights", k);
      check_cosets(cfg.weights, lattice, "/representation/weights");
    }
  } else if (needs_representation) {
    invalid("/representation", "missing required field");
  }

  if (doc.contains("weight_lists")) {
    const auto& lists = doc["weight_lists"];
    if (!lists.is_array() || lists.size() != static_cast<std::size_t>(n))
      invalid("/weight_lists", "expected " + std::to_string(n) + " weight lists (the group dimension)");
    for (std::size_t i = 0; i < lists.size(); ++i) {
      const std::string field = "/weight_lists/" + std::to_string(i);
      cfg.weight_lists.push_back(as_vector_list(lists[i], field, k));
      check_cosets(cfg.weight_lists.back(), lattice, field);
    }
  } else if (needs_lists) {
    invalid("/weight_lists", "the mixed task needs weight_lists");
  }

  if (doc.contains("options")) {
    const auto& opts = doc["options"];
    allow_keys(opts, "/options", {"method", "flag_path"});
    if (opts.contains("method")) {
      if (!opts["method"].is_string()) invalid("/options/method", "expected a string");
      try {
        cfg.method = parse_method(opts["method"].get<std::string>());
      } catch (const Error& e) {
        invalid("/options/method", e.what());
      }
    }
    if (opts.contains("flag_path")) {
      if (!opts["flag_path"].is_boolean()) invalid("/options/flag_path", "expected true or false");
      cfg.flag_path = opts["flag_path"].get<bool>();
    }
  }
  return cfg;
}

namespace {

std::vector<IntegrationMethod> methods_of(MethodChoice m) {
  switch (m) {
    case MethodChoice::monomial: return {IntegrationMethod::monomial};
    case MethodChoice::polarization: return {IntegrationMethod::polarization};
    case MethodChoice::both: return {IntegrationMethod::monomial, IntegrationMethod::polarization};
  }
  return {};
}

const char* quantity_of(TaskSpec::Kind kind) {
  switch (kind) {
    case TaskSpec::Kind::degree: return "degree";
    case TaskSpec::Kind::chern: return "chern_index";
    case TaskSpec::Kind::euler: return "euler_characteristic";
    case TaskSpec::Kind::orbits: return "face_census";
    case TaskSpec::Kind::regularity: return "regularity";
    case TaskSpec::Kind::mixed: return "mixed_degree";
  }
  return "";
}

IndexReport run_task(const JobConfig& cfg, const TaskSpec& task, const RootSystem& rs, const LatticeSpec& lattice) {
  using Kind = TaskSpec::Kind;
  auto start = std::chrono::steady_clock::now();
  IndexReport report;
  report.task = task.label;
  report.quantity = quantity_of(task.kind);
  report.parameter = task.parameter;
  report.group = rs.describe();
  report.lattice = lattice.name;

  const auto weights = task.kind == Kind::mixed ? cfg.weight_lists.front() : cfg.representation_weights();
  const Polytope polytope = weight_polytope(rs, lattice, weights);
  report.vertex_count = polytope.vertices.size();
  report.facet_count = polytope.facets.size();
  const auto verdict = is_regular(polytope, rs, lattice);
  report.regular = verdict.regular;
  report.regularity_reason = verdict.reason;

  auto record = [&](const std::string& path, const IndexResult& r) {
    report.paths.push_back({path, r.value});
    report.degenerate = report.degenerate || r.degenerate;
  };

  for (auto method : methods_of(cfg.method)) {
    const std::string path = std::string("direct/") + to_string(method);
    switch (task.kind) {
      case Kind::degree: record(path, degree(rs, lattice, weights, method)); break;
      case Kind::chern: record(path, chern_index(rs, lattice, weights, task.parameter, method)); break;
      case Kind::euler: record(path, euler_characteristic(rs, lattice, weights, method)); break;
      case Kind::mixed: record(path, mixed_degree(rs, lattice, cfg.weight_lists, method)); break;
      case Kind::orbits:
      case Kind::regularity: break;
    }
  }
  if (cfg.flag_path) {
    const int top = rs.dimension() - rs.total_rank;
    switch (task.kind) {
      case Kind::degree: record("flag", chern_index_flag_path(rs, lattice, weights, 0)); break;
      case Kind::chern: record("flag", chern_index_flag_path(rs, lattice, weights, task.parameter)); break;
      case Kind::euler: {
        const int n = rs.dimension();
        Rational total = 0;
        for (int j = 0; j <= top; ++j) {
          Rational v = chern_index_flag_path(rs, lattice, weights, j).value;
          total += (j % 2 == 0) ? v : Rational(-v);
        }
        if ((n - 1) % 2 != 0) total = -total;
        record("flag", {total, false});
        break;
      }
      default: break;
    }
  }
  if (task.kind == Kind::orbits) report.census = face_census(polytope, rs);

  if (!report.paths.empty()) {
    report.value = report.paths.front().value;
    for (const auto& p : report.paths) {
      if (p.value != *report.value)
        throw Error(Errc::cross_check_failed, "path " + p.path + " gives " + to_string(p.value) + " but " +
                                                  report.paths.front().path + " gives " + to_string(*report.value));
      if (!is_integer(p.value))
        throw Error(Errc::cross_check_failed, "path " + p.path + " gives the non-integer " + to_string(p.value));
    }
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::size_t thread_budget() {
  if (const char* env = std::getenv("WEYLINDEX_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

}  // namespace

std::vector<IndexReport> run(const JobConfig& config) {
  const RootSystem rs = config.root_system();
  const LatticeSpec lattice = config.lattice();
  const std::size_t count = config.tasks.size();
  std::vector<IndexReport> reports(count);
  std::vector<std::exception_ptr> failures(count);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < count; t = next++) {
      try {
        reports[t] = run_task(config, config.tasks[t], rs, lattice);
      } catch (...) {
        failures[t] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::min(thread_budget(), count);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  for (std::size_t t = 0; t < count; ++t) {
    if (!failures[t]) continue;
    try {
      std::rethrow_exception(failures[t]);
    } catch (const Error& e) {
      throw Error(e.code(), "task '" + config.tasks[t].label + "': " + e.what());
    }
  }
  return reports;
}

namespace {

json report_to_json(const IndexReport& r) {
  json j;
  j["task"] = r.task;
  j["quantity"] = r.quantity;
  if (r.parameter >= 0) j["parameter"] = r.parameter;
  j["group"] = r.group;
  j["lattice"] = r.lattice;
  j["polytope"] = {{"vertices", r.vertex_count},
                   {"facets", r.facet_count},
                   {"regular", r.regular},
                   {"regularity_reason", r.regularity_reason}};
  j["value"] = r.value ? json(to_string(*r.value)) : json(nullptr);
  j["paths"] = json::array();
  for (const auto& p : r.paths) j["paths"].push_back({{"path", p.path}, {"value", to_string(p.value)}});
  j["degenerate"] = r.degenerate;
  if (!r.census.empty()) {
    j["census"] = json::array();
    for (const auto& row : r.census) j["census"].push_back({{"codim", row.codim}, {"faces", row.faces}, {"orbits", row.orbits}});
  }
  return j;
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string render_text(const std::vector<IndexReport>& reports) {
  std::ostringstream out;
  if (reports.empty()) return "no tasks\n";
  const auto& first = reports.front();
  out << "group    " << first.group << "\n"
      << "lattice  " << first.lattice << "\n"
      << "polytope " << first.vertex_count << " vertices, " << first.facet_count << " facets, "
      << (first.regular ? "regular" : "not regular: " + first.regularity_reason) << "\n\n";

  std::vector<std::vector<std::string>> rows{{"task", "value", "paths", "notes", "time"}};
  for (const auto& r : reports) {
    std::string paths;
    for (const auto& p : r.paths) paths += (paths.empty() ? "" : ",") + p.path;
    std::string notes = r.degenerate ? "degenerate (dim P cap D < k)" : "";
    std::string value = r.value ? to_string(*r.value) : (r.quantity == "regularity" ? (r.regular ? "yes" : "no") : "-");
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << r.seconds << "s";
    rows.push_back({r.task, value, paths.empty() ? "-" : paths, notes, t.str()});
  }
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) line += pad(row[c], widths[c] + 2);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << "\n";
  }

  for (const auto& r : reports) {
    if (r.quantity == "regularity") out << "\n" << r.task << ": " << r.regularity_reason << "\n";
    if (r.census.empty()) continue;
    out << "\n" << r.task << ": codim  faces  orbits\n";
    for (const auto& row : r.census)
      out << std::string(r.task.size() + 2, ' ') << std::setw(5) << row.codim << "  " << std::setw(5) << row.faces
          << "  " << std::setw(6) << row.orbits << "\n";
  }
  return out.str();
}

}  // namespace

std::string render(const std::vector<IndexReport>& reports, OutputFormat format) {
  if (format == OutputFormat::text) return render_text(reports);
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["reports"] = json::array();
  for (const auto& r : reports) doc["reports"].push_back(report_to_json(r));
  return doc.dump(2) + "\n";
}

std::vector<IndexReport> parse_reports(std::string_view structured) {
  json doc;
  try {
    doc = json::parse(structured.begin(), structured.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::config_invalid, std::string("malformed report JSON: ") + e.what());
  }
  if (!doc.contains("schema_version") || doc["schema_version"] != kSchemaVersion)
    throw Error(Errc::config_invalid, "unsupported report schema version");
  std::vector<IndexReport> out;
  try {
    for (const auto& j : doc.at("reports")) {
      IndexReport r;
      r.task = j.at("task").get<std::string>();
      r.quantity = j.at("quantity").get<std::string>();
      r.parameter = j.value("parameter", -1);
      r.group = j.at("group").get<std::string>();
      r.lattice = j.at("lattice").get<std::string>();
      const auto& poly = j.at("polytope");
      r.vertex_count = poly.at("vertices").get<std::size_t>();
      r.facet_count = poly.at("facets").get<std::size_t>();
      r.regular = poly.at("regular").get<bool>();
      r.regularity_reason = poly.at("regularity_reason").get<std::string>();
      if (!j.at("value").is_null()) r.value = parse_rational(j.at("value").get<std::string>());
      for (const auto& p : j.at("paths"))
        r.paths.push_back({p.at("path").get<std::string>(), parse_rational(p.at("value").get<std::string>())});
      r.degenerate = j.at("degenerate").get<bool>();
      if (j.contains("census"))
        for (const auto& row : j["census"])
          r.census.push_back({row.at("codim").get<int>(), row.at("faces").get<std::size_t>(),
                              row.at("orbits").get<std::size_t>()});
      out.push_back(std::move(r));
    }
  } catch (const json::exception& e) {
    throw Error(Errc::config_invalid, std::string("malformed report: ") + e.what());
  }
  return out;
}

}  // namespace weylindex
