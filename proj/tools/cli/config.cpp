#include "cli/config.hpp"

#include <fstream>
#include <set>

#include "qns/errors.hpp"

namespace qns::cli {
namespace {

using nlohmann::json;

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

double get_number(const json& v, const std::string& name) {
  if (!v.is_number()) throw ConfigError(name + ": expected a number");
  return v.get<double>();
}

int get_int(const json& v, const std::string& name) {
  if (!v.is_number_integer()) throw ConfigError(name + ": expected an integer");
  return v.get<int>();
}

std::uint64_t get_seed(const json& v, const std::string& name) {
  if (!v.is_number_unsigned()) throw ConfigError(name + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

bool get_bool(const json& v, const std::string& name) {
  if (!v.is_boolean()) throw ConfigError(name + ": expected true or false");
  return v.get<bool>();
}

std::string get_string(const json& v, const std::string& name) {
  if (!v.is_string()) throw ConfigError(name + ": expected a string");
  return v.get<std::string>();
}

ThetaMatrix parse_theta(const json& v, int d) {
  if (v.is_number()) {
    if (d != 2) throw ConfigError("theta: a scalar needs d = 2");
    return ThetaMatrix::planar(v.get<double>());
  }
  if (!v.is_array() || static_cast<int>(v.size()) != d) throw ConfigError("theta: expected a number or a d x d matrix");
  std::vector<double> e;
  for (const auto& row : v) {
    if (!row.is_array() || static_cast<int>(row.size()) != d) throw ConfigError("theta: rows must have d entries");
    for (const auto& x : row) e.push_back(get_number(x, "theta entry"));
  }
  try {
    return ThetaMatrix(d, e);
  } catch (const PreconditionError& err) {
    throw ConfigError(std::string("theta: ") + err.what());
  }
}

}  // namespace

RunConfig parse_run_config(const json& doc) {
  only_keys(doc,
            {"grid", "theta", "viscosity", "nonlinearity", "scheme", "dt", "T", "picard_iters", "snapshot_stride",
             "deterministic", "seed", "initial_condition", "norm_ceiling", "divergence_form", "output", "verify",
             "sweep", "input_snapshot"},
            "config");
  RunConfig rc;
  SolverConfig& s = rc.solver;
  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    only_keys(g, {"d", "K", "L"}, "grid");
    if (g.contains("d")) s.d = get_int(g["d"], "grid.d");
    if (g.contains("K")) s.K = get_int(g["K"], "grid.K");
    if (g.contains("L")) s.L = get_number(g["L"], "grid.L");
  }
  if (s.d < 2) throw ConfigError("grid.d must be >= 2");
  s.theta = doc.contains("theta") ? parse_theta(doc["theta"], s.d) : ThetaMatrix(s.d);
  if (doc.contains("viscosity")) s.viscosity = get_number(doc["viscosity"], "viscosity");
  if (doc.contains("nonlinearity")) {
    const auto f = get_string(doc["nonlinearity"], "nonlinearity");
    if (f == "A") {
      s.form = Nonlinearity::A;
    } else if (f == "S") {
      s.form = Nonlinearity::S;
    } else {
      throw ConfigError("nonlinearity: expected \"A\" or \"S\"");
    }
  }
  if (doc.contains("scheme")) {
    const auto f = get_string(doc["scheme"], "scheme");
    if (f == "ETDRK2") {
      s.scheme = Scheme::ETDRK2;
    } else if (f == "Picard") {
      s.scheme = Scheme::Picard;
    } else {
      throw ConfigError("scheme: expected \"ETDRK2\" or \"Picard\"");
    }
  }
  if (doc.contains("dt")) s.dt = get_number(doc["dt"], "dt");
  if (doc.contains("T")) s.T = get_number(doc["T"], "T");
  if (doc.contains("picard_iters")) s.picard_iters = get_int(doc["picard_iters"], "picard_iters");
  if (doc.contains("snapshot_stride")) s.snapshot_stride = get_int(doc["snapshot_stride"], "snapshot_stride");
  if (doc.contains("deterministic")) s.deterministic = get_bool(doc["deterministic"], "deterministic");
  if (doc.contains("seed")) s.seed = get_seed(doc["seed"], "seed");
  if (doc.contains("norm_ceiling")) s.norm_ceiling = get_number(doc["norm_ceiling"], "norm_ceiling");
  if (doc.contains("divergence_form")) s.divergence_form = get_bool(doc["divergence_form"], "divergence_form");

  s.initial.seed = s.seed;
  if (doc.contains("initial_condition")) {
    const auto& ic = doc["initial_condition"];
    only_keys(ic, {"type", "amplitude", "band", "seed", "self_adjoint"}, "initial_condition");
    if (ic.contains("type")) s.initial.type = get_string(ic["type"], "initial_condition.type");
    if (ic.contains("amplitude")) s.initial.amplitude = get_number(ic["amplitude"], "initial_condition.amplitude");
    if (ic.contains("band")) s.initial.band = get_int(ic["band"], "initial_condition.band");
    if (ic.contains("seed")) s.initial.seed = get_seed(ic["seed"], "initial_condition.seed");
    if (ic.contains("self_adjoint")) s.initial.self_adjoint = get_bool(ic["self_adjoint"], "initial_condition.self_adjoint");
  }
  static const std::set<std::string> types{"taylor_green", "gaussian_vortex_pair", "random_bandlimited", "zero"};
  if (!types.count(s.initial.type)) throw ConfigError("initial_condition.type: unknown '" + s.initial.type + "'");

  if (doc.contains("output")) {
    const auto& o = doc["output"];
    only_keys(o, {"dir"}, "output");
    if (o.contains("dir")) rc.out_dir = get_string(o["dir"], "output.dir");
  }
  if (doc.contains("verify")) {
    const auto& v = doc["verify"];
    only_keys(v, {"seed", "trials", "suites"}, "verify");
    if (v.contains("seed")) rc.verify.seed = get_seed(v["seed"], "verify.seed");
    if (v.contains("trials")) rc.verify.trials = get_int(v["trials"], "verify.trials");
    if (v.contains("suites")) {
      if (!v["suites"].is_array()) throw ConfigError("verify.suites: expected an array");
      rc.verify.suites.clear();
      for (const auto& x : v["suites"]) {
        const auto name = get_string(x, "verify.suites entry");
        if (name != "battery" && name != "algebra" && name != "flow") {
          throw ConfigError("verify.suites: unknown suite '" + name + "'");
        }
        rc.verify.suites.push_back(name);
      }
    }
    if (rc.verify.trials < 1) throw ConfigError("verify.trials must be >= 1");
  }
  if (doc.contains("sweep")) {
    const auto& sw = doc["sweep"];
    only_keys(sw, {"thetas"}, "sweep");
    if (sw.contains("thetas")) {
      if (!sw["thetas"].is_array()) throw ConfigError("sweep.thetas: expected an array");
      rc.sweep_thetas.clear();
      for (const auto& x : sw["thetas"]) rc.sweep_thetas.push_back(get_number(x, "sweep.thetas entry"));
    }
  }
  if (doc.contains("input_snapshot")) rc.input_snapshot = get_string(doc["input_snapshot"], "input_snapshot");

  try {
    s.validate();
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
  return rc;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + ": " + e.what());
  }
  return parse_run_config(doc);
}

}  // namespace qns::cli
