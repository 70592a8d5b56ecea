// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "interp/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "interp/error.hpp"
#include "interp/report.hpp"
#include "json.hpp"

namespace interp::io {

using nlohmann::json;

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  const auto e = s.find_last_not_of(" \t\r\n");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  std::size_t used = 0;
  double d = 0.0;
  try {
    d = std::stod(v, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != v.size() || v.empty()) throw ParameterError("not a number for " + key + ": '" + v + "'");
  return d;
}

double param(const OperatorSpec& s, const std::string& key, double fallback) {
  const auto it = s.params.find(key);
  return it == s.params.end() ? fallback : to_double(key, it->second);
}

int int_param(const OperatorSpec& s, const std::string& key, int fallback) {
  const double d = param(s, key, fallback);
  if (d != std::floor(d) || d < 1 || d > 1 << 26) throw ParameterError(key + " must be a positive integer");
  return static_cast<int>(d);
}

std::string json_scalar(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return format_number(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  throw ParameterError("operator parameters must be scalars");
}

}  // namespace

std::string OperatorSpec::text() const {
  std::string s = kind;
  char sep = ':';
  for (const auto& [k, v] : params) {
    s += sep;
    s += k + "=" + v;
    sep = ',';
  }
  return s;
}

OperatorSpec parse_operator_spec(const std::string& raw) {
  const std::string text = trim(raw);
  OperatorSpec spec;
  if (!text.empty() && text.front() == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParameterError(std::string("bad operator JSON: ") + e.what());
    }
    if (!j.contains("kind") || !j["kind"].is_string()) throw ParameterError("operator JSON needs a kind");
    spec.kind = j["kind"].get<std::string>();
    if (j.contains("params")) {
      for (const auto& [k, v] : j["params"].items()) spec.params[k] = json_scalar(v);
    }
    for (const auto& [k, v] : j.items())
      if (k != "kind" && k != "params") spec.params[k] = json_scalar(v);
    return spec;
  }
  const auto colon = text.find(':');
  spec.kind = trim(text.substr(0, colon));
  if (spec.kind.empty()) throw ParameterError("empty operator spec");
  if (colon == std::string::npos) return spec;
  std::stringstream ss(text.substr(colon + 1));
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty()) continue;
    const auto eq = tok.find('=');
    if (eq == std::string::npos)
      spec.params["type"] = tok;
    else
      spec.params[trim(tok.substr(0, eq))] = trim(tok.substr(eq + 1));
  }
  return spec;
}

OperatorBundle build_operator(const OperatorSpec& s) {
  OperatorBundle b;
  if (s.kind == "scalar") {
    b.op = scalar_operator(param(s, "a", 1.0));
  } else if (s.kind == "matrix") {
    const auto it = s.params.find("file");
    if (it == s.params.end()) throw ParameterError("matrix operator needs file=<csv>");
    Matrix M = read_matrix_csv(it->second);
    const auto n = M.rows();
    b.op = matrix_operator(std::move(M), NormedSpace::euclidean(n), param(s, "omega", 0.0));
  } else if (s.kind == "qlaplace") {
    const int n = int_param(s, "n", 64);
    const double q = param(s, "q", 2.0);
    b.energy = qlaplace_energy(n, q);
    b.op = qlaplace_operator(n, q);
  } else if (s.kind == "energy") {
    const auto t = s.params.count("type") ? s.params.at("type") : std::string("quadratic");
    const int dim = int_param(s, "dim", 1);
    if (t == "abs") {
      b.energy = abs_energy(dim, param(s, "c", 1.0));
    } else if (t == "quadratic") {
      Matrix Q = param(s, "c", 1.0) * Matrix::Identity(dim, dim);
      if (s.params.count("file")) Q = read_matrix_csv(s.params.at("file"));
      const auto n = Q.rows();
      b.energy = quadratic_energy(std::move(Q), NormedSpace::euclidean(n));
    } else if (t == "box") {
      b.energy = box_indicator(Vector::Constant(dim, param(s, "lo", -1.0)),
                               Vector::Constant(dim, param(s, "hi", 1.0)),
                               NormedSpace::euclidean(dim));
    } else {
      throw ParameterError("unknown energy type '" + t + "' (abs, quadratic, box)");
    }
    b.op = subgradient_operator(b.energy);
  } else {
    throw ParameterError("unknown operator kind '" + s.kind + "' (scalar, matrix, qlaplace, energy)");
  }
  if (s.params.count("shift")) {
    b.op = omega_shift(b.op, param(s, "shift", 0.0));
    b.energy = nullptr;
  }
  if (s.params.count("perturb")) {
    b.op = perturbed_operator(b.op, sine_perturbation(param(s, "perturb", 0.0)));
    b.energy = nullptr;
  }
  return b;
}

SpaceSpec parse_space(const std::string& raw) {
  const std::string text = trim(raw);
  if (text == "l1" || text == "L1") return SpaceSpec::l1();
  if (text == "linf" || text == "Linf") return SpaceSpec::linf();
  if (text == "l1capLinf" || text == "l1caplinf" || text == "L1capLinf") return SpaceSpec::l1_cap_linf();
  double theta = std::nan(""), p = 2.0;
  if (!text.empty() && text.front() == '{') {
    try {
      const json j = json::parse(text);
      const std::string kind = j.value("kind", "WeightedLp");
      if (kind != "WeightedLp") return parse_space(kind);
      theta = j.at("theta").get<double>();
      p = j.value("p", 2.0);
    } catch (const json::exception& e) {
      throw ParameterError(std::string("bad space JSON: ") + e.what());
    }
  } else {
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const auto eq = tok.find('=');
      if (eq == std::string::npos) throw ParameterError("space expects theta=..,p=..");
      const auto k = trim(tok.substr(0, eq));
      const double v = to_double(k, trim(tok.substr(eq + 1)));
      if (k == "theta") theta = v;
      else if (k == "p") p = v;
      else throw ParameterError("unknown space key '" + k + "'");
    }
  }
  return SpaceSpec::weighted_lp(theta, p);
}

std::string space_json(const SpaceSpec& s) {
  json j;
  switch (s.kind()) {
    case SpaceKind::WeightedLp: j = {{"kind", "WeightedLp"}, {"theta", s.theta()}, {"p", s.p()}}; break;
    case SpaceKind::L1: j = {{"kind", "L1"}}; break;
    case SpaceKind::Linf: j = {{"kind", "Linf"}}; break;
    case SpaceKind::L1capLinf: j = {{"kind", "L1capLinf"}}; break;
  }
  if (s.kind() != SpaceKind::WeightedLp) j["theta"] = j["p"] = nullptr;
  return j.dump();
}

Vector parse_vector(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(to_double("vector entry", trim(tok)));
  if (v.empty()) throw ParameterError("empty vector");
  return Eigen::Map<Vector>(v.data(), static_cast<Eigen::Index>(v.size()));
}

Matrix read_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open matrix file " + path);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    std::vector<double> r;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) r.push_back(to_double("matrix entry", trim(tok)));
    rows.push_back(std::move(r));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) throw ParameterError("matrix file is empty: " + path);
  Matrix M(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n) throw ParameterError("matrix must be square: " + path);
    for (Eigen::Index j = 0; j < n; ++j) M(i, j) = rows[i][j];
  }
  return M;
}

std::string grid_function_csv(const GridFunction& f, const std::string& column) {
  std::ostringstream os;
  os << "t," << column << "\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    os << format_number(f.grid().node(i)) << "," << format_number(f[i]) << "\n";
  return os.str();
}

std::string k_profile_csv(const KProfile& p) { return grid_function_csv(p.k_over_t, "K_over_t"); }

std::string trajectory_csv(const Trajectory& tr) {
  std::ostringstream os;
  os << "t";
  const auto d = tr.x0.size();
  for (Eigen::Index k = 0; k < d; ++k) os << ",u_" << k;
  const bool err = tr.error.size() == tr.times.size();
  if (err) os << ",error";
  os << "\n";
  for (std::size_t i = 0; i < tr.times.size(); ++i) {
    os << format_number(tr.times[i]);
    for (Eigen::Index k = 0; k < d; ++k) os << "," << format_number(tr.states[i][k]);
    if (err) os << "," << format_number(tr.error[i]);
    os << "\n";
  }
  return os.str();
}

std::string trajectory_json(const Trajectory& tr) {
  json j;
  j["schema_version"] = 1;
  j["operator"] = tr.op_id;
  j["scheme"] = to_string(tr.scheme);
  j["steps"] = tr.steps;
  j["max_dt"] = tr.max_dt;
  j["omega"] = tr.omega;
  j["times"] = tr.times;
  j["cauchy"] = tr.cauchy;
  j["error"] = tr.error;
  json states = json::array();
  for (const auto& s : tr.states) states.push_back(std::vector<double>(s.data(), s.data() + s.size()));
  j["states"] = std::move(states);
  return j.dump(2);
}

void write_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw ParameterError("cannot write " + path);
  out << content;
}

}  // namespace interp::io
