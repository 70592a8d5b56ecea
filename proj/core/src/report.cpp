// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include "interp/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace interp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Withheld: return "withheld";
  }
  return "fail";
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

bool InequalityRow::holds() const {
  if (std::isnan(lhs) || std::isnan(rhs) || std::isnan(slack)) return false;
  if (std::isinf(rhs) && rhs > 0) return true;
  return lhs <= rhs + slack;
}

void TheoremReport::add(std::string chain, double node_t, double lhs, double rhs,
                        double constant, double slack, bool certified) {
  rows_.push_back({std::move(chain), node_t, lhs, rhs, constant, slack, certified});
}

void TheoremReport::withhold(std::string reason) { withheld_.push_back(std::move(reason)); }

void TheoremReport::merge(const TheoremReport& other, const std::string& prefix) {
  for (auto r : other.rows_) {
    r.chain = prefix + r.chain;
    rows_.push_back(std::move(r));
  }
  for (const auto& [k, v] : other.metrics_) metrics_.emplace_back(prefix + k, v);
  for (const auto& n : other.notes_) notes_.push_back(prefix + n);
  for (const auto& w : other.withheld_) withheld_.push_back(prefix + w);
}

double TheoremReport::metric_or(const std::string& key, double fallback) const {
  for (const auto& [k, v] : metrics_)
    if (k == key) return v;
  return fallback;
}

Verdict TheoremReport::verdict() const {
  if (!withheld_.empty()) return Verdict::Withheld;
  return violations() == 0 ? Verdict::Pass : Verdict::Fail;
}

std::size_t TheoremReport::violations() const {
  return static_cast<std::size_t>(
      std::count_if(rows_.begin(), rows_.end(), [](const InequalityRow& r) { return !r.holds(); }));
}

double TheoremReport::worst_ratio() const {
  double worst = 0.0;
  for (const auto& r : rows_) {
    const double den = r.rhs + r.slack;
    if (den > 0.0 && std::isfinite(den) && std::isfinite(r.lhs))
      worst = std::max(worst, r.lhs / den);
  }
  return worst;
}

namespace {

nlohmann::ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

}  // namespace

std::string TheoremReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["theorem"] = theorem_;
  j["instance"] = instance_;
  j["verdict"] = to_string(verdict());
  j["pass"] = passed();
  j["violations"] = violations();
  j["worst_ratio"] = number(worst_ratio());
  nlohmann::ordered_json m = nlohmann::ordered_json::object();
  for (const auto& [k, v] : metrics_) m[k] = number(v);
  j["metrics"] = m;
  j["notes"] = notes_;
  j["withheld"] = withheld_;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : rows_) {
    nlohmann::ordered_json o;
    o["chain"] = r.chain;
    o["node_t"] = number(r.node_t);
    o["lhs"] = number(r.lhs);
    o["rhs"] = number(r.rhs);
    o["constant"] = number(r.constant);
    o["slack"] = number(r.slack);
    o["certified"] = r.certified;
    o["pass"] = r.holds();
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  return j.dump(2);
}

std::string TheoremReport::to_csv(bool header) const {
  std::ostringstream os;
  if (header) os << "theorem,instance,chain,node_t,lhs,rhs,constant,slack,residual,pass\n";
  for (const auto& r : rows_) {
    os << theorem_ << ',' << '"' << instance_ << '"' << ',' << r.chain << ','
       << format_number(r.node_t) << ',' << format_number(r.lhs) << ',' << format_number(r.rhs)
       << ',' << format_number(r.constant) << ',' << format_number(r.slack) << ','
       << format_number(r.residual()) << ',' << (r.holds() ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string summary_table(const std::vector<TheoremReport>& reports) {
  std::ostringstream os;
  os << std::left << std::setw(16) << "theorem" << std::setw(44) << "instance" << std::setw(10)
     << "verdict" << std::setw(8) << "rows" << std::setw(12) << "violations"
     << "worst_ratio\n";
  for (const auto& r : reports) {
    std::string inst = r.instance();
    if (inst.size() > 42) inst = inst.substr(0, 39) + "...";
    os << std::left << std::setw(16) << r.theorem() << std::setw(44) << inst << std::setw(10)
       << to_string(r.verdict()) << std::setw(8) << r.rows().size() << std::setw(12)
       << r.violations() << format_number(r.worst_ratio()) << '\n';
  }
  return os.str();
}

}  // namespace interp
