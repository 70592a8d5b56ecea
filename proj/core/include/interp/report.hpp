// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace interp {

inline constexpr int kReportSchemaVersion = 1;

enum class Verdict { Pass, Fail, Withheld };
std::string to_string(Verdict v);

// One inequality lhs <= rhs (+ slack). `rhs` already contains `constant`.
// node_t is NaN for norm-level (aggregated) rows. `certified` is false when the
// computed K upper bound sits on the side where a lower bound would be needed.
struct InequalityRow {
  std::string chain;
  double node_t;
  double lhs;
  double rhs;
  double constant;
  double slack;
  bool certified = true;

  bool holds() const;
  double residual() const { return lhs - rhs; }
};

class TheoremReport {
 public:
  TheoremReport(std::string theorem, std::string instance)
      : theorem_(std::move(theorem)), instance_(std::move(instance)) {}

  void add(InequalityRow row) { rows_.push_back(std::move(row)); }
  void add(std::string chain, double node_t, double lhs, double rhs, double constant,
           double slack, bool certified = true);
  void metric(std::string key, double value) { metrics_.emplace_back(std::move(key), value); }
  void note(std::string text) { notes_.push_back(std::move(text)); }
  // A violated hypothesis: the verdict is withheld, not failed.
  void withhold(std::string reason);
  void merge(const TheoremReport& other, const std::string& prefix);

  const std::string& theorem() const { return theorem_; }
  const std::string& instance() const { return instance_; }
  const std::vector<InequalityRow>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, double>>& metrics() const { return metrics_; }
  const std::vector<std::string>& notes() const { return notes_; }
  double metric_or(const std::string& key, double fallback) const;

  Verdict verdict() const;
  bool passed() const { return verdict() == Verdict::Pass; }
  std::size_t violations() const;
  // max of lhs / (rhs + slack) over rows with positive denominators.
  double worst_ratio() const;

  std::string to_json() const;
  // Columns: theorem,instance,chain,node_t,lhs,rhs,constant,slack,residual,pass
  std::string to_csv(bool header = true) const;

 private:
  std::string theorem_, instance_;
  std::vector<InequalityRow> rows_;
  std::vector<std::pair<std::string, double>> metrics_;
  std::vector<std::string> notes_;
  std::vector<std::string> withheld_;
};

std::string summary_table(const std::vector<TheoremReport>& reports);
// Shortest round-trip decimal form ("inf" for +inf, "nan" for NaN).
std::string format_number(double v);

}  // namespace interp
