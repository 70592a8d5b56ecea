// Copyright 2026 The InterpLab Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "interp/error.hpp"
#include "interp/harness.hpp"
#include "interp/io.hpp"
#include "interp/kfunction.hpp"
#include "interp/semigroup.hpp"
#include "interp/spaces.hpp"
#include "jobs.hpp"
#include "json.hpp"

namespace {

using namespace interp;
using interplab::Config;

constexpr const char* kFooter = R"(CSV columns:
  k-profile   t,K_over_t
  evolve      t,u_0,...,u_{d-1},error
  verify      theorem,instance,chain,node_t,lhs,rhs,constant,slack,residual,pass
Reports are JSON with a schema_version field. The output directory defaults to
$INTERPLAB_OUT, else ./interplab_out.
Exit status: 0 all asserted checks pass, 1 a check fails, 2 invalid input.)";

// Flags from a JSON object, appended after the command line so they take precedence.
std::vector<std::string> config_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("bad config: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("config must be a JSON object");
  std::vector<std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (v.is_boolean()) {
      if (v.get<bool>()) out.push_back("--" + k);
    } else if (v.is_string()) {
      out.push_back("--" + k + "=" + v.get<std::string>());
    } else if (v.is_number()) {
      out.push_back("--" + k + "=" + format_number(v.get<double>()));
    } else {
      throw ParameterError("config value for " + k + " must be a scalar");
    }
  }
  return out;
}

std::string default_out() {
  const char* env = std::getenv("INTERPLAB_OUT");
  return env && *env ? env : "interplab_out";
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-")
    std::cout << content;
  else
    io::write_file(path, content);
}

int run_verify(const std::vector<std::string>& ids_in, const Config& cfg, int jobs_cap,
               const std::string& out_dir) {
  std::vector<const interplab::Job*> sel;
  for (const auto& id : ids_in) {
    if (id == "all") {
      for (const auto& j : interplab::jobs()) sel.push_back(&j);
      continue;
    }
    const auto* j = interplab::find_job(id);
    if (!j) throw ParameterError("unknown theorem id '" + id + "' (see --list)");
    sel.push_back(j);
  }
  std::vector<std::optional<TheoremReport>> reports(sel.size());
  std::vector<std::string> errors(sel.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < sel.size();) {
      try {
        reports[i] = sel[i]->run(cfg);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const std::size_t n = std::clamp<std::size_t>(jobs_cap < 1 ? 1 : jobs_cap, 1, sel.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int status = 0;
  std::vector<TheoremReport> done;
  std::string csv;
  for (std::size_t i = 0; i < sel.size(); ++i) {
    if (!errors[i].empty()) {
      std::cerr << sel[i]->id << ": error: " << errors[i] << "\n";
      status = std::max(status, 2);
      continue;
    }
    const auto& r = *reports[i];
    io::write_file(out_dir + "/" + sel[i]->id + ".json", r.to_json());
    csv += r.to_csv(done.empty());
    if (r.verdict() == Verdict::Fail) status = std::max(status, 1);
    done.push_back(r);
  }
  if (!done.empty()) io::write_file(out_dir + "/reports.csv", csv);
  std::cout << summary_table(done);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"interplab: real interpolation and accretive semigroup lab"};
  app.footer(kFooter);
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::string out_dir = default_out(), config_path;
  bool list = false;
  app.add_option("--out", out_dir, "Output directory for reports");
  app.add_option("--config", config_path, "JSON file whose keys override flags");
  app.add_flag("--list", list, "List theorem ids accepted by verify");

  Config cfg;
  auto add_common = [&](CLI::App* s) {
    s->add_option("--op", cfg.op, "Operator, e.g. scalar:a=1, qlaplace:q=3,n=64, energy:abs");
    s->add_option("--x", cfg.x, "Point: comma list, or smooth|hat|rough");
    s->add_option("--space", cfg.space, "theta=0.5,p=2 | l1 | linf | l1capLinf");
    s->add_option("--tau", cfg.tau, "Truncation tau");
    s->add_option("--seed", cfg.seed, "Seed");
  };

  auto* kp = app.add_subcommand("k-profile", "K(x,t)/t on the standard grid as CSV");
  add_common(kp);
  std::string kp_out;
  bool kp_brute = false;
  kp->add_option("-o,--output", kp_out, "CSV path (stdout if omitted)");
  kp->add_flag("--brute-force", kp_brute, "Brute-force K (dimension <= 3)");

  auto* ev = app.add_subcommand("evolve", "Crandall-Liggett orbit as CSV or JSON");
  add_common(ev);
  double ev_T = 1.0;
  std::size_t ev_steps = 1000, ev_stride = 10;
  std::string ev_format = "csv", ev_out;
  ev->add_option("--T", ev_T, "Final time")->check(CLI::PositiveNumber);
  ev->add_option("--steps", ev_steps, "Resolvent steps")->check(CLI::PositiveNumber);
  ev->add_option("--stride", ev_stride, "Record every k-th step")->check(CLI::PositiveNumber);
  ev->add_option("--format", ev_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  ev->add_option("-o,--output", ev_out, "Output path (stdout if omitted)");

  auto* vf = app.add_subcommand("verify", "Run theorem checks and write JSON reports");
  add_common(vf);
  std::vector<std::string> ids;
  int jobs_cap = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  vf->add_option("ids", ids, "Theorem ids or 'all'")->required();
  vf->add_option("--jobs", jobs_cap, "Concurrent jobs");
  vf->set_help_flag("--help", "Print this help message and exit");
  vf->add_option("--h", cfg.h, "Shift h for I + hA");
  vf->add_option("--T", cfg.T, "Horizon");
  vf->add_option("--q", cfg.q, "q-Laplace exponent");
  vf->add_option("--theta", cfg.theta, "Weighted Lp theta");
  vf->add_option("--p", cfg.p, "Weighted Lp exponent");
  vf->add_option("--eps", cfg.eps, "Mean-method epsilon");
  vf->add_option("--n", cfg.n, "Interior nodes");
  vf->add_option("--samples", cfg.samples, "Sample count");
  vf->add_option("--c", cfg.c, "Sine perturbation amplitude");
  vf->add_flag("--quick", cfg.quick, "Coarser grid");
  vf->get_option("ids")->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);

  auto* ql = app.add_subcommand("qlaplace", "q-Laplace regularity experiment");
  double ql_q = 3.0, ql_theta = 0.25, ql_p = 2.0, ql_T = 1.0;
  int ql_n = 64;
  std::uint64_t ql_seed = 7;
  ql->add_option("--q", ql_q, "Exponent q >= 2");
  ql->add_option("--theta", ql_theta, "theta in (0, 1/2)");
  ql->add_option("--p", ql_p, "p > 1");
  ql->add_option("--T", ql_T, "Horizon");
  ql->add_option("--n", ql_n, "Interior nodes");
  ql->add_option("--seed", ql_seed, "Seed for the rough datum");

  auto* hn = app.add_subcommand("hardy-norm", "Analytic bound and lower estimate of the averaging operator");
  std::string hn_space = "theta=0.5,p=2";
  int hn_trials = 8;
  hn->add_option("--space", hn_space, "Space");
  hn->add_option("--trials", hn_trials, "Trial functions");

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    for (std::size_t i = args.size(); i-- > 0;) {
      const std::string& a = args[i];
      std::string path;
      if (a == "--config" && i > 0) path = args[i - 1];
      if (a.rfind("--config=", 0) == 0) path = a.substr(9);
      if (path.empty()) continue;
      std::vector<std::string> extra = config_tokens(path);
      std::reverse(extra.begin(), extra.end());
      args.insert(args.begin(), extra.begin(), extra.end());
      break;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (list) {
      for (const auto& j : interplab::jobs()) std::cout << j.id << "\t" << j.summary << "\n";
      return 0;
    }
    if (*kp) {
      const auto b = io::build_operator(io::parse_operator_spec(cfg.op.empty() ? "scalar:a=1" : cfg.op));
      const Vector x = point(cfg, *b.op);
      b.op->space().require_dim(x);
      KOptions k;
      k.brute_force = kp_brute;
      const auto prof = k_profile(accretive_couple(b.op), x, LogGrid::standard(), k);
      emit(kp_out, io::k_profile_csv(prof));
      if (!std::isnan(cfg.tau)) {
        const SpaceSpec s = io::parse_space(cfg.space.empty() ? "theta=0.5,p=2" : cfg.space);
        std::cerr << "N_tau " << format_number(interp_function_tau(prof, s, cfg.tau)) << "\n";
      }
      return 0;
    }
    if (*ev) {
      const auto b = io::build_operator(io::parse_operator_spec(cfg.op.empty() ? "scalar:a=1" : cfg.op));
      const Vector x = point(cfg, *b.op);
      const auto tr = evolve(*b.op, x, ev_T, ev_steps, ev_stride);
      emit(ev_out, ev_format == "json" ? io::trajectory_json(tr) : io::trajectory_csv(tr));
      return 0;
    }
    if (*vf) return run_verify(ids, cfg, jobs_cap, out_dir);
    if (*ql) {
      const auto em = qlaplace_exponents(ql_q, ql_theta, ql_p);
      std::cout << "alpha " << format_number(em.alpha) << "\nr " << format_number(em.r) << "\n";
      const auto rep = qlaplace_regularity_experiment(
          ql_q, ql_theta, ql_p, qlaplace_initial_data(ql_n, ql_seed), ql_T, ql_n);
      io::write_file(out_dir + "/qlaplace.json", rep.to_json());
      std::cout << summary_table({rep});
      return rep.verdict() == Verdict::Fail ? 1 : 0;
    }
    if (*hn) {
      const SpaceSpec s = io::parse_space(hn_space);
      std::cout << "space " << s.describe() << "\n";
      std::cout << "analytic_bound " << format_number(hardy_bound(s)) << "\n";
      std::cout << "lower_estimate " << format_number(hardy_norm_estimate(s, hn_trials)) << "\n";
      return 0;
    }
    std::cout << app.help();
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
