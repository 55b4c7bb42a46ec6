// src/cli/commands.cc

// Copyright 2026  The scorenorm Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "scorenorm/cli/commands.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "scorenorm/classical_norms.h"
#include "scorenorm/cli/cli_io.h"
#include "scorenorm/errors.h"
#include "scorenorm/lgsm_scoring.h"
#include "scorenorm/lgsm_train.h"
#include "scorenorm/metrics.h"
#include "scorenorm/model_io.h"
#include "scorenorm/rng.h"
#include "scorenorm/score_io.h"
#include "scorenorm/synthetic.h"

namespace scorenorm {
namespace cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

// Probit columns of plot files clip probabilities to this distance from 0/1.
constexpr double kProbitClip = 1e-6;

struct SimulateConfig {
  std::string out_dir;
  std::string params_path;
  double mu_tar = 4.0, mu_non = 0.0, var_tar = 1.0, var_non = 1.0;
  std::vector<double> alpha_tar, alpha_non, beta_tar, beta_non;
  std::size_t n_matrices = 30, rows = 50, cols = 50;
  std::string layout = "diagonal";
  std::uint64_t seed = 0;
  std::size_t eval_target = 0, eval_nontarget = 0;
  std::size_t cohort_enroll = 20, cohort_test = 20;
};

struct TrainConfig {
  std::vector<std::string> matrices;
  std::string manifest;
  int dim = 1;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  int max_iters = 500;
  std::string out;
  std::string trace;
};

struct NormalizeConfig {
  std::string method = "raw";
  std::string cohort;
  std::string trials;
  std::string model;
  std::string out;
  bool no_batch = false;
  std::optional<double> prior;
};

struct EvalConfig {
  std::vector<std::string> scores;
  std::string key;
  std::string out;
  std::string det_dir;
};

struct InspectConfig {
  std::string model;
};

std::string Fixed(double v, int precision = 4) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

void WriteJsonFile(const json &doc, const std::string &path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  os << doc.dump(2) << '\n';
}

json ReadJsonFile(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open '" + path + "'", 0);
  try {
    return json::parse(is);
  } catch (const json::exception &e) {
    throw ParseError(path + ": " + e.what(), 0);
  }
}

Eigen::VectorXd ToVector(const std::vector<double> &v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), Eigen::Index(v.size()));
}

LgsmParams SimulationParams(const SimulateConfig &c) {
  if (!c.params_path.empty()) {
    const json doc = ReadJsonFile(c.params_path);
    return doc.contains("format") ? ModelFromJson(doc).params
                                  : ParamsFromJson(doc);
  }
  const std::size_t d = c.alpha_tar.size();
  for (const auto *v : {&c.alpha_non, &c.beta_tar, &c.beta_non})
    if (v->size() != d)
      throw ValidationError(
          "inline loadings --alpha-tar, --alpha-non, --beta-tar, --beta-non "
          "must all have the same length");
  ClassParams tar{c.mu_tar, c.var_tar, ToVector(c.alpha_tar),
                  ToVector(c.beta_tar)};
  ClassParams non{c.mu_non, c.var_non, ToVector(c.alpha_non),
                  ToVector(c.beta_non)};
  return LgsmParams(tar, non);
}

void PrintVarianceTable(const LgsmParams &p, std::ostream &out) {
  out << "  sigma2_non   nu_non  sigma2_tar   nu_tar\n"
      << "  " << Fixed(p.nontarget().variance) << "  "
      << Fixed(p.nontarget().HiddenVariance()) << "  "
      << Fixed(p.target().variance) << "  "
      << Fixed(p.target().HiddenVariance()) << '\n';
}

int CmdSimulate(const SimulateConfig &c, std::ostream &out) {
  CorpusSpec spec;
  spec.n_matrices = c.n_matrices;
  spec.rows = c.rows;
  spec.cols = c.cols;
  spec.layout = TargetLayout::Parse(c.layout);
  spec.seed = c.seed;
  spec.Validate();
  const LgsmParams params = SimulationParams(c);
  const bool with_eval = c.eval_target + c.eval_nontarget > 0;
  if (with_eval && (c.cohort_enroll < 2 || c.cohort_test < 2))
    throw ValidationError("evaluation cohorts need at least 2 items per side");

  fs::create_directories(c.out_dir);
  const std::string manifest_path = (fs::path(c.out_dir) / "manifest.json").string();
  json manifest{{"format", "scorenorm-corpus"},
                {"version", 1},
                {"seed", c.seed},
                {"rows", c.rows},
                {"cols", c.cols},
                {"layout", spec.layout.ToString()},
                {"params", ParamsToJson(params)}};
  json paths = json::array();
  const std::vector<LabeledMatrix> corpus = SampleCorpus(params, spec);
  for (std::size_t m = 0; m < corpus.size(); ++m) {
    char name[32];
    std::snprintf(name, sizeof(name), "matrix_%03zu.tsv", m);
    WriteScoreMatrix(corpus[m], ResolvePath(manifest_path, name));
    paths.push_back(name);
  }
  manifest["matrices"] = paths;

  if (with_eval) {
    // Eval data uses its own stream family so it never overlaps the corpus.
    const EvalSet set =
        SampleEvalSet(params, c.cohort_enroll, c.cohort_test, c.eval_target,
                      c.eval_nontarget, DeriveSeed(c.seed, 1u << 20));
    const std::size_t n = c.cohort_enroll, m = c.cohort_test,
                      t = set.trials.size();
    Cohort cohort;
    cohort.inter = {set.inter, LabelMatrix(n, m)};
    cohort.enroll = {ScoreMatrix(t, m), LabelMatrix(t, m)};
    cohort.test = {ScoreMatrix(n, t), LabelMatrix(n, t)};
    std::vector<TrialRecord> trials;
    for (std::size_t k = 0; k < t; ++k) {
      const TrialScores &ts = set.trials[k];
      for (std::size_t j = 0; j < m; ++j)
        cohort.enroll.scores(k, j) = ts.enroll_side[j];
      for (std::size_t i = 0; i < n; ++i)
        cohort.test.scores(i, k) = ts.test_side[i];
      cohort.enroll_ids.push_back("enr" + std::to_string(k));
      cohort.test_ids.push_back("tst" + std::to_string(k));
      trials.push_back({"trial" + std::to_string(k), ts.trial_score,
                        cohort.enroll_ids.back(), cohort.test_ids.back(),
                        set.labels[k]});
    }
    WriteCohort(cohort, ResolvePath(manifest_path, "eval_cohort.json"));
    WriteTrials(trials, ResolvePath(manifest_path, "eval_trials.tsv"));
    manifest["eval"] = {{"cohort", "eval_cohort.json"},
                        {"trials", "eval_trials.tsv"},
                        {"enroll_cohort", n},
                        {"test_cohort", m},
                        {"n_target", c.eval_target},
                        {"n_nontarget", c.eval_nontarget}};
  }
  WriteJsonFile(manifest, manifest_path);
  out << "wrote " << corpus.size() << " matrices"
      << (with_eval ? " and an evaluation set" : "") << " to " << c.out_dir
      << '\n';
  return kExitOk;
}

int CmdTrain(const TrainConfig &c, std::ostream &out, std::ostream &err) {
  std::vector<std::string> paths = c.matrices;
  if (!c.manifest.empty()) {
    const json doc = ReadJsonFile(c.manifest);
    if (!doc.contains("matrices") || !doc.at("matrices").is_array())
      throw ParseError(c.manifest + ": no 'matrices' list", 0);
    for (const json &p : doc.at("matrices"))
      paths.push_back(ResolvePath(c.manifest, p.get<std::string>()));
  }
  if (paths.empty()) throw ValidationError("no training matrices given");
  if (c.dim < 0) throw ValidationError("--dim must be >= 0");
  std::vector<LabeledMatrix> matrices;
  for (const std::string &p : paths) matrices.push_back(ReadScoreMatrix(p));

  EmConfig config;
  config.tol = c.tol;
  config.max_iters = c.max_iters;
  config.seed = c.seed;
  const EmResult result = EmFit(matrices, c.dim, config);
  const TrainTrace &trace = result.trace;

  LgsmModel model{result.params,
                  {c.seed, trace.iterations, trace.log_likelihood.back(),
                   trace.converged}};
  WriteModel(model, c.out);

  const std::string trace_path = c.trace.empty() ? c.out + ".trace.tsv" : c.trace;
  std::ofstream ts(trace_path);
  if (!ts) throw Error("cannot open '" + trace_path + "' for writing");
  ts << "#scorenorm-trace v1 converged=" << (trace.converged ? 1 : 0)
     << " iterations=" << trace.iterations << '\n';
  for (const std::string &w : trace.warnings) ts << "# warning: " << w << '\n';
  for (std::size_t k = 0; k < trace.log_likelihood.size(); ++k)
    ts << k << '\t' << FormatScore(trace.log_likelihood[k]) << '\n';

  for (const std::string &w : trace.warnings) err << "warning: " << w << '\n';
  out << "trained D=" << c.dim << " on " << matrices.size() << " matrices, "
      << trace.iterations << " iterations"
      << (trace.converged ? "" : " (not converged)") << '\n'
      << "final objective: " << FormatScore(trace.log_likelihood.back())
      << '\n';
  PrintVarianceTable(result.params, out);
  return kExitOk;
}

std::vector<double> Observed(std::span<const double> scores,
                             const LabelMatrix &labels, bool row,
                             std::size_t index) {
  std::vector<double> out;
  for (std::size_t k = 0; k < scores.size(); ++k) {
    const Label l = row ? labels(index, k) : labels(k, index);
    if (l != Label::kUnobserved) out.push_back(scores[k]);
  }
  return out;
}

double ClassicalScore(const std::string &method, const TrialContext &ctx) {
  const std::size_t n = ctx.num_enroll_cohort(), m = ctx.num_test_cohort();
  if (method == "raw") return ctx.trial_score;
  const std::vector<double> enroll =
      Observed(ctx.enroll_side, ctx.cohort_labels, true, n);
  const std::vector<double> test =
      Observed(ctx.test_side, ctx.cohort_labels, false, m);
  if (method == "tnorm") return TNorm(ctx.trial_score, test);
  if (method == "znorm") return ZNorm(ctx.trial_score, enroll);
  if (method == "snorm") return SNorm(ctx.trial_score, enroll, test);
  if (method == "ztnorm") {
    if (ctx.cohort_labels.CountObserved() != (n + 1) * (m + 1))
      throw ValidationError("ztnorm needs a fully observed cohort");
    return ZTNorm(ctx);
  }
  throw ValidationError("unknown method '" + method + "'");
}

bool SameCohortLabels(const Cohort &cohort,
                      const std::vector<TrialContext> &contexts) {
  for (const TrialContext &ctx : contexts)
    if (!(ctx.cohort_labels == contexts.front().cohort_labels)) return false;
  (void)cohort;
  return true;
}

int CmdNormalize(const NormalizeConfig &c, std::ostream &out,
                 std::ostream &err) {
  static const char *kMethods[] = {"raw",   "tnorm", "znorm",
                                   "ztnorm", "snorm", "lgsm"};
  if (std::find(std::begin(kMethods), std::end(kMethods), c.method) ==
      std::end(kMethods))
    throw ValidationError("unknown method '" + c.method + "'");
  std::optional<Prior> prior;
  if (c.prior) prior.emplace(*c.prior);
  const std::vector<TrialRecord> trials = ReadTrials(c.trials);
  const Cohort cohort = ReadCohort(c.cohort);

  std::optional<LgsmParams> params;
  if (c.method == "lgsm") {
    if (c.model.empty()) throw ValidationError("method lgsm needs --model");
    params = ReadModel(c.model).params;
  }

  std::vector<ScoreRecord> records(trials.size());
  std::vector<TrialContext> contexts;
  std::vector<std::size_t> valid;
  for (std::size_t k = 0; k < trials.size(); ++k) {
    records[k].id = trials[k].id;
    records[k].label = trials[k].label;
    try {
      contexts.push_back(cohort.Context(trials[k]));
      valid.push_back(k);
    } catch (const Error &e) {
      records[k].error = e.what();
    }
  }

  const bool batch = c.method == "lgsm" && !c.no_batch && !contexts.empty() &&
                     SameCohortLabels(cohort, contexts);
  std::optional<BatchScorer> scorer;
  if (batch)
    scorer.emplace(*params, contexts.front().inter,
                   contexts.front().cohort_labels);

  std::size_t failures = trials.size() - valid.size();
  for (std::size_t v = 0; v < valid.size(); ++v) {
    ScoreRecord &r = records[valid[v]];
    const TrialContext &ctx = contexts[v];
    try {
      double s;
      if (scorer)
        s = scorer->Score(TrialScores{ctx.trial_score, ctx.enroll_side,
                                      ctx.test_side});
      else if (params)
        s = NormalizeTrial(*params, ctx);
      else
        s = ClassicalScore(c.method, ctx);
      r.score = s;
      if (prior) r.posterior = TargetPosterior(s, *prior);
    } catch (const Error &e) {
      r.error = e.what();
      ++failures;
    }
  }
  WriteScores(records, c.method, c.out);
  if (failures > 0)
    err << "warning: " << failures << " of " << trials.size()
        << " trials failed\n";
  out << "normalized " << (trials.size() - failures) << " trials with "
      << c.method << (batch ? " (batch)" : "") << '\n';
  if (!trials.empty() && failures == trials.size()) return kExitNumerical;
  return kExitOk;
}

json DetJson(const std::vector<DetPoint> &det) {
  json arr = json::array();
  auto probit = [](double p) {
    return Probit(std::clamp(p, kProbitClip, 1.0 - kProbitClip));
  };
  for (const DetPoint &p : det)
    arr.push_back({{"pfa", p.pfa},
                   {"pmiss", p.pmiss},
                   {"probit_pfa", probit(p.pfa)},
                   {"probit_pmiss", probit(p.pmiss)}});
  return arr;
}

int CmdEval(const EvalConfig &c, std::ostream &out, std::ostream &err) {
  std::map<std::string, Hypothesis> key;
  if (!c.key.empty())
    for (const TrialRecord &t : ReadTrials(c.key))
      if (t.label) key[t.id] = *t.label;

  json methods = json::array();
  std::ostringstream table;
  table << "method            EER(%)    Cllr  minCllr\n";
  for (const std::string &spec : c.scores) {
    const std::size_t eq = spec.find('=');
    const std::string name =
        eq == std::string::npos ? fs::path(spec).stem().string()
                                : spec.substr(0, eq);
    const std::string path =
        eq == std::string::npos ? spec : spec.substr(eq + 1);
    LabeledScores ls;
    std::size_t skipped = 0;
    for (const ScoreRecord &r : ReadScores(path)) {
      std::optional<Hypothesis> label = r.label;
      if (auto it = key.find(r.id); it != key.end()) label = it->second;
      if (!r.score || !label) {
        ++skipped;
        continue;
      }
      (*label == Hypothesis::kTarget ? ls.target : ls.nontarget)
          .push_back(*r.score);
    }
    if (skipped > 0)
      err << "warning: " << name << ": skipped " << skipped
          << " trials without a score or label\n";
    const MetricsReport report = Evaluate(ls);
    methods.push_back({{"name", name},
                       {"scores", path},
                       {"n_target", ls.target.size()},
                       {"n_nontarget", ls.nontarget.size()},
                       {"eer", report.eer},
                       {"cllr", report.cllr},
                       {"min_cllr", report.min_cllr},
                       {"det", DetJson(report.det)}});
    char line[128];
    std::snprintf(line, sizeof(line), "%-16s %7.3f %7.4f %8.4f\n", name.c_str(),
                  100.0 * report.eer, report.cllr, report.min_cllr);
    table << line;

    if (!c.det_dir.empty()) {
      fs::create_directories(c.det_dir);
      const std::string det_path =
          (fs::path(c.det_dir) / (name + "_det.tsv")).string();
      std::ofstream ds(det_path);
      if (!ds) throw Error("cannot open '" + det_path + "' for writing");
      ds << "pfa\tpmiss\tprobit_pfa\tprobit_pmiss\n";
      for (const json &p : methods.back().at("det"))
        ds << FormatScore(p.at("pfa").get<double>()) << '\t'
           << FormatScore(p.at("pmiss").get<double>()) << '\t'
           << FormatScore(p.at("probit_pfa").get<double>()) << '\t'
           << FormatScore(p.at("probit_pmiss").get<double>()) << '\n';
    }
  }
  json report{{"format", "scorenorm-report"},
              {"version", 1},
              {"probit_clip", kProbitClip},
              {"methods", methods}};
  if (!c.out.empty()) WriteJsonFile(report, c.out);
  out << table.str();
  return kExitOk;
}

int CmdInspect(const InspectConfig &c, std::ostream &out) {
  const LgsmModel model = ReadModel(c.model);
  const LgsmParams &p = model.params;
  auto print_class = [&](const char *name, const ClassParams &cp) {
    out << name << ": mean " << FormatScore(cp.mean) << ", variance "
        << FormatScore(cp.variance) << "\n  alpha";
    for (Eigen::Index k = 0; k < cp.alpha.size(); ++k)
      out << ' ' << FormatScore(cp.alpha(k));
    out << "\n  beta ";
    for (Eigen::Index k = 0; k < cp.beta.size(); ++k)
      out << ' ' << FormatScore(cp.beta(k));
    out << '\n';
  };
  out << "dim " << p.dim() << ", " << p.ParameterCount() << " parameters\n";
  print_class("target", p.target());
  print_class("nontarget", p.nontarget());
  out << "training: seed " << model.training.seed << ", "
      << model.training.iterations << " iterations, objective "
      << FormatScore(model.training.final_objective)
      << (model.training.converged ? ", converged" : ", not converged") << '\n';
  PrintVarianceTable(p, out);
  return kExitOk;
}

int ExitCodeFor(const Error &e) {
  if (dynamic_cast<const NumericalError *>(&e) ||
      dynamic_cast<const DegenerateCohortError *>(&e))
    return kExitNumerical;
  return kExitValidation;
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Score normalization with a linear-Gaussian score model"};
  app.set_config("--config", "", "Config file (TOML/INI); flags win");
  app.require_subcommand(1);

  SimulateConfig sim;
  CLI::App *simulate =
      app.add_subcommand("simulate", "Sample score matrices from a model");
  simulate->add_option("--out", sim.out_dir, "Output directory")->required();
  simulate->add_option("--params", sim.params_path,
                       "Model or params JSON (overrides inline params)");
  simulate->add_option("--mu-tar", sim.mu_tar);
  simulate->add_option("--mu-non", sim.mu_non);
  simulate->add_option("--var-tar", sim.var_tar);
  simulate->add_option("--var-non", sim.var_non);
  simulate->add_option("--alpha-tar", sim.alpha_tar)->delimiter(',');
  simulate->add_option("--alpha-non", sim.alpha_non)->delimiter(',');
  simulate->add_option("--beta-tar", sim.beta_tar)->delimiter(',');
  simulate->add_option("--beta-non", sim.beta_non)->delimiter(',');
  simulate->add_option("--n-matrices", sim.n_matrices);
  simulate->add_option("--rows", sim.rows);
  simulate->add_option("--cols", sim.cols);
  simulate->add_option("--layout", sim.layout, "diagonal, block:<b> or none");
  simulate->add_option("--seed", sim.seed);
  simulate->add_option("--eval-target", sim.eval_target,
                       "Target trials in an evaluation set (0: none)");
  simulate->add_option("--eval-nontarget", sim.eval_nontarget);
  simulate->add_option("--cohort-enroll", sim.cohort_enroll,
                       "Enrollment cohort size N of the evaluation set");
  simulate->add_option("--cohort-test", sim.cohort_test,
                       "Test cohort size M of the evaluation set");

  TrainConfig train_cfg;
  CLI::App *train = app.add_subcommand("train", "Fit a model by EM");
  train->add_option("matrices", train_cfg.matrices, "Score matrix files");
  train->add_option("--manifest", train_cfg.manifest,
                    "Corpus manifest written by simulate");
  train->add_option("--dim", train_cfg.dim, "Hidden dimension D");
  train->add_option("--seed", train_cfg.seed);
  train->add_option("--tol", train_cfg.tol);
  train->add_option("--max-iters", train_cfg.max_iters);
  train->add_option("--out", train_cfg.out, "Model file")->required();
  train->add_option("--trace", train_cfg.trace,
                    "Training trace (default <out>.trace.tsv)");

  NormalizeConfig norm;
  double prior_value = 0.0;
  CLI::App *normalize =
      app.add_subcommand("normalize", "Normalize trial scores");
  normalize
      ->add_option("--method", norm.method,
                   "raw, tnorm, znorm, ztnorm, snorm or lgsm")
      ->required();
  normalize->add_option("--cohort", norm.cohort, "Cohort manifest")->required();
  normalize->add_option("--trials", norm.trials, "Trial list")->required();
  normalize->add_option("--model", norm.model, "Model file (lgsm)");
  normalize->add_option("--out", norm.out, "Output score list")->required();
  normalize->add_flag("--no-batch", norm.no_batch,
                      "Score lgsm trials one at a time");
  CLI::Option *prior_opt = normalize->add_option(
      "--prior", prior_value, "Target prior; adds a posterior column");

  EvalConfig eval_cfg;
  CLI::App *eval = app.add_subcommand("eval", "Compute EER, Cllr and DET");
  eval->add_option("--scores", eval_cfg.scores, "[name=]score-list, repeatable")
      ->required();
  eval->add_option("--key", eval_cfg.key, "Trial list with labels");
  eval->add_option("--out", eval_cfg.out, "Report JSON");
  eval->add_option("--det-dir", eval_cfg.det_dir, "Directory for DET files");

  InspectConfig inspect_cfg;
  CLI::App *inspect = app.add_subcommand("inspect-model", "Print a model");
  inspect->add_option("model", inspect_cfg.model)->required();

  std::vector<const char *> argv;
  for (const std::string &a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << '\n';
    return kExitValidation;
  }

  try {
    if (*simulate) return CmdSimulate(sim, out);
    if (*train) return CmdTrain(train_cfg, out, err);
    if (*normalize) {
      if (*prior_opt) norm.prior = prior_value;
      return CmdNormalize(norm, out, err);
    }
    if (*eval) return CmdEval(eval_cfg, out, err);
    if (*inspect) return CmdInspect(inspect_cfg, out);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e);
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitValidation;
}

}  // namespace cli
}  // namespace scorenorm
