#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <aucross/aucross.hpp>

using nlohmann::json;

namespace {

struct RunConfig {
  std::string scores_file;
  std::string input_file;
  std::string selector_file;
  std::string trainer = "logistic";
  std::string method = "aucross";
  std::string output;
  std::string format = "json";
  std::string split = "shuffled";
  std::string window = "exact";
  std::string midpoint = "rank";
  std::vector<double> coverage;
  int folds = 5;
  int threads = 1;
  long long bootstrap = 1000;
  std::uint64_t seed = 0;
  double validation_fraction = 0.1;
  double prediction_threshold = 0.5;
  int iterations = 500;
  double learning_rate = 0.5;
  // bench
  std::size_t train_size = 2000;
  std::size_t test_size = 1000;
};

aucross::FitOptions fit_options(const RunConfig& cfg) {
  aucross::FitOptions opt;
  opt.folds = cfg.folds;
  opt.seed = cfg.seed;
  opt.threads = cfg.threads;
  opt.validation_fraction = cfg.validation_fraction;
  opt.logistic.iterations = cfg.iterations;
  opt.logistic.learning_rate = cfg.learning_rate;
  if (cfg.split == "shuffled")
    opt.split_mode = aucross::SplitMode::shuffled;
  else if (cfg.split == "sequential")
    opt.split_mode = aucross::SplitMode::sequential;
  else
    throw aucross::invalid_spec_error("unknown split mode '" + cfg.split + "'");
  if (cfg.window == "exact")
    opt.window_mode = aucross::WindowMode::half_open_exact;
  else if (cfg.window == "paper")
    opt.window_mode = aucross::WindowMode::paper_inclusive;
  else
    throw aucross::invalid_spec_error("unknown window mode '" + cfg.window + "'");
  if (cfg.midpoint == "rank")
    opt.midpoint_mode = aucross::MidpointMode::rank;
  else if (cfg.midpoint == "literal")
    opt.midpoint_mode = aucross::MidpointMode::literal;
  else
    throw aucross::invalid_spec_error("unknown midpoint mode '" + cfg.midpoint + "'");
  return opt;
}

struct FitInput {
  aucross::Dataset data;
  aucross::TrainerSpec trainer;
};

FitInput load_fit_input(const RunConfig& cfg) {
  FitInput in;
  if (!cfg.scores_file.empty() && !cfg.input_file.empty())
    throw aucross::invalid_spec_error("give either --scores-file or --input, not both");
  if (!cfg.scores_file.empty()) {
    auto s = aucross::read_score_csv(cfg.scores_file);
    in.data = aucross::dataset_from_labels(s.labels());
    in.trainer.kind = aucross::TrainerSpec::Kind::precomputed;
    in.trainer.scores = s.scores();
    return in;
  }
  if (cfg.input_file.empty())
    throw aucross::invalid_spec_error("need --scores-file or --input features");
  in.data = aucross::read_feature_csv(cfg.input_file);
  if (cfg.trainer == "logistic") {
    in.trainer.kind = aucross::TrainerSpec::Kind::logistic;
    in.trainer.logistic.iterations = cfg.iterations;
    in.trainer.logistic.learning_rate = cfg.learning_rate;
  } else {
    in.trainer.kind = aucross::TrainerSpec::Kind::external;
    in.trainer.command = cfg.trainer;
  }
  return in;
}

std::vector<double> coverage_grid(const RunConfig& cfg) {
  if (cfg.coverage.empty()) throw aucross::invalid_coverage_error("--coverage is required");
  for (double c : cfg.coverage) aucross::require_coverage_target(c, "run");
  return cfg.coverage;
}

aucross::ScoreBandSelector load_selector(const std::string& path) {
  std::ifstream inp(path);
  if (!inp) throw aucross::parse_error("cannot open '" + path + "'");
  json j;
  try {
    inp >> j;
    if (j.is_object() && j.contains("selector")) j = j.at("selector");
    return j.get<aucross::ScoreBandSelector>();
  } catch (const json::exception& e) {
    throw aucross::parse_error("selector file '" + path + "': " + e.what());
  }
}

void csv_flatten(const json& j, std::ostream& out) {
  out << "key,value\n";
  const json flat = j.flatten();
  for (const auto& [pointer, value] : flat.items()) {
    std::string key = pointer.substr(1);
    for (auto& ch : key)
      if (ch == '/') ch = '.';
    out << key << ',';
    if (value.is_string())
      out << value.get<std::string>();
    else if (!value.is_null())
      out << value.dump();
    out << '\n';
  }
}

void csv_table(const json& rows, const std::vector<std::string>& columns, std::ostream& out) {
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i) out << ',';
      const auto& v = row.at(columns[i]);
      if (v.is_string())
        out << v.get<std::string>();
      else if (!v.is_null())
        out << v.dump();
    }
    out << '\n';
  }
}

// one table row per array element, columns from the flattened first element
void csv_flat_rows(const json& rows, std::ostream& out) {
  std::vector<std::string> columns;
  std::vector<json> flat;
  for (const auto& row : rows) {
    flat.push_back(row.flatten());
    if (columns.empty())
      for (const auto& [pointer, value] : flat.back().items()) {
        std::string key = pointer.substr(1);
        for (auto& ch : key)
          if (ch == '/') ch = '.';
        columns.push_back(key);
        (void)value;
      }
  }
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (std::size_t r = 0; r < flat.size(); ++r) {
    std::size_t i = 0;
    for (const auto& [pointer, value] : flat[r].items()) {
      if (i++) out << ',';
      if (value.is_string())
        out << value.get<std::string>();
      else if (!value.is_null())
        out << value.dump();
      (void)pointer;
    }
    out << '\n';
  }
}

void emit(const RunConfig& cfg, const json& doc, const std::vector<std::string>& table_columns = {}) {
  std::ostringstream text;
  if (cfg.format == "json") {
    text << doc.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    if (!table_columns.empty())
      csv_table(doc, table_columns, text);
    else if (doc.is_object())
      csv_flatten(doc, text);
    else if (doc.is_array() && !doc.empty() && doc.front().is_object())
      csv_flat_rows(doc, text);
    else
      throw aucross::invalid_spec_error("csv format is not available for this output");
  } else {
    throw aucross::invalid_spec_error("unknown format '" + cfg.format + "'");
  }
  if (cfg.output.empty()) {
    std::cout << text.str();
  } else {
    std::ofstream out(cfg.output);
    if (!out) throw aucross::invalid_spec_error("cannot write '" + cfg.output + "'");
    out << text.str();
  }
}

json fit_document(const aucross::SelectiveClassifier& clf) {
  return json{{"selector", clf.selector}, {"diagnostics", clf.diagnostics}};
}

void require_json_artifact(const RunConfig& cfg) {
  if (cfg.format != "json")
    throw aucross::invalid_spec_error("fit output is a JSON artifact consumed by evaluate");
}

int run_metrics(const RunConfig& cfg) {
  auto s = aucross::read_score_csv(cfg.scores_file);
  s.require_both_classes("metrics");
  auto pc = aucross::auc_pair_counts(s);
  auto areas = aucross::cap_areas(s);
  json doc{{"n", s.n()},
           {"n_pos", s.n_pos()},
           {"n_neg", s.n_neg()},
           {"auc", pc.value()},
           {"gini", aucross::gini_coefficient(s)},
           {"cap_a", areas.a},
           {"cap_b", areas.b}};
  emit(cfg, doc);
  return 0;
}

int run_thetas(const RunConfig& cfg) {
  auto s = aucross::read_score_csv(cfg.scores_file);
  emit(cfg, json(aucross::estimate_thetas_auc(s)));
  return 0;
}

int run_fit(const RunConfig& cfg) {
  require_json_artifact(cfg);
  auto grid = coverage_grid(cfg);
  auto in = load_fit_input(cfg);
  auto opt = fit_options(cfg);
  auto fits = aucross::fit_aucross_grid(in.data, in.trainer, grid, opt);
  if (fits.size() == 1) {
    emit(cfg, fit_document(fits[0]));
  } else {
    json doc = json::array();
    for (const auto& clf : fits) doc.push_back(fit_document(clf));
    emit(cfg, doc);
  }
  return 0;
}

int run_baseline(const RunConfig& cfg) {
  require_json_artifact(cfg);
  auto grid = coverage_grid(cfg);
  auto in = load_fit_input(cfg);
  auto opt = fit_options(cfg);
  if (grid.size() == 1) {
    emit(cfg, fit_document(aucross::fit_baseline(cfg.method, in.data, in.trainer, grid[0], opt)));
  } else {
    json doc = json::array();
    for (double c : grid)
      doc.push_back(fit_document(aucross::fit_baseline(cfg.method, in.data, in.trainer, c, opt)));
    emit(cfg, doc);
  }
  return 0;
}

int run_oracle(const RunConfig& cfg) {
  auto grid = coverage_grid(cfg);
  auto s = aucross::read_score_csv(cfg.scores_file);
  aucross::OracleOptions opt;
  opt.threads = cfg.threads;
  if (grid.size() == 1) {
    emit(cfg, json(aucross::oracle_search(s, grid[0], opt)));
  } else {
    json doc = json::array();
    for (double c : grid) doc.push_back(aucross::oracle_search(s, c, opt));
    emit(cfg, doc);
  }
  return 0;
}

int run_evaluate(const RunConfig& cfg) {
  auto grid = coverage_grid(cfg);
  auto s = aucross::read_score_csv(cfg.scores_file);
  auto sel = cfg.selector_file.empty() ? aucross::ScoreBandSelector::empty()
                                       : load_selector(cfg.selector_file);
  if (cfg.bootstrap < 0) throw aucross::invalid_spec_error("--bootstrap must be non-negative");
  auto one = [&](double c) {
    if (cfg.bootstrap == 0)
      return json(aucross::selective_report(s, sel, c, cfg.prediction_threshold));
    return json(aucross::bootstrap_evaluate(s, sel, c, cfg.bootstrap, cfg.seed, cfg.threads));
  };
  if (grid.size() == 1) {
    emit(cfg, one(grid[0]));
  } else {
    json doc = json::array();
    for (double c : grid) doc.push_back(one(c));
    emit(cfg, doc);
  }
  return 0;
}

int run_bench(const RunConfig& cfg) {
  auto grid = cfg.coverage.empty() ? std::vector<double>{.99, .95, .9, .85, .8, .75}
                                   : coverage_grid(cfg);
  std::sort(grid.begin(), grid.end(), std::greater<>());

  aucross::SyntheticSpec train_spec;
  train_spec.n = cfg.train_size;
  train_spec.seed = aucross::mix64(cfg.seed, 101);
  auto test_spec = train_spec;
  test_spec.n = cfg.test_size;
  test_spec.seed = aucross::mix64(cfg.seed, 102);
  auto train = aucross::generate_synthetic(train_spec);
  auto test = aucross::generate_synthetic(test_spec);

  aucross::TrainerSpec trainer;
  trainer.logistic.iterations = cfg.iterations;
  trainer.logistic.learning_rate = cfg.learning_rate;
  auto opt = fit_options(cfg);

  json rows = json::array();
  auto add_rows = [&](const std::string& method, const std::vector<aucross::SelectiveClassifier>& fits) {
    for (std::size_t i = 0; i < fits.size(); ++i) {
      aucross::LabeledSample scored(fits[i].score(test), test.y);
      auto rep = aucross::selective_report(scored, fits[i].selector, grid[i],
                                           cfg.prediction_threshold);
      aucross::OracleOptions oopt;
      oopt.threads = cfg.threads;
      auto oracle = aucross::oracle_search(scored, grid[i], oopt);
      json row{{"method", method},
               {"target_coverage", grid[i]},
               {"coverage", rep.coverage},
               {"violation", rep.violation},
               {"accepted_count", rep.accepted_count},
               {"oracle_auc", oracle.best_auc}};
      if (rep.selective_auc) {
        row["selective_auc"] = *rep.selective_auc;
        row["oracle_gap"] = oracle.best_auc - *rep.selective_auc;
      } else {
        row["selective_auc"] = nullptr;
        row["oracle_gap"] = nullptr;
      }
      if (rep.selective_risk)
        row["selective_risk"] = *rep.selective_risk;
      else
        row["selective_risk"] = nullptr;
      rows.push_back(row);
    }
  };

  add_rows("aucross", aucross::fit_aucross_grid(train, trainer, grid, opt));
  for (const char* method : {"plugin", "pluginauc", "scross"}) {
    std::vector<aucross::SelectiveClassifier> fits;
    fits.reserve(grid.size());
    for (double c : grid) fits.push_back(aucross::fit_baseline(method, train, trainer, c, opt));
    add_rows(method, fits);
  }
  emit(cfg, rows,
       {"method", "target_coverage", "coverage", "violation", "accepted_count", "selective_auc",
        "selective_risk", "oracle_auc", "oracle_gap"});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  CLI::App app{"AUC-based selective classification: cross-fit score bands, baselines, and evaluation"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--output", cfg.output, "write the report here instead of stdout")
        ->envname("AUCROSS_OUTPUT");
    sub->add_option("--format", cfg.format, "json or csv")->envname("AUCROSS_FORMAT");
    sub->add_option("--seed", cfg.seed, "master RNG seed")->envname("AUCROSS_SEED");
    sub->add_option("--threads", cfg.threads, "worker threads for folds, candidates, resamples")
        ->envname("AUCROSS_THREADS");
  };
  auto add_scores = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--scores-file", cfg.scores_file, "CSV with header score,label")
                  ->envname("AUCROSS_SCORES_FILE");
    if (required) o->required();
  };
  auto add_fitting = [&](CLI::App* sub) {
    sub->add_option("--input", cfg.input_file, "feature CSV with header f1..fd,label")
        ->envname("AUCROSS_INPUT");
    sub->add_option("--trainer", cfg.trainer,
                    "'logistic' or an external scorer command taking train/eval CSV paths")
        ->envname("AUCROSS_TRAINER");
    sub->add_option("--coverage", cfg.coverage, "target coverage in (0,1], repeatable")
        ->envname("AUCROSS_COVERAGE");
    sub->add_option("--folds", cfg.folds, "cross-fit folds")->envname("AUCROSS_FOLDS");
    sub->add_option("--split", cfg.split, "two-way split mode: shuffled or sequential")
        ->envname("AUCROSS_SPLIT");
    sub->add_option("--window", cfg.window, "rejection window mode: exact or paper");
    sub->add_option("--midpoint", cfg.midpoint, "window midpoint mode: rank or literal");
    sub->add_option("--validation-fraction", cfg.validation_fraction,
                    "held-out fraction for the plug-in baselines");
    sub->add_option("--iterations", cfg.iterations, "logistic gradient-descent iterations");
    sub->add_option("--learning-rate", cfg.learning_rate, "logistic learning rate");
  };

  auto* metrics = app.add_subcommand("metrics", "AUC, Gini and CAP areas of a scored sample");
  add_scores(metrics, true);
  add_common(metrics);

  auto* thetas = app.add_subcommand("thetas", "rejection bound estimates for a scored sample");
  add_scores(thetas, true);
  add_common(thetas);

  auto* fit = app.add_subcommand("fit", "fit the cross-fit selective classifier");
  add_scores(fit, false);
  add_fitting(fit);
  add_common(fit);

  auto* baseline = app.add_subcommand("baseline", "fit a comparison method");
  baseline->add_option("--method", cfg.method, "aucross, plugin, pluginauc or scross")
      ->required()
      ->envname("AUCROSS_METHOD");
  add_scores(baseline, false);
  add_fitting(baseline);
  add_common(baseline);

  auto* oracle = app.add_subcommand("oracle", "exhaustive best score band given the labels");
  add_scores(oracle, true);
  oracle->add_option("--coverage", cfg.coverage, "coverage floor, repeatable")
      ->envname("AUCROSS_COVERAGE");
  add_common(oracle);

  auto* evaluate = app.add_subcommand("evaluate", "apply a selector to a scored test set");
  add_scores(evaluate, true);
  evaluate->add_option("--selector", cfg.selector_file,
                       "JSON file holding a selector or a fit output");
  evaluate->add_option("--coverage", cfg.coverage, "target coverage")->envname("AUCROSS_COVERAGE");
  evaluate->add_option("--bootstrap", cfg.bootstrap, "resamples; 0 emits the point report")
      ->envname("AUCROSS_BOOTSTRAP");
  evaluate->add_option("--threshold", cfg.prediction_threshold, "prediction threshold");
  add_common(evaluate);

  auto* bench = app.add_subcommand("bench", "synthetic end-to-end study of all methods");
  bench->add_option("--train-size", cfg.train_size, "training rows");
  bench->add_option("--test-size", cfg.test_size, "test rows");
  add_fitting(bench);
  add_common(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (metrics->parsed()) return run_metrics(cfg);
    if (thetas->parsed()) return run_thetas(cfg);
    if (fit->parsed()) return run_fit(cfg);
    if (baseline->parsed()) return run_baseline(cfg);
    if (oracle->parsed()) return run_oracle(cfg);
    if (evaluate->parsed()) return run_evaluate(cfg);
    if (bench->parsed()) return run_bench(cfg);
  } catch (const aucross::validation_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const aucross::data_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
