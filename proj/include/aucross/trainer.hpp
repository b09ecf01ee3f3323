#pragma once

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <span>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "csv.hpp"
#include "dataset.hpp"
#include "errors.hpp"

namespace aucross {

// A Scorer turns feature rows into probabilities of the positive class.
// A Trainer produces a Scorer from a subset of rows; cross fitting calls it
// once per fold.  Three flavours are provided:
//   logistic     built-in full-batch gradient descent, deterministic
//   precomputed  scores supplied up front, one per dataset row; fit is a no-op
//   external     shell command invoked as  <cmd> <train.csv> <eval.csv>,
//                expected to print one probability per eval row on stdout

class Scorer {
 public:
  virtual ~Scorer() = default;
  virtual std::vector<double> score_rows(const Dataset& data,
                                         std::span<const std::size_t> rows) const = 0;
};

class Trainer {
 public:
  virtual ~Trainer() = default;
  virtual std::unique_ptr<Scorer> fit(const Dataset& data,
                                      std::span<const std::size_t> rows) const = 0;
};

struct LogisticOptions {
  int iterations = 500;
  double learning_rate = 0.5;
};

struct TrainerSpec {
  enum class Kind { logistic, precomputed, external };
  Kind kind = Kind::logistic;
  LogisticOptions logistic;
  std::vector<double> scores;
  std::string command;
};

namespace trainer_detail {

inline double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  double e = std::exp(z);
  return e / (1.0 + e);
}

class LogisticScorer final : public Scorer {
 public:
  LogisticScorer(std::vector<double> mean, std::vector<double> scale, std::vector<double> weights)
      : mean_(std::move(mean)), scale_(std::move(scale)), weights_(std::move(weights)) {}

  std::vector<double> score_rows(const Dataset& data,
                                 std::span<const std::size_t> rows) const override {
    std::size_t d = mean_.size();
    if (data.n_cols != d) throw invalid_spec_error("scorer expects " + std::to_string(d) + " features");
    std::vector<double> out;
    out.reserve(rows.size());
    for (std::size_t r : rows) {
      double z = weights_[0];
      for (std::size_t j = 0; j < d; ++j)
        z += weights_[j + 1] * (data.at(r, j) - mean_[j]) / scale_[j];
      out.push_back(sigmoid(z));
    }
    return out;
  }

 private:
  std::vector<double> mean_, scale_, weights_;
};

class LogisticTrainer final : public Trainer {
 public:
  explicit LogisticTrainer(LogisticOptions opt) : opt_(opt) {}

  std::unique_ptr<Scorer> fit(const Dataset& data,
                              std::span<const std::size_t> rows) const override {
    if (rows.empty()) throw empty_input_error("logistic fit on empty row set");
    std::size_t d = data.n_cols;
    std::size_t n = rows.size();
    std::vector<double> mean(d, 0.0), scale(d, 0.0);
    for (std::size_t r : rows)
      for (std::size_t j = 0; j < d; ++j) mean[j] += data.at(r, j);
    for (std::size_t j = 0; j < d; ++j) mean[j] /= static_cast<double>(n);
    for (std::size_t r : rows)
      for (std::size_t j = 0; j < d; ++j) {
        double c = data.at(r, j) - mean[j];
        scale[j] += c * c;
      }
    for (std::size_t j = 0; j < d; ++j) {
      scale[j] = std::sqrt(scale[j] / static_cast<double>(n));
      if (scale[j] == 0.0) scale[j] = 1.0;
    }

    std::vector<double> w(d + 1, 0.0), grad(d + 1);
    for (int it = 0; it < opt_.iterations; ++it) {
      std::fill(grad.begin(), grad.end(), 0.0);
      for (std::size_t r : rows) {
        double z = w[0];
        for (std::size_t j = 0; j < d; ++j) z += w[j + 1] * (data.at(r, j) - mean[j]) / scale[j];
        double resid = sigmoid(z) - static_cast<double>(data.y[r]);
        grad[0] += resid;
        for (std::size_t j = 0; j < d; ++j)
          grad[j + 1] += resid * (data.at(r, j) - mean[j]) / scale[j];
      }
      for (std::size_t j = 0; j <= d; ++j)
        w[j] -= opt_.learning_rate * grad[j] / static_cast<double>(n);
    }
    return std::make_unique<LogisticScorer>(std::move(mean), std::move(scale), std::move(w));
  }

 private:
  LogisticOptions opt_;
};

class PrecomputedScorer final : public Scorer {
 public:
  explicit PrecomputedScorer(std::vector<double> scores) : scores_(std::move(scores)) {}

  std::vector<double> score_rows(const Dataset& data,
                                 std::span<const std::size_t> rows) const override {
    if (scores_.size() != data.n_rows)
      throw invalid_spec_error("precomputed scores cover " + std::to_string(scores_.size()) +
                               " rows, dataset has " + std::to_string(data.n_rows));
    std::vector<double> out;
    out.reserve(rows.size());
    for (std::size_t r : rows) out.push_back(scores_[r]);
    return out;
  }

 private:
  std::vector<double> scores_;
};

class PrecomputedTrainer final : public Trainer {
 public:
  explicit PrecomputedTrainer(std::vector<double> scores) : scores_(std::move(scores)) {
    for (double s : scores_)
      if (!(s >= 0.0 && s <= 1.0)) throw invalid_spec_error("precomputed score outside [0,1]");
  }

  std::unique_ptr<Scorer> fit(const Dataset&, std::span<const std::size_t>) const override {
    return std::make_unique<PrecomputedScorer>(scores_);
  }

 private:
  std::vector<double> scores_;
};

inline std::filesystem::path fresh_temp_path(const char* tag) {
  static std::atomic<unsigned long> counter{0};
  auto id = counter.fetch_add(1);
  std::string name = "aucross-" + std::to_string(::getpid()) + "-" + std::to_string(id) + "-" + tag + ".csv";
  return std::filesystem::temp_directory_path() / name;
}

class ExternalScorer final : public Scorer {
 public:
  ExternalScorer(std::string command, std::filesystem::path train_csv)
      : command_(std::move(command)), train_csv_(std::move(train_csv)) {}

  ~ExternalScorer() override {
    std::error_code ec;
    std::filesystem::remove(train_csv_, ec);
  }

  std::vector<double> score_rows(const Dataset& data,
                                 std::span<const std::size_t> rows) const override {
    auto eval_csv = fresh_temp_path("eval");
    {
      std::ofstream out(eval_csv);
      if (!out) throw trainer_failure_error("cannot write " + eval_csv.string());
      write_feature_csv(out, data, {rows.begin(), rows.end()}, false);
    }
    std::string cmd = command_ + " '" + train_csv_.string() + "' '" + eval_csv.string() + "'";
    std::string captured;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
      std::error_code ec;
      std::filesystem::remove(eval_csv, ec);
      throw trainer_failure_error("cannot launch scorer command");
    }
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) captured.append(buf, got);
    int status = ::pclose(pipe);
    std::error_code ec;
    std::filesystem::remove(eval_csv, ec);
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0)
      throw trainer_failure_error("scorer command exited with status " +
                                  std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1));

    std::vector<double> out;
    std::istringstream lines(captured);
    std::string line;
    while (std::getline(lines, line)) {
      line = csv_detail::trim(line);
      if (line.empty()) continue;
      double v;
      try {
        v = csv_detail::parse_double(line, out.size() + 1, "probability");
      } catch (const parse_error& e) {
        throw trainer_failure_error(std::string("scorer output: ") + e.what());
      }
      if (!(v >= 0.0 && v <= 1.0))
        throw trainer_failure_error("scorer output line " + std::to_string(out.size() + 1) +
                                    " outside [0,1]");
      out.push_back(v);
    }
    if (out.size() != rows.size())
      throw trainer_failure_error("scorer printed " + std::to_string(out.size()) +
                                  " probabilities for " + std::to_string(rows.size()) + " rows");
    return out;
  }

 private:
  std::string command_;
  std::filesystem::path train_csv_;
};

class ExternalTrainer final : public Trainer {
 public:
  explicit ExternalTrainer(std::string command) : command_(std::move(command)) {
    if (command_.empty()) throw invalid_spec_error("external trainer needs a command");
  }

  std::unique_ptr<Scorer> fit(const Dataset& data,
                              std::span<const std::size_t> rows) const override {
    auto train_csv = fresh_temp_path("train");
    std::ofstream out(train_csv);
    if (!out) throw trainer_failure_error("cannot write " + train_csv.string());
    write_feature_csv(out, data, {rows.begin(), rows.end()}, true);
    out.close();
    return std::make_unique<ExternalScorer>(command_, train_csv);
  }

 private:
  std::string command_;
};

}  // namespace trainer_detail

inline std::unique_ptr<Trainer> make_trainer(const TrainerSpec& spec) {
  switch (spec.kind) {
    case TrainerSpec::Kind::logistic:
      return std::make_unique<trainer_detail::LogisticTrainer>(spec.logistic);
    case TrainerSpec::Kind::precomputed:
      return std::make_unique<trainer_detail::PrecomputedTrainer>(spec.scores);
    case TrainerSpec::Kind::external:
      return std::make_unique<trainer_detail::ExternalTrainer>(spec.command);
  }
  throw invalid_spec_error("unknown trainer kind");
}

}  // namespace aucross
