#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "bootstrap.hpp"
#include "cross_fit.hpp"
#include "curve.hpp"
#include "oracle.hpp"
#include "selection.hpp"
#include "theta.hpp"

// ADL to_json/from_json pairs for every reportable type. Absent optional
// metrics serialize as null. Doubles round-trip exactly through the shortest
// representation the writer emits.

namespace aucross {

namespace serialize_detail {

inline void put(nlohmann::json& j, const char* key, const std::optional<double>& v) {
  if (v)
    j[key] = *v;
  else
    j[key] = nullptr;
}

inline std::optional<double> opt(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

}  // namespace serialize_detail

inline void to_json(nlohmann::json& j, const ScoreBandSelector& s) {
  j = {{"theta_l", s.theta_l},
       {"theta_u", s.theta_u},
       {"edge_mode", s.edge_mode == BandEdgeMode::inclusive ? "inclusive" : "half_open"}};
}

inline void from_json(const nlohmann::json& j, ScoreBandSelector& s) {
  j.at("theta_l").get_to(s.theta_l);
  j.at("theta_u").get_to(s.theta_u);
  s.edge_mode = j.value("edge_mode", std::string("inclusive")) == "half_open"
                    ? BandEdgeMode::half_open
                    : BandEdgeMode::inclusive;
}

inline void to_json(nlohmann::json& j, const SelectiveReport& r) {
  j = {{"coverage", r.coverage},
       {"target_coverage", r.target_coverage},
       {"violation", r.violation},
       {"accepted_count", r.accepted_count},
       {"accepted_pos", r.accepted_pos},
       {"accepted_neg", r.accepted_neg}};
  serialize_detail::put(j, "selective_auc", r.selective_auc);
  serialize_detail::put(j, "selective_accuracy", r.selective_accuracy);
  serialize_detail::put(j, "selective_risk", r.selective_risk);
  serialize_detail::put(j, "positive_rate", r.positive_rate);
}

inline void from_json(const nlohmann::json& j, SelectiveReport& r) {
  j.at("coverage").get_to(r.coverage);
  j.at("target_coverage").get_to(r.target_coverage);
  j.at("violation").get_to(r.violation);
  j.at("accepted_count").get_to(r.accepted_count);
  j.at("accepted_pos").get_to(r.accepted_pos);
  j.at("accepted_neg").get_to(r.accepted_neg);
  r.selective_auc = serialize_detail::opt(j, "selective_auc");
  r.selective_accuracy = serialize_detail::opt(j, "selective_accuracy");
  r.selective_risk = serialize_detail::opt(j, "selective_risk");
  r.positive_rate = serialize_detail::opt(j, "positive_rate");
}

inline void to_json(nlohmann::json& j, const ThetaEstimate& t) {
  j = {{"theta_l", t.theta_l}, {"theta_u", t.theta_u}, {"auc_used", t.auc_used},
       {"n", t.n},             {"n_pos", t.n_pos},     {"l_index", t.l_index},
       {"u_index", t.u_index}};
}

inline void from_json(const nlohmann::json& j, ThetaEstimate& t) {
  j.at("theta_l").get_to(t.theta_l);
  j.at("theta_u").get_to(t.theta_u);
  j.at("auc_used").get_to(t.auc_used);
  j.at("n").get_to(t.n);
  j.at("n_pos").get_to(t.n_pos);
  j.at("l_index").get_to(t.l_index);
  j.at("u_index").get_to(t.u_index);
}

inline void to_json(nlohmann::json& j, const CombinedTheta& c) {
  j = {{"full", c.full},
       {"subs", c.subs},
       {"theta_l_star", c.theta_l_star},
       {"theta_u_star", c.theta_u_star}};
}

inline void from_json(const nlohmann::json& j, CombinedTheta& c) {
  j.at("full").get_to(c.full);
  j.at("subs").get_to(c.subs);
  j.at("theta_l_star").get_to(c.theta_l_star);
  j.at("theta_u_star").get_to(c.theta_u_star);
}

inline void to_json(nlohmann::json& j, const RankWindow& w) {
  j = {{"mid", w.mid},
       {"lo", w.lo},
       {"hi", w.hi},
       {"rejected", w.rejected},
       {"selector", w.selector}};
}

inline void from_json(const nlohmann::json& j, RankWindow& w) {
  j.at("mid").get_to(w.mid);
  j.at("lo").get_to(w.lo);
  j.at("hi").get_to(w.hi);
  j.at("rejected").get_to(w.rejected);
  j.at("selector").get_to(w.selector);
}

inline void to_json(nlohmann::json& j, const FitDiagnostics& d) {
  j = {{"method", d.method},
       {"target_coverage", d.target_coverage},
       {"folds", d.folds},
       {"seed", d.seed},
       {"window", d.window},
       {"calibration_scores", d.calibration_scores}};
  if (d.has_thetas) j["thetas"] = d.thetas;
  if (d.has_confidence_threshold) j["confidence_threshold"] = d.confidence_threshold;
}

inline void from_json(const nlohmann::json& j, FitDiagnostics& d) {
  j.at("method").get_to(d.method);
  j.at("target_coverage").get_to(d.target_coverage);
  j.at("folds").get_to(d.folds);
  j.at("seed").get_to(d.seed);
  j.at("window").get_to(d.window);
  j.at("calibration_scores").get_to(d.calibration_scores);
  d.has_thetas = j.contains("thetas");
  if (d.has_thetas) j.at("thetas").get_to(d.thetas);
  d.has_confidence_threshold = j.contains("confidence_threshold");
  if (d.has_confidence_threshold) j.at("confidence_threshold").get_to(d.confidence_threshold);
}

inline void to_json(nlohmann::json& j, const OracleResult& o) {
  j = {{"selector", o.best_selector},
       {"auc", o.best_auc},
       {"coverage", o.achieved_coverage},
       {"candidates_evaluated", o.candidates_evaluated}};
}

inline void from_json(const nlohmann::json& j, OracleResult& o) {
  j.at("selector").get_to(o.best_selector);
  j.at("auc").get_to(o.best_auc);
  j.at("coverage").get_to(o.achieved_coverage);
  j.at("candidates_evaluated").get_to(o.candidates_evaluated);
}

inline void to_json(nlohmann::json& j, const MetricSummary& m) {
  j = {{"mean", m.mean}, {"stdev", m.stdev}, {"count", m.count}};
}

inline void from_json(const nlohmann::json& j, MetricSummary& m) {
  j.at("mean").get_to(m.mean);
  j.at("stdev").get_to(m.stdev);
  j.at("count").get_to(m.count);
}

inline void to_json(nlohmann::json& j, const BootstrapSummary& b) {
  j = {{"resamples", b.resamples},
       {"seed", b.seed},
       {"target_coverage", b.target_coverage},
       {"coverage", b.coverage},
       {"selective_auc", b.selective_auc},
       {"selective_accuracy", b.selective_accuracy},
       {"selective_risk", b.selective_risk},
       {"auc_omitted", b.auc_omitted},
       {"violation", b.violation}};
}

inline void from_json(const nlohmann::json& j, BootstrapSummary& b) {
  j.at("resamples").get_to(b.resamples);
  j.at("seed").get_to(b.seed);
  j.at("target_coverage").get_to(b.target_coverage);
  j.at("coverage").get_to(b.coverage);
  j.at("selective_auc").get_to(b.selective_auc);
  j.at("selective_accuracy").get_to(b.selective_accuracy);
  j.at("selective_risk").get_to(b.selective_risk);
  j.at("auc_omitted").get_to(b.auc_omitted);
  j.at("violation").get_to(b.violation);
}

inline void to_json(nlohmann::json& j, const CurveRow& r) {
  j = {{"target_coverage", r.target_coverage}, {"coverage", r.coverage}};
  serialize_detail::put(j, "selective_risk", r.selective_risk);
  serialize_detail::put(j, "selective_auc", r.selective_auc);
}

inline void from_json(const nlohmann::json& j, CurveRow& r) {
  j.at("target_coverage").get_to(r.target_coverage);
  j.at("coverage").get_to(r.coverage);
  r.selective_risk = serialize_detail::opt(j, "selective_risk");
  r.selective_auc = serialize_detail::opt(j, "selective_auc");
}

}  // namespace aucross
