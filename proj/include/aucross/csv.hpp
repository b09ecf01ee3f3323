#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dataset.hpp"
#include "sample.hpp"

namespace aucross {

// Two on-disk formats, both with a mandatory header row:
//   score files    "score,label"         one probability and one 0/1 label per row
//   feature files  "f1,...,fd,label"     d feature columns, label last
// Feature files may omit the label column (header without "label") when the
// rows are only ever scored, never trained on.

namespace csv_detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(trim(cur));
  return out;
}

inline double parse_double(const std::string& field, std::size_t line_no, const char* what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw parse_error("line " + std::to_string(line_no) + ": bad " + what + " '" + field + "'");
  return value;
}

inline int parse_label(const std::string& field, std::size_t line_no) {
  if (field == "0") return 0;
  if (field == "1") return 1;
  throw parse_error("line " + std::to_string(line_no) + ": bad label '" + field + "'");
}

}  // namespace csv_detail

inline LabeledSample read_score_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("line 1: missing 'score,label' header");
  auto header = csv_detail::split_fields(line);
  if (header != std::vector<std::string>{"score", "label"})
    throw parse_error("line 1: expected header 'score,label'");
  std::vector<double> scores;
  std::vector<int> labels;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (csv_detail::trim(line).empty()) continue;
    auto fields = csv_detail::split_fields(line);
    if (fields.size() != 2)
      throw parse_error("line " + std::to_string(line_no) + ": expected 2 fields, got " +
                        std::to_string(fields.size()));
    double sc = csv_detail::parse_double(fields[0], line_no, "score");
    if (!(sc >= 0.0 && sc <= 1.0))
      throw parse_error("line " + std::to_string(line_no) + ": score outside [0,1]");
    scores.push_back(sc);
    labels.push_back(csv_detail::parse_label(fields[1], line_no));
  }
  if (scores.empty()) throw empty_input_error("score file holds no data rows");
  return LabeledSample(std::move(scores), std::move(labels));
}

inline Dataset read_feature_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw parse_error("line 1: missing feature header");
  auto header = csv_detail::split_fields(line);
  bool labeled = !header.empty() && header.back() == "label";
  std::size_t d = header.size() - (labeled ? 1 : 0);
  if (d == 0) throw parse_error("line 1: no feature columns");
  for (std::size_t j = 0; j < d; ++j)
    if (header[j] != "f" + std::to_string(j + 1))
      throw parse_error("line 1: expected feature column 'f" + std::to_string(j + 1) + "'");

  Dataset out;
  out.n_cols = d;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (csv_detail::trim(line).empty()) continue;
    auto fields = csv_detail::split_fields(line);
    if (fields.size() != header.size())
      throw parse_error("line " + std::to_string(line_no) + ": expected " +
                        std::to_string(header.size()) + " fields, got " +
                        std::to_string(fields.size()));
    for (std::size_t j = 0; j < d; ++j)
      out.x.push_back(csv_detail::parse_double(fields[j], line_no, "feature"));
    out.y.push_back(labeled ? csv_detail::parse_label(fields.back(), line_no) : 0);
    ++out.n_rows;
  }
  if (out.n_rows == 0) throw empty_input_error("feature file holds no data rows");
  return out;
}

inline LabeledSample read_score_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return read_score_csv(in);
}

inline Dataset read_feature_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return read_feature_csv(in);
}

inline void write_score_csv(std::ostream& out, const LabeledSample& s) {
  out << "score,label\n";
  out.precision(17);
  for (std::size_t i = 0; i < s.n(); ++i)
    out << s.scores()[i] << ',' << s.labels()[i] << '\n';
}

inline void write_feature_csv(std::ostream& out, const Dataset& d,
                              const std::vector<std::size_t>& rows, bool with_labels) {
  for (std::size_t j = 0; j < d.n_cols; ++j) out << (j ? "," : "") << 'f' << j + 1;
  if (with_labels) out << ",label";
  out << '\n';
  out.precision(17);
  for (std::size_t r : rows) {
    for (std::size_t j = 0; j < d.n_cols; ++j) out << (j ? "," : "") << d.at(r, j);
    if (with_labels) out << ',' << d.y[r];
    out << '\n';
  }
}

}  // namespace aucross
