#include "kinvar/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace kinvar {

using nlohmann::json;

namespace {

json matrix_json(const QMat& m) {
  json entries = json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) entries.push_back(m(i, j).to_string());
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

QMat matrix_from(const json& j) {
  const int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  const auto& entries = j.at("entries");
  if (static_cast<int>(entries.size()) != rows * cols)
    throw std::invalid_argument("matrix json: entry count mismatch");
  QMat m(rows, cols);
  int idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int jj = 0; jj < cols; ++jj) m(i, jj) = Q::parse(entries[idx++].get<std::string>());
  return m;
}

}  // namespace

std::string matrix_to_json(const QMat& m) { return matrix_json(m).dump(2); }

QMat matrix_from_json(const std::string& text) { return matrix_from(json::parse(text)); }

std::string tensor_to_json(const Tensor3<Q>& t) {
  json entries = json::array();
  for (const Q& e : t.raw()) entries.push_back(e.to_string());
  json out{{"dims", {t.dims()[0], t.dims()[1], t.dims()[2]}}, {"entries", std::move(entries)}};
  return out.dump(2);
}

Tensor3<Q> tensor_from_json(const std::string& text) {
  json j = json::parse(text);
  const auto& dims = j.at("dims");
  Tensor3<Q> t(dims.at(0).get<int>(), dims.at(1).get<int>(), dims.at(2).get<int>());
  const auto& entries = j.at("entries");
  if (entries.size() != t.raw().size()) throw std::invalid_argument("tensor json: entry count mismatch");
  for (size_t i = 0; i < entries.size(); ++i) t.raw()[i] = Q::parse(entries[i].get<std::string>());
  return t;
}

std::string config_to_json(const KinematicConfiguration& cfg) {
  json momenta = json::array();
  for (const QVec& p : cfg.momenta) {
    json row = json::array();
    for (int j = 0; j < p.size(); ++j) row.push_back(p(j).to_string());
    momenta.push_back(std::move(row));
  }
  json out{{"d", cfg.d}, {"n", cfg.n}, {"conserves", cfg.conserves}, {"momenta", std::move(momenta)}};
  return out.dump(2);
}

KinematicConfiguration config_from_json(const std::string& text) {
  json j = json::parse(text);
  KinematicConfiguration cfg;
  cfg.d = j.at("d").get<int>();
  cfg.n = j.at("n").get<int>();
  cfg.conserves = j.at("conserves").get<bool>();
  const auto& momenta = j.at("momenta");
  if (static_cast<int>(momenta.size()) != cfg.n)
    throw std::invalid_argument("config json: momentum count mismatch");
  for (const auto& row : momenta) {
    if (static_cast<int>(row.size()) != cfg.d)
      throw std::invalid_argument("config json: momentum length mismatch");
    QVec p(cfg.d);
    for (int c = 0; c < cfg.d; ++c) p(c) = Q::parse(row[c].get<std::string>());
    cfg.momenta.push_back(std::move(p));
  }
  return cfg;
}

std::string bracket_tensor_to_json(const BracketTensor& bt) {
  json tees = json::array();
  for (const QMat& t : bt.T) tees.push_back(matrix_json(t));
  json out{{"d", bt.d},
           {"n", bt.n},
           {"symmetry",
            {{"S", bt.s_symmetric ? "sym" : "skew"}, {"T", bt.t_symmetric ? "sym" : "skew"}}},
           {"S", matrix_json(bt.S)},
           {"T", std::move(tees)}};
  return out.dump(2);
}

BracketTensor bracket_tensor_from_json(const std::string& text) {
  json j = json::parse(text);
  BracketTensor bt;
  bt.d = j.at("d").get<int>();
  bt.n = j.at("n").get<int>();
  bt.k = bt.d / 2;
  bt.s_symmetric = j.at("symmetry").at("S").get<std::string>() == "sym";
  bt.t_symmetric = j.at("symmetry").at("T").get<std::string>() == "sym";
  bt.S = matrix_from(j.at("S"));
  for (const auto& t : j.at("T")) bt.T.push_back(matrix_from(t));
  return bt;
}

std::string report_to_json(const SuiteReport& report) {
  json checks = json::array();
  for (const Check& c : report.checks.checks)
    checks.push_back(
        json{{"name", c.name}, {"rule", c.rule}, {"pass", c.pass}, {"witness", c.witness}});
  json out{{"d", report.d}, {"n", report.n}, {"seed", report.seed}, {"checks", std::move(checks)}};
  return out.dump(2);
}

std::string manifest_to_json(const RunManifest& m) {
  json out{{"command", m.command},     {"version", m.version},
           {"seed", m.seed},           {"d", m.d},
           {"n", m.n},                 {"mode", m.mode},
           {"timing_ms", m.timing_ms}, {"checks_total", m.checks_total},
           {"checks_failed", m.checks_failed}};
  return out.dump(2);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace kinvar
