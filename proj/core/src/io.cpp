#include "greenosher/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace greenosher {

namespace {

using nlohmann::json;

SupportBody body_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("body file: top level is not an object");
  if (j.contains("version")) {
    if (!j["version"].is_number_integer() || j["version"].get<int>() != 1)
      throw ParseError("body file: unsupported version");
  }
  if (!j.contains("a0") || !j["a0"].is_number())
    throw ParseError("body file: field 'a0' missing or not a number");

  SupportBody body;
  body.a0 = j["a0"].get<double>();
  auto read_list = [&](const char* field, std::vector<double>& out) {
    if (!j.contains(field)) return;  // absent harmonics are zero
    if (!j[field].is_array())
      throw ParseError(std::string("body file: field '") + field +
                       "' is not an array");
    for (const auto& v : j[field]) {
      if (!v.is_number())
        throw ParseError(std::string("body file: non-numeric entry in '") +
                         field + "'");
      out.push_back(v.get<double>());
    }
  };
  read_list("cos", body.cos_coeffs);
  read_list("sin", body.sin_coeffs);
  return body;
}

json body_to_json(const SupportBody& body) {
  return json{{"version", 1},
              {"a0", body.a0},
              {"cos", body.cos_coeffs},
              {"sin", body.sin_coeffs}};
}

json vec_to_json(Vec2 v) { return json::array({v.x, v.y}); }

}  // namespace

SupportBody body_from_json_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("body file: ") + e.what());
  }
  SupportBody body = body_from_json(j);
  require_valid(body);
  return body;
}

std::string body_to_json_string(const SupportBody& body) {
  return body_to_json(body).dump(2) + "\n";
}

SupportBody load_body(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open body file: " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return body_from_json_string(text.str());
}

void save_body(const SupportBody& body, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write body file: " + path);
  out << body_to_json_string(body);
}

std::string report_to_json(const GreenOsherReport& report) {
  json j;
  j["steiner"] = {{"vK", report.steiner.vK},   {"vL", report.steiner.vL},
                  {"vKL", report.steiner.vKL}, {"delta", report.steiner.delta},
                  {"t1", report.steiner.t1},   {"t2", report.steiner.t2}};
  j["certificate"] = {
      {"r", report.certificate.r},
      {"R", report.certificate.R},
      {"x_in", vec_to_json(report.certificate.x_in)},
      {"x_out", vec_to_json(report.certificate.x_out)},
      {"origin_class", to_string(report.certificate.origin_class)},
      {"at_dilation_position", report.certificate.at_dilation_position}};
  j["partition"] = {{"a", report.partition.a},
                    {"rho1", report.partition.rho1},
                    {"rho2", report.partition.rho2},
                    {"b", report.partition.b},
                    {"measure_error", report.partition.measure_error}};
  j["functionals"] = json::array();
  for (const FunctionalCheck& f : report.functionals) {
    j["functionals"].push_back({{"name", f.name},
                                {"lhs", f.lhs},
                                {"mid", f.mid},
                                {"rhs", f.rhs},
                                {"slack", f.slack},
                                {"convexity_checked", f.convexity_checked}});
  }
  j["rho1_bound"] = report.rho1_bound;
  j["b_bound"] = report.b_bound;
  j["homothetic"] = report.homothetic;
  j["residual"] = report.residual;
  return j.dump(2) + "\n";
}

}  // namespace greenosher
