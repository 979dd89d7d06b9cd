#include "e2fock/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace e2fock {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format '" + s + "' (expected json or csv)");
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_params(const std::vector<Param>& params) {
  std::string out;
  for (const auto& p : params) {
    if (!out.empty()) out += ';';
    out += p.name;
    out += '=';
    if (const auto* i = std::get_if<std::int64_t>(&p.value)) {
      out += std::to_string(*i);
    } else {
      out += format_double(std::get<double>(p.value));
    }
  }
  return out;
}

std::string csv_header() { return "name,equation,params,residual,tolerance,pass,detail"; }

std::string format_record(const CheckReport& r, Format f) {
  if (f == Format::csv) {
    return csv_field(r.name) + ',' + csv_field(r.equation) + ',' +
           csv_field(format_params(r.params)) + ',' + format_double(r.residual) + ',' +
           format_double(r.tolerance) + ',' + (r.pass ? "true" : "false") + ',' +
           csv_field(r.detail);
  }
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["equation"] = r.equation;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& p : r.params) {
    std::visit([&](auto v) { params[p.name] = v; }, p.value);
  }
  j["params"] = std::move(params);
  j["residual"] = std::isfinite(r.residual) ? nlohmann::ordered_json(r.residual) : nullptr;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  return j.dump();
}

void write_reports(std::ostream& out, const std::vector<CheckReport>& records, Format f) {
  if (f == Format::csv) out << csv_header() << '\n';
  for (const auto& r : records) out << format_record(r, f) << '\n';
}

}  // namespace e2fock
