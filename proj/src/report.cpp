#include "degpow/report.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

#include <json.hpp>

namespace degpow {

namespace {

using Json = nlohmann::ordered_json;
using Params = std::vector<std::pair<std::string, std::string>>;

Json params_json(const Params& params) {
  Json out = Json::object();
  for (const auto& [k, v] : params) out[k] = v;
  return out;
}

Params params_from(const Json& j) {
  Params out;
  for (const auto& [k, v] : j.items()) out.emplace_back(k, v.get<std::string>());
  return out;
}

Json optional_text(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

std::optional<std::string> optional_text_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>();
}

Json record_json(const VerificationRecord& r) {
  return Json{{"kind", "verification"},
              {"check", r.check},
              {"params", params_json(r.params)},
              {"verdict", r.pass ? "pass" : "fail"},
              {"value", r.value},
              {"witness", r.witness},
              {"detail", r.detail}};
}

Json record_json(const ExtremalReport& r) {
  return Json{{"kind", "extremal"},
              {"n", r.n},
              {"p", r.p},
              {"predicate", r.predicate},
              {"max_value", r.max_value ? Json(to_string(*r.max_value)) : Json(nullptr)},
              {"witnesses", r.witnesses},
              {"graphs_examined", r.graphs_examined}};
}

ReportRecord record_from(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "verification") {
    const std::string verdict = j.at("verdict").get<std::string>();
    if (verdict != "pass" && verdict != "fail")
      throw std::invalid_argument("report: unknown verdict " + verdict);
    return VerificationRecord{j.at("check").get<std::string>(), params_from(j.at("params")),
                              verdict == "pass", j.at("value").get<std::string>(),
                              j.at("witness").get<std::string>(), j.at("detail").get<std::string>()};
  }
  if (kind == "extremal") {
    ExtremalReport r;
    r.n = j.at("n").get<int>();
    r.p = j.at("p").get<int>();
    r.predicate = j.at("predicate").get<std::string>();
    if (!j.at("max_value").is_null()) r.max_value = ExactInt(j.at("max_value").get<std::string>());
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    r.graphs_examined = j.at("graphs_examined").get<std::uint64_t>();
    return r;
  }
  throw std::invalid_argument("report: unknown record kind " + kind);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

}  // namespace

bool ReportEnvelope::all_pass() const {
  for (const auto& r : records)
    if (const auto* v = std::get_if<VerificationRecord>(&r); v && !v->pass) return false;
  return true;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

std::string to_json(const ReportEnvelope& envelope) {
  Json records = Json::array();
  for (const auto& r : envelope.records)
    records.push_back(std::visit([](const auto& rec) { return record_json(rec); }, r));
  const Json j{{"format_version", envelope.format_version},
               {"command", envelope.command},
               {"parameters", params_json(envelope.parameters)},
               {"started_at", optional_text(envelope.started_at)},
               {"finished_at", optional_text(envelope.finished_at)},
               {"records", std::move(records)}};
  return j.dump(2) + "\n";
}

ReportEnvelope report_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    ReportEnvelope out;
    out.format_version = j.at("format_version").get<int>();
    if (out.format_version != kReportFormatVersion)
      throw std::invalid_argument("report: unsupported format_version " +
                                  std::to_string(out.format_version));
    out.command = j.at("command").get<std::string>();
    out.parameters = params_from(j.at("parameters"));
    out.started_at = optional_text_from(j.at("started_at"));
    out.finished_at = optional_text_from(j.at("finished_at"));
    for (const auto& r : j.at("records")) out.records.push_back(record_from(r));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("report: ") + e.what());
  }
}

std::string to_csv(const ReportEnvelope& envelope) {
  std::string out = "suite,params,verdict,value,witness_g6\n";
  for (const auto& r : envelope.records) {
    std::vector<std::string> row;
    if (const auto* v = std::get_if<VerificationRecord>(&r)) {
      row = {v->check, v->params_text(), v->pass ? "pass" : "fail", v->value, v->witness};
    } else {
      const auto& e = std::get<ExtremalReport>(r);
      row = {"extremal",
             "n=" + std::to_string(e.n) + ";p=" + std::to_string(e.p) + ";predicate=" + e.predicate,
             e.max_value ? "found" : "empty", e.max_value ? to_string(*e.max_value) : "",
             join(e.witnesses, " ")};
    }
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
    out += '\n';
  }
  return out;
}

}  // namespace degpow
