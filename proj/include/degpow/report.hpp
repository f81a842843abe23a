#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "degpow/enumerate.hpp"
#include "degpow/verify.hpp"

namespace degpow {

inline constexpr int kReportFormatVersion = 1;

using ReportRecord = std::variant<VerificationRecord, ExtremalReport>;

struct ReportEnvelope {
  int format_version = kReportFormatVersion;
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  // Left empty unless asked for, so that identical runs give identical bytes.
  std::optional<std::string> started_at;
  std::optional<std::string> finished_at;
  std::vector<ReportRecord> records;

  bool all_pass() const;

  friend bool operator==(const ReportEnvelope&, const ReportEnvelope&) = default;
};

/// Current UTC time as 2026-01-31T12:00:00Z.
std::string utc_timestamp();

std::string to_json(const ReportEnvelope& envelope);

/// Inverse of to_json; throws std::invalid_argument on malformed input.
ReportEnvelope report_from_json(std::string_view text);

/// Header "suite,params,verdict,value,witness_g6", one row per record.
std::string to_csv(const ReportEnvelope& envelope);

}  // namespace degpow
