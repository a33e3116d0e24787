#pragma once

#include <iosfwd>
#include <json.hpp>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xydopo/sweep.hpp"

namespace xydopo {

inline constexpr std::string_view kVersion = "0.1.0";

/// Sweep CSV header; cells are empty when a value is undefined or unrequested.
inline constexpr std::string_view kSweepColumns =
    "control,h,delta,e_g,m_z,chi,phase,gap,flags";

/// CSV number formatting: 12 significant digits, "-0" printed as "0".
std::string format_number(double v);

using Cell = std::variant<std::monostate, double, std::string, bool>;

/// Streams a table as CSV (header + rows, '\n' endings) or as a JSON object
/// {"meta": ..., "records": [...]} written incrementally. JSON numbers keep
/// full double precision.
class TableWriter {
 public:
  TableWriter(Format format, std::ostream& os, std::vector<std::string> columns,
              nlohmann::ordered_json meta);
  TableWriter(const TableWriter&) = delete;
  TableWriter& operator=(const TableWriter&) = delete;
  ~TableWriter();

  void row(const std::vector<Cell>& cells);
  /// Closes the JSON document. Called by the destructor if not called.
  void finish();

 private:
  Format format_;
  std::ostream& os_;
  std::vector<std::string> columns_;
  bool first_ = true;
  bool finished_ = false;
};

std::vector<std::string> sweep_columns();
std::vector<Cell> sweep_cells(const SweepRecord& r);

nlohmann::ordered_json sweep_meta(const SweepConfig& cfg);

/// Overlays settings from a JSON config document onto cfg:
///   {"model": "xy"|"dopo"|"mapped",
///    "params": {"jx", "jy", "h", "j", "delta", "d2"},
///    "range": {"start", "stop", "steps"},
///    "dh", "quad": {"tol", "max_nodes"},
///    "outputs": ["e_g", ...], "format": "csv"|"json", "workers"}
/// Unknown keys or wrongly typed values raise ConfigError.
void apply_config_json(const nlohmann::json& doc, SweepConfig& cfg);

}  // namespace xydopo
