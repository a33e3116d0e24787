#include "xydopo/report.hpp"

#include <fmt/format.h>

#include <ostream>
#include <set>

namespace xydopo {

namespace {

std::string join_flags(const std::vector<std::string>& flags) {
  std::string out;
  for (const auto& f : flags) {
    if (!out.empty()) out += ';';
    out += f;
  }
  return out;
}

Cell opt(const std::optional<double>& v) {
  if (v) return *v;
  return std::monostate{};
}

void check_keys(const nlohmann::json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where, "must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : obj.items()) {
    if (!ok.contains(key)) {
      throw ConfigError(where.empty() ? key : where + "." + key,
                        "unknown setting");
    }
  }
}

double number(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field, "must be a number");
  return v.get<double>();
}

long long integer(const nlohmann::json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ConfigError(field, "must be an integer");
  return v.get<long long>();
}

std::string text(const nlohmann::json& v, const std::string& field) {
  if (!v.is_string()) throw ConfigError(field, "must be a string");
  return v.get<std::string>();
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;
  return fmt::format("{:.12g}", v);
}

TableWriter::TableWriter(Format format, std::ostream& os,
                         std::vector<std::string> columns,
                         nlohmann::ordered_json meta)
    : format_(format), os_(os), columns_(std::move(columns)) {
  if (format_ == Format::Csv) {
    for (std::size_t i = 0; i < columns_.size(); ++i) {
      if (i) os_ << ',';
      os_ << columns_[i];
    }
    os_ << '\n';
  } else {
    os_ << "{\"meta\":" << meta.dump() << ",\"records\":[";
  }
}

TableWriter::~TableWriter() {
  try {
    finish();
  } catch (...) {
  }
}

void TableWriter::row(const std::vector<Cell>& cells) {
  if (format_ == Format::Csv) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os_ << ',';
      std::visit(
          [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, double>) {
              os_ << format_number(c);
            } else if constexpr (std::is_same_v<T, std::string>) {
              os_ << c;
            } else if constexpr (std::is_same_v<T, bool>) {
              os_ << (c ? "true" : "false");
            }
          },
          cells[i]);
    }
    os_ << '\n';
  } else {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < cells.size() && i < columns_.size(); ++i) {
      std::visit(
          [&](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (!std::is_same_v<T, std::monostate>) {
              obj[columns_[i]] = c;
            }
          },
          cells[i]);
    }
    os_ << (first_ ? "" : ",") << obj.dump();
  }
  first_ = false;
}

void TableWriter::finish() {
  if (finished_) return;
  finished_ = true;
  if (format_ == Format::Json) os_ << "]}\n";
  os_.flush();
}

std::vector<std::string> sweep_columns() {
  return {"control", "h", "delta", "e_g", "m_z", "chi", "phase", "gap", "flags"};
}

std::vector<Cell> sweep_cells(const SweepRecord& r) {
  Cell phase = std::monostate{};
  if (r.phase) phase = std::string(to_string(*r.phase));
  Cell flags = std::monostate{};
  if (!r.flags.empty()) flags = join_flags(r.flags);
  return {r.control, opt(r.h), opt(r.delta), opt(r.e_g), opt(r.m_z),
          opt(r.chi), phase,   opt(r.gap),   flags};
}

nlohmann::ordered_json sweep_meta(const SweepConfig& cfg) {
  nlohmann::ordered_json params;
  if (cfg.model == Model::Dopo) {
    params["j"] = cfg.params.j;
    params["d2"] = cfg.params.d2;
  } else {
    params["jx"] = cfg.params.jx;
    params["jy"] = cfg.params.jy;
  }
  nlohmann::ordered_json meta;
  meta["model"] = std::string(to_string(cfg.model));
  meta["params"] = params;
  meta["version"] = std::string(kVersion);
  meta["control"] = cfg.model == Model::Dopo ? "delta" : "h";
  meta["range"] = {{"start", cfg.range.start},
                   {"stop", cfg.range.stop},
                   {"steps", cfg.range.steps}};
  meta["dh"] = cfg.dh;
  meta["quad"] = {{"tol", cfg.quad.tol}, {"max_nodes", cfg.quad.max_nodes}};
  meta["outputs"] = output_names(cfg.outputs);
  return meta;
}

void apply_config_json(const nlohmann::json& doc, SweepConfig& cfg) {
  check_keys(doc, "",
             {"model", "params", "range", "dh", "quad", "outputs", "format",
              "workers"});
  if (doc.contains("model")) {
    const auto m = parse_model(text(doc["model"], "model"));
    if (!m) throw ConfigError("model", "expected xy, dopo or mapped");
    cfg.model = *m;
  }
  if (doc.contains("params")) {
    const auto& p = doc["params"];
    check_keys(p, "params", {"jx", "jy", "h", "j", "delta", "d2"});
    auto set = [&](const char* key, double& target) {
      if (p.contains(key)) target = number(p[key], std::string("params.") + key);
    };
    set("jx", cfg.params.jx);
    set("jy", cfg.params.jy);
    set("h", cfg.params.h);
    set("j", cfg.params.j);
    set("delta", cfg.params.delta);
    set("d2", cfg.params.d2);
  }
  if (doc.contains("range")) {
    const auto& r = doc["range"];
    check_keys(r, "range", {"start", "stop", "steps"});
    if (r.contains("start")) cfg.range.start = number(r["start"], "range.start");
    if (r.contains("stop")) cfg.range.stop = number(r["stop"], "range.stop");
    if (r.contains("steps")) {
      cfg.range.steps = static_cast<int>(integer(r["steps"], "range.steps"));
    }
  }
  if (doc.contains("dh")) cfg.dh = number(doc["dh"], "dh");
  if (doc.contains("quad")) {
    const auto& q = doc["quad"];
    check_keys(q, "quad", {"tol", "max_nodes"});
    if (q.contains("tol")) cfg.quad.tol = number(q["tol"], "quad.tol");
    if (q.contains("max_nodes")) {
      const auto n = integer(q["max_nodes"], "quad.max_nodes");
      if (n < 0) throw ConfigError("quad.max_nodes", "must be non-negative");
      cfg.quad.max_nodes = static_cast<std::size_t>(n);
    }
  }
  if (doc.contains("outputs")) {
    const auto& o = doc["outputs"];
    if (!o.is_array()) throw ConfigError("outputs", "must be an array");
    std::string joined;
    for (const auto& item : o) {
      if (!joined.empty()) joined += ',';
      joined += text(item, "outputs");
    }
    const auto parsed = parse_outputs(joined);
    if (!parsed) {
      throw ConfigError("outputs",
                        "expected a non-empty subset of e_g, m_z, chi, phase, gap");
    }
    cfg.outputs = *parsed;
  }
  if (doc.contains("format")) {
    const auto f = parse_format(text(doc["format"], "format"));
    if (!f) throw ConfigError("format", "expected csv or json");
    cfg.format = *f;
  }
  if (doc.contains("workers")) {
    cfg.workers = static_cast<int>(integer(doc["workers"], "workers"));
  }
}

}  // namespace xydopo
