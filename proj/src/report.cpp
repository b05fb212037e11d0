#include "cibench/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "json.hpp"

#include "cibench/csv.hpp"
#include "cibench/error.hpp"

namespace cibench {

using Json = nlohmann::ordered_json;

Format parse_format(std::string_view name) {
  if (name == "markdown" || name == "md") return Format::markdown;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw Error(ErrorKind::UnsupportedFormat, "unsupported format '" + std::string(name) + "'");
}

std::string format_fixed(double value, int decimals) {
  if (std::isnan(value)) return "NaN";
  if (std::isinf(value)) return value > 0 ? "Inf" : "-Inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

Cell number_cell(double value, int decimals) {
  Cell c{format_fixed(value, decimals), std::nullopt};
  if (std::isfinite(value)) c.value = value;
  return c;
}

Cell text_cell(std::string text) { return {std::move(text), std::nullopt}; }

DisplayOptions display_options_from_env() {
  DisplayOptions opts;
  if (const char* env = std::getenv("CIBENCH_PRECISION"); env && *env) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 0 || v > 12) {
      throw Error(ErrorKind::Usage, std::string("CIBENCH_PRECISION must be an integer in [0, 12], got '") + env + "'");
    }
    opts.decimals = static_cast<int>(v);
  }
  return opts;
}

namespace {

std::string md_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else if (c == '\n') out += ' ';
    else out += c;
  }
  return out;
}

std::string render_markdown(const Report& report) {
  std::string out;
  if (!report.title.empty()) out += "# " + report.title + "\n";
  for (const auto& section : report.sections) {
    if (!out.empty()) out += "\n";
    out += "## " + section.title + "\n\n";
    if (!section.columns.empty()) {
      out += "|";
      for (const auto& col : section.columns) out += " " + md_escape(col) + " |";
      out += "\n|";
      for (std::size_t i = 0; i < section.columns.size(); ++i) out += i == 0 ? ":---|" : "---:|";
      out += "\n";
      for (const auto& row : section.rows) {
        out += "|";
        for (const auto& cell : row) out += " " + md_escape(cell.display) + " |";
        out += "\n";
      }
    }
    for (const auto& note : section.notes) out += "\n_" + note + "_\n";
  }
  return out;
}

std::string render_csv(const Report& report) {
  std::string out;
  const bool titled = report.sections.size() > 1;
  bool first = true;
  for (const auto& section : report.sections) {
    if (!first) out += "\n";
    first = false;
    if (titled) out += "# " + section.title + "\n";
    for (std::size_t i = 0; i < section.columns.size(); ++i) {
      out += (i ? "," : "") + csv::escape(section.columns[i]);
    }
    out += "\n";
    for (const auto& row : section.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv::escape(row[i].display);
      out += "\n";
    }
  }
  return out;
}

Json to_json(const Report& report) {
  Json sections = Json::array();
  for (const auto& section : report.sections) {
    Json rows = Json::array();
    for (const auto& row : section.rows) {
      Json cells = Json::array();
      for (const auto& cell : row) {
        Json c{{"display", cell.display}};
        if (cell.value) c["value"] = *cell.value;
        cells.push_back(std::move(c));
      }
      rows.push_back(std::move(cells));
    }
    sections.push_back(Json{{"title", section.title},
                            {"columns", section.columns},
                            {"rows", std::move(rows)},
                            {"notes", section.notes}});
  }
  return Json{{"title", report.title}, {"sections", std::move(sections)}};
}

}  // namespace

std::string render_report(const Report& report, Format format) {
  switch (format) {
    case Format::markdown: return render_markdown(report);
    case Format::csv: return render_csv(report);
    case Format::json: return to_json(report).dump(2) + "\n";
  }
  throw Error(ErrorKind::UnsupportedFormat, "unsupported format");
}

Report parse_report_json(std::string_view text) {
  try {
    const auto j = Json::parse(text);
    Report report;
    report.title = j.at("title").get<std::string>();
    for (const auto& s : j.at("sections")) {
      Section section;
      section.title = s.at("title").get<std::string>();
      section.columns = s.at("columns").get<std::vector<std::string>>();
      section.notes = s.at("notes").get<std::vector<std::string>>();
      for (const auto& r : s.at("rows")) {
        auto& row = section.rows.emplace_back();
        for (const auto& c : r) {
          Cell cell{c.at("display").get<std::string>(), std::nullopt};
          if (c.contains("value")) cell.value = c.at("value").get<double>();
          row.push_back(std::move(cell));
        }
      }
      report.sections.push_back(std::move(section));
    }
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SchemaViolation, std::string("report json: ") + e.what());
  }
}

}  // namespace cibench
