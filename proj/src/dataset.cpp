#include "cibench/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cibench/csv.hpp"
#include "cibench/error.hpp"

namespace cibench {

namespace {

std::vector<std::string> split_header(std::string_view header) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    auto comma = header.find(',', start);
    cols.emplace_back(header.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cols;
}

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

// Maps column name -> index, checking that every required column is present.
std::map<std::string, std::size_t> index_columns(const csv::Record& header,
                                                 std::string_view required_header,
                                                 std::string_view what) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < header.size(); ++i) {
    auto name = trim(header[i]);
    if (!index.emplace(name, i).second) {
      throw Error(ErrorKind::SchemaViolation,
                  std::string(what) + ": duplicate column '" + name + "'");
    }
  }
  for (const auto& col : split_header(required_header)) {
    if (!index.contains(col)) {
      throw Error(ErrorKind::SchemaViolation,
                  std::string(what) + ": missing column '" + col + "'");
    }
  }
  return index;
}

int parse_year(std::string_view cell) {
  auto t = trim(cell);
  int year = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), year);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw Error(ErrorKind::MalformedCsv, "column 'year': not an integer: '" + t + "'");
  }
  return year;
}

std::optional<std::string> check_nonnegative(const std::optional<double>& v, std::string_view name) {
  if (v && *v < 0.0) return std::string(name) + " is negative";
  return std::nullopt;
}

// Row-level failure: raised in strict mode, otherwise recorded as a warning.
void reject(std::vector<IngestWarning>& warnings, bool strict, ErrorKind kind, std::size_t line,
            const std::string& message) {
  if (strict) throw Error(kind, "line " + std::to_string(line) + ": " + message);
  warnings.push_back({line, message + "; row dropped"});
}

}  // namespace

std::optional<std::string> validate_row(const ObservationRow& row) {
  if (row.institution.empty()) return "institution is empty";
  if (row.year < kMinYear || row.year > kMaxYear) {
    return "year " + std::to_string(row.year) + " outside [1990, 2100]";
  }
  if (row.teraflops < 0.0) return "teraflops is negative";
  if (row.salaries < 0.0) return "salaries_musd is negative";
  for (auto [value, name] : {std::pair{&row.herd, "herd_musd"},
                             std::pair{&row.doctorates, "doctorates"},
                             std::pair{&row.publications, "publications"},
                             std::pair{&row.hi_impact_pubs, "hi_impact_pubs"}}) {
    if (auto problem = check_nonnegative(*value, name)) return problem;
  }
  for (const auto& [name, value] : row.extra) {
    if (auto problem = check_nonnegative(value, name)) return problem;
  }
  return std::nullopt;
}

PanelDataset::PanelDataset(std::vector<ObservationRow> rows, std::string provenance)
    : rows_(std::move(rows)), provenance_(std::move(provenance)) {
  if (rows_.empty()) throw Error(ErrorKind::EmptyDataset, "dataset has no rows");
  for (const auto& row : rows_) {
    if (auto problem = validate_row(row)) {
      throw Error(ErrorKind::SchemaViolation,
                  row.institution + " " + std::to_string(row.year) + ": " + *problem);
    }
  }
  std::stable_sort(rows_.begin(), rows_.end(), [](const auto& a, const auto& b) {
    return std::tie(a.institution, a.year) < std::tie(b.institution, b.year);
  });
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0 && rows_[i].institution == rows_[i - 1].institution &&
        rows_[i].year == rows_[i - 1].year) {
      throw Error(ErrorKind::DuplicateKey, "duplicate row for (" + rows_[i].institution + ", " +
                                               std::to_string(rows_[i].year) + ")");
    }
    if (institutions_.empty() || institutions_.back() != rows_[i].institution) {
      institutions_.push_back(rows_[i].institution);
    }
  }
}

bool PanelDataset::has_institution(std::string_view institution) const {
  return std::binary_search(institutions_.begin(), institutions_.end(), institution);
}

std::span<const ObservationRow> PanelDataset::rows_for(std::string_view institution) const {
  auto lo = std::lower_bound(rows_.begin(), rows_.end(), institution,
                             [](const ObservationRow& r, std::string_view v) { return r.institution < v; });
  auto hi = std::upper_bound(lo, rows_.end(), institution,
                             [](std::string_view v, const ObservationRow& r) { return v < r.institution; });
  return {lo, hi};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::Io, "error reading '" + path.string() + "'");
  return ss.str();
}

PanelLoad parse_panel(std::string_view text, const IngestConfig& config, std::string provenance) {
  auto records = csv::parse(text);
  if (records.empty()) throw Error(ErrorKind::EmptyDataset, "panel file is empty");
  const auto cols = index_columns(records.front(), kPanelHeader, "panel");

  std::vector<std::pair<std::string, std::size_t>> extra_cols;
  const auto canonical = split_header(kPanelHeader);
  for (std::size_t i = 0; i < records.front().size(); ++i) {
    auto name = trim(records.front()[i]);
    if (std::find(canonical.begin(), canonical.end(), name) == canonical.end()) {
      extra_cols.emplace_back(name, i);
    }
  }

  std::vector<IngestWarning> warnings;
  std::vector<ObservationRow> rows;
  std::set<std::pair<std::string, int>> seen;
  const std::size_t width = records.front().size();

  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::size_t line = r + 1;
    if (rec.size() != width) {
      reject(warnings, config.strict, ErrorKind::MalformedCsv, line,
             "expected " + std::to_string(width) + " fields, got " + std::to_string(rec.size()));
      continue;
    }
    ObservationRow row;
    std::optional<double> tf, sal;
    try {
      row.institution = trim(rec[cols.at("institution")]);
      row.year = parse_year(rec[cols.at("year")]);
      tf = csv::parse_number(rec[cols.at("teraflops")], "teraflops");
      sal = csv::parse_number(rec[cols.at("salaries_musd")], "salaries_musd");
      row.herd = csv::parse_number(rec[cols.at("herd_musd")], "herd_musd");
      row.doctorates = csv::parse_number(rec[cols.at("doctorates")], "doctorates");
      row.publications = csv::parse_number(rec[cols.at("publications")], "publications");
      row.hi_impact_pubs = csv::parse_number(rec[cols.at("hi_impact_pubs")], "hi_impact_pubs");
      for (const auto& [name, idx] : extra_cols) {
        row.extra.emplace_back(name, csv::parse_number(rec[idx], name));
      }
    } catch (const Error& e) {
      reject(warnings, config.strict, e.kind(), line, e.what());
      continue;
    }
    if (row.institution.empty() || !tf || !sal) {
      reject(warnings, config.strict, ErrorKind::SchemaViolation, line,
             "missing required field (institution, teraflops or salaries_musd)");
      continue;
    }
    row.teraflops = *tf;
    row.salaries = *sal;
    if (auto problem = validate_row(row)) {
      reject(warnings, config.strict, ErrorKind::SchemaViolation, line, *problem);
      continue;
    }
    if (!seen.emplace(row.institution, row.year).second) {
      reject(warnings, config.strict, ErrorKind::DuplicateKey, line,
             "duplicate (" + row.institution + ", " + std::to_string(row.year) + ")");
      continue;
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error(ErrorKind::EmptyDataset, "no valid rows in panel");
  return {PanelDataset(std::move(rows), std::move(provenance)), std::move(warnings)};
}

PanelLoad load_panel(const std::filesystem::path& path, const IngestConfig& config) {
  return parse_panel(read_file(path), config, path.filename().string());
}

std::string serialize_panel(const PanelDataset& panel) {
  std::vector<std::string> extra_names;
  for (const auto& row : panel.rows()) {
    for (const auto& [name, value] : row.extra) {
      if (std::find(extra_names.begin(), extra_names.end(), name) == extra_names.end()) {
        extra_names.push_back(name);
      }
    }
  }
  auto cell = [](const std::optional<double>& v) { return v ? csv::format_double(*v) : std::string(); };

  std::string out(kPanelHeader);
  for (const auto& name : extra_names) out += "," + csv::escape(name);
  out += "\n";
  for (const auto& row : panel.rows()) {
    out += csv::escape(row.institution) + "," + std::to_string(row.year) + "," +
           csv::format_double(row.teraflops) + "," + csv::format_double(row.salaries) + "," +
           cell(row.herd) + "," + cell(row.doctorates) + "," + cell(row.publications) + "," +
           cell(row.hi_impact_pubs);
    for (const auto& name : extra_names) {
      auto it = std::find_if(row.extra.begin(), row.extra.end(),
                             [&](const auto& e) { return e.first == name; });
      out += "," + (it == row.extra.end() ? std::string() : cell(it->second));
    }
    out += "\n";
  }
  return out;
}

ObservationRow normalize_survey(const SurveyRecord& record, const IngestConfig& config) {
  if (!(config.median_compensation > 0.0)) {
    throw Error(ErrorKind::InvalidValue, "median compensation must be positive");
  }
  const std::string who = record.institution + " " + std::to_string(record.year);
  for (auto [value, name] : {std::pair{&record.teraflops, "teraflops"},
                             std::pair{&record.salaries, "salaries_musd"},
                             std::pair{&record.fte_count, "fte_count"},
                             std::pair{&record.herd, "herd_musd"},
                             std::pair{&record.doctorates, "doctorates"},
                             std::pair{&record.publications, "publications"}}) {
    if (*value && **value < 0.0) throw Error(ErrorKind::InvalidValue, who + ": " + name + " is negative");
  }
  for (const auto& item : record.core_inventory) {
    if (item.device_count < 0.0 || item.gf_per_device < 0.0) {
      throw Error(ErrorKind::InvalidValue, who + ": negative inventory entry");
    }
  }

  ObservationRow row;
  row.institution = record.institution;
  row.year = record.year;
  if (record.teraflops) {
    row.teraflops = *record.teraflops;
  } else if (!record.core_inventory.empty()) {
    double gigaflops = 0.0;
    for (const auto& item : record.core_inventory) gigaflops += item.device_count * item.gf_per_device;
    row.teraflops = gigaflops / 1000.0;
  } else {
    throw Error(ErrorKind::InsufficientData, who + ": neither teraflops nor core inventory given");
  }
  if (record.salaries) {
    row.salaries = *record.salaries;
  } else if (record.fte_count) {
    row.salaries = *record.fte_count * config.median_compensation / 1e6;
  } else {
    throw Error(ErrorKind::InsufficientData, who + ": neither salaries nor FTE count given");
  }
  row.herd = record.herd;
  row.doctorates = record.doctorates;
  row.publications = record.publications;
  return row;
}

SurveyLoad parse_survey(std::string_view survey_text, std::optional<std::string_view> inventory_text,
                        const IngestConfig& config) {
  auto records = csv::parse(survey_text);
  if (records.empty()) throw Error(ErrorKind::EmptyDataset, "survey file is empty");
  const auto cols = index_columns(records.front(), kSurveyHeader, "survey");
  const std::size_t width = records.front().size();

  SurveyLoad out;
  std::set<std::pair<std::string, int>> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::size_t line = r + 1;
    if (rec.size() != width) {
      reject(out.warnings, config.strict, ErrorKind::MalformedCsv, line,
             "expected " + std::to_string(width) + " fields, got " + std::to_string(rec.size()));
      continue;
    }
    SurveyRecord s;
    try {
      s.institution = trim(rec[cols.at("institution")]);
      s.year = parse_year(rec[cols.at("year")]);
      s.teraflops = csv::parse_number(rec[cols.at("teraflops")], "teraflops");
      s.salaries = csv::parse_number(rec[cols.at("salaries_musd")], "salaries_musd");
      s.fte_count = csv::parse_number(rec[cols.at("fte_count")], "fte_count");
      s.herd = csv::parse_number(rec[cols.at("herd_musd")], "herd_musd");
      s.doctorates = csv::parse_number(rec[cols.at("doctorates")], "doctorates");
      s.publications = csv::parse_number(rec[cols.at("publications")], "publications");
    } catch (const Error& e) {
      reject(out.warnings, config.strict, e.kind(), line, e.what());
      continue;
    }
    if (s.institution.empty()) {
      reject(out.warnings, config.strict, ErrorKind::SchemaViolation, line, "institution is empty");
      continue;
    }
    if (s.year < kMinYear || s.year > kMaxYear) {
      reject(out.warnings, config.strict, ErrorKind::SchemaViolation, line,
             "year " + std::to_string(s.year) + " outside [1990, 2100]");
      continue;
    }
    if (!seen.emplace(s.institution, s.year).second) {
      reject(out.warnings, config.strict, ErrorKind::DuplicateKey, line,
             "duplicate (" + s.institution + ", " + std::to_string(s.year) + ")");
      continue;
    }
    out.records.push_back(std::move(s));
  }

  if (inventory_text) {
    auto inv = csv::parse(*inventory_text);
    if (!inv.empty()) {
      const auto icols = index_columns(inv.front(), kInventoryHeader, "inventory");
      const std::size_t iwidth = inv.front().size();
      for (std::size_t r = 1; r < inv.size(); ++r) {
        const auto& rec = inv[r];
        const std::size_t line = r + 1;
        if (rec.size() != iwidth) {
          reject(out.warnings, config.strict, ErrorKind::MalformedCsv, line, "inventory: wrong field count");
          continue;
        }
        const auto institution = trim(rec[icols.at("institution")]);
        InventoryItem item;
        try {
          auto count = csv::parse_number(rec[icols.at("device_count")], "device_count");
          auto gf = csv::parse_number(rec[icols.at("gf_per_device")], "gf_per_device");
          if (!count || !gf) {
            reject(out.warnings, config.strict, ErrorKind::SchemaViolation, line,
                   "inventory: missing device_count or gf_per_device");
            continue;
          }
          item = {*count, *gf};
        } catch (const Error& e) {
          reject(out.warnings, config.strict, e.kind(), line, std::string("inventory: ") + e.what());
          continue;
        }
        bool attached = false;
        for (auto& s : out.records) {
          if (s.institution == institution) {
            s.core_inventory.push_back(item);
            attached = true;
          }
        }
        if (!attached) {
          out.warnings.push_back({line, "inventory: unknown institution '" + institution + "' ignored"});
        }
      }
    }
  }
  if (out.records.empty()) throw Error(ErrorKind::EmptyDataset, "no valid rows in survey");
  return out;
}

SurveyLoad load_survey(const std::filesystem::path& survey_path,
                       const std::optional<std::filesystem::path>& inventory_path,
                       const IngestConfig& config) {
  const auto survey = read_file(survey_path);
  std::optional<std::string> inventory;
  if (inventory_path) inventory = read_file(*inventory_path);
  return parse_survey(survey, inventory ? std::optional<std::string_view>(*inventory) : std::nullopt,
                      config);
}

SurveyRows normalize_all(const SurveyLoad& survey, const IngestConfig& config) {
  SurveyRows out;
  out.warnings = survey.warnings;
  for (const auto& record : survey.records) {
    try {
      out.rows.push_back(normalize_survey(record, config));
    } catch (const Error& e) {
      if (config.strict || (e.kind() == ErrorKind::InvalidValue && !(config.median_compensation > 0.0))) {
        throw;
      }
      out.warnings.push_back({0, std::string(e.what()) + "; record dropped"});
    }
  }
  if (out.rows.empty()) throw Error(ErrorKind::EmptyDataset, "no survey records could be normalized");
  return out;
}

}  // namespace cibench
