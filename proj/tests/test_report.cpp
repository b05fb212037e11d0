#include <cstdlib>
#include <random>

#include "doctest.h"

#include "cibench/error.hpp"
#include "cibench/production_model.hpp"
#include "cibench/report.hpp"
#include "cibench/tables.hpp"

using namespace cibench;

TEST_CASE("fixed formatting") {
  CHECK(format_fixed(0.0304, 3) == "0.030");
  CHECK(format_fixed(-0.0001, 3) == "0.000");
  CHECK(format_fixed(-1.5, 1) == "-1.5");
  CHECK(format_fixed(11470.0, 0) == "11470");
  auto c = number_cell(2.9449, 2);
  CHECK(c.display == "2.94");
  CHECK(c.value == 2.9449);
}

TEST_CASE("regression cells carry stars and bracketed standard errors") {
  ModelSuite suite;
  suite.scope = "combined";
  suite.n_obs = 86;
  OutputModel m{Output::publications, {}, {}};
  m.fit.intercept = {"(Intercept)", 1000.0, 200.0, 5.0, 1e-6};
  m.fit.coefficients = {{"TF", 0.030, 0.008, 3.75, 0.000326}, {"Salaries", 1369.031, 700.0, 1.96, 0.053}};
  m.fit.r_squared = 0.634;
  m.fit.adj_r_squared = 0.625;
  m.fit.n_obs = 86;
  suite.models.push_back(m);
  for (Output o : {Output::doctorates, Output::herd, Output::hi_impact_pubs}) {
    OutputModel other = m;
    other.output = o;
    suite.models.push_back(other);
  }
  auto section = regression_section(suite, DisplayOptions{});
  bool saw_tf = false;
  for (std::size_t i = 0; i < section.rows.size(); ++i) {
    if (section.rows[i][0].display == "TF") {
      saw_tf = true;
      CHECK(section.rows[i][1].display == "0.030***");
      CHECK(section.rows[i][1].value == 0.030);
      CHECK(section.rows[i + 1][1].display == "(0.008)");
    }
    if (section.rows[i][0].display == "Salaries") CHECK(section.rows[i][1].display == "1369.031");
    if (section.rows[i][0].display == "Adj. R^2") CHECK(section.rows[i][1].display == "0.625");
    if (section.rows[i][0].display == "Num. obs.") CHECK(section.rows[i][1].display == "86");
  }
  CHECK(saw_tf);
  CHECK_FALSE(section.notes.empty());
}

TEST_CASE("empty report renders in every format") {
  Report empty{"Nothing", {}};
  for (Format f : {Format::markdown, Format::csv, Format::json}) CHECK_NOTHROW(render_report(empty, f));
  CHECK(parse_report_json(render_report(empty, Format::json)) == empty);
}

TEST_CASE("json rendering round trips exactly") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  Report report{"Random \"report\"", {}};
  for (int s = 0; s < 3; ++s) {
    Section section{"S" + std::to_string(s), {"name", "value", "other"}, {}, {"note, with comma"}};
    for (int r = 0; r < 10; ++r) {
      const double v = u(rng);
      section.rows.push_back({text_cell("row" + std::to_string(r)), number_cell(v, 3), text_cell("")});
    }
    report.sections.push_back(section);
  }
  CHECK(parse_report_json(render_report(report, Format::json)) == report);
}

TEST_CASE("markdown and csv layouts") {
  Report one{"T", {{"Only", {"a", "b"}, {{text_cell("x,y"), number_cell(1.5, 1)}}, {"a note"}}}};
  const auto csv = render_report(one, Format::csv);
  CHECK(csv.find("# ") == std::string::npos);
  CHECK(csv.find("\"x,y\",1.5") != std::string::npos);
  const auto md = render_report(one, Format::markdown);
  CHECK(md.find("## Only") != std::string::npos);
  CHECK(md.find("| a | b |") != std::string::npos);
  CHECK(md.find("_a note_") != std::string::npos);

  Report two = one;
  two.sections.push_back(one.sections[0]);
  CHECK(render_report(two, Format::csv).find("# Only") != std::string::npos);
}

TEST_CASE("format names") {
  CHECK(parse_format("md") == Format::markdown);
  CHECK(parse_format("markdown") == Format::markdown);
  CHECK(parse_format("csv") == Format::csv);
  CHECK(parse_format("json") == Format::json);
  try {
    parse_format("xlsx");
    FAIL("expected UnsupportedFormat");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedFormat);
  }
}

TEST_CASE("precision override from the environment") {
  ::unsetenv("CIBENCH_PRECISION");
  CHECK(display_options_from_env().decimals == 3);
  ::setenv("CIBENCH_PRECISION", "5", 1);
  CHECK(display_options_from_env().decimals == 5);
  ::setenv("CIBENCH_PRECISION", "many", 1);
  CHECK_THROWS_AS(display_options_from_env(), Error);
  ::setenv("CIBENCH_PRECISION", "13", 1);
  CHECK_THROWS_AS(display_options_from_env(), Error);
  ::unsetenv("CIBENCH_PRECISION");
}
