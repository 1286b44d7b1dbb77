#include <doctest.h>

#include <atomic>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zeno/sweep.hpp"

using namespace zeno;

TEST_CASE("numbers render as shortest round-trippable %.9g tokens") {
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-2.5) == "-2.5");
  CHECK(format_number(1e-9) == "1e-09");
  CHECK(format_number(1234567890.0) == "1.23456789e+09");
  CHECK(format_number(0.962958670) == "0.96295867");
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("csv writer: header, fields, and empty cells") {
  Table t;
  t.columns = {"a", "b", "c"};
  t.rows.push_back({Cell::number(1.5), Cell::none(), Cell::text("hey")});
  t.rows.push_back({Cell::number(0), Cell::number(-1), Cell::none()});
  std::ostringstream os;
  write_csv(t, os);
  CHECK(os.str() == "a,b,c\n1.5,,hey\n0,-1,\n");
}

TEST_CASE("json writer: params order, nulls, and quoted non-numerics") {
  Table t;
  t.columns = {"x", "note"};
  t.params = {{"eta", Cell::number(0.05)},
              {"beta", Cell::text("inf")},
              {"family", Cell::text("phi")}};
  t.rows.push_back({Cell::number(2), Cell::none()});
  std::ostringstream os;
  write_json(t, os);
  CHECK(os.str() ==
        "{\n"
        "  \"params\": {\n"
        "    \"eta\": 0.05,\n"
        "    \"beta\": \"inf\",\n"
        "    \"family\": \"phi\"\n"
        "  },\n"
        "  \"columns\": [\"x\", \"note\"],\n"
        "  \"rows\": [\n"
        "    [2, null]\n"
        "  ]\n"
        "}\n");
}

TEST_CASE("json writer handles an empty table") {
  Table t;
  t.columns = {"x"};
  std::ostringstream os;
  write_json(t, os);
  CHECK(os.str() ==
        "{\n  \"params\": {},\n  \"columns\": [\"x\"],\n  \"rows\": []\n}\n");
}

TEST_CASE("thread resolution") {
  CHECK(resolve_threads(5) == 5);
  CHECK(resolve_threads(1) == 1);
  CHECK(resolve_threads(0) >= 1);
  CHECK(resolve_threads(-3) >= 1);
}

TEST_CASE("parallel_for covers every index exactly once") {
  for (int threads : {1, 3, 8}) {
    std::vector<std::atomic<int>> hits(101);
    parallel_for(101, threads, [&](int i) { hits[i]++; });
    for (const auto& h : hits) CHECK(h.load() == 1);
  }
}

TEST_CASE("parallel_for propagates worker exceptions") {
  CHECK_THROWS_AS(
      parallel_for(16, 4,
                   [](int i) {
                     if (i == 7) throw std::runtime_error("boom");
                   }),
      std::runtime_error);
}

TEST_CASE("rate table starts from the static limit") {
  GammaSpec spec;
  spec.tau_steps = 5;
  spec.tau_max = 2.0;
  const Table t = run_gamma(spec, 2);
  REQUIRE(t.rows.size() == 5);
  CHECK(t.columns == std::vector<std::string>{"tau", "gamma", "dgamma",
                                              "survival_u2"});
  // tau = 0: no decay yet, unit derivative in normalized units
  CHECK(t.rows[0][0].num == 0.0);
  CHECK(t.rows[0][1].num == 0.0);
  CHECK(t.rows[0][2].num == 1.0);
  CHECK(t.rows[0][3].num == 1.0);
  // grid endpoints are exact
  CHECK(t.rows[4][0].num == 2.0);
}

TEST_CASE("rate table echoes parameters with flag-style keys") {
  GammaSpec spec;
  const Table t = run_gamma(spec, 1);
  REQUIRE(t.params.size() == 8);
  CHECK(t.params[0].first == "tau-min");
  CHECK(t.params[7].first == "beta");
  CHECK(t.params[7].second.kind == Cell::Kind::text);
  CHECK(t.params[7].second.str == "inf");
}

TEST_CASE("crossover rows for the three regimes") {
  {
    CrossoverSpec spec;
    spec.eta = 1.0;
    spec.bias = 0.0;
    const Table t = run_crossover(spec);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][0].str == "unbiased");
    CHECK(t.rows[0][1].num == doctest::Approx(1.0));
    CHECK(t.rows[0][3].kind == Cell::Kind::empty);
  }
  {
    CrossoverSpec spec;
    spec.eta = 0.05;
    spec.bias = 0.65;
    const Table t = run_crossover(spec);
    CHECK(t.rows[0][0].str == "biased");
    CHECK(t.rows[0][1].kind == Cell::Kind::empty);
    CHECK(t.rows[0][2].num == doctest::Approx(2.2395570041838027));
    CHECK(t.rows[0][3].kind == Cell::Kind::number);
  }
  {
    CrossoverSpec spec;
    spec.eta = 0.3;
    spec.bias = 0.0;
    const Table t = run_crossover(spec);
    CHECK(t.rows[0][0].str == "none");
    CHECK(t.rows[0][1].kind == Cell::Kind::empty);
    CHECK(t.rows[0][2].kind == Cell::Kind::empty);
    CHECK(t.rows[0][3].kind == Cell::Kind::empty);
  }
}

TEST_CASE("family sweep: clean runs omit the status column") {
  FamilySweepSpec spec;
  spec.tau_steps = 9;
  const Table t = run_sweep(spec, 4);
  REQUIRE(t.rows.size() == 9);
  CHECK(t.columns.size() == 11);
  CHECK(t.columns.back() == "CC_rr");
  // tau = 0 row: pure initial state, empty reservoir
  CHECK(t.rows[0][1].num == 1.0);
  CHECK(t.rows[0][3].num == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(t.rows[0][4].num == doctest::Approx(0.0));
  // discord of the pure state
  CHECK(t.rows[0][5].num == doctest::Approx(0.7219280948873623).epsilon(1e-5));
}

TEST_CASE("family sweep is deterministic across thread counts") {
  FamilySweepSpec spec;
  spec.tau_steps = 13;
  const Table a = run_sweep(spec, 1);
  const Table b = run_sweep(spec, 8);
  std::ostringstream sa, sb;
  write_csv(a, sa);
  write_csv(b, sb);
  CHECK(sa.str() == sb.str());
}

TEST_CASE("precision sweep flags blown-up cells and keeps the grid") {
  NhSweepSpec spec;
  spec.r_min = 0.05;
  spec.r_max = 0.6;
  spec.r_steps = 3;
  spec.t_steps = 5;
  const Table t = run_nh_sweep(spec, 3);
  REQUIRE(t.rows.size() == 15);
  REQUIRE(t.columns.size() == 7);
  CHECK(t.columns.back() == "status");

  int indet = 0;
  for (const auto& row : t.rows) {
    REQUIRE(row.size() == 7);
    const bool is_indet = row[6].str == "indeterminate";
    indet += is_indet;
    if (is_indet) {
      // occupation numbers stay printed, discord cells go empty
      CHECK(row[4].kind == Cell::Kind::empty);
      CHECK(row[5].kind == Cell::Kind::empty);
    } else {
      CHECK(row[4].kind == Cell::Kind::number);
    }
  }
  CHECK(indet > 0);

  // the t = 0 column is always determinate
  for (size_t i = 0; i < t.rows.size(); i += 5)
    CHECK(t.rows[i][6].str == "determinate");
}

TEST_CASE("validation suite passes at the default tolerance") {
  const ValidateReport rep = run_validate(1e-10);
  CHECK(rep.passed);
  CHECK(rep.text.find("4/4 checks passed") != std::string::npos);
}

TEST_CASE("validation suite fails when quadrature is loosened") {
  const ValidateReport rep = run_validate(1e-4);
  CHECK_FALSE(rep.passed);
  CHECK(rep.text.find("FAIL") != std::string::npos);
}
