// Copyright 2026 The mqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "cli/commands.hpp"
#include "cli/run_config.hpp"
#include "json.hpp"
#include "mqc/quantifiers.hpp"

namespace mqc::cli {
namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct Csv {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t col(const std::string& name) const {
    for (std::size_t k = 0; k < header.size(); ++k)
      if (header[k] == name) return k;
    ADD_FAILURE() << "missing column " << name;
    return 0;
  }
  double num(std::size_t row, const std::string& name) const {
    return std::stod(rows[row][col(name)]);
  }
};

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  if (std::getline(in, line)) csv.header = split_line(line);
  while (std::getline(in, line)) csv.rows.push_back(split_line(line));
  return csv;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mqc_cli_test_" + name);
}

TEST(Grid, InclusiveStop) {
  const auto g = parse_grid("0.01:0.99:0.01");
  ASSERT_EQ(g.size(), 99u);
  EXPECT_DOUBLE_EQ(g.front(), 0.01);
  EXPECT_NEAR(g.back(), 0.99, 1e-15);
  EXPECT_EQ(parse_grid("0:1:0.5").size(), 3u);
  EXPECT_EQ(parse_grid("2:2:1").size(), 1u);
}

TEST(Grid, Malformed) {
  EXPECT_THROW(parse_grid("0:1"), ConfigError);
  EXPECT_THROW(parse_grid("0:1:0"), ConfigError);
  EXPECT_THROW(parse_grid("1:0:0.1"), ConfigError);
  EXPECT_THROW(parse_grid("a:1:0.1"), ConfigError);
  EXPECT_THROW(parse_grid("0:1:0.1x"), ConfigError);
  EXPECT_THROW(parse_triple("1,2"), ConfigError);
}

TEST(Generator, Names) {
  EXPECT_EQ(parse_generator("sx").direction, (Vec3{1, 0, 0}));
  EXPECT_EQ(parse_generator("sy").direction, (Vec3{0, 1, 0}));
  EXPECT_EQ(parse_generator("0,0,1").direction, (Vec3{0, 0, 1}));
  EXPECT_EQ(parse_generator("ising").kind, GeneratorSpec::Kind::kIsing);
}

TEST(Table, NumbersRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300, 0.0}) {
    EXPECT_EQ(std::stod(format_number(v)), v);
  }
  EXPECT_EQ(format_number(std::nan("")), "nan");
  Table t;
  t.columns = {"a", "b"};
  EXPECT_THROW(t.add_row({1.0}), std::logic_error);
}

TEST(Mqi, GhzNonzeroOnlyAtZeroAndN) {
  const Result r = invoke({"mqi", "--family", "ghz", "--n", "3", "--p", "0.5", "--generator", "sz",
                           "--alpha", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 7u);
  for (std::size_t k = 0; k < csv.rows.size(); ++k) {
    const long m = std::stol(csv.rows[k][csv.col("m")]);
    const double re = csv.num(k, "re");
    if (m == 0 || std::abs(m) == 3) {
      EXPECT_GT(std::abs(re), 1e-6) << "m=" << m;
    } else {
      EXPECT_LE(std::abs(re), 1e-12) << "m=" << m;
    }
  }
}

TEST(Mqi, QubitHasThreeRows) {
  const Result r = invoke({"mqi", "--bloch", "0.5,1.5708,0", "--generator", "0,0,1", "--alpha", "0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 3u);
  EXPECT_EQ(csv.rows[0][csv.col("m")], "-1");
  EXPECT_EQ(csv.rows[1][csv.col("m")], "0");
  EXPECT_EQ(csv.rows[2][csv.col("m")], "1");
  double total = 0.0;
  for (std::size_t k = 0; k < 3; ++k) total += csv.num(k, "re");
  EXPECT_NEAR(total, csv.num(0, "c_alpha") * csv.num(0, "c_one_minus_alpha"), 1e-12);
}

TEST(Mqi, RowsSortedByAlphaThenOrder) {
  const Result r = invoke({"mqi", "--random-dim", "4", "--seed", "9", "--alpha-grid", "0.2:0.8:0.3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 15u);
  for (std::size_t k = 1; k < csv.rows.size(); ++k) {
    const double a0 = csv.num(k - 1, "alpha"), a1 = csv.num(k, "alpha");
    EXPECT_TRUE(a0 < a1 || (a0 == a1 && csv.num(k - 1, "m") < csv.num(k, "m")));
  }
}

TEST(ExitCodes, ConfigErrors) {
  EXPECT_EQ(invoke({"mqi", "--bloch", "0.5,1.5708,0", "--alpha", "1.2"}).code, kExitConfig);
  EXPECT_EQ(invoke({"mqi", "--bloch", "0.5,1.5708,0", "--alpha", "0"}).code, kExitConfig);
  EXPECT_EQ(invoke({"mqi"}).code, kExitConfig);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitConfig);
  EXPECT_EQ(invoke({"mqi", "--family", "foo", "--n", "2"}).code, kExitConfig);
  EXPECT_EQ(invoke({"mqi", "--family", "ghz"}).code, kExitConfig);
  EXPECT_EQ(invoke({"mqi", "--family", "ghz", "--n", "2", "--p", "1.5"}).code, kExitConfig);
  EXPECT_EQ(invoke({"mqi", "--bloch", "1.5,0,0"}).code, kExitConfig);
  EXPECT_EQ(invoke({"mqi", "--bell", "0.9,0.9,0.9"}).code, kExitConfig);
  EXPECT_EQ(invoke({"mqi", "--bloch", "0.5,0,0", "--generator", "1,1,0"}).code, kExitConfig);
  EXPECT_EQ(invoke({"mqi", "--bloch", "0.5,0,0", "--bell", "0,0,0"}).code, kExitConfig);
  EXPECT_EQ(invoke({"mqi", "--random-dim", "3", "--generator", "sz"}).code, kExitConfig);
  EXPECT_EQ(invoke({"mqi", "--bloch", "0.5,0,0", "--alpha", "0.5", "--alpha-grid", "0.1:0.2:0.1"}).code,
            kExitConfig);
  EXPECT_EQ(invoke({"mqi", "--state-file", "/nonexistent/state.json"}).code, kExitConfig);
  EXPECT_EQ(invoke({"bounds", "--bloch", "0.5,0,0", "--format", "xml"}).code, kExitConfig);
  EXPECT_EQ(invoke({"echo", "--family", "ghz"}).code, kExitConfig);
  EXPECT_EQ(invoke({"echo", "--n", "11"}).code, kExitConfig);
  EXPECT_EQ(invoke({"echo", "--t-grid", "1:0:0.1"}).code, kExitConfig);
  EXPECT_EQ(invoke({"closed-forms", "--random-dim", "4"}).code, kExitConfig);
  EXPECT_EQ(invoke({"closed-forms", "--family", "w", "--n", "3", "--generator", "sz"}).code,
            kExitConfig);
  const Result bad = invoke({"mqi", "--bloch", "0.5,0,0", "--alpha", "1.2"});
  EXPECT_NE(bad.err.find("alpha"), std::string::npos);
  EXPECT_TRUE(bad.out.empty());
}

TEST(ExitCodes, HelpIsSuccess) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("echo"), std::string::npos);
}

TEST(ExitCodes, NumericalFailure) {
  // A rank-deficient state has no alpha -> 1 limit coefficient.
  const auto path = temp_path("pure.json");
  std::ofstream(path) << R"({"real": [[1, 0], [0, 0]]})";
  const Result r = invoke({"limits", "--state-file", path.string(), "--generator", "sx"});
  EXPECT_EQ(r.code, kExitNumerical);
  EXPECT_TRUE(r.out.empty());
  std::filesystem::remove(path);
}

TEST(StateFile, Validation) {
  const auto path = temp_path("bad.json");
  std::ofstream(path) << R"({"real": [[0.5, 0.1], [0.2, 0.5]]})";
  EXPECT_EQ(invoke({"mqi", "--state-file", path.string()}).code, kExitConfig);
  std::ofstream(path) << R"({"real": [[1.5, 0], [0, -0.5]]})";
  EXPECT_EQ(invoke({"mqi", "--state-file", path.string()}).code, kExitConfig);
  std::ofstream(path) << R"({"real": [[0.5, 0], [0, 0.5]], "imag": [[0, 0.1], [-0.1, 0]]})";
  EXPECT_EQ(invoke({"mqi", "--state-file", path.string()}).code, 0);
  std::ofstream(path) << "not json";
  EXPECT_EQ(invoke({"mqi", "--state-file", path.string()}).code, kExitConfig);
  std::filesystem::remove(path);
}

TEST(Bounds, GhzGridAllChainsHold) {
  const Result r = invoke({"bounds", "--family", "ghz", "--n", "3", "--p", "0.25", "--alpha-grid",
                           "0.01:0.99:0.01"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 99u);
  for (const auto& row : csv.rows)
    for (const char* flag : {"chain_skew", "chain_variance", "chain_fisher"})
      EXPECT_EQ(row[csv.col(flag)], "true");
}

TEST(Bounds, IdentityStateHasZeroQuantifiers) {
  const auto path = temp_path("identity.json");
  std::ofstream(path) << R"({"real": [[0.25,0,0,0],[0,0.25,0,0],[0,0,0.25,0],[0,0,0,0.25]]})";
  const Result r = invoke({"bounds", "--state-file", path.string(), "--alpha-grid", "0.1:0.9:0.2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 5u);
  for (std::size_t k = 0; k < csv.rows.size(); ++k)
    for (const char* q : {"lower_il_term", "f_over_4cc", "wysi", "wydsi", "v_alpha", "v_half", "qfi", "F"})
      EXPECT_EQ(csv.num(k, q), 0.0) << q;
  std::filesystem::remove(path);
}

TEST(Bounds, FileRoundTrip) {
  const auto csv_path = temp_path("bounds.csv");
  const auto json_path = temp_path("bounds.json");
  const std::vector<std::string> base{"bounds", "--random-dim", "8", "--seed", "4", "--generator",
                                      "0.6,0,0.8", "--alpha-grid", "0.1:0.9:0.1"};
  auto with = [&](std::vector<std::string> extra) {
    std::vector<std::string> args = base;
    args.insert(args.end(), extra.begin(), extra.end());
    return invoke(args);
  };
  ASSERT_EQ(with({"--out", csv_path.string()}).code, 0);
  ASSERT_EQ(with({"--out", json_path.string(), "--format", "json"}).code, 0);
  std::ifstream csv_in(csv_path);
  std::stringstream buf;
  buf << csv_in.rdbuf();
  const Csv csv = parse_csv(buf.str());
  std::ifstream json_in(json_path);
  const auto json = nlohmann::json::parse(json_in);
  ASSERT_EQ(csv.rows.size(), 9u);
  ASSERT_EQ(json.size(), 9u);

  const Observable a = collective_spin(3, {0.6, 0.0, 0.8});
  const ComplexMatrix rho = random_density(8, 4);
  for (std::size_t k = 0; k < csv.rows.size(); ++k) {
    const BoundReport r = bound_report(rho, a, csv.num(k, "alpha"));
    EXPECT_EQ(csv.num(k, "wydsi"), r.wydsi);
    EXPECT_EQ(csv.num(k, "qfi"), r.qfi);
    EXPECT_EQ(csv.num(k, "F"), r.second_moment);
    for (std::size_t c = 0; c < csv.header.size(); ++c) {
      const auto& cell = json[k][csv.header[c]];
      if (cell.is_boolean()) {
        EXPECT_EQ(cell.get<bool>() ? "true" : "false", csv.rows[k][c]);
      } else {
        EXPECT_EQ(cell.get<double>(), std::stod(csv.rows[k][c])) << csv.header[c];
      }
    }
  }
  std::filesystem::remove(csv_path);
  std::filesystem::remove(json_path);
}

TEST(ClosedForms, EngineAgreesExceptPrintedForms) {
  for (const std::vector<std::string>& state :
       {std::vector<std::string>{"--bloch", "0.7,0.4,1.1", "--generator", "0.6,0,0.8"},
        std::vector<std::string>{"--bell", "0.6,-0.6,0.2", "--generator", "sy"},
        std::vector<std::string>{"--family", "eqn", "--n", "4", "--p", "0.3"},
        std::vector<std::string>{"--family", "ghz", "--n", "3", "--p", "0.6"},
        std::vector<std::string>{"--family", "w", "--n", "3", "--p", "0.8"}}) {
    std::vector<std::string> args{"closed-forms", "--alpha-grid", "0.05:0.95:0.3"};
    args.insert(args.end(), state.begin(), state.end());
    const Result r = invoke(args);
    ASSERT_EQ(r.code, 0) << r.err;
    const Csv csv = parse_csv(r.out);
    ASSERT_FALSE(csv.rows.empty());
    for (const auto& row : csv.rows) {
      if (row[csv.col("engine")].empty() || row[csv.col("printed_form")] == "true") continue;
      EXPECT_LE(std::stod(row[csv.col("error")]), 1e-9) << row[csv.col("quantifier")];
    }
  }
}

TEST(ClosedForms, PrintedFormsAreFlagged) {
  const Result r = invoke({"closed-forms", "--family", "ghz", "--n", "3", "--p", "0.4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  bool found = false;
  for (const auto& row : csv.rows) {
    if (row[csv.col("quantifier")] != "V_uncorrected") continue;
    found = true;
    EXPECT_EQ(row[csv.col("printed_form")], "true");
    EXPECT_GT(std::stod(row[csv.col("error")]), 1e-3);
  }
  EXPECT_TRUE(found);
}

TEST(Limits, ApproachesCoefficient) {
  const Result r = invoke({"limits", "--random-dim", "4", "--seed", "3", "--generator", "sz"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 4u);
  for (std::size_t k = 1; k < csv.rows.size(); ++k) {
    EXPECT_LT(csv.num(k, "rel_diff"), csv.num(k - 1, "rel_diff"));
  }
  EXPECT_LT(csv.num(3, "rel_diff"), 1e-3);
}

TEST(Echo, DefaultGridHasNineOrderColumns) {
  const Result r = invoke({"echo", "--n", "4", "--p", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  int orders = 0;
  for (const auto& h : csv.header)
    if (h.rfind("I[", 0) == 0 && h.find("_norm") == std::string::npos) ++orders;
  EXPECT_EQ(orders, 9);
  EXPECT_EQ(csv.rows.size(), 120u);
  for (std::size_t k = 0; k < csv.rows.size(); ++k) {
    const double f = csv.num(k, "f");
    EXPECT_GE(f, -1e-12);
    EXPECT_LE(f, 1.0 + 1e-12);
    if (k > 0) {
      const double a0 = csv.num(k - 1, "alpha"), a1 = csv.num(k, "alpha");
      EXPECT_TRUE(a0 < a1 || (a0 == a1 && csv.num(k - 1, "t") < csv.num(k, "t")));
    }
  }
}

TEST(Echo, OnePointGridNormalizesToZero) {
  const Result r = invoke({"echo", "--n", "3", "--t-grid", "0.7:0.7:1", "--alpha", "0.4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Csv csv = parse_csv(r.out);
  ASSERT_EQ(csv.rows.size(), 1u);
  int normalized = 0;
  for (std::size_t c = 0; c < csv.header.size(); ++c) {
    if (csv.header[c].find("_norm") == std::string::npos) continue;
    ++normalized;
    EXPECT_EQ(std::stod(csv.rows[0][c]), 0.0) << csv.header[c];
  }
  EXPECT_EQ(normalized, 2 + 7);
}

TEST(Determinism, ByteIdenticalOutput) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"echo", "--n", "3", "--format", "json"},
        std::vector<std::string>{"mqi", "--random-dim", "8", "--seed", "11", "--generator", "ising",
                                 "--alpha-grid", "0.1:0.9:0.4"},
        std::vector<std::string>{"bounds", "--random-dim", "4", "--seed", "5", "--alpha-grid",
                                 "0.1:0.9:0.1"}}) {
    const Result a = invoke(args), b = invoke(args);
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  EXPECT_NE(invoke({"mqi", "--random-dim", "4", "--seed", "1"}).out,
            invoke({"mqi", "--random-dim", "4", "--seed", "2"}).out);
}

}  // namespace
}  // namespace mqc::cli
