#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "mobb/harness.hpp"
#include "mobb/pareto.hpp"
#include "oracles.hpp"

using mobb::Algorithm;
using mobb::ExperimentConfig;
using mobb::Vector;

namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

ExperimentConfig small_config(std::vector<std::string> names, int starts,
                              std::vector<Algorithm> algos = {Algorithm::kBBDQN}) {
  ExperimentConfig c;
  for (auto& n : names) c.problems.push_back({n, std::nullopt});
  c.algorithms = std::move(algos);
  c.starts_per_problem = starts;
  c.master_seed = 11;
  return c;
}

std::string summary_csv(const mobb::ExperimentResult& r) {
  std::ostringstream out;
  mobb::write_summary_csv(out, r.summary, false);
  return out.str();
}

}  // namespace

// Frozen from the first run, and rebuilt here from the documented recipe:
// mt19937_64 seeded directly, top 53 bits of one draw per coordinate.
TEST(Sampling, BK1Snapshot) {
  const auto pts = mobb::sample_initial_points(mobb::get_problem("BK1"), 3, 42);
  ASSERT_EQ(pts.size(), 3u);
  const double expected[3][2] = {{6.327332994318084, 4.5854709078204614},
                                 {6.2821780112203989, -2.955909745513444},
                                 {8.5490344964256746, -3.5889753235574444}};
  std::mt19937_64 gen(42);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      EXPECT_DOUBLE_EQ(pts[i][j], -5.0 + u * 15.0);
      EXPECT_DOUBLE_EQ(pts[i][j], expected[i][j]);
      EXPECT_GE(pts[i][j], -5.0);
      EXPECT_LE(pts[i][j], 10.0);
    }
  }
}

TEST(Sampling, DegenerateBounds) {
  const Vector b = Vector::Constant(3, 1.25);
  const auto pts = mobb::sample_initial_points(b, b, 1, 9);
  ASSERT_EQ(pts.size(), 1u);
  EXPECT_EQ(pts[0], b);
}

TEST(Sampling, JOS1DimensionThousandInRange) {
  const auto pts = mobb::sample_initial_points(mobb::get_problem("JOS1", 1000), 5, 3);
  for (const auto& x : pts) {
    ASSERT_EQ(x.size(), 1000);
    EXPECT_GE(x.minCoeff(), -2.0);
    EXPECT_LE(x.maxCoeff(), 2.0);
  }
}

TEST(Sampling, Errors) {
  EXPECT_THROW(mobb::sample_initial_points(Vector::Zero(2), Vector::Ones(2), 0, 1),
               std::invalid_argument);
  EXPECT_THROW(mobb::sample_initial_points(Vector::Ones(2), Vector::Zero(2), 1, 1),
               std::invalid_argument);
  EXPECT_THROW(mobb::sample_initial_points(Vector::Zero(2), Vector::Ones(3), 1, 1),
               std::exception);
}

TEST(Sampling, Reproducible) {
  const auto p = mobb::get_problem("MOP2");
  EXPECT_EQ(mobb::sample_initial_points(p, 4, 5), mobb::sample_initial_points(p, 4, 5));
  EXPECT_NE(mobb::sample_initial_points(p, 4, 5)[0],
            mobb::sample_initial_points(p, 4, 6)[0]);
}

TEST(Seeds, CounterBased) {
  EXPECT_EQ(mobb::derive_start_seed(7, "BK1", 3), mobb::derive_start_seed(7, "BK1", 3));
  EXPECT_NE(mobb::derive_start_seed(7, "BK1", 3), mobb::derive_start_seed(7, "BK1", 4));
  EXPECT_NE(mobb::derive_start_seed(7, "BK1", 3), mobb::derive_start_seed(7, "PNR", 3));
  EXPECT_NE(mobb::derive_start_seed(7, "BK1", 3), mobb::derive_start_seed(8, "BK1", 3));
  EXPECT_NE(mobb::mix64(1), mobb::mix64(2));
}

TEST(Experiment, EmptyProblemList) {
  const auto r = mobb::run_experiment(small_config({}, 3));
  EXPECT_TRUE(r.records.empty());
  EXPECT_TRUE(r.summary.empty());
  EXPECT_EQ(summary_csv(r), "problem,algorithm,runs,converged,nf,mean_iter,mean_feval\n");
}

TEST(Experiment, RejectsBadConfig) {
  EXPECT_THROW(mobb::run_experiment(small_config({"BK1"}, 0)), std::invalid_argument);
  auto c = small_config({"NOPE"}, 1);
  EXPECT_THROW(mobb::run_experiment(c), std::exception);
}

TEST(Experiment, BK1Table) {
  const auto r = mobb::run_experiment(small_config({"BK1"}, 200));
  ASSERT_EQ(r.summary.size(), 1u);
  const auto& row = r.summary[0];
  EXPECT_EQ(row.runs, 200);
  EXPECT_EQ(row.nf, 0);
  EXPECT_NEAR(row.mean_iter, 2.0, 1.0);
  EXPECT_GE(row.mean_feval, row.mean_iter);
}

TEST(Experiment, PairedStartsAcrossAlgorithms) {
  const auto r = mobb::run_experiment(
      small_config({"PNR"}, 4, {Algorithm::kBBDQN, Algorithm::kMBFGSMO, Algorithm::kSDMO}));
  ASSERT_EQ(r.records.size(), 12u);
  for (int s = 0; s < 4; ++s) {
    EXPECT_EQ(r.records[s].x0, r.records[4 + s].x0);
    EXPECT_EQ(r.records[s].x0, r.records[8 + s].x0);
    EXPECT_EQ(r.records[s].seed, r.records[8 + s].seed);
  }
  EXPECT_EQ(r.records[0].algorithm, Algorithm::kBBDQN);
  EXPECT_EQ(r.records[11].algorithm, Algorithm::kSDMO);
}

TEST(Experiment, NFAccountingAndMeans) {
  auto c = small_config({"WIT", "Deb", "SLCDT1"}, 30, {Algorithm::kBBDQN, Algorithm::kSDMO});
  c.solver.max_iter = 40;  // force some MAX_ITER records
  for (bool include : {false, true}) {
    const auto r = mobb::run_experiment(c, include);
    ASSERT_EQ(r.summary.size(), 6u);
    int total_nf = 0;
    for (const auto& row : r.summary) {
      int runs = 0, nf = 0, counted = 0;
      double it = 0, fe = 0;
      for (const auto& rec : r.records) {
        if (rec.problem != row.problem || rec.algorithm != row.algorithm) continue;
        ++runs;
        if (!rec.converged()) ++nf;
        if (rec.converged() || include) {
          ++counted;
          it += rec.iterations;
          fe += rec.fevals;
        }
      }
      EXPECT_EQ(row.runs, runs);
      EXPECT_EQ(row.nf, nf);
      EXPECT_EQ(row.converged + row.nf, row.runs);
      if (counted) {
        EXPECT_NEAR(row.mean_iter, it / counted, 1e-12);
        EXPECT_NEAR(row.mean_feval, fe / counted, 1e-12);
      }
      total_nf += row.nf;
    }
    EXPECT_GT(total_nf, 0);
  }
}

TEST(Experiment, ReproducibleAcrossThreadCounts) {
  auto c = small_config({"MOP2", "FDS", "JOS1a"}, 8, {Algorithm::kBBDQN, Algorithm::kMBFGSMO});
  c.threads = 1;
  const auto a = mobb::run_experiment(c);
  c.threads = 3;
  const auto b = mobb::run_experiment(c);
  EXPECT_EQ(summary_csv(a), summary_csv(b));
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].f_final, b.records[i].f_final);
    EXPECT_EQ(a.records[i].seed, b.records[i].seed);
  }
}

TEST(Experiment, ScalableVariant) {
  ExperimentConfig c;
  c.problems.push_back({"JOS1", 10});
  c.algorithms = {Algorithm::kBBDQN};
  c.starts_per_problem = 3;
  const auto r = mobb::run_experiment(c);
  ASSERT_EQ(r.summary.size(), 1u);
  EXPECT_EQ(r.summary[0].problem, "JOS1_n10");
}

TEST(Output, SummaryCsvColumns) {
  const auto r = mobb::run_experiment(small_config({"BK1"}, 3));
  std::ostringstream with_time;
  mobb::write_summary_csv(with_time, r.summary, true);
  EXPECT_EQ(with_time.str().rfind("problem,algorithm,runs,converged,nf,mean_iter,mean_feval,"
                                  "mean_time_ms\n",
                                  0),
            0u);
  std::ostringstream md;
  mobb::write_summary_markdown(md, r.summary);
  EXPECT_NE(md.str().find("| BK1 | bbdqn |"), std::string::npos);
  std::ostringstream rec;
  mobb::write_records_csv(rec, r.records);
  std::istringstream in(rec.str());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  EXPECT_EQ(lines, 4);
}

TEST(FrontData, FilesAndHeaders) {
  const auto p = mobb::get_problem("SLCDT1");
  const auto r = mobb::run_experiment(
      small_config({"SLCDT1"}, 40, {Algorithm::kBBDQN, Algorithm::kMBFGSMO}));
  const auto reference = mobb::grid_reference_front(p, 51);
  const auto dir = oracle::scratch_dir("front_slcdt1");
  const auto files = mobb::emit_front_data(p, r.records, reference, dir);
  for (const auto& f : {files.reference, files.proposed, files.baseline, files.plot_script}) {
    EXPECT_TRUE(std::filesystem::exists(f)) << f;
  }
  const auto lines = read_lines(files.proposed);
  ASSERT_GE(lines.size(), 2u);
  EXPECT_EQ(lines[0], "x_1,x_2,f_1,f_2,source");
  EXPECT_LE(lines.size() - 1, 40u);
  // Rows are mutually nondominated.
  std::vector<Vector> fs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::stringstream ss(lines[i]);
    std::vector<double> cells;
    for (std::string cell; std::getline(ss, cell, ',');) {
      if (cell != "SOLVER_RUN") cells.push_back(std::stod(cell));
    }
    ASSERT_EQ(cells.size(), 4u);
    Vector f(2);
    f << cells[2], cells[3];
    fs.push_back(f);
  }
  EXPECT_EQ(oracle::pairwise_filter(fs).size(), fs.size());
  EXPECT_EQ(read_lines(files.reference).size(), reference.size() + 1);
}

TEST(FrontData, ThreeObjectiveSchemaAndEmptyRuns) {
  const auto p = mobb::get_problem("MOP5");
  auto c = small_config({"MOP5"}, 3);
  c.solver.max_iter = 1;  // nothing converges
  const auto r = mobb::run_experiment(c);
  const auto dir = oracle::scratch_dir("front_mop5");
  const auto files = mobb::emit_front_data(p, r.records, {}, dir);
  const auto lines = read_lines(files.proposed);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_EQ(lines[0], "x_1,x_2,f_1,f_2,f_3,source");
  EXPECT_EQ(read_lines(files.baseline).size(), 1u);
}

TEST(FrontData, MixedProblemsRejected) {
  const auto r = mobb::run_experiment(small_config({"BK1", "PNR"}, 2));
  EXPECT_THROW(mobb::emit_front_data(mobb::get_problem("BK1"), r.records, {},
                                     oracle::scratch_dir("front_mixed")),
               std::invalid_argument);
}
