#include "mobb/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "mobb/errors.hpp"

namespace mobb {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_start_seed(std::uint64_t master_seed,
                                std::string_view problem, std::uint64_t index) {
  // FNV-1a over the problem name.
  std::uint64_t name_hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : problem) {
    name_hash ^= c;
    name_hash *= 0x100000001b3ULL;
  }
  return mix64(mix64(mix64(master_seed) ^ name_hash) ^ index);
}

std::vector<Vector> sample_initial_points(const Vector& lower,
                                          const Vector& upper, int count,
                                          std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample_initial_points: count must be >= 1");
  if (lower.size() != upper.size()) {
    throw DimensionMismatchError("sample_initial_points: bound lengths differ");
  }
  if ((lower.array() > upper.array()).any()) {
    throw std::invalid_argument("sample_initial_points: lower > upper");
  }
  std::mt19937_64 gen(seed);
  std::vector<Vector> points;
  points.reserve(count);
  for (int c = 0; c < count; ++c) {
    Vector x(lower.size());
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
      x[j] = lower[j] + u * (upper[j] - lower[j]);
    }
    points.push_back(std::move(x));
  }
  return points;
}

std::vector<Vector> sample_initial_points(const Problem& problem, int count,
                                          std::uint64_t seed) {
  return sample_initial_points(problem.lower(), problem.upper(), count, seed);
}

int default_thread_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("MOBB_THREADS")) {
    const int requested = std::atoi(env);
    if (requested > 0) return std::min(requested, hw);
  }
  return hw;
}

namespace {

struct Job {
  std::size_t problem;
  Algorithm algorithm;
  int start;
};

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config,
                                bool include_failures) {
  if (config.starts_per_problem < 1) {
    throw std::invalid_argument("starts_per_problem must be >= 1");
  }
  config.solver.validate();

  std::vector<Problem> problems;
  for (const auto& spec : config.problems) {
    problems.push_back(get_problem(spec.name, spec.variant_dim));
  }
  // Start points depend only on (master seed, problem, start index).
  std::vector<std::vector<Vector>> starts(problems.size());
  std::vector<std::vector<std::uint64_t>> seeds(problems.size());
  for (std::size_t p = 0; p < problems.size(); ++p) {
    for (int s = 0; s < config.starts_per_problem; ++s) {
      const std::uint64_t seed =
          derive_start_seed(config.master_seed, problems[p].name(), s);
      seeds[p].push_back(seed);
      starts[p].push_back(sample_initial_points(problems[p], 1, seed).front());
    }
  }

  std::vector<Job> jobs;
  for (std::size_t p = 0; p < problems.size(); ++p) {
    for (Algorithm algo : config.algorithms) {
      for (int s = 0; s < config.starts_per_problem; ++s) jobs.push_back({p, algo, s});
    }
  }

  ExperimentResult result;
  result.records.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const Job& job = jobs[j];
      const Problem& problem = problems[job.problem];
      SolverConfig solver = config.solver;
      solver.algorithm = job.algorithm;
      RunRecord rec;
      try {
        rec = run_solver(problem, starts[job.problem][job.start], solver);
      } catch (const std::exception& e) {
        rec.problem = problem.name();
        rec.algorithm = job.algorithm;
        rec.x0 = starts[job.problem][job.start];
        rec.status = RunStatus::kNumericalFail;
        rec.message = e.what();
      }
      rec.seed = seeds[job.problem][job.start];
      result.records[j] = std::move(rec);
    }
  };
  const int threads = std::clamp(config.threads > 0 ? config.threads
                                                    : default_thread_count(),
                                 1, static_cast<int>(std::max<std::size_t>(jobs.size(), 1)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  result.summary = summarize(result.records, include_failures);
  return result;
}

std::vector<SummaryRow> summarize(const std::vector<RunRecord>& records,
                                  bool include_failures) {
  // Preserve first-seen order of (problem, algorithm).
  std::vector<SummaryRow> rows;
  std::map<std::pair<std::string, Algorithm>, std::size_t> index;
  std::vector<std::tuple<double, double, double>> sums;
  for (const auto& rec : records) {
    const auto key = std::make_pair(rec.problem, rec.algorithm);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, rows.size()).first;
      rows.push_back({rec.problem, rec.algorithm});
      sums.emplace_back(0.0, 0.0, 0.0);
    }
    SummaryRow& row = rows[it->second];
    ++row.runs;
    if (rec.converged()) {
      ++row.converged;
    } else {
      ++row.nf;
    }
    if (rec.converged() || include_failures) {
      auto& [it_sum, fe_sum, time_sum] = sums[it->second];
      it_sum += rec.iterations;
      fe_sum += static_cast<double>(rec.fevals);
      time_sum += static_cast<double>(rec.time_ns) * 1e-6;
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const int counted = include_failures ? rows[r].runs : rows[r].converged;
    if (counted == 0) continue;
    const auto& [it_sum, fe_sum, time_sum] = sums[r];
    rows[r].mean_iter = it_sum / counted;
    rows[r].mean_feval = fe_sum / counted;
    rows[r].mean_time_ms = time_sum / counted;
  }
  return rows;
}

void write_summary_csv(std::ostream& out, const std::vector<SummaryRow>& rows,
                       bool include_time) {
  out << "problem,algorithm,runs,converged,nf,mean_iter,mean_feval";
  if (include_time) out << ",mean_time_ms";
  out << '\n';
  const auto old_flags = out.flags();
  const auto old_precision = out.precision(6);
  out << std::fixed;
  for (const auto& r : rows) {
    out << r.problem << ',' << to_string(r.algorithm) << ',' << r.runs << ','
        << r.converged << ',' << r.nf << ',' << r.mean_iter << ','
        << r.mean_feval;
    if (include_time) out << ',' << r.mean_time_ms;
    out << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

void write_summary_markdown(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "| Problem | Algorithm | time (ms) | iter | feval | NF |\n"
      << "|---|---|---:|---:|---:|---:|\n";
  const auto old_flags = out.flags();
  const auto old_precision = out.precision(2);
  out << std::fixed;
  for (const auto& r : rows) {
    out << "| " << r.problem << " | " << to_string(r.algorithm) << " | "
        << r.mean_time_ms << " | " << r.mean_iter << " | " << r.mean_feval
        << " | " << r.nf << " |\n";
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

void write_records_csv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "problem,algorithm,seed,status,iterations,steps,fevals,time_ns,final_norm_d,"
         "sigma_final,f_final,message\n";
  const auto old_precision = out.precision(17);
  for (const auto& r : records) {
    out << r.problem << ',' << to_string(r.algorithm) << ',' << r.seed << ','
        << to_string(r.status) << ',' << r.iterations << ',' << r.steps << ','
        << r.fevals << ','
        << r.time_ns << ',' << r.final_norm_d << ',' << r.sigma_final << ',';
    for (Eigen::Index i = 0; i < r.f_final.size(); ++i) {
      out << (i ? ";" : "") << r.f_final[i];
    }
    std::string message = r.message;
    std::replace(message.begin(), message.end(), ',', ';');
    out << ',' << message << '\n';
  }
  out.precision(old_precision);
}

std::vector<FrontPoint> solver_front(const std::vector<RunRecord>& records,
                                     Algorithm algo) {
  std::vector<const RunRecord*> picked;
  std::vector<Vector> fs;
  for (const auto& r : records) {
    if (r.algorithm == algo && r.converged() && r.f_final.allFinite()) {
      picked.push_back(&r);
      fs.push_back(r.f_final);
    }
  }
  std::vector<FrontPoint> front;
  for (std::size_t idx : nondominated_filter(fs)) {
    front.push_back({picked[idx]->x_final, picked[idx]->f_final,
                     FrontSource::kSolverRun});
  }
  return front;
}

FrontFiles emit_front_data(const Problem& problem,
                           const std::vector<RunRecord>& records,
                           const std::vector<FrontPoint>& reference,
                           const std::filesystem::path& out_dir) {
  for (const auto& r : records) {
    if (r.problem != problem.name()) {
      throw std::invalid_argument("emit_front_data: records mix problems (" +
                                  r.problem + " vs " + problem.name() + ")");
    }
  }
  std::filesystem::create_directories(out_dir);
  const std::string stem = problem.name();
  FrontFiles files{out_dir / (stem + "_reference.csv"),
                   out_dir / (stem + "_bbdqn.csv"),
                   out_dir / (stem + "_baseline.csv"),
                   out_dir / (stem + "_plot.py")};

  std::vector<FrontPoint> baseline_points;
  {
    std::vector<RunRecord> others;
    for (const auto& r : records) {
      if (r.algorithm != Algorithm::kBBDQN) others.push_back(r);
    }
    for (Algorithm a : {Algorithm::kMBFGSMO, Algorithm::kSDMO}) {
      for (auto& p : solver_front(others, a)) baseline_points.push_back(std::move(p));
    }
    std::vector<Vector> fs;
    for (const auto& p : baseline_points) fs.push_back(p.f);
    std::vector<FrontPoint> filtered;
    for (std::size_t idx : nondominated_filter(fs)) filtered.push_back(baseline_points[idx]);
    baseline_points = std::move(filtered);
  }

  const int n = problem.dim();
  const int m = problem.num_objectives();
  auto write = [&](const std::filesystem::path& path,
                   const std::vector<FrontPoint>& pts) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    write_front_csv(out, pts, n, m);
  };
  write(files.reference, reference);
  write(files.proposed, solver_front(records, Algorithm::kBBDQN));
  write(files.baseline, baseline_points);

  std::ofstream script(files.plot_script);
  script << "# Plots the reference front and both solver fronts for " << stem << ".\n"
         << "import csv, sys\n"
         << "import matplotlib.pyplot as plt\n\n"
         << "def load(path):\n"
         << "    with open(path) as fh:\n"
         << "        rows = list(csv.DictReader(fh))\n"
         << "    return [[float(r[f'f_{i}']) for i in range(1, " << m + 1 << ")] for r in rows]\n\n"
         << "panels = [('exhaustive', '" << files.reference.filename().string() << "'),\n"
         << "          ('M-BFGSMO', '" << files.baseline.filename().string() << "'),\n"
         << "          ('BB-DQN', '" << files.proposed.filename().string() << "')]\n"
         << "fig = plt.figure(figsize=(12, 4))\n"
         << "for k, (title, path) in enumerate(panels, start=1):\n"
         << "    pts = load(path)\n"
         << (m == 3 ? "    ax = fig.add_subplot(1, 3, k, projection='3d')\n"
                    : "    ax = fig.add_subplot(1, 3, k)\n")
         << "    if pts:\n"
         << "        cols = list(zip(*pts))\n"
         << "        ax.scatter(*cols, s=4)\n"
         << "    ax.set_title(title)\n"
         << "fig.savefig(sys.argv[1] if len(sys.argv) > 1 else '" << stem << "_front.png')\n";
  return files;
}

}  // namespace mobb
