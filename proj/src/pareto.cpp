#include "mobb/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "mobb/errors.hpp"

namespace mobb {

bool dominates(const Vector& p, const Vector& q, Dominance mode) {
  if (mode == Dominance::kWeakPareto) return (p.array() < q.array()).all();
  return (p.array() <= q.array()).all() && (p.array() != q.array()).any();
}

namespace {

void check_points(const std::vector<Vector>& points) {
  const auto m = points.front().size();
  for (const auto& p : points) {
    if (p.size() != m) {
      throw std::invalid_argument("nondominated_filter: ragged objective vectors");
    }
    if (!p.allFinite()) {
      throw std::invalid_argument("nondominated_filter: non-finite objective vector");
    }
  }
}

std::vector<std::size_t> pairwise_filter(const std::vector<Vector>& points,
                                         Dominance mode) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < points.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < points.size() && !dominated; ++j) {
      dominated = j != i && dominates(points[j], points[i], mode);
    }
    if (!dominated) keep.push_back(i);
  }
  return keep;
}

// Sort by (f1, f2); a point is dominated iff some point before its group of
// exact duplicates has f2 <= its f2.
std::vector<std::size_t> sweep_filter_2d(const std::vector<Vector>& points) {
  std::vector<std::size_t> order(points.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (points[a][0] != points[b][0]) return points[a][0] < points[b][0];
    return points[a][1] < points[b][1];
  });
  std::vector<std::size_t> keep;
  double best_f2 = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    const Vector& head = points[order[i]];
    while (j < order.size() && points[order[j]][0] == head[0] &&
           points[order[j]][1] == head[1]) {
      ++j;
    }
    if (head[1] < best_f2) {
      for (std::size_t g = i; g < j; ++g) keep.push_back(order[g]);
      best_f2 = head[1];
    }
    i = j;
  }
  std::sort(keep.begin(), keep.end());
  return keep;
}

}  // namespace

std::vector<std::size_t> nondominated_filter(const std::vector<Vector>& points,
                                             Dominance mode) {
  if (points.empty()) return {};
  check_points(points);
  if (mode == Dominance::kPareto && points.front().size() == 2) {
    return sweep_filter_2d(points);
  }
  return pairwise_filter(points, mode);
}

std::string_view to_string(FrontSource source) {
  return source == FrontSource::kGrid ? "GRID" : "SOLVER_RUN";
}

namespace {

Vector grid_spacing(const Problem& problem, int resolution) {
  if (resolution <= 1) return Vector::Zero(problem.dim());
  return (problem.upper() - problem.lower()) / (resolution - 1);
}

}  // namespace

std::vector<FrontPoint> grid_reference_front(const Problem& problem,
                                             int resolution) {
  const int n = problem.dim();
  if (n > 2) {
    throw std::invalid_argument("grid_reference_front: only n <= 2 is supported (" +
                                problem.name() + " has n = " + std::to_string(n) + ")");
  }
  if (resolution < 1) {
    throw std::invalid_argument("grid_reference_front: resolution must be >= 1");
  }
  const Vector h = grid_spacing(problem, resolution);
  const Vector center = 0.5 * (problem.lower() + problem.upper());
  auto coord = [&](int axis, int idx) {
    return resolution == 1 ? center[axis] : problem.lower()[axis] + idx * h[axis];
  };

  std::vector<Vector> xs;
  std::vector<Vector> fs;
  const int count1 = n == 2 ? resolution : 1;
  xs.reserve(static_cast<std::size_t>(resolution) * count1);
  fs.reserve(xs.capacity());
  Vector x(n);
  for (int i = 0; i < resolution; ++i) {
    x[0] = coord(0, i);
    for (int j = 0; j < count1; ++j) {
      if (n == 2) x[1] = coord(1, j);
      try {
        fs.push_back(problem.values(x));
        xs.push_back(x);
      } catch (const NonFiniteEvaluationError&) {
        // Points where the objectives are undefined are not part of the front.
      }
    }
  }
  std::vector<FrontPoint> front;
  for (std::size_t idx : nondominated_filter(fs)) {
    front.push_back({xs[idx], fs[idx], FrontSource::kGrid});
  }
  return front;
}

double grid_cell_objective_diameter(const Problem& problem, int resolution,
                                    const std::vector<FrontPoint>& front) {
  const Vector h = grid_spacing(problem, resolution);
  const int n = problem.dim();
  // Every corner of the cells touching a point: offsets in {-1, 0, 1}^n.
  int corners = 1;
  for (int j = 0; j < n; ++j) corners *= 3;
  double diameter = 0.0;
  Vector offset(n);
  for (const auto& p : front) {
    for (int c = 0; c < corners; ++c) {
      int code = c;
      for (int j = 0; j < n; ++j, code /= 3) offset[j] = (code % 3 - 1) * h[j];
      if (offset.isZero()) continue;
      try {
        diameter = std::max(diameter, (problem.values(p.x + offset) - p.f).norm());
      } catch (const NonFiniteEvaluationError&) {
      }
    }
  }
  return diameter;
}

double distance_to_front(const Vector& f, const std::vector<FrontPoint>& front) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : front) best = std::min(best, (p.f - f).norm());
  return best;
}

void write_front_csv(std::ostream& out, const std::vector<FrontPoint>& front,
                     int dim, int num_objectives) {
  for (int j = 1; j <= dim; ++j) out << "x_" << j << ',';
  for (int i = 1; i <= num_objectives; ++i) out << "f_" << i << ',';
  out << "source\n";
  const auto old_precision = out.precision(17);
  for (const auto& p : front) {
    for (double v : p.x) out << v << ',';
    for (double v : p.f) out << v << ',';
    out << to_string(p.source) << '\n';
  }
  out.precision(old_precision);
}

}  // namespace mobb
