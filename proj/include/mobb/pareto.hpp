#pragma once

#include <cstddef>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "mobb/problem.hpp"

namespace mobb {

enum class Dominance {
  /// p dominates q iff p <= q componentwise and p != q.
  kPareto,
  /// p dominates q iff p < q componentwise (keeps weakly Pareto points).
  kWeakPareto,
};

bool dominates(const Vector& p, const Vector& q,
               Dominance mode = Dominance::kPareto);

/// Indices (ascending) of points not dominated by any other point.
/// Two-objective Pareto filtering uses a sort-and-sweep; everything else is a
/// pairwise scan. Throws std::invalid_argument on ragged or non-finite input.
std::vector<std::size_t> nondominated_filter(
    const std::vector<Vector>& points, Dominance mode = Dominance::kPareto);

enum class FrontSource { kGrid, kSolverRun };

std::string_view to_string(FrontSource source);

struct FrontPoint {
  Vector x;
  Vector f;
  FrontSource source = FrontSource::kGrid;
};

/// Nondominated subset of f over a uniform resolution^n grid on the problem
/// box (n <= 2). With resolution 1 the single grid point is the box center.
std::vector<FrontPoint> grid_reference_front(const Problem& problem,
                                             int resolution);

/// Largest objective-space distance from a front point to a corner of any
/// grid cell touching it: max ||f(x + e) - f(x)|| over offsets e with
/// e_j in {-h_j, 0, h_j}, h the grid spacing.
double grid_cell_objective_diameter(const Problem& problem, int resolution,
                                    const std::vector<FrontPoint>& front);

/// Euclidean distance in objective space from f to the nearest front point.
double distance_to_front(const Vector& f, const std::vector<FrontPoint>& front);

/// Header "x_1..x_n,f_1..f_m,source" then one row per point.
void write_front_csv(std::ostream& out, const std::vector<FrontPoint>& front,
                     int dim, int num_objectives);

}  // namespace mobb
