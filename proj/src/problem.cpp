#include "mobb/problem.hpp"

#include <stdexcept>
#include <unordered_map>

#include "mobb/errors.hpp"

namespace mobb {

Problem::Problem(std::string name, int num_objectives, int dim, Vector lower,
                 Vector upper, bool convex, Evaluator evaluator)
    : name_(std::move(name)),
      m_(num_objectives),
      n_(dim),
      lower_(std::move(lower)),
      upper_(std::move(upper)),
      convex_(convex),
      evaluator_(std::move(evaluator)) {
  if (m_ < 1 || n_ < 1) {
    throw std::invalid_argument(name_ + ": m and n must be positive");
  }
  if (lower_.size() != n_ || upper_.size() != n_) {
    throw DimensionMismatchError(name_ + ": bounds must have length n");
  }
  if (!(lower_.array() < upper_.array()).all()) {
    throw std::invalid_argument(name_ + ": lower < upper must hold");
  }
  if (!evaluator_) {
    throw std::invalid_argument(name_ + ": missing evaluator");
  }
}

Evaluation Problem::evaluate(const Vector& x) const {
  if (x.size() != n_) {
    throw DimensionMismatchError(name_ + ": expected x of length " +
                                 std::to_string(n_) + ", got " +
                                 std::to_string(x.size()));
  }
  Evaluation out{Vector(m_), Matrix(m_, n_)};
  evaluator_(x, out.values, out.jacobian);
  if (!out.values.allFinite() || !out.jacobian.allFinite()) {
    throw NonFiniteEvaluationError(name_ + ": non-finite objective or gradient");
  }
  return out;
}

Matrix finite_difference_jacobian(const Problem& problem, const Vector& x,
                                  double rel_step) {
  const int n = problem.dim();
  Matrix jac(problem.num_objectives(), n);
  Vector xp = x;
  for (int j = 0; j < n; ++j) {
    const double h = rel_step * (1.0 + std::abs(x[j]));
    xp[j] = x[j] + h;
    const Vector fp = problem.values(xp);
    xp[j] = x[j] - h;
    const Vector fm = problem.values(xp);
    xp[j] = x[j];
    jac.col(j) = (fp - fm) / (2.0 * h);
  }
  return jac;
}

namespace {

struct Entry {
  std::string name;
  std::function<Problem()> make;
};

const std::vector<Entry>& catalog() {
  using namespace detail;
  static const std::vector<Entry> entries = {
      {"SLCDT1", [] { return make_slcdt1(); }},
      {"PNR", [] { return make_pnr(); }},
      {"MOP2", [] { return make_mop2(); }},
      {"MOP5", [] { return make_mop5(); }},
      {"KW2", [] { return make_kw2(); }},
      {"JOS1a", [] { return make_jos1("JOS1a", 50, 2.0); }},
      {"JOS1b", [] { return make_jos1("JOS1b", 200, 2.0); }},
      {"JOS1c", [] { return make_jos1("JOS1c", 500, 2.0); }},
      {"JOS1d", [] { return make_jos1("JOS1d", 1000, 2.0); }},
      {"JOS1e", [] { return make_jos1("JOS1e", 2000, 2.0); }},
      {"JOS1f", [] { return make_jos1("JOS1f", 200, 5.0); }},
      {"FF1", [] { return make_ff1(); }},
      {"FDS", [] { return make_fds(); }},
      {"Deb", [] { return make_deb(); }},
      {"DD", [] { return make_dd("DD", 5); }},
      {"BK1", [] { return make_bk1(); }},
      {"WIT", [] { return make_wit(); }},
      {"TOI4a", [] { return make_toi4("TOI4a", 4); }},
      {"TOI4b", [] { return make_toi4("TOI4b", 40); }},
      {"TOI4c", [] { return make_toi4("TOI4c", 100); }},
      {"TOI4d", [] { return make_toi4("TOI4d", 200); }},
      {"TOI4e", [] { return make_toi4("TOI4e", 500); }},
      {"TOI4f", [] { return make_toi4("TOI4f", 1000); }},
      {"NT2a", [] { return make_nt2("NT2a", 20); }},
      {"NT2b", [] { return make_nt2("NT2b", 70); }},
      {"NT2c", [] { return make_nt2("NT2c", 120); }},
      {"ZKG7", [] { return make_zkg7(); }},
      {"MHHM1", [] { return make_mhhm1(); }},
      {"MHHM2", [] { return make_mhhm2(); }},
  };
  return entries;
}

}  // namespace

const std::vector<std::string>& problem_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : catalog()) out.push_back(e.name);
    return out;
  }();
  return names;
}

Problem get_problem(std::string_view name, std::optional<int> variant_dim) {
  if (variant_dim) {
    const int n = *variant_dim;
    if (n < 1) throw std::invalid_argument("variant_dim must be positive");
    const std::string label = std::string(name) + "_n" + std::to_string(n);
    if (name == "JOS1") return detail::make_jos1(label, n, 2.0);
    if (name == "TOI4") return detail::make_toi4(label, n);
    if (name == "NT2") return detail::make_nt2(label, n);
    if (name == "DD") return detail::make_dd(label, n);
    for (const auto& e : catalog()) {
      if (e.name == name) {
        throw std::invalid_argument(e.name +
                                    " has a fixed dimension; variant_dim "
                                    "applies to JOS1, TOI4, NT2 and DD only");
      }
    }
    throw UnknownProblemError("unknown problem: " + std::string(name));
  }
  // Bare family names resolve to the first catalog row of the family.
  static const std::unordered_map<std::string_view, std::string_view> family = {
      {"JOS1", "JOS1a"}, {"TOI4", "TOI4a"}, {"NT2", "NT2a"}};
  if (auto it = family.find(name); it != family.end()) name = it->second;
  for (const auto& e : catalog()) {
    if (e.name == name) return e.make();
  }
  throw UnknownProblemError("unknown problem: " + std::string(name));
}

}  // namespace mobb
