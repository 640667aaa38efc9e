#pragma once

#include "mdisk/domain.hpp"
#include "mdisk/immersion.hpp"
#include "mdisk/mesh.hpp"
#include "mdisk/params.hpp"

#include <json.hpp>

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mdisk {

struct CheckRecord {
  std::string name;
  std::string anchor;  // the claim being certified
  bool pass = false;
  bool asserted = true;  // measured-only checks never affect the exit status
  double margin = 0.0;
  double tolerance = 0.0;
  std::complex<double> worst_z;
  nlohmann::json details = nlohmann::json::object();
};

struct VerificationReport {
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json grid = nlohmann::json::object();
  nlohmann::json config = nlohmann::json::object();
  std::vector<CheckRecord> checks;

  void add(CheckRecord record);
  /// Stable order by check name.
  void sort();
  bool all_asserted_pass() const;
  const CheckRecord* find(const std::string& name) const;
};

/// Slack allowed on proved inequalities for quadrature and rounding.
inline constexpr double kInequalitySlack = 1e-9;

/// max |x3(F(x, y)) - x| over every piece grid; passes iff <= abs_tol.
CheckRecord check_height(const Immersion& immersion, const GridSpec& grid);

/// max over columns of max_{|y|<=w} |u(x, y) - u(x, 0)| < 1, together with
/// every link of the bounding chain (pointwise |du/dy| bound, its integrated
/// form, the per-column sums) and the lower bounds on dv/dy and on min |v|.
CheckRecord check_u_oscillation(const Immersion& immersion, const GridSpec& grid);

/// min over the grid of <gamma'(y), gamma'(0)> - cosh(v)/2 > 0, and strict
/// monotonicity in y of the level curve projected on (sin u0, -cos u0, 0).
CheckRecord check_graph_property(const Immersion& immersion, const GridSpec& grid);

struct SeparationResult {
  CheckRecord record;
  double r0_estimate = 0.0;
  std::vector<double> r0_per_piece;
};

/// |F(x, +-w_k(x)) - F(x, 0)| over every column of every piece; r0 is the
/// minimum. Also checks the exponential lower bound on
/// <gamma(+-w) - gamma(0), +-gamma'(0)> at each column.
SeparationResult check_separation(const Immersion& immersion, const GridSpec& grid);

/// No intersections among non-adjacent triangles, no degenerate triangles,
/// and off-axis vertices split into exactly two components (y > 0, y < 0),
/// each projecting to the horizontal plane with a single orientation.
CheckRecord check_embedding(const SurfaceMesh& mesh);

struct SheetCount {
  int j = 0;  // zero-based point index
  double t = 0.0;
  double a = 0.0;
  double u_difference = 0.0;   // |u(b_j + t, 0) - u(b_j + 2t, 0)|
  double turns = 0.0;          // u_difference / 2 pi
  double predicted = 0.0;      // 1 / (4 pi t)
  double weighted_limit = 0.0; // 2^{1-j} / (2 t)
};

SheetCount sheet_count(const ConstructionParams& params, int j, double t);

struct ConvergenceResult {
  CheckRecord record;
  std::vector<double> a_values;
  std::vector<double> diff_F;   // sup |F_a - F_a'| between consecutive a
  std::vector<double> diff_D1;  // first differences, scaled by 1 / cosh^2 v
  std::vector<double> diff_D2;  // second differences, scaled by 1 / cosh^2 v
};

struct ConvergenceOptions {
  int nx = 40;   // columns per interval of K_delta
  int ny = 9;    // rows per column
  double step = 1e-3;
  double tolerance = 1e-3;
  QuadratureConfig quad{1e-12, 40, "gk15"};
};

/// Cauchy-style C^2 convergence proxy on K_delta for a decreasing list of a.
ConvergenceResult check_convergence(std::span<const ConstructionParams> family, double delta,
                                    const ConvergenceOptions& options = {});

struct VerifyOptions {
  GridSpec grid;
  QuadratureConfig quad;
  SplitRule split = SplitRule::kMidpoint;
  FaultInjection fault;
  bool embedding = true;
  std::vector<double> a_sweep;  // convergence runs when >= 3 values
  double delta = 0.1;
};

/// Runs every check for one family member and aggregates the report.
VerificationReport run_verification(const ConstructionParams& params, const VerifyOptions& options);

/// Helicoid oracle mode over the rectangle [x_lo, x_hi] x [-half, half].
VerificationReport run_helicoid_verification(const DomainSpec& rectangle,
                                             const VerifyOptions& options);

}  // namespace mdisk
