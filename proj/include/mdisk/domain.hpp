#pragma once

#include "mdisk/params.hpp"

#include <complex>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace mdisk {

enum class SplitRule {
  kMidpoint,      // s_k = (b_k + b_{k+1}) / 2
  kLiteral,  // s_k = (b_{k+1} - b_k) / 2, comparison only
};

/// One vertically convex strip {lo <= x <= hi, |y| <= half_width(x)}.
struct Piece {
  double lo = 0.0;
  double hi = 0.0;
  double center = 0.0;  // b_k
  double a = 0.0;
  std::optional<double> fixed_half_width;  // rectangle pieces

  /// ((x - b_k)^2 + a^2)^{3/4} / 2, or the fixed width for rectangles.
  double half_width(double x) const;
};

/// Union of pieces tiling an x-range. Membership is closed (boundary inclusive).
class DomainSpec {
 public:
  /// Rectangle [x_lo, x_hi] x [-half_width, half_width]; used by helicoid mode.
  static DomainSpec rectangle(double x_lo, double x_hi, double half_width);

  const std::vector<Piece>& pieces() const { return pieces_; }
  const std::optional<ConstructionParams>& params() const { return params_; }
  /// s_0 < s_1 < ... < s_n.
  std::vector<double> splits() const;
  double x_min() const { return pieces_.front().lo; }
  double x_max() const { return pieces_.back().hi; }

  bool contains(std::complex<double> z) const;
  /// Largest half-width among pieces whose x-range contains x (union semantics);
  /// negative when x is outside the domain.
  double column_half_width(double x) const;
  /// Index of the piece whose closed x-range contains x; the lower piece wins
  /// at a shared split. -1 if none.
  int piece_of(double x) const;

 private:
  friend DomainSpec build_domain(const ConstructionParams&, SplitRule);
  std::vector<Piece> pieces_;
  std::optional<ConstructionParams> params_;
};

DomainSpec build_domain(const ConstructionParams& params,
                        SplitRule rule = SplitRule::kMidpoint);

inline bool contains(const DomainSpec& spec, std::complex<double> z) { return spec.contains(z); }

struct ClipBox {
  double x_lo = -0.5;
  double x_hi = 0.5;
  double y_max = 1.0;
};

struct GridSpec {
  int nx = 400;  // x-columns per piece
  int ny = 41;   // points per column, odd so that y = 0 is sampled
  std::optional<ClipBox> clip;

  void validate() const;
};

struct GridPoint {
  double x = 0.0;
  double y = 0.0;
  int piece = 0;
  int column = 0;
  int row = 0;
};

/// Column-major structured samples; row (ny - 1) / 2 is the real axis.
struct SampleGrid {
  std::vector<GridPoint> points;
  int columns = 0;
  int rows = 0;

  const GridPoint& at(int column, int row) const {
    return points[static_cast<size_t>(column) * static_cast<size_t>(rows) +
                  static_cast<size_t>(row)];
  }
  int axis_row() const { return (rows - 1) / 2; }
};

/// Samples the whole domain. Pieces contribute nx columns each; the column
/// on a shared split is emitted once with the wider of the two half-widths.
SampleGrid sample_grid(const DomainSpec& spec, const GridSpec& grid);

/// Samples piece k alone with its own half-width w_k, nx columns.
SampleGrid sample_piece(const DomainSpec& spec, int piece, const GridSpec& grid);

/// Compact subset K_delta of the intersection of several family members,
/// staying at least delta away (in x) from every blowup point.
class CompactRegion {
 public:
  CompactRegion(std::vector<DomainSpec> specs, double delta);

  bool contains(std::complex<double> z) const;
  /// Maximal closed x-intervals of [-1/2, 1/2] with min_j |x - b_j| >= delta.
  const std::vector<std::pair<double, double>>& intervals() const { return intervals_; }
  /// Half-width of the intersection column at x.
  double half_width(double x) const;
  double delta() const { return delta_; }
  std::span<const double> points() const;

  /// nx columns per interval, ny rows across the intersection column shrunk
  /// by `margin` on every side.
  std::vector<std::complex<double>> sample(int nx, int ny, double margin = 0.0) const;

 private:
  std::vector<DomainSpec> specs_;
  double delta_;
  std::vector<std::pair<double, double>> intervals_;
};

CompactRegion omega_zero(std::vector<DomainSpec> specs, double delta);

}  // namespace mdisk
