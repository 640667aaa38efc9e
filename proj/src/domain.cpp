#include "mdisk/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mdisk {

double Piece::half_width(double x) const {
  if (fixed_half_width) return *fixed_half_width;
  const double dx = x - center;
  return std::pow(dx * dx + a * a, 0.75) / 2.0;
}

DomainSpec DomainSpec::rectangle(double x_lo, double x_hi, double half_width) {
  if (!(x_lo < x_hi) || !(half_width > 0.0)) {
    throw std::invalid_argument("rectangle domain needs x_lo < x_hi and a positive half-width");
  }
  DomainSpec spec;
  Piece p;
  p.lo = x_lo;
  p.hi = x_hi;
  p.center = 0.5 * (x_lo + x_hi);
  p.fixed_half_width = half_width;
  spec.pieces_.push_back(p);
  return spec;
}

DomainSpec build_domain(const ConstructionParams& params, SplitRule rule) {
  const int n = params.n();
  std::vector<double> s(static_cast<size_t>(n) + 1);
  s.front() = -0.5;
  s.back() = 0.5;
  for (int k = 1; k < n; ++k) {
    const double lower = params.point(k - 1), upper = params.point(k);
    s[static_cast<size_t>(k)] =
        rule == SplitRule::kMidpoint ? 0.5 * (lower + upper) : 0.5 * (upper - lower);
  }
  for (size_t k = 1; k < s.size(); ++k) {
    if (!(s[k - 1] < s[k])) {
      throw std::invalid_argument("split abscissas do not tile [-1/2, 1/2]");
    }
  }
  DomainSpec spec;
  spec.params_ = params;
  for (int k = 0; k < n; ++k) {
    Piece p;
    p.lo = s[static_cast<size_t>(k)];
    p.hi = s[static_cast<size_t>(k) + 1];
    p.center = params.point(k);
    p.a = params.a();
    spec.pieces_.push_back(p);
  }
  return spec;
}

std::vector<double> DomainSpec::splits() const {
  std::vector<double> s;
  s.reserve(pieces_.size() + 1);
  s.push_back(pieces_.front().lo);
  for (const auto& p : pieces_) s.push_back(p.hi);
  return s;
}

double DomainSpec::column_half_width(double x) const {
  double w = -1.0;
  for (const auto& p : pieces_) {
    if (x >= p.lo && x <= p.hi) w = std::max(w, p.half_width(x));
  }
  return w;
}

int DomainSpec::piece_of(double x) const {
  for (size_t k = 0; k < pieces_.size(); ++k) {
    if (x >= pieces_[k].lo && x <= pieces_[k].hi) return static_cast<int>(k);
  }
  return -1;
}

bool DomainSpec::contains(std::complex<double> z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  const double w = column_half_width(z.real());
  return w >= 0.0 && std::abs(z.imag()) <= w;
}

void GridSpec::validate() const {
  if (nx < 2) throw std::invalid_argument("grid nx must be at least 2");
  if (ny < 3 || ny % 2 == 0) throw std::invalid_argument("grid ny must be odd and at least 3");
  if (clip && !(clip->x_lo < clip->x_hi && clip->y_max > 0.0)) {
    throw std::invalid_argument("clip box must have x_lo < x_hi and y_max > 0");
  }
}

namespace {

struct Column {
  double x;
  double half_width;
  int piece;
};

std::vector<Column> piece_columns(const DomainSpec& spec, int k, const GridSpec& grid) {
  const Piece& p = spec.pieces()[static_cast<size_t>(k)];
  double lo = p.lo, hi = p.hi;
  if (grid.clip) {
    lo = std::max(lo, grid.clip->x_lo);
    hi = std::min(hi, grid.clip->x_hi);
    if (lo > hi) return {};
  }
  std::vector<Column> cols;
  cols.reserve(static_cast<size_t>(grid.nx));
  for (int i = 0; i < grid.nx; ++i) {
    const double t = static_cast<double>(i) / (grid.nx - 1);
    const double x = i == grid.nx - 1 ? hi : lo + (hi - lo) * t;
    double w = p.half_width(x);
    if (grid.clip) w = std::min(w, grid.clip->y_max);
    cols.push_back({x, w, k});
  }
  return cols;
}

SampleGrid expand(const std::vector<Column>& cols, int ny) {
  SampleGrid g;
  g.columns = static_cast<int>(cols.size());
  g.rows = ny;
  g.points.reserve(cols.size() * static_cast<size_t>(ny));
  const int m = (ny - 1) / 2;
  for (size_t c = 0; c < cols.size(); ++c) {
    for (int r = 0; r < ny; ++r) {
      GridPoint pt;
      pt.x = cols[c].x;
      pt.y = r == m ? 0.0 : cols[c].half_width * (static_cast<double>(r - m) / m);
      pt.piece = cols[c].piece;
      pt.column = static_cast<int>(c);
      pt.row = r;
      g.points.push_back(pt);
    }
  }
  return g;
}

}  // namespace

SampleGrid sample_grid(const DomainSpec& spec, const GridSpec& grid) {
  grid.validate();
  std::vector<Column> all;
  for (int k = 0; k < static_cast<int>(spec.pieces().size()); ++k) {
    for (const Column& c : piece_columns(spec, k, grid)) {
      if (!all.empty() && all.back().x == c.x) {
        all.back().half_width = std::max(all.back().half_width, c.half_width);
        continue;
      }
      all.push_back(c);
    }
  }
  return expand(all, grid.ny);
}

SampleGrid sample_piece(const DomainSpec& spec, int piece, const GridSpec& grid) {
  grid.validate();
  if (piece < 0 || piece >= static_cast<int>(spec.pieces().size())) {
    throw std::out_of_range("piece index out of range");
  }
  return expand(piece_columns(spec, piece, grid), grid.ny);
}

CompactRegion::CompactRegion(std::vector<DomainSpec> specs, double delta)
    : specs_(std::move(specs)), delta_(delta) {
  if (!(delta_ > 0.0)) throw std::invalid_argument("delta must be positive");
  if (specs_.empty() || !specs_.front().params()) {
    throw std::invalid_argument("compact region needs at least one family member");
  }
  const auto b = specs_.front().params()->points();
  for (const auto& s : specs_) {
    if (!s.params() || !std::equal(b.begin(), b.end(), s.params()->points().begin(),
                                   s.params()->points().end())) {
      throw std::invalid_argument("family members must share the blowup points");
    }
  }
  double cursor = -0.5;
  for (double bj : b) {
    const double hi = bj - delta_;
    if (hi > cursor) intervals_.emplace_back(cursor, std::min(hi, 0.5));
    cursor = std::max(cursor, bj + delta_);
  }
  if (cursor < 0.5) intervals_.emplace_back(cursor, 0.5);
  if (intervals_.empty()) throw std::invalid_argument("compact region K_delta is empty");
}

std::span<const double> CompactRegion::points() const {
  return specs_.front().params()->points();
}

double CompactRegion::half_width(double x) const {
  double w = std::numeric_limits<double>::infinity();
  for (const auto& s : specs_) w = std::min(w, s.column_half_width(x));
  return w;
}

bool CompactRegion::contains(std::complex<double> z) const {
  for (double b : points()) {
    if (std::abs(z.real() - b) < delta_) return false;
  }
  for (const auto& s : specs_) {
    if (!s.contains(z)) return false;
  }
  return true;
}

std::vector<std::complex<double>> CompactRegion::sample(int nx, int ny, double margin) const {
  if (nx < 2 || ny < 3 || ny % 2 == 0) throw std::invalid_argument("invalid sample counts");
  std::vector<std::complex<double>> pts;
  const int m = (ny - 1) / 2;
  for (const auto& [lo0, hi0] : intervals_) {
    const double lo = lo0 + margin, hi = hi0 - margin;
    if (lo > hi) continue;
    for (int i = 0; i < nx; ++i) {
      const double x = i == nx - 1 ? hi : lo + (hi - lo) * (static_cast<double>(i) / (nx - 1));
      const double w = half_width(x) - margin;
      if (w < 0.0) continue;
      for (int r = 0; r < ny; ++r) {
        pts.emplace_back(x, r == m ? 0.0 : w * (static_cast<double>(r - m) / m));
      }
    }
  }
  return pts;
}

CompactRegion omega_zero(std::vector<DomainSpec> specs, double delta) {
  return CompactRegion(std::move(specs), delta);
}

}  // namespace mdisk
