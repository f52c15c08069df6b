#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fsst/signals.hpp"
#include "fsst/stft.hpp"

namespace fsst {

// K integer ridge curves, one bin per time index.
struct RidgeSet {
  std::size_t n = 0;
  std::vector<std::vector<std::int64_t>> curves;
  // Columns where fewer than K peaks were found; missing bins are filled with 0.
  std::vector<bool> flagged;

  std::size_t count() const { return curves.size(); }
  std::size_t flagged_count() const;
};

// Half-open bin range searched for peaks; the default is the whole axis.
struct BinRange {
  std::size_t begin = 0;
  std::size_t end = static_cast<std::size_t>(-1);
};

// Per column, the K largest local maxima of |T|^2 (cyclic neighbours, strictly
// positive power) within `range`, picked greedily by power with ties broken
// toward the smaller bin and subject to pairwise cyclic separation >= min_sep.
// Bins of each column are reported in ascending order.
RidgeSet extract_ridges(const TFMatrix& t, std::size_t k, std::size_t min_sep, BinRange range = {});

// round_half_down(phi'_k(n)) mod N for each component.
RidgeSet truth_ridges(const ComponentModel& model);

// Share of |T|^2 lying within `band` bins (cyclic) of any truth curve.
// Throws std::invalid_argument for a zero-energy matrix.
double concentration(const TFMatrix& t, const RidgeSet& truth, std::size_t band);

struct CurveError {
  double mean = 0.0;
  double max = 0.0;
};

// Per truth curve: cyclic bin distance to the estimate it is greedily matched
// with in each column (closest pairs first).
std::vector<CurveError> ridge_error(const RidgeSet& est, const RidgeSet& truth);

// Fraction of n in [begin, end) with cyclic |curve(n) - freq(n)| <= tol.
double fraction_within(std::span<const std::int64_t> curve, std::span<const double> freq, double tol,
                       std::size_t begin, std::size_t end, std::size_t n);

// Relative l2 error ||est - ref|| / ||ref|| over [begin, end).
double relative_l2_error(std::span<const cplx> est, std::span<const cplx> ref, std::size_t begin, std::size_t end);
double relative_l2_error(std::span<const double> est, std::span<const double> ref, std::size_t begin,
                         std::size_t end);

}  // namespace fsst
