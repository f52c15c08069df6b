#include "fsst/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <tuple>

#include "fsst/synchrosqueeze.hpp"

namespace fsst {

std::size_t RidgeSet::flagged_count() const {
  return static_cast<std::size_t>(std::count(flagged.begin(), flagged.end(), true));
}

RidgeSet extract_ridges(const TFMatrix& t, std::size_t k, std::size_t min_sep, BinRange range) {
  if (k == 0) throw std::invalid_argument("ridge count K must be at least 1");
  const std::size_t n_total = t.size();
  const std::size_t lo = std::min(range.begin, n_total);
  const std::size_t hi = std::min(range.end, n_total);

  RidgeSet out{n_total, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(n_total, 0)),
               std::vector<bool>(n_total, false)};
  std::vector<double> power(n_total);
  std::vector<std::size_t> peaks;
  std::vector<std::int64_t> picked;
  for (std::size_t n = 0; n < n_total; ++n) {
    const auto row = t.row(n);
    for (std::size_t xi = 0; xi < n_total; ++xi) power[xi] = std::norm(row[xi]);
    peaks.clear();
    for (std::size_t xi = lo; xi < hi; ++xi) {
      const double p = power[xi];
      if (p > 0.0 && p >= power[(xi + n_total - 1) % n_total] && p >= power[(xi + 1) % n_total]) peaks.push_back(xi);
    }
    std::stable_sort(peaks.begin(), peaks.end(), [&](std::size_t a, std::size_t b) { return power[a] > power[b]; });
    picked.clear();
    for (const auto xi : peaks) {
      if (picked.size() == k) break;
      const auto cand = static_cast<std::int64_t>(xi);
      const bool clear = std::all_of(picked.begin(), picked.end(), [&](std::int64_t p) {
        return cyclic_distance(p, cand, n_total) >= min_sep;
      });
      if (clear) picked.push_back(cand);
    }
    std::sort(picked.begin(), picked.end());
    out.flagged[n] = picked.size() < k;
    for (std::size_t j = 0; j < picked.size(); ++j) out.curves[j][n] = picked[j];
  }
  return out;
}

RidgeSet truth_ridges(const ComponentModel& model) {
  const std::size_t n_total = model.n;
  RidgeSet out{n_total, {}, std::vector<bool>(n_total, false)};
  for (const auto& c : model.components) {
    std::vector<std::int64_t> curve(n_total);
    for (std::size_t t = 0; t < n_total; ++t) {
      curve[t] = static_cast<std::int64_t>(wrap_index(round_half_down(c.inst_freq(static_cast<double>(t))), n_total));
    }
    out.curves.push_back(std::move(curve));
  }
  return out;
}

double concentration(const TFMatrix& t, const RidgeSet& truth, std::size_t band) {
  const std::size_t n_total = t.size();
  if (truth.n != n_total) throw std::invalid_argument("truth ridges and matrix have different N");
  double total = 0.0, inside = 0.0;
  for (std::size_t n = 0; n < n_total; ++n) {
    const auto row = t.row(n);
    for (std::size_t xi = 0; xi < n_total; ++xi) {
      const double p = std::norm(row[xi]);
      total += p;
      const bool near = std::any_of(truth.curves.begin(), truth.curves.end(), [&](const auto& curve) {
        return cyclic_distance(static_cast<std::int64_t>(xi), curve[n], n_total) <= band;
      });
      if (near) inside += p;
    }
  }
  if (total == 0.0) throw std::invalid_argument("concentration of a zero-energy matrix is undefined");
  return inside / total;
}

std::vector<CurveError> ridge_error(const RidgeSet& est, const RidgeSet& truth) {
  if (est.n != truth.n || est.count() != truth.count()) {
    throw std::invalid_argument("ridge sets differ in shape: est K=" + std::to_string(est.count()) + " N=" +
                                std::to_string(est.n) + ", truth K=" + std::to_string(truth.count()) +
                                " N=" + std::to_string(truth.n));
  }
  const std::size_t k_total = truth.count();
  const std::size_t n_total = truth.n;
  std::vector<CurveError> out(k_total);
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> pairs;  // distance, truth, est
  std::vector<bool> used_truth(k_total), used_est(k_total);
  for (std::size_t n = 0; n < n_total; ++n) {
    pairs.clear();
    for (std::size_t a = 0; a < k_total; ++a) {
      for (std::size_t b = 0; b < k_total; ++b) {
        pairs.emplace_back(cyclic_distance(truth.curves[a][n], est.curves[b][n], n_total), a, b);
      }
    }
    std::sort(pairs.begin(), pairs.end());
    std::fill(used_truth.begin(), used_truth.end(), false);
    std::fill(used_est.begin(), used_est.end(), false);
    for (const auto& [dist, a, b] : pairs) {
      if (used_truth[a] || used_est[b]) continue;
      used_truth[a] = used_est[b] = true;
      const auto d = static_cast<double>(dist);
      out[a].mean += d;
      out[a].max = std::max(out[a].max, d);
    }
  }
  for (auto& e : out) e.mean /= static_cast<double>(n_total);
  return out;
}

double fraction_within(std::span<const std::int64_t> curve, std::span<const double> freq, double tol,
                       std::size_t begin, std::size_t end, std::size_t n) {
  if (end > curve.size() || end > freq.size() || begin >= end) throw std::invalid_argument("invalid column range");
  std::size_t hits = 0;
  for (std::size_t t = begin; t < end; ++t) {
    if (cyclic_distance(static_cast<double>(curve[t]), freq[t], n) <= tol) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(end - begin);
}

namespace {

template <class T>
double rel_l2(std::span<const T> est, std::span<const T> ref, std::size_t begin, std::size_t end) {
  if (est.size() != ref.size() || end > ref.size() || begin >= end) {
    throw std::invalid_argument("invalid range for relative error");
  }
  double num = 0.0, den = 0.0;
  for (std::size_t t = begin; t < end; ++t) {
    num += std::norm(est[t] - ref[t]);
    den += std::norm(ref[t]);
  }
  if (den == 0.0) throw std::invalid_argument("relative error against a zero reference");
  return std::sqrt(num / den);
}

}  // namespace

double relative_l2_error(std::span<const cplx> est, std::span<const cplx> ref, std::size_t begin, std::size_t end) {
  return rel_l2(est, ref, begin, end);
}

double relative_l2_error(std::span<const double> est, std::span<const double> ref, std::size_t begin,
                         std::size_t end) {
  return rel_l2(est, ref, begin, end);
}

}  // namespace fsst
