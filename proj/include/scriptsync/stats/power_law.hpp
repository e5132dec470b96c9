// Copyright 2026 The ScriptSync Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Continuous power-law fitting with a KS-selected lower cutoff, and a
// semi-parametric bootstrap goodness-of-fit test.
//
// For a cutoff x_min the exponent is the maximum-likelihood estimate
//
//     alpha = 1 + n_tail / sum(ln(x_i / x_min)),   x_i >= x_min,
//
// and x_min is the distinct sample value minimizing the Kolmogorov-Smirnov
// distance between the tail's empirical CDF and 1 - (x / x_min)^(1 - alpha).

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scriptsync/util/error.hpp"
#include "scriptsync/util/parallel.hpp"
#include "scriptsync/util/random.hpp"

namespace scriptsync {

struct PowerLawFit {
  double alpha = 0.0;
  double x_min = 0.0;
  double ks = 0.0;
  std::size_t n_tail = 0;
  std::size_t n = 0;
  std::optional<double> p_value;
  std::size_t bootstrap_reps = 0;
  std::string warning;
};

namespace power_law_detail {

struct Candidate {
  double alpha = 0.0;
  double exponent = 0.0;
  double log_min = 0.0;
  double inv_tail = 0.0;
};

// Deviation between the tail's ECDF and the model at the distinct value
// starting at index i (equal values end at j).
inline double deviation(std::span<const double> logs, const Candidate& c, std::size_t k, std::size_t i,
                        std::size_t j) {
  const double model = 1.0 - std::exp(c.exponent * (logs[i] - c.log_min));
  const double below = static_cast<double>(i - k) * c.inv_tail;
  const double upto = static_cast<double>(j - k) * c.inv_tail;
  return std::max(std::abs(model - below), std::abs(upto - model));
}

inline std::size_t group_end(std::span<const double> x, std::size_t i) {
  std::size_t j = i + 1;
  while (j < x.size() && x[j] == x[i]) ++j;
  return j;
}

// Fit over an ascending sample with precomputed logs. Equivalent to scoring
// every distinct cutoff and keeping the smallest KS distance (ties to the
// smaller cutoff); a coarse pass over a few cutoffs supplies an early bound so
// that most full scans stop after a few points.
inline PowerLawFit fit_sorted(std::span<const double> x, std::span<const double> logs) {
  const std::size_t n = x.size();
  // suffix[k] = sum of logs[k..n)
  std::vector<double> suffix(n + 1, 0.0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] + logs[i];

  auto candidate = [&](std::size_t k) -> std::optional<Candidate> {
    if (k + 1 >= n || (k > 0 && x[k] == x[k - 1])) return std::nullopt;
    const std::size_t n_tail = n - k;
    const double sum = suffix[k] - static_cast<double>(n_tail) * logs[k];
    if (!(sum > 0.0)) return std::nullopt;
    const double alpha = 1.0 + static_cast<double>(n_tail) / sum;
    return Candidate{alpha, 1.0 - alpha, logs[k], 1.0 / static_cast<double>(n_tail)};
  };

  constexpr double kInf = std::numeric_limits<double>::infinity();
  double best_d = kInf;
  std::size_t best_k = n;
  // Start of the distinct value where the last full scan peaked; often also
  // decisive for the next cutoff.
  std::size_t probe = n;

  // KS distance of cutoff k, or any value that already rules it out.
  auto score = [&](std::size_t k, const Candidate& c) {
    auto beaten = [&](double d) { return d > best_d || (d == best_d && k > best_k); };
    if (probe > k && probe < n) {
      const double d = deviation(logs, c, k, probe, group_end(x, probe));
      if (beaten(d)) return d;
    }
    double d = 0.0;
    std::size_t peak = k;
    for (std::size_t i = k; i < n;) {
      const std::size_t j = group_end(x, i);
      const double v = deviation(logs, c, k, i, j);
      if (v > d) {
        d = v;
        peak = i;
      }
      if (beaten(d)) return d;
      i = j;
    }
    probe = peak;
    return d;
  };
  auto consider = [&](std::size_t k) {
    const auto c = candidate(k);
    if (!c) return;
    const double d = score(k, *c);
    if (d < best_d || (d == best_d && k < best_k)) {
      best_d = d;
      best_k = k;
    }
  };

  const std::size_t stride = std::max<std::size_t>(1, n / 64);
  for (std::size_t k = 0; k < n; k += stride) consider(k);
  for (std::size_t k = 0; k < n; ++k) consider(k);
  if (best_k == n) throw Error("power-law fit needs at least 2 distinct tail points at some cutoff");

  const Candidate c = *candidate(best_k);
  PowerLawFit best;
  best.alpha = c.alpha;
  best.x_min = x[best_k];
  best.ks = best_d;
  best.n_tail = n - best_k;
  best.n = n;
  return best;
}

inline void prepare(std::span<const double> samples, std::vector<double>& x, std::vector<double>& logs) {
  x.assign(samples.begin(), samples.end());
  for (double v : x) {
    if (!(v > 0.0) || !std::isfinite(v)) throw Error("power-law samples must be positive and finite");
  }
  std::sort(x.begin(), x.end());
  logs.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) logs[i] = std::log(x[i]);
}

}  // namespace power_law_detail

inline PowerLawFit fit_power_law(std::span<const double> samples) {
  std::vector<double> x, logs;
  power_law_detail::prepare(samples, x, logs);
  return power_law_detail::fit_sorted(x, logs);
}

// Draw from a continuous power law with the given exponent and cutoff by
// inverse-CDF sampling.
inline double sample_power_law(Rng& rng, double alpha, double x_min) {
  return x_min * std::pow(rng.uniform_open0(), -1.0 / (alpha - 1.0));
}

struct BootstrapResult {
  double p_value = 0.0;
  std::size_t reps = 0;
  std::string warning;
};

// Semi-parametric bootstrap: each replicate has the sample's size; a value is
// drawn from the fitted law with probability n_tail / n and otherwise
// resampled from the observed values below x_min. Every replicate is refitted
// from scratch (x_min included). The p-value is the fraction of replicates
// whose KS distance is at least the observed one. Replicate r draws from
// stream r of `seed`, so the result does not depend on `threads`.
inline BootstrapResult gof_bootstrap(const PowerLawFit& fit, std::span<const double> samples, std::size_t reps,
                                     std::uint64_t seed = 0, unsigned threads = 1) {
  if (reps == 0) throw Error("bootstrap needs at least one replicate");
  std::vector<double> body;
  for (double v : samples) {
    if (v < fit.x_min) body.push_back(v);
  }
  std::sort(body.begin(), body.end());
  const std::size_t n = samples.size();
  const double p_tail = static_cast<double>(n - body.size()) / static_cast<double>(n);
  const Rng root(seed);

  std::vector<std::uint8_t> exceeds(reps, 0);
  parallel_for(reps, threads, [&](std::size_t r) {
    Rng rng = root.stream(r);
    std::vector<double> synthetic(n);
    for (auto& v : synthetic) {
      if (body.empty() || rng.uniform() < p_tail) {
        v = sample_power_law(rng, fit.alpha, fit.x_min);
      } else {
        v = body[rng.below(body.size())];
      }
    }
    try {
      exceeds[r] = fit_power_law(synthetic).ks >= fit.ks;
    } catch (const Error&) {
      exceeds[r] = 1;
    }
  });
  BootstrapResult out;
  out.reps = reps;
  std::size_t count = 0;
  for (auto e : exceeds) count += e;
  out.p_value = static_cast<double>(count) / static_cast<double>(reps);
  if (reps < 100) out.warning = "fewer than 100 bootstrap replicates; p-value is coarse";
  return out;
}

// Fits and, when reps > 0, attaches the bootstrap p-value.
inline PowerLawFit fit_power_law_with_gof(std::span<const double> samples, std::size_t reps, std::uint64_t seed = 0,
                                          unsigned threads = 1) {
  PowerLawFit fit = fit_power_law(samples);
  if (reps > 0) {
    const BootstrapResult b = gof_bootstrap(fit, samples, reps, seed, threads);
    fit.p_value = b.p_value;
    fit.bootstrap_reps = b.reps;
    fit.warning = b.warning;
  }
  return fit;
}

}  // namespace scriptsync
