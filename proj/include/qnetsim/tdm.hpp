// Copyright 2026 The qnetsim Authors
// SPDX-License-Identifier: Apache-2.0
//
// Intra-cavity time-division-multiplexing rate engine: the attempt
// recursion, the cycle-rate formula, success-probability assembly from path
// chains, round-count optimization, and a Monte-Carlo renewal oracle.
#ifndef QNETSIM_TDM_HPP
#define QNETSIM_TDM_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "qnetsim/components.hpp"

namespace qns {

// One TDM cycle: shuttle the atom register (t_move), then M rounds, each
// costing t_init plus one t_ent attempt slot per remaining atom.
struct TdmParams {
  double t_move_s = 100e-6;
  double t_init_s = 10e-6;
  double t_ent_s = 1.09e-6;
  int rounds = 5;       // M
  std::int64_t atoms = 1;  // k, atoms per cavity (N_1)
  double p_suc = 0.0;   // success probability per attempt

  void validate() const {
    if (t_move_s < 0.0 || t_init_s < 0.0 || t_ent_s < 0.0) {
      throw std::domain_error("times must be non-negative");
    }
    if (!(p_suc >= 0.0 && p_suc <= 1.0)) {
      throw std::domain_error("p_suc must lie in [0, 1]");
    }
    if (rounds < 1) throw std::domain_error("rounds must be >= 1");
    if (atoms < 1) throw std::domain_error("atoms must be >= 1");
  }
};

struct RateResult {
  double rate_hz = 0.0;
  std::vector<double> attempts_per_round;
  double expected_successes_per_cycle = 0.0;
  double expected_cycle_time_s = 0.0;
};

// Expected attempt counts: N_1 = k, N_i = N_{i-1} * (1 - p).
inline std::vector<double> attempt_counts(std::int64_t k, int rounds,
                                          double p_suc) {
  if (k < 1 || rounds < 1) throw std::domain_error("k and rounds must be >= 1");
  if (!(p_suc >= 0.0 && p_suc <= 1.0)) {
    throw std::domain_error("p_suc must lie in [0, 1]");
  }
  std::vector<double> n(static_cast<std::size_t>(rounds));
  n[0] = static_cast<double>(k);
  for (int i = 1; i < rounds; ++i) n[i] = n[i - 1] * (1.0 - p_suc);
  return n;
}

// Cycle rate: R = p * sum(N_i) / (t_move + M*t_init + sum(N_i)*t_ent).
inline RateResult bell_pair_rate(const TdmParams& p) {
  p.validate();
  RateResult r;
  r.attempts_per_round = attempt_counts(p.atoms, p.rounds, p.p_suc);
  double total_attempts = 0.0;
  for (double n : r.attempts_per_round) total_attempts += n;
  r.expected_successes_per_cycle = total_attempts * p.p_suc;
  r.expected_cycle_time_s = p.t_move_s +
                            static_cast<double>(p.rounds) * p.t_init_s +
                            total_attempts * p.t_ent_s;
  if (!(r.expected_cycle_time_s > 0.0)) {
    throw std::domain_error("cycle time is zero");
  }
  r.rate_hz = r.expected_successes_per_cycle / r.expected_cycle_time_s;
  return r;
}

// Large-register limit of the cycle rate: p / t_ent.
inline double asymptotic_rate(double p_suc, double t_ent_s) {
  if (!(t_ent_s > 0.0)) throw std::domain_error("t_ent must be positive");
  if (!(p_suc >= 0.0 && p_suc <= 1.0)) {
    throw std::domain_error("p_suc must lie in [0, 1]");
  }
  return p_suc / t_ent_s;
}

// Named preset: attempt slot back-derived from a 2.3 MHz asymptotic rate at
// p_suc = 0.25.
inline constexpr double fast_attempt_t_ent_s = 0.25 / 2.3e6;

enum class EmissionConvention { Joint, PerArm };

// Success probability of one heralded attempt, assembled from both photon
// path chains. `joint` charges the emission probability once per pair;
// `per_arm` charges it once per photon.
struct SuccessModel {
  double p_bsm = 0.5;
  double p_emit = 0.5;
  EmissionConvention convention = EmissionConvention::Joint;
  PathChain arm_a;
  PathChain arm_b;
};

inline double p_success(const SuccessModel& m) {
  const double eta_a = chain_transmittance(m.arm_a);
  const double eta_b = chain_transmittance(m.arm_b);
  double p = 0.0;
  switch (m.convention) {
    case EmissionConvention::Joint:
      p = m.p_bsm * m.p_emit * eta_a * eta_b;
      break;
    case EmissionConvention::PerArm:
      p = m.p_bsm * (m.p_emit * eta_a) * (m.p_emit * eta_b);
      break;
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("success probability out of [0, 1]");
  }
  return p;
}

// Exhaustive scan over the round count; ties break toward smaller M.
struct OptimalM {
  int rounds = 1;
  double rate_hz = 0.0;
};

inline OptimalM optimal_M(const TdmParams& base, int m_max) {
  if (m_max < 1) throw std::domain_error("m_max must be >= 1");
  OptimalM best;
  best.rounds = 1;
  TdmParams p = base;
  p.rounds = 1;
  best.rate_hz = bell_pair_rate(p).rate_hz;
  for (int m = 2; m <= m_max; ++m) {
    p.rounds = m;
    const double r = bell_pair_rate(p).rate_hz;
    if (r > best.rate_hz) {
      best.rate_hz = r;
      best.rounds = m;
    }
  }
  return best;
}

// Monte-Carlo renewal oracle: integer atom counts, Bernoulli successes,
// entangled atoms removed from later rounds. Total successes over total time
// across `cycles` independent cycles; reproducible under a fixed seed.
inline double monte_carlo_rate(const TdmParams& p, std::int64_t cycles,
                               std::uint64_t seed) {
  p.validate();
  if (cycles < 1) throw std::domain_error("cycles must be >= 1");
  std::mt19937_64 rng(seed);
  double total_successes = 0.0;
  double total_time_s = 0.0;
  for (std::int64_t c = 0; c < cycles; ++c) {
    std::int64_t remaining = p.atoms;
    total_time_s += p.t_move_s + static_cast<double>(p.rounds) * p.t_init_s;
    for (int round = 0; round < p.rounds; ++round) {
      if (remaining <= 0) break;
      total_time_s += static_cast<double>(remaining) * p.t_ent_s;
      std::int64_t successes = 0;
      if (p.p_suc >= 1.0) {
        successes = remaining;
      } else if (p.p_suc > 0.0) {
        std::binomial_distribution<std::int64_t> binom(remaining, p.p_suc);
        successes = binom(rng);
      }
      total_successes += static_cast<double>(successes);
      remaining -= successes;
    }
  }
  if (!(total_time_s > 0.0)) throw std::domain_error("zero simulated time");
  return total_successes / total_time_s;
}

}  // namespace qns

#endif  // QNETSIM_TDM_HPP
