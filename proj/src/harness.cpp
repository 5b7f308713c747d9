#include "erid/harness.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>
#include <variant>

#include "erid/rng.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace erid {

const char* to_string(AgentKind k) {
  switch (k) {
    case AgentKind::kErid: return "erid";
    case AgentKind::kCrossLearning: return "cross";
    case AgentKind::kHedge: return "hedge";
  }
  return "?";
}

namespace {

using Seat = std::variant<EridAgent, CrossLearningAgent, HedgeAgent>;

Seat make_seat(const AgentSpec& spec, std::size_t num_actions) {
  const SimplexVector initial =
      spec.initial_policy ? *spec.initial_policy : SimplexVector::uniform(num_actions);
  if (initial.size() != num_actions) {
    throw std::invalid_argument("run_learning: initial policy dimension mismatch");
  }
  switch (spec.kind) {
    case AgentKind::kErid:
      return EridAgent(initial, spec.buffer_capacity, spec.alpha, spec.protocol);
    case AgentKind::kCrossLearning:
      return CrossLearningAgent(initial, spec.alpha, spec.reward_normalizer);
    case AgentKind::kHedge:
      return HedgeAgent(initial.size(), spec.hedge_rate);
  }
  throw std::logic_error("run_learning: bad agent kind");
}

const SimplexVector& seat_policy(const Seat& seat) {
  return std::visit([](const auto& a) -> const SimplexVector& { return a.policy(); }, seat);
}

std::int64_t seat_projections(const Seat& seat) {
  if (const auto* e = std::get_if<EridAgent>(&seat)) return e->projection_events();
  if (const auto* c = std::get_if<CrossLearningAgent>(&seat)) return c->projection_events();
  return 0;
}

// Advances one seat. Bandit learners consume the sampled reward; Hedge
// consumes the full expected-payoff vector against the opponent's pre-update
// policy.
void seat_step(Seat& seat, std::size_t action, double reward,
               std::span<const double> payoff_vector) {
  if (auto* e = std::get_if<EridAgent>(&seat)) {
    e->step(action, reward);
  } else if (auto* c = std::get_if<CrossLearningAgent>(&seat)) {
    c->step(action, reward);
  } else {
    std::get<HedgeAgent>(seat).step(payoff_vector);
  }
}

double seat_time_scale(const AgentSpec& spec) {
  return spec.kind == AgentKind::kHedge ? 1.0 : spec.alpha;
}

}  // namespace

Trajectory run_learning(const ExperimentConfig& cfg) {
  if (cfg.n_steps < 1) throw std::invalid_argument("run_learning: n_steps >= 1");
  if (cfg.record_every < 1) throw std::invalid_argument("run_learning: record_every >= 1");

  const auto t_start = std::chrono::steady_clock::now();
  const Game2P first_game = cfg.schedule.payoff_at(0);
  const std::size_t m1 = first_game.num_actions1();
  const std::size_t m2 = first_game.num_actions2();
  if (cfg.self_play && m1 != m2) {
    throw std::invalid_argument("run_learning: self-play needs a symmetric action space");
  }

  Seat seat1 = make_seat(cfg.agent1, m1);
  std::unique_ptr<Seat> seat2;
  if (!cfg.self_play) seat2 = std::make_unique<Seat>(make_seat(cfg.agent2, m2));

  std::mt19937_64 rng(cfg.seed);

  Trajectory traj(cfg.schedule);
  traj.time_per_step = seat_time_scale(cfg.agent1);
  traj.label = cfg.label;

  auto current_profile = [&]() -> PolicyProfile {
    const SimplexVector& p1 = seat_policy(seat1);
    const SimplexVector& p2 = cfg.self_play ? p1 : seat_policy(*seat2);
    return PolicyProfile{p1, p2};
  };
  auto record = [&](std::int64_t t) {
    const PolicyProfile profile = current_profile();
    traj.points.push_back({t, profile, metric_sample(cfg.schedule.payoff_at(t), profile, t)});
  };

  const bool static_schedule = cfg.schedule.kind() == GameSchedule::Kind::kStatic;
  const bool needs_expected = cfg.agent1.kind == AgentKind::kHedge ||
                              (!cfg.self_play && cfg.agent2.kind == AgentKind::kHedge);

  record(0);
  for (std::int64_t t = 0; t < cfg.n_steps; ++t) {
    const Game2P game = static_schedule ? first_game : cfg.schedule.payoff_at(t);
    const SimplexVector& p1 = seat_policy(seat1);
    const SimplexVector& p2 = cfg.self_play ? p1 : seat_policy(*seat2);
    const std::size_t a1 = sample_index(p1.span(), rng);
    const std::size_t a2 = sample_index(p2.span(), rng);
    const double r1 = game.reward1(a1, a2);
    const double r2 = game.reward2(a1, a2);

    // Hedge plays against the opponent's pre-update policy on both seats.
    ExpectedPayoffs ep;
    if (needs_expected) ep = expected_payoffs(game, PolicyProfile{p1, p2});
    seat_step(seat1, a1, r1, ep.u1);
    if (!cfg.self_play) seat_step(*seat2, a2, r2, ep.u2);

    const std::int64_t done = t + 1;
    if (done % cfg.record_every == 0 || done == cfg.n_steps) record(done);
  }

  traj.projection_events = seat_projections(seat1);
  if (seat2) traj.projection_events += seat_projections(*seat2);
  traj.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  if (cfg.report_running_average) {
    Trajectory averaged = running_average_policy(traj);
    averaged.wall_seconds = traj.wall_seconds;
    return averaged;
  }
  return traj;
}

std::vector<Trajectory> run_many(std::span<const ExperimentConfig> configs) {
  std::vector<std::optional<Trajectory>> slots(configs.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(configs.size()); ++i) {
    try {
      slots[i] = run_learning(configs[i]);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<Trajectory> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

double compare_to_ode(const Trajectory& traj, const DynamicsKind& kind,
                      const OdeConfig& cfg) {
  if (traj.points.empty() || traj.points.front().t != 0) {
    throw std::invalid_argument("compare_to_ode: trajectory lacks an initial sample");
  }
  if (!(cfg.step_size > 0.0)) throw std::invalid_argument("compare_to_ode: step_size > 0");

  // Re-integrate from the learner's own start; a mismatched profile shape is
  // the only way initial conditions can disagree.
  const PolicyProfile& start = traj.points.front().profile;
  OdeConfig probe = cfg;
  double sup = 0.0;
  double t_ode = 0.0;
  PolicyProfile state = start;

  for (std::size_t k = 1; k < traj.points.size(); ++k) {
    const TrajectoryPoint& point = traj.points[k];
    if (point.profile.player1.size() != start.player1.size() ||
        point.profile.player2.size() != start.player2.size()) {
      throw std::invalid_argument("compare_to_ode: inconsistent profile dimensions");
    }
    const double target = static_cast<double>(point.t) * traj.time_per_step;
    const double span = target - t_ode;
    if (span <= 0.0) continue;
    const auto whole = static_cast<std::int64_t>(std::floor(span / cfg.step_size + 1e-9));
    // One integrate() call per recorded interval: whole steps at step_size,
    // then a remainder step to land exactly on the learner's time.
    const std::int64_t learner_step = point.t;
    const GameSchedule local = GameSchedule::constant(traj.schedule.payoff_at(learner_step));
    if (whole > 0) {
      probe.step_size = cfg.step_size;
      probe.n_steps = whole;
      probe.record_every = whole;
      state = integrate(kind, local, state, probe).points.back().profile;
    }
    const double rem = span - static_cast<double>(whole) * cfg.step_size;
    if (rem > 1e-12) {
      probe.step_size = rem;
      probe.n_steps = 1;
      probe.record_every = 1;
      state = integrate(kind, local, state, probe).points.back().profile;
    }
    t_ode = target;

    const double d = std::max(simplex_distance(point.profile.player1, state.player1),
                              simplex_distance(point.profile.player2, state.player2));
    sup = std::max(sup, d);
  }
  return sup;
}

namespace {

struct TrialAccumulator {
  std::vector<double> deltas;  // n_trials x (m1 + m2), row-major
  std::vector<unsigned char> empty_action;
};

// One Monte-Carlo trial: fill fresh buffers with K i.i.d. joint samples at
// the frozen profile, then read the protocol delta for both players.
void drift_trial(const Game2P& game, const PolicyProfile& profile,
                 const ProtocolKind& protocol, std::size_t buffer_capacity,
                 std::uint64_t trial_seed, std::span<double> out_delta,
                 unsigned char& out_empty) {
  std::mt19937_64 rng(trial_seed);
  const std::size_t m1 = profile.player1.size();
  const std::size_t m2 = profile.player2.size();
  ReplayBuffer buf1(buffer_capacity, m1);
  ReplayBuffer buf2(buffer_capacity, m2);
  for (std::size_t k = 0; k < buffer_capacity; ++k) {
    const std::size_t a1 = sample_index(profile.player1.span(), rng);
    const std::size_t a2 = sample_index(profile.player2.span(), rng);
    buf1.push(a1, game.reward1(a1, a2));
    buf2.push(a2, game.reward2(a1, a2));
  }
  out_empty = 0;
  for (std::size_t i = 0; i < m1; ++i) out_empty |= buf1.count(i) == 0;
  for (std::size_t j = 0; j < m2; ++j) out_empty |= buf2.count(j) == 0;

  const std::vector<double> d1 = erid_delta(profile.player1, buf1.average_rewards(), protocol);
  const std::vector<double> d2 = erid_delta(profile.player2, buf2.average_rewards(), protocol);
  for (std::size_t i = 0; i < m1; ++i) out_delta[i] = d1[i];
  for (std::size_t j = 0; j < m2; ++j) out_delta[m1 + j] = d2[j];
}

DriftReport reduce_trials(const TrialAccumulator& acc, std::size_t m1, std::size_t m2,
                          std::size_t n_trials, std::vector<double> analytic) {
  const std::size_t dim = m1 + m2;
  DriftReport report;
  report.m1 = m1;
  report.m2 = m2;
  report.n_trials = n_trials;
  report.analytic = std::move(analytic);
  report.mc_mean.assign(dim, 0.0);
  report.mc_stderr.assign(dim, 0.0);
  report.z.assign(dim, 0.0);

  for (std::size_t t = 0; t < n_trials; ++t) {
    for (std::size_t c = 0; c < dim; ++c) report.mc_mean[c] += acc.deltas[t * dim + c];
    report.trials_with_empty_action += acc.empty_action[t];
  }
  for (double& v : report.mc_mean) v /= static_cast<double>(n_trials);

  for (std::size_t t = 0; t < n_trials; ++t) {
    for (std::size_t c = 0; c < dim; ++c) {
      const double d = acc.deltas[t * dim + c] - report.mc_mean[c];
      report.mc_stderr[c] += d * d;
    }
  }
  for (std::size_t c = 0; c < dim; ++c) {
    const double var = n_trials > 1 ? report.mc_stderr[c] / static_cast<double>(n_trials - 1) : 0.0;
    report.mc_stderr[c] = std::sqrt(var / static_cast<double>(n_trials));
    const double gap = std::abs(report.mc_mean[c] - report.analytic[c]);
    report.z[c] = report.mc_stderr[c] > 0.0
                      ? gap / report.mc_stderr[c]
                      : (gap == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
    report.max_z = std::max(report.max_z, report.z[c]);
  }
  return report;
}

std::vector<double> concatenated_field(const DynamicsKind& kind, const Game2P& game,
                                       const PolicyProfile& profile) {
  const PolicyField f = vector_field(kind, game, profile);
  std::vector<double> flat = f.d1;
  flat.insert(flat.end(), f.d2.begin(), f.d2.end());
  return flat;
}

}  // namespace

DriftReport drift_validate(const Game2P& game, const PolicyProfile& profile,
                           const ProtocolKind& protocol, std::size_t buffer_capacity,
                           std::size_t n_trials, std::uint64_t seed, bool parallel) {
  if (n_trials == 0) throw std::invalid_argument("drift_validate: n_trials >= 1");
  const std::size_t m1 = profile.player1.size();
  const std::size_t m2 = profile.player2.size();
  const std::size_t dim = m1 + m2;

  TrialAccumulator acc;
  acc.deltas.assign(n_trials * dim, 0.0);
  acc.empty_action.assign(n_trials, 0);

  // Every trial owns a generator derived from (seed, trial), so the schedule
  // and thread count cannot change any result.
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(n_trials); ++t) {
    drift_trial(game, profile, protocol, buffer_capacity, derive_seed(seed, t),
                std::span<double>(acc.deltas).subspan(t * dim, dim), acc.empty_action[t]);
  }

  return reduce_trials(acc, m1, m2, n_trials,
                       concatenated_field(to_dynamics(protocol), game, profile));
}

namespace {

Game2P normalized_game(const Game2P& game, const std::optional<PayoffRange>& norm1,
                       const std::optional<PayoffRange>& norm2) {
  auto remap = [](const Matrix& m, const std::optional<PayoffRange>& norm) {
    if (!norm) return m;
    Matrix out = m;
    const double width = norm->width();
    if (width == 0.0) throw std::domain_error("cross_drift_validate: degenerate normalizer");
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = (m(i, j) - norm->r_min) / width;
    return out;
  };
  return Game2P(remap(game.payoff1(), norm1), remap(game.payoff2(), norm2));
}

}  // namespace

DriftReport cross_drift_validate(const Game2P& game, const PolicyProfile& profile,
                                 std::optional<PayoffRange> normalizer1,
                                 std::optional<PayoffRange> normalizer2,
                                 std::size_t n_trials, std::uint64_t seed, bool parallel) {
  if (n_trials == 0) throw std::invalid_argument("cross_drift_validate: n_trials >= 1");
  const std::size_t m1 = profile.player1.size();
  const std::size_t m2 = profile.player2.size();
  const std::size_t dim = m1 + m2;
  const Game2P norm_game = normalized_game(game, normalizer1, normalizer2);

  TrialAccumulator acc;
  acc.deltas.assign(n_trials * dim, 0.0);
  acc.empty_action.assign(n_trials, 0);

#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t t = 0; t < static_cast<std::int64_t>(n_trials); ++t) {
    std::mt19937_64 rng(derive_seed(seed, t));
    const std::size_t a1 = sample_index(profile.player1.span(), rng);
    const std::size_t a2 = sample_index(profile.player2.span(), rng);
    const double r1 = norm_game.reward1(a1, a2);
    const double r2 = norm_game.reward2(a1, a2);
    // Cross-learning increment divided by alpha: r * (1{i=a} - pi_i).
    for (std::size_t i = 0; i < m1; ++i) {
      acc.deltas[t * dim + i] = r1 * ((i == a1 ? 1.0 : 0.0) - profile.player1[i]);
    }
    for (std::size_t j = 0; j < m2; ++j) {
      acc.deltas[t * dim + m1 + j] = r2 * ((j == a2 ? 1.0 : 0.0) - profile.player2[j]);
    }
  }

  return reduce_trials(acc, m1, m2, n_trials,
                       concatenated_field(DynamicsKind::replicator(), norm_game, profile));
}

Trajectory running_average_policy(const Trajectory& traj) {
  if (traj.points.empty()) throw std::invalid_argument("running_average_policy: empty trajectory");
  Trajectory out(traj.schedule);
  out.time_per_step = traj.time_per_step;
  out.projection_events = traj.projection_events;
  out.label = traj.label;
  out.points.reserve(traj.points.size());

  std::vector<double> sum1(traj.points.front().profile.player1.size(), 0.0);
  std::vector<double> sum2(traj.points.front().profile.player2.size(), 0.0);
  for (std::size_t k = 0; k < traj.points.size(); ++k) {
    const TrajectoryPoint& p = traj.points[k];
    for (std::size_t i = 0; i < sum1.size(); ++i) sum1[i] += p.profile.player1[i];
    for (std::size_t i = 0; i < sum2.size(); ++i) sum2[i] += p.profile.player2[i];
    // Convex combination of simplex points; renormalize away the roundoff.
    PolicyProfile averaged{project_to_simplex(sum1), project_to_simplex(sum2)};
    out.points.push_back(
        {p.t, averaged, metric_sample(traj.schedule.payoff_at(p.t), averaged, p.t)});
  }
  return out;
}

}  // namespace erid
