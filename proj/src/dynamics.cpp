#include "erid/dynamics.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <utility>

#include "erid/metrics.hpp"

namespace erid {

const char* to_string(Dynamics d) {
  switch (d) {
    case Dynamics::kReplicator: return "replicator";
    case Dynamics::kBNN: return "bnn";
    case Dynamics::kSmith: return "smith";
    case Dynamics::kSmithReplicatorPairwise: return "srp";
  }
  return "?";
}

DynamicsKind DynamicsKind::srp(std::optional<BoxBounds> bounds) {
  DynamicsKind k(Dynamics::kSmithReplicatorPairwise);
  k.bounds_ = std::move(bounds);
  return k;
}

BoxBounds DynamicsKind::box_for(std::size_t m) const {
  if (bounds_) {
    if (bounds_->size() != m) {
      throw std::invalid_argument("DynamicsKind: bounds dimension mismatch");
    }
    return *bounds_;
  }
  return BoxBounds::unit(m);
}

namespace {

inline double pos(double z) { return z > 0.0 ? z : 0.0; }

// Field of one player's policy given its expected payoff vector.
void one_sided_field(Dynamics tag, const BoxBounds* box, std::span<const double> pi,
                     std::span<const double> u, double u_mean, std::span<double> out) {
  const std::size_t m = pi.size();
  switch (tag) {
    case Dynamics::kReplicator:
      for (std::size_t i = 0; i < m; ++i) out[i] = pi[i] * (u[i] - u_mean);
      return;
    case Dynamics::kBNN: {
      double excess_sum = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        out[i] = pos(u[i] - u_mean);
        excess_sum += out[i];
      }
      for (std::size_t i = 0; i < m; ++i) out[i] -= pi[i] * excess_sum;
      return;
    }
    case Dynamics::kSmith:
      for (std::size_t i = 0; i < m; ++i) {
        double in = 0.0, out_rate = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
          in += pi[j] * pos(u[i] - u[j]);
          out_rate += pos(u[j] - u[i]);
        }
        out[i] = in - pi[i] * out_rate;
      }
      return;
    case Dynamics::kSmithReplicatorPairwise:
      for (std::size_t i = 0; i < m; ++i) {
        const double slack_i_up = box->upper(i) - pi[i];
        const double slack_i_lo = pi[i] - box->lower(i);
        double v = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
          v += (pi[j] - box->lower(j)) * slack_i_up * pos(u[i] - u[j]) -
               slack_i_lo * (box->upper(j) - pi[j]) * pos(u[j] - u[i]);
        }
        out[i] = v;
      }
      return;
  }
}

}  // namespace

PolicyField vector_field(const DynamicsKind& kind, const Game2P& game,
                         const PolicyProfile& profile) {
  const ExpectedPayoffs ep = expected_payoffs(game, profile);
  const std::size_t m1 = profile.player1.size();
  const std::size_t m2 = profile.player2.size();

  BoxBounds box1 = BoxBounds::unit(m1);
  BoxBounds box2 = BoxBounds::unit(m2);
  if (kind.tag() == Dynamics::kSmithReplicatorPairwise) {
    box1 = kind.box_for(m1);
    box2 = kind.box_for(m2);
    if (!box1.contains(profile.player1) || !box2.contains(profile.player2)) {
      throw std::domain_error("vector_field: profile outside the SRP box");
    }
  }

  PolicyField f;
  f.d1.resize(m1);
  f.d2.resize(m2);
  one_sided_field(kind.tag(), &box1, profile.player1.span(), ep.u1, ep.mean1, f.d1);
  one_sided_field(kind.tag(), &box2, profile.player2.span(), ep.u2, ep.mean2, f.d2);
  return f;
}

IntegrationError::IntegrationError(std::int64_t step, std::vector<double> state)
    : std::runtime_error("integration diverged at step " + std::to_string(step)),
      step_(step),
      state_(std::move(state)) {}

namespace {

struct RawState {
  std::vector<double> x, y;
};

RawState field_at(const DynamicsKind& kind, const Game2P& game, const RawState& s) {
  // Intermediate Runge-Kutta stages may sit slightly off the simplex; the
  // field formulas only need the raw coordinates, so evaluate them directly.
  const ExpectedPayoffs ep = [&] {
    ExpectedPayoffs out;
    const std::size_t m1 = s.x.size(), m2 = s.y.size();
    out.u1.assign(m1, 0.0);
    out.u2.assign(m2, 0.0);
    for (std::size_t i = 0; i < m1; ++i)
      for (std::size_t j = 0; j < m2; ++j) {
        out.u1[i] += game.payoff1()(i, j) * s.y[j];
        out.u2[j] += game.payoff2()(i, j) * s.x[i];
      }
    for (std::size_t i = 0; i < m1; ++i) out.mean1 += s.x[i] * out.u1[i];
    for (std::size_t j = 0; j < m2; ++j) out.mean2 += s.y[j] * out.u2[j];
    return out;
  }();
  const BoxBounds box1 = kind.box_for(s.x.size());
  const BoxBounds box2 = kind.box_for(s.y.size());
  RawState d{std::vector<double>(s.x.size()), std::vector<double>(s.y.size())};
  one_sided_field(kind.tag(), &box1, s.x, ep.u1, ep.mean1, d.x);
  one_sided_field(kind.tag(), &box2, s.y, ep.u2, ep.mean2, d.y);
  return d;
}

RawState axpy(const RawState& s, double h, const RawState& d) {
  RawState out = s;
  for (std::size_t i = 0; i < out.x.size(); ++i) out.x[i] += h * d.x[i];
  for (std::size_t i = 0; i < out.y.size(); ++i) out.y[i] += h * d.y[i];
  return out;
}

// Drift of a raw vector off the simplex: sum deviation or negative overhang.
double simplex_drift(const std::vector<double>& v) {
  double sum = 0.0, neg = 0.0;
  for (double p : v) {
    sum += p;
    neg = std::min(neg, p);
  }
  return std::max(std::abs(sum - 1.0), -neg);
}

bool all_finite(const std::vector<double>& v) {
  for (double p : v) {
    if (!std::isfinite(p)) return false;
  }
  return true;
}

}  // namespace

Trajectory integrate(const DynamicsKind& kind, const GameSchedule& schedule,
                     const PolicyProfile& initial, const OdeConfig& cfg) {
  if (!(cfg.step_size > 0.0)) throw std::invalid_argument("integrate: step_size > 0");
  if (cfg.n_steps < 1) throw std::invalid_argument("integrate: n_steps >= 1");
  if (cfg.record_every < 1) throw std::invalid_argument("integrate: record_every >= 1");
  if (kind.tag() == Dynamics::kSmithReplicatorPairwise) {
    if (!kind.box_for(initial.player1.size()).contains(initial.player1) ||
        !kind.box_for(initial.player2.size()).contains(initial.player2)) {
      throw std::domain_error("integrate: initial profile outside the SRP box");
    }
  }

  const auto t_start = std::chrono::steady_clock::now();
  Trajectory traj(schedule);
  traj.time_per_step = cfg.step_size;
  traj.label = to_string(kind.tag());

  RawState s{initial.player1.probs(), initial.player2.probs()};
  const double h = cfg.step_size;

  auto record = [&](std::int64_t step) {
    PolicyProfile profile{SimplexVector(s.x), SimplexVector(s.y)};
    const Game2P game = schedule.payoff_at(step);
    traj.points.push_back({step, profile, metric_sample(game, profile, step)});
  };

  record(0);
  for (std::int64_t step = 0; step < cfg.n_steps; ++step) {
    const Game2P game = schedule.payoff_at(step);
    const RawState k1 = field_at(kind, game, s);
    const RawState k2 = field_at(kind, game, axpy(s, 0.5 * h, k1));
    const RawState k3 = field_at(kind, game, axpy(s, 0.5 * h, k2));
    const RawState k4 = field_at(kind, game, axpy(s, h, k3));
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      s.x[i] += h / 6.0 * (k1.x[i] + 2.0 * (k2.x[i] + k3.x[i]) + k4.x[i]);
    }
    for (std::size_t i = 0; i < s.y.size(); ++i) {
      s.y[i] += h / 6.0 * (k1.y[i] + 2.0 * (k2.y[i] + k3.y[i]) + k4.y[i]);
    }

    if (!all_finite(s.x) || !all_finite(s.y)) {
      std::vector<double> state = s.x;
      state.insert(state.end(), s.y.begin(), s.y.end());
      throw IntegrationError(step, std::move(state));
    }

    for (auto* v : {&s.x, &s.y}) {
      const double drift = simplex_drift(*v);
      if (drift > kSimplexTol) {
        *v = project_to_simplex(*v).probs();
        ++traj.projection_events;
      } else if (drift > 0.0 && *std::min_element(v->begin(), v->end()) < 0.0) {
        // Sub-tolerance negatives still leave the domain; repair quietly.
        *v = project_to_simplex(*v).probs();
      }
    }

    const std::int64_t done = step + 1;
    if (done % cfg.record_every == 0 || done == cfg.n_steps) record(done);
  }

  traj.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return traj;
}

double replicator_invariant(const PolicyProfile& profile, const PolicyProfile& reference) {
  auto one = [](const SimplexVector& ne, const SimplexVector& pi) {
    if (ne.size() != pi.size()) {
      throw std::invalid_argument("replicator_invariant: dimension mismatch");
    }
    double kl = 0.0;
    for (std::size_t i = 0; i < ne.size(); ++i) {
      if (ne[i] == 0.0) continue;
      if (pi[i] <= 0.0) {
        throw std::domain_error("replicator_invariant: profile lacks mass on index " +
                                std::to_string(i));
      }
      kl += ne[i] * std::log(ne[i] / pi[i]);
    }
    return kl;
  };
  return one(reference.player1, profile.player1) + one(reference.player2, profile.player2);
}

}  // namespace erid
