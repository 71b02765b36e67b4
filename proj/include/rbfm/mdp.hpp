#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "rbfm/rng.hpp"

namespace rbfm {

// Finite MDP with a row-stochastic kernel. Kernel rows are indexed by the
// flattened pair (s, a) -> s * n_actions + a; column s' holds T(s'|s,a).
struct TabularMdp {
  int n_states = 0;
  int n_actions = 0;
  Eigen::MatrixXd kernel;  // (n_states * n_actions) x n_states
  Eigen::VectorXd mu;      // initial state distribution
  double gamma = 0.0;

  int row(int s, int a) const { return s * n_actions + a; }
  double t(int s, int a, int s_next) const { return kernel(row(s, a), s_next); }

  // State-to-state chain P_pi(s'|s) = sum_a pi(a|s) T(s'|s,a).
  Eigen::MatrixXd policy_chain(const Eigen::MatrixXd& policy_probs) const;
};

// One scalar reward per state; rewards apply to the *next* state of a
// transition throughout the project.
struct RewardTable {
  Eigen::VectorXd r;
  std::string name;
};

struct StochasticPolicy {
  Eigen::MatrixXd probs;  // n_states x n_actions, rows sum to 1
};

struct Trajectory {
  std::vector<int> states;   // length steps + 1
  std::vector<int> actions;  // length steps
};

struct RngSeed {
  std::uint64_t seed = 0;
};

// Throws NonStochasticRow / NotDistribution / BadDiscount on violation.
void validate_mdp(const TabularMdp& mdp);

void validate_policy(const TabularMdp& mdp, const StochasticPolicy& policy);

Trajectory rollout(const TabularMdp& mdp, const StochasticPolicy& policy,
                   int horizon, RngSeed rng);

// Exact value iteration for reward-on-next-state returns. The greedy policy
// is deterministic with ties broken toward the smallest action index.
std::pair<Eigen::VectorXd, StochasticPolicy> value_iteration(
    const TabularMdp& mdp, const RewardTable& reward, double tol);

// Action values under the reward-on-next-state convention:
// Q(s,a) = sum_s' T(s'|s,a) (r(s') + gamma V(s')).
Eigen::MatrixXd q_from_values(const TabularMdp& mdp, const RewardTable& reward,
                              const Eigen::VectorXd& values);

StochasticPolicy softmax_policy(const Eigen::MatrixXd& q, double temperature);

StochasticPolicy uniform_policy(int n_states, int n_actions);

// First index attaining the maximum (the tie-break used everywhere).
int argmax_smallest(const Eigen::VectorXd& v);

}  // namespace rbfm
