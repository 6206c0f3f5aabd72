#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gsm/mdp.hpp"

namespace gsm {

using Policy = std::vector<std::uint32_t>;  // action offset within each state

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Appends an absorbing terminal state (the last index). A transition with
/// progress g continues with factor (1 - 1/H)^g and terminates otherwise;
/// both branches keep the reward.
ExplicitMdp pto_transform(const ExplicitMdp& mdp, double horizon);

struct ValueIteration {
    std::vector<double> values;
    Policy policy;
    int sweeps = 0;
    double residual = 0;
};

/// Total-reward value iteration until the max-norm update drops below eps.
ValueIteration value_iteration(const ExplicitMdp& mdp, double eps = 1e-4, int max_sweeps = 1000000);

struct SolveReport {
    double reward_per_progress = 0;
    double pto_value = 0;  // start value divided by the horizon
    int sweeps = 0;
    double residual = 0;
    std::size_t support = 0;
};

/// Long-run reward per progress of the policy-induced chain started at mdp.start.
SolveReport steady_state_eval(const ExplicitMdp& mdp, const Policy& policy);

Policy honest_policy(const ExplicitMdp& mdp);

struct SolveOptions {
    double horizon = 100;
    double eps = 1e-4;
};

SolveReport solve(const ExplicitMdp& mdp, const SolveOptions& opts = {});
SolveReport solve(const SymbolicMdp& mdp, double alpha, double gamma, const SolveOptions& opts = {});

}  // namespace gsm
