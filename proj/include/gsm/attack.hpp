#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsm/state.hpp"

namespace gsm {

enum class ActionKind : std::uint8_t { Release, Consider, Continue };

struct Action {
    ActionKind kind = ActionKind::Continue;
    BlockId block = 0;

    bool operator==(const Action&) const = default;
};

std::string to_string(Action a);

enum class ProbTag : std::uint8_t { Det, AttMineAttFirst, AttMineDefFirst, DefMineAttFirst, DefMineDefFirst };

const char* to_string(ProbTag t);

double probability(ProbTag tag, double alpha, double gamma);

struct Outcome {
    ProbTag tag = ProbTag::Det;
    AttackState state;
    double reward = 0;    // attacker's share
    double progress = 0;
};

struct EnvConfig {
    int max_blocks = 6;
    bool force_consider = false;
    bool canonize = false;
};

class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class AttackSpace {
public:
    AttackSpace(const Protocol& rules, EnvConfig config);

    const Protocol& rules() const { return *rules_; }
    const EnvConfig& config() const { return config_; }

    AttackState initial() const;

    /// Releases ascending, then considers ascending, then Continue. Only the
    /// honest action once the DAG has reached the size limit.
    std::vector<Action> actions(const AttackState& s) const;
    std::vector<Action> unrestricted_actions(const AttackState& s) const;
    Action honest(const AttackState& s) const;

    std::vector<Outcome> apply(const AttackState& s, Action a) const;

    Outcome consider(const AttackState& s, BlockId b) const;
    Outcome release(const AttackState& s, BlockId b) const;
    std::vector<Outcome> proceed(const AttackState& s) const;

    /// Delivers pending blocks to the defender, preferring blocks of the given miner.
    AttackState communicate(AttackState s, Miner first) const;
    AttackState mine(AttackState s, Miner who) const;

    struct Cleaned {
        AttackState state;
        double reward = 0;
        double progress = 0;
    };

    Cleaned cleanup(AttackState s) const;
    AttackState remove_stale(const AttackState& s) const;
    Cleaned truncate(const AttackState& s) const;

private:
    AttackState do_consider(AttackState s, BlockId b) const;

    const Protocol* rules_;
    EnvConfig config_;
};

}  // namespace gsm
