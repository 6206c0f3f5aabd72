#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsm/attack.hpp"

namespace gsm {

struct Transition {
    ProbTag tag;
    std::uint32_t next;
    double reward;
    double progress;
};

/// Action labels shared by the generic model and the reference models.
/// Generic actions encode kind * 256 + block.
using ActionCode = std::uint16_t;

ActionCode encode(Action a);
std::string action_label(ActionCode code);

/// Tabular MDP with symbolic probabilities. Actions of state s are
/// action_begin[s] .. action_begin[s + 1]; transitions of action a are
/// trans_begin[a] .. trans_begin[a + 1].
struct SymbolicMdp {
    std::string description;
    std::vector<std::string> states;
    std::vector<std::uint32_t> action_begin{0};
    std::vector<ActionCode> actions;
    std::vector<std::uint32_t> trans_begin{0};
    std::vector<Transition> transitions;
    std::vector<std::uint32_t> honest;  // action offset within the state
    std::uint32_t start = 0;

    std::size_t n_states() const { return states.size(); }
    std::size_t n_actions() const { return actions.size(); }
};

class StateCapExceeded : public std::runtime_error {
public:
    explicit StateCapExceeded(std::size_t cap)
        : std::runtime_error("state cap of " + std::to_string(cap) + " exceeded"), cap_(cap) {}
    std::size_t cap() const { return cap_; }

private:
    std::size_t cap_;
};

inline constexpr std::size_t kDefaultStateCap = 100000;

SymbolicMdp explore(const AttackSpace& space, std::size_t state_cap = kDefaultStateCap);

/// Writes a header followed by `state action tag successor reward progress` lines.
void write_mdp(std::ostream& os, const SymbolicMdp& mdp);

struct ExplicitMdp {
    std::vector<std::uint32_t> action_begin;
    std::vector<std::uint32_t> trans_begin;
    std::vector<std::uint32_t> next;
    std::vector<double> prob;
    std::vector<double> reward;
    std::vector<double> progress;
    std::vector<std::uint32_t> honest;
    std::uint32_t start = 0;
    double alpha = 0;
    double gamma = 0;

    std::size_t n_states() const { return action_begin.size() - 1; }
};

ExplicitMdp instantiate(const SymbolicMdp& mdp, double alpha, double gamma);

}  // namespace gsm
