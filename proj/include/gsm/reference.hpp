#pragma once

#include <string>

#include "gsm/mdp.hpp"

namespace gsm::ref {

enum class Fork : std::uint8_t { Irrelevant, Relevant, Active };

/// Private and public chain lengths since the fork, plus match feasibility.
struct RefState {
    int a = 0;
    int h = 0;
    Fork fork = Fork::Irrelevant;

    bool operator==(const RefState&) const = default;
};

enum class RefAction : std::uint8_t { Adopt, Override, Match, Wait };

ActionCode encode(RefAction a);

enum class Variant { Fc16, Aft20 };

struct RefOutcome {
    ProbTag tag;
    RefState next;
    double reward;
    double progress;
};

struct Model {
    Variant variant;
    int limit;

    std::vector<RefAction> actions(const RefState& s) const;
    std::vector<RefOutcome> apply(const RefState& s, RefAction a) const;
};

SymbolicMdp build(Variant variant, int limit, std::size_t state_cap = kDefaultStateCap);

inline SymbolicMdp fc16_build(int limit, std::size_t cap = kDefaultStateCap) { return build(Variant::Fc16, limit, cap); }
inline SymbolicMdp aft20_build(int limit, std::size_t cap = kDefaultStateCap) { return build(Variant::Aft20, limit, cap); }

/// Reads a Bitcoin attack state as private/public chain lengths over the fork.
RefState summarize_bitcoin(const AttackState& s);

std::string to_string(const RefState& s);

}  // namespace gsm::ref
