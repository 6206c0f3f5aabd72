#include "gsm/reference.hpp"

#include <deque>
#include <map>

namespace gsm::ref {

ActionCode encode(RefAction a) { return static_cast<ActionCode>(3 * 256 + static_cast<int>(a)); }

std::string to_string(const RefState& s) {
    static const char* forks[] = {"irrelevant", "relevant", "active"};
    return "(" + std::to_string(s.a) + "," + std::to_string(s.h) + "," + forks[static_cast<int>(s.fork)] + ")";
}

// Wait is cut one block before the limit in both variants. FC'16 never
// restricts Match and accepts ties; AFT'20 needs a strictly longer private
// chain and also cuts Match at the limit.
std::vector<RefAction> Model::actions(const RefState& s) const {
    std::vector<RefAction> out{RefAction::Adopt};
    if (s.a > s.h)
        out.push_back(RefAction::Override);
    if (s.fork == Fork::Relevant && s.h > 0) {
        bool feasible = variant == Variant::Fc16 ? s.a >= s.h : (s.a > s.h && s.a + s.h < limit);
        if (feasible)
            out.push_back(RefAction::Match);
    }
    if (s.a + s.h + 1 < limit)
        out.push_back(RefAction::Wait);
    return out;
}

std::vector<RefOutcome> Model::apply(const RefState& s, RefAction act) const {
    using enum ProbTag;
    auto both = [](RefState att, RefState def, double r, double g) {
        return std::vector<RefOutcome>{{AttMineAttFirst, att, r, g},
                                       {AttMineDefFirst, att, r, g},
                                       {DefMineAttFirst, def, r, g},
                                       {DefMineDefFirst, def, r, g}};
    };
    switch (act) {
    case RefAction::Adopt:
        return both({1, 0, Fork::Irrelevant}, {0, 1, Fork::Relevant}, 0, s.h);
    case RefAction::Override:
        return both({s.a - s.h, 0, Fork::Irrelevant}, {s.a - s.h - 1, 1, Fork::Relevant}, s.h + 1, s.h + 1);
    case RefAction::Wait:
        if (s.fork != Fork::Active)
            return both({s.a + 1, s.h, Fork::Irrelevant}, {s.a, s.h + 1, Fork::Relevant}, 0, 0);
        [[fallthrough]];
    case RefAction::Match:
        return {{AttMineAttFirst, {s.a + 1, s.h, Fork::Active}, 0, 0},
                {AttMineDefFirst, {s.a + 1, s.h, Fork::Active}, 0, 0},
                {DefMineAttFirst, {s.a - s.h, 1, Fork::Relevant}, double(s.h), double(s.h)},
                {DefMineDefFirst, {s.a, s.h + 1, Fork::Relevant}, 0, 0}};
    }
    return {};
}

SymbolicMdp build(Variant variant, int limit, std::size_t state_cap) {
    if (limit < 2)
        throw std::invalid_argument("reference model limit must be at least 2");
    Model model{variant, limit};
    SymbolicMdp mdp;
    mdp.description = std::string(variant == Variant::Fc16 ? "ref-fc16" : "ref-aft20") +
                      " limit=" + std::to_string(limit);

    auto key = [](const RefState& s) { return std::tuple(s.a, s.h, static_cast<int>(s.fork)); };
    std::map<std::tuple<int, int, int>, std::uint32_t> index;
    std::deque<RefState> queue;
    auto intern = [&](const RefState& s) {
        auto [it, fresh] = index.try_emplace(key(s), static_cast<std::uint32_t>(mdp.states.size()));
        if (fresh) {
            if (mdp.states.size() >= state_cap)
                throw StateCapExceeded(state_cap);
            mdp.states.push_back(to_string(s));
            queue.push_back(s);
        }
        return it->second;
    };

    mdp.start = intern({0, 0, Fork::Irrelevant});
    while (!queue.empty()) {
        RefState s = queue.front();
        queue.pop_front();
        auto acts = model.actions(s);
        std::uint32_t honest = 0;
        for (std::size_t i = 0; i < acts.size(); ++i) {
            // Honest play: publish a longer chain at once, otherwise adopt.
            if (acts[i] == RefAction::Override || (s.a <= s.h && acts[i] == RefAction::Adopt))
                honest = static_cast<std::uint32_t>(i);
            mdp.actions.push_back(encode(acts[i]));
            for (const auto& o : model.apply(s, acts[i]))
                mdp.transitions.push_back({o.tag, intern(o.next), o.reward, o.progress});
            mdp.trans_begin.push_back(static_cast<std::uint32_t>(mdp.transitions.size()));
        }
        mdp.honest.push_back(honest);
        mdp.action_begin.push_back(static_cast<std::uint32_t>(mdp.actions.size()));
    }
    return mdp;
}

RefState summarize_bitcoin(const AttackState& s) {
    const Dag& dag = s.dag;
    BlockId priv = s.att.refs.at(0);
    BlockId pub = 0;
    for (BlockId b : members(dag.all() & ~s.withheld))
        if (dag.height(b) > dag.height(pub))
            pub = b;
    BlockSet common = (dag.past(priv) | bit(priv)) & (dag.past(pub) | bit(pub));
    int fork_height = 0;
    for (BlockId b : members(common))
        fork_height = std::max(fork_height, dag.height(b));
    RefState out{dag.height(priv) - fork_height, dag.height(pub) - fork_height, Fork::Irrelevant};
    BlockSet published_fork = (dag.past(priv) | bit(priv)) & ~common & ~s.withheld;
    BlockSet pending = 0;
    for (BlockId b : members(dag.all() & ~s.visible))
        if (dag.miner(b) == Miner::Defender)
            pending |= bit(b);
    if (pending)
        out.fork = Fork::Relevant;
    else if (published_fork)
        out.fork = Fork::Active;
    return out;
}

}  // namespace gsm::ref
