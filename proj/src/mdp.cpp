#include "gsm/mdp.hpp"

#include <deque>
#include <ostream>
#include <unordered_map>

namespace gsm {

ActionCode encode(Action a) {
    return static_cast<ActionCode>(static_cast<int>(a.kind) * 256 + a.block);
}

std::string action_label(ActionCode code) {
    static const char* reference[] = {"Adopt", "Override", "Match", "Wait"};
    int kind = code / 256;
    if (kind <= static_cast<int>(ActionKind::Continue))
        return to_string(Action{static_cast<ActionKind>(kind), static_cast<BlockId>(code % 256)});
    if (kind == 3 && code % 256 < 4)
        return reference[code % 256];
    return "?";
}

SymbolicMdp explore(const AttackSpace& space, std::size_t state_cap) {
    SymbolicMdp mdp;
    const auto& cfg = space.config();
    mdp.description = space.rules().name() + " limit=" + std::to_string(cfg.max_blocks) +
                      " canonize=" + (cfg.canonize ? "1" : "0") +
                      " force_consider=" + (cfg.force_consider ? "1" : "0");

    std::unordered_map<std::string, std::uint32_t> index;
    std::deque<AttackState> queue;
    auto intern = [&](AttackState s) {
        auto key = s.key();
        auto [it, fresh] = index.try_emplace(key, static_cast<std::uint32_t>(mdp.states.size()));
        if (fresh) {
            if (mdp.states.size() >= state_cap)
                throw StateCapExceeded(state_cap);
            mdp.states.push_back(std::move(key));
            queue.push_back(std::move(s));
        }
        return it->second;
    };

    mdp.start = intern(space.initial());
    while (!queue.empty()) {
        AttackState s = std::move(queue.front());
        queue.pop_front();
        auto acts = space.actions(s);
        Action honest = space.honest(s);
        std::uint32_t honest_at = 0;
        for (std::size_t i = 0; i < acts.size(); ++i) {
            if (acts[i] == honest)
                honest_at = static_cast<std::uint32_t>(i);
            mdp.actions.push_back(encode(acts[i]));
            for (auto& o : space.apply(s, acts[i])) {
                auto next = intern(std::move(o.state));
                mdp.transitions.push_back({o.tag, next, o.reward, o.progress});
            }
            mdp.trans_begin.push_back(static_cast<std::uint32_t>(mdp.transitions.size()));
        }
        mdp.honest.push_back(honest_at);
        mdp.action_begin.push_back(static_cast<std::uint32_t>(mdp.actions.size()));
    }
    return mdp;
}

void write_mdp(std::ostream& os, const SymbolicMdp& mdp) {
    os << "# " << mdp.description << '\n';
    os << "# states " << mdp.n_states() << " actions " << mdp.n_actions() << " transitions "
       << mdp.transitions.size() << " start " << mdp.start << '\n';
    for (std::size_t s = 0; s < mdp.n_states(); ++s)
        for (auto a = mdp.action_begin[s]; a < mdp.action_begin[s + 1]; ++a)
            for (auto t = mdp.trans_begin[a]; t < mdp.trans_begin[a + 1]; ++t) {
                const auto& tr = mdp.transitions[t];
                os << s << ' ' << action_label(mdp.actions[a]) << ' ' << to_string(tr.tag) << ' ' << tr.next
                   << ' ' << tr.reward << ' ' << tr.progress << '\n';
            }
}

ExplicitMdp instantiate(const SymbolicMdp& mdp, double alpha, double gamma) {
    if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("alpha must lie in (0, 1)");
    if (!(gamma >= 0 && gamma <= 1))
        throw std::invalid_argument("gamma must lie in [0, 1]");
    ExplicitMdp out;
    out.action_begin = mdp.action_begin;
    out.trans_begin = mdp.trans_begin;
    out.honest = mdp.honest;
    out.start = mdp.start;
    out.alpha = alpha;
    out.gamma = gamma;
    auto n = mdp.transitions.size();
    out.next.reserve(n);
    out.prob.reserve(n);
    out.reward.reserve(n);
    out.progress.reserve(n);
    for (const auto& t : mdp.transitions) {
        out.next.push_back(t.next);
        out.prob.push_back(probability(t.tag, alpha, gamma));
        out.reward.push_back(t.reward);
        out.progress.push_back(t.progress);
    }
    return out;
}

}  // namespace gsm
