#include "gsm/attack.hpp"

#include "gsm/canonical.hpp"

namespace gsm {
namespace {

void keep_only(AttackState& s, BlockSet keep) {
    Dag next;
    auto map = s.dag.restrict(keep, next);
    s.dag = std::move(next);
    s.remap_masks(map);
}

bool parents_outside(const Dag& dag, BlockId b, BlockSet mask) {
    for (BlockId p : dag.parents(b))
        if (contains(mask, p))
            return false;
    return true;
}

}  // namespace

std::string to_string(Action a) {
    switch (a.kind) {
    case ActionKind::Release: return "Release(" + std::to_string(a.block) + ")";
    case ActionKind::Consider: return "Consider(" + std::to_string(a.block) + ")";
    case ActionKind::Continue: return "Continue";
    }
    return "?";
}

const char* to_string(ProbTag t) {
    switch (t) {
    case ProbTag::Det: return "det";
    case ProbTag::AttMineAttFirst: return "am_af";
    case ProbTag::AttMineDefFirst: return "am_df";
    case ProbTag::DefMineAttFirst: return "dm_af";
    case ProbTag::DefMineDefFirst: return "dm_df";
    }
    return "?";
}

double probability(ProbTag tag, double alpha, double gamma) {
    switch (tag) {
    case ProbTag::Det: return 1.0;
    case ProbTag::AttMineAttFirst: return alpha * gamma;
    case ProbTag::AttMineDefFirst: return alpha * (1 - gamma);
    case ProbTag::DefMineAttFirst: return (1 - alpha) * gamma;
    case ProbTag::DefMineDefFirst: return (1 - alpha) * (1 - gamma);
    }
    return 0.0;
}

AttackSpace::AttackSpace(const Protocol& rules, EnvConfig config) : rules_(&rules), config_(config) {
    if (config.max_blocks < 2 || config.max_blocks >= kMaxBlocks)
        throw std::invalid_argument("block limit out of range");
    if (config.canonize && !rules.canonization_safe())
        throw CanonizationError("canonization is not supported for " + rules.name());
}

AttackState AttackSpace::initial() const {
    AttackState s;
    s.att = rules_->init(s.attacker_view());
    s.def = rules_->init(s.defender_view());
    if (config_.canonize)
        return canonical_form(s, *rules_);
    return s;
}

std::vector<Action> AttackSpace::unrestricted_actions(const AttackState& s) const {
    std::vector<Action> out;
    for (BlockId b : members(s.withheld))
        if (parents_outside(s.dag, b, s.withheld))
            out.push_back({ActionKind::Release, b});
    for (BlockId b : members(s.ignored))
        if (parents_outside(s.dag, b, s.ignored))
            out.push_back({ActionKind::Consider, b});
    out.push_back({ActionKind::Continue, 0});
    return out;
}

std::vector<Action> AttackSpace::actions(const AttackState& s) const {
    if (s.dag.size() >= config_.max_blocks)
        return {honest(s)};
    return unrestricted_actions(s);
}

Action AttackSpace::honest(const AttackState& s) const {
    return unrestricted_actions(s).front();
}

std::vector<Outcome> AttackSpace::apply(const AttackState& s, Action a) const {
    switch (a.kind) {
    case ActionKind::Release: return {release(s, a.block)};
    case ActionKind::Consider: return {consider(s, a.block)};
    case ActionKind::Continue: return proceed(s);
    }
    return {};
}

AttackState AttackSpace::do_consider(AttackState s, BlockId b) const {
    s.ignored &= ~bit(b);
    s.att = rules_->update(s.att, s.attacker_view(), b);
    return s;
}

Outcome AttackSpace::consider(const AttackState& s, BlockId b) const {
    if (b >= s.dag.size() || !contains(s.ignored, b) || !parents_outside(s.dag, b, s.ignored))
        throw PreconditionError("Consider(" + std::to_string(b) + ") is not available");
    auto c = cleanup(do_consider(s, b));
    return {ProbTag::Det, std::move(c.state), c.reward, c.progress};
}

Outcome AttackSpace::release(const AttackState& s, BlockId b) const {
    if (b >= s.dag.size() || !contains(s.withheld, b) || !parents_outside(s.dag, b, s.withheld))
        throw PreconditionError("Release(" + std::to_string(b) + ") is not available");
    AttackState next = s;
    next.withheld &= ~bit(b);
    auto c = cleanup(std::move(next));
    return {ProbTag::Det, std::move(c.state), c.reward, c.progress};
}

std::vector<Outcome> AttackSpace::proceed(const AttackState& s) const {
    static constexpr struct {
        ProbTag tag;
        Miner miner;
        Miner first;
    } cases[] = {
        {ProbTag::AttMineAttFirst, Miner::Attacker, Miner::Attacker},
        {ProbTag::AttMineDefFirst, Miner::Attacker, Miner::Defender},
        {ProbTag::DefMineAttFirst, Miner::Defender, Miner::Attacker},
        {ProbTag::DefMineDefFirst, Miner::Defender, Miner::Defender},
    };
    std::vector<Outcome> out;
    out.reserve(4);
    for (const auto& c : cases) {
        auto cleaned = cleanup(mine(communicate(s, c.first), c.miner));
        out.push_back({c.tag, std::move(cleaned.state), cleaned.reward, cleaned.progress});
    }
    return out;
}

AttackState AttackSpace::communicate(AttackState s, Miner first) const {
    BlockSet pending = s.dag.all() & ~s.withheld & ~s.visible;
    while (pending) {
        BlockId pick = kDropped;
        for (BlockId b : members(pending)) {
            if (!parents_outside(s.dag, b, ~s.visible))
                continue;
            if (pick == kDropped)
                pick = b;
            if (s.dag.miner(b) == first) {
                pick = b;
                break;
            }
        }
        if (pick == kDropped)
            throw std::logic_error("pending blocks without deliverable candidate");
        s.visible |= bit(pick);
        pending &= ~bit(pick);
        s.def = rules_->update(s.def, s.defender_view(), pick);
    }
    return s;
}

AttackState AttackSpace::mine(AttackState s, Miner who) const {
    if (who == Miner::Attacker) {
        auto parents = rules_->mining(s.att, s.attacker_view());
        BlockId b = s.dag.append(std::move(parents), Miner::Attacker);
        s.ignored |= bit(b);
        s.withheld |= bit(b);
        if (config_.force_consider)
            s = do_consider(std::move(s), b);
        return s;
    }
    auto parents = rules_->mining(s.def, s.defender_view());
    BlockId b = s.dag.append(std::move(parents), Miner::Defender);
    s.ignored |= bit(b);
    return s;
}

AttackSpace::Cleaned AttackSpace::cleanup(AttackState s) const {
    auto out = truncate(remove_stale(s));
    if (config_.canonize)
        out.state = canonical_form(out.state, *rules_);
    return out;
}

AttackState AttackSpace::remove_stale(const AttackState& s) const {
    const Dag& dag = s.dag;
    BlockSet marked = (dag.all() & ~s.visible) | s.ignored;
    marked |= rules_->relevant(s.att, s.attacker_view());
    marked |= rules_->relevant(s.def, s.defender_view());
    for (BlockId b : members(marked))
        marked |= dag.past(b);
    if (marked == dag.all())
        return s;
    AttackState out = s;
    keep_only(out, marked);
    return out;
}

AttackSpace::Cleaned AttackSpace::truncate(const AttackState& s) const {
    const Dag& dag = s.dag;
    auto ha = rules_->history(s.att, s.attacker_view());
    auto hd = rules_->history(s.def, s.defender_view());
    std::vector<BlockId> common;
    for (std::size_t i = 0; i < ha.size() && i < hd.size() && ha[i] == hd[i]; ++i)
        common.push_back(ha[i]);

    std::vector<BlockSet> children(dag.size(), 0);
    for (int c = 1; c < dag.size(); ++c)
        for (BlockId p : dag.parents(static_cast<BlockId>(c)))
            children[p] |= bit(static_cast<BlockId>(c));

    for (std::size_t i = common.size(); i-- > 1;) {
        BlockId b = common[i];
        BlockSet past = dag.past(b);
        bool closed = true;
        for (BlockId x : members(past))
            closed = closed && !(children[x] & ~(past | bit(b)));
        if (!closed)
            continue;

        Cleaned out{s, 0.0, 0.0};
        View full = s.full();
        BlockSet measured = (past | bit(b)) & [&] {
            BlockSet c = 0;
            for (BlockId x : common)
                c |= bit(x);
            return c;
        }();
        for (BlockId x : members(measured)) {
            if (dag.miner(x) == Miner::Genesis)
                continue;
            for (const auto& r : rules_->coinbase(s.def, full, x))
                if (r.recipient == Miner::Attacker)
                    out.reward += r.amount;
            out.progress += rules_->progress(s.def, full, x);
        }
        keep_only(out.state, dag.all() & ~past);
        out.state.dag.set_miner(0, Miner::Genesis);
        return out;
    }
    return {s, 0.0, 0.0};
}

}  // namespace gsm
