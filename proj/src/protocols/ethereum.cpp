#include <algorithm>
#include <stdexcept>

#include "gsm/protocol.hpp"
#include "common.hpp"

namespace gsm {
namespace {

// Longest or heaviest main chain with uncle references. A block's first
// parent is its main-chain predecessor, further parents are uncles.
class UncleChain : public Protocol {
public:
    explicit UncleChain(int horizon) : horizon_(horizon) {
        if (horizon < 1)
            throw std::invalid_argument("uncle horizon must be positive");
    }

    LocalState init(const View&) const override { return {{0}}; }

    LocalState update(const LocalState& s, const View& v, BlockId b) const override {
        if (weight(v.dag(), b) > weight(v.dag(), s.refs[0]))
            return {{b}};
        return s;
    }

    std::vector<BlockId> mining(const LocalState& s, const View& v) const override {
        std::vector<BlockId> out{s.refs[0]};
        auto uncles = candidates(s.refs[0], v);
        if (max_uncles() >= 0 && static_cast<int>(uncles.size()) > max_uncles())
            uncles.resize(max_uncles());
        out.insert(out.end(), uncles.begin(), uncles.end());
        return out;
    }

    BlockSet relevant(const LocalState& s, const View& v) const override {
        return bit(s.refs[0]) | detail::as_set(candidates(s.refs[0], v));
    }

    std::vector<BlockId> history(const LocalState& s, const View& v) const override {
        return detail::first_parent_chain(v.dag(), s.refs[0]);
    }

    int color_hint(const LocalState& s, const Dag&, BlockId b) const override { return b == s.refs[0] ? 1 : 0; }

    bool positional_first_parent() const override { return true; }

protected:
    virtual double weight(const Dag& dag, BlockId b) const = 0;
    virtual int max_uncles() const = 0;

    int horizon_;

private:
    // Off-chain blocks hanging off the main chain within the horizon of the
    // next block, not yet referenced. Sorted by depth, then id.
    std::vector<BlockId> candidates(BlockId head, const View& v) const {
        const Dag& dag = v.dag();
        auto chain = detail::first_parent_chain(dag, head);
        BlockSet on_chain = detail::as_set(chain);
        BlockSet referenced = 0;
        for (BlockId c : chain) {
            const auto& ps = dag.parents(c);
            for (std::size_t i = 1; i < ps.size(); ++i)
                referenced |= bit(ps[i]);
        }
        int next_height = dag.height(head) + 1;
        std::vector<BlockId> out;
        for (BlockId u : members(v.blocks() & ~on_chain & ~referenced)) {
            const auto& ps = dag.parents(u);
            if (ps.empty() || !contains(on_chain, ps.front()))
                continue;
            int depth = next_height - dag.height(u);
            if (depth >= 1 && depth <= horizon_)
                out.push_back(u);
        }
        std::stable_sort(out.begin(), out.end(),
                         [&](BlockId a, BlockId b) { return dag.height(a) > dag.height(b); });
        return out;
    }
};

class Ethereum final : public UncleChain {
public:
    using UncleChain::UncleChain;

    std::string name() const override { return "ethereum:h=" + std::to_string(horizon_); }

    std::vector<RewardEntry> coinbase(const LocalState&, const View& v, BlockId b) const override {
        std::vector<RewardEntry> out{{v.miner(b), 1.0}};
        const auto& ps = v.parents(b);
        for (std::size_t i = 1; i < ps.size(); ++i)
            out.push_back({v.miner(ps[i]), 1.0});
        return out;
    }

    double progress(const LocalState&, const View&, BlockId) const override { return 1.0; }

protected:
    double weight(const Dag& dag, BlockId b) const override { return dag.height(b); }
    int max_uncles() const override { return -1; }
};

class Byzantium final : public UncleChain {
public:
    using UncleChain::UncleChain;

    std::string name() const override { return "byzantium:h=" + std::to_string(horizon_); }

    std::vector<RewardEntry> coinbase(const LocalState&, const View& v, BlockId b) const override {
        const auto& ps = v.parents(b);
        double n_uncles = ps.empty() ? 0.0 : static_cast<double>(ps.size() - 1);
        std::vector<RewardEntry> out{{v.miner(b), 1.0 + n_uncles / 32.0}};
        for (std::size_t i = 1; i < ps.size(); ++i) {
            int depth = v.height(b) - v.height(ps[i]);
            out.push_back({v.miner(ps[i]), double(horizon_ + 1 - depth) / double(horizon_ + 1)});
        }
        return out;
    }

    double progress(const LocalState&, const View& v, BlockId b) const override {
        return static_cast<double>(v.parents(b).size());
    }

protected:
    // Main-chain progress including uncles.
    double weight(const Dag& dag, BlockId b) const override {
        double w = 0;
        for (BlockId c = b; !dag.parents(c).empty(); c = dag.parents(c).front())
            w += static_cast<double>(dag.parents(c).size());
        return w;
    }
    int max_uncles() const override { return 2; }
};

}  // namespace

std::unique_ptr<Protocol> make_ethereum(int horizon) { return std::make_unique<Ethereum>(horizon); }
std::unique_ptr<Protocol> make_byzantium(int horizon) { return std::make_unique<Byzantium>(horizon); }

}  // namespace gsm
