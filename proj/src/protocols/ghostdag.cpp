#include <stdexcept>

#include "gsm/protocol.hpp"
#include "common.hpp"

namespace gsm {
namespace {

struct Coloring {
    BlockSet blue = 0;
    std::vector<BlockId> order;
};

class GhostDag final : public Protocol {
public:
    explicit GhostDag(int k) : k_(k) {
        if (k < 0)
            throw std::invalid_argument("ghostdag k must be nonnegative");
    }

    std::string name() const override { return "ghostdag:k=" + std::to_string(k_); }

    LocalState init(const View&) const override { return {}; }
    LocalState update(const LocalState& s, const View&, BlockId) const override { return s; }

    std::vector<BlockId> mining(const LocalState&, const View& v) const override { return members(v.tips()); }

    std::vector<BlockId> history(const LocalState&, const View& v) const override { return color(v).order; }

    std::vector<RewardEntry> coinbase(const LocalState&, const View& v, BlockId b) const override {
        if (contains(color(v).blue, b))
            return {{v.miner(b), 1.0}};
        return {};
    }

    double progress(const LocalState&, const View& v, BlockId b) const override {
        return contains(color(v).blue, b) ? 1.0 : 0.0;
    }

    bool canonization_safe() const override { return false; }

private:
    static BlockSet anticone(const Dag& dag, BlockId b, BlockSet within) {
        return within & ~dag.past(b) & ~dag.future(b) & ~bit(b);
    }

    // Blue set and ordering for a (possibly virtual) block with the given
    // parents, using precomputed results for real blocks.
    Coloring merge(const Dag& dag, const std::vector<Coloring>& known, const std::vector<int>& score,
                   const std::vector<BlockId>& parents, BlockSet past) const {
        BlockId sp = parents.front();
        for (BlockId p : parents)
            if (score[p] > score[sp] || (score[p] == score[sp] && p < sp))
                sp = p;
        Coloring out = known[sp];
        out.blue |= bit(sp);
        out.order.push_back(sp);
        BlockSet mergeset = past & ~dag.past(sp) & ~bit(sp);
        std::vector<BlockId> reds;
        for (BlockId c : members(mergeset)) {
            BlockSet ac = anticone(dag, c, out.blue);
            bool ok = count(ac) <= k_;
            for (BlockId b : members(ac)) {
                if (!ok)
                    break;
                if (count(anticone(dag, b, out.blue)) + 1 > k_)
                    ok = false;
            }
            if (ok) {
                out.blue |= bit(c);
                out.order.push_back(c);
            } else {
                reds.push_back(c);
            }
        }
        out.order.insert(out.order.end(), reds.begin(), reds.end());
        return out;
    }

    Coloring color(const View& v) const {
        const Dag& dag = v.dag();
        std::vector<Coloring> known(dag.size());
        std::vector<int> score(dag.size(), 0);
        for (BlockId b : members(v.blocks())) {
            if (dag.parents(b).empty())
                continue;
            known[b] = merge(dag, known, score, dag.parents(b), dag.past(b));
            score[b] = count(known[b].blue);
        }
        auto tips = members(v.tips());
        return merge(dag, known, score, tips, v.blocks());
    }

    int k_;
};

}  // namespace

std::unique_ptr<Protocol> make_ghostdag(int k) { return std::make_unique<GhostDag>(k); }

}  // namespace gsm
