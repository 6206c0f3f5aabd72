#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "gsm/protocol.hpp"
#include "common.hpp"

namespace gsm {
namespace {

// Summaries confirm k votes for their predecessor summary; votes reference a
// single summary. Genesis counts as a summary.
class Parallel final : public Protocol {
public:
    explicit Parallel(int k) : k_(k) {
        if (k < 1)
            throw std::invalid_argument("parallel k must be positive");
    }

    std::string name() const override { return "parallel:k=" + std::to_string(k_); }

    LocalState init(const View&) const override { return {{0}}; }

    LocalState update(const LocalState& s, const View& v, BlockId b) const override {
        BlockId candidate = is_summary(v.dag(), b) ? b : v.parents(b).front();
        if (preference(v, candidate) > preference(v, s.refs[0])) {
            LocalState out{{candidate}};
            for (BlockId vote : members(v.children(candidate)))
                if (vote != b && static_cast<int>(out.refs.size()) <= k_)
                    out.refs.push_back(vote);
            if (candidate != b && static_cast<int>(out.refs.size()) <= k_)
                out.refs.push_back(b);
            std::sort(out.refs.begin() + 1, out.refs.end());
            return out;
        }
        if (candidate == s.refs[0] && b != candidate && static_cast<int>(s.refs.size()) <= k_) {
            LocalState out = s;
            out.refs.push_back(b);
            std::sort(out.refs.begin() + 1, out.refs.end());
            return out;
        }
        return s;
    }

    std::vector<BlockId> mining(const LocalState& s, const View& v) const override {
        if (static_cast<int>(s.refs.size()) > k_)
            return {s.refs.begin() + 1, s.refs.end()};
        return {s.refs[0]};
    }

    BlockSet relevant(const LocalState& s, const View& v) const override {
        return bit(s.refs[0]) | v.children(s.refs[0]);
    }

    std::vector<BlockId> history(const LocalState& s, const View& v) const override {
        std::vector<BlockId> out;
        for (BlockId c = s.refs[0];; c = v.parents(v.parents(c).front()).front()) {
            out.insert(out.begin(), c);
            if (v.parents(c).empty())
                break;
        }
        return out;
    }

    std::vector<RewardEntry> coinbase(const LocalState&, const View& v, BlockId b) const override {
        if (!is_summary(v.dag(), b))
            return {};
        std::vector<RewardEntry> out{{v.miner(b), 1.0}};
        for (BlockId vote : v.parents(b))
            out.push_back({v.miner(vote), 1.0});
        return out;
    }

    double progress(const LocalState&, const View& v, BlockId b) const override {
        if (!is_summary(v.dag(), b))
            return 0.0;
        return 1.0 + static_cast<double>(v.parents(b).size());
    }

    int color_hint(const LocalState& s, const Dag& dag, BlockId b) const override {
        return (b == s.refs[0] ? 1 : 0) + (is_summary(dag, b) ? 2 : 0);
    }

private:
    static bool is_summary(const Dag& dag, BlockId b) { return dag.height(b) % 2 == 0; }

    static int summary_height(const Dag& dag, BlockId s) { return dag.height(s) / 2; }

    static std::tuple<int, int> preference(const View& v, BlockId s) {
        return {summary_height(v.dag(), s), count(v.children(s))};
    }

    int k_;
};

}  // namespace

std::unique_ptr<Protocol> make_parallel(int k) { return std::make_unique<Parallel>(k); }

}  // namespace gsm
