#include "gsm/protocol.hpp"
#include "common.hpp"

namespace gsm {
namespace {

class Bitcoin final : public Protocol {
public:
    std::string name() const override { return "bitcoin"; }

    LocalState init(const View&) const override { return {{0}}; }

    LocalState update(const LocalState& s, const View& v, BlockId b) const override {
        if (v.height(b) > v.height(s.refs[0]))
            return {{b}};
        return s;
    }

    std::vector<BlockId> mining(const LocalState& s, const View&) const override { return {s.refs[0]}; }

    std::vector<BlockId> history(const LocalState& s, const View& v) const override {
        return detail::first_parent_chain(v.dag(), s.refs[0]);
    }

    std::vector<RewardEntry> coinbase(const LocalState&, const View& v, BlockId b) const override {
        return {{v.miner(b), 1.0}};
    }

    double progress(const LocalState&, const View&, BlockId) const override { return 1.0; }

    int color_hint(const LocalState& s, const Dag&, BlockId b) const override { return b == s.refs[0] ? 1 : 0; }
};

}  // namespace

std::unique_ptr<Protocol> make_bitcoin() { return std::make_unique<Bitcoin>(); }

}  // namespace gsm
