#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gsm/dag.hpp"

namespace gsm {

/// Protocol-local miner state. Every entry is a block reference, so renaming
/// blocks is a pointwise map.
struct LocalState {
    std::vector<BlockId> refs;

    bool operator==(const LocalState&) const = default;
    auto operator<=>(const LocalState&) const = default;
};

struct RewardEntry {
    Miner recipient;
    double amount;
};

class Protocol {
public:
    virtual ~Protocol() = default;

    virtual std::string name() const = 0;

    virtual LocalState init(const View& view) const = 0;
    virtual LocalState update(const LocalState& state, const View& view, BlockId b) const = 0;
    virtual std::vector<BlockId> mining(const LocalState& state, const View& view) const = 0;
    virtual std::vector<BlockId> history(const LocalState& state, const View& view) const = 0;
    virtual std::vector<RewardEntry> coinbase(const LocalState& state, const View& view, BlockId b) const = 0;
    virtual double progress(const LocalState& state, const View& view, BlockId b) const = 0;

    virtual int color_hint(const LocalState&, const Dag&, BlockId) const { return 0; }

    /// Blocks the miner still builds on. Stale-block removal keeps these and
    /// their past. Defaults to the mining() parents.
    virtual BlockSet relevant(const LocalState& state, const View& view) const;

    virtual bool canonization_safe() const { return true; }

    /// The first parent carries meaning (main chain); the rest form a set.
    virtual bool positional_first_parent() const { return false; }
};

LocalState remap(const LocalState& s, const std::vector<BlockId>& map);

std::unique_ptr<Protocol> make_bitcoin();
std::unique_ptr<Protocol> make_ethereum(int horizon);
std::unique_ptr<Protocol> make_byzantium(int horizon);
std::unique_ptr<Protocol> make_ghostdag(int k);
std::unique_ptr<Protocol> make_parallel(int k);

/// Accepts `bitcoin`, `ethereum:h=3`, `byzantium:h=3`, `ghostdag:k=3`, `parallel:k=3`.
/// Parameters default to 3 when omitted.
std::unique_ptr<Protocol> make_protocol(const std::string& spec);

}  // namespace gsm
