#include <stdexcept>

#include "gsm/protocol.hpp"

namespace gsm {

BlockSet Protocol::relevant(const LocalState& state, const View& view) const {
    BlockSet out = 0;
    for (BlockId b : mining(state, view))
        out |= bit(b);
    return out;
}

LocalState remap(const LocalState& s, const std::vector<BlockId>& map) {
    LocalState out;
    out.refs.reserve(s.refs.size());
    for (BlockId b : s.refs) {
        if (b >= map.size() || map[b] == kDropped)
            throw DagError("local state references a removed block");
        out.refs.push_back(map[b]);
    }
    return out;
}

std::unique_ptr<Protocol> make_protocol(const std::string& spec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    int param = 3;
    if (colon != std::string::npos) {
        std::string rest = spec.substr(colon + 1);
        auto eq = rest.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad protocol parameter: " + spec);
        std::string key = rest.substr(0, eq);
        std::size_t used = 0;
        param = std::stoi(rest.substr(eq + 1), &used);
        if (used != rest.size() - eq - 1)
            throw std::invalid_argument("bad protocol parameter: " + spec);
        bool horizon = name == "ethereum" || name == "byzantium";
        if ((horizon && key != "h") || (!horizon && key != "k") || name == "bitcoin")
            throw std::invalid_argument("unexpected parameter for " + name + ": " + key);
    }
    if (name == "bitcoin")
        return make_bitcoin();
    if (name == "ethereum")
        return make_ethereum(param);
    if (name == "byzantium")
        return make_byzantium(param);
    if (name == "ghostdag")
        return make_ghostdag(param);
    if (name == "parallel")
        return make_parallel(param);
    throw std::invalid_argument("unknown protocol: " + spec);
}

}  // namespace gsm
