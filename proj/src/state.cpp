#include "gsm/state.hpp"

#include <sstream>
#include <stdexcept>

namespace gsm {
namespace {

BlockSet map_set(BlockSet s, const std::vector<BlockId>& map) {
    BlockSet out = 0;
    for (BlockId b : members(s))
        if (b < map.size() && map[b] != kDropped)
            out |= bit(map[b]);
    return out;
}

void put_set(std::ostringstream& os, const char* label, BlockSet s) {
    os << label << ':';
    for (BlockId b : members(s))
        os << ' ' << int(b);
    os << '\n';
}

void put_refs(std::ostringstream& os, const char* label, const LocalState& s) {
    os << label << ':';
    for (BlockId b : s.refs)
        os << ' ' << int(b);
    os << '\n';
}

}  // namespace

void AttackState::remap_masks(const std::vector<BlockId>& map) {
    ignored = map_set(ignored, map);
    withheld = map_set(withheld, map);
    visible = map_set(visible, map);
    att = remap(att, map);
    def = remap(def, map);
}

std::string AttackState::key() const {
    std::string k;
    k.reserve(4 + 3 * dag.size() + 24 + att.refs.size() + def.refs.size());
    k.push_back(static_cast<char>(dag.size()));
    for (int b = 0; b < dag.size(); ++b) {
        const auto& ps = dag.parents(static_cast<BlockId>(b));
        k.push_back(static_cast<char>(dag.miner(static_cast<BlockId>(b))));
        k.push_back(static_cast<char>(ps.size()));
        for (BlockId p : ps)
            k.push_back(static_cast<char>(p));
    }
    for (BlockSet m : {ignored, withheld, visible})
        for (int i = 0; i < 8; ++i)
            k.push_back(static_cast<char>((m >> (8 * i)) & 0xff));
    k.push_back(static_cast<char>(att.refs.size()));
    for (BlockId b : att.refs)
        k.push_back(static_cast<char>(b));
    k.push_back(static_cast<char>(def.refs.size()));
    for (BlockId b : def.refs)
        k.push_back(static_cast<char>(b));
    return k;
}

std::string AttackState::dump() const {
    std::ostringstream os;
    os << dag.edge_list();
    os << "miners:";
    for (int b = 0; b < dag.size(); ++b)
        os << ' ' << to_string(dag.miner(static_cast<BlockId>(b)));
    os << '\n';
    put_set(os, "ignored", ignored);
    put_set(os, "withheld", withheld);
    put_set(os, "visible", visible);
    put_refs(os, "attacker", att);
    put_refs(os, "defender", def);
    return os.str();
}

void check_masks(const AttackState& s) {
    const Dag& dag = s.dag;
    auto fail = [](const std::string& what) { throw std::logic_error("mask invariant: " + what); };
    if ((s.ignored | s.withheld | s.visible) & ~dag.all())
        fail("mask refers to unknown block");
    if (!contains(s.visible, 0) || contains(s.ignored, 0) || contains(s.withheld, 0))
        fail("genesis must be visible, known and released");
    if (s.withheld & s.visible)
        fail("withheld block is visible");
    for (BlockId b : s.att.refs)
        if (b >= dag.size() || contains(s.ignored, b))
            fail("attacker state refers to an ignored block");
    for (BlockId b : s.def.refs)
        if (b >= dag.size() || !contains(s.visible, b))
            fail("defender state refers to an invisible block");
    for (BlockId b : members(dag.all())) {
        if (contains(s.withheld, b) && dag.miner(b) != Miner::Attacker)
            fail("withheld block not mined by attacker");
        for (BlockId p : dag.parents(b)) {
            if (contains(s.visible, b) && !contains(s.visible, p))
                fail("visible block with invisible parent");
            if (!contains(s.ignored, b) && contains(s.ignored, p))
                fail("known block with ignored parent");
            if (!contains(s.withheld, b) && contains(s.withheld, p))
                fail("released block with withheld parent");
        }
    }
}

}  // namespace gsm
