#include "gsm/dag.hpp"

#include <algorithm>
#include <sstream>

namespace gsm {

const char* to_string(Miner m) {
    switch (m) {
    case Miner::Genesis: return "g";
    case Miner::Defender: return "d";
    case Miner::Attacker: return "a";
    }
    return "?";
}

std::vector<BlockId> members(BlockSet s) {
    std::vector<BlockId> out;
    out.reserve(count(s));
    while (s) {
        out.push_back(static_cast<BlockId>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

Dag::Dag() : parents_{{}}, miners_{Miner::Genesis}, past_{0}, height_{0} {}

BlockId Dag::append(std::vector<BlockId> parents, Miner miner) {
    if (parents.empty())
        throw DagError("append: empty parent list would create a second root");
    if (miner == Miner::Genesis)
        throw DagError("append: only the root carries the genesis tag");
    if (size() >= kMaxBlocks)
        throw DagError("append: block capacity exhausted");
    BlockSet seen = 0;
    for (BlockId p : parents) {
        if (p >= size())
            throw DagError("append: unknown parent " + std::to_string(p));
        if (contains(seen, p))
            throw DagError("append: duplicate parent " + std::to_string(p));
        seen |= bit(p);
    }
    auto id = static_cast<BlockId>(size());
    BlockSet past = 0;
    int h = 0;
    for (BlockId p : parents) {
        past |= bit(p) | past_[p];
        h = std::max(h, height_[p] + 1);
    }
    parents_.push_back(std::move(parents));
    miners_.push_back(miner);
    past_.push_back(past);
    height_.push_back(static_cast<std::uint8_t>(h));
    return id;
}

BlockSet Dag::all() const {
    return size() == kMaxBlocks ? ~BlockSet{0} : (BlockSet{1} << size()) - 1;
}

void Dag::check(BlockId b) const {
    if (b >= size())
        throw DagError("unknown block " + std::to_string(b));
}

const std::vector<BlockId>& Dag::parents(BlockId b) const {
    check(b);
    return parents_[b];
}

Miner Dag::miner(BlockId b) const {
    check(b);
    return miners_[b];
}

BlockSet Dag::children(BlockId b) const {
    check(b);
    BlockSet out = 0;
    for (int c = b + 1; c < size(); ++c)
        for (BlockId p : parents_[c])
            if (p == b)
                out |= bit(static_cast<BlockId>(c));
    return out;
}

int Dag::height(BlockId b) const {
    check(b);
    return height_[b];
}

BlockSet Dag::past(BlockId b) const {
    check(b);
    return past_[b];
}

BlockSet Dag::future(BlockId b) const {
    check(b);
    BlockSet out = 0;
    for (int c = b + 1; c < size(); ++c)
        if (contains(past_[c], b))
            out |= bit(static_cast<BlockId>(c));
    return out;
}

void Dag::rebuild() {
    for (int b = 0; b < size(); ++b) {
        BlockSet past = 0;
        int h = 0;
        for (BlockId p : parents_[b]) {
            if (p >= b)
                throw DagError("parent id not below child id");
            past |= bit(p) | past_[p];
            h = std::max(h, height_[p] + 1);
        }
        past_[b] = past;
        height_[b] = static_cast<std::uint8_t>(h);
    }
}

Dag Dag::relabel(const std::vector<BlockId>& perm) const {
    if (static_cast<int>(perm.size()) != size())
        throw DagError("relabel: permutation size mismatch");
    if (perm[0] != 0)
        throw DagError("relabel: genesis must stay at id 0");
    BlockSet image = 0;
    for (BlockId x : perm) {
        if (x >= size() || contains(image, x))
            throw DagError("relabel: not a bijection");
        image |= bit(x);
    }
    Dag out;
    out.parents_.assign(size(), {});
    out.miners_.assign(size(), Miner::Genesis);
    out.past_.assign(size(), 0);
    out.height_.assign(size(), 0);
    for (int b = 0; b < size(); ++b) {
        auto& ps = out.parents_[perm[b]];
        for (BlockId p : parents_[b]) {
            if (perm[p] >= perm[b])
                throw DagError("relabel: permutation breaks topological order");
            ps.push_back(perm[p]);
        }
        out.miners_[perm[b]] = miners_[b];
    }
    out.rebuild();
    return out;
}

std::vector<BlockId> Dag::restrict(BlockSet keep, Dag& out) const {
    keep &= all();
    std::vector<BlockId> map(size(), kDropped);
    BlockId next = 0;
    for (BlockId b : members(keep))
        map[b] = next++;
    out.parents_.clear();
    out.miners_.clear();
    for (BlockId b : members(keep)) {
        std::vector<BlockId> ps;
        for (BlockId p : parents_[b])
            if (map[p] != kDropped)
                ps.push_back(map[p]);
        out.parents_.push_back(std::move(ps));
        out.miners_.push_back(miners_[b]);
    }
    out.past_.assign(out.parents_.size(), 0);
    out.height_.assign(out.parents_.size(), 0);
    out.rebuild();
    return map;
}

std::string Dag::edge_list() const {
    std::ostringstream os;
    for (int b = 0; b < size(); ++b) {
        os << b << " <- ";
        for (std::size_t i = 0; i < parents_[b].size(); ++i)
            os << (i ? "," : "") << int(parents_[b][i]);
        os << '\n';
    }
    return os.str();
}

BlockSet View::tips() const {
    BlockSet out = 0;
    for (BlockId b : members(blocks_))
        if (!children(b))
            out |= bit(b);
    return out;
}

}  // namespace gsm
