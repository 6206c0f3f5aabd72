#include "gsm/canonical.hpp"

#include <algorithm>

namespace gsm {
namespace {

using Code = std::vector<int>;

class LabelSearch {
public:
    LabelSearch(const AttackState& s, const Protocol& rules)
        : s_(s), positional_(rules.positional_first_parent()), n_(s.dag.size()) {
        colors_.reserve(n_);
        for (int b = 0; b < n_; ++b)
            colors_.push_back(color_of(s, rules, static_cast<BlockId>(b)));
        perm_.assign(n_, kDropped);
        codes_.resize(n_);
    }

    std::vector<BlockId> run() {
        perm_[0] = 0;
        codes_[0] = code(0);
        dfs(1, bit(0), 0);
        return best_perm_;
    }

private:
    Code code(BlockId b) const {
        const auto& ps = s_.dag.parents(b);
        Code c(colors_[b].begin(), colors_[b].end());
        c.push_back(static_cast<int>(ps.size()));
        std::vector<int> labels;
        for (BlockId p : ps)
            labels.push_back(perm_[p]);
        auto rest = labels.begin();
        if (positional_ && !labels.empty())
            ++rest;
        std::sort(rest, labels.end());
        c.insert(c.end(), labels.begin(), labels.end());
        return c;
    }

    Code tail() const {
        Code t;
        for (const LocalState* ls : {&s_.att, &s_.def}) {
            t.push_back(static_cast<int>(ls->refs.size()));
            for (BlockId b : ls->refs)
                t.push_back(perm_[b]);
        }
        return t;
    }

    // cmp: 0 while the current prefix equals the best one, -1 once smaller.
    void dfs(int depth, BlockSet placed, int cmp) {
        if (cmp == 0 && have_ && codes_[depth - 1] > best_codes_[depth - 1])
            return;
        if (cmp == 0 && have_ && codes_[depth - 1] < best_codes_[depth - 1])
            cmp = -1;
        if (depth == n_) {
            Code t = tail();
            if (!have_ || cmp < 0 || t < best_tail_) {
                have_ = true;
                best_codes_ = codes_;
                best_tail_ = std::move(t);
                best_perm_ = perm_;
                ++version_;
            }
            return;
        }
        std::vector<BlockId> ready;
        for (int b = 1; b < n_; ++b) {
            auto id = static_cast<BlockId>(b);
            if (contains(placed, id))
                continue;
            bool ok = true;
            for (BlockId p : s_.dag.parents(id))
                ok = ok && contains(placed, p);
            if (ok)
                ready.push_back(id);
        }
        std::vector<Code> codes;
        for (BlockId b : ready) {
            perm_[b] = static_cast<BlockId>(depth);
            codes.push_back(code(b));
            perm_[b] = kDropped;
        }
        const Code& least = *std::min_element(codes.begin(), codes.end());
        for (std::size_t i = 0; i < ready.size(); ++i) {
            if (codes[i] != least)
                continue;
            perm_[ready[i]] = static_cast<BlockId>(depth);
            codes_[depth] = codes[i];
            auto before = version_;
            dfs(depth + 1, placed | bit(ready[i]), cmp);
            if (version_ != before)
                cmp = 0;
            perm_[ready[i]] = kDropped;
        }
    }

    const AttackState& s_;
    bool positional_;
    int n_;
    std::vector<BlockColor> colors_;
    std::vector<BlockId> perm_;
    std::vector<Code> codes_;

    bool have_ = false;
    long version_ = 0;
    std::vector<Code> best_codes_;
    Code best_tail_;
    std::vector<BlockId> best_perm_;
};

}  // namespace

BlockColor color_of(const AttackState& s, const Protocol& rules, BlockId b) {
    return {static_cast<int>(s.dag.miner(b)),
            contains(s.visible, b) ? 1 : 0,
            contains(s.ignored, b) ? 1 : 0,
            contains(s.withheld, b) ? 1 : 0,
            rules.color_hint(s.att, s.dag, b),
            rules.color_hint(s.def, s.dag, b)};
}

AttackState relabel(const AttackState& s, const std::vector<BlockId>& perm, bool positional_first_parent) {
    AttackState out = s;
    out.dag = s.dag.relabel(perm);
    for (int b = 0; b < out.dag.size(); ++b) {
        auto id = static_cast<BlockId>(b);
        auto ps = out.dag.parents(id);
        auto rest = ps.begin();
        if (positional_first_parent && !ps.empty())
            ++rest;
        std::sort(rest, ps.end());
        if (ps != out.dag.parents(id))
            out.dag.set_parents(id, std::move(ps));
    }
    out.remap_masks(perm);
    return out;
}

AttackState canonical_form(const AttackState& s, const Protocol& rules) {
    if (!rules.canonization_safe())
        throw CanonizationError("canonization is not supported for " + rules.name());
    LabelSearch search(s, rules);
    return relabel(s, search.run(), rules.positional_first_parent());
}

}  // namespace gsm
