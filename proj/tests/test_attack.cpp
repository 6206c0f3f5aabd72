#include "doctest.h"
#include "samples.hpp"
#include "gsm/reference.hpp"

using namespace gsm;
using namespace gsm::test;

namespace {

std::vector<std::string> labels(const std::vector<Action>& as) {
    std::vector<std::string> out;
    for (Action a : as)
        out.push_back(to_string(a));
    return out;
}

}  // namespace

TEST_CASE("eight-block sample actions") {
    auto rules = make_bitcoin();
    AttackSpace space(*rules, {10, false, false});
    auto s = eight_blocks(*rules);
    check_masks(s);
    CHECK(labels(space.actions(s)) == std::vector<std::string>{"Release(6)", "Consider(3)", "Continue"});
    AttackSpace tight(*rules, {9, false, false});
    CHECK(labels(tight.actions(s)) == std::vector<std::string>{"Release(6)"});
}

TEST_CASE("bitcoin fork actions and reference summary") {
    auto rules = make_bitcoin();
    AttackSpace space(*rules, {10, false, false});
    auto s = bitcoin_fork(*rules);
    check_masks(s);
    CHECK(labels(space.actions(s)) == std::vector<std::string>{"Release(6)", "Consider(1)", "Continue"});
    CHECK(ref::summarize_bitcoin(s) == ref::RefState{4, 3, ref::Fork::Relevant});
}

TEST_CASE("unavailable actions throw") {
    auto rules = make_bitcoin();
    AttackSpace space(*rules, {10, false, false});
    auto s = eight_blocks(*rules);
    CHECK_THROWS_AS(space.release(s, 7), PreconditionError);
    CHECK_THROWS_AS(space.release(s, 2), PreconditionError);
    CHECK_THROWS_AS(space.consider(s, 5), PreconditionError);
    CHECK_THROWS_AS(space.consider(s, 40), PreconditionError);
}

TEST_CASE("environment configuration is validated") {
    auto btc = make_bitcoin();
    auto gd = make_ghostdag(3);
    CHECK_THROWS_AS(AttackSpace(*btc, {1, false, false}), std::invalid_argument);
    CHECK_THROWS_AS(AttackSpace(*btc, {64, false, false}), std::invalid_argument);
    CHECK_THROWS_AS(AttackSpace(*gd, {6, false, true}), CanonizationError);
    CHECK_NOTHROW(AttackSpace(*gd, {6, true, false}));
}

TEST_CASE("continue yields four outcomes") {
    auto rules = make_bitcoin();
    AttackSpace space(*rules, {6, false, false});
    auto out = space.proceed(space.initial());
    REQUIRE(out.size() == 4);
    CHECK(out[0].tag == ProbTag::AttMineAttFirst);
    CHECK(out[3].tag == ProbTag::DefMineDefFirst);
    const AttackState& att = out[0].state;
    CHECK(att.dag.size() == 2);
    CHECK(att.withheld == bit(1));
    CHECK(att.ignored == bit(1));
    CHECK(att.visible == bit(0));
    const AttackState& def = out[3].state;
    CHECK(def.ignored == bit(1));
    CHECK(def.withheld == 0);
    CHECK(def.visible == bit(0));
    for (const auto& o : out) {
        CHECK(o.reward == 0);
        CHECK(o.progress == 0);
    }
}

TEST_CASE("force consider skips the ignore step") {
    auto rules = make_bitcoin();
    AttackSpace space(*rules, {6, true, false});
    auto out = space.proceed(space.initial());
    CHECK(out[0].state.ignored == 0);
    CHECK(out[0].state.att.refs == std::vector<BlockId>{1});
    CHECK(out[3].state.ignored == bit(1));
}

TEST_CASE("communication prefers the chosen miner") {
    auto rules = make_bitcoin();
    AttackSpace space(*rules, {10, false, false});
    AttackState s = make_state(*rules, {{{0}, A}, {{0}, D}}, set_of({2}), 0, set_of({0}));
    auto att_first = space.communicate(s, Miner::Attacker);
    auto def_first = space.communicate(s, Miner::Defender);
    CHECK(att_first.visible == set_of({0, 1, 2}));
    CHECK(att_first.def.refs == std::vector<BlockId>{1});
    CHECK(def_first.def.refs == std::vector<BlockId>{2});
}

TEST_CASE("honest play on bitcoin keeps the dag small") {
    auto rules = make_bitcoin();
    AttackSpace space(*rules, {6, false, false});
    std::mt19937 rng(3);
    AttackState s = space.initial();
    double reward = 0, progress = 0;
    for (int step = 0; step < 500; ++step) {
        auto out = space.apply(s, space.honest(s));
        auto& o = out[rng() % out.size()];
        reward += o.reward;
        progress += o.progress;
        s = o.state;
        check_masks(s);
        CHECK(s.dag.size() <= 3);
        CHECK(count(s.withheld) <= 1);
    }
    CHECK(progress > 50);
    CHECK(reward <= progress);
}

TEST_CASE("stale defender fork is removed") {
    auto rules = make_bitcoin();
    AttackSpace space(*rules, {10, false, false});
    // attacker's released chain 1-2 overtook defender block 3
    AttackState s = make_state(*rules, {{{0}, A}, {{1}, A}, {{0}, D}}, 0, 0, set_of({0, 1, 2, 3}));
    auto out = space.remove_stale(s);
    CHECK(out.dag.size() == 3);
    check_masks(out);
}
