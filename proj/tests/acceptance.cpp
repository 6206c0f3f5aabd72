// Acceptance suite: one PASS/FAIL line per criterion. Exit status 1 if any fails.
// Pass criterion numbers as arguments to run a subset.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "gsm/experiments.hpp"
#include "properties.hpp"

using namespace gsm;
using namespace gsm::experiments;

namespace {

struct Result {
    bool pass;
    std::string detail;
};

constexpr std::size_t kBigCap = 2000000;
const std::vector<double> kGammas{0.33, 0.66};

// Optimal reward per progress at limit 6, memoized per column.
class Grid {
public:
    double value(const std::string& protocol, Optimizations o, double alpha, double gamma) {
        auto key = std::make_tuple(protocol, o.canonize, o.force_consider);
        auto it = mdps_.find(key);
        if (it == mdps_.end())
            it = mdps_.emplace(key, Target{protocol, o}.build(6, kBigCap)).first;
        auto vk = std::make_tuple(protocol, o.canonize, o.force_consider, alpha, gamma);
        auto v = values_.find(vk);
        if (v == values_.end())
            v = values_.emplace(vk, solve(it->second, alpha, gamma).reward_per_progress).first;
        return v->second;
    }

private:
    std::map<std::tuple<std::string, bool, bool>, SymbolicMdp> mdps_;
    std::map<std::tuple<std::string, bool, bool, double, double>, double> values_;
};

Grid grid;

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5f", x);
    return buf;
}

void note(std::string& detail, int& n, const std::string& what) {
    if (n++ < 4)
        detail += (detail.empty() ? "" : "; ") + what;
}

Result state_counts() {
    struct Want {
        std::size_t n6;
        int s_max;
    };
    const std::map<std::pair<std::string, std::string>, Want> want{
        {{"bitcoin", "v1"}, {21327, 6}},         {{"bitcoin", "v1+n"}, {5724, 7}},
        {{"bitcoin", "v1+fc"}, {549, 10}},       {{"bitcoin", "v1+fc+n"}, {300, 11}},
        {{"ethereum:h=3", "v1"}, {32961, 6}},    {{"ethereum:h=3", "v1+n"}, {10293, 7}},
        {{"ethereum:h=3", "v1+fc"}, {1179, 9}},  {{"ethereum:h=3", "v1+fc+n"}, {596, 10}},
        {{"byzantium:h=3", "v1"}, {33016, 6}},   {{"byzantium:h=3", "v1+n"}, {9879, 7}},
        {{"byzantium:h=3", "v1+fc"}, {1109, 9}}, {{"byzantium:h=3", "v1+fc+n"}, {572, 10}},
        {{"ghostdag:k=3", "v1"}, {46966, 6}},    {{"ghostdag:k=3", "v1+fc"}, {1527, 8}},
        {{"parallel:k=3", "v1"}, {9122, 7}},     {{"parallel:k=3", "v1+n"}, {1654, 8}},
        {{"parallel:k=3", "v1+fc"}, {2050, 8}},  {{"parallel:k=3", "v1+fc+n"}, {462, 12}},
    };
    std::string detail;
    int bad = 0;
    for (const auto& row : table1()) {
        if (row.protocol.starts_with("ref-"))
            continue;
        auto it = want.find({row.protocol, label(row.opts)});
        if (it == want.end())
            continue;
        if (row.n6 != it->second.n6 || row.s_max != it->second.s_max)
            note(detail, bad,
                 row.protocol + " " + label(row.opts) + " n6 " + std::to_string(row.n6) + "/" +
                     std::to_string(it->second.n6) + " s_max " + std::to_string(row.s_max) + "/" +
                     std::to_string(it->second.s_max));
    }
    if (bad)
        detail = std::to_string(bad) + " of " + std::to_string(want.size()) + " rows differ: " + detail;
    return {bad == 0, detail};
}

Result reference_counts() {
    std::string detail;
    int bad = 0;
    for (auto [name, n6, s_max] : {std::tuple{"ref-fc16", std::size_t{47}, 239},
                                   std::tuple{"ref-aft20", std::size_t{37}, 283}}) {
        Target t{name, {}};
        auto got6 = t.build(6).n_states();
        auto sweep = sweep_limit(t);
        if (got6 != n6 || sweep.s_max != s_max)
            note(detail, bad, std::string(name) + " n6 " + std::to_string(got6) + " s_max " +
                                  std::to_string(sweep.s_max));
    }
    return {bad == 0, detail};
}

Result honest_calibration() {
    auto rules = make_bitcoin();
    auto sym = explore(AttackSpace(*rules, {6, false, false}));
    double worst = 0;
    for (double alpha : {0.1, 0.33, 0.45})
        for (double gamma : kGammas) {
            auto m = instantiate(sym, alpha, gamma);
            worst = std::max(worst, std::abs(steady_state_eval(m, honest_policy(m)).reward_per_progress - alpha));
        }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1e", worst);
    return {worst <= 1e-10, std::string("max deviation ") + buf};
}

Result bitcoin_band() {
    std::string detail;
    int bad = 0;
    double worst = 0;
    for (double gamma : kGammas) {
        double prev = 0;
        for (int limit = 6; limit <= 11; ++limit) {
            double v = solve(Target{"bitcoin", {true, true}}.build(limit), 0.33, gamma).reward_per_progress;
            double ref = solve(ref::fc16_build(limit), 0.33, gamma).reward_per_progress;
            std::string at = "gamma " + fmt(gamma) + " limit " + std::to_string(limit) + ": ";
            worst = std::max(worst, std::abs(v - ref));
            if (v < 0.33)
                note(detail, bad, at + fmt(v) + " below alpha");
            if (limit > 6 && v < prev - 1e-9)
                note(detail, bad, at + fmt(v) + " decreases from " + fmt(prev));
            if (std::abs(v - ref) > 0.02)
                note(detail, bad, at + fmt(v) + " vs reference " + fmt(ref));
            prev = v;
        }
    }
    return {bad == 0, bad ? detail : "max distance to reference " + fmt(worst)};
}

Result canonization_neutral() {
    double worst = 0;
    std::string where;
    for (const char* p : {"bitcoin", "ethereum:h=3", "byzantium:h=3", "parallel:k=3"})
        for (double gamma : kGammas)
            for (double alpha : alpha_grid()) {
                double d = std::abs(grid.value(p, {false, false}, alpha, gamma) -
                                    grid.value(p, {true, false}, alpha, gamma));
                if (d > worst) {
                    worst = d;
                    where = std::string(p) + " alpha " + fmt(alpha) + " gamma " + fmt(gamma);
                }
            }
    return {worst <= 1e-3, "max difference " + fmt(worst) + (worst > 1e-9 ? " at " + where : "")};
}

Result force_consider() {
    std::string detail;
    int bad = 0;
    for (const char* p : {"ethereum:h=3", "byzantium:h=3", "ghostdag:k=3"}) {
        bool strict = false;
        for (double gamma : kGammas)
            for (double alpha : alpha_grid()) {
                double no = grid.value(p, {false, false}, alpha, gamma);
                double fc = grid.value(p, {false, true}, alpha, gamma);
                if (fc > no + 1e-9)
                    note(detail, bad,
                         std::string(p) + " alpha " + fmt(alpha) + " gamma " + fmt(gamma) + " fc " + fmt(fc) +
                             " > " + fmt(no));
                if (fc < no - 1e-6)
                    strict = true;
            }
        if (!strict)
            note(detail, bad, std::string(p) + " never strictly lower");
    }
    for (const char* p : {"bitcoin", "parallel:k=3"})
        for (double gamma : kGammas)
            for (double alpha : alpha_grid()) {
                double no = grid.value(p, {false, false}, alpha, gamma);
                double fc = grid.value(p, {false, true}, alpha, gamma);
                if (std::abs(fc - no) > 1e-3)
                    note(detail, bad, std::string(p) + " alpha " + fmt(alpha) + " differs by " + fmt(fc - no));
            }
    return {bad == 0, detail};
}

Result ranking() {
    std::string detail;
    int bad = 0;
    auto surplus = [](const std::string& p, double alpha, double gamma) {
        return grid.value(p, {false, false}, alpha, gamma) - alpha;
    };
    for (double gamma : kGammas)
        for (double alpha : alpha_grid()) {
            double par = surplus("parallel:k=3", alpha, gamma);
            for (const auto& p : protocols())
                if (p != "parallel:k=3" && surplus(p, alpha, gamma) < par - 1e-9)
                    note(detail, bad,
                         "alpha " + fmt(alpha) + " gamma " + fmt(gamma) + " " + p + " " +
                             fmt(surplus(p, alpha, gamma)) + " < parallel " + fmt(par));
        }
    bool ghost = false;
    for (double alpha : alpha_grid())
        if (alpha < 0.25 && surplus("ghostdag:k=3", alpha, 0.66) > 1e-9)
            ghost = true;
    if (!ghost)
        note(detail, bad, "ghostdag has no surplus below alpha 0.25");
    for (double gamma : kGammas) {
        double eth = surplus("ethereum:h=3", 0.5, gamma);
        for (const auto& p : protocols())
            if (surplus(p, 0.5, gamma) > eth + 1e-9)
                note(detail, bad, p + " beats ethereum at alpha 0.5");
    }
    if (bad)
        detail = std::to_string(bad) + " violations: " + detail;
    return {bad == 0, detail};
}

Result properties() {
    using namespace gsm::test;
    for (auto check : {std::function<std::string()>{[] { return check_probability_conservation(1000); }},
                       std::function<std::string()>{[] { return check_mask_invariants(5); }},
                       std::function<std::string()>{[] { return check_canonical_oracle(6); }},
                       std::function<std::string()>{check_relabeling_invariance},
                       std::function<std::string()>{[] { return check_no_false_merges(5); }},
                       std::function<std::string()>{check_relabeling_counts}}) {
        auto err = check();
        if (!err.empty())
            return {false, err.substr(0, err.find('\n'))};
    }
    return {true, "relabelings 69 and 35"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
        {"state counts", state_counts},
        {"reference model counts", reference_counts},
        {"honest calibration", honest_calibration},
        {"bitcoin validation band", bitcoin_band},
        {"canonization neutrality", canonization_neutral},
        {"force-consider sensitivity", force_consider},
        {"protocol ranking", ranking},
        {"property suites", properties},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::atoi(argv[i]));
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int n = static_cast<int>(i) + 1;
        if (!only.empty() && !only.count(n))
            continue;
        Result r;
        try {
            r = criteria[i].second();
        } catch (const std::exception& e) {
            r = {false, std::string("error: ") + e.what()};
        }
        failed += !r.pass;
        std::printf("%s %d %s%s%s\n", r.pass ? "PASS" : "FAIL", n, criteria[i].first.c_str(),
                    r.detail.empty() ? "" : ": ", r.detail.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
