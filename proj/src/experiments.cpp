#include "gsm/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace gsm::experiments {
namespace {
constexpr std::size_t kSweepCap = 2000000;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string gamma_tag(double g) { return "gamma" + std::to_string(static_cast<int>(g * 100 + 0.5)); }

}  // namespace

std::string label(Optimizations o) {
    std::string s = "v1";
    if (o.force_consider)
        s += "+fc";
    if (o.canonize)
        s += "+n";
    return s;
}

std::string column_name(const std::string& protocol) {
    auto eq = protocol.find('=');
    if (eq == std::string::npos)
        return protocol;
    return protocol.substr(0, protocol.find(':')) + "_" + protocol.substr(eq + 1);
}

bool Target::is_reference() const { return protocol == "ref-fc16" || protocol == "ref-aft20"; }

SymbolicMdp Target::build(int limit, std::size_t cap) const {
    if (protocol == "ref-fc16")
        return ref::fc16_build(limit, cap);
    if (protocol == "ref-aft20")
        return ref::aft20_build(limit, cap);
    auto rules = make_protocol(protocol);
    AttackSpace space(*rules, {limit, opts.force_consider, opts.canonize});
    return explore(space, cap);
}

Sweep sweep_limit(const Target& t, std::size_t cap, int max_limit,
                  const std::function<void(int, std::size_t)>& progress) {
    Sweep out;
    for (int limit = 2; limit <= max_limit; ++limit) {
        std::size_t n;
        try {
            n = t.build(limit, cap).n_states();
        } catch (const StateCapExceeded&) {
            break;
        }
        out.counts.emplace_back(limit, n);
        out.s_max = limit;
        if (progress)
            progress(limit, n);
    }
    return out;
}

std::vector<Table1Row> table1(std::size_t cap) {
    std::vector<Table1Row> rows;
    auto add = [&](const Target& t) {
        auto sweep = sweep_limit(t, cap);
        std::size_t n6 = 0;
        for (auto [limit, n] : sweep.counts)
            if (limit == 6)
                n6 = n;
        if (n6 == 0)
            n6 = t.build(6, kSweepCap).n_states();
        rows.push_back({t.protocol, t.opts, sweep.s_max, n6});
    };
    for (const auto& p : protocols()) {
        bool safe = make_protocol(p)->canonization_safe();
        for (Optimizations o : {Optimizations{false, false}, Optimizations{true, false}, Optimizations{false, true},
                                Optimizations{true, true}}) {
            if (o.canonize && !safe)
                continue;
            add({p, o});
        }
    }
    add({"ref-fc16", {}});
    add({"ref-aft20", {}});
    return rows;
}

void write_table1(std::ostream& os, const std::vector<Table1Row>& rows) {
    os << "protocol,optimizations,s_max,n6\n";
    for (const auto& r : rows)
        os << r.protocol << ',' << (r.protocol.starts_with("ref-") ? "" : label(r.opts)) << ',' << r.s_max << ','
           << r.n6 << '\n';
}

void write_fig3(std::ostream& os, std::size_t cap) {
    std::vector<Target> cols{{"bitcoin", {false, false}}, {"bitcoin", {true, false}}, {"bitcoin", {false, true}},
                             {"bitcoin", {true, true}},   {"ref-fc16", {}},          {"ref-aft20", {}}};
    os << "dag_size_limit,v1,v1+n,v1+fc,v1+fc+n,ref-fc16,ref-aft20\n";
    std::vector<bool> exceeded(cols.size(), false);
    for (int limit = 2; limit <= 11; ++limit) {
        os << limit;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            os << ',';
            if (exceeded[i])
                continue;
            try {
                os << cols[i].build(limit, cap).n_states();
            } catch (const StateCapExceeded&) {
                exceeded[i] = true;
            }
        }
        os << '\n';
    }
}

void write_fig4(std::ostream& os, const std::vector<double>& gammas, int from, int to, const SolveOptions& so) {
    const double alpha = 0.33;
    std::vector<Target> cols{{"bitcoin", {true, true}}, {"ref-fc16", {}}, {"ref-aft20", {}}};
    os << "gamma,dag_size_limit,v1+fc+n,ref-fc16,ref-aft20\n";
    for (double gamma : gammas)
        for (int limit = from; limit <= to; ++limit) {
            os << num(gamma) << ',' << limit;
            for (const auto& c : cols)
                os << ',' << num(solve(c.build(limit), alpha, gamma, so).reward_per_progress);
            os << '\n';
        }
}

std::vector<double> alpha_grid() {
    std::vector<double> out;
    for (int i = 1; i <= 10; ++i)
        out.push_back(0.05 * i);
    return out;
}

void write_alpha_sweep(std::ostream& os, const std::vector<Target>& targets, const std::vector<double>& gammas,
                       int limit, const SolveOptions& so) {
    auto alphas = alpha_grid();
    std::vector<std::vector<std::string>> cells(alphas.size());
    os << "alpha";
    for (const auto& t : targets) {
        auto mdp = t.build(limit, kSweepCap);
        for (double g : gammas) {
            os << ',' << label(t.opts) << ':' << column_name(t.protocol) << ':' << gamma_tag(g) << ":dsl"
               << limit;
            for (std::size_t i = 0; i < alphas.size(); ++i)
                cells[i].push_back(num(solve(mdp, alphas[i], g, so).reward_per_progress));
        }
    }
    os << '\n';
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        os << num(alphas[i]);
        for (const auto& c : cells[i])
            os << ',' << c;
        os << '\n';
    }
}

void write_fig6(std::ostream& os, const SolveOptions& so) {
    std::vector<Target> targets;
    for (const auto& p : protocols())
        targets.push_back({p, {}});
    write_alpha_sweep(os, targets, {0.33, 0.66}, 6, so);
}

void write_fig7(std::ostream& os, const SolveOptions& so) {
    std::vector<Target> targets;
    for (const char* p : {"ethereum:h=3", "byzantium:h=3", "ghostdag:k=3"}) {
        targets.push_back({p, {false, false}});
        targets.push_back({p, {false, true}});
    }
    write_alpha_sweep(os, targets, {0.33, 0.66}, 6, so);
}

}  // namespace gsm::experiments
