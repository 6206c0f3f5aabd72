#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <memory>

#include "gsm/canonical.hpp"
#include "gsm/experiments.hpp"

namespace ex = gsm::experiments;

namespace {

struct RunConfig {
    std::string protocol;
    int limit = 6;
    bool canonize = false;
    bool force_consider = false;
    std::vector<double> alphas;
    std::vector<double> gammas;
    double horizon = 100;
    double eps = 1e-4;
    std::size_t state_cap = gsm::kDefaultStateCap;
    std::string out;
    bool sweep = false;
    std::string dump;
    std::string target;
};

ex::Target target_of(const RunConfig& c) {
    ex::Target t{c.protocol, {c.canonize, c.force_consider}};
    if (t.is_reference()) {
        if (c.canonize || c.force_consider)
            throw std::invalid_argument("reference models take no optimizations");
        return t;
    }
    auto rules = gsm::make_protocol(c.protocol);
    if (c.canonize && !rules->canonization_safe())
        throw gsm::CanonizationError("canonization is an invalid optimization for " + rules->name());
    return t;
}

template <class F>
void with_output(const std::string& path, F&& write) {
    if (path.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream f(path);
    if (!f)
        throw std::runtime_error("cannot open " + path);
    write(f);
}

std::string opts_label(const ex::Target& t) { return t.is_reference() ? "" : ex::label(t.opts); }

void cmd_explore(const RunConfig& c) {
    auto t = target_of(c);
    with_output(c.out, [&](std::ostream& os) {
        os << "protocol,optimizations,dag_size_limit,states\n";
        if (c.sweep) {
            auto sweep = ex::sweep_limit(t, c.state_cap, 1000, [&](int limit, std::size_t n) {
                os << c.protocol << ',' << opts_label(t) << ',' << limit << ',' << n << '\n';
                os.flush();
            });
            std::cerr << "s_max " << sweep.s_max << '\n';
            return;
        }
        auto mdp = t.build(c.limit, c.state_cap);
        os << c.protocol << ',' << opts_label(t) << ',' << c.limit << ',' << mdp.n_states() << '\n';
        if (!c.dump.empty()) {
            std::ofstream f(c.dump);
            gsm::write_mdp(f, mdp);
        }
    });
}

void cmd_solve(const RunConfig& c) {
    auto t = target_of(c);
    auto mdp = t.build(c.limit, c.state_cap);
    gsm::SolveOptions so{c.horizon, c.eps};
    with_output(c.out, [&](std::ostream& os) {
        os << "protocol,optimizations,dag_size_limit,states,alpha,gamma,reward_per_progress,surplus,pto_value,"
              "sweeps\n";
        for (double g : c.gammas)
            for (double a : c.alphas) {
                auto rep = gsm::solve(mdp, a, g, so);
                os << c.protocol << ',' << opts_label(t) << ',' << c.limit << ',' << mdp.n_states() << ',' << a
                   << ',' << g << ',' << rep.reward_per_progress << ',' << rep.reward_per_progress - a << ','
                   << rep.pto_value << ',' << rep.sweeps << '\n';
            }
    });
}

void cmd_reproduce(const RunConfig& c) {
    gsm::SolveOptions so{c.horizon, c.eps};
    const auto& f = c.target;
    with_output(c.out, [&](std::ostream& os) {
        if (f == "table1")
            ex::write_table1(os, ex::table1(c.state_cap));
        else if (f == "fig3")
            ex::write_fig3(os, c.state_cap);
        else if (f == "fig4")
            ex::write_fig4(os, {0.33, 0.66}, 2, 11, so);
        else if (f == "fig6")
            ex::write_fig6(os, so);
        else if (f == "fig7")
            ex::write_fig7(os, so);
        else
            throw std::invalid_argument("unknown target: " + f);
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Selfish mining MDPs for proof-of-work protocols"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("protocol", cfg.protocol,
                        "bitcoin, ethereum:h=3, byzantium:h=3, ghostdag:k=3, parallel:k=3, ref-fc16, ref-aft20")
            ->required();
        sub->add_option("--limit", cfg.limit, "BlockDAG size limit")->check(CLI::Range(2, 63));
        sub->add_flag("--canonize", cfg.canonize, "merge states equal up to relabeling");
        sub->add_flag("--force-consider", cfg.force_consider, "attacker considers own blocks when mined");
        sub->add_option("--state-cap", cfg.state_cap, "abort exploration beyond this many states");
        sub->add_option("--out", cfg.out, "CSV output path (default stdout)");
    };

    auto* explore = app.add_subcommand("explore", "count reachable states");
    common(explore);
    explore->add_flag("--sweep-limit", cfg.sweep, "grow the limit from 2 until the state cap is exceeded");
    explore->add_option("--dump-mdp", cfg.dump, "write the symbolic MDP as text");

    auto* solve = app.add_subcommand("solve", "optimize and evaluate the attack");
    common(solve);
    solve->add_option("--alpha", cfg.alphas, "attacker hash rate")->required()->check(CLI::Range(0.0, 1.0));
    solve->add_option("--gamma", cfg.gammas, "attacker communication advantage")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    solve->add_option("--horizon", cfg.horizon, "expected progress per episode");
    solve->add_option("--eps", cfg.eps, "value iteration stopping threshold");

    auto* reproduce = app.add_subcommand("reproduce", "emit experiment CSVs");
    reproduce->add_option("target", cfg.target, "table1, fig3, fig4, fig6 or fig7")
        ->required()
        ->check(CLI::IsMember({"table1", "fig3", "fig4", "fig6", "fig7"}));
    reproduce->add_option("--state-cap", cfg.state_cap, "abort exploration beyond this many states");
    reproduce->add_option("--horizon", cfg.horizon, "expected progress per episode");
    reproduce->add_option("--eps", cfg.eps, "value iteration stopping threshold");
    reproduce->add_option("--out", cfg.out, "CSV output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*explore)
            cmd_explore(cfg);
        else if (*solve)
            cmd_solve(cfg);
        else
            cmd_reproduce(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
