#include "gsm/solver.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace gsm {

ExplicitMdp pto_transform(const ExplicitMdp& mdp, double horizon) {
    if (!(horizon >= 1))
        throw std::invalid_argument("horizon must be at least 1");
    const auto n = static_cast<std::uint32_t>(mdp.n_states());
    const double keep = 1.0 - 1.0 / horizon;
    ExplicitMdp out;
    out.action_begin = mdp.action_begin;
    out.honest = mdp.honest;
    out.start = mdp.start;
    out.alpha = mdp.alpha;
    out.gamma = mdp.gamma;
    out.trans_begin.reserve(mdp.trans_begin.size() + 1);
    out.trans_begin.push_back(0);
    for (std::size_t a = 0; a + 1 < mdp.trans_begin.size(); ++a) {
        for (auto t = mdp.trans_begin[a]; t < mdp.trans_begin[a + 1]; ++t) {
            double cont = std::pow(keep, mdp.progress[t]);
            out.next.push_back(mdp.next[t]);
            out.prob.push_back(mdp.prob[t] * cont);
            out.reward.push_back(mdp.reward[t]);
            out.progress.push_back(mdp.progress[t]);
            if (cont < 1.0) {
                out.next.push_back(n);
                out.prob.push_back(mdp.prob[t] * (1.0 - cont));
                out.reward.push_back(mdp.reward[t]);
                out.progress.push_back(mdp.progress[t]);
            }
        }
        out.trans_begin.push_back(static_cast<std::uint32_t>(out.next.size()));
    }
    // terminal: single self-loop without effects
    out.next.push_back(n);
    out.prob.push_back(1.0);
    out.reward.push_back(0.0);
    out.progress.push_back(0.0);
    out.trans_begin.push_back(static_cast<std::uint32_t>(out.next.size()));
    out.action_begin.push_back(out.action_begin.back() + 1);
    out.honest.push_back(0);
    return out;
}

ValueIteration value_iteration(const ExplicitMdp& mdp, double eps, int max_sweeps) {
    if (!(eps > 0))
        throw std::invalid_argument("eps must be positive");
    const std::size_t n = mdp.n_states();
    ValueIteration out;
    out.values.assign(n, 0.0);
    out.policy.assign(n, 0);
    std::vector<double> next(n, 0.0);
    for (out.sweeps = 1; out.sweeps <= max_sweeps; ++out.sweeps) {
        double residual = 0;
        for (std::size_t s = 0; s < n; ++s) {
            double best = -std::numeric_limits<double>::infinity();
            std::uint32_t arg = 0;
            for (auto a = mdp.action_begin[s]; a < mdp.action_begin[s + 1]; ++a) {
                double q = 0;
                for (auto t = mdp.trans_begin[a]; t < mdp.trans_begin[a + 1]; ++t)
                    q += mdp.prob[t] * (mdp.reward[t] + out.values[mdp.next[t]]);
                if (q > best) {
                    best = q;
                    arg = a - mdp.action_begin[s];
                }
            }
            next[s] = best;
            out.policy[s] = arg;
            residual = std::max(residual, std::abs(best - out.values[s]));
        }
        out.values.swap(next);
        out.residual = residual;
        if (residual < eps)
            return out;
    }
    throw SolverError("value iteration did not converge");
}

namespace {

// Reachable states of the policy-induced chain and their successor lists.
struct Chain {
    std::vector<std::uint32_t> states;
    std::vector<int> local;  // global -> local index or -1
    std::vector<std::vector<std::pair<int, double>>> succ;
    std::vector<double> reward;
    std::vector<double> progress;
};

Chain induce(const ExplicitMdp& mdp, const Policy& policy) {
    const std::size_t n = mdp.n_states();
    if (policy.size() != n)
        throw std::invalid_argument("policy size does not match the MDP");
    Chain c;
    c.local.assign(n, -1);
    std::deque<std::uint32_t> queue{mdp.start};
    c.local[mdp.start] = 0;
    c.states.push_back(mdp.start);
    while (!queue.empty()) {
        auto s = queue.front();
        queue.pop_front();
        auto a = mdp.action_begin[s] + policy[s];
        if (a >= mdp.action_begin[s + 1])
            throw std::invalid_argument("policy picks an unavailable action");
        std::vector<std::pair<int, double>> row;
        double r = 0, g = 0;
        for (auto t = mdp.trans_begin[a]; t < mdp.trans_begin[a + 1]; ++t) {
            auto to = mdp.next[t];
            if (c.local[to] < 0) {
                c.local[to] = static_cast<int>(c.states.size());
                c.states.push_back(to);
                queue.push_back(to);
            }
            r += mdp.prob[t] * mdp.reward[t];
            g += mdp.prob[t] * mdp.progress[t];
            if (mdp.prob[t] > 0)
                row.emplace_back(c.local[to], mdp.prob[t]);
        }
        c.succ.push_back(std::move(row));
        c.reward.push_back(r);
        c.progress.push_back(g);
    }
    return c;
}

// Iterative Tarjan; returns component id per node.
std::vector<int> components(const Chain& c, int& count) {
    const int n = static_cast<int>(c.succ.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
    std::vector<bool> on(n, false);
    std::vector<std::pair<int, std::size_t>> call;
    int next = 0;
    count = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] >= 0)
            continue;
        call.emplace_back(root, 0);
        index[root] = low[root] = next++;
        stack.push_back(root);
        on[root] = true;
        while (!call.empty()) {
            auto& [v, i] = call.back();
            if (i < c.succ[v].size()) {
                int w = c.succ[v][i++].first;
                if (index[w] < 0) {
                    index[w] = low[w] = next++;
                    stack.push_back(w);
                    on[w] = true;
                    call.emplace_back(w, 0);
                } else if (on[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                int w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on[w] = false;
                    comp[w] = count;
                } while (w != v);
                ++count;
            }
            int done = v;
            call.pop_back();
            if (!call.empty())
                low[call.back().first] = std::min(low[call.back().first], low[done]);
        }
    }
    return comp;
}

std::vector<double> stationary_direct(const Chain& c, const std::vector<int>& members) {
    const int m = static_cast<int>(members.size());
    std::vector<int> pos(c.succ.size(), -1);
    for (int i = 0; i < m; ++i)
        pos[members[i]] = i;
    std::vector<Eigen::Triplet<double>> entries;
    for (int i = 0; i < m; ++i) {
        int v = members[i];
        if (i != m - 1)
            entries.emplace_back(i, i, -1.0);
        for (auto [w, p] : c.succ[v])
            if (pos[w] != m - 1)
                entries.emplace_back(pos[w], i, p);
    }
    for (int i = 0; i < m; ++i)
        entries.emplace_back(m - 1, i, 1.0);
    Eigen::SparseMatrix<double> A(m, m);
    A.setFromTriplets(entries.begin(), entries.end());
    Eigen::VectorXd b = Eigen::VectorXd::Zero(m);
    b(m - 1) = 1.0;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success)
        throw SolverError("stationary system is singular");
    Eigen::VectorXd pi = lu.solve(b);
    std::vector<double> out(c.succ.size(), 0.0);
    for (int i = 0; i < m; ++i)
        out[members[i]] = pi(i);
    return out;
}

// Cesaro-averaged power iteration from the start state.
std::vector<double> stationary_power(const Chain& c) {
    const std::size_t n = c.succ.size();
    std::vector<double> x(n, 0.0), y(n), avg(n, 0.0), prev(n, 0.0);
    x[0] = 1.0;
    for (int it = 1; it <= 1000000; ++it) {
        std::fill(y.begin(), y.end(), 0.0);
        for (std::size_t v = 0; v < n; ++v)
            for (auto [w, p] : c.succ[v])
                y[w] += x[v] * p;
        x.swap(y);
        double diff = 0;
        for (std::size_t v = 0; v < n; ++v) {
            avg[v] += (x[v] - avg[v]) / it;
            diff = std::max(diff, std::abs(avg[v] - prev[v]));
        }
        if (it > 10 && diff < 1e-12)
            return avg;
        prev = avg;
    }
    throw SolverError("power iteration did not converge");
}

}  // namespace

SolveReport steady_state_eval(const ExplicitMdp& mdp, const Policy& policy) {
    Chain c = induce(mdp, policy);
    int n_comp = 0;
    auto comp = components(c, n_comp);
    std::vector<bool> closed(n_comp, true);
    for (std::size_t v = 0; v < c.succ.size(); ++v)
        for (auto [w, p] : c.succ[v])
            if (comp[w] != comp[v])
                closed[comp[v]] = false;
    int n_closed = static_cast<int>(std::count(closed.begin(), closed.end(), true));

    std::vector<double> pi;
    if (n_closed == 1) {
        int target = static_cast<int>(std::find(closed.begin(), closed.end(), true) - closed.begin());
        std::vector<int> members;
        for (std::size_t v = 0; v < c.succ.size(); ++v)
            if (comp[v] == target)
                members.push_back(static_cast<int>(v));
        pi = stationary_direct(c, members);
    } else {
        pi = stationary_power(c);
    }

    SolveReport rep;
    double r = 0, g = 0;
    for (std::size_t v = 0; v < pi.size(); ++v) {
        r += pi[v] * c.reward[v];
        g += pi[v] * c.progress[v];
        if (pi[v] > 1e-15)
            ++rep.support;
    }
    if (!(g > 1e-15))
        throw SolverError("policy makes no progress in the long run");
    rep.reward_per_progress = r / g;
    return rep;
}

Policy honest_policy(const ExplicitMdp& mdp) { return mdp.honest; }

SolveReport solve(const ExplicitMdp& mdp, const SolveOptions& opts) {
    auto pto = pto_transform(mdp, opts.horizon);
    auto vi = value_iteration(pto, opts.eps);
    Policy policy(vi.policy.begin(), vi.policy.begin() + static_cast<std::ptrdiff_t>(mdp.n_states()));
    auto rep = steady_state_eval(mdp, policy);
    rep.pto_value = vi.values[mdp.start] / opts.horizon;
    rep.sweeps = vi.sweeps;
    rep.residual = vi.residual;
    return rep;
}

SolveReport solve(const SymbolicMdp& mdp, double alpha, double gamma, const SolveOptions& opts) {
    return solve(instantiate(mdp, alpha, gamma), opts);
}

}  // namespace gsm
