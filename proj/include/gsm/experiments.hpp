#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gsm/mdp.hpp"
#include "gsm/reference.hpp"
#include "gsm/solver.hpp"

namespace gsm::experiments {

struct Optimizations {
    bool canonize = false;
    bool force_consider = false;
};

/// `v1`, `v1+n`, `v1+fc` or `v1+fc+n`.
std::string label(Optimizations o);

/// Protocol spec as used in column names: `ethereum:h=3` becomes `ethereum_3`.
std::string column_name(const std::string& protocol);

/// A generic-model protocol or one of the pseudo-protocols `ref-fc16`, `ref-aft20`.
struct Target {
    std::string protocol;
    Optimizations opts;

    bool is_reference() const;
    SymbolicMdp build(int limit, std::size_t cap = kDefaultStateCap) const;
};

struct Sweep {
    std::vector<std::pair<int, std::size_t>> counts;  // limit, states
    int s_max = 0;  // largest limit within the cap; 0 if even limit 2 exceeds it
};

/// Grows the limit from 2 until exploration exceeds the cap.
Sweep sweep_limit(const Target& t, std::size_t cap = kDefaultStateCap, int max_limit = 1000,
                  const std::function<void(int, std::size_t)>& progress = {});

struct Table1Row {
    std::string protocol;
    Optimizations opts;
    int s_max;
    std::size_t n6;
};

/// Every protocol under every optimization setting, skipping canonization
/// for protocols that do not support it, plus the two reference models.
std::vector<Table1Row> table1(std::size_t cap = kDefaultStateCap);
void write_table1(std::ostream& os, const std::vector<Table1Row>& rows);

/// Bitcoin state counts for limits 2..11, empty cells above the cap.
void write_fig3(std::ostream& os, std::size_t cap = kDefaultStateCap);

/// Reward per progress over the limit at alpha = 0.33.
void write_fig4(std::ostream& os, const std::vector<double>& gammas, int from = 2, int to = 11,
                const SolveOptions& so = {});

std::vector<double> alpha_grid();
inline const std::vector<std::string>& protocols() {
    static const std::vector<std::string> all{"bitcoin", "ethereum:h=3", "byzantium:h=3", "ghostdag:k=3",
                                              "parallel:k=3"};
    return all;
}

/// Reward per progress over alpha at limit 6 for the given columns.
void write_alpha_sweep(std::ostream& os, const std::vector<Target>& targets, const std::vector<double>& gammas,
                       int limit = 6, const SolveOptions& so = {});

void write_fig6(std::ostream& os, const SolveOptions& so = {});
void write_fig7(std::ostream& os, const SolveOptions& so = {});

}  // namespace gsm::experiments
