#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bondage/graph.hpp"

namespace bondage {

enum class Objective { Gamma, Tau, Alpha };

std::string to_string(Objective k);
/// Accepts "gamma", "tau", "alpha". Throws InputError otherwise.
Objective parse_objective(const std::string& s);

struct SolveResult {
    Objective kind = Objective::Gamma;
    int value = 0;
    std::vector<VertexId> witness;  // ascending
    std::uint64_t nodes_explored = 0;
};

struct OptimalFamily {
    Objective kind = Objective::Gamma;
    int value = 0;
    std::vector<std::vector<VertexId>> sets;  // lexicographic, each ascending
    bool truncated = false;
};

struct CoreReport {
    Objective kind = Objective::Gamma;
    std::vector<VertexId> core;
    std::vector<VertexId> anticore;
};

struct BondageResult {
    int d_max = 0;
    int gamma = 0;                   // gamma(G)
    std::optional<int> value;        // b(G) when b(G) <= d_max
    std::vector<EdgeRef> witness;    // edges whose removal raises gamma
    std::uint64_t subsets_tested = 0;
};

inline constexpr std::size_t kDefaultEnumerationCap = 100000;

/// Constrained domination: choose a minimum set X within `allowed`,
/// containing `forced`, such that every vertex of `must_dominate` lies in
/// N[X]. Empty optional when infeasible.
struct DominationQuery {
    VertexSet must_dominate;
    VertexSet allowed;
    VertexSet forced;

    static DominationQuery plain(const Graph& g);
};

std::optional<SolveResult> solve_domination(const Graph& g, const DominationQuery& q);
/// Stops at the first feasible set of size <= bound.
std::optional<std::vector<VertexId>> find_domination_at_most(const Graph& g, const DominationQuery& q,
                                                             int bound);

SolveResult min_dominating_set(const Graph& g);
SolveResult max_independent_set(const Graph& g);
SolveResult min_vertex_cover(const Graph& g);
SolveResult solve(const Graph& g, Objective kind);

int gamma_number(const Graph& g);
int alpha_number(const Graph& g);
int tau_number(const Graph& g);

bool is_dominating(const Graph& g, const std::vector<VertexId>& s);
bool is_vertex_cover(const Graph& g, const std::vector<VertexId>& s);
bool is_independent(const Graph& g, const std::vector<VertexId>& s);

OptimalFamily enumerate_optimal(const Graph& g, Objective kind,
                                std::size_t cap = kDefaultEnumerationCap);

/// Core = vertices in every optimal set; anticore = vertices in none.
/// Decided per vertex with exact solves, so no enumeration cap applies.
CoreReport cores(const Graph& g, Objective kind);
/// Same report derived from an enumerated family. Union-based anticore is
/// withheld (left empty) when the family is truncated.
CoreReport cores_from_family(const Graph& g, const OptimalFamily& family);

bool tau_anticore_leaf_test(const Graph& g, VertexId v);
bool alpha_core_delete_test(const Graph& g, VertexId v);
bool has_min_ds_containing(const Graph& g, const std::vector<VertexId>& a);
bool is_gamma_critical_edge(const Graph& g, const EdgeRef& e);

struct SearchOptions {
    int threads = 1;
};

/// Edge subsets of size 1..d_max in colexicographic order; first success
/// of the smallest size wins. Throws PreconditionError on edgeless graphs.
BondageResult bondage_number(const Graph& g, int d_max, const SearchOptions& opts = {});

/// Edges certified non-critical by the two domination remarks applied to
/// the listed gamma-sets. Throws InputError if a listed set is not a
/// gamma-set of g.
std::vector<EdgeRef> non_critical_filters(const Graph& g, const OptimalFamily& family);

/// Colexicographic successor of a k-combination of {0..m-1}; false at end.
bool next_colex_combination(std::vector<int>& c, int m);

}  // namespace bondage
