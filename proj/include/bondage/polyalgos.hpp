#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bondage/graph.hpp"

namespace bondage {

struct CriticalTriple {
    std::vector<EdgeRef> edges;  // 1..3 edges, or more when padded
    int case_tag = 1;            // 1: adjacent pair, 2: pair at distance two
    VertexId u = -1;
    VertexId v = -1;
    VertexId w = -1;  // common neighbour in case 2
    std::optional<int> gamma_before;
    std::optional<int> gamma_after;
};

/// Edges whose deletion raises gamma, for a planar graph of girth >= 8.
/// Case (1) is scanned over edges in colex order, then case (2) over pairs
/// at distance two. With verify, gamma before and after is filled in.
CriticalTriple find_three_critical_edges_girth8(const Graph& g, bool pad_to_3 = false, bool verify = false);

struct DominatorCollection {
    std::vector<EdgeRef> deleted;
    std::vector<VertexId> w;                  // endpoints of the deleted edges
    std::vector<std::vector<VertexId>> family;  // by size, then lexicographic
};

/// All A within N[W] with |A| <= 2d dominating W in G - E'.
DominatorCollection dominator_collection(const Graph& g, const std::vector<EdgeRef>& deleted, int d);

enum class PolyMode { Closed, HFree, BoundedGamma };
std::string to_string(PolyMode m);
/// Accepts "closed", "hfree", "bounded". Throws InputError otherwise.
PolyMode parse_poly_mode(const std::string& s);

using GammaOracle = std::function<int(const Graph&)>;
/// Oracle answering whether deleting e from g raised gamma.
using CriticalOracle = std::function<bool(const Graph&, const EdgeRef&)>;
/// Oracle answering whether v is in the alpha-core of g.
using CoreOracle = std::function<bool(const Graph&, VertexId)>;

GammaOracle exact_gamma_oracle();
CriticalOracle exact_critical_oracle();
CoreOracle exact_core_oracle();

struct PolyBondageResult {
    bool yes = false;
    std::vector<EdgeRef> witness;
    std::uint64_t candidates = 0;
    std::uint64_t oracle_calls = 0;
};

/// Decides b(G) <= d. Candidate sets are scanned by size, then colex; the
/// first success wins.
PolyBondageResult poly_bondage(const Graph& g, int d, PolyMode mode, const GammaOracle& oracle = exact_gamma_oracle());

struct OracleRecovery {
    int value = 0;
    int calls = 0;
    int hits = 0;  // raised deletions, or core answers
};

/// gamma(G) = |V| - p, deleting edges in colex order.
OracleRecovery gamma_via_edge_deletion_oracle(const Graph& g, const CriticalOracle& oracle = exact_critical_oracle());
/// alpha(G) by querying and deleting every vertex once.
OracleRecovery alpha_via_core_oracle(const Graph& g, const CoreOracle& oracle = exact_core_oracle());

}  // namespace bondage
