#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bondage/gadgets.hpp"
#include "bondage/geometry.hpp"
#include "bondage/graph.hpp"

namespace bondage {

enum class ClaimKind {
    GammaOffset,        // gamma(out) = gamma(in) + value
    TauOffset,          // tau(out) = tau(in) + value
    GammaFormula,       // gamma(out) = value + tau(in)
    BondageOneSame,     // b(out) = 1 iff b(in) = 1
    BondageOneAnticore, // b(out) = 1 iff tau-anticore(in) nonempty
    TauAnticoreSame,    // tau-anticore(out) empty iff tau-anticore(in) empty
    NotInGammaAnticore, // listed output vertices lie in some gamma-set (when
                        // condition_edge is set: only if it is not critical in G)
    Planar,
    MaxDegree,          // Delta(out) <= value
    ClawFree,
    Cubic,
    Bipartite,
    GirthAtLeast,       // girth(out) >= value
};

enum class ClaimStatus { Pending, Verified, Failed, Unverified };

std::string to_string(ClaimStatus s);

struct LedgerEntry {
    ClaimKind kind;
    std::string claim;
    long long value = 0;
    std::vector<VertexId> vertices;
    std::optional<EdgeRef> condition_edge;
    ClaimStatus status = ClaimStatus::Pending;
    std::string detail;
};

struct ReductionTrace {
    std::string operation;
    std::vector<std::string> steps;
    /// Input element ("v3", "e1-2", 1-based) to output vertices.
    std::map<std::string, std::vector<VertexId>> element_map;
    /// Fresh gadget copies, each as the set of its output vertices.
    std::map<std::string, std::vector<VertexId>> gadget_copies;
    /// Formula inputs and counters (m, n, crossings, applications, ...).
    std::map<std::string, long long> terms;
    /// Named vertex sets kept for tests (exhibits, critical candidates).
    std::map<std::string, std::vector<VertexId>> exhibits;
    std::vector<LedgerEntry> ledger;

    long long gamma_offset() const;
};

struct Reduction {
    Graph graph;
    ReductionTrace trace;
};

/// Vertex-cover planarization: each crossing of the drawing becomes a copy
/// of the crossing gadget, chained along the crossed edges.
Reduction planarize_vc(const Graph& g, const Drawing& d);

/// tau-anticore to 1-Bondage. Requires G connected, planar, with at least
/// one edge, and a rotation system matching G.
Reduction anticore_to_bondage(const Graph& g, const RotationSystem& r);

/// Standalone component G_v for a vertex of degree l, labelled
/// "v_i", "vbar_i", "v_i'", "a".."d", "a_i".."d_i".
Graph gv_component(int l);

enum class ConfigurationKind { NonDominating, SemiDominating, Dominating, Covered };
std::string to_string(ConfigurationKind k);

/// Named configurations of a standalone G_v:
/// items 1-2 are non-dominating, item 3 dominating (option picks W among
/// {c,v_0,v_0'}, {d,b,vbar_0}, {c,v_0,vbar_0}), items 4-5 semi-dominating
/// with index j. For items 1, 2 and 4 the option picks w_i among b, c, d.
/// Throws InputError for unknown items or a kind that does not match.
std::vector<VertexId> gv_configuration(int l, ConfigurationKind kind, int item, int option = 0, int j = 1);

/// Replace claw centers by H_v until claw-free. Requires Delta <= 3.
Reduction eliminate_claws(const Graph& g);
/// Apply O_1 / O_2 until 3-regular. Requires G connected, planar,
/// Delta <= 3 and no isolated vertex.
Reduction cubicize(const Graph& g);
/// 3-subdivision of one edge. With check_anticore, u and v must lie in
/// some gamma-set of G (PreconditionError otherwise).
Reduction subdivide3(const Graph& g, const EdgeRef& e, bool check_anticore = false);
/// Replace an edge uv by H_e with edges ux and vy.
Reduction apply_edge_gadget(const Graph& g, const EdgeRef& e);
/// O_e on every edge, then 3-subdivisions inside the gadgets so the
/// result is bipartite with girth >= k.
Reduction lift_girth(const Graph& g, int k);

struct VerifyOptions {
    int max_vertices_gamma = 40;
    int max_edges_sweep = 35;
    int threads = 1;
};

/// Evaluates every ledger entry with the exact module (within the size
/// bounds) and writes status/detail back. Returns true when no entry failed.
bool verify_trace(const Graph& input, const Graph& output, ReductionTrace& trace, const VerifyOptions& opts = {});

/// True iff some single edge is gamma-critical.
bool has_gamma_critical_edge(const Graph& g, int threads = 1);

}  // namespace bondage
