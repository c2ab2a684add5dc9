#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "bondage/graph.hpp"

namespace bondage {

/// A graph with named attachment vertices, checked against a contract.
struct Gadget {
    std::string name;
    Graph graph;
    std::map<std::string, VertexId> ports;
    std::string contract;

    /// Throws InputError when the role is missing.
    VertexId port(const std::string& role) const;
    /// Vertex with the given label. Throws InputError when absent.
    VertexId vertex(const std::string& label) const;
};

struct ClauseOutcome {
    std::string clause;
    bool pass = false;
    std::string detail;
};

struct GadgetReport {
    std::string gadget;
    std::string contract;
    std::vector<ClauseOutcome> clauses;

    bool pass() const;
};

struct ContractClause {
    std::string text;
    std::function<ClauseOutcome(const Gadget&)> check;
};

struct GadgetContract {
    std::string name;
    std::vector<std::string> roles;
    int max_degree = 3;
    std::vector<ContractClause> clauses;
};

/// Known contract names: crossing, h_uv, h_v, h1, h2, h_e, leaf.
const GadgetContract& contract_by_name(const std::string& name);
std::vector<std::string> contract_names();

/// Names of the gadgets compiled into the library.
std::vector<std::string> registry_names();
/// Throws InputError for an unknown name.
Gadget load_gadget(const std::string& name);
/// Build a gadget from gadget-format text (see io.hpp).
Gadget gadget_from_text(const std::string& text, const std::string& name);

/// Structural checks (roles, degree bound) run first; the remaining
/// clauses are independent and may be evaluated on worker threads.
GadgetReport verify_gadget(const Gadget& g, int threads = 1);

struct SearchFilters {
    int min_n = 1;
    bool connected = true;
    bool planar = true;
    std::size_t limit = 0;  // 0 = no limit
};

/// All graphs with ports up to isomorphism (ports keep their roles) on
/// min_n..max_n vertices that satisfy every contract clause. Ordered by
/// vertex count, then by canonical code.
std::vector<Gadget> gadget_search(const GadgetContract& contract, int max_n, const SearchFilters& filters = {});

/// Canonical code of a graph whose vertices 0..fixed-1 are pinned in place.
std::string canonical_code(const Graph& g, int fixed);

/// Minimum size of X within V(g) containing `forced` and dominating every
/// vertex outside `externally_dominated`. -1 when infeasible.
int conditional_gamma(const Graph& g, const std::vector<VertexId>& externally_dominated,
                      const std::vector<VertexId>& forced = {});

/// Minimum vertex cover size with prescribed membership of some vertices
/// (`in` must be in the cover, `out` must not). -1 when infeasible.
int conditional_tau(const Graph& g, const std::vector<VertexId>& in, const std::vector<VertexId>& out);

}  // namespace bondage
