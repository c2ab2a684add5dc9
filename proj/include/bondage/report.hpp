#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bondage/io.hpp"
#include "bondage/reductions.hpp"

namespace bondage {

/// Text report of one command. Vertex ids are printed 1-based and sorted.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<std::string> ledger;  // one line per claim
    std::optional<long long> value;
    bool failed = false;  // a verified claim did not hold
    std::string render() const;
};

std::string format_vertices(std::vector<VertexId> s);
std::string format_edges(std::vector<EdgeRef> e);
std::string format_ledger_entry(const LedgerEntry& c);
/// Element map, gadget copies, exhibits and ledger of a trace.
std::string render_trace(const ReductionTrace& t);

Report run_solve(const Graph& g, const std::string& what, int max_d, bool witness, int threads);
Report run_cores(const Graph& g, const std::string& what);
Report run_critical3(const Graph& g, bool pad, bool verify);

struct ReduceRequest {
    std::string kind;  // planarize-vc, bondage, claw-free, cubic, girth
    int girth = 0;
    bool verify = false;
    int threads = 1;
};
struct ReduceOutcome {
    Report report;
    Graph graph;
    std::string trace;
};
/// The document supplies the drawing or rotation when the kind needs one;
/// a rotation is derived from the drawing when only the drawing is present.
ReduceOutcome run_reduce(const GraphDocument& doc, const ReduceRequest& req);

Report run_verify_gadget(const std::string& text, const std::string& name, int threads);
Report run_gadget_search(const std::string& contract, int max_n, int min_n, std::size_t limit);
Report run_poly_bondage(const Graph& g, int d, const std::string& mode);

}  // namespace bondage
