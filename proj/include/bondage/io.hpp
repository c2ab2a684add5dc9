#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bondage/geometry.hpp"
#include "bondage/graph.hpp"

namespace bondage {

enum class GraphFormat { Dimacs, Graph6, Gadget };

/// Parsed graph file. Drawings (`v` lines), rotations (`r` lines) and
/// labels (`l` lines) may accompany the DIMACS body; ports and a contract
/// turn it into a gadget file.
struct GraphDocument {
    GraphFormat format = GraphFormat::Dimacs;
    Graph graph;
    std::optional<Drawing> drawing;
    std::optional<RotationSystem> rotation;
    std::vector<std::pair<std::string, VertexId>> ports;  // file order
    std::optional<std::string> contract;
};

/// Detects the format: a single whitespace-free token is graph6,
/// otherwise DIMACS-like lines. Errors throw InputError with a line number.
GraphDocument parse_graph(std::string_view text);
std::string serialize(const GraphDocument& doc);

Graph parse_graph6(std::string_view token);
std::string to_graph6(const Graph& g);

/// Standalone drawing / rotation files (only `v` or `r` lines plus comments).
Drawing parse_drawing(std::string_view text, int n);
RotationSystem parse_rotation(std::string_view text, int n);
std::string serialize_drawing(const Drawing& d);
std::string serialize_rotation(const RotationSystem& r);

std::string rational_to_string(const Rational& r);
Rational parse_rational(const std::string& s);

std::string read_text_file(const std::string& path);

}  // namespace bondage
