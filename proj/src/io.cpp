#include "bondage/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bondage/error.hpp"

namespace bondage {
namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string line(text.substr(pos, end - pos));
        if (!line.empty() && line.back() == '\r') line.pop_back();
        out.push_back({number, std::move(line)});
        pos = end + 1;
    }
    return out;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t") == std::string::npos; }

[[noreturn]] void fail(int line, const std::string& msg) {
    throw InputError("line " + std::to_string(line) + ": " + msg);
}

int read_int(std::istringstream& in, int line, const char* what) {
    long long v;
    if (!(in >> v)) fail(line, std::string("expected ") + what);
    return static_cast<int>(v);
}

VertexId read_vertex(std::istringstream& in, int line, int n) {
    int id = read_int(in, line, "vertex id");
    if (id < 1 || id > n) fail(line, "vertex id " + std::to_string(id) + " out of range 1.." + std::to_string(n));
    return id - 1;
}

void expect_end(std::istringstream& in, int line) {
    std::string extra;
    if (in >> extra) fail(line, "unexpected trailing token '" + extra + "'");
}

std::string rest_of_line(std::istringstream& in) {
    std::string rest;
    std::getline(in, rest);
    auto b = rest.find_first_not_of(" \t");
    auto e = rest.find_last_not_of(" \t");
    return b == std::string::npos ? std::string{} : rest.substr(b, e - b + 1);
}

struct Body {
    std::optional<int> n;
    int declared_m = 0;
    int edge_lines = 0;
    std::vector<std::pair<int, int>> edges;
    std::map<VertexId, std::string> labels;
    std::map<VertexId, Point> points;
    std::map<VertexId, std::vector<VertexId>> rotation;
    std::vector<std::pair<std::string, VertexId>> ports;
    std::optional<std::string> contract;
    int port_line = 0;
};

// Reads every recognised line kind; callers decide which kinds are legal.
Body read_body(const std::vector<Line>& lines, std::optional<int> fixed_n) {
    Body b;
    b.n = fixed_n;
    std::set<std::string> roles;
    std::set<VertexId> seen_points, seen_rot;
    for (const auto& [number, text] : lines) {
        if (blank(text)) continue;
        std::istringstream in(text);
        std::string kind;
        in >> kind;
        if (kind == "c") continue;
        if (kind == "p") {
            std::string word;
            in >> word;
            if (word != "edge") fail(number, "header must read 'p edge <n> <m>'");
            if (b.n && !fixed_n) fail(number, "duplicate header");
            int n = read_int(in, number, "vertex count");
            int m = read_int(in, number, "edge count");
            if (n < 0 || m < 0) fail(number, "negative count in header");
            expect_end(in, number);
            b.n = n;
            b.declared_m = m;
            continue;
        }
        if (!b.n) fail(number, "'" + kind + "' line before the 'p edge' header");
        int n = *b.n;
        if (kind == "e") {
            VertexId u = read_vertex(in, number, n);
            VertexId v = read_vertex(in, number, n);
            expect_end(in, number);
            if (u == v) fail(number, "self-loop at vertex " + std::to_string(u + 1));
            b.edges.emplace_back(u, v);
            ++b.edge_lines;
        } else if (kind == "l") {
            VertexId v = read_vertex(in, number, n);
            b.labels[v] = rest_of_line(in);
        } else if (kind == "v") {
            VertexId v = read_vertex(in, number, n);
            std::string xs, ys;
            if (!(in >> xs >> ys)) fail(number, "expected two rational coordinates");
            expect_end(in, number);
            if (!seen_points.insert(v).second) fail(number, "duplicate coordinates for vertex " + std::to_string(v + 1));
            try {
                b.points[v] = Point{parse_rational(xs), parse_rational(ys)};
            } catch (const InputError& e) {
                fail(number, e.what());
            }
        } else if (kind == "r") {
            VertexId v = read_vertex(in, number, n);
            int k = read_int(in, number, "rotation length");
            if (k < 0) fail(number, "negative rotation length");
            std::vector<VertexId> order;
            for (int i = 0; i < k; ++i) order.push_back(read_vertex(in, number, n));
            expect_end(in, number);
            if (!seen_rot.insert(v).second) fail(number, "duplicate rotation for vertex " + std::to_string(v + 1));
            b.rotation[v] = std::move(order);
        } else if (kind == "port") {
            std::string role;
            if (!(in >> role)) fail(number, "expected port role");
            VertexId v = read_vertex(in, number, n);
            expect_end(in, number);
            if (!roles.insert(role).second) fail(number, "duplicate port role '" + role + "'");
            b.ports.emplace_back(role, v);
            if (!b.port_line) b.port_line = number;
        } else if (kind == "contract") {
            std::string name;
            if (!(in >> name)) fail(number, "expected contract name");
            expect_end(in, number);
            if (b.contract) fail(number, "duplicate contract line");
            b.contract = name;
        } else {
            fail(number, "unknown line kind '" + kind + "'");
        }
    }
    return b;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw InputError("malformed rational '" + s + "'");
    boost::multiprecision::cpp_int d(den);
    if (d == 0) throw InputError("zero denominator in '" + s + "'");
    return Rational(boost::multiprecision::cpp_int(num), d);
}

Graph parse_graph6(std::string_view token) {
    if (token.starts_with(">>graph6<<")) token.remove_prefix(10);
    std::vector<int> bytes;
    for (char ch : token) {
        int c = static_cast<unsigned char>(ch);
        if (c < 63 || c > 126) throw InputError("graph6: invalid character");
        bytes.push_back(c - 63);
    }
    if (bytes.empty()) throw InputError("graph6: empty string");
    std::size_t pos = 0;
    long long n;
    if (bytes[0] != 63) {
        n = bytes[0];
        pos = 1;
    } else if (bytes.size() >= 4 && bytes[1] != 63) {
        n = (static_cast<long long>(bytes[1]) << 12) | (bytes[2] << 6) | bytes[3];
        pos = 4;
    } else {
        throw InputError("graph6: graphs above 258047 vertices are not supported");
    }
    long long bits = n * (n - 1) / 2;
    std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
    if (bytes.size() - pos != need)
        throw InputError("graph6: expected " + std::to_string(need) + " adjacency bytes, found " +
                         std::to_string(bytes.size() - pos));
    std::vector<std::pair<int, int>> edges;
    long long k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = bytes[pos + static_cast<std::size_t>(k / 6)];
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    for (long long r = k; r < static_cast<long long>(need) * 6; ++r)
        if ((bytes[pos + static_cast<std::size_t>(r / 6)] >> (5 - r % 6)) & 1)
            throw InputError("graph6: nonzero padding bits");
    return Graph::build(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph& g) {
    std::string out;
    int n = g.n();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = filled = 0;
            }
        }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

GraphDocument parse_graph(std::string_view text) {
    auto lines = split_lines(text);
    // graph6: the first meaningful line is one whitespace-free token.
    for (const auto& [number, line] : lines) {
        if (blank(line)) continue;
        if (line.find_first_of(" \t") == std::string::npos && line != "c") {
            GraphDocument doc;
            doc.format = GraphFormat::Graph6;
            try {
                doc.graph = parse_graph6(line);
            } catch (const InputError& e) {
                fail(number, e.what());
            }
            for (const auto& rest : lines)
                if (rest.number > number && !blank(rest.text))
                    fail(rest.number, "graph6 input holds one graph per file");
            return doc;
        }
        break;
    }

    Body b = read_body(lines, std::nullopt);
    if (!b.n) throw InputError("line 1: missing 'p edge <n> <m>' header");
    if (b.edge_lines != b.declared_m)
        throw InputError("header declares " + std::to_string(b.declared_m) + " edges but " +
                         std::to_string(b.edge_lines) + " 'e' lines follow");
    GraphDocument doc;
    doc.graph = Graph::build(*b.n, b.edges);
    for (auto& [v, label] : b.labels) doc.graph.set_label(v, label);
    if (!b.points.empty()) {
        if (static_cast<int>(b.points.size()) != *b.n)
            throw InputError("drawing gives coordinates for " + std::to_string(b.points.size()) + " of " +
                             std::to_string(*b.n) + " vertices");
        Drawing d;
        for (auto& [v, p] : b.points) d.points.push_back(p);
        doc.drawing = std::move(d);
    }
    if (!b.rotation.empty()) {
        RotationSystem r;
        r.order.resize(*b.n);
        for (auto& [v, ord] : b.rotation) r.order[v] = ord;
        if (!rotation_matches(doc.graph, r))
            throw InputError("rotation system is not a permutation of the neighbourhoods");
        doc.rotation = std::move(r);
    }
    if (!b.ports.empty() && !b.contract)
        throw InputError("line " + std::to_string(b.port_line) + ": gadget ports given without a contract line");
    if (b.contract) {
        doc.format = GraphFormat::Gadget;
        doc.ports = b.ports;
        doc.contract = b.contract;
    }
    return doc;
}

std::string serialize(const GraphDocument& doc) {
    if (doc.format == GraphFormat::Graph6) return to_graph6(doc.graph) + "\n";
    const Graph& g = doc.graph;
    std::ostringstream out;
    out << "p edge " << g.n() << ' ' << g.m() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    for (VertexId v = 0; v < g.n(); ++v)
        if (!g.label(v).empty()) out << "l " << v + 1 << ' ' << g.label(v) << '\n';
    if (doc.drawing) out << serialize_drawing(*doc.drawing);
    if (doc.rotation) out << serialize_rotation(*doc.rotation);
    if (doc.format == GraphFormat::Gadget) {
        for (const auto& [role, v] : doc.ports) out << "port " << role << ' ' << v + 1 << '\n';
        out << "contract " << doc.contract.value_or("") << '\n';
    }
    return out.str();
}

Drawing parse_drawing(std::string_view text, int n) {
    auto lines = split_lines(text);
    for (const auto& [number, line] : lines) {
        std::istringstream in(line);
        std::string kind;
        in >> kind;
        if (!kind.empty() && kind != "c" && kind != "v") fail(number, "drawing files hold only 'v' lines");
    }
    Body b = read_body(lines, n);
    if (static_cast<int>(b.points.size()) != n)
        throw InputError("drawing gives coordinates for " + std::to_string(b.points.size()) + " of " +
                         std::to_string(n) + " vertices");
    Drawing d;
    for (auto& [v, p] : b.points) d.points.push_back(p);
    return d;
}

RotationSystem parse_rotation(std::string_view text, int n) {
    auto lines = split_lines(text);
    for (const auto& [number, line] : lines) {
        std::istringstream in(line);
        std::string kind;
        in >> kind;
        if (!kind.empty() && kind != "c" && kind != "r") fail(number, "rotation files hold only 'r' lines");
    }
    Body b = read_body(lines, n);
    RotationSystem r;
    r.order.resize(n);
    for (auto& [v, ord] : b.rotation) r.order[v] = ord;
    return r;
}

std::string serialize_drawing(const Drawing& d) {
    std::ostringstream out;
    for (std::size_t v = 0; v < d.points.size(); ++v)
        out << "v " << v + 1 << ' ' << rational_to_string(d.points[v].x) << ' '
            << rational_to_string(d.points[v].y) << '\n';
    return out.str();
}

std::string serialize_rotation(const RotationSystem& r) {
    std::ostringstream out;
    for (std::size_t v = 0; v < r.order.size(); ++v) {
        out << "r " << v + 1 << ' ' << r.order[v].size();
        for (VertexId w : r.order[v]) out << ' ' << w + 1;
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace bondage
