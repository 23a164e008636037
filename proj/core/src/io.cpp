#include "modcomp/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace modcomp {

namespace {

using nlohmann::ordered_json;

std::vector<PrimId> split_ref(const std::string& ref, const std::string& path) {
    std::vector<PrimId> members;
    std::string current;
    for (char c : ref) {
        if (c == '+') {
            members.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    members.push_back(current);
    for (const auto& m : members) {
        if (m.empty()) throw SchemaError(path, "empty primitive id in '" + ref + "'");
    }
    return members;
}

ordered_json parse_json(std::string_view bytes) {
    try {
        return ordered_json::parse(bytes);
    } catch (const nlohmann::json::parse_error& e) {
        throw SchemaError("$", std::string("invalid JSON: ") + e.what());
    }
}

} // namespace

ModuleDocument parse_document(std::string_view bytes) {
    const ordered_json doc = parse_json(bytes);
    if (!doc.is_object()) throw SchemaError("$", "document must be a JSON object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "name" && key != "nodes" && key != "edges" && key != "left" && key != "right") {
            throw SchemaError("$." + key, "unknown field");
        }
    }
    for (const char* required : {"nodes", "edges", "left", "right"}) {
        if (!doc.contains(required)) {
            throw SchemaError(std::string("$.") + required, "missing field");
        }
    }

    ModuleDocument out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw SchemaError("$.name", "must be a string");
        out.name = doc["name"].get<std::string>();
    }

    std::map<std::string, NodeId> by_carrier; // canonical joined id -> node
    std::set<NodeId> vertices;
    std::set<PrimId> all_prims;
    if (!doc["nodes"].is_array()) throw SchemaError("$.nodes", "must be an array");
    for (std::size_t i = 0; i < doc["nodes"].size(); ++i) {
        const std::string path = "$.nodes[" + std::to_string(i) + "]";
        const auto& entry = doc["nodes"][i];
        if (!entry.is_string()) throw SchemaError(path, "must be a string");
        const NodeId node = NodeId::from_members(split_ref(entry.get<std::string>(), path));
        if (!by_carrier.emplace(node.joined(), node).second) {
            throw DuplicateNodeId(path, "node '" + node.joined() + "' declared twice");
        }
        for (const auto& p : node.members()) {
            if (!all_prims.insert(p).second) {
                throw DuplicateNodeId(path, "primitive id '" + p + "' occurs in two nodes");
            }
        }
        vertices.insert(node);
    }

    const auto resolve = [&by_carrier](const std::string& ref, const std::string& path) {
        const NodeId probe = NodeId::from_members(split_ref(ref, path));
        auto it = by_carrier.find(probe.joined());
        if (it == by_carrier.end()) {
            throw DanglingNodeRef(path, "node '" + ref + "' is not declared in nodes");
        }
        return it->second;
    };

    std::set<Edge> edges;
    if (!doc["edges"].is_array()) throw SchemaError("$.edges", "must be an array");
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        const std::string path = "$.edges[" + std::to_string(i) + "]";
        const auto& entry = doc["edges"][i];
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_string() ||
            !entry[1].is_string() || !entry[2].is_boolean()) {
            throw SchemaError(path, "edge must be [\"src\", \"dst\", true|false]");
        }
        edges.insert(Edge(resolve(entry[0].get<std::string>(), path + "[0]"),
                          resolve(entry[1].get<std::string>(), path + "[1]"),
                          entry[2].get<bool>()));
    }

    const auto read_interface = [&](const char* field) {
        const std::string base = std::string("$.") + field;
        if (!doc[field].is_array()) throw SchemaError(base, "must be an array");
        std::vector<Gate> gates;
        for (std::size_t i = 0; i < doc[field].size(); ++i) {
            const std::string path = base + "[" + std::to_string(i) + "]";
            const auto& entry = doc[field][i];
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
                !entry[1].is_string()) {
                throw SchemaError(path, "interface entry must be [\"nodeRef\", \"label\"]");
            }
            const Label label = entry[1].get<std::string>();
            if (label.empty()) throw SchemaError(path + "[1]", "label must be non-empty");
            gates.push_back(Gate{resolve(entry[0].get<std::string>(), path + "[0]"), label});
        }
        return gates;
    };

    try {
        out.module = Module(Graph(std::move(vertices), std::move(edges)),
                            Interface(read_interface("left")),
                            Interface(read_interface("right")));
    } catch (const InvalidModule& e) {
        throw SchemaError("$", e.what());
    }
    return out;
}

Module parse(std::string_view bytes) { return parse_document(bytes).module; }

std::string serialize(const Module& m, std::string_view name) {
    ordered_json doc;
    doc["name"] = std::string(name);

    std::vector<std::string> nodes;
    nodes.reserve(m.graph().vertices().size());
    for (const auto& v : m.graph().vertices()) nodes.push_back(v.joined());
    std::sort(nodes.begin(), nodes.end());
    doc["nodes"] = nodes;

    std::vector<std::tuple<std::string, std::string, bool>> edges;
    for (const auto& e : m.graph().edges()) {
        edges.emplace_back(e.src().joined(), e.dst().joined(), e.directed());
    }
    std::sort(edges.begin(), edges.end());
    doc["edges"] = ordered_json::array();
    for (const auto& [src, dst, directed] : edges) {
        doc["edges"].push_back(ordered_json::array({src, dst, directed}));
    }

    for (const auto& [field, side] : {std::pair{"left", &m.left()}, {"right", &m.right()}}) {
        doc[field] = ordered_json::array();
        for (const auto& g : *side) {
            doc[field].push_back(ordered_json::array({g.node.joined(), g.label}));
        }
    }
    return doc.dump() + "\n";
}

namespace {

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string to_dot(const Module& m, std::string_view name) {
    // Stable ids: gates by interface position, interior by vertex order.
    std::map<NodeId, std::string> anchor; // vertex -> id its edges attach to
    std::ostringstream out;
    out << "digraph \"" << dot_escape(std::string(name)) << "\" {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle, fontsize=10];\n";
    out << "  subgraph cluster_module {\n";
    out << "    label=\"" << dot_escape(std::string(name)) << "\";\n";

    if (!m.left().empty()) {
        out << "    subgraph cluster_left {\n      label=\"left\";\n      rank=same;\n";
        for (std::size_t i = 0; i < m.left().size(); ++i) {
            const auto& g = m.left()[i];
            out << "      L" << i << " [label=\"" << dot_escape(g.node.joined()) << ":"
                << dot_escape(g.label) << "\"]; // gate\n";
            anchor.emplace(g.node, "L" + std::to_string(i));
        }
        out << "    }\n";
    }
    if (!m.right().empty()) {
        out << "    subgraph cluster_right {\n      label=\"right\";\n      rank=same;\n";
        for (std::size_t i = 0; i < m.right().size(); ++i) {
            const auto& g = m.right()[i];
            out << "      R" << i << " [label=\"" << dot_escape(g.node.joined()) << ":"
                << dot_escape(g.label) << "\"]; // gate\n";
            anchor.emplace(g.node, "R" + std::to_string(i)); // left drawing wins for shared
        }
        out << "    }\n";
    }
    {
        std::size_t k = 0;
        for (const auto& v : m.interior()) {
            out << "    I" << k << " [label=\"" << dot_escape(v.joined()) << "\", shape=box];\n";
            anchor.emplace(v, "I" + std::to_string(k));
            ++k;
        }
    }

    // A shared gate is drawn on both margins; the double line renders the
    // "=" convention.
    for (const auto& v : m.shared_gates()) {
        std::size_t li = 0, ri = 0;
        for (std::size_t i = 0; i < m.left().size(); ++i) {
            if (m.left()[i].node == v) li = i;
        }
        for (std::size_t i = 0; i < m.right().size(); ++i) {
            if (m.right()[i].node == v) ri = i;
        }
        out << "    L" << li << " -> R" << ri
            << " [dir=none, color=\"black:invis:black\"]; // shared\n";
    }

    for (const auto& e : m.graph().edges()) {
        out << "    " << anchor.at(e.src()) << " -> " << anchor.at(e.dst());
        if (!e.directed()) out << " [dir=none]";
        out << ";\n";
    }
    out << "  }\n";
    out << "}\n";
    return out.str();
}

} // namespace modcomp
