#ifndef MODCOMP_IO_HPP
#define MODCOMP_IO_HPP

#include <string>
#include <string_view>

#include "modcomp/module.hpp"

namespace modcomp {

/// A parsed module file: the document name plus the denoted module.
struct ModuleDocument {
    std::string name;
    Module module;
};

/// Parses a UTF-8 JSON module document:
///
///   {"name": "...",
///    "nodes": ["p", "g1+h1", ...],            // merged ids are '+'-joined
///    "edges": [["src", "dst", true|false], ...],
///    "left":  [["nodeRef", "label"], ...],     // document order IS the order
///    "right": [["nodeRef", "label"], ...]}
///
/// Node refs resolve by carrier equality, so "h1+g1" refers to "g1+h1".
/// Throws SchemaError (with a field path), DanglingNodeRef, DuplicateNodeId.
ModuleDocument parse_document(std::string_view bytes);

/// parse_document(bytes).module.
Module parse(std::string_view bytes);

/// Canonical serialization: nodes sorted lexicographically by joined id,
/// edges sorted by (src, dst, directed), interfaces in interface order,
/// compact JSON with the fixed field order name, nodes, edges, left, right,
/// and a trailing newline. Two equal modules serialize to identical bytes
/// (given the same name).
std::string serialize(const Module& m, std::string_view name = "");

/// Deterministic DOT rendering: left gates in a left-rank cluster, right
/// gates in a right-rank cluster, interior in between; a shared gate is
/// drawn twice, its two drawings joined by a double line.
std::string to_dot(const Module& m, std::string_view name = "module");

} // namespace modcomp

#endif // MODCOMP_IO_HPP
