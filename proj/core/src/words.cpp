#include "modcomp/words.hpp"

#include <algorithm>
#include <map>

namespace modcomp {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty()) throw InvalidModule("alphabet must be non-empty");
    std::string sorted = symbols_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw InvalidModule("alphabet contains a duplicate symbol");
    }
    // '+' and '#' are carrier metacharacters (merged-node joins, freshening
    // tags) and cannot name vertices.
    if (symbols_.find('+') != std::string::npos || symbols_.find('#') != std::string::npos) {
        throw InvalidModule("alphabet symbols '+' and '#' are reserved");
    }
}

bool Alphabet::contains(char s) const {
    return symbols_.find(s) != std::string::npos;
}

Module symbol_module(char s, const Alphabet& alphabet) {
    if (!alphabet.contains(s)) {
        throw SymbolNotInAlphabet(std::string("symbol '") + s + "' is not in the alphabet");
    }
    const std::string name(1, s);
    const NodeId slot(name);
    const NodeId in(name + ".L");
    const NodeId out(name + ".R");
    Graph graph({slot, in, out}, {Edge::link(slot, in), Edge::link(slot, out)});
    return Module(std::move(graph),
                  Interface({Gate{in, kControlLabel}}),
                  Interface({Gate{out, kControlLabel}}));
}

Module empty_word_module() {
    const NodeId gate((PrimId("ctl")));
    Graph graph({gate}, {});
    return Module(std::move(graph),
                  Interface({Gate{gate, kControlLabel}}),
                  Interface({Gate{gate, kControlLabel}}));
}

Module word_to_module(std::string_view word, const Alphabet& alphabet) {
    if (word.empty()) return empty_word_module();
    Module chain = freshen(symbol_module(word[0], alphabet), "#w0");
    for (std::size_t i = 1; i < word.size(); ++i) {
        chain = compose(chain, freshen(symbol_module(word[i], alphabet),
                                       "#w" + std::to_string(i)))
                    .module;
    }
    return chain;
}

namespace {

[[noreturn]] void bad_shape(const std::string& why) {
    throw NotAWordModule("not a word module: " + why);
}

} // namespace

std::string module_to_word(const Module& m) {
    if (m.left().size() != 1 || m.right().size() != 1) {
        bad_shape("expected exactly one gate per side");
    }
    if (m.left()[0].label != kControlLabel || m.right()[0].label != kControlLabel) {
        bad_shape("gates must carry the control label");
    }
    const NodeId start = m.left()[0].node;
    const NodeId end = m.right()[0].node;

    if (start == end) {
        if (m.graph().vertices().size() != 1 || !m.graph().edges().empty()) {
            bad_shape("an empty-word module is a single shared gate");
        }
        return "";
    }

    std::map<NodeId, std::vector<NodeId>> adjacency;
    for (const auto& e : m.graph().edges()) {
        if (e.directed()) bad_shape("chain edges must be undirected");
        adjacency[e.src()].push_back(e.dst());
        adjacency[e.dst()].push_back(e.src());
    }

    const auto interior = m.interior();
    std::string word;
    std::size_t visited = 1;
    NodeId control = start;
    NodeId previous; // invalid until the first step
    while (control != end) {
        if (visited > m.graph().vertices().size()) bad_shape("chain revisits a vertex");
        std::vector<NodeId> forward;
        for (const auto& v : adjacency[control]) {
            if (v != previous) forward.push_back(v);
        }
        if (forward.size() != 1) bad_shape("control vertex must continue into exactly one slot");
        const NodeId slot = forward[0];
        if (!interior.count(slot)) bad_shape("symbol slot must be an interior vertex");
        if (!slot.singleton()) bad_shape("symbol slot must be an unmerged vertex");
        const std::string base = base_prim(slot.members()[0]);
        if (base.size() != 1) bad_shape("symbol slot name must be a single character");
        word += base;

        std::vector<NodeId> next;
        for (const auto& v : adjacency[slot]) {
            if (v != control) next.push_back(v);
        }
        if (next.size() != 1) bad_shape("symbol slot must continue into exactly one control vertex");
        previous = slot;
        control = next[0];
        visited += 2;
    }
    if (visited != m.graph().vertices().size()) bad_shape("disconnected vertices");
    if (m.graph().edges().size() != 2 * word.size()) bad_shape("extra edges");
    return word;
}

} // namespace modcomp
