#include "modcomp/generate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "modcomp/canonical.hpp"

namespace modcomp {

namespace {

std::string closure_key(const Module& m) {
    return canonical_key(canonical_interface_order(m));
}

} // namespace

std::vector<Module> generate(const std::vector<Module>& basis, int max_vertices) {
    if (max_vertices < 1) {
        throw PreconditionViolated("generate: max_vertices must be at least 1");
    }

    std::map<std::string, Module> closed;
    for (const auto& t : basis) {
        if (static_cast<int>(t.graph().vertices().size()) > max_vertices) continue;
        closed.emplace(closure_key(t), t);
    }

    long tag_counter = 0;
    bool grew = true;
    while (grew) {
        grew = false;
        // Snapshot: iterate over the current generation while inserting into
        // the next one.
        std::vector<const Module*> current;
        current.reserve(closed.size());
        for (const auto& [key, m] : closed) current.push_back(&m);
        for (const Module* x : current) {
            for (const Module* y : current) {
                const long c = tag_counter++;
                const Module composed =
                    compose(freshen(*x, "#l" + std::to_string(c)),
                            freshen(*y, "#r" + std::to_string(c)))
                        .module;
                if (static_cast<int>(composed.graph().vertices().size()) > max_vertices) continue;
                if (closed.emplace(closure_key(composed), composed).second) grew = true;
            }
        }
    }

    std::vector<Module> out;
    out.reserve(closed.size());
    for (auto& [key, m] : closed) out.push_back(std::move(m));
    return out;
}

} // namespace modcomp
