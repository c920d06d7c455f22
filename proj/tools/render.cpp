#include "render.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "nakayama/epsilon.hpp"
#include "nakayama/homdim.hpp"
#include "nakayama/perm.hpp"
#include "nakayama/serial.hpp"

namespace nakayama::tools {

namespace {

std::string node(const Module& m) { return "\"" + to_string(m) + "\""; }

std::string simple_node(int v) { return "\"S" + std::to_string(v) + "\""; }

void function_graph(std::ostringstream& out, const Algebra& a, QuiverKind kind) {
    const FunctionQuiver q = function_quiver(a, kind);
    for (int v = 1; v <= a.n(); ++v) {
        out << "  " << simple_node(v);
        if (q.on_cycle[static_cast<std::size_t>(v - 1)]) out << " [peripheries=2]";
        out << ";\n";
    }
    for (int v = 1; v <= a.n(); ++v)
        if (auto w = q.next(v)) out << "  " << simple_node(v) << " -> " << simple_node(*w) << ";\n";
}

void ar_quiver(std::ostringstream& out, const Algebra& a) {
    std::map<int, std::vector<Module>> by_length;
    for (const Module& m : all_modules(a)) by_length[m.len].push_back(m);
    for (const auto& [len, ms] : by_length) {
        out << "  { rank=same;";
        for (const Module& m : ms) out << ' ' << node(m) << ';';
        out << " }\n";
    }
    for (const Module& m : all_modules(a)) {
        if (exists(a, m.soc, m.len + 1)) out << "  " << node(m) << " -> " << node(Module{m.soc, m.len + 1}) << ";\n";
        if (m.len >= 2) {
            const Module q{a.vertex(m.soc + 1LL), m.len - 1};
            if (exists(a, q.soc, q.len)) out << "  " << node(m) << " -> " << node(q) << ";\n";
        }
        if (!is_projective(a, m) && a.in_range(m.soc - 1LL) && exists(a, a.vertex(m.soc - 1LL), m.len))
            out << "  " << node(m) << " -> " << node(tau(a, m)) << " [style=dashed, constraint=false];\n";
    }
}

void epsilon_gamma(std::ostringstream& out, const Algebra& a) {
    const EpsilonAlgebra eps = epsilon_algebra(a);
    auto label = [&](std::size_t k) { return "\"T" + std::to_string(eps.t_vertices[k]) + "\""; };
    std::map<std::pair<int, int>, std::size_t> back;
    for (std::size_t k = 0; k < eps.vertex_map.size(); ++k) back[eps.vertex_map[k]] = k;
    for (std::size_t k = 0; k < eps.t_vertices.size(); ++k) {
        const auto [comp, w] = eps.vertex_map[k];
        out << "  " << label(k) << " [label=\"Delta(" << eps.t_vertices[k] << ") = " << comp + 1 << "." << w
            << "\"];\n";
    }
    for (std::size_t k = 0; k < eps.t_vertices.size(); ++k) {
        const auto [comp, w] = eps.vertex_map[k];
        if (auto g = gamma(eps.components[static_cast<std::size_t>(comp)], w))
            out << "  " << label(k) << " -> " << label(back.at({comp, *g})) << ";\n";
    }
}

void tie_walks(std::ostringstream& out, const Algebra& a) {
    int idx = 0;
    for (const Tie& t : ties(a)) {
        out << "  subgraph cluster_" << idx << " {\n    label=\"T=" << t.t << " h(T)=" << t.s << " z=" << t.z << "\";\n";
        auto id = [&](const std::string& side, int j) {
            return "\"t" + std::to_string(idx) + side + std::to_string(j) + "\"";
        };
        Module x = t.z % 2 == 1 ? simple(t.t) : injective(a, t.t);
        for (int j = 0; j <= t.z; ++j) {
            out << "    " << id("p", j) << " [label=\"" << to_string(x) << "\"];\n";
            if (j > 0) out << "    " << id("p", j - 1) << " -> " << id("p", j) << " [label=\"Omega\"];\n";
            if (j < t.z) x = *syzygy(a, x);
        }
        Module y = t.z % 2 == 1 ? simple(t.s) : projective(a, t.s);
        for (int j = 0; j <= t.z; ++j) {
            out << "    " << id("i", j) << " [label=\"" << to_string(y) << "\"];\n";
            if (j > 0) out << "    " << id("i", j - 1) << " -> " << id("i", j) << " [label=\"Sigma\", style=dashed];\n";
            if (j < t.z) y = *cosyzygy(a, y);
        }
        out << "  }\n";
        ++idx;
    }
}

}  // namespace

const std::vector<std::string>& render_kinds() {
    static const std::vector<std::string> kinds{"ar", "resolution", "coresolution", "epsilon-gamma", "ties"};
    return kinds;
}

std::string render_dot(const Algebra& a, std::string_view kind) {
    std::ostringstream out;
    out << "digraph \"" << serialize(a) << ' ' << kind << "\" {\n";
    if (kind == "ar") {
        out << "  rankdir=BT;\n";
        ar_quiver(out, a);
    } else if (kind == "resolution") {
        function_graph(out, a, QuiverKind::gamma);
    } else if (kind == "coresolution") {
        function_graph(out, a, QuiverKind::psi);
    } else if (kind == "epsilon-gamma") {
        epsilon_gamma(out, a);
    } else if (kind == "ties") {
        tie_walks(out, a);
    } else {
        throw std::invalid_argument("unknown render kind \"" + std::string(kind) + "\"");
    }
    out << "}\n";
    return out.str();
}

}  // namespace nakayama::tools
