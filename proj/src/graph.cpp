#include "ontoalign/graph.hpp"

#include <unordered_map>

#include "ontoalign/errors.hpp"

namespace ontoalign {

int LabeledGraph::node_index(const std::string& id) const {
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i] == id) return static_cast<int>(i);
    return -1;
}

AdjMatrix build_adjacency(const OntologyDoc& doc) {
    AdjMatrix m;
    m.n = static_cast<int>(doc.concepts.size());
    m.cells.assign(static_cast<size_t>(m.n) * m.n, 0);
    std::unordered_map<std::string, int> index;
    for (int i = 0; i < m.n; ++i) {
        m.concept_ids.push_back(doc.concepts[i].id);
        index[doc.concepts[i].id] = i;
    }
    for (const auto& [child, parent] : doc.subclass)
        m.cells[static_cast<size_t>(index.at(child)) * m.n + index.at(parent)] = 1;
    return m;
}

LabeledGraph build_labeled_graph(const OntologyDoc& doc) {
    LabeledGraph g;
    std::unordered_map<std::string, int> index;
    for (const auto& c : doc.concepts) {
        index[c.id] = static_cast<int>(g.nodes.size());
        g.nodes.push_back(c.id);
        g.node_attrs.emplace_back(c.attributes.begin(), c.attributes.end());
    }
    g.adjacency.resize(g.nodes.size());
    g.incident_labels.resize(g.nodes.size());

    auto add_edge = [&](int from, int to, const std::string& label) {
        g.edges.push_back({from, to, label});
        g.adjacency[from].push_back(to);
        g.adjacency[to].push_back(from);
        ++g.incident_labels[from][label];
        ++g.incident_labels[to][label];
    };

    for (const auto& [child, parent] : doc.subclass)
        add_edge(index.at(child), index.at(parent), "subclassOf");
    for (const auto& p : doc.properties) {
        auto it = index.find(p.range);
        if (it == index.end()) continue;  // datatype range: no edge
        add_edge(index.at(p.domain), it->second, p.label);
    }
    return g;
}

int ssn_degree(const LabeledGraph& g, int v) {
    if (v < 0 || v >= static_cast<int>(g.nodes.size()))
        throw ConfigError("ssn_degree: unknown node index");
    int total = g.degree(v);
    for (int u : g.adjacency[v]) total += g.degree(u);
    return total;
}

}  // namespace ontoalign
