#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontoalign/ontology.hpp"

namespace ontoalign {

// 0/1 subclass-hierarchy adjacency. cells[i*n+j] == 1 iff concept j is a
// direct superclass of concept i. Row/column order = document concept order.
struct AdjMatrix {
    int n = 0;
    std::vector<unsigned char> cells;  // row-major n*n
    std::vector<std::string> concept_ids;

    unsigned char at(int i, int j) const { return cells[static_cast<size_t>(i) * n + j]; }
};

struct LabeledEdge {
    int from;
    int to;
    std::string label;  // "subclassOf" or a property label
};

// Full multigraph over concepts: subclass edges plus object-property edges.
// Degrees ignore direction and count multi-edges.
struct LabeledGraph {
    std::vector<std::string> nodes;                       // concept ids
    std::vector<std::set<std::string>> node_attrs;        // per node
    std::vector<LabeledEdge> edges;
    std::vector<std::vector<int>> adjacency;              // neighbor lists, with multiplicity
    std::vector<std::map<std::string, int>> incident_labels;  // label -> incident count

    int degree(int v) const { return static_cast<int>(adjacency[v].size()); }
    int node_index(const std::string& id) const;
};

AdjMatrix build_adjacency(const OntologyDoc& doc);

LabeledGraph build_labeled_graph(const OntologyDoc& doc);

// degree(v) plus the degrees of all neighbors, counted with edge multiplicity.
int ssn_degree(const LabeledGraph& g, int v);

}  // namespace ontoalign
