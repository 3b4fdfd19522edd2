#include <numeric>

#include "doctest.h"
#include "ontoalign/errors.hpp"
#include "ontoalign/graph.hpp"
#include "test_helpers.hpp"

using namespace ontoalign;
using ontoalign::testing::make_doc;

TEST_CASE("adjacency of a chain") {
    OntologyDoc doc = make_doc({"A", "B", "C"}, {{"B", "A"}, {"C", "B"}});
    AdjMatrix m = build_adjacency(doc);
    CHECK(m.n == 3);
    CHECK(m.at(1, 0) == 1);  // B row, A column
    CHECK(m.at(2, 1) == 1);
    int total = std::accumulate(m.cells.begin(), m.cells.end(), 0);
    CHECK(total == 2);
}

TEST_CASE("adjacency of an edgeless document is zero") {
    AdjMatrix m = build_adjacency(make_doc({"A", "B"}, {}));
    CHECK(std::accumulate(m.cells.begin(), m.cells.end(), 0) == 0);
}

TEST_CASE("multiple inheritance sets both columns") {
    AdjMatrix m = build_adjacency(make_doc({"A", "B", "D"}, {{"D", "A"}, {"D", "B"}}));
    CHECK(m.at(2, 0) == 1);
    CHECK(m.at(2, 1) == 1);
    CHECK(std::accumulate(m.cells.begin(), m.cells.end(), 0) == 2);
}

TEST_CASE("cell total equals subclass pair count on random docs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        OntologyDoc doc = testing::random_dag(3 + static_cast<int>(rng() % 10), 0.3, rng);
        AdjMatrix m = build_adjacency(doc);
        CHECK(std::accumulate(m.cells.begin(), m.cells.end(), 0) ==
              static_cast<int>(doc.subclass.size()));
    }
}

TEST_CASE("labeled graph contents") {
    OntologyDoc doc = make_doc({"A", "B"}, {{"B", "A"}});
    doc.properties = {{"eats", "A", "B"}, {"name", "A", "xsd:string"}};
    doc.concepts[0].attributes = {"name"};

    LabeledGraph g = build_labeled_graph(doc);
    CHECK(g.nodes.size() == 2);
    CHECK(g.edges.size() == 2);  // subclassOf + eats; datatype range adds no edge
    CHECK(g.edges[0].label == "subclassOf");
    CHECK(g.edges[1].label == "eats");
    CHECK(g.node_attrs[0].count("name") == 1);
    CHECK(g.degree(0) == 2);
    CHECK(g.degree(1) == 2);
}

TEST_CASE("ssn degree: degree-2 node with two degree-2 neighbors") {
    // triangle: every node has degree 2 and two degree-2 neighbors
    OntologyDoc doc = make_doc({"1", "2", "3"}, {{"2", "1"}, {"3", "2"}});
    doc.properties = {{"p", "1", "3"}};
    LabeledGraph g = build_labeled_graph(doc);
    for (int v = 0; v < 3; ++v) {
        CHECK(g.degree(v) == 2);
        CHECK(ssn_degree(g, v) == 6);
    }
}

TEST_CASE("ssn degree of an isolated node is 0") {
    LabeledGraph g = build_labeled_graph(make_doc({"A", "B", "C"}, {{"B", "A"}}));
    CHECK(ssn_degree(g, 2) == 0);
}

TEST_CASE("ssn degree at the center of a 3-leaf star") {
    LabeledGraph g =
        build_labeled_graph(make_doc({"hub", "a", "b", "c"}, {{"a", "hub"}, {"b", "hub"}, {"c", "hub"}}));
    CHECK(ssn_degree(g, 0) == 6);  // 3 + 1 + 1 + 1
    CHECK(ssn_degree(g, 1) == 4);  // 1 + 3
}

TEST_CASE("ssn degree >= degree, equality only for isolated nodes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        OntologyDoc doc = testing::random_dag(2 + static_cast<int>(rng() % 12), 0.25, rng);
        LabeledGraph g = build_labeled_graph(doc);
        for (int v = 0; v < static_cast<int>(g.nodes.size()); ++v) {
            const int ssn = ssn_degree(g, v);
            CHECK(ssn >= g.degree(v));
            if (g.degree(v) > 0) CHECK(ssn > g.degree(v));
            if (g.degree(v) == 0) CHECK(ssn == 0);
        }
    }
}

TEST_CASE("ssn degree rejects unknown nodes") {
    LabeledGraph g = build_labeled_graph(make_doc({"A"}, {}));
    CHECK_THROWS_AS(ssn_degree(g, 5), ConfigError);
}
