#include "doctest.h"
#include "ontoalign/bench.hpp"
#include "ontoalign/errors.hpp"

using namespace ontoalign;

TEST_CASE("generated ontology is valid and deterministic") {
    OntologyDoc doc = generate_ontology(20, 123);
    CHECK(doc.concepts.size() == 20);
    CHECK(doc.subclass.size() == 19);  // a tree
    CHECK(parse_ontology(write_ontology(doc)) == doc);
    CHECK(generate_ontology(20, 123) == doc);
    CHECK(generate_ontology(20, 124) != doc);
    CHECK_THROWS_AS(generate_ontology(1, 0), ConfigError);
}

TEST_CASE("benchmark at p = 0 recovers the identity alignment") {
    BenchResult r = run_benchmark(12, 0.0, 7);
    CHECK(r.target.subclass.size() == r.source.subclass.size());
    CHECK(r.report.f_measure >= 0.95);
}

TEST_CASE("benchmark at p = 1 exercises the uniform fallback and still reports") {
    BenchResult r = run_benchmark(8, 1.0, 3);
    CHECK(r.target.subclass.empty());
    CHECK(r.match.features.blondel_uniform_fallback);
    CHECK(r.report.reference_size == 8);
}

TEST_CASE("benchmark is deterministic per seed") {
    BenchResult a = run_benchmark(10, 0.2, 5);
    BenchResult b = run_benchmark(10, 0.2, 5);
    CHECK(a.report.precision == b.report.precision);
    CHECK(a.report.recall == b.report.recall);
    CHECK(write_alignment(a.match.alignment) == write_alignment(b.match.alignment));
}

TEST_CASE("benchmark rejects invalid parameters") {
    CHECK_THROWS_AS(run_benchmark(1, 0.0, 0), ConfigError);
    CHECK_THROWS_AS(run_benchmark(10, 1.5, 0), ConfigError);
    CHECK_THROWS_AS(run_benchmark(10, -0.1, 0), ConfigError);
}
