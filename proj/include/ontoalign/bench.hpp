#pragma once

#include <cstdint>
#include <string>

#include "ontoalign/eval.hpp"
#include "ontoalign/ontology.hpp"
#include "ontoalign/pipeline.hpp"

namespace ontoalign {

// Random asymmetric tree ontology with attributes and object properties.
// Node i > 0 attaches below a uniformly chosen earlier node, so generic seeds
// give automorphism-free hierarchies.
OntologyDoc generate_ontology(int node_count, std::uint64_t seed);

struct BenchResult {
    OntologyDoc source;
    OntologyDoc target;  // label-encrypted, with floor(p * edges) subclass edges removed
    Alignment reference;  // identity at concept-id level
    MatchResult match;
    EvalReport report;
};

// The benchmark scores ranking quality against a full identity reference, so
// it extracts at threshold 0; the unsupervised mean is not calibrated to the
// 0.5 posterior convention.
inline MatchConfig bench_config() {
    MatchConfig cfg;
    cfg.threshold = 0.0;
    return cfg;
}

// Generate a pair, match it with the unsupervised combiner, and evaluate
// against the identity reference. Throws ConfigError on bad parameters.
BenchResult run_benchmark(int node_count, double perturbation, std::uint64_t seed,
                          const MatchConfig& cfg = bench_config(), double alpha = 0.5);

}  // namespace ontoalign
