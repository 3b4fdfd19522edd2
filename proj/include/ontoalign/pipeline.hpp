#pragma once

#include <array>
#include <optional>

#include "ontoalign/align.hpp"
#include "ontoalign/eval.hpp"
#include "ontoalign/ontology.hpp"

namespace ontoalign {

struct MatchConfig {
    double eps = 1e-9;
    int max_iters = 500;
    int bins = 3;
    double threshold = 0.5;

    void validate() const;  // throws ConfigError
};

struct FeatureSet {
    std::array<SimMatrix, 4> matrices;  // blondel, dds, nas, eas
    bool blondel_uniform_fallback = false;
    int blondel_pairs = 0;
    double blondel_residual = 0.0;
};

// The four structural similarity matrices for source (columns) vs target (rows).
FeatureSet compute_features(const OntologyDoc& source, const OntologyDoc& target,
                            const MatchConfig& cfg = {});

struct MatchResult {
    FeatureSet features;
    SimMatrix scores;
    Alignment alignment;
};

MatchResult match_documents(const OntologyDoc& source, const OntologyDoc& target,
                            const std::optional<BayesNetModel>& model,
                            const MatchConfig& cfg = {});

}  // namespace ontoalign
