#include "ontoalign/pipeline.hpp"

#include "ontoalign/errors.hpp"
#include "ontoalign/graph.hpp"

namespace ontoalign {

void MatchConfig::validate() const {
    if (eps <= 0.0) throw ConfigError("eps must be positive");
    if (max_iters < 1) throw ConfigError("max-iters must be >= 1");
    if (bins < 2) throw ConfigError("bins must be >= 2");
    if (threshold < 0.0 || threshold > 1.0) throw ConfigError("threshold must be in [0,1]");
}

FeatureSet compute_features(const OntologyDoc& source, const OntologyDoc& target,
                            const MatchConfig& cfg) {
    cfg.validate();
    const AdjMatrix a = build_adjacency(source);
    const AdjMatrix b = build_adjacency(target);
    const LabeledGraph ga = build_labeled_graph(source);
    const LabeledGraph gb = build_labeled_graph(target);

    FeatureSet out;
    BlondelResult blondel = blondel_similarity(a, b, cfg.eps, cfg.max_iters);
    out.blondel_uniform_fallback = blondel.uniform_fallback;
    out.blondel_pairs = blondel.pairs_used;
    out.blondel_residual = blondel.residual;
    out.matrices = {std::move(blondel.similarity), dds_matrix(ga, gb), nas_matrix(ga, gb),
                    eas_matrix(ga, gb)};
    return out;
}

MatchResult match_documents(const OntologyDoc& source, const OntologyDoc& target,
                            const std::optional<BayesNetModel>& model, const MatchConfig& cfg) {
    MatchResult result;
    result.features = compute_features(source, target, cfg);
    result.scores = score_all_pairs(result.features.matrices, model);
    result.alignment = extract_alignment(result.scores, cfg.threshold);
    return result;
}

}  // namespace ontoalign
