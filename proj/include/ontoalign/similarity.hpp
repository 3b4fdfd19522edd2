#pragma once

#include <string>
#include <vector>

#include "ontoalign/graph.hpp"

namespace ontoalign {

// Dense nonnegative score matrix: rows index the second (target) ontology,
// columns the first (source) ontology.
struct SimMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> cells;  // row-major
    std::vector<std::string> row_ids;
    std::vector<std::string> col_ids;

    double at(int i, int j) const { return cells[static_cast<size_t>(i) * cols + j]; }
    double& at(int i, int j) { return cells[static_cast<size_t>(i) * cols + j]; }

    static SimMatrix zeros(std::vector<std::string> row_ids, std::vector<std::string> col_ids);
    static SimMatrix filled(std::vector<std::string> row_ids, std::vector<std::string> col_ids,
                            double value);

    double frobenius_norm() const;
};

struct ScorePair {
    std::vector<double> hub;
    std::vector<double> authority;
};

struct BlondelResult {
    SimMatrix similarity;
    int pairs_used = 0;
    double residual = 0.0;
    bool converged = false;
    bool uniform_fallback = false;  // zero update hit; cells are 1/sqrt(nA*nB)
};

// One even pair of normalized coupled updates
// S <- (B*S*A^T + B^T*S*A) / ||.||_F, applied twice.
// Throws ZeroUpdateError if either half-step is exactly zero.
SimMatrix blondel_step_pair(const SimMatrix& s, const AdjMatrix& a, const AdjMatrix& b);

// Full iteration from the all-ones start; converges on even iterates.
BlondelResult blondel_similarity(const AdjMatrix& a, const AdjMatrix& b,
                                 double eps = 1e-9, int max_iters = 500);

// Hub/authority power iteration on M = [[0,B],[B^T,0]]; the special case of
// the coupled iteration with the two-node structure graph.
ScorePair hits_scores(const AdjMatrix& b, double eps = 1e-9, int max_iters = 500);

// Degree-difference similarity: (Dmax - |ssn_B(i) - ssn_A(j)|) / Dmax with
// Dmax the maximum SSN degree over both graphs; all 1.0 when Dmax == 0.
SimMatrix dds_matrix(const LabeledGraph& ga, const LabeledGraph& gb);

// Node-attribute similarity: size of a maximum one-to-one pairing of the two
// neighborhoods where paired neighbors share at least one attribute.
SimMatrix nas_matrix(const LabeledGraph& ga, const LabeledGraph& gb);

// Edge-attribute similarity: multiset intersection of incident edge labels.
SimMatrix eas_matrix(const LabeledGraph& ga, const LabeledGraph& gb);

// Affine rescale to [0,1]; a constant matrix maps to all 0.5.
SimMatrix normalize_minmax(const SimMatrix& m);

}  // namespace ontoalign
