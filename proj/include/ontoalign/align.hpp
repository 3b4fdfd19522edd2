#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ontoalign/bbn.hpp"
#include "ontoalign/similarity.hpp"

namespace ontoalign {

struct Correspondence {
    std::string source;  // first-ontology concept id (column)
    std::string target;  // second-ontology concept id (row)
    double confidence = 1.0;

    bool operator==(const Correspondence&) const = default;
};

struct Alignment {
    std::vector<Correspondence> correspondences;
    bool one_to_one = true;
    std::string source_file;
    std::string target_file;

    bool contains_pair(const std::string& source, const std::string& target) const;
};

// Per-pair confidences. With a model: BBN posterior on the pair's discretized
// evidence. Without: arithmetic mean of the four min-max-normalized scores.
SimMatrix score_all_pairs(const std::array<SimMatrix, 4>& features,
                          const std::optional<BayesNetModel>& model);

// Greedy one-to-one extraction: repeatedly take the highest unused cell with
// score >= threshold; ties broken by smaller row index, then smaller column.
Alignment extract_alignment(const SimMatrix& scores, double threshold);

// Alignment JSON, correspondences sorted by (source id, target id).
std::string write_alignment(const Alignment& a);
Alignment parse_alignment(const std::string& text);

}  // namespace ontoalign
