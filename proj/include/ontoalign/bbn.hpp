#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ontoalign/similarity.hpp"

namespace ontoalign {

struct Alignment;  // align.hpp

// Complete-data table of discrete cases. No missing values.
struct CaseTable {
    std::vector<std::pair<std::string, int>> variables;  // (name, arity)
    std::vector<std::vector<int>> cases;                 // each row: value index per variable

    int variable_index(const std::string& name) const;
};

struct BbnNode {
    std::string name;
    int arity = 0;
    std::vector<std::string> parents;
    // cpt[j][k] = P(value k | parent instantiation j). Row order: lexicographic
    // parent instantiation, earlier-listed parent varying slowest.
    std::vector<std::vector<double>> cpt;

    bool operator==(const BbnNode&) const = default;
};

struct BayesNetModel {
    std::vector<std::string> ordering;
    int parent_limit = 2;
    int bins = 3;
    std::vector<BbnNode> nodes;  // in ordering order

    const BbnNode& node(const std::string& name) const;
    bool operator==(const BayesNetModel&) const = default;
};

// Feature-variable assignments inserted before inference; never contains the
// match node.
struct Evidence {
    std::map<std::string, int> assignments;
};

// floor(score * bins) with the top bin closed at 1.0.
// Throws ConfigError for scores outside [0,1] or bins < 2.
int discretize_score(double score, int bins);

std::array<int, 4> discretize_features(const std::array<double, 4>& scores, int bins);

// Names of the four feature variables, in the order score_all_pairs and
// build_training_cases use them.
extern const std::array<const char*, 4> kFeatureNames;
extern const char* kMatchVariable;

// One case per chosen pair: the four discretized (min-max normalized) feature
// values plus match in {0,1}. All reference pairs are positives; negatives are
// sampled uniformly without replacement up to negative_ratio * positives
// (infinity = all), via a deterministic seeded generator.
CaseTable build_training_cases(const std::array<SimMatrix, 4>& features,
                               const Alignment& reference, double negative_ratio,
                               int bins, std::uint64_t seed);

// ln g(i, pi) of the Cooper-Herskovits score, via log-factorial accumulation.
double k2_g_score(int variable, const std::vector<int>& parents, const CaseTable& d);

// Greedy ordering-constrained structure search; returns structure without CPTs.
BayesNetModel k2_search(const CaseTable& d, const std::vector<std::string>& ordering,
                        int parent_limit);

// Laplace-smoothed CPTs: (N_ijk + 1) / (N_ij + r_i).
BayesNetModel fit_cpts(const BayesNetModel& structure, const CaseTable& d);

// Exact inference by full joint enumeration: P(match = 1 | evidence).
double posterior_match(const BayesNetModel& model, const Evidence& evidence);

std::string serialize_model(const BayesNetModel& model);
BayesNetModel parse_model(const std::string& text);

}  // namespace ontoalign
