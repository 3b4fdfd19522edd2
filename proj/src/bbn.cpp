#include "ontoalign/bbn.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "json.hpp"
#include "ontoalign/align.hpp"
#include "ontoalign/errors.hpp"

namespace ontoalign {

const std::array<const char*, 4> kFeatureNames = {"blondel", "dds", "nas", "eas"};
const char* kMatchVariable = "match";

int CaseTable::variable_index(const std::string& name) const {
    for (size_t i = 0; i < variables.size(); ++i)
        if (variables[i].first == name) return static_cast<int>(i);
    return -1;
}

const BbnNode& BayesNetModel::node(const std::string& name) const {
    for (const auto& n : nodes)
        if (n.name == name) return n;
    throw ConfigError("unknown BBN node: " + name);
}

int discretize_score(double score, int bins) {
    if (bins < 2) throw ConfigError("discretize: bins must be >= 2");
    if (score < 0.0 || score > 1.0) throw ConfigError("discretize: score outside [0,1]");
    const int bin = static_cast<int>(std::floor(score * bins));
    return std::min(bin, bins - 1);
}

std::array<int, 4> discretize_features(const std::array<double, 4>& scores, int bins) {
    std::array<int, 4> out;
    for (size_t i = 0; i < 4; ++i) out[i] = discretize_score(scores[i], bins);
    return out;
}

CaseTable build_training_cases(const std::array<SimMatrix, 4>& features,
                               const Alignment& reference, double negative_ratio, int bins,
                               std::uint64_t seed) {
    if (negative_ratio < 0.0) throw ConfigError("negative_ratio must be nonnegative");
    const SimMatrix& first = features[0];
    for (const auto& m : features)
        if (m.rows != first.rows || m.cols != first.cols)
            throw ConfigError("feature matrices must share dimensions");

    std::array<SimMatrix, 4> norm;
    for (size_t f = 0; f < 4; ++f) norm[f] = normalize_minmax(features[f]);

    std::set<std::pair<int, int>> positive;  // (row, col)
    for (const auto& c : reference.correspondences) {
        int row = -1, col = -1;
        for (int i = 0; i < first.rows; ++i)
            if (first.row_ids[i] == c.target) row = i;
        for (int j = 0; j < first.cols; ++j)
            if (first.col_ids[j] == c.source) col = j;
        if (row < 0 || col < 0)
            throw ConfigError("reference correspondence does not index the matrices: " +
                              c.source + " -> " + c.target);
        positive.insert({row, col});
    }
    if (positive.empty()) throw ConfigError("training requires at least one positive pair");

    CaseTable table;
    for (const char* name : kFeatureNames) table.variables.emplace_back(name, bins);
    table.variables.emplace_back(kMatchVariable, 2);

    auto make_case = [&](int row, int col, int match) {
        std::vector<int> values;
        for (size_t f = 0; f < 4; ++f)
            values.push_back(discretize_score(norm[f].at(row, col), bins));
        values.push_back(match);
        table.cases.push_back(std::move(values));
    };

    for (const auto& [row, col] : positive) make_case(row, col, 1);

    std::vector<std::pair<int, int>> negatives;
    for (int i = 0; i < first.rows; ++i)
        for (int j = 0; j < first.cols; ++j)
            if (!positive.count({i, j})) negatives.emplace_back(i, j);

    size_t want = negatives.size();
    if (std::isfinite(negative_ratio))
        want = std::min(want, static_cast<size_t>(negative_ratio * positive.size()));

    // Partial Fisher-Yates with an explicit bounded draw, for stable output
    // across standard libraries.
    std::mt19937_64 rng(seed);
    for (size_t k = 0; k < want; ++k) {
        const size_t pick = k + rng() % (negatives.size() - k);
        std::swap(negatives[k], negatives[pick]);
        make_case(negatives[k].first, negatives[k].second, 0);
    }
    return table;
}

namespace {

// Mixed-radix parent instantiation index, first-listed parent varying slowest.
int instantiation_index(const std::vector<int>& parent_values,
                        const std::vector<int>& parent_arities) {
    int j = 0;
    for (size_t p = 0; p < parent_values.size(); ++p) j = j * parent_arities[p] + parent_values[p];
    return j;
}

double log_factorial(int n) { return std::lgamma(static_cast<double>(n) + 1.0); }

// N_ijk table for one node under a candidate parent set.
std::vector<std::vector<int>> tally_counts(int variable, const std::vector<int>& parents,
                                           const CaseTable& d) {
    const int arity = d.variables[variable].second;
    int q = 1;
    std::vector<int> parent_arities;
    for (int p : parents) {
        parent_arities.push_back(d.variables[p].second);
        q *= parent_arities.back();
    }
    std::vector<std::vector<int>> counts(q, std::vector<int>(arity, 0));
    std::vector<int> pv(parents.size());
    for (const auto& row : d.cases) {
        for (size_t p = 0; p < parents.size(); ++p) pv[p] = row[parents[p]];
        ++counts[instantiation_index(pv, parent_arities)][row[variable]];
    }
    return counts;
}

}  // namespace

double k2_g_score(int variable, const std::vector<int>& parents, const CaseTable& d) {
    const int arity = d.variables[variable].second;
    const auto counts = tally_counts(variable, parents, d);

    double log_g = 0.0;
    for (const auto& row : counts) {
        int n_ij = 0;
        for (int k = 0; k < arity; ++k) {
            n_ij += row[k];
            log_g += log_factorial(row[k]);
        }
        if (n_ij == 0) continue;  // unobserved instantiation contributes ln 1
        log_g += log_factorial(arity - 1) - log_factorial(n_ij + arity - 1);
    }
    return log_g;
}

BayesNetModel k2_search(const CaseTable& d, const std::vector<std::string>& ordering,
                        int parent_limit) {
    if (ordering.size() != d.variables.size())
        throw ConfigError("k2_search: ordering must cover every variable");
    std::vector<int> order_index;
    for (const auto& name : ordering) {
        const int idx = d.variable_index(name);
        if (idx < 0) throw ConfigError("k2_search: unknown variable in ordering: " + name);
        order_index.push_back(idx);
    }
    std::set<int> distinct(order_index.begin(), order_index.end());
    if (distinct.size() != order_index.size())
        throw ConfigError("k2_search: ordering repeats a variable");
    if (parent_limit < 0) throw ConfigError("k2_search: parent_limit must be >= 0");

    BayesNetModel model;
    model.ordering = ordering;
    model.parent_limit = parent_limit;

    for (size_t pos = 0; pos < order_index.size(); ++pos) {
        const int var = order_index[pos];
        std::vector<int> parents;
        double best = k2_g_score(var, parents, d);

        while (static_cast<int>(parents.size()) < parent_limit) {
            int best_candidate = -1;
            double best_gain = best;
            for (size_t prev = 0; prev < pos; ++prev) {  // earliest position wins ties
                const int cand = order_index[prev];
                if (std::find(parents.begin(), parents.end(), cand) != parents.end()) continue;
                std::vector<int> trial = parents;
                trial.push_back(cand);
                std::sort(trial.begin(), trial.end());
                const double score = k2_g_score(var, trial, d);
                if (score > best_gain) {
                    best_gain = score;
                    best_candidate = cand;
                }
            }
            if (best_candidate < 0) break;
            parents.push_back(best_candidate);
            std::sort(parents.begin(), parents.end());
            best = best_gain;
        }

        BbnNode node;
        node.name = d.variables[var].first;
        node.arity = d.variables[var].second;
        // parents reported in ordering order
        for (size_t prev = 0; prev < pos; ++prev)
            if (std::find(parents.begin(), parents.end(), order_index[prev]) != parents.end())
                node.parents.push_back(ordering[prev]);
        model.nodes.push_back(std::move(node));
    }
    return model;
}

BayesNetModel fit_cpts(const BayesNetModel& structure, const CaseTable& d) {
    BayesNetModel model = structure;
    for (auto& node : model.nodes) {
        const int var = d.variable_index(node.name);
        if (var < 0) throw ConfigError("fit_cpts: variable missing from cases: " + node.name);
        std::vector<int> parents;
        for (const auto& pname : node.parents) parents.push_back(d.variable_index(pname));
        const auto counts = tally_counts(var, parents, d);

        node.cpt.clear();
        for (const auto& row : counts) {
            int n_ij = 0;
            for (int c : row) n_ij += c;
            std::vector<double> dist(node.arity);
            for (int k = 0; k < node.arity; ++k)
                dist[k] = (row[k] + 1.0) / (n_ij + node.arity);
            node.cpt.push_back(std::move(dist));
        }
    }
    return model;
}

double posterior_match(const BayesNetModel& model, const Evidence& evidence) {
    const int n = static_cast<int>(model.nodes.size());
    if (n == 0) throw ConfigError("posterior_match: empty model");
    std::vector<int> node_index_by_name(n);
    int match_node = -1;
    for (int i = 0; i < n; ++i) {
        if (model.nodes[i].cpt.empty())
            throw ConfigError("posterior_match: model has no CPTs for " + model.nodes[i].name);
        if (model.nodes[i].name == kMatchVariable) match_node = i;
    }
    if (match_node < 0) throw ConfigError("posterior_match: model lacks a match node");

    auto index_of = [&](const std::string& name) {
        for (int i = 0; i < n; ++i)
            if (model.nodes[i].name == name) return i;
        throw ConfigError("posterior_match: unknown node " + name);
    };

    std::vector<int> fixed(n, -1);
    for (const auto& [name, value] : evidence.assignments) {
        const int i = index_of(name);
        if (i == match_node) throw ConfigError("posterior_match: match node cannot be evidence");
        if (value < 0 || value >= model.nodes[i].arity)
            throw ConfigError("posterior_match: evidence value outside arity for " + name);
        fixed[i] = value;
    }

    std::vector<std::vector<int>> parent_indices(n);
    for (int i = 0; i < n; ++i)
        for (const auto& pname : model.nodes[i].parents)
            parent_indices[i].push_back(index_of(pname));

    std::vector<int> assignment(n, 0);
    double total = 0.0, matched = 0.0;

    std::function<void(int)> enumerate = [&](int i) {
        if (i == n) {
            double p = 1.0;
            for (int v = 0; v < n; ++v) {
                std::vector<int> pv;
                std::vector<int> pr;
                for (int pi : parent_indices[v]) {
                    pv.push_back(assignment[pi]);
                    pr.push_back(model.nodes[pi].arity);
                }
                p *= model.nodes[v].cpt[instantiation_index(pv, pr)][assignment[v]];
            }
            total += p;
            if (assignment[match_node] == 1) matched += p;
            return;
        }
        if (fixed[i] >= 0) {
            assignment[i] = fixed[i];
            enumerate(i + 1);
        } else {
            for (int v = 0; v < model.nodes[i].arity; ++v) {
                assignment[i] = v;
                enumerate(i + 1);
            }
        }
    };
    enumerate(0);

    if (total == 0.0) throw ConfigError("posterior_match: evidence has zero probability");
    return matched / total;
}

namespace {

std::string format_probability(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void append_json_string(std::string& out, const std::string& s) {
    out += nlohmann::json(s).dump();
}

}  // namespace

std::string serialize_model(const BayesNetModel& model) {
    std::string out = "{\"ordering\":[";
    for (size_t i = 0; i < model.ordering.size(); ++i) {
        if (i) out += ',';
        append_json_string(out, model.ordering[i]);
    }
    out += "],\"parent_limit\":" + std::to_string(model.parent_limit);
    out += ",\"bins\":" + std::to_string(model.bins);
    out += ",\"nodes\":[";
    for (size_t i = 0; i < model.nodes.size(); ++i) {
        const auto& node = model.nodes[i];
        if (i) out += ',';
        out += "{\"name\":";
        append_json_string(out, node.name);
        out += ",\"arity\":" + std::to_string(node.arity);
        out += ",\"parents\":[";
        for (size_t p = 0; p < node.parents.size(); ++p) {
            if (p) out += ',';
            append_json_string(out, node.parents[p]);
        }
        out += "],\"cpt\":[";
        for (size_t j = 0; j < node.cpt.size(); ++j) {
            if (j) out += ',';
            out += '[';
            for (size_t k = 0; k < node.cpt[j].size(); ++k) {
                if (k) out += ',';
                out += format_probability(node.cpt[j][k]);
            }
            out += ']';
        }
        out += "]}";
    }
    out += "]}";
    return out;
}

BayesNetModel parse_model(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), static_cast<long>(e.byte));
    }

    BayesNetModel model;
    try {
        for (const auto& name : j.at("ordering")) model.ordering.push_back(name.get<std::string>());
        model.parent_limit = j.at("parent_limit").get<int>();
        model.bins = j.at("bins").get<int>();
        for (const auto& jn : j.at("nodes")) {
            BbnNode node;
            node.name = jn.at("name").get<std::string>();
            node.arity = jn.at("arity").get<int>();
            for (const auto& p : jn.at("parents")) node.parents.push_back(p.get<std::string>());
            for (const auto& row : jn.at("cpt"))
                node.cpt.push_back(row.get<std::vector<double>>());
            model.nodes.push_back(std::move(node));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }

    for (const auto& node : model.nodes) {
        size_t q = 1;
        for (const auto& pname : node.parents) q *= model.node(pname).arity;
        if (node.cpt.size() != q)
            throw ParseError("model CPT for " + node.name + " has wrong row count");
        for (const auto& row : node.cpt) {
            if (row.size() != static_cast<size_t>(node.arity))
                throw ParseError("model CPT row for " + node.name + " has wrong width");
            double sum = 0.0;
            for (double v : row) sum += v;
            if (std::abs(sum - 1.0) > 1e-9)
                throw ParseError("model CPT row for " + node.name + " does not sum to 1");
        }
    }
    return model;
}

}  // namespace ontoalign
