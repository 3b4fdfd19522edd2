#include "ontoalign/align.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"
#include "ontoalign/errors.hpp"

namespace ontoalign {

bool Alignment::contains_pair(const std::string& source, const std::string& target) const {
    for (const auto& c : correspondences)
        if (c.source == source && c.target == target) return true;
    return false;
}

SimMatrix score_all_pairs(const std::array<SimMatrix, 4>& features,
                          const std::optional<BayesNetModel>& model) {
    const SimMatrix& first = features[0];
    for (const auto& m : features)
        if (m.rows != first.rows || m.cols != first.cols)
            throw ConfigError("score_all_pairs: feature matrices must share dimensions");

    std::array<SimMatrix, 4> norm;
    for (size_t f = 0; f < 4; ++f) norm[f] = normalize_minmax(features[f]);

    SimMatrix scores = SimMatrix::zeros(first.row_ids, first.col_ids);
    for (int i = 0; i < scores.rows; ++i)
        for (int j = 0; j < scores.cols; ++j) {
            if (model) {
                Evidence e;
                for (size_t f = 0; f < 4; ++f)
                    e.assignments[kFeatureNames[f]] =
                        discretize_score(norm[f].at(i, j), model->bins);
                scores.at(i, j) = posterior_match(*model, e);
            } else {
                double sum = 0.0;
                for (size_t f = 0; f < 4; ++f) sum += norm[f].at(i, j);
                scores.at(i, j) = sum / 4.0;
            }
        }
    return scores;
}

Alignment extract_alignment(const SimMatrix& scores, double threshold) {
    if (threshold < 0.0 || threshold > 1.0)
        throw ConfigError("extract_alignment: threshold must be in [0,1]");

    struct Cell {
        double score;
        int row;
        int col;
    };
    std::vector<Cell> cells;
    cells.reserve(scores.cells.size());
    for (int i = 0; i < scores.rows; ++i)
        for (int j = 0; j < scores.cols; ++j)
            if (scores.at(i, j) >= threshold) cells.push_back({scores.at(i, j), i, j});

    std::stable_sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.score != b.score) return a.score > b.score;
        if (a.row != b.row) return a.row < b.row;
        return a.col < b.col;
    });

    Alignment out;
    std::vector<char> row_used(scores.rows, 0), col_used(scores.cols, 0);
    for (const auto& c : cells) {
        if (row_used[c.row] || col_used[c.col]) continue;
        row_used[c.row] = 1;
        col_used[c.col] = 1;
        out.correspondences.push_back({scores.col_ids[c.col], scores.row_ids[c.row], c.score});
    }
    std::sort(out.correspondences.begin(), out.correspondences.end(),
              [](const Correspondence& a, const Correspondence& b) {
                  return std::tie(a.source, a.target) < std::tie(b.source, b.target);
              });
    return out;
}

namespace {

std::string format_confidence(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string write_alignment(const Alignment& a) {
    std::vector<Correspondence> sorted = a.correspondences;
    std::sort(sorted.begin(), sorted.end(), [](const Correspondence& x, const Correspondence& y) {
        return std::tie(x.source, x.target) < std::tie(y.source, y.target);
    });

    std::string out = "{\"source\":";
    out += nlohmann::json(a.source_file).dump();
    out += ",\"target\":";
    out += nlohmann::json(a.target_file).dump();
    out += ",\"correspondences\":[";
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (i) out += ',';
        out += "{\"source\":";
        out += nlohmann::json(sorted[i].source).dump();
        out += ",\"target\":";
        out += nlohmann::json(sorted[i].target).dump();
        out += ",\"confidence\":" + format_confidence(sorted[i].confidence) + "}";
    }
    out += "]}";
    return out;
}

Alignment parse_alignment(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), static_cast<long>(e.byte));
    }

    Alignment a;
    try {
        a.source_file = j.value("source", "");
        a.target_file = j.value("target", "");
        for (const auto& jc : j.at("correspondences")) {
            Correspondence c;
            c.source = jc.at("source").get<std::string>();
            c.target = jc.at("target").get<std::string>();
            c.confidence = jc.value("confidence", 1.0);
            if (c.confidence < 0.0 || c.confidence > 1.0)
                throw ParseError("confidence outside [0,1]");
            a.correspondences.push_back(std::move(c));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
    return a;
}

}  // namespace ontoalign
