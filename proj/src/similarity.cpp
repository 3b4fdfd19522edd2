#include "ontoalign/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ontoalign/errors.hpp"

namespace ontoalign {

SimMatrix SimMatrix::zeros(std::vector<std::string> row_ids, std::vector<std::string> col_ids) {
    return filled(std::move(row_ids), std::move(col_ids), 0.0);
}

SimMatrix SimMatrix::filled(std::vector<std::string> row_ids, std::vector<std::string> col_ids,
                            double value) {
    SimMatrix m;
    m.rows = static_cast<int>(row_ids.size());
    m.cols = static_cast<int>(col_ids.size());
    m.row_ids = std::move(row_ids);
    m.col_ids = std::move(col_ids);
    m.cells.assign(static_cast<size_t>(m.rows) * m.cols, value);
    return m;
}

double SimMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (double v : cells) sum += v * v;
    return std::sqrt(sum);
}

namespace {

// One normalized half-step: S <- (B*S*A^T + B^T*S*A) / ||.||_F.
SimMatrix coupled_step(const SimMatrix& s, const AdjMatrix& a, const AdjMatrix& b) {
    const int nb = s.rows, na = s.cols;
    SimMatrix t = SimMatrix::zeros(s.row_ids, s.col_ids);

    // B*S and B^T*S
    std::vector<double> bs(static_cast<size_t>(nb) * na, 0.0);
    std::vector<double> bts(static_cast<size_t>(nb) * na, 0.0);
    for (int i = 0; i < nb; ++i)
        for (int r = 0; r < nb; ++r) {
            if (b.at(i, r))
                for (int j = 0; j < na; ++j) bs[static_cast<size_t>(i) * na + j] += s.at(r, j);
            if (b.at(r, i))
                for (int j = 0; j < na; ++j) bts[static_cast<size_t>(i) * na + j] += s.at(r, j);
        }
    // (B*S)*A^T + (B^T*S)*A
    for (int i = 0; i < nb; ++i)
        for (int s2 = 0; s2 < na; ++s2) {
            const double v1 = bs[static_cast<size_t>(i) * na + s2];
            const double v2 = bts[static_cast<size_t>(i) * na + s2];
            if (v1 != 0.0)
                for (int j = 0; j < na; ++j)
                    if (a.at(j, s2)) t.at(i, j) += v1;
            if (v2 != 0.0)
                for (int j = 0; j < na; ++j)
                    if (a.at(s2, j)) t.at(i, j) += v2;
        }

    const double norm = t.frobenius_norm();
    if (norm == 0.0) throw ZeroUpdateError("coupled similarity update is exactly zero");
    for (double& v : t.cells) v /= norm;
    return t;
}

}  // namespace

SimMatrix blondel_step_pair(const SimMatrix& s, const AdjMatrix& a, const AdjMatrix& b) {
    return coupled_step(coupled_step(s, a, b), a, b);
}

BlondelResult blondel_similarity(const AdjMatrix& a, const AdjMatrix& b, double eps,
                                 int max_iters) {
    if (eps <= 0.0) throw ConfigError("blondel_similarity: eps must be positive");
    if (max_iters < 1) throw ConfigError("blondel_similarity: max_iters must be >= 1");

    BlondelResult out;
    const double ones = 1.0;
    SimMatrix s = SimMatrix::filled(b.concept_ids, a.concept_ids, ones);

    try {
        for (int k = 0; k < max_iters; ++k) {
            SimMatrix next = blondel_step_pair(s, a, b);
            double residual = 0.0;
            for (size_t c = 0; c < s.cells.size(); ++c) {
                const double d = next.cells[c] - s.cells[c];
                residual += d * d;
            }
            residual = std::sqrt(residual);
            s = std::move(next);
            out.pairs_used = k + 1;
            out.residual = residual;
            if (residual < eps) {
                out.converged = true;
                break;
            }
        }
        out.similarity = std::move(s);
    } catch (const ZeroUpdateError&) {
        const double u = 1.0 / std::sqrt(static_cast<double>(a.n) * b.n);
        out.similarity = SimMatrix::filled(b.concept_ids, a.concept_ids, u);
        out.uniform_fallback = true;
        out.converged = true;
    }
    return out;
}

ScorePair hits_scores(const AdjMatrix& b, double eps, int max_iters) {
    if (b.n == 0) throw ConfigError("hits_scores: empty graph");
    const int n = b.n;

    // z = [hub; authority], iterated in even pairs.
    std::vector<double> z(2 * n, 1.0);
    auto step = [&](const std::vector<double>& cur) {
        std::vector<double> next(2 * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (b.at(i, j)) {
                    next[i] += cur[n + j];  // hub_i += authority_j over edges i->j
                    next[n + j] += cur[i];
                }
        double norm = 0.0;
        for (double v : next) norm += v * v;
        norm = std::sqrt(norm);
        if (norm == 0.0) throw ZeroUpdateError("hits_scores: graph has no edges");
        for (double& v : next) v /= norm;
        return next;
    };

    for (int k = 0; k < max_iters; ++k) {
        std::vector<double> next = step(step(z));
        double residual = 0.0;
        for (int i = 0; i < 2 * n; ++i) {
            const double d = next[i] - z[i];
            residual += d * d;
        }
        z = std::move(next);
        if (std::sqrt(residual) < eps) break;
    }

    ScorePair out;
    out.hub.assign(z.begin(), z.begin() + n);
    out.authority.assign(z.begin() + n, z.end());
    return out;
}

SimMatrix dds_matrix(const LabeledGraph& ga, const LabeledGraph& gb) {
    if (ga.nodes.empty() || gb.nodes.empty()) throw ConfigError("dds_matrix: empty graph");

    std::vector<int> ssn_a(ga.nodes.size()), ssn_b(gb.nodes.size());
    int dmax = 0;
    for (size_t j = 0; j < ga.nodes.size(); ++j)
        dmax = std::max(dmax, ssn_a[j] = ssn_degree(ga, static_cast<int>(j)));
    for (size_t i = 0; i < gb.nodes.size(); ++i)
        dmax = std::max(dmax, ssn_b[i] = ssn_degree(gb, static_cast<int>(i)));

    SimMatrix m = SimMatrix::zeros(gb.nodes, ga.nodes);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            m.at(i, j) = dmax == 0
                             ? 1.0
                             : static_cast<double>(dmax - std::abs(ssn_b[i] - ssn_a[j])) / dmax;
    return m;
}

namespace {

// Kuhn's augmenting-path maximum bipartite matching over an allow matrix.
int max_matching(const std::vector<std::vector<bool>>& allow) {
    const int left = static_cast<int>(allow.size());
    if (left == 0) return 0;
    const int right = static_cast<int>(allow[0].size());
    std::vector<int> match_right(right, -1);

    std::vector<char> visited;
    std::function<bool(int)> try_augment = [&](int u) -> bool {
        for (int v = 0; v < right; ++v) {
            if (!allow[u][v] || visited[v]) continue;
            visited[v] = 1;
            if (match_right[v] < 0 || try_augment(match_right[v])) {
                match_right[v] = u;
                return true;
            }
        }
        return false;
    };

    int size = 0;
    for (int u = 0; u < left; ++u) {
        visited.assign(right, 0);
        if (try_augment(u)) ++size;
    }
    return size;
}

bool share_attribute(const std::set<std::string>& a, const std::set<std::string>& b) {
    auto it_a = a.begin();
    auto it_b = b.begin();
    while (it_a != a.end() && it_b != b.end()) {
        if (*it_a == *it_b) return true;
        if (*it_a < *it_b)
            ++it_a;
        else
            ++it_b;
    }
    return false;
}

}  // namespace

SimMatrix nas_matrix(const LabeledGraph& ga, const LabeledGraph& gb) {
    SimMatrix m = SimMatrix::zeros(gb.nodes, ga.nodes);
    for (int i = 0; i < m.rows; ++i) {
        const auto& nbrs_b = gb.adjacency[i];
        for (int j = 0; j < m.cols; ++j) {
            const auto& nbrs_a = ga.adjacency[j];
            if (nbrs_b.empty() || nbrs_a.empty()) continue;
            std::vector<std::vector<bool>> allow(nbrs_b.size(),
                                                 std::vector<bool>(nbrs_a.size(), false));
            for (size_t u = 0; u < nbrs_b.size(); ++u)
                for (size_t v = 0; v < nbrs_a.size(); ++v)
                    allow[u][v] =
                        share_attribute(gb.node_attrs[nbrs_b[u]], ga.node_attrs[nbrs_a[v]]);
            m.at(i, j) = static_cast<double>(max_matching(allow));
        }
    }
    return m;
}

SimMatrix eas_matrix(const LabeledGraph& ga, const LabeledGraph& gb) {
    SimMatrix m = SimMatrix::zeros(gb.nodes, ga.nodes);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            int common = 0;
            const auto& labels_b = gb.incident_labels[i];
            const auto& labels_a = ga.incident_labels[j];
            for (const auto& [label, count_b] : labels_b) {
                auto it = labels_a.find(label);
                if (it != labels_a.end()) common += std::min(count_b, it->second);
            }
            m.at(i, j) = static_cast<double>(common);
        }
    return m;
}

SimMatrix normalize_minmax(const SimMatrix& m) {
    SimMatrix out = m;
    if (m.cells.empty()) return out;
    const auto [lo_it, hi_it] = std::minmax_element(m.cells.begin(), m.cells.end());
    const double lo = *lo_it, hi = *hi_it;
    if (hi == lo) {
        std::fill(out.cells.begin(), out.cells.end(), 0.5);
    } else {
        for (double& v : out.cells) v = (v - lo) / (hi - lo);
    }
    return out;
}

}  // namespace ontoalign
