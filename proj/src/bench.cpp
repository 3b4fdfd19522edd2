#include "ontoalign/bench.hpp"

#include <algorithm>
#include <random>

#include "ontoalign/errors.hpp"

namespace ontoalign {

OntologyDoc generate_ontology(int node_count, std::uint64_t seed) {
    if (node_count < 2) throw ConfigError("generate_ontology: node count must be >= 2");
    std::mt19937_64 rng(seed);

    const int attr_pool = std::max(4, node_count / 2);
    const int prop_pool = std::max(3, node_count / 3);

    OntologyDoc doc;
    for (int i = 0; i < node_count; ++i) {
        Concept c;
        c.id = "c" + std::to_string(i);
        c.label = "concept-" + std::to_string(i);
        const int n_attrs = 1 + static_cast<int>(rng() % 3);
        std::vector<int> pool(attr_pool);
        for (int k = 0; k < attr_pool; ++k) pool[k] = k;
        for (int k = 0; k < n_attrs; ++k) {
            const size_t pick = k + rng() % (pool.size() - k);
            std::swap(pool[k], pool[pick]);
            c.attributes.push_back("attr-" + std::to_string(pool[k]));
        }
        std::sort(c.attributes.begin(), c.attributes.end());
        doc.concepts.push_back(std::move(c));
    }

    // Random recursive tree: generic seeds give automorphism-free shapes.
    for (int i = 1; i < node_count; ++i) {
        const int parent = static_cast<int>(rng() % i);
        doc.subclass.emplace_back("c" + std::to_string(i), "c" + std::to_string(parent));
    }

    for (int i = 0; i < node_count; ++i) {
        PropertyAssertion p;
        p.label = "prop-" + std::to_string(rng() % prop_pool);
        p.domain = "c" + std::to_string(rng() % node_count);
        if (rng() % 4 == 0) {
            p.range = "xsd:string";
        } else {
            p.range = "c" + std::to_string(rng() % node_count);
        }
        doc.properties.push_back(std::move(p));
    }
    return doc;
}

BenchResult run_benchmark(int node_count, double perturbation, std::uint64_t seed,
                          const MatchConfig& cfg, double alpha) {
    if (node_count < 2) throw ConfigError("run_benchmark: node count must be >= 2");
    if (perturbation < 0.0 || perturbation > 1.0)
        throw ConfigError("run_benchmark: perturbation rate must be in [0,1]");
    cfg.validate();

    BenchResult out;
    out.source = generate_ontology(node_count, seed);
    out.target = encrypt_labels(out.source, "bench-key-" + std::to_string(seed));

    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    const int drop = static_cast<int>(perturbation * out.target.subclass.size());
    for (int k = 0; k < drop; ++k) {
        const size_t pick = k + rng() % (out.target.subclass.size() - k);
        std::swap(out.target.subclass[k], out.target.subclass[pick]);
    }
    out.target.subclass.erase(out.target.subclass.begin(), out.target.subclass.begin() + drop);

    for (const auto& c : out.source.concepts)
        out.reference.correspondences.push_back({c.id, c.id, 1.0});

    out.match = match_documents(out.source, out.target, std::nullopt, cfg);
    out.report = evaluate(out.match.alignment, out.reference, alpha);
    return out;
}

}  // namespace ontoalign
