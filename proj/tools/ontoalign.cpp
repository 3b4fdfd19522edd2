// ontoalign: structural ontology matcher working purely on graph shape, so it
// runs unchanged on label-encrypted inputs.

#include <cstdio>
#include <cstdlib>
#include <limits>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ontoalign/bench.hpp"
#include "ontoalign/bbn.hpp"
#include "ontoalign/errors.hpp"
#include "ontoalign/eval.hpp"
#include "ontoalign/pipeline.hpp"

namespace {

using namespace ontoalign;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << text;
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("ONTOALIGN_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

std::vector<std::string> split_ordering(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::string matrix_to_json(const SimMatrix& m) {
    auto num = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    std::string out = "{\"row_ids\":";
    out += nlohmann::json(m.row_ids).dump();
    out += ",\"col_ids\":";
    out += nlohmann::json(m.col_ids).dump();
    out += ",\"cells\":[";
    for (size_t i = 0; i < m.cells.size(); ++i) {
        if (i) out += ',';
        out += num(m.cells[i]);
    }
    out += "]}";
    return out;
}

std::string features_to_json(const FeatureSet& features) {
    std::string out = "{";
    for (size_t f = 0; f < 4; ++f) {
        if (f) out += ',';
        out += "\"" + std::string(kFeatureNames[f]) + "\":" + matrix_to_json(features.matrices[f]);
    }
    out += "}";
    return out;
}

int cmd_match(const std::string& source_path, const std::string& target_path,
              const std::string& model_path, const std::string& out_path, bool dump_features,
              const MatchConfig& cfg) {
    const OntologyDoc source = parse_ontology(read_file(source_path));
    const OntologyDoc target = parse_ontology(read_file(target_path));
    std::optional<BayesNetModel> model;
    if (!model_path.empty()) model = parse_model(read_file(model_path));

    MatchResult result = match_documents(source, target, model, cfg);
    result.alignment.source_file = source_path;
    result.alignment.target_file = target_path;

    const std::string alignment_json = write_alignment(result.alignment);
    if (out_path.empty())
        std::cout << alignment_json << "\n";
    else
        write_file(out_path, alignment_json);

    if (dump_features) {
        const std::string base = out_path.empty() ? "features.json" : out_path + ".features.json";
        write_file(base, features_to_json(result.features));
    }
    if (result.features.blondel_uniform_fallback)
        std::cerr << "warning: structural similarity degenerated to the uniform matrix "
                     "(an input has no subclass edges)\n";
    return 0;
}

int cmd_train(const std::string& pairs_path, const std::string& out_path, int bins,
              int parent_limit, const std::string& ordering, double negative_ratio,
              std::uint64_t seed, const MatchConfig& cfg) {
    nlohmann::json pairs;
    try {
        pairs = nlohmann::json::parse(read_file(pairs_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!pairs.is_array() || pairs.empty()) throw ConfigError("training pair list is empty");

    CaseTable all_cases;
    for (const auto& entry : pairs) {
        const OntologyDoc source = parse_ontology(read_file(entry.at("source")));
        const OntologyDoc target = parse_ontology(read_file(entry.at("target")));
        const Alignment reference = parse_alignment(read_file(entry.at("reference")));
        const FeatureSet features = compute_features(source, target, cfg);
        CaseTable cases =
            build_training_cases(features.matrices, reference, negative_ratio, bins, seed);
        if (all_cases.variables.empty()) all_cases.variables = cases.variables;
        for (auto& row : cases.cases) all_cases.cases.push_back(std::move(row));
    }

    BayesNetModel structure = k2_search(all_cases, split_ordering(ordering), parent_limit);
    BayesNetModel model = fit_cpts(structure, all_cases);
    model.bins = bins;
    write_file(out_path, serialize_model(model));
    return 0;
}

int cmd_eval(const std::string& alignment_path, const std::string& reference_path, double alpha) {
    const Alignment found = parse_alignment(read_file(alignment_path));
    const Alignment reference = parse_alignment(read_file(reference_path));
    const EvalReport report = evaluate(found, reference, alpha);
    std::cout << report_to_json(report) << "\n" << report_to_table(report);
    return 0;
}

int cmd_encrypt(const std::string& input_path, const std::string& key,
                const std::string& out_path) {
    const OntologyDoc doc = parse_ontology(read_file(input_path));
    const std::string text = write_ontology(encrypt_labels(doc, key));
    if (out_path.empty())
        std::cout << text << "\n";
    else
        write_file(out_path, text);
    return 0;
}

int cmd_bench(int nodes, double perturbation, std::uint64_t seed, const MatchConfig& cfg,
              double alpha) {
    const BenchResult result = run_benchmark(nodes, perturbation, seed, cfg, alpha);
    std::cout << report_to_json(result.report) << "\n" << report_to_table(result.report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"structure-only ontology matcher for secured (label-encrypted) ontologies"};
    app.require_subcommand(1);

    MatchConfig cfg;
    double alpha = 0.5;
    int bins = 3;
    int parent_limit = 2;
    std::string ordering = "blondel,dds,nas,eas,match";
    double negative_ratio = std::numeric_limits<double>::infinity();
    std::uint64_t seed = default_seed();

    std::string source, target, model, out, pairs, alignment, reference, input, key;
    bool dump_features = false;
    int nodes = 30;
    double perturbation = 0.0;

    auto add_match_flags = [&](CLI::App* cmd) {
        cmd->add_option("--threshold", cfg.threshold, "extraction threshold in [0,1]");
        cmd->add_option("--bins", bins, "discretization bins (>= 2)");
        cmd->add_option("--eps", cfg.eps, "similarity convergence tolerance");
        cmd->add_option("--max-iters", cfg.max_iters, "max iteration pairs");
        cmd->add_option("--seed", seed, "random seed (env ONTOALIGN_SEED as fallback)");
    };

    CLI::App* match = app.add_subcommand("match", "align two ontologies");
    match->add_option("--source", source, "source ontology file")->required();
    match->add_option("--target", target, "target ontology file")->required();
    match->add_option("--model", model, "trained model file (omit for unsupervised combiner)");
    match->add_option("--out", out, "alignment output file (stdout if omitted)");
    match->add_flag("--dump-features", dump_features, "also write the four raw matrices");
    add_match_flags(match);

    CLI::App* train = app.add_subcommand("train", "learn the combiner from labeled pairs");
    train->add_option("--pairs", pairs, "JSON list of {source,target,reference} file triples")
        ->required();
    train->add_option("--out", out, "model output file")->required();
    train->add_option("--parent-limit", parent_limit, "max parents per node");
    train->add_option("--ordering", ordering, "comma-separated variable ordering");
    train->add_option("--negative-ratio", negative_ratio,
                      "negatives per positive (inf = all non-reference pairs)");
    add_match_flags(train);

    CLI::App* eval_cmd = app.add_subcommand("eval", "score an alignment against a reference");
    eval_cmd->add_option("--alignment", alignment, "found alignment file")->required();
    eval_cmd->add_option("--reference", reference, "reference alignment file")->required();
    eval_cmd->add_option("--alpha", alpha, "f-measure weight (0.5 = balanced)");

    CLI::App* encrypt = app.add_subcommand("encrypt-labels", "write a label-encrypted copy");
    encrypt->add_option("--input", input, "ontology file")->required();
    encrypt->add_option("--key", key, "encryption key")->required();
    encrypt->add_option("--out", out, "output file (stdout if omitted)");

    CLI::App* bench = app.add_subcommand("bench", "synthetic end-to-end benchmark");
    bench->add_option("--nodes", nodes, "concept count (>= 2)");
    bench->add_option("--perturbation", perturbation, "fraction of subclass edges to drop");
    bench->add_option("--alpha", alpha, "f-measure weight");
    add_match_flags(bench);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(match)) {
            cfg.bins = bins;
            return cmd_match(source, target, model, out, dump_features, cfg);
        }
        if (app.got_subcommand(train)) {
            cfg.bins = bins;
            return cmd_train(pairs, out, bins, parent_limit, ordering, negative_ratio, seed, cfg);
        }
        if (app.got_subcommand(eval_cmd)) return cmd_eval(alignment, reference, alpha);
        if (app.got_subcommand(encrypt)) return cmd_encrypt(input, key, out);
        if (app.got_subcommand(bench)) {
            cfg.bins = bins;
            if (bench->count("--threshold") == 0) cfg.threshold = 0.0;
            return cmd_bench(nodes, perturbation, seed, cfg, alpha);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
