#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ontoalign/bench.hpp"
#include "ontoalign/bbn.hpp"
#include "ontoalign/errors.hpp"
#include "ontoalign/eval.hpp"
#include "ontoalign/pipeline.hpp"

namespace py = pybind11;
using namespace ontoalign;

PYBIND11_MODULE(_ontoalign, m) {
    m.doc() = "structure-only ontology matching for secured (label-encrypted) ontologies";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ZeroUpdateError>(m, "ZeroUpdateError", PyExc_ArithmeticError);

    py::class_<Concept>(m, "Concept")
        .def(py::init<>())
        .def_readwrite("id", &Concept::id)
        .def_readwrite("label", &Concept::label)
        .def_readwrite("attributes", &Concept::attributes);

    py::class_<PropertyAssertion>(m, "PropertyAssertion")
        .def(py::init<>())
        .def_readwrite("label", &PropertyAssertion::label)
        .def_readwrite("domain", &PropertyAssertion::domain)
        .def_readwrite("range", &PropertyAssertion::range);

    py::class_<OntologyDoc>(m, "OntologyDoc")
        .def(py::init<>())
        .def_readwrite("concepts", &OntologyDoc::concepts)
        .def_readwrite("subclass", &OntologyDoc::subclass)
        .def_readwrite("properties", &OntologyDoc::properties)
        .def("__eq__", [](const OntologyDoc& a, const OntologyDoc& b) { return a == b; });

    py::class_<AdjMatrix>(m, "AdjMatrix")
        .def_readonly("n", &AdjMatrix::n)
        .def_readonly("concept_ids", &AdjMatrix::concept_ids)
        .def("at", &AdjMatrix::at);

    py::class_<SimMatrix>(m, "SimMatrix")
        .def_readonly("rows", &SimMatrix::rows)
        .def_readonly("cols", &SimMatrix::cols)
        .def_readonly("cells", &SimMatrix::cells)
        .def_readonly("row_ids", &SimMatrix::row_ids)
        .def_readonly("col_ids", &SimMatrix::col_ids)
        .def("at", py::overload_cast<int, int>(&SimMatrix::at, py::const_))
        .def("frobenius_norm", &SimMatrix::frobenius_norm);

    py::class_<ScorePair>(m, "ScorePair")
        .def_readonly("hub", &ScorePair::hub)
        .def_readonly("authority", &ScorePair::authority);

    py::class_<BlondelResult>(m, "BlondelResult")
        .def_readonly("similarity", &BlondelResult::similarity)
        .def_readonly("pairs_used", &BlondelResult::pairs_used)
        .def_readonly("residual", &BlondelResult::residual)
        .def_readonly("converged", &BlondelResult::converged)
        .def_readonly("uniform_fallback", &BlondelResult::uniform_fallback);

    py::class_<BayesNetModel>(m, "BayesNetModel")
        .def_readonly("ordering", &BayesNetModel::ordering)
        .def_readonly("parent_limit", &BayesNetModel::parent_limit)
        .def_readonly("bins", &BayesNetModel::bins)
        .def("__eq__", [](const BayesNetModel& a, const BayesNetModel& b) { return a == b; });

    py::class_<Correspondence>(m, "Correspondence")
        .def_readonly("source", &Correspondence::source)
        .def_readonly("target", &Correspondence::target)
        .def_readonly("confidence", &Correspondence::confidence);

    py::class_<Alignment>(m, "Alignment")
        .def(py::init<>())
        .def_readwrite("correspondences", &Alignment::correspondences)
        .def("contains_pair", &Alignment::contains_pair);

    py::class_<EvalReport>(m, "EvalReport")
        .def_readonly("precision", &EvalReport::precision)
        .def_readonly("recall", &EvalReport::recall)
        .def_readonly("f_measure", &EvalReport::f_measure)
        .def_readonly("alpha", &EvalReport::alpha)
        .def_readonly("intersection_size", &EvalReport::intersection_size)
        .def_readonly("found_size", &EvalReport::found_size)
        .def_readonly("reference_size", &EvalReport::reference_size)
        .def_readonly("vacuous_precision", &EvalReport::vacuous_precision);

    py::class_<MatchConfig>(m, "MatchConfig")
        .def(py::init<>())
        .def_readwrite("eps", &MatchConfig::eps)
        .def_readwrite("max_iters", &MatchConfig::max_iters)
        .def_readwrite("bins", &MatchConfig::bins)
        .def_readwrite("threshold", &MatchConfig::threshold);

    py::class_<FeatureSet>(m, "FeatureSet")
        .def_readonly("matrices", &FeatureSet::matrices)
        .def_readonly("blondel_uniform_fallback", &FeatureSet::blondel_uniform_fallback)
        .def_readonly("blondel_pairs", &FeatureSet::blondel_pairs);

    py::class_<MatchResult>(m, "MatchResult")
        .def_readonly("features", &MatchResult::features)
        .def_readonly("scores", &MatchResult::scores)
        .def_readonly("alignment", &MatchResult::alignment);

    py::class_<BenchResult>(m, "BenchResult")
        .def_readonly("source", &BenchResult::source)
        .def_readonly("target", &BenchResult::target)
        .def_readonly("reference", &BenchResult::reference)
        .def_readonly("match", &BenchResult::match)
        .def_readonly("report", &BenchResult::report);

    m.def("parse_ontology", &parse_ontology, py::arg("text"));
    m.def("write_ontology", &write_ontology, py::arg("doc"));
    m.def("encrypt_labels", &encrypt_labels, py::arg("doc"), py::arg("key"));

    m.def("build_adjacency", &build_adjacency, py::arg("doc"));
    m.def("blondel_similarity", &blondel_similarity, py::arg("a"), py::arg("b"),
          py::arg("eps") = 1e-9, py::arg("max_iters") = 500);
    m.def("hits_scores", &hits_scores, py::arg("b"), py::arg("eps") = 1e-9,
          py::arg("max_iters") = 500);

    m.def("compute_features", &compute_features, py::arg("source"), py::arg("target"),
          py::arg("config") = MatchConfig{});
    m.def(
        "match_documents",
        [](const OntologyDoc& source, const OntologyDoc& target,
           const std::optional<BayesNetModel>& model, const MatchConfig& cfg) {
            return match_documents(source, target, model, cfg);
        },
        py::arg("source"), py::arg("target"), py::arg("model") = std::nullopt,
        py::arg("config") = MatchConfig{});

    m.def("score_all_pairs", &score_all_pairs, py::arg("features"), py::arg("model"));
    m.def("extract_alignment", &extract_alignment, py::arg("scores"), py::arg("threshold"));
    m.def("write_alignment", &write_alignment, py::arg("alignment"));
    m.def("parse_alignment", &parse_alignment, py::arg("text"));

    m.def("serialize_model", &serialize_model, py::arg("model"));
    m.def("parse_model", &parse_model, py::arg("text"));
    m.def("posterior_match", [](const BayesNetModel& model, const std::map<std::string, int>& e) {
        Evidence ev;
        ev.assignments = e;
        return posterior_match(model, ev);
    });
    m.def(
        "train_model",
        [](const std::array<SimMatrix, 4>& features, const Alignment& reference,
           double negative_ratio, int bins, std::uint64_t seed,
           const std::vector<std::string>& ordering, int parent_limit) {
            CaseTable cases =
                build_training_cases(features, reference, negative_ratio, bins, seed);
            BayesNetModel model = fit_cpts(k2_search(cases, ordering, parent_limit), cases);
            model.bins = bins;
            return model;
        },
        py::arg("features"), py::arg("reference"),
        py::arg("negative_ratio") = std::numeric_limits<double>::infinity(), py::arg("bins") = 3,
        py::arg("seed") = 0,
        py::arg("ordering") = std::vector<std::string>{"blondel", "dds", "nas", "eas", "match"},
        py::arg("parent_limit") = 2);

    m.def("evaluate", &evaluate, py::arg("found"), py::arg("reference"), py::arg("alpha") = 0.5);
    m.def("f_measure", &f_measure, py::arg("precision"), py::arg("recall"), py::arg("alpha"));

    m.def("generate_ontology", &generate_ontology, py::arg("node_count"), py::arg("seed"));
    m.def("run_benchmark", &run_benchmark, py::arg("node_count"), py::arg("perturbation"),
          py::arg("seed"), py::arg("config") = bench_config(), py::arg("alpha") = 0.5);
}
