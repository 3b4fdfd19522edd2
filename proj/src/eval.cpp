#include "ontoalign/eval.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "json.hpp"
#include "ontoalign/errors.hpp"

namespace ontoalign {

namespace {

std::set<std::pair<std::string, std::string>> pair_set(const Alignment& a) {
    std::set<std::pair<std::string, std::string>> s;
    for (const auto& c : a.correspondences) s.insert({c.source, c.target});
    return s;
}

int intersection_size(const Alignment& a, const Alignment& b) {
    const auto sa = pair_set(a);
    const auto sb = pair_set(b);
    int n = 0;
    for (const auto& p : sa) n += sb.count(p);
    return n;
}

}  // namespace

double precision(const Alignment& found, const Alignment& reference) {
    const auto sa = pair_set(found);
    if (sa.empty()) return 1.0;  // vacuous; flagged in evaluate()
    return static_cast<double>(intersection_size(found, reference)) / sa.size();
}

double recall(const Alignment& found, const Alignment& reference) {
    const auto sr = pair_set(reference);
    if (sr.empty()) throw ConfigError("recall: reference alignment must be nonempty");
    return static_cast<double>(intersection_size(found, reference)) / sr.size();
}

double f_measure(double p, double r, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw ConfigError("f_measure: alpha must be in [0,1]");
    const double denom = (1.0 - alpha) * p + alpha * r;
    if (denom == 0.0) return 0.0;
    return p * r / denom;
}

EvalReport evaluate(const Alignment& found, const Alignment& reference, double alpha) {
    EvalReport report;
    report.alpha = alpha;
    report.found_size = static_cast<int>(pair_set(found).size());
    report.reference_size = static_cast<int>(pair_set(reference).size());
    report.intersection_size = intersection_size(found, reference);
    report.vacuous_precision = report.found_size == 0;
    report.precision = precision(found, reference);
    report.recall = recall(found, reference);
    report.f_measure = f_measure(report.precision, report.recall, alpha);
    return report;
}

std::string report_to_json(const EvalReport& report) {
    auto num = [](double v) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return std::string(buf);
    };
    std::string out = "{\"precision\":" + num(report.precision);
    out += ",\"recall\":" + num(report.recall);
    out += ",\"f_measure\":" + num(report.f_measure);
    out += ",\"alpha\":" + num(report.alpha);
    out += ",\"intersection_size\":" + std::to_string(report.intersection_size);
    out += ",\"found_size\":" + std::to_string(report.found_size);
    out += ",\"reference_size\":" + std::to_string(report.reference_size);
    out += ",\"vacuous_precision\":";
    out += report.vacuous_precision ? "true" : "false";
    out += "}";
    return out;
}

std::string report_to_table(const EvalReport& report) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "precision  recall  f-measure  (alpha=%.2f)\n"
                  "%9.4f  %6.4f  %9.4f   |R&A|=%d |A|=%d |R|=%d%s\n",
                  report.alpha, report.precision, report.recall, report.f_measure,
                  report.intersection_size, report.found_size, report.reference_size,
                  report.vacuous_precision ? "  (empty alignment: vacuous precision)" : "");
    return buf;
}

}  // namespace ontoalign
