#pragma once

#include <string>

#include "ontoalign/align.hpp"

namespace ontoalign {

struct EvalReport {
    double precision = 0.0;
    double recall = 0.0;
    double f_measure = 0.0;
    double alpha = 0.5;
    int intersection_size = 0;
    int found_size = 0;
    int reference_size = 0;
    bool vacuous_precision = false;  // found alignment was empty
};

// |R n A| / |A|; empty A yields 1.0 with the vacuous flag set on evaluate().
double precision(const Alignment& found, const Alignment& reference);

// |R n A| / |R|; throws ConfigError on an empty reference.
double recall(const Alignment& found, const Alignment& reference);

// P*R / ((1-alpha)*P + alpha*R); 0 when P = R = 0.
double f_measure(double p, double r, double alpha);

EvalReport evaluate(const Alignment& found, const Alignment& reference, double alpha = 0.5);

std::string report_to_json(const EvalReport& report);
std::string report_to_table(const EvalReport& report);

}  // namespace ontoalign
