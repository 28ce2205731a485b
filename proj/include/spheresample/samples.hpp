#pragma once

#include "spheresample/geometry.hpp"

#include <map>
#include <string>
#include <vector>

namespace spheresample {

/// Output of a sampler: the sample circles plus how they were produced.
struct SampleSet {
    std::vector<Circle> balls;
    std::string method;                       // "mat", "sec" or "auto"
    std::map<std::string, double> parameters; // xi, samples, sat_scale, ...
    int iterations = 0;
    bool converged = true;
};

} // namespace spheresample
