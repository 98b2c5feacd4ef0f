#include "ringtrace/harness.hpp"

#include <algorithm>
#include <random>

#include "ringtrace/errors.hpp"

namespace ringtrace {

HarnessResult run_curve_harness(int instances, uint64_t seed, int maxGens,
                                int maxExp, const AnalysisOptions& opt) {
    HarnessResult hr;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> genCount(2, maxGens);
    std::uniform_int_distribution<int> expDist(0, maxExp);

    for (int i = 0; i < instances; ++i) {
        std::vector<long long> exps;
        int k = genCount(rng);
        while (int(exps.size()) < k) {
            long long e = expDist(rng);
            if (std::find(exps.begin(), exps.end(), e) == exps.end())
                exps.push_back(e);
        }
        std::sort(exps.begin(), exps.end());
        std::string label;
        for (size_t j = 0; j < exps.size(); ++j)
            label += (j ? "," : "") + std::to_string(exps[j]);
        ++hr.instances;
        try {
            AffineSemigroup s = numerical_curve(exps);
            ordered_json rep = analyze_semigroup(s, opt);
            if (!rep["isCM"].get<bool>()) continue;
            ++hr.cmInstances;
            // the in-analysis audits already enforce the two theorem checks
            // and cross-engine agreement; re-state them here explicitly
            bool ng = rep["isNearlyGorenstein"].get<bool>();
            bool gor = rep["isGorenstein"].get<bool>();
            bool level = rep["isLevel"].get<bool>();
            int64_t type = rep["type"].get<int64_t>();
            auto hv = rep["hilbert"]["hVector"].get<std::vector<int64_t>>();
            if (ng && !gor && hv.back() < 2) {
                ++hr.violations;
                hr.notes.push_back("[" + label +
                                   "] nearly Gorenstein non-Gorenstein with top "
                                   "h-entry < 2");
            }
            if (ng && type == 2 && !level) {
                ++hr.violations;
                hr.notes.push_back("[" + label + "] nearly Gorenstein type 2 not level");
            }
            if (ng && type == 2 && rep["pd"].get<int64_t>() == 2) {
                bool form = hv.size() >= 1 && hv[0] == 1;
                for (size_t j = 1; j < hv.size(); ++j)
                    if (hv[j] != 2) form = false;
                if (!form) {
                    ++hr.violations;
                    hr.notes.push_back(
                        "[" + label +
                        "] pd = type = 2 nearly Gorenstein without the 1+2(t+"
                        "...+t^s) numerator");
                }
            }
        } catch (const InternalError& e) {
            ++hr.violations;
            hr.notes.push_back("[" + label + "] internal inconsistency: " + e.what());
        } catch (const ResourceError& e) {
            hr.notes.push_back("[" + label + "] resource cap: " + e.what());
        }
    }
    return hr;
}

}  // namespace ringtrace
