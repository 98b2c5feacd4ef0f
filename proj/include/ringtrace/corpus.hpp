#pragma once

#include "ringtrace/analysis.hpp"

namespace ringtrace {

// A corpus item is a data file: an input in one of the three schemas plus the
// expected facts, each file carrying its citation string. Expected facts are
// compared structurally against the analysis report: every leaf present under
// "expect" must match the report exactly.
struct CorpusItem {
    std::string id;
    std::string citation;
    bool slow = false;
    bool resourceCapAllowed = false;  // a resource-cap exit counts as a pass
    ordered_json options;             // per-item option overrides
    ordered_json input;
    ordered_json expect;
    std::string path;
};

struct CorpusOutcome {
    std::string id;
    std::string citation;
    bool ran = false;       // false when filtered out / skipped as slow
    bool pass = false;
    bool resourceCapped = false;
    double ms = 0;
    std::vector<std::string> mismatches;
};

std::vector<CorpusItem> load_corpus(const std::string& dir);

// Mismatch paths between expected facts and the report ("" when all match).
std::vector<std::string> compare_expected(const ordered_json& expect,
                                          const ordered_json& report);

CorpusOutcome run_corpus_item(const CorpusItem& item, AnalysisOptions opt);

struct CorpusRunResult {
    std::vector<CorpusOutcome> outcomes;
    int failures = 0;
    int skipped = 0;
};

CorpusRunResult run_corpus(const std::vector<CorpusItem>& items,
                           const std::string& filter, bool includeSlow,
                           const AnalysisOptions& baseOpt, int jobs = 1);

}  // namespace ringtrace
