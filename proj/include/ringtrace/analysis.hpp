#pragma once

#include <json.hpp>

#include "ringtrace/ng_semigroup.hpp"
#include "ringtrace/simplicial.hpp"
#include "ringtrace/trace.hpp"

namespace ringtrace {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "0.1.0";

struct AnalysisOptions {
    Limits limits{};
    int kmax = 6;                           // punctured-index cutoff
    std::optional<long long> holesBound;    // run hole diagnostics when set
    bool secondaryNgMode = true;            // also run the full-V search mode
    OrderKind order = OrderKind::DegRevLex; // for ideal inputs
};

// Full verdict record, already serialized with stable field order. The
// "timings" key is the only run-dependent content.
ordered_json analyze_ideal(const RingPtr& ring, const std::vector<Poly>& gens,
                           const AnalysisOptions& opt,
                           ordered_json inputEcho = {});
ordered_json analyze_semigroup(const AffineSemigroup& s, const AnalysisOptions& opt,
                               ordered_json inputEcho = {});
ordered_json analyze_complex(const SimplicialComplex& c, const AnalysisOptions& opt,
                             ordered_json inputEcho = {});

// Dispatch on the input schemas:
//   {"type":"semigroup","generators":[[...],...]}
//   {"type":"numerical_curve","exponents":[...]}
//   {"type":"ideal","variables":[...],"weights":[...],"generators":["...",...]}
//   {"type":"complex","vertices":n,"facets":[[...],...]}
ordered_json analyze_input(const ordered_json& input, const AnalysisOptions& opt);

// Text rendering of a report for the terminal.
std::string report_text(const ordered_json& report);

}  // namespace ringtrace
