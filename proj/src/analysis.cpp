#include "ringtrace/analysis.hpp"

#include <chrono>

#include "ringtrace/errors.hpp"
#include "ringtrace/parse.hpp"

namespace ringtrace {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int64_t int_to_i64(const Int& v) {
    if (!v.fits_slong_p()) throw ResourceError("coefficient exceeds 64-bit range");
    return v.get_si();
}

ordered_json ivec_json(const IVec& v) {
    ordered_json a = ordered_json::array();
    for (long long e : v) a.push_back(e);
    return a;
}

ordered_json rat_json(const Rat& r) {
    return ordered_json(r.get_str());
}

// Shared core: resolution-driven invariants of a homogeneous quotient.
struct CoreResult {
    GroebnerBasis gb;
    GradedResolution res;
    RingInvariants inv;
    HilbertData hilbert;
    std::vector<Poly> minimalGens;  // columns of the first map
    std::optional<TraceIdeal> trace;
    std::optional<bool> nearlyGorenstein;
    std::optional<int> puncturedIdx;
    Type2Report type2;
    std::string traceSkipReason;
};

CoreResult analyze_core(const RingPtr& ring, const std::vector<Poly>& gens, int dim,
                        const AnalysisOptions& opt) {
    CoreResult cr;
    cr.gb = buchberger(gens, opt.limits);
    if (cr.gb.is_unit_ideal()) throw InputError("the ideal is the unit ideal");
    cr.res = minimal_free_resolution(ring, gens, opt.limits);
    cr.inv = ring_invariants(cr.res, dim);
    cr.hilbert = hilbert_data(cr.res, dim);
    if (cr.res.length() > 0)
        for (const Vec& col : cr.res.maps[0]) cr.minimalGens.push_back(col.component(0));

    if (!cr.inv.isCM) {
        cr.traceSkipReason = "not Cohen-Macaulay";
        return cr;
    }
    bool inSquare = true;
    for (const Poly& g : cr.minimalGens)
        for (const Term& t : g.terms())
            if (expo_total(t.m) < 2) inSquare = false;
    if (!inSquare) {
        cr.traceSkipReason = "ideal has generators of degree < 2";
        return cr;
    }
    cr.trace = trace_canonical(cr.minimalGens, cr.res, cr.gb, cr.inv, opt.limits);
    bool unit = trace_is_unit(*cr.trace);
    if (unit != (cr.inv.isGorenstein && *cr.inv.isGorenstein))
        throw InternalError(
            "trace = R and the Gorenstein verdict from the resolution disagree");
    cr.nearlyGorenstein = unit || trace_contains_max_ideal(*cr.trace);
    cr.puncturedIdx = punctured_index(*cr.trace, opt.kmax);
    cr.type2 = type2_shortcut(cr.minimalGens, cr.res, cr.inv, opt.limits);
    if (cr.type2.applicable && cr.type2.value &&
        *cr.type2.value != *cr.nearlyGorenstein)
        throw InternalError("type-2 shortcut disagrees with the trace verdict");
    return cr;
}

ordered_json betti_json(const BettiTable& b) {
    ordered_json rows = ordered_json::array();
    for (const auto& r : b.rows()) rows.push_back({r[0], r[1], r[2]});
    return rows;
}

ordered_json trace_json(const CoreResult& cr, const AnalysisOptions& opt) {
    if (!cr.trace) {
        ordered_json t;
        t["computed"] = false;
        t["reason"] = cr.traceSkipReason;
        return t;
    }
    const TraceIdeal& tr = *cr.trace;
    ordered_json t;
    t["computed"] = true;
    t["isNearlyGorenstein"] = *cr.nearlyGorenstein;
    t["traceContainsM"] = *cr.nearlyGorenstein;
    if (cr.puncturedIdx)
        t["puncturedIndex"] = *cr.puncturedIdx;
    else
        t["puncturedIndex"] = nullptr;
    t["kmax"] = opt.kmax;
    // identify the trace against the obvious comparison ideals
    const RingPtr& ring = tr.gb.ring;
    std::string equals;
    if (tr.gb.is_unit_ideal()) {
        equals = "R";
    } else {
        std::vector<Poly> vars;
        for (int i = 0; i < ring->nvars(); ++i) vars.push_back(Poly::variable(ring, i));
        if (ideal_equal(tr.gb, buchberger(vars, opt.limits))) {
            equals = "m";
        } else {
            std::vector<Poly> sq;
            for (int i = 0; i < ring->nvars(); ++i)
                for (int j = i; j < ring->nvars(); ++j)
                    sq.push_back(Poly::variable(ring, i) * Poly::variable(ring, j));
            if (ideal_equal(tr.gb, buchberger(sq, opt.limits))) equals = "m^2";
        }
    }
    if (equals.empty())
        t["traceEquals"] = nullptr;
    else
        t["traceEquals"] = equals;
    ordered_json gens = ordered_json::array();
    for (const Poly& p : tr.entries) gens.push_back(p.str());
    t["traceGenerators"] = gens;
    ordered_json kg = ordered_json::array();
    for (const Vec& v : tr.kernelGens) {
        ordered_json col = ordered_json::array();
        for (const Poly& p : v.components()) col.push_back(p.str());
        kg.push_back(col);
    }
    t["kernelGenerators"] = kg;
    return t;
}

ordered_json invariants_json(const CoreResult& cr) {
    ordered_json j;
    j["dim"] = cr.inv.dim;
    j["codim"] = cr.inv.codim;
    j["pd"] = cr.inv.pd;
    j["isCM"] = cr.inv.isCM;
    j["betti"] = betti_json(cr.res.betti());
    if (cr.inv.type)
        j["type"] = *cr.inv.type;
    else
        j["type"] = nullptr;
    if (cr.inv.isLevel)
        j["isLevel"] = *cr.inv.isLevel;
    else
        j["isLevel"] = nullptr;
    if (cr.inv.isGorenstein)
        j["isGorenstein"] = *cr.inv.isGorenstein;
    else
        j["isGorenstein"] = nullptr;
    if (cr.nearlyGorenstein)
        j["isNearlyGorenstein"] = *cr.nearlyGorenstein;
    else
        j["isNearlyGorenstein"] = nullptr;
    ordered_json cd = ordered_json::array();
    for (int64_t d : cr.inv.canonicalDegrees) cd.push_back(d);
    j["canonicalDegrees"] = cd;
    ordered_json hil;
    ordered_json num = ordered_json::array();
    for (const Int& c : cr.hilbert.numerator) num.push_back(int_to_i64(c));
    ordered_json hv = ordered_json::array();
    for (const Int& c : cr.hilbert.hvector) hv.push_back(int_to_i64(c));
    hil["numerator"] = num;
    hil["hVector"] = hv;
    hil["dim"] = cr.hilbert.dim;
    j["hilbert"] = hil;
    return j;
}

ordered_json type2_json(const Type2Report& t) {
    ordered_json j;
    j["applicable"] = t.applicable;
    if (t.applicable && t.value)
        j["value"] = *t.value;
    else
        j["value"] = nullptr;
    return j;
}

ordered_json hb_json(const HilbertBurchReport& r) {
    ordered_json j;
    j["applicable"] = r.applicable;
    j["pass"] = r.pass;
    j["detail"] = r.detail;
    return j;
}

ordered_json ring_json(const RingPtr& ring) {
    ordered_json j;
    ordered_json vars = ordered_json::array();
    for (const auto& v : ring->vars) vars.push_back(v);
    j["variables"] = vars;
    ordered_json w = ordered_json::array();
    for (int64_t x : ring->weights) w.push_back(x);
    j["weights"] = w;
    return j;
}

ordered_json report_skeleton(ordered_json inputEcho) {
    ordered_json rep;
    rep["engine"] = {{"name", "ringtrace"}, {"version", kEngineVersion}};
    rep["input"] = std::move(inputEcho);
    return rep;
}

void validate_report(const ordered_json& rep) {
    // internal consistency of the final record
    if (rep["isGorenstein"].is_boolean() && rep["isGorenstein"].get<bool>()) {
        if (!(rep["isLevel"].is_boolean() && rep["isLevel"].get<bool>()))
            throw InternalError("report inconsistency: Gorenstein but not level");
        if (!(rep["type"].is_number() && rep["type"].get<int64_t>() == 1))
            throw InternalError("report inconsistency: Gorenstein with type != 1");
    }
    if (rep["isNearlyGorenstein"].is_boolean() && rep["isGorenstein"].is_boolean() &&
        rep["isGorenstein"].get<bool>() && !rep["isNearlyGorenstein"].get<bool>())
        throw InternalError("report inconsistency: Gorenstein but not nearly Gorenstein");
}

}  // namespace

ordered_json analyze_ideal(const RingPtr& ring, const std::vector<Poly>& gens,
                           const AnalysisOptions& opt, ordered_json inputEcho) {
    auto t0 = Clock::now();
    ordered_json rep = report_skeleton(std::move(inputEcho));
    rep["ring"] = ring_json(ring);

    GroebnerBasis gb = buchberger(gens, opt.limits);
    if (gb.is_unit_ideal()) throw InputError("the ideal is the unit ideal");
    int dim = dim_from_initial_ideal(gb);
    CoreResult cr = analyze_core(ring, gens, dim, opt);
    {
        ordered_json invs = invariants_json(cr);
        for (auto& [k, v] : invs.items()) rep[k] = v;
    }
    rep["trace"] = trace_json(cr, opt);
    rep["type2Shortcut"] = type2_json(cr.type2);
    rep["hilbertBurch"] =
        hb_json(hilbert_burch_audit(cr.minimalGens, cr.res, dim, opt.limits));
    rep["warnings"] = ordered_json::array();
    validate_report(rep);
    rep["timings"] = {{"totalMs", ms_since(t0)}};
    return rep;
}

ordered_json analyze_semigroup(const AffineSemigroup& s, const AnalysisOptions& opt,
                               ordered_json inputEcho) {
    auto t0 = Clock::now();
    ordered_json rep = report_skeleton(std::move(inputEcho));

    RingPtr ring;
    std::vector<Poly> I = toric_ideal(s, default_toric_names(int(s.gens.size())),
                                      opt.limits, &ring);
    rep["ring"] = ring_json(ring);

    const int dim = s.lattice_rank();
    CoreResult cr = analyze_core(ring, I, dim, opt);
    // independent dimension route must agree with the lattice rank
    if (dim_from_initial_ideal(cr.gb) != dim)
        throw InternalError("initial-ideal dimension disagrees with the lattice rank");
    {
        ordered_json invs = invariants_json(cr);
        for (auto& [k, v] : invs.items()) rep[k] = v;
    }
    rep["trace"] = trace_json(cr, opt);
    rep["type2Shortcut"] = type2_json(cr.type2);
    rep["hilbertBurch"] =
        hb_json(hilbert_burch_audit(cr.minimalGens, cr.res, dim, opt.limits));

    ordered_json sg;
    ordered_json gensJ = ordered_json::array();
    for (const IVec& g : s.gens) gensJ.push_back(ivec_json(g));
    sg["generators"] = gensJ;
    ordered_json lam = ordered_json::array();
    for (const Rat& l : s.lambda) lam.push_back(rat_json(l));
    sg["lambda"] = lam;
    sg["latticeRank"] = s.lattice_rank();
    {
        ordered_json ext = ordered_json::array();
        for (int e : extremal_rays(s)) ext.push_back(e);
        sg["extremalRays"] = ext;
    }

    if (cr.inv.isCM) {
        CanonicalData cd = canonical_V(s, cr.res, cr.inv, cr.hilbert);
        NgResult ng = nearly_gorenstein_combinatorial(s, cd, false);
        sg["Vsize"] = cd.V.size();
        sg["VminSize"] = cd.vminIdx.size();
        ordered_json vj = ordered_json::array();
        for (const IVec& v : cd.V) vj.push_back(ivec_json(v));
        sg["V"] = vj;
        sg["ngCombinatorial"] = ng.nearlyGorenstein;
        if (opt.secondaryNgMode) {
            NgResult ngFull = nearly_gorenstein_combinatorial(s, cd, true);
            if (ngFull.nearlyGorenstein != ng.nearlyGorenstein)
                throw InternalError(
                    "the V_min search and the full-V search disagree");
            sg["ngModesAgree"] = true;
        }
        TraceSet ts = semigroup_trace_set(s, cd);
        ordered_json tsj = ordered_json::array();
        for (int m : ts.members) tsj.push_back(m);
        sg["traceSet"] = tsj;
        ordered_json certs = ordered_json::array();
        for (const NgCertificate& c : ts.certificates) {
            ordered_json cj;
            cj["generator"] = ivec_json(s.gens[c.genIdx]);
            cj["v"] = ivec_json(c.v);
            cj["u"] = ivec_json(c.u);
            certs.push_back(cj);
        }
        sg["certificates"] = certs;
        StructureAudit audit = structure_audit(s, cd, cr.inv, cr.hilbert, ng, ts);
        auto auditJ = [](const AuditCheck& c) {
            ordered_json j;
            j["applicable"] = c.applicable;
            j["pass"] = c.pass;
            return j;
        };
        sg["audits"] = {{"extremalEscape", auditJ(audit.extremalEscape)},
                        {"topHAtLeast2", auditJ(audit.topHAtLeast2)},
                        {"type2Level", auditJ(audit.type2Level)},
                        {"vminEqualsTopH", auditJ(audit.vminEqualsTopH)}};
        if (!audit.all_pass())
            throw InternalError("a structural audit failed on a CM semigroup");
        // the combinatorial route and the kernel-trace route must agree
        if (!cr.nearlyGorenstein || *cr.nearlyGorenstein != ng.nearlyGorenstein)
            throw InternalError(
                "combinatorial and trace nearly-Gorenstein verdicts disagree");
        sg["crossEngineAgree"] = true;
    } else {
        sg["reason"] = "not Cohen-Macaulay";
    }

    if (opt.holesBound) {
        HoleReport hr = holes_box(s, *opt.holesBound);
        ordered_json hj;
        hj["bound"] = hr.bound;
        ordered_json holes = ordered_json::array();
        for (const auto& h : hr.holes) {
            ordered_json e;
            e["point"] = ivec_json(h.point);
            ordered_json fd = ordered_json::array();
            for (int d : h.familyDirs) fd.push_back(d);
            e["familyDirs"] = fd;
            holes.push_back(e);
        }
        hj["holes"] = holes;
        hj["everyHoleInMaxFamily"] = hr.everyHoleInMaxFamily;
        sg["holes"] = hj;
    }
    rep["semigroup"] = sg;

    ordered_json warn = ordered_json::array();
    for (const auto& w : s.warnings) warn.push_back(w);
    rep["warnings"] = warn;
    validate_report(rep);
    rep["timings"] = {{"totalMs", ms_since(t0)}};
    return rep;
}

ordered_json analyze_complex(const SimplicialComplex& c, const AnalysisOptions& opt,
                             ordered_json inputEcho) {
    auto t0 = Clock::now();
    ordered_json rep = report_skeleton(std::move(inputEcho));

    RingPtr ring;
    std::vector<Poly> I = sr_ideal(c, &ring);
    rep["ring"] = ring_json(ring);
    const int dim = c.dim() + 1;
    CoreResult cr = analyze_core(ring, I, dim, opt);
    if (!I.empty() && dim_from_initial_ideal(cr.gb) != dim)
        throw InternalError(
            "initial-ideal dimension disagrees with the face dimension");
    {
        ordered_json invs = invariants_json(cr);
        for (auto& [k, v] : invs.items()) rep[k] = v;
    }
    rep["trace"] = trace_json(cr, opt);
    rep["type2Shortcut"] = type2_json(cr.type2);
    rep["hilbertBurch"] =
        hb_json(hilbert_burch_audit(cr.minimalGens, cr.res, dim, opt.limits));

    ordered_json cx;
    cx["vertices"] = c.n;
    ordered_json fj = ordered_json::array();
    for (const auto& f : c.facets) {
        ordered_json one = ordered_json::array();
        for (int v : f) one.push_back(v);
        fj.push_back(one);
    }
    cx["facets"] = fj;
    cx["dim"] = c.dim();

    OneDimReport cls = classify_1dim(c);
    cx["classification"] = one_dim_class_name(cls.cls);
    if (cls.cls != OneDimClass::NotOneDim) {
        cx["connected"] = cls.connected;
        cx["predictedNearlyGorenstein"] = cls.predictedNearlyGorenstein;
        cx["predictedGorenstein"] = cls.predictedGorenstein;
        if (cls.connected && cr.nearlyGorenstein) {
            if (cls.predictedNearlyGorenstein != *cr.nearlyGorenstein)
                throw InternalError(
                    "combinatorial 1-dim classification disagrees with the trace "
                    "verdict");
            if (cr.inv.isGorenstein &&
                cls.predictedGorenstein != *cr.inv.isGorenstein)
                throw InternalError(
                    "combinatorial Gorenstein prediction disagrees with the "
                    "resolution");
            cx["predictionAgrees"] = true;
        }
    }
    LocalGorensteinReport lg = locally_gorenstein(c, opt.limits);
    ordered_json lgj;
    lgj["pure"] = lg.pure;
    lgj["locallyGorenstein"] = lg.locallyGorenstein;
    ordered_json pv = ordered_json::array();
    for (auto [v, g] : lg.perVertex) pv.push_back({v, g});
    lgj["perVertex"] = pv;
    cx["locallyGorenstein"] = lgj;
    // nearly Gorenstein CM complexes are locally Gorenstein
    if (cr.nearlyGorenstein && *cr.nearlyGorenstein && !lg.locallyGorenstein)
        throw InternalError("nearly Gorenstein complex failed the local "
                            "Gorenstein audit");

    AlmostGorenstein1DimReport ag = almost_gorenstein_1dim(c);
    ordered_json agj;
    agj["applicable"] = ag.applicable;
    if (ag.applicable) {
        agj["value"] = ag.value;
        agj["definitionDependent"] = ag.definitionDependent;
    } else {
        agj["value"] = nullptr;
    }
    cx["almostGorenstein1Dim"] = agj;
    rep["complex"] = cx;

    ordered_json warn = ordered_json::array();
    for (const auto& w : c.warnings) warn.push_back(w);
    rep["warnings"] = warn;
    validate_report(rep);
    rep["timings"] = {{"totalMs", ms_since(t0)}};
    return rep;
}

ordered_json analyze_input(const ordered_json& input, const AnalysisOptions& opt) {
    if (!input.is_object() || !input.contains("type") || !input["type"].is_string())
        throw InputError("input must be an object with a string \"type\" field");
    const std::string type = input["type"].get<std::string>();
    if (type == "semigroup") {
        if (!input.contains("generators") || !input["generators"].is_array())
            throw InputError("semigroup input needs a \"generators\" array");
        std::vector<IVec> gens;
        for (const auto& g : input["generators"]) {
            IVec v;
            for (const auto& e : g) v.push_back(e.get<long long>());
            gens.push_back(v);
        }
        return analyze_semigroup(validate_semigroup(gens), opt, input);
    }
    if (type == "numerical_curve") {
        if (!input.contains("exponents") || !input["exponents"].is_array())
            throw InputError("numerical_curve input needs an \"exponents\" array");
        std::vector<long long> exps;
        for (const auto& e : input["exponents"]) exps.push_back(e.get<long long>());
        return analyze_semigroup(numerical_curve(exps), opt, input);
    }
    if (type == "ideal") {
        if (!input.contains("variables") || !input["variables"].is_array())
            throw InputError("ideal input needs a \"variables\" array");
        std::vector<std::string> vars;
        for (const auto& v : input["variables"]) vars.push_back(v.get<std::string>());
        std::vector<int64_t> weights;
        if (input.contains("weights"))
            for (const auto& w : input["weights"]) weights.push_back(w.get<int64_t>());
        RingPtr ring = make_ring(vars, TermOrder{opt.order}, weights);
        std::vector<Poly> gens;
        if (!input.contains("generators") || !input["generators"].is_array())
            throw InputError("ideal input needs a \"generators\" array");
        for (const auto& g : input["generators"])
            gens.push_back(parse_poly(ring, g.get<std::string>()));
        return analyze_ideal(ring, gens, opt, input);
    }
    if (type == "complex") {
        if (!input.contains("vertices") || !input.contains("facets"))
            throw InputError("complex input needs \"vertices\" and \"facets\"");
        std::vector<std::vector<int>> facets;
        for (const auto& f : input["facets"]) {
            std::vector<int> face;
            for (const auto& v : f) face.push_back(v.get<int>());
            facets.push_back(face);
        }
        return analyze_complex(make_complex(input["vertices"].get<int>(), facets),
                               opt, input);
    }
    throw InputError("unknown input type \"" + type + "\"");
}

std::string report_text(const ordered_json& rep) {
    std::string s;
    auto line = [&](const std::string& k, const ordered_json& v) {
        s += k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    };
    line("dim", rep["dim"]);
    line("codim", rep["codim"]);
    line("pd", rep["pd"]);
    line("Cohen-Macaulay", rep["isCM"]);
    line("type", rep["type"]);
    line("level", rep["isLevel"]);
    line("Gorenstein", rep["isGorenstein"]);
    line("nearly Gorenstein", rep["isNearlyGorenstein"]);
    line("h-vector", rep["hilbert"]["hVector"]);
    line("Hilbert numerator", rep["hilbert"]["numerator"]);
    if (rep["trace"]["computed"].get<bool>()) {
        line("trace contains m", rep["trace"]["traceContainsM"]);
        line("punctured index", rep["trace"]["puncturedIndex"]);
        line("trace equals", rep["trace"]["traceEquals"]);
    }
    line("betti", rep["betti"]);
    return s;
}

}  // namespace ringtrace
