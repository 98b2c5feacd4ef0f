// Command-line front end: analyze a single input, run the built-in corpus,
// or run the randomized numerical-curve harness.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "ringtrace/corpus.hpp"
#include "ringtrace/errors.hpp"
#include "ringtrace/harness.hpp"

#ifndef RINGTRACE_CORPUS_DIR
#define RINGTRACE_CORPUS_DIR "corpus"
#endif

using namespace ringtrace;

namespace {

int run_analyze(const std::string& inputFile, const std::string& inlineJson,
                const std::string& curve, const AnalysisOptions& opt, bool jsonOut) {
    ordered_json input;
    if (!curve.empty()) {
        std::vector<long long> exps;
        std::string cur;
        for (char ch : curve + ",") {
            if (ch == ',') {
                if (!cur.empty()) exps.push_back(std::stoll(cur));
                cur.clear();
            } else {
                cur += ch;
            }
        }
        input["type"] = "numerical_curve";
        input["exponents"] = exps;
    } else if (!inlineJson.empty()) {
        input = ordered_json::parse(inlineJson);
    } else if (!inputFile.empty()) {
        std::ifstream in(inputFile);
        if (!in) throw InputError("cannot open input file " + inputFile);
        try {
            input = ordered_json::parse(in);
        } catch (const std::exception& e) {
            throw InputError("malformed JSON in " + inputFile + ": " + e.what());
        }
    } else {
        throw InputError("analyze needs --input, --inline, or --numerical-curve");
    }
    ordered_json rep = analyze_input(input, opt);
    if (jsonOut)
        std::cout << rep.dump(2) << "\n";
    else
        std::cout << report_text(rep);
    return 0;
}

int run_corpus_cmd(const std::string& dir, const std::string& filter,
                   bool includeSlow, const AnalysisOptions& opt, int jobs,
                   bool jsonOut) {
    auto items = load_corpus(dir);
    CorpusRunResult res = run_corpus(items, filter, includeSlow, opt, jobs);
    if (jsonOut) {
        ordered_json out = ordered_json::array();
        for (const auto& o : res.outcomes) {
            ordered_json j;
            j["id"] = o.id;
            j["citation"] = o.citation;
            j["ran"] = o.ran;
            j["pass"] = o.ran ? ordered_json(o.pass) : ordered_json(nullptr);
            j["resourceCapped"] = o.resourceCapped;
            j["mismatches"] = o.mismatches;
            out.push_back(j);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& o : res.outcomes) {
            std::string status = !o.ran          ? "SKIP (slow)"
                                 : o.pass        ? (o.resourceCapped
                                                        ? "PASS (resource cap)"
                                                        : "PASS")
                                                 : "FAIL";
            printf("%-16s %-28s %-20s %8.0f ms\n", o.id.c_str(),
                   o.citation.c_str(), status.c_str(), o.ms);
            for (const auto& m : o.mismatches) printf("    %s\n", m.c_str());
        }
        printf("%zu items, %d failures, %d skipped\n", res.outcomes.size(),
               res.failures, res.skipped);
    }
    return res.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of graded quotients: levelness, "
                 "Gorensteinness, canonical trace ideals"};
    app.require_subcommand(1);

    AnalysisOptions opt;
    std::string order = "degrevlex";
    int64_t degreeBound = opt.limits.degreeCap;
    size_t pairCap = opt.limits.pairCap;
    int kmax = opt.kmax;
    app.add_option("--order", order, "term order: degrevlex or lex")
        ->check(CLI::IsMember({"degrevlex", "lex"}));
    app.add_option("--degree-bound", degreeBound, "reduction degree cap (default 200)");
    app.add_option("--pair-cap", pairCap, "S-pair cap (default 2000000)");
    app.add_option("--kmax", kmax, "punctured-index cutoff (default 6)");

    auto* analyze = app.add_subcommand("analyze", "analyze one input");
    std::string inputFile, inlineJson, curve;
    bool jsonOut = false;
    long long holesBound = -1;
    analyze->add_option("--input", inputFile, "JSON input file");
    analyze->add_option("--inline", inlineJson, "inline JSON input");
    analyze->add_option("--numerical-curve", curve,
                        "comma-separated exponents, e.g. 0,1,3,4,9,14");
    analyze->add_flag("--json", jsonOut, "emit the full JSON report");
    analyze->add_option("--holes-bound", holesBound,
                        "also enumerate semigroup holes up to this degree");

    auto* corpus = app.add_subcommand("corpus", "run the built-in example corpus");
    std::string corpusDir = RINGTRACE_CORPUS_DIR;
    std::string filter;
    bool includeSlow = false;
    bool corpusJson = false;
    int jobs = 1;
    corpus->add_option("--corpus-dir", corpusDir, "corpus directory");
    corpus->add_option("--filter", filter, "run only items whose id contains this");
    corpus->add_flag("--include-slow", includeSlow, "include items marked slow");
    corpus->add_option("--jobs", jobs, "parallel corpus workers")->check(CLI::Range(1, 64));
    corpus->add_flag("--json", corpusJson, "emit JSON results");

    auto* harness = app.add_subcommand(
        "harness", "randomized numerical-curve property harness");
    int instances = 200;
    uint64_t seed = 1;
    int maxGens = 5;
    int maxExp = 12;
    bool harnessJson = false;
    harness->add_option("--instances", instances, "instance count (default 200)");
    harness->add_option("--seed", seed, "RNG seed (default 1)");
    harness->add_option("--max-gens", maxGens, "max generators (default 5)");
    harness->add_option("--max-exp", maxExp, "max exponent (default 12)");
    harness->add_flag("--json", harnessJson, "emit JSON results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    opt.order = (order == "lex") ? OrderKind::Lex : OrderKind::DegRevLex;
    opt.limits.degreeCap = degreeBound;
    opt.limits.pairCap = pairCap;
    opt.kmax = kmax;

    try {
        if (analyze->parsed()) {
            if (holesBound >= 0) opt.holesBound = holesBound;
            return run_analyze(inputFile, inlineJson, curve, opt, jsonOut);
        }
        if (corpus->parsed())
            return run_corpus_cmd(corpusDir, filter, includeSlow, opt, jobs,
                                  corpusJson);
        if (harness->parsed()) {
            HarnessResult hr =
                run_curve_harness(instances, seed, maxGens, maxExp, opt);
            if (harnessJson) {
                ordered_json j;
                j["instances"] = hr.instances;
                j["cmInstances"] = hr.cmInstances;
                j["violations"] = hr.violations;
                j["notes"] = hr.notes;
                std::cout << j.dump(2) << "\n";
            } else {
                printf("%d instances (%d Cohen-Macaulay), %d violations\n",
                       hr.instances, hr.cmInstances, hr.violations);
                for (const auto& n : hr.notes) printf("  %s\n", n.c_str());
            }
            return hr.violations == 0 ? 0 : 3;
        }
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
