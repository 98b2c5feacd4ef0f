#include "ringtrace/corpus.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>

#include "ringtrace/errors.hpp"

namespace ringtrace {

namespace fs = std::filesystem;

std::vector<CorpusItem> load_corpus(const std::string& dir) {
    std::vector<fs::path> files;
    if (!fs::is_directory(dir))
        throw InputError("corpus directory not found: " + dir);
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    std::vector<CorpusItem> items;
    for (const auto& f : files) {
        std::ifstream in(f);
        ordered_json j;
        try {
            j = ordered_json::parse(in);
        } catch (const std::exception& e) {
            throw InputError("corpus file " + f.string() + ": " + e.what());
        }
        CorpusItem item;
        item.path = f.string();
        item.id = j.value("id", f.stem().string());
        item.citation = j.value("citation", std::string("(uncited)"));
        item.slow = j.value("slow", false);
        item.resourceCapAllowed = j.value("resourceCapAllowed", false);
        if (j.contains("options")) item.options = j["options"];
        if (!j.contains("input") || !j.contains("expect"))
            throw InputError("corpus file " + f.string() +
                             " needs \"input\" and \"expect\"");
        item.input = j["input"];
        item.expect = j["expect"];
        items.push_back(std::move(item));
    }
    return items;
}

namespace {

void compare_rec(const ordered_json& expect, const ordered_json& report,
                 const std::string& path, std::vector<std::string>& out) {
    if (expect.is_object()) {
        if (!report.is_object()) {
            out.push_back(path + ": expected an object, report has " + report.dump());
            return;
        }
        for (const auto& [k, v] : expect.items()) {
            if (!report.contains(k)) {
                out.push_back(path + "/" + k + ": missing in report");
                continue;
            }
            compare_rec(v, report[k], path + "/" + k, out);
        }
        return;
    }
    if (expect != report)
        out.push_back(path + ": expected " + expect.dump() + ", got " + report.dump());
}

}  // namespace

std::vector<std::string> compare_expected(const ordered_json& expect,
                                          const ordered_json& report) {
    std::vector<std::string> out;
    compare_rec(expect, report, "", out);
    return out;
}

CorpusOutcome run_corpus_item(const CorpusItem& item, AnalysisOptions opt) {
    if (item.options.is_object()) {
        if (item.options.contains("degreeBound"))
            opt.limits.degreeCap = item.options["degreeBound"].get<int64_t>();
        if (item.options.contains("pairCap"))
            opt.limits.pairCap = item.options["pairCap"].get<size_t>();
        if (item.options.contains("kmax"))
            opt.kmax = item.options["kmax"].get<int>();
    }
    CorpusOutcome out;
    out.id = item.id;
    out.citation = item.citation;
    out.ran = true;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ordered_json rep = analyze_input(item.input, opt);
        out.mismatches = compare_expected(item.expect, rep);
        out.pass = out.mismatches.empty();
    } catch (const ResourceError& e) {
        out.resourceCapped = true;
        out.pass = item.resourceCapAllowed;
        if (!out.pass) out.mismatches.push_back(std::string("resource error: ") + e.what());
    }
    out.ms = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
    return out;
}

CorpusRunResult run_corpus(const std::vector<CorpusItem>& items,
                           const std::string& filter, bool includeSlow,
                           const AnalysisOptions& baseOpt, int jobs) {
    CorpusRunResult result;
    std::vector<const CorpusItem*> todo;
    for (const auto& item : items) {
        if (!filter.empty() && item.id.find(filter) == std::string::npos) continue;
        if (item.slow && !includeSlow) {
            ++result.skipped;
            CorpusOutcome o;
            o.id = item.id;
            o.citation = item.citation;
            o.ran = false;
            result.outcomes.push_back(o);
            continue;
        }
        todo.push_back(&item);
    }
    std::vector<CorpusOutcome> ran(todo.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < todo.size(); ++i)
            ran[i] = run_corpus_item(*todo[i], baseOpt);
    } else {
        std::atomic<size_t> next{0};
        auto work = [&]() {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= todo.size()) break;
                ran[i] = run_corpus_item(*todo[i], baseOpt);
            }
        };
        std::vector<std::future<void>> fus;
        for (int t = 0; t < jobs; ++t)
            fus.push_back(std::async(std::launch::async, work));
        for (auto& f : fus) f.get();
    }
    for (auto& o : ran) {
        if (!o.pass) ++result.failures;
        result.outcomes.push_back(std::move(o));
    }
    return result;
}

}  // namespace ringtrace
