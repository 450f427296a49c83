#include "cameral/cameral.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <functional>
#include <new>
#include <string>

#include "cameral/problem.hpp"

struct cc_problem {
    cameral::ProblemDoc doc;
};

namespace {

thread_local std::string last_error;

cc_status fail(cc_status status, const std::string& message) {
    last_error = message;
    return status;
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

cameral::RunOptions run_options(const cc_options* opts) {
    cameral::RunOptions run;
    if (opts == nullptr) return run;
    if (opts->order != 0) run.order = opts->order;
    if (opts->float_format == 0) run.format = cameral::NumberFormat::exact;
    if (opts->float_format == 1) run.format = cameral::NumberFormat::decimal;
    return run;
}

// Every entry point funnels through here so that no exception crosses the C
// boundary.
template <class Body>
cc_status guarded(Body&& body) {
    last_error.clear();
    try {
        return body();
    } catch (const cameral::Error& e) {
        return fail(static_cast<cc_status>(static_cast<int>(e.kind())), e.what());
    } catch (const nlohmann::json::exception& e) {
        return fail(CC_ERR_INPUT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CC_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(CC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(CC_ERR_INTERNAL, "unknown failure");
    }
}

cc_status report_command(const cc_problem* problem, char** report,
                         const std::function<nlohmann::ordered_json(const cameral::ProblemDoc&)>& run) {
    if (report == nullptr) return fail(CC_ERR_INPUT, "report pointer is NULL");
    *report = nullptr;
    if (problem == nullptr) return fail(CC_ERR_INPUT, "problem is NULL");
    return guarded([&] {
        const auto start = std::chrono::steady_clock::now();
        nlohmann::ordered_json out = run(problem->doc);
        const std::chrono::duration<double, std::milli> elapsed = std::chrono::steady_clock::now() - start;
        out["timing_ms"] = elapsed.count();
        *report = duplicate(out.dump(2));
        return CC_OK;
    });
}

bool text_ok(const char* s) { return s != nullptr; }

}  // namespace

extern "C" {

cc_status cc_problem_parse(const char* json_text, cc_problem** out) {
    if (out == nullptr) return fail(CC_ERR_INPUT, "output pointer is NULL");
    *out = nullptr;
    if (json_text == nullptr) return fail(CC_ERR_INPUT, "document is NULL");
    return guarded([&] {
        *out = new cc_problem{cameral::parse_problem(json_text)};
        return CC_OK;
    });
}

void cc_problem_free(cc_problem* problem) { delete problem; }

cc_status cc_analyze(const cc_problem* problem, const cc_options* opts, char** report) {
    return report_command(problem, report,
                          [&](const cameral::ProblemDoc& doc) { return analyze_report(doc, run_options(opts)); });
}

cc_status cc_eval(const cc_problem* problem, const char* beta, const char* gamma, const char* delta,
                  const char* evaluator, const cc_options* opts, char** report) {
    if (!text_ok(beta) || !text_ok(gamma) || !text_ok(delta) || !text_ok(evaluator)) {
        if (report != nullptr) *report = nullptr;
        return fail(CC_ERR_INPUT, "eval needs beta, gamma, delta and an evaluator");
    }
    return report_command(problem, report, [&](const cameral::ProblemDoc& doc) {
        return eval_report(doc, beta, gamma, delta, evaluator, run_options(opts));
    });
}

cc_status cc_tensor(const cc_problem* problem, const char* basis_csv, const char* evaluator, const cc_options* opts,
                    char** report) {
    if (!text_ok(basis_csv) || !text_ok(evaluator)) {
        if (report != nullptr) *report = nullptr;
        return fail(CC_ERR_INPUT, "tensor needs a basis and an evaluator");
    }
    return report_command(problem, report, [&](const cameral::ProblemDoc& doc) {
        return tensor_report(doc, basis_csv, evaluator, run_options(opts));
    });
}

cc_status cc_verify(const cc_problem* problem, int trials, uint64_t seed, const cc_options* opts, char** report) {
    bool passed = true;
    const cc_status status = report_command(problem, report, [&](const cameral::ProblemDoc& doc) {
        auto out = verify_report(doc, trials, seed, run_options(opts));
        passed = out["passed"].get<bool>();
        return out;
    });
    if (status == CC_OK && !passed) return fail(CC_ERR_INTERNAL, "identity suite failed");
    return status;
}

void cc_string_free(char* s) { std::free(s); }

const char* cc_last_error(void) { return last_error.c_str(); }

const char* cc_status_name(cc_status status) {
    switch (status) {
        case CC_OK: return "ok";
        case CC_ERR_INPUT: return "input error";
        case CC_ERR_DEGENERATE: return "degenerate cover";
        case CC_ERR_IRRATIONAL: return "irrational branch point";
        case CC_ERR_INTERNAL: return "internal assertion";
    }
    return "unknown status";
}

const char* cc_version(void) { return "0.1.0"; }

}  // extern "C"
