// cameral-cubic: command line front end over the C library.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cameral/cameral.h"

namespace {

using Json = nlohmann::ordered_json;

struct Args {
    std::string file;
    int order = 0;
    std::string format;
    bool json = false;
    std::string evaluator;
    std::string beta, gamma, delta;
    std::string basis;
    int trials = 20;
    std::uint64_t seed = 1;
};

std::string text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string list_text(const Json& j) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + text(j[i]);
    return out + "]";
}

void print_analyze(const Json& r) {
    std::cout << "characteristic polynomial: " << text(r["characteristic_polynomial"]) << "\n"
              << "discriminant: " << text(r["discriminant"]["text"]) << "\n"
              << "root count: " << r["root_count"].dump() << "\n";
    if (!r["genus"].is_null()) std::cout << "genus: " << r["genus"].dump() << "\n";
    std::cout << "branch points (" << r["branch_points"].size() << "):\n";
    for (const auto& bp : r["branch_points"])
        std::cout << "  z0 = " << text(bp["z0"]) << "  mu = " << text(bp["mu"])
                  << "  spectators = " << list_text(bp["spectators"]) << "  radicand = " << text(bp["radicand"])
                  << "\n";
    for (const auto& c : r["first_order_checks"])
        std::cout << "first-order check " << text(c["deformation"]) << ": ok, slope " << text(c["slope"]) << "\n";
    std::cout << "model: " << text(r["model"]) << "\n";
}

void print_eval(const Json& r) {
    for (const auto& [name, v] : r["values"].items()) {
        std::cout << name << ": " << text(v["total"]);
        std::string sep = "  (";
        for (const auto& p : v["per_branch_point"]) {
            std::cout << sep << "z0=" << text(p["z0"]) << ": " << text(p["value"]);
            sep = ", ";
        }
        std::cout << (sep == ", " ? ")" : "") << "\n";
    }
    if (r.contains("ratios"))
        for (const auto& [name, v] : r["ratios"].items())
            std::cout << "ratio " << name << ": " << (v.is_null() ? "undefined" : text(v)) << "\n";
    for (const auto& n : r["notes"]) std::cout << "note: " << text(n) << "\n";
}

void print_tensor(const Json& r) {
    std::cout << "evaluator " << text(r["evaluator"]) << ", dim " << r["dim"].dump() << ", "
              << r["distinct_components"].dump() << " components\n";
    for (const auto& c : r["components"]) {
        const auto& n = c["names"];
        std::cout << "  c(" << text(n[0]) << ", " << text(n[1]) << ", " << text(n[2]) << ") = " << text(c["value"])
                  << "\n";
    }
    std::cout << "symmetry defect: " << text(r["symmetry_defect"]) << "\n";
}

void print_verify(const Json& r) {
    std::cout << "trials " << r["trials"].dump() << ", seed " << r["seed"].dump() << "\n";
    for (const auto& c : r["checks"]) {
        std::cout << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << text(c["name"]) << " ("
                  << c["instances"].dump() << " instances)";
        if (!c["detail"].get<std::string>().empty()) std::cout << ": " << text(c["detail"]);
        std::cout << "\n";
    }
    for (const auto& [name, v] : r["constants"].items())
        if (!v.is_null()) std::cout << "constant " << name << " = " << text(v) << "\n";
    std::cout << (r["passed"].get<bool>() ? "all checks passed" : "identity suite FAILED") << "\n";
}

int run(const std::string& command, const Args& a) {
    std::ifstream in(a.file);
    if (!in) {
        std::cerr << "error (input error): cannot read " << a.file << "\n";
        return CC_ERR_INPUT;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();

    cc_problem* problem = nullptr;
    cc_status status = cc_problem_parse(buffer.str().c_str(), &problem);
    if (status != CC_OK) {
        std::cerr << "error (" << cc_status_name(status) << "): " << cc_last_error() << "\n";
        return status;
    }

    cc_options opts{a.order, a.format.empty() ? -1 : (a.format == "float" ? 1 : 0)};
    char* report = nullptr;
    if (command == "analyze")
        status = cc_analyze(problem, &opts, &report);
    else if (command == "eval")
        status = cc_eval(problem, a.beta.c_str(), a.gamma.c_str(), a.delta.c_str(),
                         a.evaluator.empty() ? "all" : a.evaluator.c_str(), &opts, &report);
    else if (command == "tensor")
        status = cc_tensor(problem, a.basis.c_str(), a.evaluator.empty() ? "pantev" : a.evaluator.c_str(), &opts,
                           &report);
    else
        status = cc_verify(problem, a.trials, a.seed, &opts, &report);
    const std::string message = cc_last_error();
    cc_problem_free(problem);

    if (report != nullptr) {
        if (a.json) {
            std::cout << report << "\n";
        } else {
            const Json r = Json::parse(report);
            if (command == "analyze") print_analyze(r);
            if (command == "eval") print_eval(r);
            if (command == "tensor") print_tensor(r);
            if (command == "verify") print_verify(r);
        }
        cc_string_free(report);
    }
    if (status != CC_OK) std::cerr << "error (" << cc_status_name(status) << "): " << message << "\n";
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Donagi-Markman cubic on affine spectral cover models"};
    app.require_subcommand(1);
    app.fallthrough();
    Args a;
    app.add_option("--order", a.order, "series working order K (>= 4); overrides the document")
        ->check(CLI::Range(4, 64));
    app.add_option("--format", a.format, "render values as exact strings or decimals")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_flag("--json", a.json, "print the machine-readable report");

    auto* analyze = app.add_subcommand("analyze", "branch points, discriminant and genus of the cover");
    auto* eval = app.add_subcommand("eval", "evaluate the cubic on three named deformations");
    auto* tensor = app.add_subcommand("tensor", "symmetric cubic tensor in a basis of named deformations");
    auto* verify = app.add_subcommand("verify", "randomized identity suite");
    for (auto* sub : {analyze, eval, tensor, verify})
        sub->add_option("file", a.file, "problem document (JSON)")->required()->check(CLI::ExistingFile);

    eval->add_option("--beta", a.beta)->required();
    eval->add_option("--gamma", a.gamma)->required();
    eval->add_option("--delta", a.delta)->required();
    eval->add_option("--evaluator", a.evaluator, "pantev, ks, symmetric, sl2 or all (default)")
        ->check(CLI::IsMember({"pantev", "ks", "symmetric", "sl2", "all"}));
    tensor->add_option("--basis", a.basis, "comma-separated deformation names")->required();
    tensor->add_option("--evaluator", a.evaluator, "pantev (default), ks, symmetric or sl2")
        ->check(CLI::IsMember({"pantev", "ks", "symmetric", "sl2"}));
    verify->add_option("--trials", a.trials, "random (beta, gamma, delta) triples")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", a.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return CC_ERR_INPUT;
    }

    for (auto* sub : {analyze, eval, tensor, verify})
        if (sub->parsed()) return run(sub->get_name(), a);
    return CC_ERR_INPUT;
}
