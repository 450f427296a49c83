#include "cameral/problem.hpp"

#include <algorithm>
#include <sstream>

namespace cameral {

using Json = nlohmann::ordered_json;

namespace {

constexpr int kMaxRank = 8;
constexpr int kMaxOrder = 64;

const char* const kModelNote =
    "affine chart: the canonical bundle is trivialized by dz on the z-line, data are polynomial, and every "
    "residue is taken at a branch point in the chart z = z0 + t^2";

[[noreturn]] void schema(const std::string& field, const std::string& what) {
    throw InputError(field + ": " + what);
}

Rational parse_scalar(const Json& j, const std::string& field) {
    if (!j.is_string()) schema(field, "expected an exact rational as a string such as \"-3/4\"");
    const std::string text = j.get<std::string>();
    const auto r = text.empty() ? std::nullopt : Rational::parse(text);
    if (!r) schema(field, "malformed rational '" + text + "' (expected [+-]digits[/digits], nonzero denominator)");
    return *r;
}

std::vector<ZPoly> parse_poly_list(const Json& j, const std::string& field, int rank) {
    if (!j.is_array()) schema(field, "expected a list of coefficient lists");
    if (static_cast<int>(j.size()) != rank)
        schema(field, "rank " + std::to_string(rank) + " needs " + std::to_string(rank) + " polynomials, got " +
                          std::to_string(j.size()));
    std::vector<ZPoly> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_coefficients(j[i], field + "[" + std::to_string(i) + "]"));
    return out;
}

Json echo_polys(const std::vector<ZPoly>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) {
        Json cs = Json::array();
        for (const auto& c : p.coeffs()) cs.push_back(c.str());
        out.push_back(std::move(cs));
    }
    return out;
}

void require_keys(const Json& obj, const std::string& field, std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; });
        if (!known) schema(field.empty() ? item.key() : field + "." + item.key(), "unknown field");
    }
}

struct Effective {
    int order;
    NumberFormat format;
};

Effective effective(const ProblemDoc& doc, const RunOptions& run) {
    const int order = run.order.value_or(doc.options.order);
    if (order < 4 || order > kMaxOrder)
        throw InputError("order must be between 4 and " + std::to_string(kMaxOrder) + " (got " +
                         std::to_string(order) + ")");
    return {order, run.format.value_or(doc.options.format)};
}

Json scalar(const Rational& r, NumberFormat f) {
    if (f == NumberFormat::decimal) return r.to_double();
    return r.str();
}

Json scalars(const std::vector<Rational>& rs, NumberFormat f) {
    Json out = Json::array();
    for (const auto& r : rs) out.push_back(scalar(r, f));
    return out;
}

std::string format_name(NumberFormat f) { return f == NumberFormat::exact ? "exact" : "float"; }

Json header(const char* command, const ProblemDoc& doc, const Effective& eff) {
    Json out;
    out["command"] = command;
    out["input"] = doc.echo;
    out["order"] = eff.order;
    out["format"] = format_name(eff.format);
    return out;
}

CoverModel cover_of(const ProblemDoc& doc) { return build_cover(doc.lie_type, doc.rank, doc.invariants); }

const TangentVector& lookup(const ProblemDoc& doc, const std::string& name, const char* role) {
    const auto it = doc.deformations.find(name);
    if (it != doc.deformations.end()) return it->second;
    std::string known;
    for (const auto& [k, v] : doc.deformations) known += (known.empty() ? "" : ", ") + k;
    throw InputError(std::string(role) + ": no deformation named '" + name + "' (available: " +
                     (known.empty() ? "none" : known) + ")");
}

Json cubic_value(const CubicValue& v, NumberFormat f) {
    Json out;
    out["total"] = scalar(v.total, f);
    Json parts = Json::array();
    for (const auto& c : v.per_branch_point) parts.push_back({{"z0", scalar(c.z0, f)}, {"value", scalar(c.value, f)}});
    out["per_branch_point"] = std::move(parts);
    return out;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::string pretty_lambda(const LambdaPoly& p) {
    std::string out;
    const auto& cs = p.coeffs();
    for (std::size_t e = cs.size(); e-- > 0;) {
        const ZPoly& c = cs[e];
        if (c.is_zero()) continue;
        const std::string power = e == 0 ? "" : (e == 1 ? "lambda" : "lambda^" + std::to_string(e));
        if (c.is_constant()) {
            const Rational r = c.coeffs()[0];
            const Rational mag = abs(r);
            std::string term = e == 0 ? mag.str() : (mag == Rational(1) ? power : mag.str() + "*" + power);
            if (out.empty())
                out = (r.sign() < 0 ? "-" : "") + term;
            else
                out += (r.sign() < 0 ? " - " : " + ") + term;
        } else if (e == 0) {
            const std::string text = pretty(c);
            if (out.empty())
                out = text;
            else if (text.front() == '-')
                out += " - " + text.substr(1);
            else
                out += " + " + text;
        } else {
            out += (out.empty() ? "(" : " + (") + pretty(c) + ")*" + power;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

ZPoly parse_coefficients(const Json& list, const std::string& field) {
    if (!list.is_array()) schema(field, "expected a list of coefficient strings in ascending degree");
    std::vector<Rational> cs;
    for (std::size_t i = 0; i < list.size(); ++i)
        cs.push_back(parse_scalar(list[i], field + "[" + std::to_string(i) + "]"));
    return ZPoly(std::move(cs), "z");
}

std::string pretty(const ZPoly& p) {
    std::string out;
    const auto& cs = p.coeffs();
    for (std::size_t e = cs.size(); e-- > 0;) {
        const Rational& c = cs[e];
        if (c.is_zero()) continue;
        const Rational mag = abs(c);
        const std::string power = e == 0 ? "" : (e == 1 ? p.var() : p.var() + "^" + std::to_string(e));
        const std::string term = e == 0 ? mag.str() : (mag == Rational(1) ? power : mag.str() + "*" + power);
        if (out.empty())
            out = (c.sign() < 0 ? "-" : "") + term;
        else
            out += (c.sign() < 0 ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

ProblemDoc parse_problem(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) schema("document", "expected a JSON object");
    require_keys(j, "", {"lie_type", "rank", "invariants", "deformations", "options"});

    ProblemDoc doc;
    if (!j.contains("lie_type") || !j["lie_type"].is_string()) schema("lie_type", "expected a string such as \"A\"");
    doc.lie_type = parse_lie_type(j["lie_type"].get<std::string>());
    if (doc.lie_type != LieType::A)
        schema("lie_type", "unsupported lie_type " + to_string(doc.lie_type) + " (covers are built for type A only)");

    if (!j.contains("rank") || !j["rank"].is_number_integer()) schema("rank", "expected an integer");
    const long rank = j["rank"].get<long>();
    if (rank < 1 || rank > kMaxRank) schema("rank", "must be between 1 and " + std::to_string(kMaxRank));
    doc.rank = static_cast<int>(rank);

    if (!j.contains("invariants")) schema("invariants", "missing");
    doc.invariants = parse_poly_list(j["invariants"], "invariants", doc.rank);

    if (j.contains("deformations")) {
        const Json& d = j["deformations"];
        if (!d.is_object()) schema("deformations", "expected an object mapping names to coefficient lists");
        for (const auto& item : d.items()) {
            if (item.key().empty() || item.key().find(',') != std::string::npos)
                schema("deformations", "deformation names must be nonempty and free of commas");
            doc.deformations[item.key()] =
                TangentVector{parse_poly_list(item.value(), "deformations." + item.key(), doc.rank)};
        }
    }

    if (j.contains("options")) {
        const Json& o = j["options"];
        if (!o.is_object()) schema("options", "expected an object");
        require_keys(o, "options", {"order", "format"});
        if (o.contains("order")) {
            if (!o["order"].is_number_integer()) schema("options.order", "expected an integer");
            const long order = o["order"].get<long>();
            if (order < 4 || order > kMaxOrder)
                schema("options.order", "must be between 4 and " + std::to_string(kMaxOrder));
            doc.options.order = static_cast<int>(order);
        }
        if (o.contains("format")) {
            const std::string f = o["format"].is_string() ? o["format"].get<std::string>() : "";
            if (f == "exact")
                doc.options.format = NumberFormat::exact;
            else if (f == "float")
                doc.options.format = NumberFormat::decimal;
            else
                schema("options.format", "expected \"exact\" or \"float\"");
        }
    }

    doc.echo["lie_type"] = to_string(doc.lie_type);
    doc.echo["rank"] = doc.rank;
    doc.echo["invariants"] = echo_polys(doc.invariants);
    Json defs = Json::object();
    for (const auto& [name, v] : doc.deformations) defs[name] = echo_polys(v.b);
    doc.echo["deformations"] = std::move(defs);
    doc.echo["options"] = {{"order", doc.options.order}, {"format", format_name(doc.options.format)}};
    return doc;
}

Json analyze_report(const ProblemDoc& doc, const RunOptions& run) {
    const Effective eff = effective(doc, run);
    const CubicContext ctx(cover_of(doc), eff.order);  // expands and checks every sheet
    const CoverModel& cover = ctx.cover();

    Json out = header("analyze", doc, eff);
    out["model"] = kModelNote;
    out["characteristic_polynomial"] = pretty_lambda(cover.char_poly);
    Json disc;
    disc["text"] = pretty(cover.disc);
    disc["coefficients"] = scalars(cover.disc.coeffs(), eff.format);
    out["discriminant"] = std::move(disc);
    out["root_count"] = cover.root_system.size();
    if (cover.root_system.rank == 1)
        out["genus"] = genus(cover);
    else
        out["genus"] = nullptr;

    Json rows = Json::array();
    for (const auto& bp : cover.branch_points) {
        Json row;
        row["z0"] = scalar(bp.z0, eff.format);
        row["mu"] = scalar(bp.mu, eff.format);
        row["spectators"] = scalars(bp.spectators, eff.format);
        row["radicand"] = scalar(bp.radicand, eff.format);
        rows.push_back(std::move(row));
    }
    out["branch_points"] = std::move(rows);

    Json first = Json::array();
    for (const auto& [name, v] : doc.deformations) {
        const FirstOrderCheck check = verify_first_order_family(cover, v);
        if (!check.ok()) throw InternalAssertion("first-order self test failed for deformation '" + name + "'");
        first.push_back({{"deformation", name}, {"value_matches", check.value_matches},
                         {"slope_matches", check.slope_matches}, {"slope", pretty(check.slope)}});
    }
    out["first_order_checks"] = std::move(first);
    return out;
}

Json eval_report(const ProblemDoc& doc, const std::string& beta, const std::string& gamma, const std::string& delta,
                 const std::string& evaluator, const RunOptions& run) {
    const Effective eff = effective(doc, run);
    const TangentVector& b = lookup(doc, beta, "beta");
    const TangentVector& g = lookup(doc, gamma, "gamma");
    const TangentVector& d = lookup(doc, delta, "delta");
    const bool all = evaluator == "all";
    std::vector<Evaluator> chosen;
    if (all)
        chosen = {Evaluator::pantev, Evaluator::ks, Evaluator::symmetric};
    else
        chosen = {parse_evaluator(evaluator)};

    const CubicContext ctx(cover_of(doc), eff.order);
    Json out = header("eval", doc, eff);
    out["arguments"] = {{"beta", beta}, {"gamma", gamma}, {"delta", delta}};
    out["evaluator"] = evaluator;
    Json notes = Json::array();
    if (all) {
        if (ctx.cover().root_system.rank == 1)
            chosen.push_back(Evaluator::sl2);
        else
            notes.push_back("sl2 evaluator skipped: it applies to rank 1 only");
    }

    std::vector<std::pair<Evaluator, Rational>> totals;
    Json values;
    for (Evaluator e : chosen) {
        const CubicValue v = evaluate(ctx, e, b, g, d);
        totals.emplace_back(e, v.total);
        values[to_string(e)] = cubic_value(v, eff.format);
    }
    out["values"] = std::move(values);
    if (all) {
        Json ratios;
        for (std::size_t i = 0; i < totals.size(); ++i)
            for (std::size_t k = i + 1; k < totals.size(); ++k) {
                const std::string key = to_string(totals[i].first) + "/" + to_string(totals[k].first);
                if (totals[k].second.is_zero())
                    ratios[key] = nullptr;
                else
                    ratios[key] = scalar(totals[i].second / totals[k].second, eff.format);
            }
        out["ratios"] = std::move(ratios);
    }
    out["notes"] = std::move(notes);
    return out;
}

Json tensor_report(const ProblemDoc& doc, const std::string& basis, const std::string& evaluator,
                   const RunOptions& run) {
    const Effective eff = effective(doc, run);
    if (evaluator == "all") throw InputError("tensor needs a single evaluator, not 'all'");
    const Evaluator e = parse_evaluator(evaluator);

    std::vector<std::string> names;
    std::stringstream in(basis);
    for (std::string item; std::getline(in, item, ',');) {
        item = trim(item);
        if (item.empty()) throw InputError("basis: empty deformation name in '" + basis + "'");
        names.push_back(item);
    }
    if (names.empty()) throw InputError("basis: at least one deformation name is required");
    std::vector<TangentVector> vectors;
    for (const auto& n : names) vectors.push_back(lookup(doc, n, "basis"));

    const CubicContext ctx(cover_of(doc), eff.order);
    const CubicTensor t = cubic_tensor(ctx, vectors, e);

    Json out = header("tensor", doc, eff);
    out["evaluator"] = to_string(e);
    out["basis"] = names;
    out["dim"] = t.dim;
    Json comps = Json::array();
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t j = i; j < t.dim; ++j)
            for (std::size_t k = j; k < t.dim; ++k)
                comps.push_back({{"indices", {i, j, k}},
                                 {"names", {names[i], names[j], names[k]}},
                                 {"value", scalar(t.at(i, j, k), eff.format)}});
    out["distinct_components"] = comps.size();
    out["components"] = std::move(comps);
    out["symmetry_defect"] = scalar(t.symmetry_defect, eff.format);
    return out;
}

Json verify_report(const ProblemDoc& doc, int trials, std::uint64_t seed, const RunOptions& run) {
    const Effective eff = effective(doc, run);
    if (trials < 0) throw InputError("trials must be nonnegative");
    const CubicContext ctx(cover_of(doc), eff.order);
    const CubicReport report = verify_identities(ctx, trials, seed);

    Json out = header("verify", doc, eff);
    out["trials"] = trials;
    out["seed"] = seed;
    Json checks = Json::array();
    for (const auto& c : report.checks)
        checks.push_back(
            {{"name", c.name}, {"passed", c.passed}, {"instances", c.instances}, {"detail", c.detail}});
    out["checks"] = std::move(checks);
    Json constants;
    const auto put = [&](const char* key, const std::optional<Rational>& r) {
        if (r)
            constants[key] = scalar(*r, eff.format);
        else
            constants[key] = nullptr;
    };
    put("pantev/symmetric", report.pantev_over_symmetric);
    put("sl2/pantev", report.sl2_over_pantev);
    out["constants"] = std::move(constants);
    out["passed"] = report.passed();
    return out;
}

}  // namespace cameral
