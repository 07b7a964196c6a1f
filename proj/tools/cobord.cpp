// cobord: Chern numbers, Landweber ideals and fixed-locus bounds from the
// command line. JSON output is canonical and byte-stable.

#include <cstdlib>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <cobord/json_io.hpp>

#include "suites.hpp"

using namespace cobord;
using nlohmann::json;

namespace {

struct Options {
    int truncation = kDefaultTruncation;
    int p = 2;
    std::string group = "1";
    std::string format = "table";
};

int default_truncation()
{
    if (const char* env = std::getenv("COBORD_TRUNC")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("COBORD_TRUNC is not an integer: ") + env);
        }
    }
    return kDefaultTruncation;
}

std::string dim_string(const std::optional<int>& d) { return d ? std::to_string(*d) : "-inf"; }

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

void row(const std::string& key, const std::string& value)
{
    std::cout << key;
    for (std::size_t k = key.size(); k < 14; ++k)
        std::cout << ' ';
    std::cout << value << "\n";
}

VarietyExpr parse_checked(const Lazard& lazard, const std::string& text)
{
    VarietyExpr e = VarietyExpr::parse(text);
    if (e.max_dimension() > lazard.truncation())
        throw TruncationError("dimension " + std::to_string(e.max_dimension()) + " exceeds truncation " +
                              std::to_string(lazard.truncation()) + " (raise --trunc)");
    return e;
}

int cmd_class(const Options& o, const std::string& text)
{
    Lazard lazard(o.truncation);
    const VarietyExpr e = parse_checked(lazard, text);
    const CobordismClass z = lazard.geometry().evaluate(e);
    const GenPoly coords = lazard.to_gen_coords(z);
    if (o.format == "json") {
        print_json(io::to_json(z, e, &coords, &lazard.base_basis()));
        return 0;
    }
    row("variety", e.to_string());
    row("dim", z.dim() ? std::to_string(*z.dim()) : "mixed");
    if (auto d = z.dim()) {
        for (const auto& alpha : partitions_of(*d))
            row("c_" + alpha.to_string(), z.chern_number(alpha).get_str());
    } else {
        for (const auto& [m, c] : z.image().terms())
            row("c_" + m.to_partition().to_string(), c.get_str());
    }
    row("generators", coords.to_string());
    return 0;
}

int cmd_bound(const Options& o, const std::string& text)
{
    Lazard lazard(o.truncation);
    const VarietyExpr e = parse_checked(lazard, text);
    const GroupDescriptor group = GroupDescriptor::parse(o.p, o.group);
    const BoundReport b = fixed_dim_lower_bound(lazard, lazard.geometry().evaluate(e), group, e.to_string());
    if (o.format == "json") {
        print_json(io::to_json(b));
        return 0;
    }
    row("class", b.class_summary);
    row("group", group.to_string() + " q=" + std::to_string(group.order()) + " r=" + std::to_string(group.rank()));
    row("in I_p(r)", b.in_Ipr ? "yes" : "no");
    row("reduced", b.reduced.to_string());
    row("bound", dim_string(b.lower_bound));
    row("certificate", b.certificate ? "l" + b.certificate->to_string() + " coeff " + b.certificate_coeff.get_str()
                                     : "none");
    return 0;
}

int cmd_fixedpoint(const Options& o, const std::string& text)
{
    Lazard lazard(o.truncation);
    const VarietyExpr e = parse_checked(lazard, text);
    const GroupDescriptor group = GroupDescriptor::parse(o.p, o.group);
    const bool forced = has_forced_fixed_point(lazard, lazard.geometry().evaluate(e), group);
    if (o.format == "json") {
        print_json({{"class", e.to_string()}, {"group", io::to_json(group)}, {"forced_fixed_point", forced}});
        return 0;
    }
    row("class", e.to_string());
    row("group", group.to_string());
    row("verdict", forced ? "every action has a fixed point" : "a fixed-point-free action is not excluded");
    return 0;
}

int cmd_chern_bound(const Options& o, const std::string& text, const std::string& alpha_text)
{
    Lazard lazard(o.truncation);
    const VarietyExpr e = parse_checked(lazard, text);
    const GroupDescriptor group = GroupDescriptor::parse(o.p, o.group);
    const CobordismClass z = lazard.geometry().evaluate(e);
    if (!z.dim())
        throw std::invalid_argument("chern-bound needs a class of pure dimension");
    std::vector<Partition> alphas;
    if (alpha_text.empty()) {
        alphas = partitions_of(*z.dim());
    } else {
        alphas.push_back(io::partition_from_json(json::parse("[" + alpha_text + "]")));
    }
    json out = json::array();
    for (const auto& alpha : alphas) {
        const auto b = chern_bound(lazard, z, alpha, group);
        if (o.format == "json")
            out.push_back({{"alpha", io::to_json(alpha)},
                           {"c_alpha", z.chern_number(alpha).get_str()},
                           {"bound", b ? json(*b) : json(nullptr)}});
        else
            row("c_" + alpha.to_string(), z.chern_number(alpha).get_str() + "  bound " + (b ? std::to_string(*b) : "none"));
    }
    if (o.format == "json")
        print_json({{"class", e.to_string()}, {"group", io::to_json(group)}, {"alphas", out}});
    return 0;
}

int cmd_actions(const Options& o, const std::string& kind, int level, int max_dim)
{
    Lazard lazard(o.truncation);
    const GroupDescriptor group = GroupDescriptor::parse(o.p, o.group);
    max_dim = std::min(max_dim, lazard.truncation());
    std::vector<ActionWitness> ws;
    if (kind == "generators") {
        for (int i = 1; i <= max_dim; ++i) {
            auto [plus, minus] = generator_action(lazard, i, group);
            ws.push_back(plus);
            ws.push_back(minus);
        }
    } else if (kind == "milnor") {
        for (int m = 0; m <= max_dim; ++m)
            for (int n = std::max(m, 1); m + n - 1 <= max_dim; ++n)
                ws.push_back(milnor_action(m, n, group));
    } else if (kind == "landweber") {
        for (int s = 0; s < group.rank(); ++s)
            if (bounded_power(group.p(), s, static_cast<long long>(max_dim) + 1))
                ws.push_back(landweber_variety(s, group, lazard.truncation()));
    } else if (kind == "family") {
        ws = filtration_family(lazard, level, group, max_dim);
    } else {
        throw std::invalid_argument("unknown kind " + kind);
    }
    if (o.format == "json") {
        json out = json::array();
        for (const auto& w : ws)
            out.push_back(io::to_json(w));
        print_json(out);
        return 0;
    }
    for (const auto& w : ws)
        std::cout << dim_string(w.fixed_dim) << "\t" << w.provenance << "\t" << w.variety.to_string() << "\n";
    return 0;
}

int cmd_verify(const Options& o, const std::string& suite, int max_n, int max_dim)
{
    Lazard lazard(o.truncation);
    std::vector<tools::SuiteResult> results;
    const bool all = suite == "all";
    if (all || suite == "fgl")
        results.push_back(tools::run_fgl_suite(lazard));
    if (all || suite == "ideals")
        results.push_back(tools::run_ideals_suite(lazard, o.p, max_n));
    if (all || suite == "presentation")
        results.push_back(tools::run_presentation_suite(lazard, o.p));
    if (all || suite == "soundness")
        results.push_back(tools::run_soundness_suite(lazard, o.p, max_dim));
    if (results.empty())
        throw std::invalid_argument("unknown suite " + suite);
    bool ok = true;
    json out = json::array();
    for (const auto& r : results) {
        ok = ok && r.ok();
        if (o.format == "json") {
            out.push_back({{"suite", r.name}, {"checks", r.checks}, {"ok", r.ok()}, {"failures", r.failures}});
        } else {
            std::cout << r.name << ": " << (r.ok() ? "OK" : "FAILED") << " (" << r.checks << " checks)\n";
            for (const auto& f : r.failures)
                std::cout << "  " << f << "\n";
        }
    }
    if (o.format == "json")
        print_json(out);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Chern numbers, Landweber ideals and fixed-locus bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    try {
        o.truncation = default_truncation();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    app.add_option("--trunc", o.truncation, "Weight truncation N (env COBORD_TRUNC)")->check(CLI::Range(0, kMaxTruncation));
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));

    auto add_group = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "Prime p");
        sub->add_option("--group", o.group, "Comma-separated exponents a_1,...,a_r (0 for the trivial group)");
    };

    std::string expr_text, alpha_text, suite = "all", kind = "generators";
    int level = 0, max_dim = 8, max_n = 3;

    auto* c_class = app.add_subcommand("class", "Chern numbers and generator coordinates of a variety");
    c_class->add_option("expr", expr_text, "Variety JSON, e.g. {\"hyp\":[3,2]}")->required();

    auto* c_bound = app.add_subcommand("bound", "Lower bound on dim X^G");
    c_bound->add_option("expr", expr_text)->required();
    add_group(c_bound);

    auto* c_fixed = app.add_subcommand("fixedpoint", "Whether every G-action must have a fixed point");
    c_fixed->add_option("expr", expr_text)->required();
    add_group(c_fixed);

    auto* c_chern = app.add_subcommand("chern-bound", "Bounds from single Chern numbers");
    c_chern->add_option("expr", expr_text)->required();
    c_chern->add_option("--alpha", alpha_text, "Partition as comma-separated parts (default: all)");
    add_group(c_chern);

    auto* c_actions = app.add_subcommand("actions", "Explicit actions with their fixed-locus dimensions");
    c_actions->add_option("--kind", kind)->check(CLI::IsMember({"generators", "milnor", "landweber", "family"}));
    c_actions->add_option("--d", level, "Filtration level for --kind family");
    c_actions->add_option("--max-dim", max_dim);
    add_group(c_actions);

    auto* c_verify = app.add_subcommand("verify", "Run invariant suites");
    c_verify->add_option("suite", suite)->check(CLI::IsMember({"fgl", "ideals", "presentation", "soundness", "all"}));
    c_verify->add_option("--max-n", max_n);
    c_verify->add_option("--max-dim", max_dim);
    c_verify->add_option("--p", o.p, "Prime p");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_class->parsed())
            return cmd_class(o, expr_text);
        if (c_bound->parsed())
            return cmd_bound(o, expr_text);
        if (c_fixed->parsed())
            return cmd_fixedpoint(o, expr_text);
        if (c_chern->parsed())
            return cmd_chern_bound(o, expr_text, alpha_text);
        if (c_actions->parsed())
            return cmd_actions(o, kind, level, max_dim);
        if (c_verify->parsed())
            return cmd_verify(o, suite, max_n, max_dim);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
