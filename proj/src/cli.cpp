#include "bwf/cli.hpp"

#include "bwf/classify.hpp"
#include "bwf/eggbox.hpp"
#include "bwf/errors.hpp"
#include "bwf/family.hpp"
#include "bwf/oracle.hpp"
#include "bwf/semigroup.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <stdexcept>

namespace bwf::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string family;
    Nat max = 3;
    std::string dot;
    std::string format = "text";
    bool no_close = false;

    bool json() const { return format == "json"; }
};

OmegaFamily load_family(const std::string& text, bool no_close) {
    if (text.empty())
        throw UsageError("--family is required");
    const auto sets = parse_set_list(text);
    return no_close ? OmegaFamily::validate(sets) : OmegaFamily::close(sets);
}

json optional_json(const std::optional<bool>& v) { return v ? json(*v) : json(nullptr); }

void print_bool(std::ostream& out, const Options& opt, const char* key, bool value) {
    if (opt.json())
        out << json{{key, value}}.dump(2) << '\n';
    else
        out << (value ? "true" : "false") << '\n';
}

int cmd_closure(const Options& opt, const std::vector<std::string>& generators, std::ostream& out) {
    std::string text = opt.family;
    for (const auto& g : generators)
        text += (text.empty() ? "" : ",") + g;
    const OmegaFamily fam = load_family(text, opt.no_close);
    if (opt.json()) {
        json members = json::array();
        for (const auto& m : fam.members())
            members.push_back(format_set(m));
        out << json{{"count", fam.size()}, {"has_empty", fam.has_empty()}, {"members", members}}.dump(2)
            << '\n';
        return kOk;
    }
    out << "members: " << fam.size() << '\n';
    out << "has_empty: " << (fam.has_empty() ? "true" : "false") << '\n';
    for (std::size_t i = 0; i < fam.size(); ++i)
        out << "  F" << i << " = " << format_set(fam[i]) << '\n';
    return kOk;
}

int cmd_classify(const Options& opt, std::ostream& out) {
    const SemigroupCtx ctx(load_family(opt.family, opt.no_close));
    const Classification c = classify(ctx);
    const std::optional<std::string> identity =
        c.identity ? std::optional(format_element(ctx, *c.identity)) : std::nullopt;
    const std::optional<std::string> copy =
        c.bicyclic_copy ? std::optional(format_set(*c.bicyclic_copy)) : std::nullopt;

    if (opt.json()) {
        json j;
        j["family"] = format_family(ctx.family());
        j["has_zero"] = c.has_zero;
        j["identity"] = identity ? json(*identity) : json(nullptr);
        j["simple"] = optional_json(c.simple);
        j["zero_simple"] = optional_json(c.zero_simple);
        j["bisimple"] = c.bisimple;
        j["zero_bisimple"] = c.zero_bisimple;
        j["e_unitary"] = c.e_unitary;
        j["iso_type"] = format_iso_type(c.iso_type);
        j["bicyclic_copy"] = copy ? json(*copy) : json(nullptr);
        out << j.dump(2) << '\n';
        return kOk;
    }
    auto flag = [](const std::optional<bool>& v) -> std::string {
        return v ? (*v ? "true" : "false") : "n/a";
    };
    out << "family: " << format_family(ctx.family()) << '\n'
        << "has_zero: " << (c.has_zero ? "true" : "false") << '\n'
        << "identity: " << identity.value_or("none") << '\n'
        << "simple: " << flag(c.simple) << '\n'
        << "zero_simple: " << flag(c.zero_simple) << '\n'
        << "bisimple: " << (c.bisimple ? "true" : "false") << '\n'
        << "zero_bisimple: " << (c.zero_bisimple ? "true" : "false") << '\n'
        << "e_unitary: " << (c.e_unitary ? "true" : "false") << '\n'
        << "iso_type: " << format_iso_type(c.iso_type) << '\n'
        << "bicyclic_copy: " << copy.value_or("none") << '\n';
    return kOk;
}

int cmd_eggbox(const Options& opt, std::ostream& out) {
    const SemigroupCtx ctx(load_family(opt.family, opt.no_close));
    const EggBox box = build_eggbox(ctx, opt.max);
    if (opt.dot == "-") {
        write_eggbox_dot(out, ctx, box);
        return kOk;
    }
    write_eggbox_text(out, ctx, box);
    if (!opt.dot.empty()) {
        std::ofstream file(opt.dot);
        if (!file)
            throw UsageError("cannot open " + opt.dot + " for writing");
        write_eggbox_dot(file, ctx, box);
    }
    return kOk;
}

json report_json(const CheckReport& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
    return {{"name", r.name},
            {"passed", r.passed()},
            {"instances", r.instances},
            {"elapsed_ms", r.elapsed.count() * 1000.0},
            {"failures", failures},
            {"notes", r.notes}};
}

int cmd_verify(const Options& opt, std::ostream& out) {
    const SemigroupCtx ctx(load_family(opt.family, opt.no_close));
    std::vector<CheckReport> reports = run_all_checks(ctx, opt.max);
    reports.push_back(check_star_lemma(3, 4));
    const bool all_passed =
        std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });

    if (opt.json()) {
        json checks = json::array();
        for (const auto& r : reports)
            checks.push_back(report_json(r));
        out << json{{"family", format_family(ctx.family())},
                    {"max", opt.max},
                    {"passed", all_passed},
                    {"checks", checks}}
                   .dump(2)
            << '\n';
    } else {
        out << "family: " << format_family(ctx.family()) << "  max: " << opt.max << '\n';
        for (const auto& r : reports) {
            out << (r.passed() ? "PASS " : "FAIL ") << r.name << "  instances=" << r.instances
                << "  elapsed_ms=" << r.elapsed.count() * 1000.0 << '\n';
            constexpr std::size_t kShown = 10;
            for (std::size_t i = 0; i < std::min(kShown, r.failures.size()); ++i) {
                const auto& f = r.failures[i];
                out << "    " << f.inputs << ": expected " << f.expected << ", got " << f.actual << '\n';
            }
            if (r.failures.size() > kShown)
                out << "    ... " << r.failures.size() - kShown << " more\n";
            for (const auto& n : r.notes)
                out << "    note: " << n << '\n';
        }
        out << (all_passed ? "all checks passed" : "some checks FAILED") << '\n';
    }
    return all_passed ? kOk : kCheckFailed;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Algebra of the bicyclic extension B_w^F over omega-closed families", "bwf"};
    app.fallthrough();
    app.require_subcommand(1);

    Options opt;
    app.add_option("--family", opt.family, "generators (comma separated set expressions)");
    app.add_option("--max", opt.max, "truncation bound N (elements with i, j <= N)");
    app.add_option("--dot", opt.dot, "write the egg-box as Graphviz to this path ('-' for stdout)");
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--no-close", opt.no_close, "require the family to be closed instead of closing it");

    std::vector<std::string> generators;
    std::string a, b, rel;

    auto* closure = app.add_subcommand("closure", "print the omega-closure of the generators");
    closure->add_option("generators", generators, "set expressions");

    auto* mul = app.add_subcommand("mul", "multiply two elements");
    mul->add_option("a", a)->required();
    mul->add_option("b", b)->required();

    auto* inv = app.add_subcommand("inv", "inverse of an element");
    inv->add_option("a", a)->required();

    auto* leq = app.add_subcommand("leq", "natural partial order a <= b");
    leq->add_option("a", a)->required();
    leq->add_option("b", b)->required();

    auto* grn = app.add_subcommand("green", "Green's relation between two elements");
    grn->add_option("relation", rel, "R, L, H, D or J")->required()->check(CLI::IsMember({"R", "L", "H", "D", "J"}));
    grn->add_option("a", a)->required();
    grn->add_option("b", b)->required();

    auto* sig = app.add_subcommand("sigma", "sigma image of a, or sigma-equivalence of a and b");
    sig->add_option("a", a)->required();
    sig->add_option("b", b);

    auto* cls = app.add_subcommand("classify", "structural classification");
    auto* egg = app.add_subcommand("eggbox", "egg-box diagram of the truncation");
    auto* ver = app.add_subcommand("verify", "run every brute-force check");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    }

    try {
        if (closure->parsed())
            return cmd_closure(opt, generators, out);
        if (cls->parsed())
            return cmd_classify(opt, out);
        if (egg->parsed())
            return cmd_eggbox(opt, out);
        if (ver->parsed())
            return cmd_verify(opt, out);

        const SemigroupCtx ctx(load_family(opt.family, opt.no_close));
        auto element = [&](const std::string& text) { return parse_element(ctx, text); };
        auto print_element = [&](const Element& e) {
            if (opt.json())
                out << json{{"result", format_element(ctx, e)}}.dump(2) << '\n';
            else
                out << format_element(ctx, e) << '\n';
        };

        if (mul->parsed()) {
            print_element(multiply(ctx, element(a), element(b)));
        } else if (inv->parsed()) {
            print_element(inverse(element(a)));
        } else if (leq->parsed()) {
            print_bool(out, opt, "leq", natural_leq(ctx, element(a), element(b)));
        } else if (grn->parsed()) {
            print_bool(out, opt, "related", green(ctx, *parse_green(rel), element(a), element(b)));
        } else if (sig->parsed()) {
            if (b.empty()) {
                const auto image = sigma_image(element(a));
                if (opt.json())
                    out << json{{"image", image}}.dump(2) << '\n';
                else
                    out << image << '\n';
            } else {
                print_bool(out, opt, "equivalent", sigma_equiv(ctx, element(a), element(b)));
            }
        }
        return kOk;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kUsageError;
    } catch (const ContractViolation& e) {
        err << "contract violation: " << e.what() << '\n';
        return kContractViolation;
    }
}

} // namespace bwf::cli
