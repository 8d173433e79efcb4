/*
 * cmroots -- class groups of imaginary quadratic orders, class polynomials,
 * and their F_p root counts.
 *
 * Subcommands: classgroup, hpoly, roots, predict, sweep.
 * Exit codes: 0 success/agreement, 1 usage, 2 validation, 3 disagreement.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmroots/classpoly.hpp"
#include "cmroots/fp_poly.hpp"
#include "cmroots/hpoly_cache.hpp"
#include "cmroots/primes.hpp"
#include "cmroots/sweep.hpp"

namespace {

using cmroots::Applicability;
using cmroots::ClassGroupTable;
using cmroots::CriterionReport;
using cmroots::Discriminant;
using cmroots::IntPolynomial;
using cmroots::PolyCache;
using cmroots::QuadForm;
using cmroots::ReportFormat;
using cmroots::SweepParams;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDisagreement = 3;

ReportFormat parse_format(const std::string& name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    return ReportFormat::text;
}

ordered_json form_json(const QuadForm& f) {
    return ordered_json::array({f.a, f.b, f.c});
}

void emit(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(out_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << body;
}

int cmd_classgroup(std::int64_t disc, ReportFormat format) {
    Discriminant d(disc);
    ClassGroupTable table = cmroots::enumerate_class_group(d);
    if (format == ReportFormat::json) {
        ordered_json j;
        j["D"] = d.value();
        j["h"] = table.h();
        j["mu"] = table.mu;
        j["two_torsion_order"] = cmroots::two_torsion_order(d);
        j["forms"] = ordered_json::array();
        for (const QuadForm& f : table.forms) j["forms"].push_back(form_json(f));
        j["two_torsion"] = ordered_json::array();
        for (const QuadForm& f : table.two_torsion)
            j["two_torsion"].push_back(form_json(f));
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "D = " << d.value() << "\n";
    std::cout << "h = " << table.h() << "\n";
    std::cout << "mu = " << table.mu << "\n";
    std::cout << "two_torsion_order = " << cmroots::two_torsion_order(d) << "\n";
    std::cout << "forms:\n";
    for (const QuadForm& f : table.forms) std::cout << "  " << f << "\n";
    std::cout << "two_torsion:\n";
    for (const QuadForm& f : table.two_torsion) std::cout << "  " << f << "\n";
    return kExitOk;
}

int cmd_hpoly(std::int64_t disc, const std::string& cache_path,
              ReportFormat format) {
    Discriminant d(disc);
    PolyCache cache(cache_path);
    bool hit = false;
    const IntPolynomial& H = cache.get_or_compute(d, &hit);
    std::clog << "cache: " << (hit ? "hit" : "miss, computed") << " D=" << disc
              << " (" << cache.path().string() << ")\n";
    if (format == ReportFormat::json) {
        ordered_json j;
        j["D"] = disc;
        j["h"] = H.degree();
        j["coeffs"] = ordered_json::array();
        for (const mpz_class& c : H.coeffs) j["coeffs"].push_back(c.get_str());
        j["pretty"] = cmroots::to_pretty_string(H);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << cmroots::to_pretty_string(H) << "\n";
    }
    return kExitOk;
}

int cmd_roots(std::int64_t disc, std::uint64_t p, bool /*list_roots*/,
              const std::string& cache_path, ReportFormat format) {
    Discriminant d(disc);
    PolyCache cache(cache_path);
    ClassGroupTable table = cmroots::enumerate_class_group(d);
    /* the full record always carries roots when p is within the scan cap */
    cmroots::SweepRecord rec =
        cmroots::evaluate_pair(d, p, table, cache.get_or_compute(d), true);
    std::cout << cmroots::render_record(rec, format);
    if (format == ReportFormat::text && !rec.agreement.has_value())
        std::cout << "inapplicable: " << to_string(rec.why)
                  << "; observed data reported above\n";
    if (rec.agreement.has_value() && !*rec.agreement) return kExitDisagreement;
    return kExitOk;
}

int cmd_predict(std::int64_t disc, std::uint64_t p, ReportFormat format) {
    Discriminant d(disc);
    CriterionReport rep = cmroots::predict(d, p);
    if (format == ReportFormat::json) {
        ordered_json j;
        j["D"] = rep.D;
        j["p"] = rep.p;
        j["inert"] = rep.inert;
        j["applicable"] = rep.applicable;
        j["why"] = to_string(rep.why);
        j["per_ell"] = ordered_json::array();
        for (const auto& c : rep.per_ell) {
            ordered_json e;
            e["ell"] = c.ell;
            e["met"] = c.met;
            e["subcase"] =
                c.subcase ? ordered_json(to_string(*c.subcase)) : nullptr;
            j["per_ell"].push_back(e);
        }
        j["predicted_nonempty"] = rep.predicted_nonempty
                                      ? ordered_json(*rep.predicted_nonempty)
                                      : nullptr;
        j["predicted_count"] = rep.predicted_count
                                   ? ordered_json(*rep.predicted_count)
                                   : nullptr;
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "D = " << rep.D << ", p = " << rep.p << "\n";
    std::cout << "inert: " << (rep.inert ? "true" : "false") << "\n";
    if (!rep.applicable) {
        std::cout << "inapplicable: " << to_string(rep.why) << "\n";
        return kExitOk;
    }
    for (const auto& c : rep.per_ell) {
        std::cout << "ell = " << c.ell << ": "
                  << (c.met ? "condition holds" : "condition fails");
        if (c.subcase) std::cout << " (subcase " << to_string(*c.subcase) << ")";
        std::cout << "\n";
    }
    std::cout << "predicted_nonempty = "
              << (*rep.predicted_nonempty ? "true" : "false") << "\n";
    std::cout << "predicted_count = " << *rep.predicted_count << "\n";
    return kExitOk;
}

int cmd_sweep(std::int64_t max_disc, std::uint64_t max_prime, bool list_roots,
              const std::string& cache_path, const std::string& out_path,
              ReportFormat format) {
    PolyCache cache(cache_path);
    SweepParams params{max_disc, max_prime, list_roots};
    cmroots::SweepReport report = cmroots::run_sweep(params, cache);
    emit(cmroots::render_report(report, format), out_path);
    std::clog << "sweep: " << report.summary.pairs << " pairs, "
              << report.summary.nonempty << " nonempty, "
              << report.summary.empty << " empty, "
              << report.summary.disagreements << " disagreements\n";
    return cmroots::all_agree(report) ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Class groups, class polynomials, and F_p root counts for "
                 "imaginary quadratic orders"};
    app.require_subcommand(1);

    std::int64_t disc = 0;
    std::int64_t prime = 0;
    std::int64_t max_disc = 0;
    std::int64_t max_prime = 0;
    std::string cache_path = "./hpoly.cache";
    std::string out_path;
    bool list_roots = false;

    /* per-subcommand format selections (different defaults) */
    std::string fmt_classgroup = "text", fmt_hpoly = "text", fmt_roots = "text",
                fmt_predict = "text", fmt_sweep = "json";

    auto add_format = [](CLI::App* cmd, std::string& var, bool with_csv) {
        std::vector<std::string> choices = {"json", "text"};
        if (with_csv) choices.push_back("csv");
        cmd->add_option("--format", var, "Output format")
            ->check(CLI::IsMember(choices))
            ->capture_default_str();
    };

    CLI::App* classgroup =
        app.add_subcommand("classgroup", "Reduced forms, h, 2-torsion, mu");
    classgroup->add_option("-D,--disc", disc, "Discriminant (negative)")
        ->required();
    add_format(classgroup, fmt_classgroup, false);

    CLI::App* hpoly =
        app.add_subcommand("hpoly", "Class polynomial (cache-aware)");
    hpoly->add_option("-D,--disc", disc, "Discriminant (negative)")->required();
    hpoly->add_option("--cache", cache_path, "Cache file path")
        ->capture_default_str();
    add_format(hpoly, fmt_hpoly, false);

    CLI::App* roots = app.add_subcommand(
        "roots", "Observed and predicted F_p-roots for one (D, p) pair");
    roots->add_option("-D,--disc", disc, "Discriminant (negative)")->required();
    roots->add_option("-p,--prime", prime, "Odd prime p")->required();
    roots->add_flag("--list-roots", list_roots, "List the roots");
    roots->add_option("--cache", cache_path, "Cache file path")
        ->capture_default_str();
    add_format(roots, fmt_roots, true);

    CLI::App* predict =
        app.add_subcommand("predict", "Nonemptiness criterion for (D, p)");
    predict->add_option("-D,--disc", disc, "Discriminant (negative)")
        ->required();
    predict->add_option("-p,--prime", prime, "Odd prime p")->required();
    add_format(predict, fmt_predict, false);

    CLI::App* sweep = app.add_subcommand(
        "sweep", "Verify the count dichotomy and criterion over a (D, p) grid");
    sweep->add_option("--max-disc", max_disc, "Scan 3 <= |D| <= max-disc")
        ->required();
    sweep->add_option("--max-prime", max_prime,
                      "Scan inert primes |D| < p <= max-prime")
        ->required();
    sweep->add_flag("--list-roots", list_roots, "Include root lists");
    sweep->add_option("--cache", cache_path, "Cache file path")
        ->capture_default_str();
    sweep->add_option("--out", out_path, "Write the report to a file");
    add_format(sweep, fmt_sweep, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (classgroup->parsed())
            return cmd_classgroup(disc, parse_format(fmt_classgroup));
        if (hpoly->parsed())
            return cmd_hpoly(disc, cache_path, parse_format(fmt_hpoly));
        if (roots->parsed()) {
            if (prime <= 0) throw std::domain_error("p must be positive");
            return cmd_roots(disc, static_cast<std::uint64_t>(prime),
                             list_roots, cache_path, parse_format(fmt_roots));
        }
        if (predict->parsed()) {
            if (prime <= 0) throw std::domain_error("p must be positive");
            return cmd_predict(disc, static_cast<std::uint64_t>(prime),
                               parse_format(fmt_predict));
        }
        if (sweep->parsed()) {
            return cmd_sweep(
                max_disc, max_prime < 0 ? 0 : static_cast<std::uint64_t>(max_prime),
                list_roots, cache_path, out_path, parse_format(fmt_sweep));
        }
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
