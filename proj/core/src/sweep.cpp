#include "cmroots/sweep.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cmroots/classpoly.hpp"
#include "cmroots/fp_poly.hpp"
#include "cmroots/primes.hpp"

namespace cmroots {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::int64_t kMaxDiscCap = 10'000;
constexpr std::uint64_t kMaxPrimeCap = 1'000'000;

ordered_json record_to_json(const SweepRecord& r) {
    ordered_json j;
    j["D"] = r.D;
    j["p"] = r.p;
    j["h"] = r.h;
    j["mu"] = r.mu;
    j["two_torsion_order"] = r.two_torsion_order;
    j["inert"] = r.inert;
    j["predicted_nonempty"] =
        r.predicted_nonempty ? ordered_json(*r.predicted_nonempty) : nullptr;
    j["predicted_count"] =
        r.predicted_count ? ordered_json(*r.predicted_count) : nullptr;
    j["observed_count"] = r.observed_count;
    if (r.observed_roots) j["observed_roots"] = *r.observed_roots;
    j["squarefree"] = r.squarefree;
    j["agreement"] = r.agreement ? ordered_json(*r.agreement) : nullptr;
    return j;
}

std::string opt_str(const std::optional<bool>& v) {
    return v ? (*v ? "true" : "false") : "";
}

std::string opt_str(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : "";
}

void record_to_csv(std::ostream& os, const SweepRecord& r) {
    os << r.D << ',' << r.p << ',' << r.h << ',' << r.mu << ','
       << r.two_torsion_order << ',' << (r.inert ? "true" : "false") << ','
       << opt_str(r.predicted_nonempty) << ',' << opt_str(r.predicted_count)
       << ',' << r.observed_count << ',';
    if (r.observed_roots) {
        for (std::size_t i = 0; i < r.observed_roots->size(); ++i) {
            if (i > 0) os << ';';
            os << (*r.observed_roots)[i];
        }
    }
    os << ',' << (r.squarefree ? "true" : "false") << ','
       << opt_str(r.agreement) << '\n';
}

constexpr const char* kCsvHeader =
    "D,p,h,mu,two_torsion_order,inert,predicted_nonempty,predicted_count,"
    "observed_count,observed_roots,squarefree,agreement";

void record_to_text(std::ostream& os, const SweepRecord& r) {
    os << "D=" << r.D << " p=" << r.p << " h=" << r.h << " mu=" << r.mu
       << " |Pic[2]|=" << r.two_torsion_order
       << " inert=" << (r.inert ? "true" : "false");
    if (r.predicted_count)
        os << " predicted=" << *r.predicted_count;
    else
        os << " predicted=n/a (" << to_string(r.why) << ")";
    os << " observed=" << r.observed_count;
    if (r.observed_roots) {
        os << " roots=[";
        for (std::size_t i = 0; i < r.observed_roots->size(); ++i) {
            if (i > 0) os << ',';
            os << (*r.observed_roots)[i];
        }
        os << ']';
    }
    os << " squarefree=" << (r.squarefree ? "true" : "false");
    if (r.agreement)
        os << " agreement=" << (*r.agreement ? "true" : "false");
    os << '\n';
}

}  // namespace

SweepRecord evaluate_pair(Discriminant d, std::uint64_t p,
                          const ClassGroupTable& table, const IntPolynomial& H,
                          bool want_roots) {
    SweepRecord rec;
    rec.D = d.value();
    rec.p = p;
    rec.h = table.h();
    rec.mu = table.mu;
    rec.two_torsion_order = std::uint64_t{1} << (table.mu - 1);

    CriterionReport pred = predict(d, p);
    rec.inert = pred.inert;
    rec.why = pred.why;
    rec.predicted_nonempty = pred.predicted_nonempty;
    rec.predicted_count = pred.predicted_count;

    FpPoly Hp = reduce_mod_p(H, p);
    rec.observed_count = count_fp_roots(Hp);
    rec.squarefree = is_squarefree(Hp);
    if (want_roots && p <= kListRootsCap) rec.observed_roots = list_fp_roots(Hp);

    if (pred.applicable) {
        rec.agreement = (rec.observed_count == *rec.predicted_count) &&
                        (rec.observed_count == 0 ||
                         rec.observed_count == rec.two_torsion_order) &&
                        rec.squarefree;
    }
    return rec;
}

SweepReport run_sweep(const SweepParams& params, PolyCache& cache) {
    if (params.max_disc < 3 || params.max_disc > kMaxDiscCap)
        throw std::invalid_argument("max_disc must be in [3, " +
                                    std::to_string(kMaxDiscCap) + "]");
    if (params.max_prime < 5 || params.max_prime > kMaxPrimeCap)
        throw std::invalid_argument("max_prime must be in [5, " +
                                    std::to_string(kMaxPrimeCap) + "]");

    SweepReport report;
    report.params = params;

    for (std::int64_t abs_d = 3; abs_d <= params.max_disc; ++abs_d) {
        if (abs_d % 4 != 0 && abs_d % 4 != 3) continue;
        Discriminant d(-abs_d);
        ClassGroupTable table = enumerate_class_group(d);
        const IntPolynomial& H = cache.get_or_compute(d);
        for (std::uint64_t p = static_cast<std::uint64_t>(abs_d) + 1;
             p <= params.max_prime; ++p) {
            if (!is_prime_u64(p)) continue;
            if (p == 2 || !is_inert(d, p)) continue;
            report.records.push_back(
                evaluate_pair(d, p, table, H, params.list_roots));
        }
    }

    for (const SweepRecord& r : report.records) {
        ++report.summary.pairs;
        if (r.observed_count > 0)
            ++report.summary.nonempty;
        else
            ++report.summary.empty;
        if (!r.agreement || !*r.agreement) ++report.summary.disagreements;
    }
    return report;
}

bool all_agree(const SweepReport& report) {
    return report.summary.disagreements == 0;
}

std::string render_record(const SweepRecord& record, ReportFormat format) {
    switch (format) {
        case ReportFormat::json:
            return record_to_json(record).dump(2) + "\n";
        case ReportFormat::csv: {
            std::ostringstream os;
            os << kCsvHeader << '\n';
            record_to_csv(os, record);
            return os.str();
        }
        default: {
            std::ostringstream os;
            record_to_text(os, record);
            return os.str();
        }
    }
}

std::string render_report(const SweepReport& report, ReportFormat format) {
    switch (format) {
        case ReportFormat::json: {
            ordered_json j;
            j["params"] = {{"max_disc", report.params.max_disc},
                           {"max_prime", report.params.max_prime},
                           {"list_roots", report.params.list_roots}};
            j["records"] = ordered_json::array();
            for (const SweepRecord& r : report.records)
                j["records"].push_back(record_to_json(r));
            j["summary"] = {{"pairs", report.summary.pairs},
                            {"nonempty", report.summary.nonempty},
                            {"empty", report.summary.empty},
                            {"disagreements", report.summary.disagreements}};
            return j.dump(2) + "\n";
        }
        case ReportFormat::csv: {
            std::ostringstream os;
            os << kCsvHeader << '\n';
            for (const SweepRecord& r : report.records) record_to_csv(os, r);
            return os.str();
        }
        default: {
            std::ostringstream os;
            for (const SweepRecord& r : report.records) record_to_text(os, r);
            os << "pairs=" << report.summary.pairs
               << " nonempty=" << report.summary.nonempty
               << " empty=" << report.summary.empty
               << " disagreements=" << report.summary.disagreements << '\n';
            return os.str();
        }
    }
}

}  // namespace cmroots
