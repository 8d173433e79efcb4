#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmroots/criterion.hpp"
#include "cmroots/hpoly_cache.hpp"

namespace cmroots {

/*
 * One (D, p) verification record. `agreement` requires all three of:
 * observed == predicted, observed in {0, two_torsion_order}, and the
 * reduced polynomial squarefree. Prediction fields stay unset for pairs
 * with p split, ramified, or p <= |D| (the roots command can produce
 * those; the sweep never does).
 */
struct SweepRecord {
    std::int64_t D = 0;
    std::uint64_t p = 0;
    std::uint64_t h = 0;
    unsigned mu = 0;
    std::uint64_t two_torsion_order = 0;
    bool inert = false;
    std::optional<bool> predicted_nonempty;
    std::optional<std::uint64_t> predicted_count;
    std::uint64_t observed_count = 0;
    std::optional<std::vector<std::uint64_t>> observed_roots;
    bool squarefree = false;
    std::optional<bool> agreement;
    Applicability why = Applicability::ok;
};

struct SweepParams {
    std::int64_t max_disc = 0;  /* scan D with 3 <= |D| <= max_disc */
    std::uint64_t max_prime = 0; /* inert primes |D| < p <= max_prime */
    bool list_roots = false;
};

struct SweepSummary {
    std::uint64_t pairs = 0;
    std::uint64_t nonempty = 0;
    std::uint64_t empty = 0;
    std::uint64_t disagreements = 0;
};

struct SweepReport {
    SweepParams params;
    std::vector<SweepRecord> records;
    SweepSummary summary;
};

/* Full record for one pair; p must be an odd prime > 3. Roots are listed
 * when requested and p is within the exhaustive cap. */
SweepRecord evaluate_pair(Discriminant d, std::uint64_t p,
                          const ClassGroupTable& table, const IntPolynomial& H,
                          bool want_roots);

/*
 * Iterate every valid D in [-max_disc, -3] and every inert prime
 * |D| < p <= max_prime; records come out sorted by (|D|, p). Throws
 * std::invalid_argument for out-of-range parameters (desk-scale caps:
 * max_disc <= 10^4, max_prime <= 10^6).
 */
SweepReport run_sweep(const SweepParams& params, PolyCache& cache);

bool all_agree(const SweepReport& report);

enum class ReportFormat { text, json, csv };

std::string render_report(const SweepReport& report, ReportFormat format);
std::string render_record(const SweepRecord& record, ReportFormat format);

}  // namespace cmroots
