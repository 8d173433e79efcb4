#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>

#include "cmroots/int_polynomial.hpp"
#include "cmroots/quadform.hpp"

namespace cmroots {

/*
 * Persistent cache of class polynomials. Line-oriented text, one entry per
 * line, diff-able and trivially parsed:
 *
 *   v1|D|h|c0,c1,...,ch
 *
 * D and the coefficients in decimal, coefficients in ascending degree.
 * Lines with an unknown version tag are ignored. The file is rewritten
 * atomically (temporary + rename) on every insert; entries are keyed by D
 * and identical across processes by determinism, so concurrent writers
 * cannot corrupt each other.
 */
class PolyCache {
  public:
    explicit PolyCache(std::filesystem::path path);

    const std::filesystem::path& path() const { return path_; }
    std::size_t size() const { return entries_.size(); }

    std::optional<IntPolynomial> lookup(std::int64_t D) const;

    /* Cached entry, or compute-insert-flush. was_hit reports which. */
    const IntPolynomial& get_or_compute(Discriminant d, bool* was_hit = nullptr);

    void insert(std::int64_t D, IntPolynomial H);

    static std::string format_entry(std::int64_t D, const IntPolynomial& H);

  private:
    void load();
    void flush() const;

    std::filesystem::path path_;
    /* |D| ascending, i.e. D descending */
    std::map<std::int64_t, IntPolynomial, std::greater<std::int64_t>> entries_;
};

}  // namespace cmroots
