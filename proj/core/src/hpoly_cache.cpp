#include "cmroots/hpoly_cache.hpp"

#include <unistd.h>

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>

#include "cmroots/classpoly.hpp"

namespace cmroots {

namespace {

std::optional<std::pair<std::int64_t, IntPolynomial>> parse_line(
    const std::string& line) {
    if (line.rfind("v1|", 0) != 0) return std::nullopt;
    std::istringstream in(line.substr(3));
    std::string dtok, htok, ctok;
    if (!std::getline(in, dtok, '|') || !std::getline(in, htok, '|') ||
        !std::getline(in, ctok))
        return std::nullopt;
    try {
        std::int64_t D = std::stoll(dtok);
        std::size_t h = std::stoull(htok);
        IntPolynomial H;
        std::istringstream cs(ctok);
        std::string coeff;
        while (std::getline(cs, coeff, ','))
            H.coeffs.emplace_back(coeff);
        if (H.coeffs.size() != h + 1 || !H.is_monic()) return std::nullopt;
        return std::make_pair(D, std::move(H));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

std::string PolyCache::format_entry(std::int64_t D, const IntPolynomial& H) {
    std::string line = "v1|" + std::to_string(D) + "|" +
                       std::to_string(H.degree()) + "|";
    for (std::size_t k = 0; k < H.coeffs.size(); ++k) {
        if (k > 0) line += ",";
        line += H.coeffs[k].get_str();
    }
    return line;
}

PolyCache::PolyCache(std::filesystem::path path) : path_(std::move(path)) {
    load();
}

void PolyCache::load() {
    std::ifstream in(path_);
    if (!in) return; /* no cache yet */
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (auto entry = parse_line(line))
            entries_.insert_or_assign(entry->first, std::move(entry->second));
    }
}

void PolyCache::flush() const {
    /* per-process temporary, then atomic rename; concurrent writers hold
     * identical entries by determinism, so last-rename-wins is safe */
    std::filesystem::path tmp = path_;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write cache file " + tmp.string());
        for (const auto& [D, H] : entries_) out << format_entry(D, H) << "\n";
    }
    std::filesystem::rename(tmp, path_);
}

std::optional<IntPolynomial> PolyCache::lookup(std::int64_t D) const {
    auto it = entries_.find(D);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

const IntPolynomial& PolyCache::get_or_compute(Discriminant d, bool* was_hit) {
    auto it = entries_.find(d.value());
    if (it != entries_.end()) {
        if (was_hit) *was_hit = true;
        return it->second;
    }
    if (was_hit) *was_hit = false;
    IntPolynomial H = hilbert_class_polynomial(d);
    auto [pos, inserted] = entries_.emplace(d.value(), std::move(H));
    (void)inserted;
    flush();
    return pos->second;
}

void PolyCache::insert(std::int64_t D, IntPolynomial H) {
    entries_.insert_or_assign(D, std::move(H));
    flush();
}

}  // namespace cmroots
