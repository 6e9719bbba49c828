#include "tgd/dataset.hpp"

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "tgd/error.hpp"

namespace tgd {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_integer(std::string_view text, std::int64_t& out) {
    text = trim(text);
    if (text.empty()) return false;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end;
}

[[noreturn]] void bad_line(std::size_t line, std::string_view text, std::string_view why) {
    throw DomainError("input", "line " + std::to_string(line) + ": '" + std::string(text) +
                                   "' " + std::string(why));
}

} // namespace

Dataset::Dataset(std::map<SupportPoint, double> counts) : counts_(std::move(counts)) {
    double s1 = 0.0;
    double s2 = 0.0;
    for (const auto& [y, c] : counts_) {
        const auto v = static_cast<double>(y);
        n_ += c;
        s1 += c * v;
        s2 += c * v * v;
    }
    mean_ = s1 / n_;
    m2_ = s2 / n_;
}

Dataset Dataset::from_values(std::span<const SupportPoint> values) {
    if (values.empty()) throw DomainError("values", "dataset must not be empty");
    std::map<SupportPoint, double> counts;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i] < 0) {
            throw DomainError("values", "negative value " + std::to_string(values[i]) +
                                            " at index " + std::to_string(i));
        }
        counts[values[i]] += 1.0;
    }
    return Dataset(std::move(counts));
}

Dataset Dataset::from_counts(std::map<SupportPoint, double> counts) {
    double total = 0.0;
    for (const auto& [y, c] : counts) {
        if (y < 0) throw DomainError("values", "negative value " + std::to_string(y));
        if (!(c >= 0.0)) throw DomainError("counts", "count for " + std::to_string(y) + " is negative");
        total += c;
    }
    if (!(total > 0.0)) throw DomainError("counts", "total count must be positive");
    std::erase_if(counts, [](const auto& kv) { return kv.second == 0.0; });
    return Dataset(std::move(counts));
}

double Dataset::count(SupportPoint y) const {
    const auto it = counts_.find(y);
    return it == counts_.end() ? 0.0 : it->second;
}

double Dataset::empirical_cdf(SupportPoint y) const {
    double below = 0.0;
    for (const auto& [v, c] : counts_) {
        if (v > y) break;
        below += c;
    }
    return below / n_;
}

Dataset read_dataset(std::istream& in) {
    std::vector<std::pair<std::size_t, std::string>> lines;
    std::string raw;
    for (std::size_t number = 1; std::getline(in, raw); ++number) {
        if (!trim(raw).empty()) lines.emplace_back(number, raw);
    }
    if (lines.empty()) throw DomainError("input", "no data lines");

    const bool csv = lines.front().second.find(',') != std::string::npos;
    if (!csv) {
        std::vector<SupportPoint> values;
        values.reserve(lines.size());
        for (const auto& [number, text] : lines) {
            std::int64_t v = 0;
            if (!parse_integer(text, v) || v < 0) bad_line(number, text, "is not a non-negative integer");
            values.push_back(v);
        }
        return Dataset::from_values(values);
    }

    std::map<SupportPoint, double> counts;
    std::size_t start = 0;
    {
        const std::string_view first = lines.front().second;
        std::int64_t probe = 0;
        if (!parse_integer(first.substr(0, first.find(',')), probe)) start = 1;
    }
    for (std::size_t i = start; i < lines.size(); ++i) {
        const auto& [number, text] = lines[i];
        const std::string_view view = text;
        const auto comma = view.find(',');
        std::int64_t value = 0;
        std::int64_t count = 0;
        if (comma == std::string_view::npos || !parse_integer(view.substr(0, comma), value) ||
            !parse_integer(view.substr(comma + 1), count) || value < 0 || count < 0) {
            bad_line(number, text, "is not a 'value,count' pair of non-negative integers");
        }
        counts[value] += static_cast<double>(count);
    }
    if (counts.empty()) throw DomainError("input", "no data rows after header");
    return Dataset::from_counts(std::move(counts));
}

} // namespace tgd
