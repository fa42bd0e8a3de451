#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace rmcodes {

/// Map weight -> number of codewords. Zero counts are never stored.
class WeightDistribution {
public:
    using Map = std::map<std::size_t, std::uint64_t>;

    WeightDistribution() = default;
    explicit WeightDistribution(const Map& counts) {
        for (auto [w, c] : counts) add(w, c);
    }

    void add(std::size_t weight, std::uint64_t count) {
        if (count != 0) counts_[weight] += count;
    }
    WeightDistribution& operator+=(const WeightDistribution& other) {
        for (auto [w, c] : other.counts_) add(w, c);
        return *this;
    }

    std::uint64_t count(std::size_t weight) const {
        auto it = counts_.find(weight);
        return it == counts_.end() ? 0 : it->second;
    }
    std::uint64_t total() const {
        std::uint64_t t = 0;
        for (auto [w, c] : counts_) t += c;
        return t;
    }
    /// Smallest weight above zero, if any.
    std::optional<std::size_t> min_nonzero_weight() const {
        auto it = counts_.upper_bound(0);
        if (it == counts_.end()) return std::nullopt;
        return it->first;
    }

    const Map& counts() const { return counts_; }
    /// `weight,count` lines in increasing weight order.
    std::string to_csv() const {
        std::string out;
        for (auto [w, c] : counts_) out += std::to_string(w) + "," + std::to_string(c) + "\n";
        return out;
    }

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;

private:
    Map counts_;
};

}  // namespace rmcodes
