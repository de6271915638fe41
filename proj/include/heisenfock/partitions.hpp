#pragma once

#include "heisenfock/rational.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace heisenfock {

/* An integer partition, stored as a weakly decreasing sequence of
 * positive parts. The empty partition is the partition of 0.
 */
class Partition {
public:
    Partition() = default;

    /* Accepts parts in any order; they are sorted into decreasing order. */
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition from_multiplicities(const std::map<int, int>& mult) {
        std::vector<int> parts;
        for (auto [part, m] : mult) {
            if (m < 0)
                throw std::invalid_argument("negative multiplicity");
            parts.insert(parts.end(), static_cast<std::size_t>(m), part);
        }
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    int weight() const noexcept {
        int w = 0;
        for (int p : parts_)
            w += p;
        return w;
    }

    /// part -> multiplicity, only nonzero entries
    std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int p : parts_)
            ++m[p];
        return m;
    }

    int count(int part) const noexcept {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
    }

    void add_part(int part) {
        if (part < 1)
            throw std::invalid_argument("partition parts must be positive");
        auto pos = std::lower_bound(parts_.begin(), parts_.end(), part, std::greater<>());
        parts_.insert(pos, part);
    }

    /// Removes one copy of `part`; returns false if there was none.
    bool remove_part(int part) {
        auto it = std::find(parts_.begin(), parts_.end(), part);
        if (it == parts_.end())
            return false;
        parts_.erase(it);
        return true;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                           std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_rec(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/* All partitions of n in reverse-lexicographic order on the part
 * sequences: (n), (n-1,1), (n-2,2), (n-2,1,1), ..., (1,...,1).
 */
inline std::vector<Partition> partitions_of(int n) {
    if (n < 0)
        throw std::invalid_argument("partitions_of: n must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::partitions_rec(n, n, prefix, out);
    return out;
}

/// prod_l l^{m_l} * m_l!
inline Integer z_constant(const Partition& lambda) {
    Integer z = 1;
    for (auto [part, m] : lambda.multiplicities()) {
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(part),
                      static_cast<unsigned long>(m));
        z *= pw * factorial(static_cast<unsigned long>(m));
    }
    return z;
}

namespace detail {

// Places parts[idx..] into bins with the given remaining capacities.
inline bool pack_exact(const std::vector<int>& parts, std::size_t idx, std::vector<int>& bins) {
    if (idx == parts.size())
        return std::all_of(bins.begin(), bins.end(), [](int b) { return b == 0; });
    const int part = parts[idx];
    for (std::size_t b = 0; b < bins.size(); ++b) {
        if (bins[b] < part)
            continue;
        // bins with equal remaining capacity are interchangeable
        bool seen = false;
        for (std::size_t c = 0; c < b; ++c)
            if (bins[c] == bins[b]) {
                seen = true;
                break;
            }
        if (seen)
            continue;
        bins[b] -= part;
        if (pack_exact(parts, idx + 1, bins))
            return true;
        bins[b] += part;
    }
    return false;
}

} // namespace detail

/* True iff |coarse| == |fine| and the parts of `fine` can be grouped into
 * blocks whose sums are exactly the parts of `coarse`. Reflexive.
 */
inline bool is_coarser(const Partition& coarse, const Partition& fine) {
    if (coarse.weight() != fine.weight() || coarse.length() > fine.length())
        return false;
    std::vector<int> bins = coarse.parts();
    return detail::pack_exact(fine.parts(), 0, bins);
}

/* A finitely supported map basis index -> partition. Indices mapped to the
 * empty partition are never stored, so equality and ordering are
 * structural.
 */
class MultiPartition {
public:
    using map_type = std::map<std::size_t, Partition>;

    MultiPartition() = default;
    MultiPartition(std::initializer_list<map_type::value_type> init) {
        for (const auto& [i, p] : init)
            set(i, p);
    }

    const map_type& assignments() const noexcept { return parts_; }

    Partition at(std::size_t index) const {
        auto it = parts_.find(index);
        return it == parts_.end() ? Partition{} : it->second;
    }

    void set(std::size_t index, Partition p) {
        if (p.empty())
            parts_.erase(index);
        else
            parts_[index] = std::move(p);
    }

    void add_part(std::size_t index, int part) { parts_[index].add_part(part); }

    bool remove_part(std::size_t index, int part) {
        auto it = parts_.find(index);
        if (it == parts_.end() || !it->second.remove_part(part))
            return false;
        if (it->second.empty())
            parts_.erase(it);
        return true;
    }

    int count(std::size_t index, int part) const {
        auto it = parts_.find(index);
        return it == parts_.end() ? 0 : it->second.count(part);
    }

    bool empty() const noexcept { return parts_.empty(); }

    int weight() const noexcept {
        int w = 0;
        for (const auto& [i, p] : parts_)
            w += p.weight();
        return w;
    }

    int weight(std::size_t index) const { return at(index).weight(); }

    std::size_t max_index() const { return parts_.empty() ? 0 : parts_.rbegin()->first; }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [i, p] : parts_) {
            if (!first)
                s += ", ";
            first = false;
            s += std::to_string(i) + ":" + p.to_string();
        }
        return s + "}";
    }

    friend auto operator<=>(const MultiPartition&, const MultiPartition&) = default;
    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

private:
    map_type parts_;
};

/// Componentwise coarsening: is_coarser(coarse(i), fine(i)) for every index i.
inline bool multipartition_coarser(const MultiPartition& coarse, const MultiPartition& fine) {
    for (const auto& [i, p] : coarse.assignments())
        if (!is_coarser(p, fine.at(i)))
            return false;
    for (const auto& [i, p] : fine.assignments())
        if (!is_coarser(coarse.at(i), p))
            return false;
    return true;
}

/* All multi-partitions over indices 0..dim-1 of total weight `weight`.
 * Ordered by the weight composition (index 0 heaviest first), then by
 * partitions_of order at each index.
 */
inline std::vector<MultiPartition> multipartitions_of(int weight, std::size_t dim) {
    if (weight < 0)
        throw std::invalid_argument("multipartitions_of: negative weight");
    std::vector<MultiPartition> out;
    if (dim == 0) {
        if (weight == 0)
            out.emplace_back();
        return out;
    }
    std::function<void(std::size_t, int, MultiPartition&)> rec =
        [&](std::size_t index, int remaining, MultiPartition& acc) {
            if (index + 1 == dim) {
                for (const auto& p : partitions_of(remaining)) {
                    acc.set(index, p);
                    out.push_back(acc);
                }
                acc.set(index, {});
                return;
            }
            for (int w = remaining; w >= 0; --w) {
                for (const auto& p : partitions_of(w)) {
                    acc.set(index, p);
                    rec(index + 1, remaining - w, acc);
                }
                acc.set(index, {});
            }
        };
    MultiPartition acc;
    rec(0, weight, acc);
    return out;
}

} // namespace heisenfock
