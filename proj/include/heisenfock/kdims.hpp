#pragma once

#include "heisenfock/fock.hpp"
#include "heisenfock/heis_core.hpp"
#include "heisenfock/partitions.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace heisenfock {

/* K(X) as a based space with its Mukai pairing. The equivariant groups
 * of the symmetric powers are modelled through their dimensions only.
 */
struct KModel {
    PairingMatrix pairing;

    std::size_t dim() const noexcept { return pairing.dim(); }
};

/* dim K_{S_l}(X^l) for cellular X with dim K(X) = d:
 *   sum over nu = 1^{m_1} 2^{m_2} ... |- l of prod_j dim S^{m_j}(Q^d),
 * with dim S^m(Q^d) = binom(d + m - 1, m).
 */
inline Integer vistoli_dim(int level, std::size_t d) {
    if (level < 0)
        throw std::invalid_argument("level must be nonnegative");
    Integer total = 0;
    for (const auto& nu : partitions_of(level)) {
        Integer term = 1;
        for (auto [part, m] : nu.multiplicities())
            term *= binomial(Integer(static_cast<unsigned long>(d + static_cast<std::size_t>(m)) - 1),
                             static_cast<unsigned long>(m));
        total += term;
    }
    return total;
}

/// Coefficient of q^level in prod_{n=1}^{level} (1 - q^n)^{-d}.
inline Integer product_series_dim(int level, std::size_t d) {
    if (level < 0)
        throw std::invalid_argument("level must be nonnegative");
    const auto len = static_cast<std::size_t>(level) + 1;
    std::vector<Integer> series(len);
    series[0] = 1;
    for (int n = 1; n <= level; ++n)
        for (std::size_t copy = 0; copy < d; ++copy)
            // multiply by 1/(1 - q^n)
            for (std::size_t i = static_cast<std::size_t>(n); i < len; ++i)
                series[i] += series[i - static_cast<std::size_t>(n)];
    return series.back();
}

struct DimsRow {
    int level = 0;
    Integer fock;
    Integer vistoli;
    bool equal() const { return fock == vistoli; }
};

struct DimsReport {
    std::size_t d = 0;
    std::vector<DimsRow> rows;
    bool all_equal() const {
        for (const auto& r : rows)
            if (!r.equal())
                return false;
        return true;
    }
};

inline DimsReport compare_dims(int max_level, std::size_t d) {
    if (max_level < 0)
        throw std::invalid_argument("max level must be nonnegative");
    DimsReport rep;
    rep.d = d;
    for (int l = 0; l <= max_level; ++l)
        rep.rows.push_back({l, fock_dim(l, d), vistoli_dim(l, d)});
    return rep;
}

} // namespace heisenfock
