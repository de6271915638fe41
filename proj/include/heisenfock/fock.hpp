#pragma once

#include "heisenfock/heis_core.hpp"
#include "heisenfock/partitions.hpp"

#include <cstddef>
#include <map>
#include <string>

namespace heisenfock {

/* An element of the Fock space, as a combination of the monomials
 * a(-nu) |0>. The vacuum is the empty multi-partition.
 */
class FockVector {
public:
    using map_type = std::map<MultiPartition, Rational>;

    FockVector() = default;

    static FockVector vacuum() {
        FockVector v;
        v.add_term(MultiPartition{}, 1);
        return v;
    }

    static FockVector monomial(MultiPartition nu, const Rational& c = 1) {
        FockVector v;
        v.add_term(std::move(nu), c);
        return v;
    }

    const map_type& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    Rational coefficient(const MultiPartition& nu) const {
        auto it = terms_.find(nu);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(MultiPartition nu, const Rational& c) { detail::add_to(terms_, std::move(nu), c); }

    FockVector& operator+=(const FockVector& o) {
        for (const auto& [k, c] : o.terms_)
            detail::add_to(terms_, k, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        for (const auto& [k, c] : o.terms_)
            detail::add_to(terms_, k, Rational(-c));
        return *this;
    }
    FockVector& operator*=(const Rational& s) {
        if (s == 0)
            terms_.clear();
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const Rational& s, FockVector a) { return a *= s; }

    /// Same text form as a creation-only NormalElement; the vacuum prints as 1.
    std::string to_string() const {
        return detail::terms_to_string(
            terms_, [](const MultiPartition& nu) { return canonical_word(NormalKey{nu, {}}); });
    }

    friend bool operator==(const FockVector&, const FockVector&) = default;

private:
    map_type terms_;
};

/* a_i(n) acting on v. Creators append a part; an annihilator a_i(n) acts
 * as the derivation with a_i(n) a_j(-n) |...> picking up n <b_i, b_j>
 * once for every part n at index j, and a_i(n) |0> = 0.
 */
inline FockVector act_generator(const GeneratorSymbol& g, const FockVector& v,
                                const PairingMatrix& pairing) {
    if (g.basis >= pairing.dim())
        throw std::domain_error("basis index out of range for pairing of dimension " +
                                std::to_string(pairing.dim()));
    FockVector out;
    if (g.is_creation()) {
        for (const auto& [nu, c] : v.terms()) {
            MultiPartition m = nu;
            m.add_part(g.basis, -g.mode);
            out.add_term(std::move(m), c);
        }
        return out;
    }
    const int n = g.mode;
    for (const auto& [nu, c] : v.terms())
        for (const auto& [j, p] : nu.assignments()) {
            int cnt = p.count(n);
            if (cnt == 0)
                continue;
            MultiPartition m = nu;
            m.remove_part(j, n);
            out.add_term(std::move(m), c * cnt * n * pairing(g.basis, j));
        }
    return out;
}

/// Word-by-word action, rightmost symbol first.
inline FockVector act_element(const Element& x, const FockVector& v, const PairingMatrix& pairing) {
    FockVector out;
    for (const auto& [w, c] : x.terms()) {
        FockVector cur = v;
        for (auto it = w.rbegin(); it != w.rend() && !cur.is_zero(); ++it)
            cur = act_generator(*it, cur, pairing);
        cur *= c;
        out += cur;
    }
    return out;
}

inline FockVector act_element(const NormalElement& x, const FockVector& v,
                              const PairingMatrix& pairing) {
    return act_element(x.to_element(), v, pairing);
}

/* Number of multi-partitions of total weight `level` over `dim` indices:
 * the dim-fold convolution of the partition counts.
 */
inline Integer fock_dim(int level, std::size_t dim) {
    if (level < 0)
        return 0;
    std::vector<Integer> counts(static_cast<std::size_t>(level) + 1);
    for (int l = 0; l <= level; ++l)
        counts[static_cast<std::size_t>(l)] = static_cast<unsigned long>(partitions_of(l).size());
    std::vector<Integer> acc(counts.size());
    acc[0] = 1;
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<Integer> next(counts.size());
        for (std::size_t a = 0; a < acc.size(); ++a)
            for (std::size_t b = 0; a + b < acc.size(); ++b)
                next[a + b] += acc[a] * counts[b];
        acc = std::move(next);
    }
    return acc[static_cast<std::size_t>(level)];
}

} // namespace heisenfock
