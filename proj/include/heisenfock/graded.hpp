#pragma once

#include "heisenfock/rational.hpp"

#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace heisenfock {

/* Dimension vector of a finite-dimensional Z-graded vector space: degree
 * -> dimension, zero entries never stored.
 */
class GradedDims {
public:
    using map_type = std::map<int, Integer>;

    GradedDims() = default;
    GradedDims(std::initializer_list<std::pair<const int, long>> init) {
        for (auto [deg, dim] : init)
            add(deg, Integer(dim));
    }

    static GradedDims unit() { return GradedDims{{0, 1}}; }

    const map_type& dims() const noexcept { return dims_; }
    bool is_zero() const noexcept { return dims_.empty(); }

    Integer at(int degree) const {
        auto it = dims_.find(degree);
        return it == dims_.end() ? Integer(0) : it->second;
    }

    void add(int degree, const Integer& dim) {
        if (dim < 0)
            throw std::invalid_argument("graded dimensions must be nonnegative");
        if (dim == 0)
            return;
        dims_[degree] += dim;
    }

    Integer total() const {
        Integer t = 0;
        for (const auto& [deg, dim] : dims_)
            t += dim;
        return t;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [deg, dim] : dims_) {
            if (!first)
                s += ", ";
            first = false;
            s += std::to_string(deg) + ":" + dim.get_str();
        }
        return s + "}";
    }

    friend bool operator==(const GradedDims&, const GradedDims&) = default;

private:
    map_type dims_;
};

/// sum_i (-1)^i dim W^i
inline Integer euler(const GradedDims& w) {
    Integer e = 0;
    for (const auto& [deg, dim] : w.dims()) {
        if (deg % 2 == 0)
            e += dim;
        else
            e -= dim;
    }
    return e;
}

/// graded convolution
inline GradedDims tensor(const GradedDims& a, const GradedDims& b) {
    GradedDims r;
    for (const auto& [i, x] : a.dims())
        for (const auto& [j, y] : b.dims())
            r.add(i + j, x * y);
    return r;
}

/* koszul: odd-degree generators anticommute in S^k and commute in the
 * exterior power. ungraded: parity is ignored, every generator behaves
 * like an even one (kept for comparison only).
 */
enum class SignConvention { koszul, ungraded };

namespace detail {

// t-power -> (q-degree -> coefficient)
using BiSeries = std::map<int, std::map<int, Integer>>;

inline BiSeries truncated_product(const BiSeries& a, const BiSeries& b, int max_t) {
    BiSeries r;
    for (const auto& [ta, qa] : a)
        for (const auto& [tb, qb] : b) {
            if (ta + tb > max_t)
                continue;
            auto& slot = r[ta + tb];
            for (const auto& [da, ca] : qa)
                for (const auto& [db, cb] : qb)
                    slot[da + db] += ca * cb;
        }
    return r;
}

/* Coefficient of t^k in prod over degrees i of
 *   (1 - t q^i)^{-dim}  if the generator is "polynomial" (repeatable),
 *   (1 + t q^i)^{dim}   if it is "exterior" (squares to zero).
 */
inline GradedDims power_series_coefficient(const GradedDims& w, int k, bool even_polynomial,
                                           SignConvention conv) {
    if (k < 0)
        throw std::invalid_argument("power index must be nonnegative");
    BiSeries acc;
    acc[0][0] = 1;
    for (const auto& [deg, dim] : w.dims()) {
        bool even = conv == SignConvention::ungraded || deg % 2 == 0;
        bool polynomial = even == even_polynomial;
        BiSeries factor;
        for (int j = 0; j <= k; ++j) {
            Integer c = polynomial ? binomial(Integer(dim + j - 1), static_cast<unsigned long>(j))
                                   : binomial(dim, static_cast<unsigned long>(j));
            if (c != 0)
                factor[j][deg * j] = c;
        }
        acc = truncated_product(acc, factor, k);
    }
    GradedDims r;
    auto it = acc.find(k);
    if (it != acc.end())
        for (const auto& [deg, c] : it->second)
            r.add(deg, c);
    return r;
}

} // namespace detail

/// Graded symmetric power S^k W.
inline GradedDims sym_power(const GradedDims& w, int k,
                            SignConvention conv = SignConvention::koszul) {
    return detail::power_series_coefficient(w, k, true, conv);
}

/// Graded exterior power: even classes anticommute, odd classes are repeatable.
inline GradedDims ext_power(const GradedDims& w, int k,
                            SignConvention conv = SignConvention::koszul) {
    return detail::power_series_coefficient(w, k, false, conv);
}

} // namespace heisenfock
