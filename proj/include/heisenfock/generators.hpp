#pragma once

#include "heisenfock/heis_core.hpp"
#include "heisenfock/linalg.hpp"
#include "heisenfock/partitions.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <tuple>
#include <stdexcept>
#include <string>
#include <vector>

namespace heisenfock {

/// s^k chi = binom(chi + k - 1, k) = (1/k!) chi (chi + 1) ... (chi + k - 1).
inline Rational s_coefficient(const Rational& chi, int k) {
    if (k < 0)
        throw std::invalid_argument("s_coefficient: k must be nonnegative");
    Rational r = 1;
    for (int j = 0; j < k; ++j)
        r *= chi + j;
    r /= Rational(factorial(static_cast<unsigned long>(k)));
    return r;
}

enum class SeriesKind { plain, transposed };

namespace detail {

// Coefficient of z^n in exp(+-sum_l a_i(sign*l) z^l / l).
inline Element expand_exponential(std::size_t basis, int n, SeriesKind kind, int mode_sign) {
    if (n < 0)
        throw std::invalid_argument("generator level must be nonnegative");
    Element r;
    for (const auto& lambda : partitions_of(n)) {
        Rational c(Integer(1), z_constant(lambda));
        if (kind == SeriesKind::transposed && lambda.length() % 2 == 1)
            c = -c;
        Word w;
        for (auto it = lambda.parts().rbegin(); it != lambda.parts().rend(); ++it)
            w.emplace_back(basis, mode_sign * *it);
        r.add_term(std::move(w), c);
    }
    return r;
}

} // namespace detail

/* p^(n)_i (plain) or p^(1^n)_i (transposed): the z^n coefficient of
 * exp(+-sum_{l>=1} a_i(-l) z^l / l), i.e.
 *   sum over lambda |- n of (+-1)^{len lambda} a_i(-lambda) / z_lambda.
 */
inline Element expand_p(std::size_t basis, int n, SeriesKind kind = SeriesKind::plain) {
    return detail::expand_exponential(basis, n, kind, -1);
}

/// Same expansion with annihilators a_i(+l).
inline Element expand_q(std::size_t basis, int n, SeriesKind kind = SeriesKind::plain) {
    return detail::expand_exponential(basis, n, kind, +1);
}

enum class FamilyKind { P, Q, P_transposed, Q_transposed };

struct GeneratorFamily {
    FamilyKind kind = FamilyKind::P;
    std::size_t basis = 0;
    int level = 0;

    Element to_element() const {
        switch (kind) {
        case FamilyKind::P: return expand_p(basis, level, SeriesKind::plain);
        case FamilyKind::Q: return expand_q(basis, level, SeriesKind::plain);
        case FamilyKind::P_transposed: return expand_p(basis, level, SeriesKind::transposed);
        case FamilyKind::Q_transposed: return expand_q(basis, level, SeriesKind::transposed);
        }
        throw std::logic_error("unknown family kind");
    }
};

/* Which pair of families a q.p relation is checked for, and the sign of
 * the pairing fed to s^k:
 *   plain       q^(m)     p^(n)     s^k( <a,b>)
 *   transposed  q^(1^m)   p^(1^n)   s^k( <a,b>)
 *   mixed       q^(1^m)   p^(n)     s^k(-<a,b>)
 */
enum class RelationVariant { plain, transposed, mixed };

inline std::string to_string(RelationVariant v) {
    switch (v) {
    case RelationVariant::plain: return "plain";
    case RelationVariant::transposed: return "transposed";
    case RelationVariant::mixed: return "mixed";
    }
    return "?";
}

inline FamilyKind q_family(RelationVariant v) {
    return v == RelationVariant::plain ? FamilyKind::Q : FamilyKind::Q_transposed;
}

inline FamilyKind p_family(RelationVariant v) {
    return v == RelationVariant::transposed ? FamilyKind::P_transposed : FamilyKind::P;
}

/* Memoizes generator expansions; the verification grids ask for the same
 * p^(n)_i many times.
 */
class GeneratorCache {
public:
    const Element& get(FamilyKind kind, std::size_t basis, int level) {
        auto key = std::make_tuple(static_cast<int>(kind), basis, level);
        auto it = cache_.find(key);
        if (it == cache_.end())
            it = cache_.emplace(key, GeneratorFamily{kind, basis, level}.to_element()).first;
        return it->second;
    }

private:
    std::map<std::tuple<int, std::size_t, int>, Element> cache_;
};

/// [x^(m)_a, x^(n)_b] for the two same-type families of `variant`, normal ordered.
struct CommuteCheck {
    NormalElement qq;
    NormalElement pp;
    bool ok() const { return qq.is_zero() && pp.is_zero(); }
};

inline CommuteCheck commute_check(int m, int n, std::size_t alpha, std::size_t beta,
                                  const PairingMatrix& pairing, RelationVariant variant,
                                  GeneratorCache& cache) {
    const Element& qm = cache.get(q_family(variant), alpha, m);
    const Element& qn = cache.get(q_family(variant), beta, n);
    const Element& pm = cache.get(p_family(variant), alpha, m);
    const Element& pn = cache.get(p_family(variant), beta, n);
    return {commutator(qm, qn, pairing), commutator(pm, pn, pairing)};
}

inline bool verify_qq_pp_commute(int m, int n, std::size_t alpha, std::size_t beta,
                                 const PairingMatrix& pairing,
                                 RelationVariant variant = RelationVariant::plain) {
    GeneratorCache cache;
    return commute_check(m, n, alpha, beta, pairing, variant, cache).ok();
}

/// Both sides of q^(m)_a p^(n)_b = sum_k s^k(+-<a,b>) p^(n-k)_b q^(m-k)_a.
struct RelationSides {
    NormalElement lhs;
    NormalElement rhs;
    bool ok() const { return lhs == rhs; }
};

inline RelationSides qp_relation_sides(int m, int n, std::size_t alpha, std::size_t beta,
                                       const PairingMatrix& pairing, RelationVariant variant,
                                       GeneratorCache& cache) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("relation levels must be nonnegative");
    const FamilyKind qk = q_family(variant), pk = p_family(variant);
    Rational chi = pairing(alpha, beta);
    if (variant == RelationVariant::mixed)
        chi = -chi;
    RelationSides sides;
    sides.lhs = normal_order(cache.get(qk, alpha, m) * cache.get(pk, beta, n), pairing);
    for (int k = 0; k <= std::min(m, n); ++k) {
        Rational s = s_coefficient(chi, k);
        if (s == 0)
            continue;
        NormalElement term =
            normal_order(cache.get(pk, beta, n - k) * cache.get(qk, alpha, m - k), pairing);
        sides.rhs += term * s;
    }
    return sides;
}

inline bool verify_qp_relation(int m, int n, std::size_t alpha, std::size_t beta,
                               const PairingMatrix& pairing,
                               RelationVariant variant = RelationVariant::plain) {
    GeneratorCache cache;
    return qp_relation_sides(m, n, alpha, beta, pairing, variant, cache).ok();
}

/* Result of running every relation on the grid 0 <= m, n <= max_level
 * and all ordered basis pairs (a, b).
 */
struct RelationGridReport {
    std::size_t instances = 0;
    bool ok = true;
    std::string first_failure;
};

inline RelationGridReport verify_relation_grid(int max_level, const PairingMatrix& pairing,
                                               RelationVariant variant,
                                               bool total_degree_bound = false) {
    RelationGridReport report;
    GeneratorCache cache;
    const std::size_t d = pairing.dim();
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (int m = 0; m <= max_level; ++m)
                for (int n = 0; n <= max_level; ++n) {
                    if (total_degree_bound && m + n > max_level)
                        continue;
                    ++report.instances;
                    auto comm = commute_check(m, n, a, b, pairing, variant, cache);
                    auto sides = qp_relation_sides(m, n, a, b, pairing, variant, cache);
                    if ((comm.ok() && sides.ok()) || !report.ok)
                        continue;
                    report.ok = false;
                    std::string where = "variant=" + to_string(variant) + " alpha=" +
                                        std::to_string(a) + " beta=" + std::to_string(b) +
                                        " m=" + std::to_string(m) + " n=" + std::to_string(n);
                    if (!comm.qq.is_zero())
                        report.first_failure = where + ": [q,q] = " + comm.qq.to_string();
                    else if (!comm.pp.is_zero())
                        report.first_failure = where + ": [p,p] = " + comm.pp.to_string();
                    else
                        report.first_failure = where + ": lhs = " + sides.lhs.to_string() +
                                               " but rhs = " + sides.rhs.to_string();
                }
    return report;
}

/* p(nu) q(mu) with the product taken over basis indices ascending and,
 * inside each index, over levels ascending, then normal ordered.
 */
inline NormalElement pq_to_a_basis(const MultiPartition& nu, const MultiPartition& mu,
                                   const PairingMatrix& pairing) {
    Element prod = Element::unit();
    auto append = [&](const MultiPartition& part, FamilyKind kind) {
        for (const auto& [i, p] : part.assignments())
            for (auto [level, mult] : p.multiplicities())
                for (int r = 0; r < mult; ++r)
                    prod = prod * GeneratorFamily{kind, i, level}.to_element();
    };
    append(nu, FamilyKind::P);
    append(mu, FamilyKind::Q);
    return normal_order(prod, pairing);
}

/// Coefficient of a(-nu) a(mu) in p(nu) q(mu): prod over all parts k of 1/k.
inline Rational leading_coefficient(const MultiPartition& nu, const MultiPartition& mu) {
    Rational c = 1;
    for (const auto* part : {&nu, &mu})
        for (const auto& [i, p] : part->assignments())
            for (int k : p.parts())
                c /= k;
    return c;
}

inline bool pair_coarser(const NormalKey& coarse, const NormalKey& fine) {
    return multipartition_coarser(coarse.creation, fine.creation) &&
           multipartition_coarser(coarse.annihilation, fine.annihilation);
}

struct TriangularityReport {
    bool ok = true;
    std::size_t pairs_checked = 0;
    std::string first_failure;
};

/* For every (nu, mu) with |nu| + |mu| <= weight_bound over the pairing's
 * basis: the diagonal coefficient of p(nu) q(mu) is leading_coefficient
 * (nonzero) and every other term is strictly finer. Also checks that the
 * transition matrix of each bidegree (|nu|, |mu|) has full rank.
 */
inline TriangularityReport triangularity_report(int weight_bound, const PairingMatrix& pairing) {
    if (weight_bound < 0)
        throw std::invalid_argument("weight bound must be nonnegative");
    TriangularityReport rep;
    const std::size_t d = pairing.dim();
    auto fail = [&](std::string msg) {
        if (rep.ok)
            rep.first_failure = std::move(msg);
        rep.ok = false;
    };
    for (int wn = 0; wn <= weight_bound; ++wn)
        for (int wm = 0; wn + wm <= weight_bound; ++wm) {
            auto nus = multipartitions_of(wn, d);
            auto mus = multipartitions_of(wm, d);
            std::vector<NormalKey> keys;
            for (const auto& nu : nus)
                for (const auto& mu : mus)
                    keys.push_back({nu, mu});
            std::map<NormalKey, std::size_t> column;
            for (std::size_t c = 0; c < keys.size(); ++c)
                column.emplace(keys[c], c);
            RationalMatrix matrix(keys.size(), std::vector<Rational>(keys.size()));
            for (std::size_t r = 0; r < keys.size(); ++r) {
                const NormalKey& key = keys[r];
                ++rep.pairs_checked;
                NormalElement x = pq_to_a_basis(key.creation, key.annihilation, pairing);
                Rational diag = x.coefficient(key);
                if (diag == 0 || diag != leading_coefficient(key.creation, key.annihilation))
                    fail("diagonal coefficient " + to_string(diag) + " at nu=" +
                         key.creation.to_string() + " mu=" + key.annihilation.to_string());
                for (const auto& [k, c] : x.terms()) {
                    auto col = column.find(k);
                    if (col == column.end()) {
                        fail("term outside bidegree at nu=" + key.creation.to_string());
                        continue;
                    }
                    matrix[r][col->second] = c;
                    if (k == key)
                        continue;
                    if (!pair_coarser(key, k))
                        fail("term " + k.creation.to_string() + "," + k.annihilation.to_string() +
                             " not finer than " + key.creation.to_string() + "," +
                             key.annihilation.to_string());
                }
            }
            if (rank(matrix) != keys.size())
                fail("transition matrix singular in bidegree (" + std::to_string(wn) + "," +
                     std::to_string(wm) + ")");
        }
    return rep;
}

inline bool check_triangularity(int weight_bound, const PairingMatrix& pairing) {
    return triangularity_report(weight_bound, pairing).ok;
}

} // namespace heisenfock
