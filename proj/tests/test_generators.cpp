#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace heisenfock;

namespace {

Word creators(std::size_t i, std::vector<int> parts) {
    Word w;
    for (int k : parts)
        w.emplace_back(i, -k);
    return w;
}

Word annihilators(std::size_t i, std::vector<int> parts) {
    Word w;
    for (int k : parts)
        w.emplace_back(i, k);
    return w;
}

// Oracle: coefficients of exp(S) with S = sign * sum_l a_i(mode_sign*l) z^l / l,
// by summing S^j / j! as truncated power series of free-algebra elements.
std::vector<Element> exp_series(std::size_t i, int order, int sign, int mode_sign) {
    std::vector<Element> s(static_cast<std::size_t>(order) + 1);
    for (int l = 1; l <= order; ++l)
        s[static_cast<std::size_t>(l)] =
            Rational(sign, l) * Element::generator(i, mode_sign * l);
    std::vector<Element> result(s.size()), power(s.size());
    power[0] = Element::unit();
    result[0] = Element::unit();
    Rational inv_fact = 1;
    for (int j = 1; j <= order; ++j) {
        std::vector<Element> next(s.size());
        for (std::size_t a = 0; a < s.size(); ++a)
            for (std::size_t b = 1; a + b < s.size(); ++b)
                if (!power[a].is_zero() && !s[b].is_zero())
                    next[a + b] += power[a] * s[b];
        power = std::move(next);
        inv_fact /= j;
        for (std::size_t n = 0; n < s.size(); ++n)
            result[n] += inv_fact * power[n];
    }
    return result;
}

} // namespace

TEST(SCoefficient, Examples) {
    const Rational chi(-7, 5);
    EXPECT_EQ(s_coefficient(chi, 0), 1);
    EXPECT_EQ(s_coefficient(chi, 1), chi);
    EXPECT_EQ(s_coefficient(3, 2), 6);
    EXPECT_EQ(s_coefficient(-2, 2), 1);
    EXPECT_EQ(s_coefficient(-2, 3), 0);
    EXPECT_EQ(s_coefficient(3, 2), Rational(sym_power(GradedDims{{0, 3}}, 2).total()));
    EXPECT_EQ(s_coefficient(-2, 2), Rational(ext_power(GradedDims{{0, 2}}, 2).total()));
    EXPECT_THROW(s_coefficient(1, -1), std::invalid_argument);
}

TEST(SCoefficient, BinomialFormula) {
    std::vector<Rational> chis;
    for (int c = -3; c <= 3; ++c)
        chis.emplace_back(c);
    chis.emplace_back(1, 2);
    chis.emplace_back(-7, 3);
    chis.emplace_back(5, 4);
    for (const auto& chi : chis) {
        auto oracle = support::binomial_series_oracle(chi, 8);
        for (int k = 0; k <= 8; ++k)
            EXPECT_EQ(s_coefficient(chi, k), oracle[static_cast<std::size_t>(k)])
                << "chi=" << chi << " k=" << k;
    }
}

TEST(ExpandP, LowLevels) {
    EXPECT_EQ(expand_p(0, 0), Element::unit());
    EXPECT_EQ(expand_p(0, 0, SeriesKind::transposed), Element::unit());
    EXPECT_EQ(expand_p(1, 1), Element::generator(1, -1));
    Element p2;
    p2.add_term(creators(0, {2}), Rational(1, 2));
    p2.add_term(creators(0, {1, 1}), Rational(1, 2));
    EXPECT_EQ(expand_p(0, 2), p2);
    Element pt2;
    pt2.add_term(creators(0, {2}), Rational(-1, 2));
    pt2.add_term(creators(0, {1, 1}), Rational(1, 2));
    EXPECT_EQ(expand_p(0, 2, SeriesKind::transposed), pt2);
    EXPECT_THROW(expand_p(0, -1), std::invalid_argument);
}

TEST(ExpandQ, LowLevels) {
    EXPECT_EQ(expand_q(0, 0), Element::unit());
    EXPECT_EQ(expand_q(0, 1), Element::generator(0, 1));
    Element q3;
    q3.add_term(annihilators(0, {3}), Rational(1, 3));
    q3.add_term(annihilators(0, {1, 2}), Rational(1, 2));
    q3.add_term(annihilators(0, {1, 1, 1}), Rational(1, 6));
    EXPECT_EQ(expand_q(0, 3), q3);
}

TEST(ExpandP, MatchesSeriesExponentiation) {
    auto p = PairingMatrix::identity(1);
    for (auto [sign, kind] : {std::pair{1, SeriesKind::plain}, std::pair{-1, SeriesKind::transposed}}) {
        auto creation = exp_series(0, 8, sign, -1);
        auto annihilation = exp_series(0, 8, sign, +1);
        for (int n = 0; n <= 8; ++n) {
            EXPECT_EQ(normal_order(expand_p(0, n, kind), p),
                      normal_order(creation[static_cast<std::size_t>(n)], p))
                << n;
            EXPECT_EQ(normal_order(expand_q(0, n, kind), p),
                      normal_order(annihilation[static_cast<std::size_t>(n)], p))
                << n;
        }
    }
}

TEST(Lemma, TrivialCommutators) {
    EXPECT_TRUE(verify_qq_pp_commute(0, 3, 0, 0, PairingMatrix::identity(1)));
    EXPECT_TRUE(verify_qq_pp_commute(2, 3, 0, 0, PairingMatrix::scalar(5)));
    std::mt19937 rng(3);
    auto p = support::random_pairing(rng, 2);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            EXPECT_TRUE(verify_qq_pp_commute(3, 3, a, b, p));
}

TEST(Lemma, QPRelationSmallCases) {
    const Rational chi(2, 3);
    auto p = PairingMatrix::scalar(chi);
    EXPECT_TRUE(verify_qp_relation(1, 1, 0, 0, p));
    // q^(1) p^(1) = p^(1) q^(1) + chi explicitly
    NormalElement lhs = normal_order(expand_q(0, 1) * expand_p(0, 1), p);
    NormalElement rhs = normal_order(expand_p(0, 1) * expand_q(0, 1), p) + NormalElement(chi);
    EXPECT_EQ(lhs, rhs);
    for (int n = 0; n <= 4; ++n)
        EXPECT_TRUE(verify_qp_relation(0, n, 0, 0, p));
}

TEST(Lemma, QPRelationGrid) {
    std::mt19937 rng(17);
    std::vector<PairingMatrix> pairings{PairingMatrix::identity(2), support::random_pairing(rng, 2),
                                        support::random_pairing(rng, 2, true)};
    for (const auto& p : pairings)
        for (auto variant :
             {RelationVariant::plain, RelationVariant::transposed, RelationVariant::mixed}) {
            auto rep = verify_relation_grid(6, p, variant, true);
            EXPECT_TRUE(rep.ok) << rep.first_failure;
            EXPECT_EQ(rep.instances, 4u * 28u);
        }
}

TEST(Lemma, WrongCoefficientSignIsDetected) {
    auto p = PairingMatrix::scalar(Rational(3, 2));
    GeneratorCache cache;
    // plain families with the mixed coefficient s^k(-chi) must not match
    auto sides = qp_relation_sides(2, 2, 0, 0, p, RelationVariant::plain, cache);
    NormalElement wrong;
    for (int k = 0; k <= 2; ++k)
        wrong += normal_order(expand_p(0, 2 - k) * expand_q(0, 2 - k), p) *
                 s_coefficient(Rational(-3, 2), k);
    EXPECT_TRUE(sides.ok());
    EXPECT_NE(sides.lhs, wrong);
}

TEST(PQBasis, Examples) {
    auto p = PairingMatrix::scalar(Rational(5, 3));
    EXPECT_EQ(pq_to_a_basis({}, {}, p), NormalElement(1));
    MultiPartition one{{0, Partition{1}}};
    EXPECT_EQ(pq_to_a_basis(one, {}, p), normal_order(Element::generator(0, -1), p));
    MultiPartition two{{0, Partition{2}}};
    NormalElement x = pq_to_a_basis(two, one, p);
    EXPECT_EQ(x.coefficient({two, one}), Rational(1, 2));
    EXPECT_EQ(x.coefficient({MultiPartition{{0, Partition{1, 1}}}, one}), Rational(1, 2));
    EXPECT_EQ(x.size(), 2u);
}

TEST(PQBasis, DiagonalCoefficientIsProductOfInverseParts) {
    auto p = PairingMatrix::identity(1);
    MultiPartition nu{{0, Partition{2, 2}}};
    EXPECT_EQ(pq_to_a_basis(nu, {}, p).coefficient({nu, {}}), Rational(1, 4));
    EXPECT_EQ(leading_coefficient(nu, {}), Rational(1, 4));
}

TEST(Triangularity, Examples) {
    EXPECT_TRUE(check_triangularity(0, PairingMatrix::identity(1)));
    EXPECT_TRUE(check_triangularity(4, PairingMatrix::identity(1)));
    std::mt19937 rng(8);
    auto rep = triangularity_report(5, support::random_pairing(rng, 2));
    EXPECT_TRUE(rep.ok) << rep.first_failure;
    EXPECT_GT(rep.pairs_checked, 0u);
    EXPECT_THROW(check_triangularity(-1, PairingMatrix::identity(1)), std::invalid_argument);
}

TEST(Linalg, Rank) {
    RationalMatrix m{{1, 2}, {2, 4}};
    EXPECT_EQ(rank(m), 1u);
    RationalMatrix id{{1, 0, 0}, {0, 0, 1}, {0, 1, 0}};
    EXPECT_EQ(rank(id), 3u);
    EXPECT_EQ(rank({}), 0u);
}
