#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace heisenfock;

namespace {

FockVector mono(MultiPartition nu, Rational c = 1) { return FockVector::monomial(std::move(nu), c); }

} // namespace

TEST(FockAct, GeneratorExamples) {
    auto p = PairingMatrix::identity(1);
    EXPECT_TRUE(act_generator({0, 3}, FockVector::vacuum(), p).is_zero());
    EXPECT_EQ(act_generator({0, -2}, FockVector::vacuum(), p), mono({{0, Partition{2}}}));
    EXPECT_EQ(act_generator({0, 1}, mono({{0, Partition{1, 1}}}), p),
              mono({{0, Partition{1}}}, 2));
}

TEST(FockAct, DerivationUsesPairingAcrossIndices) {
    PairingMatrix p({{2, Rational(1, 3)}, {7, -1}});
    // a_0(2) on a_0(-2) a_1(-2)^2 |0>
    MultiPartition nu{{0, Partition{2}}, {1, Partition{2, 2}}};
    FockVector r = act_generator({0, 2}, mono(nu), p);
    FockVector expected = mono({{1, Partition{2, 2}}}, 2 * 2) +
                          mono({{0, Partition{2}}, {1, Partition{2}}}, Rational(2 * 2, 3));
    EXPECT_EQ(r, expected);
    EXPECT_THROW(act_generator({2, 1}, mono(nu), p), std::domain_error);
}

TEST(FockAct, ElementExamples) {
    const Rational chi(-4, 9);
    auto p = PairingMatrix::scalar(chi);
    FockVector v = mono({{0, Partition{3, 1}}}, Rational(2, 5));
    EXPECT_EQ(act_element(Element::unit(), v, p), v);
    Element x = Element::generator(0, 1) * Element::generator(0, -1);
    EXPECT_EQ(act_element(x, FockVector::vacuum(), p), chi * FockVector::vacuum());
    FockVector p2 = act_element(expand_p(0, 2), FockVector::vacuum(), p);
    EXPECT_EQ(p2, mono({{0, Partition{2}}}, Rational(1, 2)) +
                      mono({{0, Partition{1, 1}}}, Rational(1, 2)));
    EXPECT_EQ(p2.to_string(), "1/2 a(0,-1)^2 + 1/2 a(0,-2)");
    EXPECT_EQ(FockVector::vacuum().to_string(), "1");
}

TEST(FockDim, Examples) {
    EXPECT_EQ(fock_dim(0, 3), 1);
    EXPECT_EQ(fock_dim(4, 1), 5);
    EXPECT_EQ(fock_dim(2, 2), 5);
    for (int l = 0; l <= 6; ++l)
        EXPECT_EQ(fock_dim(l, 2), Integer(static_cast<unsigned long>(multipartitions_of(l, 2).size())));
}

TEST(FockAxioms, VacuumKilledByAllQ) {
    std::mt19937 rng(1);
    auto p = support::random_pairing(rng, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (int n = 1; n <= 8; ++n) {
            EXPECT_TRUE(act_element(expand_q(i, n), FockVector::vacuum(), p).is_zero());
            EXPECT_TRUE(
                act_element(expand_q(i, n, SeriesKind::transposed), FockVector::vacuum(), p).is_zero());
        }
}

TEST(FockAxioms, RepresentationProperty) {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t d = 1 + trial % 3;
        auto p = support::random_pairing(rng, d);
        Element x = support::random_element(rng, d, 3, 4);
        Element y = support::random_element(rng, d, 3, 4);
        FockVector v = act_element(support::random_creation_element(rng, d), FockVector::vacuum(), p);
        EXPECT_EQ(act_element(normal_order(x * y, p), v, p), act_element(x, act_element(y, v, p), p));
    }
}

TEST(FockAxioms, CreationOrbitSpansEachDegree) {
    for (std::size_t d = 1; d <= 3; ++d) {
        auto p = PairingMatrix::identity(d);
        for (int l = 0; l <= 8; ++l) {
            auto basis = multipartitions_of(l, d);
            std::map<MultiPartition, std::size_t> column;
            for (std::size_t c = 0; c < basis.size(); ++c)
                column.emplace(basis[c], c);
            RationalMatrix m;
            for (const auto& nu : basis) {
                NormalKey k{nu, {}};
                FockVector v = act_element(Element(canonical_word(k)), FockVector::vacuum(), p);
                std::vector<Rational> row(basis.size());
                for (const auto& [mono_nu, c] : v.terms())
                    row[column.at(mono_nu)] = c;
                m.push_back(std::move(row));
            }
            EXPECT_EQ(Integer(static_cast<unsigned long>(rank(m))), fock_dim(l, d))
                << "d=" << d << " l=" << l;
        }
    }
}

TEST(FockAxioms, POperatorsCommuteOnGradedPieces) {
    std::mt19937 rng(4);
    for (std::size_t d = 1; d <= 2; ++d) {
        auto p = support::random_pairing(rng, d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                for (int m = 1; m <= 4; ++m)
                    for (int n = 1; m + n <= 8; ++n)
                        for (int l = 0; l + m + n <= 8; ++l)
                            for (const auto& nu : multipartitions_of(l, d)) {
                                FockVector v = FockVector::monomial(nu);
                                EXPECT_EQ(act_element(expand_p(a, m), act_element(expand_p(b, n), v, p), p),
                                          act_element(expand_p(b, n), act_element(expand_p(a, m), v, p), p));
                            }
    }
}
