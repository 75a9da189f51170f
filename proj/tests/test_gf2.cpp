#include <random>

#include <gtest/gtest.h>

#include "finigeo/gf2.hpp"
#include "oracles.hpp"

using namespace finigeo;

namespace {

BinaryVector e(int k) { return BinaryVector::unit(k, 6); }
BinaryVector v6(std::initializer_list<int> coords) {
    std::uint8_t b = 0;
    int k = 0;
    for (int c : coords) b |= static_cast<std::uint8_t>(c << k++);
    return BinaryVector(b, 6);
}

QuadraticForm random_form(std::mt19937& rng, int dim) {
    QuadraticForm q(dim);
    std::bernoulli_distribution coin(0.5);
    for (int i = 1; i <= dim; ++i)
        for (int j = i; j <= dim; ++j) q.set_coeff(i, j, coin(rng));
    return q;
}

}  // namespace

TEST(BinaryVector, AdditionIsXorAndSelfInverse) {
    for (auto x : projective_points(6)) EXPECT_TRUE((x + x).is_zero());
    EXPECT_EQ(v6({1, 1, 0, 0, 0, 0}), e(1) + e(2));
    EXPECT_EQ(e(3).coord(3), 1);
    EXPECT_EQ(e(3).bits, 0b100);  // x_k lives in bit k-1
}

TEST(BinaryVector, RejectsBadDimensions) {
    EXPECT_THROW(BinaryVector(0b1000000, 6), InputError);
    EXPECT_THROW(BinaryVector::unit(7, 6), InputError);
    EXPECT_THROW(e(1) + BinaryVector::unit(1, 5), InputError);
}

TEST(Symplectic, BasisValues) {
    const SymplecticForm theta(6);
    EXPECT_EQ(symplectic_eval(theta, e(1), e(2)), 1);
    EXPECT_EQ(symplectic_eval(theta, e(1), e(3)), 0);
    const auto ones = v6({1, 1, 1, 1, 1, 1});
    EXPECT_EQ(symplectic_eval(theta, ones, ones), 0);
}

TEST(Symplectic, MatchesOracleOnAllPairs) {
    const SymplecticForm theta(6);
    const auto pts = projective_points(6);
    const auto ref = oracle::nonzero_vectors();
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = 0; b < pts.size(); ++b) ASSERT_EQ(theta.eval(pts[a], pts[b]), oracle::theta(ref[a], ref[b]));
}

TEST(Symplectic, AlternatingAndNonDegenerate) {
    const SymplecticForm theta(6);
    const auto pts = projective_points(6);
    for (auto x : pts) {
        EXPECT_EQ(theta.eval(x, x), 0);
        bool witness = false;
        for (auto y : pts) witness |= theta.eval(x, y) == 1;
        EXPECT_TRUE(witness) << x.to_string();
    }
    EXPECT_TRUE(theta.as_bilinear().radical().empty());
}

TEST(Symplectic, DimensionMismatch) {
    EXPECT_THROW((void)SymplecticForm(6).eval(e(1), BinaryVector::unit(1, 4)), InputError);
    EXPECT_THROW(SymplecticForm(5), InputError);
}

TEST(Quadratic, Examples) {
    const auto hyp = QuadraticForm::hyperbolic(6);
    EXPECT_EQ(quad_eval(hyp, v6({1, 0, 0, 0, 0, 0})), 0);
    EXPECT_EQ(quad_eval(hyp, v6({1, 1, 0, 0, 0, 0})), 1);
    // f(1,1) = 1 + 1 + 1 = 1
    EXPECT_EQ(quad_eval(QuadraticForm::elliptic(6), v6({1, 1, 0, 0, 0, 0})), 1);
    EXPECT_THROW(quad_eval(hyp, BinaryVector::unit(1, 5)), InputError);
}

TEST(Quadratic, MatchesOracleForms) {
    const auto hyp = QuadraticForm::hyperbolic(6);
    const auto ell = QuadraticForm::elliptic(6);
    const auto pts = projective_points(6);
    const auto ref = oracle::nonzero_vectors();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        EXPECT_EQ(hyp.eval(pts[i]), oracle::hyperbolic(ref[i]));
        EXPECT_EQ(ell.eval(pts[i]), oracle::elliptic(ref[i]));
    }
}

TEST(Polarize, StandardFormsGiveTheSymplecticForm) {
    const auto theta = SymplecticForm(6);
    const auto bh = polarize(QuadraticForm::hyperbolic(6));
    const auto be = polarize(QuadraticForm::elliptic(6));
    EXPECT_EQ(bh, theta.as_bilinear());
    EXPECT_EQ(be, theta.as_bilinear());
    for (auto x : projective_points(6))
        for (auto y : projective_points(6)) {
            ASSERT_EQ(bh.eval(x, y), theta.eval(x, y));
            ASSERT_EQ(be.eval(x, y), theta.eval(x, y));
        }
}

TEST(Polarize, ParabolicRadicalIsNucleusDirection) {
    const auto b = polarize(QuadraticForm::parabolic(5));
    const auto rad = b.radical();
    ASSERT_EQ(rad.size(), 1u);
    EXPECT_EQ(rad.front(), BinaryVector::unit(5, 5));
    EXPECT_EQ(b.radical_dimension(), 1);
}

TEST(Polarize, DegenerateForms) {
    QuadraticForm q(6);
    q.set_coeff(1, 2, 1);  // x1x2: x3..x6 all absent
    EXPECT_EQ(polarize(q).radical_dimension(), 4);
    q.set_coeff(3, 4, 1);  // x1x2 + x3x4: x5, x6 absent
    EXPECT_EQ(polarize(q).radical_dimension(), 2);
}

// Q(x+x) = 0 and B(x,y) = Q(x+y) + Q(x) + Q(y) on all pairs, for random forms.
TEST(Polarize, IdentityHoldsForRandomForms) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 50; ++trial) {
        const int dim = 4 + trial % 3;
        const auto q = random_form(rng, dim);
        const auto b = polarize(q);
        EXPECT_TRUE(b.is_alternating());
        for (auto x : projective_points(dim)) {
            EXPECT_EQ(q.eval(x + x), 0);
            for (auto y : projective_points(dim)) ASSERT_EQ(b.eval(x, y), q.eval(x + y) ^ q.eval(x) ^ q.eval(y));
        }
    }
}

TEST(Classify, StandardForms) {
    const auto h = classify_form(QuadraticForm::hyperbolic(6));
    EXPECT_EQ(h.kind, FormKind::Hyperbolic);
    EXPECT_EQ(h.zero_count, oracle::count_zeros(oracle::hyperbolic));
    EXPECT_EQ(h.zero_count, 35);

    const auto el = classify_form(QuadraticForm::elliptic(6));
    EXPECT_EQ(el.kind, FormKind::Elliptic);
    EXPECT_EQ(el.zero_count, oracle::count_zeros(oracle::elliptic));
    EXPECT_EQ(el.zero_count, 27);

    const auto p = classify_form(QuadraticForm::parabolic(5));
    EXPECT_EQ(p.kind, FormKind::Parabolic);
    EXPECT_EQ(p.zero_count, 15);

    EXPECT_EQ(classify_form(QuadraticForm::hyperbolic(4)).zero_count, 9);
    EXPECT_EQ(classify_form(QuadraticForm::elliptic(4)).kind, FormKind::Elliptic);
    EXPECT_EQ(classify_form(QuadraticForm::elliptic(4)).zero_count, 5);
}

TEST(Classify, ZeroFormIsDegenerate) {
    const auto z = classify_form(QuadraticForm(6));
    EXPECT_EQ(z.kind, FormKind::Degenerate);
    EXPECT_EQ(z.zero_count, 63);
}

TEST(Classify, UnsupportedDimension) {
    EXPECT_THROW(classify_form(QuadraticForm(3)), InputError);
    EXPECT_THROW(classify_form(QuadraticForm(7)), InputError);
}

// Moving the irreducible part to another hyperbolic pair keeps the count.
TEST(Classify, InvariantUnderPairPermutation) {
    for (int pair = 0; pair < 3; ++pair) {
        QuadraticForm q = QuadraticForm::hyperbolic(6);
        q.set_coeff(2 * pair + 1, 2 * pair + 1, 1);
        q.set_coeff(2 * pair + 2, 2 * pair + 2, 1);
        const auto c = classify_form(q);
        EXPECT_EQ(c.kind, FormKind::Elliptic);
        EXPECT_EQ(c.zero_count, 27);
    }
}
