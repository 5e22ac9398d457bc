#include "cuspidal/cusp_invariants.hpp"
#include "gen.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cusp;

namespace {

NewtonPairSeq N(std::initializer_list<NewtonPair> l) { return NewtonPairSeq(l); }

// Gap count of <gens> by plain closure; an independent route to delta
// (a plane branch's semigroup has exactly delta gaps).
int64_t gap_count(const std::vector<int64_t>& gens) {
    int64_t g = 0;
    for (auto x : gens) g = std::gcd(g, x);
    if (g != 1) return -1;
    const int64_t bound = gens[0] * gens.back() + 1;  // past the conductor
    std::vector<char> in(bound + 1, 0);
    in[0] = 1;
    for (int64_t x = 1; x <= bound; ++x)
        for (auto w : gens)
            if (w <= x && in[x - w]) {
                in[x] = 1;
                break;
            }
    int64_t gaps = 0;
    for (int64_t x = 0; x <= bound; ++x) gaps += !in[x];
    return gaps;
}

std::vector<int64_t> generators(const NewtonPairSeq& n) {
    // recursion written out independently of the semigroup module
    auto P = newton_to_puiseux(n);
    std::vector<int64_t> w{P[0].P, P[0].Q};
    for (size_t j = 1; j < n.size(); ++j) w.push_back(n[j - 1].p * w.back() + P[j].Q);
    return w;
}

}  // namespace

TEST(Conversions, NewtonToPuiseuxExamples) {
    EXPECT_EQ(newton_to_puiseux(N({{2, 3}, {2, 5}, {2, 3}})), (PuiseuxPairSeq{{8, 12}, {4, 10}, {2, 3}}));
    EXPECT_EQ(newton_to_puiseux(N({{4, 5}})), (PuiseuxPairSeq{{4, 5}}));
    EXPECT_EQ(newton_to_puiseux(N({{2, 5}, {3, 1}})), (PuiseuxPairSeq{{6, 15}, {3, 1}}));
}

TEST(Conversions, PuiseuxToNewtonExamples) {
    EXPECT_EQ(puiseux_to_newton({{8, 12}, {4, 10}, {2, 3}}), N({{2, 3}, {2, 5}, {2, 3}}));
    EXPECT_EQ(puiseux_to_newton({{3, 22}}), N({{3, 22}}));
    EXPECT_EQ(puiseux_to_newton({{6, 15}, {3, 1}}), N({{2, 5}, {3, 1}}));
}

TEST(Conversions, CharacteristicExamples) {
    EXPECT_EQ(characteristic_seq(N({{2, 3}, {2, 5}, {2, 3}})), (CharacteristicSeq{8, {12, 22, 25}}));
    EXPECT_EQ(characteristic_seq(N({{2, 13}})), (CharacteristicSeq{2, {13}}));
    EXPECT_EQ(characteristic_seq(N({{2, 7}, {2, 3}, {2, 3}})), (CharacteristicSeq{8, {28, 34, 37}}));
}

TEST(Multiplicity, Examples) {
    EXPECT_EQ(format_mult(multiplicity_sequence(N({{2, 3}, {2, 5}, {2, 3}}))), "8,4_4,2_3");
    EXPECT_EQ(format_mult(multiplicity_sequence(N({{2, 3}}))), "2");
    EXPECT_EQ(format_mult(multiplicity_sequence(N({{6, 7}, {2, 13}, {2, 3}}))), "24,4_12,2_3");
    EXPECT_EQ(format_mult(multiplicity_sequence(N({{3, 22}}))), "3_7");
}

TEST(Multiplicity, ThreePairTableRows) {
    EXPECT_EQ(format_mult(multiplicity_sequence(N({{2, 3}, {3, 8}, {3, 8}}))), "18,9_4,6,3_4,2");
    EXPECT_EQ(format_mult(multiplicity_sequence(N({{2, 3}, {5, 14}, {2, 9}}))), "20,10_4,8,2_8");
    EXPECT_EQ(format_mult(multiplicity_sequence(N({{3, 11}, {2, 5}, {2, 3}}))), "12_3,8,4_4,2_3");
}

TEST(Delta, Examples) {
    EXPECT_EQ(delta_from_puiseux({{8, 12}, {4, 10}, {2, 3}}), 55);
    EXPECT_EQ(delta_from_puiseux({{2, 13}}), 6);
    EXPECT_EQ(delta_from_puiseux({{3, 22}}), 21);
    EXPECT_EQ(delta_from_multiplicities(parse_mult("8,4_4,2_3")), 55);
    EXPECT_EQ(delta_from_multiplicities(parse_mult("2")), 1);
    EXPECT_EQ(delta_from_multiplicities(parse_mult("3_7")), 21);
    EXPECT_EQ(delta_from_multiplicities({}), 0);
}

TEST(Lct, Examples) {
    EXPECT_EQ(lct({{3, 22}}), Rational(25, 66));
    EXPECT_EQ(lct({{2, 13}}), Rational(15, 26));
    EXPECT_EQ(lct({{8, 12}, {4, 10}, {2, 3}}), Rational(5, 24));
}

TEST(SelfIntersection, Examples) {
    EXPECT_EQ(self_intersection(5, {{2, 13}}), -1);
    EXPECT_EQ(self_intersection(8, {{3, 22}}), -2);
    EXPECT_EQ(self_intersection(12, {{8, 12}, {4, 10}, {2, 3}}), 2);
}

TEST(Fibonacci, Values) {
    EXPECT_EQ(fibonacci(-1), 1);
    EXPECT_EQ(fibonacci(0), 0);
    EXPECT_EQ(fibonacci(5), 5);
    EXPECT_EQ(fibonacci(10), 55);
    EXPECT_EQ(fibonacci(100).str(), "354224848179261915075");
    EXPECT_THROW(fibonacci(-2), DomainError);
}

TEST(Fibonacci, Identities) {
    for (int n = 2; n <= 80; ++n) EXPECT_EQ(fibonacci(n - 2) + fibonacci(n + 2), 3 * fibonacci(n)) << n;
    for (int n = 1; n <= 60; ++n)
        for (int r = 0; r <= n; ++r) {
            BigInt lhs = fibonacci(n) * fibonacci(n) - fibonacci(n + r) * fibonacci(n - r);
            BigInt rhs = fibonacci(r) * fibonacci(r);
            if ((n - r) % 2) rhs = -rhs;
            EXPECT_EQ(lhs, rhs) << n << " " << r;
        }
}

TEST(GenusTarget, Values) {
    EXPECT_EQ(genus_target(3), 1);
    EXPECT_EQ(genus_target(12), 55);
    EXPECT_EQ(genus_target(30), 406);
    EXPECT_EQ(genus_target(1), 0);
}

TEST(Validation, RejectsBadNewtonPairs) {
    EXPECT_THROW(validate(N({})), ValidationError);
    EXPECT_THROW(validate(N({{1, 3}})), ValidationError);
    EXPECT_THROW(validate(N({{2, 4}})), ValidationError);
    EXPECT_THROW(validate(N({{3, 2}})), ValidationError);
    EXPECT_THROW(validate(N({{2, 3}, {2, 0}})), ValidationError);
    EXPECT_NO_THROW(validate(N({{7, 48}, {3, 1}})));
    EXPECT_THROW(newton_to_puiseux(N({{4, 6}})), ValidationError);
}

TEST(Validation, RejectsBadPuiseuxAndCharacteristic) {
    EXPECT_THROW(puiseux_to_newton({{8, 12}, {3, 10}}), ValidationError);
    EXPECT_THROW(validate(CharacteristicSeq{4, {8}}), ValidationError);
    EXPECT_THROW(validate(CharacteristicSeq{4, {6, 8}}), ValidationError);  // 8 is not characteristic
    EXPECT_NO_THROW(validate(CharacteristicSeq{4, {6, 7}}));
}

TEST(Parsing, PairsAndMultiplicities) {
    EXPECT_EQ(parse_pairs("(2,3),(2,5), (2,3)"), N({{2, 3}, {2, 5}, {2, 3}}));
    EXPECT_EQ(parse_mult("16,8_4,4_3,2_3"), parse_mult("16,8x4,4x3,2x3"));
    EXPECT_EQ(parse_mult("(16, 8_4, 4_3, 2_3)"), parse_mult("16,8_4,4_3,2_3"));
    EXPECT_EQ(parse_mult("6,3_5,3_2"), parse_mult("6,3_7"));
    EXPECT_EQ(parse_mult("2,1_4"), parse_mult("2"));
    EXPECT_THROW(parse_mult("2,3"), ValidationError);
    EXPECT_THROW(parse_pairs("(2,3"), ValidationError);
    EXPECT_THROW(parse_mult("4_0"), ValidationError);
}

TEST(Overflow, CheckedArithmeticRaises) {
    EXPECT_THROW(checked_mul(int64_t{1} << 40, int64_t{1} << 40), OverflowError);
    EXPECT_THROW(newton_to_puiseux(N({{1 << 20, (1 << 20) + 1}, {1 << 20, 1}, {1 << 20, 1}, {1 << 20, 1}})),
                 OverflowError);
}

// property tests

TEST(Property, RoundTrips) {
    for (int i = 0; i < 5000; ++i) {
        const auto n = testgen::newton(static_cast<int>(testgen::uniform(1, 4)));
        const auto p = newton_to_puiseux(n);
        ASSERT_EQ(puiseux_to_newton(p), n);
        const auto c = characteristic_seq(n);
        ASSERT_NO_THROW(validate(c));
        ASSERT_EQ(puiseux_from_characteristic(c), p);
        ASSERT_EQ(parse_pairs(format_pairs(n)), n);
        const auto m = multiplicity_sequence(n);
        ASSERT_EQ(parse_mult(format_mult(m)), m);
        ASSERT_EQ(from_entries(m.expand()), m);
    }
}

TEST(Property, DualDeltaAndGapCount) {
    for (int i = 0; i < 4000; ++i) {
        const auto n = testgen::newton(static_cast<int>(testgen::uniform(1, 3)), 5, 20);
        const auto p = newton_to_puiseux(n);
        const BigInt a = delta_from_puiseux(p);
        ASSERT_EQ(a, delta_from_multiplicities(multiplicity_sequence(n))) << format_pairs(n);
        if (p[0].P * p[0].Q < 20000) ASSERT_EQ(a, gap_count(generators(n))) << format_pairs(n);
    }
}

TEST(Property, MultiplicityShape) {
    for (int i = 0; i < 3000; ++i) {
        const auto n = testgen::newton(static_cast<int>(testgen::uniform(1, 4)));
        const auto p = newton_to_puiseux(n);
        const auto m = multiplicity_sequence(n);
        ASSERT_EQ(m.at(0), p[0].P);
        for (size_t r = 1; r < m.runs.size(); ++r) ASSERT_LT(m.runs[r].value, m.runs[r - 1].value);
        for (const auto& r : m.runs) ASSERT_GE(r.value, 2);
        // the first Euclid stage contributes exactly Q_1 + P_1 - gcd(P_1, Q_1)
        int64_t stage1 = 0;
        const int64_t g = std::gcd(p[0].P, p[0].Q);
        int64_t e = p[0].P, c = p[0].Q;
        while (true) {
            stage1 += (c / e) * e;
            if (c % e == 0) break;
            const int64_t r = c % e;
            c = e;
            e = r;
        }
        ASSERT_EQ(stage1, p[0].Q + p[0].P - g);
    }
}

TEST(Property, LctAndSelfIntersectionFormulas) {
    for (int i = 0; i < 2000; ++i) {
        const auto n = testgen::newton(static_cast<int>(testgen::uniform(1, 3)));
        const auto p = newton_to_puiseux(n);
        ASSERT_EQ(lct(p), Rational(1, p[0].P) + Rational(1, p[0].Q));
        int64_t sumQ = 0;
        for (const auto& x : p) sumQ += x.Q;
        const int64_t d = testgen::uniform(1, 100);
        ASSERT_EQ(self_intersection(d, p), 3 * d - 1 - p[0].P - sumQ);
    }
}
