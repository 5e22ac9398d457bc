#include "cuspidal/enumerator.hpp"
#include "cuspidal/families.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace cusp;

namespace {

NewtonPairSeq N(std::initializer_list<NewtonPair> l) { return NewtonPairSeq(l); }
FamilySpec F(FamilyKind k, std::vector<int64_t> p) { return FamilySpec{k, std::move(p)}; }

// direct recursion a(n) = sum over proper divisors, written independently
int64_t count_factorizations(int64_t n) {
    if (n == 1) return 1;
    int64_t s = 0;
    for (int64_t f = 2; f <= n; ++f)
        if (n % f == 0) s += count_factorizations(n / f);
    return s;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

}  // namespace

TEST(Ams, Examples) {
    auto a = ams_curve({3, 2, 2});
    EXPECT_EQ(a.degree, 12);
    EXPECT_EQ(a.newton, N({{2, 3}, {2, 5}, {2, 3}}));
    EXPECT_EQ(ams_curve({12}).newton, N({{11, 12}}));
    auto b = ams_curve({2, 3});
    EXPECT_EQ(b.degree, 6);
    EXPECT_EQ(b.newton, N({{3, 11}}));
    EXPECT_EQ(b.kodaira, Kodaira::minus_infinity);
    EXPECT_EQ(b.existence, Existence::proved_family);
    EXPECT_THROW(ams_curve({}), DomainError);
    EXPECT_THROW(ams_curve({3, 1}), DomainError);
    EXPECT_THROW(ams_curve({2}), DomainError);
}

TEST(Ams, AllOfDegree) {
    std::set<NewtonPairSeq> six;
    for (const auto& r : ams_all(6)) six.insert(r.newton);
    EXPECT_EQ(six, (std::set<NewtonPairSeq>{N({{5, 6}}), N({{3, 11}}), N({{2, 3}, {2, 5}})}));
    EXPECT_EQ(ams_all(12).size(), 8u);
    for (int64_t p : {5, 7, 13, 29}) {
        auto r = ams_all(p);
        ASSERT_EQ(r.size(), 1u);
        EXPECT_EQ(r[0].newton, N({{p - 1, p}}));
    }
    ASSERT_EQ(ams_all(2).size(), 1u);
    EXPECT_TRUE(ams_all(2)[0].newton.empty());
}

TEST(Ams, CountsAndDistinctness) {
    EXPECT_EQ(ordered_factorization_count(12), 8);
    EXPECT_EQ(ordered_factorization_count(8), 4);
    EXPECT_EQ(ordered_factorization_count(24), 20);
    for (int64_t n = 2; n <= 200; ++n) {
        const auto all = ams_all(n);
        ASSERT_EQ(ordered_factorization_count(n), count_factorizations(n)) << n;
        ASSERT_EQ(static_cast<int64_t>(all.size()), count_factorizations(n)) << n;
        ASSERT_EQ(static_cast<int64_t>(ordered_factorizations(n).size()), count_factorizations(n));
        std::set<NewtonPairSeq> seen;
        for (const auto& r : all) {
            ASSERT_TRUE(seen.insert(r.newton).second) << n;
            ASSERT_EQ(r.degree, n);
            if (n >= 3) ASSERT_EQ(r.delta, genus_target(n)) << n;
        }
    }
    EXPECT_EQ(ordered_factorization_count(1 << 20).str(), "524288");  // 2^(k-1) for 2^k
}

TEST(Kashiwara, Examples) {
    auto a = kashiwara_curve(F(FamilyKind::KashiwaraIIsp, {1}));
    EXPECT_EQ(a.degree, 5);
    EXPECT_EQ(a.newton, N({{2, 13}}));
    auto b = kashiwara_curve(F(FamilyKind::KashiwaraIIge, {0}));
    EXPECT_EQ(b.degree, 10);
    EXPECT_EQ(b.newton, N({{4, 25}}));
    auto c = kashiwara_curve(F(FamilyKind::KashiwaraIIplusSp, {0, 1, 1}));
    EXPECT_EQ(c.degree, 25);
    EXPECT_EQ(c.newton, N({{5, 31}, {2, 3}}));
    EXPECT_EQ(c.delta, 276);
    EXPECT_THROW(kashiwara_curve(F(FamilyKind::KashiwaraIIsp, {0})), DomainError);
    EXPECT_THROW(kashiwara_curve(F(FamilyKind::KashiwaraIIminusGe, {0, 1, 1})), DomainError);
}

TEST(Tono, Examples) {
    auto a = tono_curve(F(FamilyKind::TonoIb, {3, 2}));
    EXPECT_EQ(a.degree, 19);
    EXPECT_EQ(a.newton, N({{2, 3}, {2, 7}, {3, 7}}));
    auto b = tono_curve(F(FamilyKind::TonoIa, {3}));
    EXPECT_EQ(b.degree, 10);
    EXPECT_EQ(b.newton, N({{2, 3}, {3, 16}}));
    auto c = tono_curve(F(FamilyKind::TonoIb, {3, 3}));
    EXPECT_EQ(c.degree, 28);
    EXPECT_EQ(format_mult(c.mult), "18,9_5,3_6");
    EXPECT_EQ(c.kodaira, Kodaira::one);
    EXPECT_THROW(tono_curve(F(FamilyKind::TonoIa, {2})), DomainError);
}

TEST(Orevkov, Examples) {
    EXPECT_EQ(orevkov_curve(1, false).newton, N({{3, 22}}));
    EXPECT_EQ(orevkov_curve(1, false).degree, 8);
    EXPECT_EQ(orevkov_curve(1, true).newton, N({{6, 43}}));
    EXPECT_EQ(orevkov_curve(1, true).degree, 16);
    auto r = orevkov_curve(2, false);
    EXPECT_EQ(r.degree, 55);
    EXPECT_EQ(r.newton, N({{7, 48}, {3, 1}}));
    EXPECT_EQ(r.kodaira, Kodaira::two);
    for (int k = 1; k <= 5; ++k) {
        for (bool star : {false, true}) {
            auto c = orevkov_curve(k, star);
            EXPECT_EQ(c.delta, genus_target(c.degree)) << k << star;
            EXPECT_EQ(c.self_intersection, -2);
        }
    }
}

TEST(ClosedForms, Examples) {
    auto a = invariant_closed_forms(F(FamilyKind::KashiwaraIIsp, {1}));
    EXPECT_EQ(a.lct, Rational(15, 26));
    EXPECT_EQ(a.self_intersection, -1);
    EXPECT_EQ(invariant_closed_forms(F(FamilyKind::TonoIa, {3})).self_intersection, -2);
    for (int k = 1; k <= 4; ++k) EXPECT_EQ(invariant_closed_forms(F(FamilyKind::Orevkov, {k})).self_intersection, -2);
}

TEST(ClosedForms, GridAgreesWithRecomputation) {
    const auto grid = family_grid();
    EXPECT_EQ(grid.rejected.size(), 6u);
    int flagged = 0;
    for (const auto& spec : grid.valid) {
        const auto rec = family_curve(spec);
        ASSERT_EQ(rec.delta, rec.newton.empty() ? BigInt(0) : genus_target(rec.degree)) << describe(spec);
        if (rec.newton.empty()) continue;
        const auto cf = invariant_closed_forms(spec);
        ASSERT_EQ(cf.lct, lct(rec.puiseux)) << describe(spec);
        ASSERT_EQ(cf.self_intersection, self_intersection(rec.degree, rec.puiseux)) << describe(spec);
        if (cf.printed_lct) {
            ++flagged;
            EXPECT_NE(*cf.printed_lct, cf.lct);
            EXPECT_FALSE(cf.note.empty());
        }
        // 5/6 is the lct of the ordinary cusp, the largest possible
        ASSERT_GT(cf.lct, Rational(0));
        ASSERT_LE(cf.lct, Rational(5, 6));
    }
    EXPECT_GT(flagged, 0);
}

TEST(ClosedForms, ModestGridPassesBl) {
    for (const auto& spec : family_grid().valid) {
        const auto rec = family_curve(spec);
        if (rec.newton.empty() || rec.degree > 400) continue;
        ASSERT_TRUE(bl_check_unicuspidal(rec.degree, rec.semigroup_generators).passed()) << describe(spec);
    }
}

TEST(Attribution, Examples) {
    auto a = attribute_family(make_record(12, N({{2, 3}, {2, 5}, {2, 3}})));
    ASSERT_TRUE(a);
    EXPECT_EQ(*a, F(FamilyKind::AMS, {3, 2, 2}));
    auto b = attribute_family(make_record(8, N({{3, 22}})));
    ASSERT_TRUE(b);
    EXPECT_EQ(*b, F(FamilyKind::Orevkov, {1}));
    auto c = attribute_family(make_record(19, N({{2, 3}, {2, 7}, {3, 7}})));
    ASSERT_TRUE(c);
    EXPECT_EQ(*c, F(FamilyKind::TonoIb, {3, 2}));
    EXPECT_FALSE(attribute_family(make_record(17, N({{2, 7}, {4, 17}}))));
}

TEST(Attribution, RegeneratesTheSameCurve) {
    for (int64_t d = 3; d <= 120; ++d)
        for (const auto& spec : family_specs_of_degree(d)) {
            const auto rec = family_curve(spec);
            ASSERT_EQ(rec.degree, d) << describe(spec);
            const auto all = attribute_family_all(rec);
            ASSERT_NE(std::find(all.begin(), all.end(), spec), all.end()) << describe(spec);
            const auto first = attribute_family(rec);
            ASSERT_TRUE(first);
            ASSERT_EQ(family_curve(*first).newton, rec.newton);
        }
}

TEST(PrimeScan, Examples) {
    auto primes = [](int64_t lim) {
        std::vector<int64_t> p;
        for (const auto& h : prime_degree_scan(lim)) p.push_back(h.prime);
        return p;
    };
    EXPECT_EQ(primes(50), (std::vector<int64_t>{5, 13, 17, 19, 37, 41}));
    EXPECT_TRUE(primes(4).empty());
    EXPECT_EQ(primes(13), (std::vector<int64_t>{5, 13}));
    for (const auto& h : prime_degree_scan(2000)) {
        ASSERT_TRUE(is_prime(h.prime));
        ASSERT_FALSE(h.families.empty());
        for (const auto& f : h.families) ASSERT_EQ(family_curve(f).degree, h.prime);
    }
}

TEST(Bunyakovsky, Evidence) {
    auto two = bunyakovsky_sn2_plus_1(2);
    EXPECT_EQ(two.values, (std::vector<BigInt>{3, 9, 19}));
    EXPECT_EQ(two.gcd_all, 1);
    auto five = bunyakovsky_sn2_plus_1(5);
    EXPECT_EQ(five.values, (std::vector<BigInt>{6, 21, 46}));
    EXPECT_EQ(five.gcd_first_two, 3);
    EXPECT_EQ(five.gcd_all, 1);
    auto q = bunyakovsky_8n2_4n_1();
    EXPECT_EQ(q.values[0], 13);
    EXPECT_EQ(q.values[1], 41);
    EXPECT_EQ(q.gcd_first_two, 1);
    for (int64_t s = 1; s <= 60; ++s) EXPECT_EQ(bunyakovsky_sn2_plus_1(s).gcd_all, 1) << s;
}
