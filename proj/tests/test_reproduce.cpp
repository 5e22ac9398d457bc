#include "cuspidal/expected.hpp"
#include "cuspidal/existence.hpp"
#include "cuspidal/reproduce.hpp"

#include <gtest/gtest.h>

using namespace cusp;

TEST(Expected, LiteralRowsAreSelfConsistent) {
    EXPECT_EQ(expected_threepairs().size(), 22u);
    EXPECT_EQ(expected_fourpairs().size(), 1u);
    for (const auto* table : {&expected_threepairs(), &expected_fourpairs()})
        for (const auto& row : *table) {
            const auto n = parse_pairs(row.pairs);
            EXPECT_EQ(format_mult(multiplicity_sequence(n)), row.mult) << row.pairs;
            EXPECT_EQ(delta_from_puiseux(newton_to_puiseux(n)), genus_target(row.degree)) << row.pairs;
            EXPECT_TRUE(bl_check_unicuspidal(row.degree, generators_from_newton(n)).passed()) << row.pairs;
        }
}

TEST(Expected, ReductionRowsFollowTheRule) {
    EXPECT_EQ(expected_induct().size(), 20u);
    for (const auto& row : expected_induct()) {
        auto r = detect_reduction(row.degree, parse_mult(row.mult));
        ASSERT_TRUE(r) << row.degree << " " << row.mult;
        ASSERT_FALSE(row.steps.empty());
        EXPECT_EQ(r->n, row.steps[0].first);
        EXPECT_EQ(format_mult(r->remainder), row.steps[0].second);
    }
}

TEST(Expected, ListedCurvesSatisfyRationality) {
    const auto one = expected_onepair();
    const auto two = expected_twopairs();
    EXPECT_EQ(one.size(), 47u);
    EXPECT_EQ(two.size(), 66u);
    int errata = 0;
    for (const auto* list : {&one, &two})
        for (const auto& c : *list) {
            EXPECT_FALSE(c.tag.empty());
            EXPECT_EQ(delta_from_puiseux(newton_to_puiseux(c.pairs)), genus_target(c.degree)) << format_pairs(c.pairs);
            errata += c.erratum;
        }
    EXPECT_EQ(errata, 8);
    for (const auto& c : expected_onepair(12)) EXPECT_LE(c.degree, 12);
}

TEST(Reproduce, EveryTableMatches) {
    ASSERT_EQ(table_ids().size(), 9u);
    for (const auto& id : table_ids()) {
        const auto r = reproduce_table(id);
        EXPECT_TRUE(r.ok) << format_report(r);
        EXPECT_TRUE(r.missing.empty()) << id;
        EXPECT_TRUE(r.extra.empty()) << id;
        EXPECT_EQ(r.matched_rows, r.expected_rows) << id;
        EXPECT_NE(format_report(r).find(id), std::string::npos);
    }
}

TEST(Reproduce, SerialKernelGivesTheSameReports) {
    ReproduceOptions o;
    o.kernel = Kernel::serial;
    o.workers = 1;
    const auto a = reproduce_all(o);
    const auto b = reproduce_all();
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        EXPECT_EQ(a[i].table, b[i].table);
        EXPECT_EQ(a[i].ok, b[i].ok);
        EXPECT_EQ(a[i].generated_rows, b[i].generated_rows);
        EXPECT_EQ(a[i].matched_rows, b[i].matched_rows);
    }
}

TEST(Reproduce, UnknownId) {
    EXPECT_FALSE(is_table_id("table9"));
    EXPECT_TRUE(is_table_id("threepairs"));
    EXPECT_THROW(reproduce_table("table9"), std::invalid_argument);
}
