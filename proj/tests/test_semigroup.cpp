#include "cuspidal/semigroup.hpp"
#include "gen.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cusp;

namespace {

constexpr int64_t kMod = 1000000007;

int64_t pw(int64_t b, int64_t e) {
    int64_t r = 1;
    b %= kMod;
    for (; e; e >>= 1, b = b * b % kMod)
        if (e & 1) r = r * b % kMod;
    return r;
}

// Orders of vanishing of f(x(t), y(t)) below N for x = t^a, y = sum t^{b_i}:
// eliminate over all monomials x^i y^j of weighted order <= N, keep pivots.
std::set<int64_t> vanishing_orders(int64_t a, const std::vector<int64_t>& bs, int64_t N) {
    using Series = std::vector<int64_t>;
    auto mul = [&](const Series& f, const Series& g) {
        Series h(N + 1, 0);
        for (int64_t i = 0; i <= N; ++i)
            if (f[i])
                for (int64_t j = 0; i + j <= N; ++j)
                    if (g[j]) h[i + j] = (h[i + j] + f[i] * g[j]) % kMod;
        return h;
    };
    Series y(N + 1, 0);
    for (auto b : bs)
        if (b <= N) y[b] = 1;
    std::vector<Series> rows;
    Series ypow(N + 1, 0);
    ypow[0] = 1;
    for (int64_t j = 0; j * bs[0] <= N; ++j) {
        for (int64_t i = 0; i * a + j * bs[0] <= N; ++i) {
            Series r(N + 1, 0);
            for (int64_t e = 0; e + i * a <= N; ++e) r[e + i * a] = ypow[e];
            rows.push_back(std::move(r));
        }
        ypow = mul(ypow, y);
    }
    // Gaussian elimination by leading order
    std::vector<Series> basis(N + 1);
    std::set<int64_t> orders;
    for (auto r : rows) {
        for (int64_t e = 0; e <= N; ++e) {
            if (!r[e]) continue;
            if (basis[e].empty()) {
                basis[e] = r;
                orders.insert(e);
                break;
            }
            const int64_t c = r[e] * pw(basis[e][e], kMod - 2) % kMod;
            for (int64_t t = e; t <= N; ++t) r[t] = ((r[t] - c * basis[e][t]) % kMod + kMod) % kMod;
        }
    }
    return orders;
}

std::set<int64_t> naive_members(const std::vector<int64_t>& gens, int64_t bound) {
    std::set<int64_t> s{0};
    std::vector<int64_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<int64_t> next;
        for (auto x : frontier)
            for (auto g : gens)
                if (x + g <= bound && s.insert(x + g).second) next.push_back(x + g);
        frontier = std::move(next);
    }
    return s;
}

bool naive_bl(int64_t d, const std::vector<int64_t>& gens) {
    const auto s = naive_members(gens, (d - 2) * d + 1);
    for (int64_t j = 0; j <= d - 2; ++j) {
        const auto r = std::distance(s.begin(), s.lower_bound(j * d + 1));
        if (r != (j + 1) * (j + 2) / 2) return false;
    }
    return true;
}

}  // namespace

TEST(Generators, Examples) {
    EXPECT_EQ(generators_from_newton({{2, 3}, {2, 5}, {2, 3}}), (std::vector<int64_t>{8, 12, 34, 71}));
    EXPECT_EQ(generators_from_newton({{2, 13}}), (std::vector<int64_t>{2, 13}));
    EXPECT_EQ(generators_from_newton({{3, 22}}), (std::vector<int64_t>{3, 22}));
}

TEST(Generators, MatchVanishingOrdersOfParametrization) {
    // (t^8, t^12 + t^22 + t^25)
    const int64_t N = 120;
    const auto orders = vanishing_orders(8, {12, 22, 25}, N);
    const auto sg = build_membership(generators_from_newton({{2, 3}, {2, 5}, {2, 3}}), N);
    for (int64_t x = 0; x <= N; ++x) EXPECT_EQ(sg.contains(x), orders.count(x) == 1) << x;
}

TEST(Generators, PropertyMatchVanishingOrders) {
    int checked = 0;
    for (int i = 0; i < 60; ++i) {
        const auto n = testgen::newton(static_cast<int>(testgen::uniform(1, 3)), 3, 9);
        const auto c = characteristic_seq(n);
        if (c.a > 12) continue;
        ++checked;
        const int64_t N = 90;
        const auto orders = vanishing_orders(c.a, c.b, N);
        const auto sg = build_membership(generators_from_newton(n), N);
        for (int64_t x = 0; x <= N; ++x) ASSERT_EQ(sg.contains(x), orders.count(x) == 1) << format_pairs(n) << " " << x;
    }
    EXPECT_GE(checked, 20);
}

TEST(Membership, Examples) {
    EXPECT_EQ(build_membership({3, 7}, 10).members(), (std::vector<int64_t>{0, 3, 6, 7, 9, 10}));
    const auto s = build_membership({2, 13}, 20);
    EXPECT_EQ(s.counting_R(1), 1);
    EXPECT_EQ(s.counting_R(6), 3);
    EXPECT_EQ(s.counting_R(11), 6);
    EXPECT_THROW(s.counting_R(22), std::out_of_range);
    EXPECT_THROW(build_membership({4, 6}, 10), ValidationError);
}

TEST(Membership, PropertyAgainstClosure) {
    for (int i = 0; i < 300; ++i) {
        std::vector<int64_t> g;
        int64_t gg = 0;
        while (gg != 1 || g.size() < 2) {
            g.push_back(testgen::uniform(2, 40));
            gg = std::gcd(gg, g.back());
            if (g.size() > 4) {
                g.clear();
                gg = 0;
            }
        }
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        if (g.size() < 2) continue;
        const int64_t bound = testgen::uniform(1, 700);
        const auto s = build_membership(g, bound);
        const auto ref = naive_members(g, bound);
        ASSERT_EQ(s.members(), std::vector<int64_t>(ref.begin(), ref.end()));
        for (int t = 0; t < 20; ++t) {
            const int64_t k = testgen::uniform(0, bound + 1);
            ASSERT_EQ(s.counting_R(k), std::distance(ref.begin(), ref.lower_bound(k)));
        }
    }
}

TEST(Membership, SymmetryAndDelta) {
    for (int i = 0; i < 500; ++i) {
        const auto n = testgen::newton(static_cast<int>(testgen::uniform(1, 3)), 4, 15);
        const auto g = generators_from_newton(n);
        const auto delta = delta_from_puiseux(newton_to_puiseux(n));
        if (delta > 5000) continue;
        const int64_t c = 2 * static_cast<int64_t>(delta);
        const auto s = build_membership(g, c + 10);
        ASSERT_EQ(c - s.counting_R(c), delta);
        for (int64_t x = 0; x < c; ++x) ASSERT_NE(s.contains(x), s.contains(c - 1 - x)) << format_pairs(n);
        ASSERT_TRUE(c == 0 || !s.contains(c - 1));
    }
}

TEST(Apery, MatchesSmallestMembers) {
    for (int i = 0; i < 200; ++i) {
        const auto n = testgen::newton(static_cast<int>(testgen::uniform(1, 3)), 4, 12);
        const auto g = generators_from_newton(n);
        const auto ap = apery_set(g);
        ASSERT_EQ(static_cast<int64_t>(ap.size()), g[0]);
        const int64_t bound = *std::max_element(ap.begin(), ap.end());
        const auto s = naive_members(g, bound);
        for (int64_t r = 0; r < g[0]; ++r) {
            int64_t x = r;
            while (!s.count(x)) x += g[0];
            ASSERT_EQ(ap[r], x);
        }
    }
}

TEST(BL, Examples) {
    EXPECT_TRUE(bl_check_unicuspidal(5, {2, 13}).passed());
    EXPECT_TRUE(bl_check_unicuspidal(5, {4, 5}).passed());
    const auto r = bl_check_unicuspidal(5, {3, 7});
    EXPECT_EQ(r.status, BLResult::Status::fail);
    EXPECT_EQ(r.failing_j, 1);
    EXPECT_TRUE(bl_check_unicuspidal(12, {8, 12, 34, 71}).passed());
    EXPECT_TRUE(bl_check_unicuspidal(8, {3, 22}).passed());
    EXPECT_EQ(to_string(BLResult::Status::not_evaluated), "not-evaluated");
}

TEST(BL, LimitsSkipEvaluation) {
    BLLimits tiny;
    tiny.max_table_bound = 10;
    tiny.max_apery_modulus = 1;
    const auto r = bl_check_unicuspidal(12, {8, 12, 34, 71}, tiny);
    EXPECT_EQ(r.status, BLResult::Status::not_evaluated);
    tiny.max_apery_modulus = 100;
    const auto a = bl_check_unicuspidal(12, {8, 12, 34, 71}, tiny);
    EXPECT_TRUE(a.passed());
    EXPECT_EQ(a.method, "apery");
}

TEST(BL, PropertyTableAperyNaiveAgree) {
    for (int i = 0; i < 1500; ++i) {
        const auto n = testgen::newton(static_cast<int>(testgen::uniform(1, 3)), 5, 30);
        const auto g = generators_from_newton(n);
        const int64_t d = testgen::uniform(3, 40);
        const auto t = bl_check_table(d, g);
        const auto a = bl_check_apery(d, g);
        ASSERT_EQ(t.status, a.status) << format_pairs(n) << " d=" << d;
        ASSERT_EQ(t.failing_j, a.failing_j) << format_pairs(n) << " d=" << d;
        ASSERT_EQ(t.passed(), naive_bl(d, g)) << format_pairs(n) << " d=" << d;
    }
}
