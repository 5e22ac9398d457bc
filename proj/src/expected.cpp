#include "cuspidal/expected.hpp"

#include <algorithm>

namespace cusp {

const std::vector<ExpectedCurve>& expected_threepairs() {
    static const std::vector<ExpectedCurve> rows{
        {12, "(2,3),(2,5),(2,3)", "8,4_4,2_3"},
        {16, "(2,7),(2,3),(2,3)", "8_3,4_3,2_3"},
        {16, "(3,4),(2,7),(2,3)", "12,4_6,2_3"},
        {18, "(2,3),(2,5),(3,5)", "12,6_4,3_3,2"},
        {18, "(2,3),(3,8),(2,5)", "12,6_4,4,2_4"},
        {19, "(2,3),(2,7),(3,7)", "12,6_5,3_4"},
        {20, "(4,5),(2,9),(2,3)", "16,4_8,2_3"},
        {24, "(2,7),(2,3),(3,5)", "12_3,6_3,3_3,2"},
        {24, "(2,7),(3,5),(2,5)", "12_3,6_3,4,2_4"},
        {24, "(3,11),(2,5),(2,3)", "12_3,8,4_4,2_3"},
        {24, "(2,3),(2,5),(4,7)", "16,8_4,4_3,3"},
        {24, "(2,3),(4,11),(2,7)", "16,8_4,6,2_6"},
        {24, "(3,4),(2,7),(3,5)", "18,6_6,3_3,2"},
        {24, "(3,4),(3,11),(2,5)", "18,6_6,4,2_4"},
        {24, "(5,6),(2,11),(2,3)", "20,4_10,2_3"},
        {27, "(2,3),(3,8),(3,8)", "18,9_4,6,3_4,2"},
        {28, "(2,3),(3,10),(3,10)", "18,9_5,3_6"},
        {28, "(6,7),(2,13),(2,3)", "24,4_12,2_3"},
        {30, "(2,3),(2,5),(5,9)", "20,10_4,5_3,4"},
        {30, "(2,3),(5,14),(2,9)", "20,10_4,8,2_8"},
        {30, "(4,5),(2,9),(3,5)", "24,6_8,3_3,2"},
        {30, "(4,5),(3,14),(2,5)", "24,6_8,4,2_4"},
    };
    return rows;
}

const std::vector<ExpectedCurve>& expected_fourpairs() {
    static const std::vector<ExpectedCurve> rows{
        {24, "(2,3),(2,5),(2,3),(2,3)", "16,8_4,4_3,2_3"},
    };
    return rows;
}

const std::vector<ExpectedReduction>& expected_induct() {
    static const std::vector<ExpectedReduction> rows{
        {12, "8,4_4,2_3", {{4, "2_3"}}},
        {16, "8_3,4_3,2_3", {{8, "4_3,2_3"}, {4, "2_3"}}},
        {16, "12,4_6,2_3", {{4, "2_3"}}},
        {18, "12,6_4,3_3,2", {{6, "3_3,2"}}},
        {18, "12,6_4,4,2_4", {{6, "4,2_4"}}},
        {20, "16,4_8,2_3", {{4, "2_3"}}},
        {24, "12_3,6_3,3_3,2", {{12, "6_3,3_3,2"}, {6, "3_3,2"}}},
        {24, "12_3,6_3,4,2_4", {{12, "6_3,4,2_4"}, {6, "4,2_4"}}},
        {24, "12_3,8,4_4,2_3", {{12, "8,4_4,2_3"}, {4, "2_3"}}},
        {24, "16,8_4,4_3,3", {{8, "4_3,3"}, {4, "3"}}},
        {24, "16,8_4,6,2_6", {{8, "6,2_6"}, {2, ""}}},
        {24, "18,6_6,3_3,2", {{6, "3_3,2"}}},
        {24, "18,6_6,4,2_4", {{6, "4,2_4"}}},
        {24, "20,4_10,2_3", {{4, "2_3"}}},
        {27, "18,9_4,6,3_4,2", {{9, "6,3_4,2"}, {3, "2"}}},
        {28, "24,4_12,2_3", {{4, "2_3"}}},
        {30, "20,10_4,5_3,4", {{10, "5_3,4"}, {5, "4"}}},
        {30, "20,10_4,8,2_8", {{10, "8,2_8"}, {2, ""}}},
        {30, "24,6_8,3_3,2", {{6, "3_3,2"}}},
        {30, "24,6_8,4,2_4", {{6, "4,2_4"}}},
    };
    return rows;
}

namespace {

int64_t phi(int j) { return to_int64(fibonacci(j)); }

void add(std::vector<ListedCurve>& out, int64_t maxd, int64_t d, NewtonPairSeq pairs, std::string tag,
         bool erratum = false) {
    if (d < 3 || d > maxd) return;
    for (const auto& p : pairs)
        if (p.p < 2 || p.q < 1) return;
    out.push_back({d, std::move(pairs), std::move(tag), erratum});
}

void finish(std::vector<ListedCurve>& v) {
    std::stable_sort(v.begin(), v.end(), [](const ListedCurve& a, const ListedCurve& b) {
        return std::tie(a.degree, a.pairs) < std::tie(b.degree, b.pairs);
    });
    // several parameterizations can name the same curve; keep the first tag
    v.erase(std::unique(v.begin(), v.end(),
                        [](const ListedCurve& a, const ListedCurve& b) {
                            return a.degree == b.degree && a.pairs == b.pairs;
                        }),
            v.end());
}

}  // namespace

std::vector<ListedCurve> expected_onepair(int64_t maxd) {
    std::vector<ListedCurve> out;
    for (int64_t d = 3; d <= maxd; ++d) {
        add(out, maxd, d, {{d - 1, d}}, "(d-1,d)");
        if (d % 2 == 0) add(out, maxd, d, {{d / 2, 2 * d - 1}}, "(d/2,2d-1)");
    }
    for (int j = 5; phi(j - 2) * phi(j) <= maxd; j += 2)
        add(out, maxd, phi(j - 2) * phi(j), {{phi(j - 2) * phi(j - 2), phi(j) * phi(j)}},
            "fibonacci squares j=" + std::to_string(j));
    for (int j = 5; phi(j) <= maxd; j += 2)
        add(out, maxd, phi(j), {{phi(j - 2), phi(j + 2)}}, "fibonacci j=" + std::to_string(j));
    add(out, maxd, 8, {{3, 22}}, "sporadic d=8");
    add(out, maxd, 16, {{6, 43}}, "sporadic d=16");
    finish(out);
    return out;
}

std::vector<ListedCurve> expected_twopairs(int64_t maxd) {
    std::vector<ListedCurve> out;
    // Fibonacci series; l grows the degree linearly so stop once past maxd
    for (int k = 2; phi(2 * k - 1) <= maxd; ++k) {
        for (int64_t l = 0;; ++l) {
            const int64_t A = l * phi(2 * k - 1) * phi(2 * k - 1) + phi(2 * k - 3) * phi(2 * k - 3);
            const int64_t q1 = l * phi(2 * k + 1) * phi(2 * k + 1) + phi(2 * k - 1) * phi(2 * k - 1) + 2;
            const int64_t d_sp = phi(2 * k + 1) * A;
            if (d_sp > maxd) break;
            const std::string par = "k=" + std::to_string(k) + ",l=" + std::to_string(l);
            if (k != 2 || l != 0) {
                add(out, maxd, phi(2 * k - 1) * d_sp, {{A, q1}, {phi(2 * k - 1) * phi(2 * k - 1), A}},
                    "fibonacci general " + par);
                add(out, maxd, d_sp, {{A, q1}, {phi(2 * k - 1), l * phi(2 * k - 1) + phi(2 * k - 5)}},
                    "fibonacci special " + par);
            }
        }
    }
    for (int64_t n = 3; n <= maxd; ++n)
        for (int64_t m = 2; n * m <= maxd; ++m)
            add(out, maxd, n * m, {{n - 1, n}, {m, n * m - 1}}, "(n-1,n),(m,nm-1)");
    for (int64_t n = 2; n <= maxd; ++n)
        for (int64_t m = 2; 2 * n * m <= maxd; ++m)
            add(out, maxd, 2 * n * m, {{n, 4 * n - 1}, {m, n * m - 1}}, "(n,4n-1),(m,nm-1)");
    for (int64_t n = 3; n * n + 1 <= maxd; ++n)
        add(out, maxd, n * n + 1, {{n - 1, n}, {n, (n + 1) * (n + 1)}}, "n^2+1");
    for (int64_t n = 2; 8 * n * n + 4 * n + 1 <= maxd; ++n)
        add(out, maxd, 8 * n * n + 4 * n + 1, {{n, 4 * n + 1}, {4 * n + 1, (2 * n + 1) * (2 * n + 1)}},
            "8n^2+4n+1");
    for (int k = 2; phi(4 * k + 2) <= maxd; ++k) {
        add(out, maxd, phi(4 * k + 2), {{phi(4 * k) / 3, phi(4 * k + 4) / 3}, {3, 1}}, "phi(4k+2)");
        add(out, maxd, 2 * phi(4 * k + 2), {{phi(4 * k) / 3, phi(4 * k + 4) / 3}, {6, 1}}, "2phi(4k+2)");
    }
    // curves the Kashiwara constructions give with l = 0, N = 1 that the
    // printed two-pair list leaves out
    for (int64_t lam = 2; 4 * lam + 1 <= maxd; ++lam)
        add(out, maxd, 4 * lam + 1, {{lam, 4 * lam + 1}, {2, 2 * lam + 1}},
            "erratum: Kashiwara II-_sp(l=0,N=1,lambda=" + std::to_string(lam) + ")", true);
    for (int64_t lam = 2; 2 * (4 * lam + 1) <= maxd; ++lam)
        add(out, maxd, 2 * (4 * lam + 1), {{lam, 4 * lam + 1}, {4, 4 * lam + 1}},
            "erratum: Kashiwara II-_ge(l=0,N=1,lambda=" + std::to_string(lam) + ")", true);
    finish(out);
    return out;
}

}  // namespace cusp
