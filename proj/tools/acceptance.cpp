// Acceptance runner: one PASS/FAIL line per criterion, details after the colon.
#include "cuspidal/enumerator.hpp"
#include "cuspidal/existence.hpp"
#include "cuspidal/expected.hpp"
#include "cuspidal/families.hpp"
#include "cuspidal/reproduce.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

using namespace cusp;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fs", s);
    return buf;
}

struct Verdict {
    bool pass = false;
    std::string detail;
};

// 1. three-pair list, single-threaded and with 8 workers
Verdict c1() {
    auto t0 = Clock::now();
    auto serial = reproduce_table("threepairs", {30, 1, Kernel::serial});
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    auto par = reproduce_table("threepairs", {30, 8, Kernel::openmp});
    const double tp = seconds_since(t0);
    Verdict v;
    v.pass = serial.ok && par.ok && serial.matched_rows == 22 && par.matched_rows == 22 && ts <= 60 && tp <= 10;
    v.detail = std::to_string(serial.matched_rows) + "/22 rows (serial " + secs(ts) + "), " +
               std::to_string(par.matched_rows) + "/22 rows (8 workers " + secs(tp) + ")";
    return v;
}

// 2. k = 4 sweep
Verdict c2() {
    auto t0 = Clock::now();
    std::vector<CurveRecord> found;
    for (int64_t d = 3; d <= 30; ++d) {
        if (max_pairs_bound(d) < 4) continue;
        SearchConfig cfg{d, 4, SearchMode::pruned, 0, Kernel::openmp};
        for (auto& r : enumerate_candidates(cfg)) found.push_back(r);
    }
    const double t = seconds_since(t0);
    Verdict v;
    v.pass = found.size() == 1 && found[0].degree == 24 &&
             format_pairs(found[0].newton) == "(2,3),(2,5),(2,3),(2,3)" &&
             format_mult(found[0].mult) == "16,8_4,4_3,2_3" && t <= 60;
    v.detail = std::to_string(found.size()) + " curve(s)";
    if (!found.empty()) v.detail += ", first d=" + std::to_string(found[0].degree) + " " + format_pairs(found[0].newton) +
                                    " [" + format_mult(found[0].mult) + "]";
    v.detail += ", " + secs(t);
    return v;
}

// 3. reduction rows; the reference table has 20 rows
Verdict c3() {
    auto t0 = Clock::now();
    int matched = 0, based = 0;
    const auto& rows = expected_induct();
    for (const auto& row : rows) {
        auto res = resolve_existence(row.degree, parse_mult(row.mult));
        std::vector<std::pair<int64_t, std::string>> steps;
        for (const auto& st : res.chain)
            if (st.rule == Rule::Lemma211) steps.push_back({st.to_degree, format_mult(st.to_mult)});
        if (steps == row.steps && res.status == Existence::proved_reduction) ++matched;
        if (!res.chain.empty() && res.chain.back().rule == Rule::Base) ++based;
    }
    // and the rows regenerated from the classification agree
    auto rep = reproduce_table("induct");
    const double t = seconds_since(t0);
    Verdict v;
    v.pass = matched == static_cast<int>(rows.size()) && based == matched && rep.ok && t < 1.0;
    v.detail = std::to_string(matched) + "/" + std::to_string(rows.size()) + " rows match, " + std::to_string(based) +
               " end in the base registry, regenerated " + std::to_string(rep.matched_rows) + "/" +
               std::to_string(rep.expected_rows) + ", " + secs(t);
    return v;
}

// 4. spot checks
Verdict c4() {
    auto a = make_record(5, {{2, 13}});
    auto b = make_record(8, {{3, 22}});
    Verdict v;
    v.pass = a.self_intersection == -1 && b.lct == Rational(1, 3) + Rational(1, 22) && b.self_intersection == -2;
    v.detail = "d=5 (2,13) C2=" + std::to_string(a.self_intersection) + "; d=8 (3,22) lct=" + rational_str(b.lct) +
               " C2=" + std::to_string(b.self_intersection);
    return v;
}

// 5. pruned vs paranoid
Verdict c5() {
    auto t0 = Clock::now();
    int cases = 0, equal = 0;
    std::string first_diff;
    for (int64_t d = 3; d <= 16; ++d) {
        for (int k = 1; k <= std::min(3, max_pairs_bound(d)); ++k) {
            ++cases;
            auto fast = enumerate_newton({d, k, SearchMode::pruned, 0, Kernel::openmp});
            auto slow = enumerate_newton({d, k, SearchMode::paranoid, 0, Kernel::openmp});
            if (fast == slow)
                ++equal;
            else if (first_diff.empty())
                first_diff = " first difference at d=" + std::to_string(d) + " k=" + std::to_string(k);
        }
    }
    const double t = seconds_since(t0);
    Verdict v;
    v.pass = equal == cases && t <= 600;
    v.detail = std::to_string(equal) + "/" + std::to_string(cases) + " (d,k) cases equal" + first_diff + ", " + secs(t);
    return v;
}

// 6. dual delta: all one- and two-pair sequences with entries <= 30, plus
// random three-pair ones
Verdict c6() {
    int64_t cases = 0, agree = 0;
    auto check = [&](const NewtonPairSeq& n) {
        try {
            validate(n);
        } catch (const ValidationError&) {
            return;
        }
        ++cases;
        if (delta_from_puiseux(newton_to_puiseux(n)) == delta_from_multiplicities(multiplicity_sequence(n))) ++agree;
    };
    std::vector<NewtonPair> all;
    for (int64_t p = 2; p <= 30; ++p)
        for (int64_t q = 1; q <= 30; ++q)
            if (std::gcd(p, q) == 1) all.push_back({p, q});
    for (const auto& a : all) check({a});
    for (const auto& a : all)
        for (const auto& b : all) check({a, b});
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 200000; ++i) check({all[pick(rng)], all[pick(rng)], all[pick(rng)]});
    Verdict v;
    v.pass = cases >= 10000 && agree == cases;
    v.detail = std::to_string(agree) + "/" + std::to_string(cases) + " valid sequences agree";
    return v;
}

// 7. family grid
Verdict c7() {
    auto t0 = Clock::now();
    const auto grid = family_grid();
    int n = 0, delta_ok = 0, bl_pass = 0, bl_fail = 0, bl_skipped = 0, closed_ok = 0, side_ok = 0, flagged = 0;
    std::string skipped_example;
    for (const auto& spec : grid.valid) {
        ++n;
        const auto r = family_curve(spec);
        if (r.delta == genus_target(r.degree)) ++delta_ok;
        const auto bl = bl_check_unicuspidal(r.degree, r.semigroup_generators);
        if (bl.status == BLResult::Status::pass) ++bl_pass;
        if (bl.status == BLResult::Status::fail) ++bl_fail;
        if (bl.status == BLResult::Status::not_evaluated) {
            ++bl_skipped;
            if (skipped_example.empty()) skipped_example = describe(spec) + " d=" + std::to_string(r.degree);
        }
        const auto cf = invariant_closed_forms(spec);
        if (cf.lct == r.lct && cf.self_intersection == r.self_intersection) ++closed_ok;
        if (cf.printed_lct && *cf.printed_lct != r.lct) ++flagged;
        const auto kod = family_kodaira(spec.kind);
        const Rational third(3, r.degree);
        if (kod == Kodaira::two ? r.lct > third : r.lct < third) ++side_ok;
    }
    const double t = seconds_since(t0);
    Verdict v;
    v.pass = delta_ok == n && bl_pass == n && closed_ok == n && side_ok == n && t <= 120;
    v.detail = std::to_string(n) + " curves (" + std::to_string(grid.rejected.size()) +
               " degenerate parameter sets rejected); delta " + std::to_string(delta_ok) + "/" + std::to_string(n) +
               "; B-L pass " + std::to_string(bl_pass) + ", fail " + std::to_string(bl_fail) + ", not evaluated " +
               std::to_string(bl_skipped) + (skipped_example.empty() ? "" : " (e.g. " + skipped_example + ")") +
               "; closed forms " + std::to_string(closed_ok) + "/" + std::to_string(n) + " (" +
               std::to_string(flagged) + " printed lct flagged); 3/d side " + std::to_string(side_ok) + "/" +
               std::to_string(n) + "; " + secs(t);
    return v;
}

// 8. AMS count
Verdict c8() {
    int ok = 0;
    for (int64_t d = 2; d <= 30; ++d) {
        auto recs = ams_all(d);
        std::set<NewtonPairSeq> distinct;
        for (const auto& r : recs) distinct.insert(r.newton);
        if (BigInt(recs.size()) == ordered_factorization_count(d) && distinct.size() == recs.size()) ++ok;
    }
    const bool a12 = ordered_factorization_count(12) == 8;
    Verdict v;
    v.pass = ok == 29 && a12;
    v.detail = std::to_string(ok) + "/29 degrees, a(12)=" + ordered_factorization_count(12).str();
    return v;
}

// 9. pair-count bound
Verdict c9() {
    int64_t first5 = 0;
    for (int64_t d = 3; !first5; ++d)
        if (max_pairs_bound(d) >= 5) first5 = d;
    Verdict v;
    v.pass = max_pairs_bound(30) == 4 && first5 == 33;
    v.detail = "max_pairs_bound(30)=" + std::to_string(max_pairs_bound(30)) + ", first degree with k=5: " +
               std::to_string(first5);
    return v;
}

// 10. prime scan vs an independent per-item search
Verdict c10() {
    auto is_prime = [](int64_t n) {
        if (n < 2) return false;
        for (int64_t f = 2; f * f <= n; ++f)
            if (n % f == 0) return false;
        return true;
    };
    std::map<int64_t, std::set<std::string>> oracle;
    // Fibonacci numbers with an odd prime index >= 5, by direct recurrence
    std::vector<int64_t> fib{0, 1};
    while (fib.size() <= 13) fib.push_back(fib[fib.size() - 1] + fib[fib.size() - 2]);
    for (int64_t j = 5; j <= 13; j += 2)
        if (is_prime(j) && is_prime(fib[j]) && fib[j] <= 50) oracle[fib[j]].insert("fibonacci");
    for (int64_t a = 3; a <= 7; ++a)
        for (int64_t s = 1; s <= 6; ++s)
            if (a * a * s + 1 <= 50 && is_prime(a * a * s + 1)) oracle[a * a * s + 1].insert("a^2s+1");
    for (int64_t n = 2; n <= 2; ++n)
        if (is_prime(8 * n * n + 4 * n + 1)) oracle[8 * n * n + 4 * n + 1].insert("8n^2+4n+1");

    std::map<int64_t, std::set<std::string>> got;
    for (const auto& hit : prime_degree_scan(50)) {
        for (const auto& spec : hit.families) {
            switch (spec.kind) {
                case FamilyKind::KashiwaraIIsp: got[hit.prime].insert("fibonacci"); break;
                case FamilyKind::TonoIa:
                case FamilyKind::TonoIb: got[hit.prime].insert("a^2s+1"); break;
                case FamilyKind::TonoIIa: got[hit.prime].insert("8n^2+4n+1"); break;
                default: got[hit.prime].insert("unexpected"); break;
            }
        }
    }
    std::string primes;
    for (const auto& [p, tags] : got) {
        primes += (primes.empty() ? "" : ",") + std::to_string(p) + "(";
        std::string t;
        for (const auto& tag : tags) t += (t.empty() ? "" : "+") + tag;
        primes += t + ")";
    }
    std::set<int64_t> keys;
    for (const auto& [p, _] : got) keys.insert(p);
    Verdict v;
    v.pass = got == oracle && keys == std::set<int64_t>{5, 13, 17, 19, 37, 41};
    v.detail = "{" + primes + "}";
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"three-pair classification d<=30", c1},
        {"four-pair sweep d<=30", c2},
        {"reduction table", c3},
        {"invariant spot checks", c4},
        {"pruned = paranoid, d<=16, k<=3", c5},
        {"dual delta property", c6},
        {"family grid cross-check", c7},
        {"ordered factorization count", c8},
        {"pair-count bound", c9},
        {"prime-degree scan", c10},
    };
    int failed = 0, idx = 0;
    for (const auto& [name, fn] : criteria) {
        ++idx;
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        if (!v.pass) ++failed;
        std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << idx << " (" << name << "): " << v.detail << std::endl;
    }
    std::cout << "summary: " << (idx - failed) << "/" << idx << " criteria pass" << std::endl;
    return failed ? 1 : 0;
}
