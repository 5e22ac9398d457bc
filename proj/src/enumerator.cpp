#include "cuspidal/enumerator.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cusp {

int max_pairs_bound(int64_t d) {
    if (d < 3) throw DomainError("max_pairs_bound needs d >= 3");
    const BigInt lhs = BigInt(d - 1) * BigInt(d - 2);
    int k = 0;
    while (true) {
        BigInt two_k = BigInt(1) << (k + 1);
        if ((two_k - 1) * two_k > lhs) return k;
        ++k;
    }
}

namespace {

// One (p_1..p_k, q_1) slice of the pruned search; q1 == 0 means "solve q_1"
// (k = 1).
struct WorkUnit {
    std::vector<int64_t> p;
    int64_t q1 = 0;
};

struct Context {
    int64_t d;
    int k;
    int64_t twice_genus;
};

void factorizations(int64_t a, int parts, std::vector<int64_t>& cur, std::vector<std::vector<int64_t>>& out) {
    if (parts == 1) {
        if (a >= 2) {
            cur.push_back(a);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (int64_t f = 2; f * 2 <= a; ++f) {  // remaining parts each >= 2
        if (a % f) continue;
        cur.push_back(f);
        factorizations(a / f, parts - 1, cur, out);
        cur.pop_back();
    }
}

// suffix[j] = p_j ... p_k (0-based j), suffix[k] = 1
std::vector<int64_t> suffix_products(const std::vector<int64_t>& p) {
    std::vector<int64_t> s(p.size() + 1, 1);
    for (size_t j = p.size(); j-- > 0;) s[j] = s[j + 1] * p[j];
    return s;
}

// minimal sum_{i >= j} (P_i - 1) Q_i with q_i = 1 (0-based j >= 1)
std::vector<int64_t> min_tail(const std::vector<int64_t>& P) {
    const size_t k = P.size() - 1;
    std::vector<int64_t> t(k + 1, 0);
    for (size_t j = k; j-- > 1;) t[j] = t[j + 1] + (P[j] - 1) * P[j + 1];
    return t;
}

std::vector<WorkUnit> make_units(const Context& c) {
    std::vector<WorkUnit> units;
    const int64_t G = c.twice_genus;
    // pruning rule 1: a = P_1 <= d - 1
    for (int64_t a = int64_t{1} << c.k; a <= c.d - 1; ++a) {
        std::vector<std::vector<int64_t>> fs;
        std::vector<int64_t> cur;
        factorizations(a, c.k, cur, fs);
        for (auto& p : fs) {
            if (c.k == 1) {
                units.push_back({p, 0});
                continue;
            }
            auto P = suffix_products(p);
            auto tail = min_tail(P);
            // pruning rule 2: (P_1 - 1)(Q_1 - 1) + tail <= 2 genus, Q_1 = q_1 P_2
            const int64_t room = G - tail[1];
            if (room < 0) continue;
            const int64_t q1_max = (room / (P[0] - 1) + 1) / P[1];
            for (int64_t q1 = p[0] + 1; q1 <= q1_max; ++q1)
                if (std::gcd(q1, p[0]) == 1) units.push_back({p, q1});
        }
    }
    return units;
}

bool tangent_ok(const NewtonPairSeq& n, int64_t d) {
    auto m = multiplicity_sequence(n);
    return m.at(0) + m.at(1) <= d;
}

void run_unit(const Context& c, const WorkUnit& u, std::vector<NewtonPairSeq>& out, SearchStats& st) {
    const int64_t G = c.twice_genus;
    const auto& p = u.p;
    auto P = suffix_products(p);
    auto tail = min_tail(P);
    NewtonPairSeq seq(c.k);
    for (int j = 0; j < c.k; ++j) seq[j].p = p[j];

    auto accept = [&]() {
        ++st.delta_solutions;
        auto bl = bl_check_unicuspidal(c.d, generators_from_newton(seq));
        if (!bl.passed()) {
            ++st.bl_rejected;
            return;
        }
        // pruning rule 5: tangent-line bound, post-filter only
        if (!tangent_ok(seq, c.d)) {
            ++st.tangent_rejected;
            return;
        }
        out.push_back(seq);
    };

    if (c.k == 1) {
        // pruning rule 4 with k = 1: (a - 1)(q - 1) = 2 genus
        if (G % (p[0] - 1)) return;
        const int64_t q = G / (p[0] - 1) + 1;
        if (q <= p[0] || std::gcd(q, p[0]) != 1) return;
        seq[0].q = q;
        accept();
        return;
    }

    seq[0].q = u.q1;
    const int64_t first = (P[0] - 1) * (u.q1 * P[1] - 1);

    // pruning rule 3: partial delta sums bound each middle q_j
    auto rec = [&](auto&& self, int j, int64_t partial) -> void {
        if (j == c.k - 1) {
            // pruning rule 4: the last Q_k = q_k is forced by the residual
            const int64_t residual = G - partial;
            if (residual <= 0 || residual % (p[j] - 1)) return;
            const int64_t q = residual / (p[j] - 1);
            if (std::gcd(q, p[j]) != 1) return;
            seq[j].q = q;
            accept();
            return;
        }
        for (int64_t q = 1;; ++q) {
            const int64_t next = partial + (P[j] - 1) * q * P[j + 1];
            if (next + tail[j + 1] > G) break;
            if (std::gcd(q, p[j]) != 1) continue;
            seq[j].q = q;
            self(self, j + 1, next);
        }
    };
    rec(rec, 1, first);
}

void add_stats(SearchStats& a, const SearchStats& b) {
    a.work_units += b.work_units;
    a.delta_solutions += b.delta_solutions;
    a.bl_rejected += b.bl_rejected;
    a.tangent_rejected += b.tangent_rejected;
}

std::vector<NewtonPairSeq> pruned(const SearchConfig& cfg, SearchStats& stats) {
    const Context c{cfg.degree, cfg.pair_count, (cfg.degree - 1) * (cfg.degree - 2)};
    const auto units = make_units(c);
    std::vector<std::vector<NewtonPairSeq>> found(units.size());
    std::vector<SearchStats> unit_stats(units.size());
    const long n = static_cast<long>(units.size());
    if (cfg.kernel == Kernel::serial) {
        for (long i = 0; i < n; ++i) run_unit(c, units[i], found[i], unit_stats[i]);
    } else {
#ifdef _OPENMP
        const int threads = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#endif
        for (long i = 0; i < n; ++i) run_unit(c, units[i], found[i], unit_stats[i]);
    }
    std::vector<NewtonPairSeq> out;
    for (long i = 0; i < n; ++i) {
        add_stats(stats, unit_stats[i]);
        out.insert(out.end(), found[i].begin(), found[i].end());
    }
    stats.work_units += n;
    return out;
}

// Independent B-L evaluation for the paranoid path: closure by worklist.
bool naive_bl(int64_t d, const std::vector<int64_t>& gens) {
    const int64_t bound = (d - 2) * d + 1;
    std::vector<char> in(static_cast<size_t>(std::max<int64_t>(bound, 0)) + 1, 0);
    std::deque<int64_t> work{0};
    in[0] = 1;
    while (!work.empty()) {
        int64_t x = work.front();
        work.pop_front();
        for (int64_t g : gens) {
            int64_t y = x + g;
            if (y <= bound && !in[y]) {
                in[y] = 1;
                work.push_back(y);
            }
        }
    }
    for (int64_t j = 0; j <= d - 2; ++j) {
        int64_t count = 0;
        for (int64_t x = 0; x < j * d + 1; ++x) count += in[x];
        if (count != (j + 1) * (j + 2) / 2) return false;
    }
    return true;
}

// Full scan over strictly increasing (a, b_1, ..., b_k) <= 2 genus + 1.
std::vector<NewtonPairSeq> paranoid(const SearchConfig& cfg, SearchStats& stats) {
    const int64_t d = cfg.degree;
    const int k = cfg.pair_count;
    const int64_t G = (d - 1) * (d - 2);
    const int64_t B = G + 1;
    std::vector<std::vector<NewtonPairSeq>> found(static_cast<size_t>(B + 1));
    std::vector<SearchStats> per(static_cast<size_t>(B + 1));

    auto scan_a = [&](int64_t a) {
        std::vector<int64_t> b(k), g(k + 1);
        g[0] = a;
        auto rec = [&](auto&& self, int i, int64_t lo) -> void {
            for (int64_t x = lo; x <= B; ++x) {
                b[i] = x;
                g[i + 1] = std::gcd(g[i], x);
                if (g[i + 1] == g[i]) continue;  // b_i must be characteristic
                if (i + 1 < k) {
                    self(self, i + 1, x + 1);
                    continue;
                }
                if (g[k] != 1) continue;
                // Puiseux pairs (g_{j-1}, b_j - b_{j-1})
                int64_t twice = (g[0] - 1) * (b[0] - 1);
                for (int j = 1; j < k; ++j) twice += (g[j] - 1) * (b[j] - b[j - 1]);
                if (twice != G) continue;
                ++per[a].delta_solutions;
                NewtonPairSeq seq(k);
                for (int j = 0; j < k; ++j)
                    seq[j] = {g[j] / g[j + 1], (b[j] - (j ? b[j - 1] : 0)) / g[j + 1]};
                std::vector<int64_t> w{a, b[0]};
                for (int j = 1; j < k; ++j) w.push_back(seq[j - 1].p * w.back() + (b[j] - b[j - 1]));
                if (!naive_bl(d, w)) {
                    ++per[a].bl_rejected;
                    continue;
                }
                found[a].push_back(seq);
            }
        };
        rec(rec, 0, a + 1);
    };

    const long hi = static_cast<long>(B);
    if (cfg.kernel == Kernel::serial) {
        for (long a = 2; a <= hi; ++a) scan_a(a);
    } else {
#ifdef _OPENMP
        const int threads = cfg.workers > 0 ? cfg.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
#endif
        for (long a = 2; a <= hi; ++a) scan_a(a);
    }
    std::vector<NewtonPairSeq> out;
    for (int64_t a = 2; a <= B; ++a) {
        add_stats(stats, per[a]);
        out.insert(out.end(), found[a].begin(), found[a].end());
    }
    stats.work_units += B - 1;
    return out;
}

}  // namespace

std::vector<NewtonPairSeq> enumerate_newton(const SearchConfig& cfg, SearchStats* stats) {
    if (cfg.pair_count < 1 || cfg.pair_count > 4) throw DomainError("pair count must be in 1..4");
    if (cfg.degree < 3) throw DomainError("degree must be >= 3");
    if (cfg.degree > 3000000000LL) throw DomainError("degree too large for the search");
    if (cfg.pair_count > max_pairs_bound(cfg.degree))
        throw DomainError("k = " + std::to_string(cfg.pair_count) + " exceeds max_pairs_bound(" +
                          std::to_string(cfg.degree) + ") = " + std::to_string(max_pairs_bound(cfg.degree)));
    SearchStats local;
    auto out = cfg.mode == SearchMode::pruned ? pruned(cfg, local) : paranoid(cfg, local);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (stats) add_stats(*stats, local);
    return out;
}

std::vector<CurveRecord> enumerate_candidates(const SearchConfig& cfg, SearchStats* stats) {
    std::vector<CurveRecord> out;
    for (const auto& n : enumerate_newton(cfg, stats)) {
        auto r = make_record(cfg.degree, n);
        r.bl = bl_check_unicuspidal(cfg.degree, r.semigroup_generators);
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace cusp
