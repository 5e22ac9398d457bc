#include "cuspidal/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cusp {

std::vector<int64_t> generators_from_newton(const NewtonPairSeq& n) {
    auto pp = newton_to_puiseux(n);
    std::vector<int64_t> w{pp[0].P, pp[0].Q};
    for (size_t j = 1; j < pp.size(); ++j)
        w.push_back(checked_add(checked_mul(n[j - 1].p, w.back()), pp[j].Q));
    return w;
}

namespace {

void check_generators(const std::vector<int64_t>& g) {
    if (g.empty()) throw ValidationError("semigroup needs at least one generator");
    int64_t d = 0;
    for (int64_t x : g) {
        if (x < 1) throw ValidationError("semigroup generators must be positive");
        d = std::gcd(d, x);
    }
    if (d != 1) throw ValidationError("generators have gcd " + std::to_string(d) + ", not a numerical semigroup");
}

struct Fenwick {
    std::vector<int32_t> t;
    explicit Fenwick(size_t n) : t(n + 1, 0) {}
    void add(size_t i) {
        for (++i; i < t.size(); i += i & (~i + 1)) ++t[i];
    }
    int64_t prefix(size_t n) const {  // sum over [0, n)
        int64_t s = 0;
        for (; n > 0; n -= n & (~n + 1)) s += t[n];
        return s;
    }
};

using i128 = __int128;

i128 triangle(int64_t j) { return static_cast<i128>(j + 1) * (j + 2) / 2; }

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<int64_t> generators, int64_t bound)
    : gens_(std::move(generators)), bound_(bound) {
    check_generators(gens_);
    if (bound_ < 0) throw std::invalid_argument("membership bound must be >= 0");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    const size_t words = static_cast<size_t>(bound_ / 64 + 1);
    bits_.assign(words, 0);
    auto get = [&](int64_t x) { return (bits_[x >> 6] >> (x & 63)) & 1; };
    bits_[0] = 1;
    for (int64_t x = 1; x <= bound_; ++x) {
        for (int64_t g : gens_) {
            if (g > x) break;
            if (get(x - g)) {
                bits_[x >> 6] |= uint64_t{1} << (x & 63);
                break;
            }
        }
    }
    block_prefix_.assign(words + 1, 0);
    for (size_t i = 0; i < words; ++i) block_prefix_[i + 1] = block_prefix_[i] + std::popcount(bits_[i]);
}

bool NumericalSemigroup::contains(int64_t x) const {
    if (x < 0) return false;
    if (x > bound_) throw std::out_of_range("membership query beyond table bound");
    return (bits_[x >> 6] >> (x & 63)) & 1;
}

int64_t NumericalSemigroup::counting_R(int64_t k) const {
    if (k <= 0) return 0;
    if (k > bound_ + 1) throw std::out_of_range("counting_R argument exceeds table bound + 1");
    const int64_t w = k >> 6, r = k & 63;
    int64_t s = block_prefix_[w];
    if (r) s += std::popcount(bits_[w] & ((uint64_t{1} << r) - 1));
    return s;
}

std::vector<int64_t> NumericalSemigroup::members() const {
    std::vector<int64_t> out;
    for (int64_t x = 0; x <= bound_; ++x)
        if (contains(x)) out.push_back(x);
    return out;
}

NumericalSemigroup build_membership(const std::vector<int64_t>& generators, int64_t bound) {
    return NumericalSemigroup(generators, bound);
}

// Round-robin shortest paths over residues modulo the smallest generator.
std::vector<int64_t> apery_set(const std::vector<int64_t>& generators) {
    check_generators(generators);
    const int64_t m = *std::min_element(generators.begin(), generators.end());
    constexpr int64_t inf = std::numeric_limits<int64_t>::max();
    std::vector<int64_t> n(static_cast<size_t>(m), inf);
    n[0] = 0;
    for (int64_t a : generators) {
        if (a == m) continue;
        const int64_t step = a % m;
        const int64_t g = std::gcd(step, m);
        const int64_t cycle = m / g;
        for (int64_t p = 0; p < g; ++p) {
            // start the walk from the cycle minimum
            int64_t best = p;
            for (int64_t i = 0, r = p; i < cycle; ++i, r = (r + step) % m)
                if (n[r] < n[best]) best = r;
            if (n[best] == inf) continue;
            int64_t r = best;
            for (int64_t i = 0; i < cycle; ++i) {
                int64_t nr = (r + step) % m;
                if (n[r] != inf) n[nr] = std::min(n[nr], checked_add(n[r], a));
                r = nr;
            }
        }
    }
    return n;
}

std::string to_string(BLResult::Status s) {
    switch (s) {
        case BLResult::Status::pass: return "pass";
        case BLResult::Status::fail: return "fail";
        default: return "not-evaluated";
    }
}

BLResult bl_check_table(int64_t d, const std::vector<int64_t>& generators) {
    if (d < 1) throw DomainError("degree must be >= 1");
    BLResult res;
    res.method = "table";
    const int64_t bound = std::max<int64_t>((d - 2) * d + 1, 1);
    NumericalSemigroup s(generators, bound);
    for (int64_t j = 0; j <= d - 2; ++j) {
        if (s.counting_R(j * d + 1) != triangle(j)) {
            res.status = BLResult::Status::fail;
            res.failing_j = j;
            return res;
        }
    }
    res.status = BLResult::Status::pass;
    return res;
}

// Sweep windows [jd+1, (j+1)d+1). A residue class whose Apery element lies
// below the window contributes q or q+1 elements (d = q*m + rho), the +1 iff
// the residue falls in the cyclic run of rho residues starting at the window
// start. Classes whose Apery element lies inside the window are counted
// directly and activated afterwards.
BLResult bl_check_apery(int64_t d, const std::vector<int64_t>& generators) {
    if (d < 1) throw DomainError("degree must be >= 1");
    BLResult res;
    res.method = "apery";
    const auto ap = apery_set(generators);
    const int64_t m = static_cast<int64_t>(ap.size());
    std::vector<uint32_t> order(ap.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](uint32_t x, uint32_t y) { return ap[x] < ap[y]; });

    Fenwick fw(ap.size());
    int64_t active = 0;
    size_t next = 0;
    const int64_t q = d / m, rho = d % m;

    int64_t L = 1;
    while (next < order.size() && ap[order[next]] < L) {
        fw.add(order[next++]);
        ++active;
    }
    i128 R = active;  // R(1): elements below 1
    if (d >= 2 && R != triangle(0)) {
        res.status = BLResult::Status::fail;
        res.failing_j = 0;
        return res;
    }
    std::vector<uint32_t> entering;
    for (int64_t j = 0; j + 1 <= d - 2; ++j, L += d) {
        i128 w = static_cast<i128>(q) * active;
        if (rho > 0) {
            const int64_t start = L % m, end = start + rho;
            if (end <= m)
                w += fw.prefix(end) - fw.prefix(start);
            else
                w += fw.prefix(m) - fw.prefix(start) + fw.prefix(end - m);
        }
        entering.clear();
        while (next < order.size() && ap[order[next]] < L + d) {
            const int64_t a = ap[order[next]];
            w += (L + d - 1 - a) / m + 1;
            entering.push_back(order[next++]);
        }
        for (uint32_t r : entering) fw.add(r);
        active += static_cast<int64_t>(entering.size());
        R += w;
        if (R != triangle(j + 1)) {
            res.status = BLResult::Status::fail;
            res.failing_j = j + 1;
            return res;
        }
    }
    res.status = BLResult::Status::pass;
    return res;
}

BLResult bl_check_unicuspidal(int64_t d, const std::vector<int64_t>& generators, const BLLimits& limits) {
    if (d < 1) throw DomainError("degree must be >= 1");
    check_generators(generators);
    if (d <= 2) return bl_check_table(d, generators);
    const i128 bound = static_cast<i128>(d - 2) * d + 1;
    if (bound <= limits.max_table_bound) return bl_check_table(d, generators);
    const int64_t m = *std::min_element(generators.begin(), generators.end());
    if (m <= limits.max_apery_modulus && d <= limits.max_sweep_degree) return bl_check_apery(d, generators);
    BLResult res;
    res.method = "skipped: degree " + std::to_string(d) + " with multiplicity " + std::to_string(m) +
                 " exceeds the B-L resource limits";
    return res;
}

}  // namespace cusp
