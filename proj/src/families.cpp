#include "cuspidal/families.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace cusp {

namespace {

int64_t fib(int64_t j) { return to_int64(fibonacci(static_cast<int>(j))); }

int64_t product(const std::vector<int64_t>& v, size_t from = 0, size_t to = SIZE_MAX) {
    int64_t p = 1;
    for (size_t i = from; i < std::min(to, v.size()); ++i) p = checked_mul(p, v[i]);
    return p;
}

void require(bool ok, const FamilySpec& spec, const std::string& what) {
    if (!ok) throw DomainError(describe(spec) + ": " + what);
}

CurveRecord finish(int64_t degree, NewtonPairSeq pairs, const FamilySpec& spec) {
    CurveRecord r;
    try {
        r = make_record(degree, pairs);
    } catch (const ValidationError& e) {
        throw DomainError(describe(spec) + ": " + e.what());
    } catch (const OverflowError& e) {
        throw DomainError(describe(spec) + ": " + e.what());
    }
    r.family = spec;
    r.kodaira = family_kodaira(spec.kind);
    r.existence = Existence::proved_family;
    return r;
}

bool is_kashiwara_n(FamilyKind k) {
    return k == FamilyKind::KashiwaraIIplusGe || k == FamilyKind::KashiwaraIIplusSp ||
           k == FamilyKind::KashiwaraIIminusGe || k == FamilyKind::KashiwaraIIminusSp;
}

struct KashiwaraShape {
    bool plus, ge;
};

KashiwaraShape shape(FamilyKind k) {
    return {k == FamilyKind::KashiwaraIIplusGe || k == FamilyKind::KashiwaraIIplusSp,
            k == FamilyKind::KashiwaraIIplusGe || k == FamilyKind::KashiwaraIIminusGe};
}

// Additive constant c_i in n_i = lambda_i F^2 + c_i - 1 (i is 1-based).
int64_t kashiwara_c(bool plus, int64_t l, size_t i) {
    const int64_t F = fib(2 * l + 3), G = fib(2 * l - 1);
    const bool odd = i % 2 == 1;
    return odd == plus ? checked_mul(F, G) : checked_mul(F, F - G);
}

void ordered_factorizations_rec(int64_t d, std::vector<int64_t>& cur, std::vector<std::vector<int64_t>>& out) {
    if (d == 1) {
        out.push_back(cur);
        return;
    }
    for (int64_t f = 2; f <= d; ++f) {
        if (d % f) continue;
        cur.push_back(f);
        ordered_factorizations_rec(d / f, cur, out);
        cur.pop_back();
    }
}

std::vector<int64_t> divisors(int64_t n) {
    std::vector<int64_t> small, large;
    for (int64_t i = 1; i * i <= n; ++i) {
        if (n % i) continue;
        small.push_back(i);
        if (i != n / i) large.push_back(n / i);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

Kodaira family_kodaira(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::TonoIa:
        case FamilyKind::TonoIb:
        case FamilyKind::TonoIIa:
        case FamilyKind::TonoIIb: return Kodaira::one;
        case FamilyKind::Orevkov:
        case FamilyKind::OrevkovStar: return Kodaira::two;
        default: return Kodaira::minus_infinity;
    }
}

CurveRecord ams_curve(const std::vector<int64_t>& factors) {
    FamilySpec spec{FamilyKind::AMS, factors};
    require(!factors.empty(), spec, "empty factorization");
    for (int64_t f : factors) require(f >= 2, spec, "factors must be >= 2");
    require(factors[0] != 2 || factors.size() >= 2, spec, "a leading factor 2 needs a second factor");
    const int64_t d = product(factors);
    NewtonPairSeq pairs;
    size_t start;
    if (factors[0] > 2) {
        pairs.push_back({factors[0] - 1, factors[0]});
        start = 1;
    } else {
        pairs.push_back({factors[1], checked_add(checked_mul(4, factors[1]), -1)});
        start = 2;
    }
    for (size_t i = start; i < factors.size(); ++i)
        pairs.push_back({factors[i], checked_mul(factors[i - 1], factors[i]) - 1});
    return finish(d, pairs, spec);
}

std::vector<std::vector<int64_t>> ordered_factorizations(int64_t d) {
    if (d < 1) throw DomainError("ordered factorizations need n >= 1");
    std::vector<std::vector<int64_t>> out;
    std::vector<int64_t> cur;
    ordered_factorizations_rec(d, cur, out);
    return out;
}

std::vector<CurveRecord> ams_all(int64_t d) {
    if (d < 2) throw DomainError("ams_all needs d >= 2");
    if (d == 2) return {smooth_conic_record()};
    std::vector<CurveRecord> out;
    for (const auto& f : ordered_factorizations(d)) out.push_back(ams_curve(f));
    return out;
}

BigInt ordered_factorization_count(int64_t n) {
    if (n < 1) throw DomainError("ordered_factorization_count needs n >= 1");
    static std::mutex mu;
    static std::map<int64_t, BigInt> memo;
    std::function<BigInt(int64_t)> a = [&](int64_t m) -> BigInt {
        if (m == 1) return 1;
        if (auto it = memo.find(m); it != memo.end()) return it->second;
        BigInt s = 0;
        for (int64_t dv : divisors(m))
            if (dv < m) s += a(dv);
        memo[m] = s;
        return s;
    };
    std::lock_guard<std::mutex> lock(mu);
    return a(n);
}

CurveRecord kashiwara_curve(const FamilySpec& spec) {
    const auto& p = spec.params;
    if (spec.kind == FamilyKind::KashiwaraIIge || spec.kind == FamilyKind::KashiwaraIIsp) {
        require(p.size() == 1, spec, "expects exactly one parameter l");
        const int64_t l = p[0];
        require(l >= 0 && l <= 40, spec, "l out of range");
        const int64_t F = fib(2 * l + 3), Y = fib(2 * l + 5);
        if (spec.kind == FamilyKind::KashiwaraIIge)
            return finish(checked_mul(F, Y), {{checked_mul(F, F), checked_mul(Y, Y)}}, spec);
        require(l >= 1, spec, "II_sp needs l >= 1 (l = 0 gives the pair (1,5))");
        return finish(F, {{fib(2 * l + 1), Y}}, spec);
    }
    require(is_kashiwara_n(spec.kind), spec, "not a Kashiwara kind");
    require(p.size() >= 3, spec, "expects (l, N, lambda_1..lambda_N)");
    const int64_t l = p[0], N = p[1];
    require(l >= 0 && l <= 40, spec, "l out of range");
    require(N >= 1 && static_cast<int64_t>(p.size()) == N + 2, spec, "N must be >= 1 and match the lambda count");
    for (int64_t i = 0; i < N; ++i) {
        require(p[2 + i] >= 0, spec, "lambda_i must be >= 0");
        require(l > 0 || p[2 + i] >= 1, spec, "lambda_i must be >= 1 when l = 0");
    }
    const auto [plus, ge] = shape(spec.kind);
    const int64_t F = fib(2 * l + 3), F2 = checked_mul(F, F);
    const int64_t X = plus ? fib(2 * l + 5) : fib(2 * l + 1);
    std::vector<int64_t> n(N);
    for (int64_t i = 0; i < N; ++i) n[i] = checked_add(checked_mul(p[2 + i], F2), kashiwara_c(plus, l, i + 1) - 1);

    NewtonPairSeq pairs;
    const int64_t num1 = checked_mul(checked_mul(X, X), n[0]) - 1;
    require(num1 % F2 == 0, spec, "(X^2 n_1 - 1) not divisible by F^2");
    pairs.push_back({n[0], num1 / F2});
    for (int64_t i = 1; i < N; ++i) {
        const int64_t num = checked_mul(n[i - 1], n[i]) - 1;
        require(num % F2 == 0, spec, "(n_{i-1} n_i - 1) not divisible by F^2");
        pairs.push_back({n[i], num / F2});
    }
    if (ge) {
        pairs.push_back({F2, n[N - 1]});
    } else {
        require((n[N - 1] + 1) % F == 0, spec, "(n_N + 1) not divisible by F");
        pairs.push_back({F, (n[N - 1] + 1) / F});
    }
    // a first pair with q < p describes the same branch with the roles of
    // x and y exchanged
    if (pairs[0].q < pairs[0].p) std::swap(pairs[0].p, pairs[0].q);
    const int64_t d = checked_mul(ge ? checked_mul(F, X) : X, product(n));
    return finish(d, pairs, spec);
}

CurveRecord tono_curve(const FamilySpec& spec) {
    const auto& p = spec.params;
    switch (spec.kind) {
        case FamilyKind::TonoIa: {
            require(p.size() == 1 && p[0] >= 3, spec, "needs a >= 3");
            const int64_t a = p[0];
            return finish(checked_mul(a, a) + 1, {{a - 1, a}, {a, checked_mul(a + 1, a + 1)}}, spec);
        }
        case FamilyKind::TonoIb: {
            require(p.size() == 2 && p[0] >= 3 && p[1] >= 2, spec, "needs a >= 3, s >= 2");
            const int64_t a = p[0], s = p[1], as1 = checked_mul(a, s) + 1;
            return finish(checked_mul(checked_mul(a, a), s) + 1, {{a - 1, a}, {s, as1}, {a, as1}}, spec);
        }
        case FamilyKind::TonoIIa: {
            require(p.size() == 1 && p[0] >= 2, spec, "needs n >= 2");
            const int64_t n = p[0];
            const int64_t d = checked_mul(8 * n, n) + 4 * n + 1;
            return finish(d, {{n, 4 * n + 1}, {4 * n + 1, checked_mul(2 * n + 1, 2 * n + 1)}}, spec);
        }
        case FamilyKind::TonoIIb: {
            require(p.size() == 2 && p[0] >= 2 && p[1] >= 2, spec, "needs n >= 2, s >= 2");
            const int64_t n = p[0], s = p[1];
            const int64_t m = 4 * n + 1;
            const int64_t d = checked_mul(checked_mul(2 * m, m), s) - checked_mul(4 * n, 2 * n + 1);
            const int64_t q = checked_mul(m, s) - n;
            return finish(d, {{n, m}, {4 * s - 1, q}, {m, q}}, spec);
        }
        default: throw DomainError(describe(spec) + ": not a Tono kind");
    }
}

CurveRecord orevkov_curve(int64_t k, bool starred) {
    FamilySpec spec{starred ? FamilyKind::OrevkovStar : FamilyKind::Orevkov, {k}};
    require(k >= 1 && k <= 20, spec, "needs 1 <= k <= 20");
    if (k == 1) return starred ? finish(16, {{6, 43}}, spec) : finish(8, {{3, 22}}, spec);
    const int64_t a = fib(4 * k), b = fib(4 * k + 4);
    if (a % 3 || b % 3) throw std::logic_error("phi_{4k} not divisible by 3");
    const int64_t d = fib(4 * k + 2);
    return starred ? finish(2 * d, {{a / 3, b / 3}, {6, 1}}, spec) : finish(d, {{a / 3, b / 3}, {3, 1}}, spec);
}

CurveRecord family_curve(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::AMS: return ams_curve(spec.params);
        case FamilyKind::TonoIa:
        case FamilyKind::TonoIb:
        case FamilyKind::TonoIIa:
        case FamilyKind::TonoIIb: return tono_curve(spec);
        case FamilyKind::Orevkov:
        case FamilyKind::OrevkovStar:
            require(spec.params.size() == 1, spec, "expects k");
            return orevkov_curve(spec.params[0], spec.kind == FamilyKind::OrevkovStar);
        case FamilyKind::SmoothConic: return smooth_conic_record();
        default: return kashiwara_curve(spec);
    }
}

ClosedForms invariant_closed_forms(const FamilySpec& spec) {
    const auto& p = spec.params;
    ClosedForms out;
    auto inv = [](const BigInt& x) { return Rational(BigInt(1), x); };
    switch (spec.kind) {
        case FamilyKind::AMS: {
            family_curve(spec);  // validates
            const BigInt d = product(p);
            const BigInt tail = product(p, 1);
            out.self_intersection = p.back();
            const Rational printed = inv((p[0] - 1) * tail) + inv(d);
            if (p[0] > 2) {
                out.lct = printed;
            } else {
                // (n_2, 4n_2 - 1) leading pair: P_1 = n_2...n_r, Q_1 = (4n_2 - 1) n_3...n_r
                out.lct = inv(tail) + inv(BigInt(4 * p[1] - 1) * product(p, 2));
                out.printed_lct = printed;
                out.note = "printed AMS closed form holds only for n_1 > 2";
            }
            return out;
        }
        case FamilyKind::KashiwaraIIge:
        case FamilyKind::KashiwaraIIsp: {
            family_curve(spec);
            const int64_t l = p[0];
            if (spec.kind == FamilyKind::KashiwaraIIge) {
                const BigInt F = fibonacci(2 * l + 3), Y = fibonacci(2 * l + 5);
                out.lct = inv(F * F) + inv(Y * Y);
                out.self_intersection = 0;
            } else {
                out.lct = inv(fibonacci(2 * l + 1)) + inv(fibonacci(2 * l + 5));
                out.self_intersection = -1;
            }
            return out;
        }
        case FamilyKind::KashiwaraIIplusGe:
        case FamilyKind::KashiwaraIIplusSp:
        case FamilyKind::KashiwaraIIminusGe:
        case FamilyKind::KashiwaraIIminusSp: {
            family_curve(spec);
            const auto [plus, ge] = shape(spec.kind);
            const int64_t l = p[0], N = p[1];
            const BigInt F = fibonacci(2 * l + 3);
            const BigInt X = plus ? fibonacci(2 * l + 5) : fibonacci(2 * l + 1);
            std::vector<BigInt> n;
            for (int64_t i = 0; i < N; ++i) n.push_back(BigInt(p[2 + i]) * F * F + kashiwara_c(plus, l, i + 1) - 1);
            BigInt all = 1, rest = 1;
            for (int64_t i = 0; i < N; ++i) {
                all *= n[i];
                if (i > 0) rest *= n[i];
            }
            const BigInt second = (X * X * n[0] - 1) * rest;
            if (ge) {
                out.lct = inv(all * F * F) + inv(second);
                out.self_intersection = 0;
            } else {
                out.lct = inv(all * F) + Rational(F, second);
                out.self_intersection = -1;
            }
            return out;
        }
        case FamilyKind::TonoIa: {
            family_curve(spec);
            const BigInt a = p[0];
            out.lct = inv(a * (a - 1)) + inv(a * a);
            out.self_intersection = 1 - p[0];
            return out;
        }
        case FamilyKind::TonoIb: {
            family_curve(spec);
            const BigInt a = p[0], s = p[1];
            out.lct = inv(a * s * (a - 1)) + inv(a * a * s);
            out.self_intersection = 1 - p[0];
            return out;
        }
        case FamilyKind::TonoIIa: {
            family_curve(spec);
            const BigInt n = p[0];
            out.lct = inv(n * (4 * n + 1)) + inv((4 * n + 1) * (4 * n + 1));
            out.self_intersection = -p[0];
            return out;
        }
        case FamilyKind::TonoIIb: {
            family_curve(spec);
            const BigInt n = p[0], s = p[1];
            const BigInt m = 4 * n + 1;
            out.lct = inv(n * m * (4 * s - 1)) + inv(m * m * (4 * s - 1));
            out.printed_lct = inv(n * m * (4 * s - 1)) + inv(m * m * (s - 1));
            out.self_intersection = -p[0];
            out.note = "printed II(b) closed form has (s-1) where the Newton pairs give (4s-1)";
            return out;
        }
        case FamilyKind::Orevkov:
        case FamilyKind::OrevkovStar: {
            family_curve(spec);
            const int64_t k = p[0];
            const bool star = spec.kind == FamilyKind::OrevkovStar;
            if (k == 1)
                out.lct = star ? Rational(1, 6) + Rational(1, 43) : Rational(1, 3) + Rational(1, 22);
            else if (star)
                out.lct = inv(2 * fibonacci(4 * k)) + inv(2 * fibonacci(4 * k + 4));
            else
                out.lct = inv(fibonacci(4 * k)) + inv(fibonacci(4 * k + 4));
            out.self_intersection = -2;
            return out;
        }
        case FamilyKind::SmoothConic:
            out.lct = 1;
            out.self_intersection = 4;
            return out;
    }
    throw DomainError("unknown family kind");
}

std::vector<FamilySpec> family_specs_of_degree(int64_t d) {
    std::vector<FamilySpec> out;
    if (d < 2) return out;
    if (d == 2) {
        out.push_back({FamilyKind::SmoothConic, {}});
        return out;
    }
    for (auto& f : ordered_factorizations(d)) out.push_back({FamilyKind::AMS, f});

    const BigInt D = d;
    for (int64_t l = 0; fibonacci(2 * l + 3) * fibonacci(2 * l + 5) <= D; ++l)
        if (fibonacci(2 * l + 3) * fibonacci(2 * l + 5) == D) out.push_back({FamilyKind::KashiwaraIIge, {l}});
    for (int64_t l = 1; fibonacci(2 * l + 3) <= D; ++l)
        if (fibonacci(2 * l + 3) == D) out.push_back({FamilyKind::KashiwaraIIsp, {l}});

    const FamilyKind nk[] = {FamilyKind::KashiwaraIIplusGe, FamilyKind::KashiwaraIIplusSp,
                             FamilyKind::KashiwaraIIminusGe, FamilyKind::KashiwaraIIminusSp};
    for (int64_t l = 0; fibonacci(2 * l + 1) <= D; ++l) {
        const int64_t F = fib(2 * l + 3), F2 = checked_mul(F, F);
        for (FamilyKind kind : nk) {
            const auto [plus, ge] = shape(kind);
            const BigInt X = plus ? fibonacci(2 * l + 5) : fibonacci(2 * l + 1);
            const BigInt M = ge ? X * F : X;
            if (D % M != 0) continue;
            const int64_t rest = to_int64(D / M);
            // split rest into n_1 * ... * n_N with n_i = lambda_i F^2 + c_i - 1
            std::vector<int64_t> lambdas;
            std::function<void(int64_t)> rec = [&](int64_t remaining) {
                const size_t i = lambdas.size() + 1;
                const int64_t base = kashiwara_c(plus, l, i) - 1;
                for (int64_t nv : divisors(remaining)) {
                    if (nv < 2 || nv < base || (nv - base) % F2) continue;
                    const int64_t lam = (nv - base) / F2;
                    if (l == 0 && lam < 1) continue;
                    lambdas.push_back(lam);
                    if (nv == remaining) {
                        std::vector<int64_t> params{l, static_cast<int64_t>(lambdas.size())};
                        params.insert(params.end(), lambdas.begin(), lambdas.end());
                        out.push_back({kind, params});
                    } else {
                        rec(remaining / nv);
                    }
                    lambdas.pop_back();
                }
            };
            if (rest >= 2) rec(rest);
        }
    }

    for (int64_t a = 3; a * a + 1 <= d; ++a) {
        if (a * a + 1 == d) out.push_back({FamilyKind::TonoIa, {a}});
        if ((d - 1) % (a * a) == 0 && (d - 1) / (a * a) >= 2) out.push_back({FamilyKind::TonoIb, {a, (d - 1) / (a * a)}});
    }
    for (int64_t n = 2; 8 * n * n + 4 * n + 1 <= d; ++n)
        if (8 * n * n + 4 * n + 1 == d) out.push_back({FamilyKind::TonoIIa, {n}});
    for (int64_t n = 2;; ++n) {
        const int64_t m = 4 * n + 1, base = 4 * n * (2 * n + 1), step = 2 * m * m;
        if (2 * step - base > d) break;
        if ((d + base) % step == 0 && (d + base) / step >= 2) out.push_back({FamilyKind::TonoIIb, {n, (d + base) / step}});
    }
    if (d == 8) out.push_back({FamilyKind::Orevkov, {1}});
    if (d == 16) out.push_back({FamilyKind::OrevkovStar, {1}});
    for (int64_t k = 2; fibonacci(4 * k + 2) <= D; ++k) {
        if (fibonacci(4 * k + 2) == D) out.push_back({FamilyKind::Orevkov, {k}});
        if (2 * fibonacci(4 * k + 2) == D) out.push_back({FamilyKind::OrevkovStar, {k}});
    }
    // drop degenerate parameter choices (e.g. a pair (1,q))
    std::erase_if(out, [](const FamilySpec& f) {
        try {
            family_curve(f);
            return false;
        } catch (const DomainError&) {
            return true;
        }
    });
    return out;
}

std::vector<FamilySpec> attribute_family_all(const CurveRecord& rec) {
    std::vector<FamilySpec> out;
    for (const auto& spec : family_specs_of_degree(rec.degree)) {
        try {
            if (family_curve(spec).newton == rec.newton) out.push_back(spec);
        } catch (const DomainError&) {
        }
    }
    return out;
}

std::optional<FamilySpec> attribute_family(const CurveRecord& rec) {
    auto all = attribute_family_all(rec);
    if (all.empty()) return std::nullopt;
    return all.front();
}

GridSpecs family_grid(const FamilyGrid& g) {
    GridSpecs out;
    auto push = [&](const FamilySpec& s) {
        try {
            family_curve(s);
            out.valid.push_back(s);
        } catch (const DomainError& e) {
            out.rejected.push_back({s, e.what()});
        }
    };
    for (int64_t d = 2; d <= g.ams_max_degree; ++d) {
        if (d == 2) {
            push({FamilyKind::SmoothConic, {}});
            continue;
        }
        for (auto& f : ordered_factorizations(d)) push({FamilyKind::AMS, f});
    }
    for (int64_t l = 0; l <= g.kashiwara_max_l; ++l) {
        push({FamilyKind::KashiwaraIIge, {l}});
        if (l >= 1) push({FamilyKind::KashiwaraIIsp, {l}});
        for (FamilyKind kind : {FamilyKind::KashiwaraIIplusGe, FamilyKind::KashiwaraIIplusSp,
                                FamilyKind::KashiwaraIIminusGe, FamilyKind::KashiwaraIIminusSp}) {
            const int64_t lo = l == 0 ? 1 : 0;
            for (int64_t N = 1; N <= g.kashiwara_max_N; ++N) {
                std::vector<int64_t> lam(N, lo);
                while (true) {
                    std::vector<int64_t> params{l, N};
                    params.insert(params.end(), lam.begin(), lam.end());
                    push({kind, params});
                    int64_t i = N - 1;
                    while (i >= 0 && lam[i] == g.kashiwara_max_lambda) lam[i--] = lo;
                    if (i < 0) break;
                    ++lam[i];
                }
            }
        }
    }
    for (int64_t a = 3; a <= g.tono_max_a; ++a) {
        push({FamilyKind::TonoIa, {a}});
        for (int64_t s = 2; s <= g.tono_max_s; ++s) push({FamilyKind::TonoIb, {a, s}});
    }
    for (int64_t n = 2; n <= g.tono_max_n; ++n) {
        push({FamilyKind::TonoIIa, {n}});
        for (int64_t s = 2; s <= g.tono_max_s; ++s) push({FamilyKind::TonoIIb, {n, s}});
    }
    for (int64_t k = 1; k <= g.orevkov_max_k; ++k) {
        push({FamilyKind::Orevkov, {k}});
        push({FamilyKind::OrevkovStar, {k}});
    }
    return out;
}

std::vector<PrimeHit> prime_degree_scan(int64_t limit) {
    std::vector<PrimeHit> out;
    if (limit < 2) return out;
    std::vector<char> composite(static_cast<size_t>(limit) + 1, 0);
    for (int64_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        for (int64_t q = p * p; q <= limit; q += p) composite[q] = 1;
        PrimeHit hit{p, {}};
        for (const auto& spec : family_specs_of_degree(p)) {
            if (spec.kind == FamilyKind::KashiwaraIIsp || spec.kind == FamilyKind::TonoIa ||
                spec.kind == FamilyKind::TonoIb || spec.kind == FamilyKind::TonoIIa)
                hit.families.push_back(spec);
        }
        if (!hit.families.empty()) out.push_back(std::move(hit));
    }
    return out;
}

namespace {

BunyakovskyEvidence evidence(const std::function<BigInt(int64_t)>& f) {
    BunyakovskyEvidence e;
    for (int64_t n = 1; n <= 3; ++n) e.values.push_back(f(n));
    e.gcd_first_two = boost::multiprecision::gcd(e.values[0], e.values[1]);
    e.gcd_all = boost::multiprecision::gcd(e.gcd_first_two, e.values[2]);
    return e;
}

}  // namespace

BunyakovskyEvidence bunyakovsky_sn2_plus_1(int64_t s) {
    if (s < 1) throw DomainError("s must be >= 1");
    return evidence([s](int64_t n) { return BigInt(s) * n * n + 1; });
}

BunyakovskyEvidence bunyakovsky_8n2_4n_1() {
    return evidence([](int64_t n) { return BigInt(8) * n * n + 4 * n + 1; });
}

}  // namespace cusp
