#include "cuspidal/cusp_invariants.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cusp {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ValidationError(what); }

std::string pair_str(int64_t a, int64_t b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

}  // namespace

int64_t MultiplicitySeq::length() const {
    int64_t n = 0;
    for (const auto& r : runs) n = checked_add(n, r.count);
    return n;
}

int64_t MultiplicitySeq::at(int64_t index) const {
    for (const auto& r : runs) {
        if (index < r.count) return r.value;
        index -= r.count;
    }
    return 1;
}

std::vector<int64_t> MultiplicitySeq::expand() const {
    std::vector<int64_t> out;
    for (const auto& r : runs) out.insert(out.end(), static_cast<size_t>(r.count), r.value);
    return out;
}

void validate(const NewtonPairSeq& n) {
    if (n.empty()) fail("Newton pair sequence is empty");
    for (size_t j = 0; j < n.size(); ++j) {
        const auto& [p, q] = n[j];
        std::string where = "pair " + std::to_string(j + 1) + " " + pair_str(p, q);
        if (p < 2) fail(where + ": p must be >= 2");
        if (q < 1) fail(where + ": q must be >= 1");
        if (std::gcd(p, q) != 1) fail(where + ": gcd(p, q) != 1");
        if (j == 0 && q <= p) fail(where + ": first pair needs q > p");
    }
    int64_t prod = 1;
    for (const auto& np : n) prod = checked_mul(prod, np.p);
}

void validate(const PuiseuxPairSeq& pp) {
    if (pp.empty()) fail("Puiseux pair sequence is empty");
    const size_t k = pp.size();
    for (size_t j = 0; j < k; ++j) {
        int64_t P = pp[j].P, Q = pp[j].Q;
        int64_t next = j + 1 < k ? pp[j + 1].P : 1;
        std::string where = "Puiseux pair " + std::to_string(j + 1) + " " + pair_str(P, Q);
        if (P < 2) fail(where + ": P must be >= 2");
        if (Q < 1) fail(where + ": Q must be >= 1");
        if (j + 1 < k && next >= P) fail(where + ": P must strictly decrease");
        if (P % next != 0 || Q % next != 0) fail(where + ": next P must divide P and Q");
        if (std::gcd(P / next, Q / next) != 1) fail(where + ": P/P' and Q/P' not coprime");
        if (j == 0 && Q <= P) fail(where + ": Q_1 must exceed P_1");
        if (j > 0 && Q < next) fail(where + ": Q_j must be >= P_{j+1}");
    }
}

void validate(const CharacteristicSeq& c) {
    if (c.a < 2) fail("characteristic sequence: a must be >= 2");
    if (c.b.empty()) fail("characteristic sequence: no characteristic exponents");
    if (c.b[0] <= c.a) fail("characteristic sequence: a must be < b_1");
    if (c.b[0] % c.a == 0) fail("characteristic sequence: a divides b_1");
    int64_t g = c.a;
    for (size_t i = 0; i < c.b.size(); ++i) {
        if (i > 0 && c.b[i] <= c.b[i - 1]) fail("characteristic sequence: b must strictly increase");
        int64_t ng = std::gcd(g, c.b[i]);
        if (ng == g) fail("characteristic sequence: b_" + std::to_string(i + 1) + " is not characteristic");
        g = ng;
    }
    if (g != 1) fail("characteristic sequence: gcd(a, b_1, ..., b_k) != 1");
}

void validate(const MultiplicitySeq& m) {
    for (size_t i = 0; i < m.runs.size(); ++i) {
        if (m.runs[i].count < 1) fail("multiplicity run with count < 1");
        if (m.runs[i].value < 2) fail("multiplicity value < 2 (trailing 1s are omitted)");
        if (i > 0 && m.runs[i].value >= m.runs[i - 1].value)
            fail("multiplicity runs must strictly decrease");
    }
}

PuiseuxPairSeq newton_to_puiseux(const NewtonPairSeq& n) {
    validate(n);
    const size_t k = n.size();
    PuiseuxPairSeq out(k);
    int64_t tail = 1;  // p_{j+1} ... p_k
    for (size_t j = k; j-- > 0;) {
        out[j].Q = checked_mul(n[j].q, tail);
        tail = checked_mul(tail, n[j].p);
        out[j].P = tail;
    }
    return out;
}

NewtonPairSeq puiseux_to_newton(const PuiseuxPairSeq& p) {
    validate(p);
    NewtonPairSeq out(p.size());
    for (size_t j = 0; j < p.size(); ++j) {
        int64_t next = j + 1 < p.size() ? p[j + 1].P : 1;
        out[j] = {p[j].P / next, p[j].Q / next};
    }
    return out;
}

CharacteristicSeq characteristic_seq(const NewtonPairSeq& n) {
    auto pp = newton_to_puiseux(n);
    CharacteristicSeq c{pp[0].P, {}};
    int64_t sum = 0;
    for (const auto& x : pp) {
        sum = checked_add(sum, x.Q);
        c.b.push_back(sum);
    }
    return c;
}

PuiseuxPairSeq puiseux_from_characteristic(const CharacteristicSeq& c) {
    validate(c);
    PuiseuxPairSeq out;
    int64_t g = c.a, prev = 0;
    for (int64_t b : c.b) {
        out.push_back({g, b - prev});
        g = std::gcd(g, b);
        prev = b;
    }
    return out;
}

MultiplicitySeq normalize_runs(std::vector<Run> runs) {
    MultiplicitySeq m;
    for (const auto& r : runs) {
        if (r.count <= 0 || r.value <= 1) continue;
        if (!m.runs.empty() && m.runs.back().value == r.value)
            m.runs.back().count = checked_add(m.runs.back().count, r.count);
        else
            m.runs.push_back(r);
    }
    return m;
}

MultiplicitySeq from_entries(const std::vector<int64_t>& entries) {
    std::vector<Run> runs;
    for (int64_t v : entries) runs.push_back({v, 1});
    return normalize_runs(std::move(runs));
}

// Staged Euclid: one Euclidean algorithm per Puiseux pair, continuing from the
// gcd left by the previous stage. Runs are emitted directly because quotients
// can be huge.
MultiplicitySeq multiplicity_sequence(const NewtonPairSeq& n) {
    auto pp = newton_to_puiseux(n);
    std::vector<Run> runs;
    int64_t e = pp[0].P;
    for (const auto& stage : pp) {
        int64_t c = stage.Q;
        for (;;) {
            int64_t q = c / e, r = c % e;
            if (q > 0) runs.push_back({e, q});
            if (r == 0) break;
            c = e;
            e = r;
        }
    }
    if (e != 1) throw std::logic_error("staged Euclid did not end at 1");
    return normalize_runs(std::move(runs));
}

BigInt delta_from_puiseux(const PuiseuxPairSeq& p) {
    validate(p);
    BigInt twice = BigInt(p[0].P - 1) * BigInt(p[0].Q - 1);
    for (size_t j = 1; j < p.size(); ++j) twice += BigInt(p[j].P - 1) * BigInt(p[j].Q);
    if (twice % 2 != 0) throw std::logic_error("odd 2*delta from Puiseux pairs");
    return twice / 2;
}

BigInt delta_from_multiplicities(const MultiplicitySeq& m) {
    validate(m);
    BigInt sum = 0;
    for (const auto& r : m.runs) sum += BigInt(r.count) * BigInt(r.value) * BigInt(r.value - 1) / 2;
    return sum;
}

Rational lct(const PuiseuxPairSeq& p) {
    validate(p);
    return Rational(1, p[0].P) + Rational(1, p[0].Q);
}

int64_t self_intersection(int64_t d, const PuiseuxPairSeq& p) {
    validate(p);
    if (d < 1) throw DomainError("degree must be >= 1");
    int64_t s = checked_add(checked_mul(3, d), -1 - p[0].P);
    for (const auto& x : p) s = checked_add(s, -x.Q);
    return s;
}

BigInt fibonacci(int j) {
    if (j < -1) throw DomainError("fibonacci index must be >= -1");
    if (j == -1) return 1;
    BigInt a = 0, b = 1;
    for (int i = 0; i < j; ++i) {
        BigInt t = a + b;
        a = b;
        b = t;
    }
    return a;
}

BigInt genus_target(int64_t d) {
    if (d < 1) throw DomainError("degree must be >= 1");
    return BigInt(d - 1) * BigInt(d - 2) / 2;
}

std::string format_pairs(const NewtonPairSeq& n) {
    std::string s;
    for (size_t i = 0; i < n.size(); ++i) s += (i ? "," : "") + pair_str(n[i].p, n[i].q);
    return s;
}

std::string format_puiseux(const PuiseuxPairSeq& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + pair_str(p[i].P, p[i].Q);
    return s;
}

std::string format_mult(const MultiplicitySeq& m) {
    std::string s;
    for (size_t i = 0; i < m.runs.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m.runs[i].value);
        if (m.runs[i].count > 1) s += "_" + std::to_string(m.runs[i].count);
    }
    return s;
}

namespace {

int64_t parse_int(const std::string& text, size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) fail("expected an integer at offset " + std::to_string(start) + " in \"" + text + "\"");
    try {
        return std::stoll(text.substr(start, pos - start));
    } catch (const std::out_of_range&) {
        fail("integer out of range in \"" + text + "\"");
    }
}

void expect(const std::string& text, size_t& pos, char c) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size() || text[pos] != c)
        fail(std::string("expected '") + c + "' at offset " + std::to_string(pos) + " in \"" + text + "\"");
    ++pos;
}

bool at_end(const std::string& text, size_t& pos) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    return pos >= text.size();
}

}  // namespace

NewtonPairSeq parse_pairs(const std::string& text) {
    NewtonPairSeq out;
    size_t pos = 0;
    while (!at_end(text, pos)) {
        if (!out.empty()) expect(text, pos, ',');
        expect(text, pos, '(');
        int64_t p = parse_int(text, pos);
        expect(text, pos, ',');
        int64_t q = parse_int(text, pos);
        expect(text, pos, ')');
        out.push_back({p, q});
    }
    validate(out);
    return out;
}

MultiplicitySeq parse_mult(const std::string& text) {
    std::vector<Run> runs;
    size_t pos = 0;
    if (at_end(text, pos)) return {};
    if (text.find_first_of("()") != std::string::npos) {
        // tolerate a surrounding "(...)"
        std::string inner = text;
        inner.erase(std::remove(inner.begin(), inner.end(), '('), inner.end());
        inner.erase(std::remove(inner.begin(), inner.end(), ')'), inner.end());
        return parse_mult(inner);
    }
    while (!at_end(text, pos)) {
        if (!runs.empty()) expect(text, pos, ',');
        int64_t v = parse_int(text, pos);
        int64_t c = 1;
        if (pos < text.size() && (text[pos] == '_' || text[pos] == 'x')) {
            ++pos;
            c = parse_int(text, pos);
        }
        if (c < 1) fail("run count must be >= 1");
        if (!runs.empty() && v > runs.back().value) fail("multiplicity sequence must be non-increasing");
        runs.push_back({v, c});
    }
    for (const auto& r : runs)
        if (r.value < 1) fail("multiplicity must be positive");
    return normalize_runs(std::move(runs));
}

}  // namespace cusp
