#include "cuspidal/existence.hpp"

#include "base_registry_data.hpp"

#include <sstream>

namespace cusp {

namespace {

// Drop the first `count` entries of a run-length sequence.
MultiplicitySeq drop_prefix(const MultiplicitySeq& m, int64_t count) {
    std::vector<Run> out;
    for (const auto& r : m.runs) {
        if (count >= r.count) {
            count -= r.count;
            continue;
        }
        out.push_back({r.value, r.count - count});
        count = 0;
    }
    return normalize_runs(std::move(out));
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::optional<Reduction> detect_reduction(int64_t d, const MultiplicitySeq& m) {
    if (m.empty() || m.length() < 2) return std::nullopt;
    const int64_t m1 = m.at(0), n = m.at(1);
    if (n < 2 || m1 % n) return std::nullopt;
    const int64_t k = m1 / n;
    if (k < 1 || m.length() < 2 * k + 1) return std::nullopt;
    // entries 1..2k equal n: since the sequence is non-increasing, checking the last suffices
    if (m.at(2 * k) != n) return std::nullopt;
    if (d != (k + 1) * n) return std::nullopt;
    return Reduction{k, n, drop_prefix(m, 2 * k + 1)};
}

std::pair<int64_t, MultiplicitySeq> type1_construct(int64_t a, int64_t s) {
    if (a < 3 || s < 1) throw DomainError("type1_construct needs a >= 3, s >= 1");
    const int64_t as = checked_mul(a, s);
    return {checked_add(checked_mul(a, as), 1),
            normalize_runs({{checked_mul(a - 1, as), 1}, {as, 2 * a - 1}, {a, 2 * s}})};
}

std::optional<Lemma212Match> detect_lemma212(int64_t d, const MultiplicitySeq& m) {
    if (m.empty() || m.length() < 2) return std::nullopt;
    const int64_t m1 = m.at(0), m2 = m.at(1);
    if (m1 % m2) return std::nullopt;
    const int64_t a = m1 / m2 + 1;
    if (a < 3 || m2 % a) return std::nullopt;
    const int64_t s = m2 / a;
    if (s < 1) return std::nullopt;
    auto [deg, pattern] = type1_construct(a, s);
    if (deg != d || pattern != m) return std::nullopt;
    return Lemma212Match{a, s};
}

BaseRegistry BaseRegistry::parse(const std::string& text) {
    BaseRegistry reg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        for (std::string f; std::getline(ls, f, ';');) fields.push_back(trim(f));
        if (fields.size() < 2) throw ValidationError("registry line " + std::to_string(lineno) + ": expected 'degree ; mult'");
        Entry e;
        try {
            e.degree = std::stoll(fields[0]);
        } catch (const std::exception&) {
            throw ValidationError("registry line " + std::to_string(lineno) + ": bad degree");
        }
        if (fields[1] != "-") e.mult = parse_mult(fields[1]);
        if (fields.size() > 2) e.note = fields[2];
        reg.entries_.push_back(std::move(e));
    }
    return reg;
}

bool BaseRegistry::contains(int64_t d, const MultiplicitySeq& m) const {
    for (const auto& e : entries_)
        if (e.degree == d && e.mult == m) return true;
    return false;
}

const BaseRegistry& default_registry() {
    static const BaseRegistry reg = BaseRegistry::parse(detail::kBaseRegistryText);
    return reg;
}

ExistenceResult resolve_existence(int64_t d, const MultiplicitySeq& m, const BaseRegistry& registry) {
    ExistenceResult res;
    int64_t cd = d;
    MultiplicitySeq cm = m;
    while (true) {
        if (registry.contains(cd, cm)) {
            res.chain.push_back({cd, cm, cd, cm, Rule::Base, 0, 0});
            res.status = res.chain.size() > 1 ? Existence::proved_reduction : Existence::proved_base;
            return res;
        }
        if (auto r = detect_reduction(cd, cm)) {
            res.chain.push_back({cd, cm, r->n, r->remainder, Rule::Lemma211, r->k, r->n});
            cd = r->n;
            cm = r->remainder;
            continue;
        }
        if (auto l = detect_lemma212(cd, cm)) {
            res.chain.push_back({cd, cm, cd, cm, Rule::Lemma212, l->a, l->s});
            res.status = Existence::proved_lemma212;
            return res;
        }
        res.status = Existence::candidate;
        return res;
    }
}

}  // namespace cusp
