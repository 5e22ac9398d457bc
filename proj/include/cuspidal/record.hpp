#pragma once

#include "cuspidal/cusp_invariants.hpp"
#include "cuspidal/semigroup.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cusp {

enum class FamilyKind {
    AMS,
    KashiwaraIIge,
    KashiwaraIIsp,
    KashiwaraIIplusGe,
    KashiwaraIIplusSp,
    KashiwaraIIminusGe,
    KashiwaraIIminusSp,
    TonoIa,
    TonoIb,
    TonoIIa,
    TonoIIb,
    Orevkov,
    OrevkovStar,
    SmoothConic,
};

// params: AMS factors; Kashiwara (l) or (l, N, lambda_1..lambda_N);
// Tono (a) / (a, s) / (n) / (n, s); Orevkov (k).
struct FamilySpec {
    FamilyKind kind = FamilyKind::AMS;
    std::vector<int64_t> params;
    auto operator<=>(const FamilySpec&) const = default;
};

std::string kind_name(FamilyKind k);
std::optional<FamilyKind> kind_from_name(const std::string& name);
std::string describe(const FamilySpec& f);

enum class Kodaira { minus_infinity, one, two };
std::string to_string(Kodaira k);

enum class Existence { proved_base, proved_reduction, proved_lemma212, proved_family, candidate };
std::string to_string(Existence e);
bool is_proved(Existence e);

enum class Rule { Lemma211, Lemma212, Base };
std::string to_string(Rule r);

struct ReductionStep {
    int64_t from_degree = 0;
    MultiplicitySeq from_mult;
    int64_t to_degree = 0;
    MultiplicitySeq to_mult;
    Rule rule = Rule::Base;
    int64_t x = 0;  // k for Lemma211, a for Lemma212
    int64_t y = 0;  // n for Lemma211, s for Lemma212
    bool operator==(const ReductionStep&) const = default;
};

struct CurveRecord {
    int64_t degree = 0;
    NewtonPairSeq newton;  // empty only for the smooth conic
    PuiseuxPairSeq puiseux;
    MultiplicitySeq mult;
    BigInt delta = 0;
    std::vector<int64_t> semigroup_generators;
    Rational lct = 0;
    int64_t self_intersection = 0;
    std::optional<FamilySpec> family;
    std::optional<Kodaira> kodaira;
    Existence existence = Existence::candidate;
    std::vector<ReductionStep> reduction_chain;
    std::optional<BLResult> bl;
};

// Computes every invariant from the Newton pairs; existence = candidate.
CurveRecord make_record(int64_t degree, const NewtonPairSeq& n);
CurveRecord smooth_conic_record();

// Recompute from newton and compare; returns a description of the first
// mismatch, or an empty string.
std::string check_record(const CurveRecord& r);

// Canonical order: degree, then lexicographic Newton pairs.
bool canonical_less(const CurveRecord& a, const CurveRecord& b);

}  // namespace cusp
