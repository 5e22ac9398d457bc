#pragma once

#include "cuspidal/record.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cusp {

CurveRecord ams_curve(const std::vector<int64_t>& factors);
std::vector<std::vector<int64_t>> ordered_factorizations(int64_t d);
// One record per ordered factorization; d = 2 yields the smooth conic.
std::vector<CurveRecord> ams_all(int64_t d);
BigInt ordered_factorization_count(int64_t n);

CurveRecord kashiwara_curve(const FamilySpec& spec);
CurveRecord tono_curve(const FamilySpec& spec);
CurveRecord orevkov_curve(int64_t k, bool starred);
CurveRecord family_curve(const FamilySpec& spec);  // dispatch on kind

Kodaira family_kodaira(FamilyKind kind);

struct ClosedForms {
    Rational lct;
    int64_t self_intersection = 0;
    // Set when the printed closed form disagrees with the pairs it describes.
    std::optional<Rational> printed_lct;
    std::string note;
};
ClosedForms invariant_closed_forms(const FamilySpec& spec);

// All family specs whose curve has exactly this degree; degenerate
// parameter choices are left out.
std::vector<FamilySpec> family_specs_of_degree(int64_t d);
std::vector<FamilySpec> attribute_family_all(const CurveRecord& rec);
std::optional<FamilySpec> attribute_family(const CurveRecord& rec);

// Parameter grid used by the family cross-checks: AMS d <= ams_max_degree;
// Kashiwara l <= 3, N <= 2, lambda <= 2; Tono a <= 7, s <= 4, n <= 5;
// Orevkov k <= 4.
struct FamilyGrid {
    int64_t ams_max_degree = 30;
    int64_t kashiwara_max_l = 3, kashiwara_max_N = 2, kashiwara_max_lambda = 2;
    int64_t tono_max_a = 7, tono_max_s = 4, tono_max_n = 5;
    int64_t orevkov_max_k = 4;
};
// Specs on the grid; invalid Kashiwara combinations are returned separately.
struct GridSpecs {
    std::vector<FamilySpec> valid;
    std::vector<std::pair<FamilySpec, std::string>> rejected;
};
GridSpecs family_grid(const FamilyGrid& grid = {});

struct PrimeHit {
    int64_t prime = 0;
    std::vector<FamilySpec> families;
};
std::vector<PrimeHit> prime_degree_scan(int64_t limit);

struct BunyakovskyEvidence {
    std::vector<BigInt> values;  // f(1), f(2), f(3)
    BigInt gcd_first_two;
    BigInt gcd_all;
};
BunyakovskyEvidence bunyakovsky_sn2_plus_1(int64_t s);
BunyakovskyEvidence bunyakovsky_8n2_4n_1();

}  // namespace cusp
