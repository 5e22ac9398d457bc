#pragma once

#include "cuspidal/record.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cusp {

enum class SearchMode { pruned, paranoid };

enum class Kernel {
    openmp,  // parallel over work units
    serial,  // same work units, one thread; the reference for the parallel kernel
};

struct SearchConfig {
    int64_t degree = 0;
    int pair_count = 1;  // 1..4
    SearchMode mode = SearchMode::pruned;
    int workers = 0;  // 0: OpenMP default
    Kernel kernel = Kernel::openmp;
};

struct SearchStats {
    int64_t work_units = 0;
    int64_t delta_solutions = 0;  // sequences meeting the rationality constraint
    int64_t bl_rejected = 0;
    int64_t tangent_rejected = 0;  // m_1 + m_2 > d post-filter; expected 0
};

// Largest k with (d-1)(d-2) >= (2^k - 1) 2^k.
int max_pairs_bound(int64_t d);

// Returns sorted Newton sequences of length k at degree d meeting delta = genus
// and the B-L criterion.
std::vector<NewtonPairSeq> enumerate_newton(const SearchConfig& cfg, SearchStats* stats = nullptr);

// Same set as records (existence = candidate, family unset).
std::vector<CurveRecord> enumerate_candidates(const SearchConfig& cfg, SearchStats* stats = nullptr);

struct ClassifyOptions {
    std::optional<int> only_pairs;  // restrict to one k
    int workers = 0;
    Kernel kernel = Kernel::openmp;
};

// Every candidate of degree 3..max_degree with k <= min(4, max_pairs_bound(d)),
// with family attribution and existence resolution. Above degree 30 the
// result is not a proved-complete list (k >= 5 is not searched).
std::vector<CurveRecord> classify_range(int64_t max_degree, const ClassifyOptions& opts = {});

// Attribution + existence for a single record (used by classify_range and CLI).
void annotate(CurveRecord& r);

}  // namespace cusp
