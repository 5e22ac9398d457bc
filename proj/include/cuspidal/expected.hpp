#pragma once

// Reference data shipped with the binary: the published classification
// lists for degree <= 30, in canonical text form.

#include "cuspidal/cusp_invariants.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cusp {

struct ExpectedCurve {
    int64_t degree = 0;
    std::string pairs;  // format_pairs
    std::string mult;   // format_mult
};

struct ExpectedReduction {
    int64_t degree = 0;
    std::string mult;
    // (d', m') and optionally (d'', m''); "" is the smooth conic
    std::vector<std::pair<int64_t, std::string>> steps;
};

const std::vector<ExpectedCurve>& expected_threepairs();
const std::vector<ExpectedCurve>& expected_fourpairs();
const std::vector<ExpectedReduction>& expected_induct();

struct ListedCurve {
    int64_t degree = 0;
    NewtonPairSeq pairs;
    std::string tag;
    bool erratum = false;  // present in the family constructions, missing from the printed list
};

// Parameterized one- and two-pair lists, expanded for 3 <= d <= max_degree.
std::vector<ListedCurve> expected_onepair(int64_t max_degree = 30);
std::vector<ListedCurve> expected_twopairs(int64_t max_degree = 30);

}  // namespace cusp
