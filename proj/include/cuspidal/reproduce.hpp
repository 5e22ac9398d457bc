#pragma once

#include "cuspidal/enumerator.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cusp {

struct ReproduceOptions {
    int64_t max_degree = 30;
    int workers = 0;
    Kernel kernel = Kernel::openmp;
};

struct ReproduceReport {
    std::string table;
    bool ok = false;
    int64_t expected_rows = 0;
    int64_t generated_rows = 0;
    int64_t matched_rows = 0;
    std::vector<std::string> missing;  // expected, not regenerated
    std::vector<std::string> extra;    // regenerated, not expected
    std::vector<std::string> info;
};

// threepairs fourpairs induct lct-kashiwara lct-tono lct-orevkov onepair twopairs all
const std::vector<std::string>& table_ids();
bool is_table_id(const std::string& id);

// Throws std::invalid_argument for an unknown id.
ReproduceReport reproduce_table(const std::string& id, const ReproduceOptions& opts = {});
std::vector<ReproduceReport> reproduce_all(const ReproduceOptions& opts = {});

std::string format_report(const ReproduceReport& r);

}  // namespace cusp
