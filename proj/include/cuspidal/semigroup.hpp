#pragma once

#include "cuspidal/cusp_invariants.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cusp {

// (w_1, ..., w_{k+1}): w_1 = P_1, w_2 = Q_1, w_j = p_{j-2} w_{j-1} + Q_{j-1}.
std::vector<int64_t> generators_from_newton(const NewtonPairSeq& n);

class NumericalSemigroup {
public:
    NumericalSemigroup(std::vector<int64_t> generators, int64_t bound);

    const std::vector<int64_t>& generators() const { return gens_; }
    int64_t bound() const { return bound_; }
    bool contains(int64_t x) const;      // 0 <= x <= bound
    int64_t counting_R(int64_t k) const;  // #(W ∩ [0, k)), k <= bound + 1
    std::vector<int64_t> members() const;

private:
    std::vector<int64_t> gens_;
    int64_t bound_;
    std::vector<uint64_t> bits_;
    std::vector<int64_t> block_prefix_;  // members below 64*i
};

NumericalSemigroup build_membership(const std::vector<int64_t>& generators, int64_t bound);

// Smallest element of each residue class modulo the smallest generator.
std::vector<int64_t> apery_set(const std::vector<int64_t>& generators);

struct BLLimits {
    int64_t max_table_bound = int64_t{1} << 27;   // membership bits
    int64_t max_apery_modulus = int64_t{1} << 22;  // residues held in memory
    int64_t max_sweep_degree = int64_t{1} << 25;   // windows swept
};

struct BLResult {
    enum class Status { pass, fail, not_evaluated };
    Status status = Status::not_evaluated;
    std::optional<int64_t> failing_j;
    std::string method;  // "table", "apery" or the reason it was skipped

    bool passed() const { return status == Status::pass; }
};

std::string to_string(BLResult::Status s);

// R(jd+1) = (j+1)(j+2)/2 for j = 0..d-2.
BLResult bl_check_unicuspidal(int64_t d, const std::vector<int64_t>& generators,
                              const BLLimits& limits = {});
BLResult bl_check_table(int64_t d, const std::vector<int64_t>& generators);
BLResult bl_check_apery(int64_t d, const std::vector<int64_t>& generators);

}  // namespace cusp
