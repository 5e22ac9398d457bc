#pragma once

// Representations of a unibranch plane curve singularity and its scalar
// invariants. Everything is exact; pair entries are int64 with checked
// arithmetic, anything quadratic in them is BigInt.

#include "cuspidal/arith.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cusp {

struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NewtonPair {
    int64_t p = 0;
    int64_t q = 0;
    auto operator<=>(const NewtonPair&) const = default;
};
using NewtonPairSeq = std::vector<NewtonPair>;

struct PuiseuxPair {
    int64_t P = 0;
    int64_t Q = 0;
    auto operator<=>(const PuiseuxPair&) const = default;
};
using PuiseuxPairSeq = std::vector<PuiseuxPair>;

struct CharacteristicSeq {
    int64_t a = 0;
    std::vector<int64_t> b;
    auto operator<=>(const CharacteristicSeq&) const = default;
};

struct Run {
    int64_t value = 0;
    int64_t count = 0;
    auto operator<=>(const Run&) const = default;
};

// Run-length encoded, values strictly decreasing, all >= 2. Empty = smooth.
struct MultiplicitySeq {
    std::vector<Run> runs;
    auto operator<=>(const MultiplicitySeq&) const = default;

    bool empty() const { return runs.empty(); }
    int64_t length() const;             // number of entries, counting repeats
    int64_t at(int64_t index) const;    // 0-based entry, 1 past the end
    std::vector<int64_t> expand() const;  // small sequences only
};

// Throws ValidationError naming the violated condition.
void validate(const NewtonPairSeq& n);
void validate(const PuiseuxPairSeq& p);
void validate(const CharacteristicSeq& c);
void validate(const MultiplicitySeq& m);

PuiseuxPairSeq newton_to_puiseux(const NewtonPairSeq& n);
NewtonPairSeq puiseux_to_newton(const PuiseuxPairSeq& p);
CharacteristicSeq characteristic_seq(const NewtonPairSeq& n);
PuiseuxPairSeq puiseux_from_characteristic(const CharacteristicSeq& c);

MultiplicitySeq multiplicity_sequence(const NewtonPairSeq& n);
// Merge adjacent equal values, drop 1s and empty runs.
MultiplicitySeq normalize_runs(std::vector<Run> runs);
MultiplicitySeq from_entries(const std::vector<int64_t>& entries);

BigInt delta_from_puiseux(const PuiseuxPairSeq& p);
BigInt delta_from_multiplicities(const MultiplicitySeq& m);
Rational lct(const PuiseuxPairSeq& p);
int64_t self_intersection(int64_t d, const PuiseuxPairSeq& p);
BigInt fibonacci(int j);
BigInt genus_target(int64_t d);

// Text forms: "(p,q),(p,q)" and "16,8_4,4_3,2_3" (input also takes "8x4").
std::string format_pairs(const NewtonPairSeq& n);
std::string format_puiseux(const PuiseuxPairSeq& p);
std::string format_mult(const MultiplicitySeq& m);
NewtonPairSeq parse_pairs(const std::string& text);
MultiplicitySeq parse_mult(const std::string& text);

}  // namespace cusp
