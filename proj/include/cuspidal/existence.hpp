#pragma once

#include "cuspidal/record.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cusp {

struct Reduction {
    int64_t k = 0;
    int64_t n = 0;
    MultiplicitySeq remainder;  // curve of degree n
};

// (kn, n_{2k}, m') at degree (k+1)n -> (n, m'); n is read from position 2.
std::optional<Reduction> detect_reduction(int64_t d, const MultiplicitySeq& m);

struct Lemma212Match {
    int64_t a = 0;
    int64_t s = 0;
};
// ((a-1)as, as_{2a-1}, a_{2s}) at degree a^2 s + 1, a >= 3, s >= 1.
std::optional<Lemma212Match> detect_lemma212(int64_t d, const MultiplicitySeq& m);
std::pair<int64_t, MultiplicitySeq> type1_construct(int64_t a, int64_t s);

class BaseRegistry {
public:
    struct Entry {
        int64_t degree = 0;
        MultiplicitySeq mult;
        std::string note;
    };

    // Lines "degree ; mult ; note", '#' comments, "-" for the empty sequence.
    static BaseRegistry parse(const std::string& text);

    bool contains(int64_t d, const MultiplicitySeq& m) const;
    const std::vector<Entry>& entries() const { return entries_; }

private:
    std::vector<Entry> entries_;
};

// The registry shipped with the library (data/base_registry.txt).
const BaseRegistry& default_registry();

struct ExistenceResult {
    Existence status = Existence::candidate;
    std::vector<ReductionStep> chain;  // partial chain when still a candidate
};

ExistenceResult resolve_existence(int64_t d, const MultiplicitySeq& m,
                                  const BaseRegistry& registry = default_registry());

}  // namespace cusp
