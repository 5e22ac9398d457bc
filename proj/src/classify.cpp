#include "cuspidal/enumerator.hpp"
#include "cuspidal/existence.hpp"
#include "cuspidal/families.hpp"

#include <algorithm>

namespace cusp {

void annotate(CurveRecord& r) {
    if (r.newton.empty()) return;  // smooth conic carries its own annotation
    if (!r.family) r.family = attribute_family(r);
    r.kodaira = r.family ? std::optional<Kodaira>(family_kodaira(r.family->kind)) : std::nullopt;
    if (!r.bl) r.bl = bl_check_unicuspidal(r.degree, r.semigroup_generators);
    auto res = resolve_existence(r.degree, r.mult);
    r.reduction_chain = res.chain;
    if (is_proved(res.status))
        r.existence = res.status;
    else
        r.existence = r.family ? Existence::proved_family : Existence::candidate;
}

std::vector<CurveRecord> classify_range(int64_t max_degree, const ClassifyOptions& opts) {
    std::vector<CurveRecord> out;
    for (int64_t d = 3; d <= max_degree; ++d) {
        const int kmax = std::min(4, max_pairs_bound(d));
        for (int k = 1; k <= kmax; ++k) {
            if (opts.only_pairs && *opts.only_pairs != k) continue;
            SearchConfig cfg;
            cfg.degree = d;
            cfg.pair_count = k;
            cfg.workers = opts.workers;
            cfg.kernel = opts.kernel;
            for (auto& r : enumerate_candidates(cfg)) {
                annotate(r);
                out.push_back(std::move(r));
            }
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

}  // namespace cusp
