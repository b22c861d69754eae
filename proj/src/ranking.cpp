#include "ifr/ranking.hpp"

#include <algorithm>
#include <stdexcept>

#include "ifr/indices.hpp"

namespace ifr {

double score_sign(const Trifn& n, double lambda) {
    return va_index(n, lambda).value >= 0.0 ? 1.0 : -1.0;
}

double rank_score(PNorm p, const Trifn& n, double lambda) {
    return score_sign(n, lambda) * trifn_distance(p, n, Trifn::origin(), lambda);
}

RankOutcome rank(PNorm p, const std::vector<RankItem>& items, double lambda, double tie_epsilon) {
    if (items.empty()) throw std::invalid_argument("rank needs at least one item");
    if (!(tie_epsilon >= 0.0)) throw std::invalid_argument("tie_epsilon must be non-negative");

    RankOutcome out;
    out.p = p.p();
    out.lambda = lambda;
    out.tie_epsilon = tie_epsilon;
    out.entries.reserve(items.size());
    for (const RankItem& item : items) {
        out.entries.push_back({item.id, rank_score(p, item.number, lambda)});
    }
    std::stable_sort(out.entries.begin(), out.entries.end(),
                     [](const RankEntry& a, const RankEntry& b) { return a.score > b.score; });

    out.tie_groups.resize(out.entries.size());
    std::size_t group = 0;
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
        // A tie chains through adjacent entries, so a group can span more
        // than tie_epsilon end to end.
        if (i > 0 && out.entries[i - 1].score - out.entries[i].score > tie_epsilon) ++group;
        out.tie_groups[i] = group;
    }
    return out;
}

std::string order_string(const RankOutcome& outcome) {
    std::string s;
    for (std::size_t i = 0; i < outcome.entries.size(); ++i) {
        if (i > 0) {
            s += outcome.tie_groups[i] == outcome.tie_groups[i - 1] ? " ∼ " : " ≻ ";
        }
        s += outcome.entries[i].id;
    }
    return s;
}

}  // namespace ifr
