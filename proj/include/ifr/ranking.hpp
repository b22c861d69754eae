#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ifr/lp_metric.hpp"
#include "ifr/trifn.hpp"

namespace ifr {

// Sign carried by the ranking score: +1 when the value index is
// non-negative, -1 otherwise.
double score_sign(const Trifn& n, double lambda = 0.5);

// Signed ranking score: the sign above times the distance to the zero
// number.  Larger means better.
double rank_score(PNorm p, const Trifn& n, double lambda = 0.5);

struct RankItem {
    std::string id;
    Trifn number;
};

struct RankEntry {
    std::string id;
    double score = 0.0;
};

struct RankOutcome {
    // Sorted best first.  Ties keep the input order of their items.
    std::vector<RankEntry> entries;
    // tie_groups[i] is the group index of entries[i]; groups are numbered
    // from 0 starting at the best entry.
    std::vector<std::size_t> tie_groups;
    double p = 2.0;
    double lambda = 0.5;
    double tie_epsilon = 1e-9;
};

// Ranks items by score, best first.  Adjacent entries whose scores differ
// by at most tie_epsilon are chained into one tie group.  Throws
// std::invalid_argument on an empty input.
RankOutcome rank(PNorm p, const std::vector<RankItem>& items, double lambda = 0.5,
                 double tie_epsilon = 1e-9);

// Renders ids best first, joined by " ≻ " (succeeds) across groups and
// " ∼ " (equivalent) inside a group, e.g. "a ≻ b ∼ c".
std::string order_string(const RankOutcome& outcome);

}  // namespace ifr
