#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdscode/bigint.hpp"

namespace mdscode {

/// Upper-bound rules for M_q(k), the maximum length n of an
/// (n, q^k, n-k+1) MDS code over an alphabet of size q. Each rule is an
/// applicability predicate on (q, k) plus a bound value:
///
///   T1_1a    k >= 3, q > 2, 4 does not divide q          ->  n <= q+k-2
///   T1_1b    k > 3,  q > 2, 36 does not divide q         ->  n <= q+k-2
///   T1_2a    k >= 4, 36 does not divide q                ->  n <= q+k-3
///   T1_2b    k = 3,  q > 2, q = 2 (mod 4)                ->  n <= q
///   T1_3     k = q-1, q odd                              ->  n <= q+1
///   T2_1     k = q-1, q = 4 (mod 6)                      ->  n <= q+2
///   T2_2     k = q-2, q even; least l >= 1 with
///            (l+2)! not dividing (q+l-1)...(q+1)q(q-2)   ->  n <= q+l
///   T2_3     k >= 4, q even,
///            (k-1)! not dividing (q+k-4)...(q+1)q(q-2)   ->  n <= q+k-3
///   Trivial  k >= 2                                      ->  n <= q+k-1
///
/// Bounds never claim achievability; they only rule lengths out.
enum class TheoremId { T1_1a, T1_1b, T1_2a, T1_2b, T1_3, T2_1, T2_2, T2_3, Trivial };

const char* to_string(TheoremId id);
std::optional<TheoremId> theorem_id_from_string(std::string_view text);

constexpr TheoremId kAllTheorems[] = {
    TheoremId::T1_1a, TheoremId::T1_1b, TheoremId::T1_2a, TheoremId::T1_2b, TheoremId::T1_3,
    TheoremId::T2_1,  TheoremId::T2_2,  TheoremId::T2_3,  TheoremId::Trivial,
};

/// The factorial non-divisibility predicate behind T2_2 and T2_3:
/// true when the rule fires. `rule` must be T2_2 (param = l >= 1) or
/// T2_3 (param = k >= 4); q must be even. The factor (q-1) is skipped
/// in the product, exactly as the rules state it.
bool divisibility_condition(unsigned q, TheoremId rule, unsigned param);

struct TheoremBound {
    unsigned value;
    std::optional<unsigned> l_star;  // T2_2 only: the minimizing l
};

/// Bound from one rule, or nullopt when its hypotheses do not hold.
/// Requires q >= 2 and k >= 2 (for k = 1 repetition codes make the
/// maximum length unbounded).
std::optional<TheoremBound> theorem_bound(TheoremId id, unsigned q, unsigned k);

struct BoundProvenance {
    TheoremId id;
    unsigned value;
    std::string condition;           // human-readable hypothesis
    std::optional<unsigned> l_star;  // T2_2 only
};

struct BoundResult {
    unsigned q = 0, k = 0;
    unsigned value = 0;                       // min over all applicable rules
    std::vector<BoundProvenance> provenance;  // every applicable rule, sorted by value
    std::optional<unsigned> l_star;           // present when T2_2 applies

    /// Ids achieving the minimum, in provenance order.
    std::vector<TheoremId> achieved_by() const;
};

BoundResult aggregate_bound(unsigned q, unsigned k);

/// Dense table, rows ordered by q ascending then k ascending.
std::vector<BoundResult> bound_table(unsigned q_min, unsigned q_max, unsigned k_min, unsigned k_max);

} // namespace mdscode
