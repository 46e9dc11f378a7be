#include "mdscode/bounds.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mdscode {

const char* to_string(TheoremId id) {
    switch (id) {
        case TheoremId::T1_1a: return "T1_1a";
        case TheoremId::T1_1b: return "T1_1b";
        case TheoremId::T1_2a: return "T1_2a";
        case TheoremId::T1_2b: return "T1_2b";
        case TheoremId::T1_3: return "T1_3";
        case TheoremId::T2_1: return "T2_1";
        case TheoremId::T2_2: return "T2_2";
        case TheoremId::T2_3: return "T2_3";
        case TheoremId::Trivial: return "TRIVIAL";
    }
    return "?";
}

std::optional<TheoremId> theorem_id_from_string(std::string_view text) {
    for (TheoremId id : kAllTheorems)
        if (text == to_string(id)) return id;
    return std::nullopt;
}

namespace {

// (q+len-1)(q+len-2)...(q+1) * q * (q-2): the run of `len` consecutive
// factors starting at q, with (q-1) skipped and (q-2) kept.
BigInt skip_product(unsigned q, unsigned len) {
    BigInt p = q - 2;
    for (unsigned t = 0; t < len; ++t) p *= (q + t);
    return p;
}

} // namespace

bool divisibility_condition(unsigned q, TheoremId rule, unsigned param) {
    if (q < 2 || q % 2 != 0) throw std::domain_error("divisibility_condition: q must be even");
    if (rule == TheoremId::T2_2) {
        if (param < 1) throw std::domain_error("divisibility_condition: l must be >= 1");
        return !divides(factorial(param + 2), skip_product(q, param));
    }
    if (rule == TheoremId::T2_3) {
        if (param < 4) throw std::domain_error("divisibility_condition: k must be >= 4");
        return !divides(factorial(param - 1), skip_product(q, param - 3));
    }
    throw std::domain_error("divisibility_condition: rule must be T2_2 or T2_3");
}

namespace {

// Least l >= 1 with the T2_2 condition. Larger l only weakens the bound,
// so the search is capped at l = q.
std::optional<unsigned> least_l(unsigned q) {
    BigInt product = q - 2;        // l = 0 state, factors q..q+l-1 appended as l grows
    BigInt fact = 2;               // (l+2)! for l = 0
    for (unsigned l = 1; l <= q; ++l) {
        product *= (q + l - 1);
        fact *= (l + 2);
        if (!divides(fact, product)) return l;
    }
    return std::nullopt;
}

} // namespace

std::optional<TheoremBound> theorem_bound(TheoremId id, unsigned q, unsigned k) {
    if (q < 2) throw std::domain_error("theorem_bound: q must be >= 2");
    if (k < 2) throw std::domain_error("theorem_bound: k must be >= 2");
    switch (id) {
        case TheoremId::T1_1a:
            if (k >= 3 && q > 2 && q % 4 != 0) return TheoremBound{q + k - 2, {}};
            return std::nullopt;
        case TheoremId::T1_1b:
            if (k > 3 && q > 2 && q % 36 != 0) return TheoremBound{q + k - 2, {}};
            return std::nullopt;
        case TheoremId::T1_2a:
            if (k >= 4 && q % 36 != 0) return TheoremBound{q + k - 3, {}};
            return std::nullopt;
        case TheoremId::T1_2b:
            if (k == 3 && q > 2 && q % 4 == 2) return TheoremBound{q, {}};
            return std::nullopt;
        case TheoremId::T1_3:
            if (q % 2 == 1 && k == q - 1) return TheoremBound{q + 1, {}};
            return std::nullopt;
        case TheoremId::T2_1:
            if (q % 6 == 4 && k == q - 1) return TheoremBound{q + 2, {}};
            return std::nullopt;
        case TheoremId::T2_2: {
            if (q % 2 != 0 || q < 4 || k != q - 2) return std::nullopt;
            auto l = least_l(q);
            if (!l) return std::nullopt;
            return TheoremBound{q + *l, l};
        }
        case TheoremId::T2_3:
            if (q % 2 == 0 && q >= 4 && k >= 4 && divisibility_condition(q, TheoremId::T2_3, k))
                return TheoremBound{q + k - 3, {}};
            return std::nullopt;
        case TheoremId::Trivial:
            return TheoremBound{q + k - 1, {}};
    }
    return std::nullopt;
}

namespace {

std::string condition_text(TheoremId id, std::optional<unsigned> l_star) {
    std::ostringstream out;
    switch (id) {
        case TheoremId::T1_1a: out << "k >= 3, q > 2, 4 does not divide q"; break;
        case TheoremId::T1_1b: out << "k > 3, q > 2, 36 does not divide q"; break;
        case TheoremId::T1_2a: out << "k >= 4, 36 does not divide q"; break;
        case TheoremId::T1_2b: out << "k = 3, q > 2, q = 2 (mod 4)"; break;
        case TheoremId::T1_3: out << "k = q-1, q odd"; break;
        case TheoremId::T2_1: out << "k = q-1, q = 4 (mod 6)"; break;
        case TheoremId::T2_2:
            out << "k = q-2, q even, (l+2)! does not divide (q+l-1)...(q+1)q(q-2) at l=" << *l_star;
            break;
        case TheoremId::T2_3:
            out << "k >= 4, q even, (k-1)! does not divide (q+k-4)...(q+1)q(q-2)";
            break;
        case TheoremId::Trivial: out << "k >= 2"; break;
    }
    return out.str();
}

} // namespace

std::vector<TheoremId> BoundResult::achieved_by() const {
    std::vector<TheoremId> ids;
    for (const auto& p : provenance)
        if (p.value == value) ids.push_back(p.id);
    return ids;
}

BoundResult aggregate_bound(unsigned q, unsigned k) {
    BoundResult result;
    result.q = q;
    result.k = k;
    for (TheoremId id : kAllTheorems) {
        auto bound = theorem_bound(id, q, k);
        if (!bound) continue;
        result.provenance.push_back({id, bound->value, condition_text(id, bound->l_star), bound->l_star});
        if (bound->l_star) result.l_star = bound->l_star;
    }
    // Trivial applies for every k >= 2, so provenance is never empty.
    std::stable_sort(result.provenance.begin(), result.provenance.end(),
                     [](const BoundProvenance& a, const BoundProvenance& b) { return a.value < b.value; });
    result.value = result.provenance.front().value;
    return result;
}

std::vector<BoundResult> bound_table(unsigned q_min, unsigned q_max, unsigned k_min, unsigned k_max) {
    if (q_min > q_max || k_min > k_max) throw std::invalid_argument("bound_table: empty range");
    if (q_min < 2 || k_min < 2) throw std::domain_error("bound_table: need q >= 2 and k >= 2");
    std::vector<BoundResult> table;
    table.reserve(static_cast<std::size_t>(q_max - q_min + 1) * (k_max - k_min + 1));
    for (unsigned q = q_min; q <= q_max; ++q)
        for (unsigned k = k_min; k <= k_max; ++k) table.push_back(aggregate_bound(q, k));
    return table;
}

} // namespace mdscode
