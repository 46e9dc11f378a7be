#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "mdscode/code.hpp"

namespace mdscode {

struct SearchBudget {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 600.0;
};

struct SearchProblem {
    unsigned n = 0, q = 0, k = 0;
    /// Labels the witness code; the search itself never uses the group
    /// structure. Defaults to cyclic:q when left empty.
    std::optional<AlphabetSpec> alphabet;
    SearchBudget budget;
};

enum class SearchStatus { exists, not_exists, unknown };
const char* to_string(SearchStatus s);

struct SearchOutcome {
    SearchStatus status = SearchStatus::unknown;
    std::optional<Code> witness;  // set for exists; passes verify_mds
    std::uint64_t nodes = 0;      // candidate assignments attempted
    std::uint64_t prunes = 0;     // candidates rejected by the distance constraint
    double seconds = 0.0;
};

/// Decides whether an (n, q^k, n-k+1) MDS code exists.
///
/// Any such code is systematic on its first k coordinates (an MDS code
/// projects bijectively onto every k coordinates) and may be translated
/// to contain the zero word, so the search assigns the n-k check symbols
/// of each message tuple in lexicographic message order. A partial
/// assignment dies as soon as two messages at systematic distance s
/// agree in more than s-1 check coordinates. Symmetry quotient: zero
/// message fixed to zero checks, and each check column's first nonzero
/// value is forced to be the symbol 1 (per-column relabeling).
///
/// `not_exists` is only reported after exhausting the quotient space;
/// an exhausted budget yields `unknown`, never a wrong answer. The
/// outcome and witness are deterministic; the witness is the
/// lexicographically least canonical assignment.
SearchOutcome exists_mds(const SearchProblem& p);

struct MaxLengthOutcome {
    unsigned n_max = 0;                         // largest n with exists
    bool certified = false;                     // not_exists proven at n_max+1
    std::map<unsigned, SearchStatus> statuses;  // per probed n
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// Ascending existence probes from n = k+1; stops at the first
/// not_exists or unknown, and never probes past aggregate_bound(q,k)+1.
MaxLengthOutcome max_length(unsigned q, unsigned k, const SearchBudget& budget = {});

} // namespace mdscode
