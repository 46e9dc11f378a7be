#include "mdscode/search.hpp"

#include <chrono>
#include <stdexcept>

#include "mdscode/bounds.hpp"

namespace mdscode {

const char* to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::exists: return "exists";
        case SearchStatus::not_exists: return "not_exists";
        case SearchStatus::unknown: return "unknown";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Searcher {
    unsigned q, k, checks;
    std::uint64_t message_count;
    std::vector<Symbol> messages;   // flat, stride k; lex order, index 0 = zero tuple
    std::vector<Symbol> assigned;   // flat, stride `checks`
    std::vector<int> first_nonzero; // per column: message that introduced a nonzero, -1 if none
    std::uint64_t nodes = 0, prunes = 0;
    std::uint64_t node_budget;
    double second_budget;
    Clock::time_point start;
    bool out_of_budget = false;

    explicit Searcher(const SearchProblem& p)
        : q(p.q), k(p.k), checks(p.n - p.k), node_budget(p.budget.max_nodes),
          second_budget(p.budget.max_seconds) {
        message_count = 1;
        for (unsigned i = 0; i < k; ++i) {
            message_count *= q;
            if (message_count > (1ull << 20))
                throw std::invalid_argument("exists_mds: q^k exceeds the 2^20 message budget");
        }
        messages.resize(message_count * k);
        for (std::uint64_t m = 0; m < message_count; ++m) {
            std::uint64_t v = m;
            for (unsigned i = k; i-- > 0;) {  // digit 0 most significant: index order = lex order
                messages[m * k + i] = static_cast<Symbol>(v % q);
                v /= q;
            }
        }
        assigned.assign(message_count * checks, 0);
        first_nonzero.assign(checks, -1);
    }

    unsigned sysdist(std::uint64_t a, std::uint64_t b) const {
        const Symbol* ta = &messages[a * k];
        const Symbol* tb = &messages[b * k];
        unsigned d = 0;
        for (unsigned i = 0; i < k; ++i) d += (ta[i] != tb[i]);
        return d;
    }

    bool budget_ok() {
        if (out_of_budget) return false;
        if (nodes > node_budget) {
            out_of_budget = true;
            return false;
        }
        if ((nodes & 0xfff) == 0) {
            const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
            if (elapsed > second_budget) {
                out_of_budget = true;
                return false;
            }
        }
        return true;
    }

    // Distance constraint against every earlier message: two messages at
    // systematic distance s may agree in at most s-1 check coordinates.
    // Recent messages are checked first; in lex order they are the
    // systematically close ones, so violations surface early.
    bool compatible(std::uint64_t m, const Symbol* tuple) const {
        for (std::uint64_t prior = m; prior-- > 0;) {
            const unsigned allowed = sysdist(m, prior) - 1;
            const Symbol* other = &assigned[prior * checks];
            unsigned agree = 0;
            for (unsigned j = 0; j < checks; ++j) {
                if (tuple[j] == other[j]) {
                    if (++agree > allowed) return false;
                }
            }
        }
        return true;
    }

    // Depth-first over messages in lex order; true once every message is
    // assigned. Candidate tuples are tried in lex order, restricted to
    // {0, 1} in any column that has not seen a nonzero value yet.
    bool extend(std::uint64_t m) {
        if (m == message_count) return true;
        std::vector<Symbol> tuple(checks, 0);
        while (true) {
            if (!budget_ok()) return false;
            ++nodes;
            bool ok = true;
            for (unsigned j = 0; j < checks; ++j) {
                if (first_nonzero[j] < 0 && tuple[j] > 1) {
                    ok = false;
                    break;
                }
            }
            if (ok && compatible(m, tuple.data())) {
                std::copy(tuple.begin(), tuple.end(), assigned.begin() + m * checks);
                unsigned claimed = 0;
                for (unsigned j = 0; j < checks; ++j) {
                    if (first_nonzero[j] < 0 && tuple[j] != 0) {
                        first_nonzero[j] = static_cast<int>(m);
                        claimed |= (1u << j);
                    }
                }
                if (extend(m + 1)) return true;
                for (unsigned j = 0; j < checks; ++j)
                    if (claimed & (1u << j)) first_nonzero[j] = -1;
                if (out_of_budget) return false;
            } else {
                ++prunes;
            }
            // next candidate in lex order (last column least significant)
            unsigned j = checks;
            while (j-- > 0) {
                if (tuple[j] + 1u < q) {
                    ++tuple[j];
                    break;
                }
                tuple[j] = 0;
                if (j == 0) return false;  // all candidates exhausted
            }
        }
    }
};

} // namespace

SearchOutcome exists_mds(const SearchProblem& p) {
    if (p.q < 2) throw std::invalid_argument("exists_mds: q must be >= 2");
    if (p.k < 2 || p.k >= p.n) throw std::invalid_argument("exists_mds: need 2 <= k < n");
    AlphabetSpec aspec = p.alphabet ? *p.alphabet : AlphabetSpec::cyclic(p.q);
    AlphabetPtr alphabet = make_alphabet(aspec);
    if (alphabet->order() != p.q)
        throw std::invalid_argument("exists_mds: alphabet order disagrees with q");
    if (p.n - p.k > 31) throw std::invalid_argument("exists_mds: too many check coordinates");

    Searcher searcher(p);
    searcher.start = Clock::now();
    const bool found = searcher.extend(1);  // message 0 is pinned to zero checks

    SearchOutcome outcome;
    outcome.nodes = searcher.nodes;
    outcome.prunes = searcher.prunes;
    outcome.seconds = std::chrono::duration<double>(Clock::now() - searcher.start).count();
    if (found) {
        std::vector<Codeword> words;
        words.reserve(searcher.message_count);
        for (std::uint64_t m = 0; m < searcher.message_count; ++m) {
            Codeword w(searcher.messages.begin() + m * p.k, searcher.messages.begin() + (m + 1) * p.k);
            w.insert(w.end(), searcher.assigned.begin() + m * searcher.checks,
                     searcher.assigned.begin() + (m + 1) * searcher.checks);
            words.push_back(std::move(w));
        }
        outcome.status = SearchStatus::exists;
        outcome.witness = Code(std::move(alphabet), p.n, std::move(words));
    } else if (searcher.out_of_budget) {
        outcome.status = SearchStatus::unknown;
    } else {
        outcome.status = SearchStatus::not_exists;
    }
    return outcome;
}

MaxLengthOutcome max_length(unsigned q, unsigned k, const SearchBudget& budget) {
    const unsigned cutoff = aggregate_bound(q, k).value + 1;  // admissible: no code is longer
    MaxLengthOutcome out;
    for (unsigned n = k + 1; n <= cutoff; ++n) {
        SearchProblem p;
        p.n = n;
        p.q = q;
        p.k = k;
        p.budget = budget;
        SearchOutcome probe = exists_mds(p);
        out.statuses[n] = probe.status;
        out.nodes += probe.nodes;
        out.seconds += probe.seconds;
        if (probe.status == SearchStatus::exists) {
            out.n_max = n;
            continue;
        }
        out.certified = (probe.status == SearchStatus::not_exists);
        break;
    }
    return out;
}

} // namespace mdscode
