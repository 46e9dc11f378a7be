#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mdscode/alphabet.hpp"

namespace mdscode {

using Codeword = std::vector<Symbol>;

/// A code is a finite set of equal-length words over one alphabet.
/// Words are kept sorted and deduplicated, so iteration order, file
/// output and witnesses are deterministic. Immutable after construction.
class Code {
  public:
    Code(AlphabetPtr alphabet, unsigned n, std::vector<Codeword> words);

    const Alphabet& alphabet() const { return *alphabet_; }
    AlphabetPtr alphabet_ptr() const { return alphabet_; }
    unsigned length() const { return n_; }
    unsigned q() const { return alphabet_->order(); }
    std::size_t size() const { return words_.size(); }
    const std::vector<Codeword>& words() const { return words_; }
    bool contains(const Codeword& w) const;

    /// k with |C| = q^k, if the size is an exact power (k >= 1).
    std::optional<unsigned> dimension_exponent() const { return k_; }

  private:
    AlphabetPtr alphabet_;
    unsigned n_;
    std::vector<Codeword> words_;
    std::optional<unsigned> k_;
};

unsigned weight(const Codeword& u);
unsigned hamming_distance(const Codeword& u, const Codeword& v);

/// Indices (0-based) of the nonzero / zero coordinates, ascending.
std::vector<unsigned> support(const Codeword& u);
std::vector<unsigned> co_support(const Codeword& u);

/// Ordered list of disjoint coordinate sets covering {0..n-1}.
struct Partition {
    unsigned n = 0;
    std::vector<std::vector<unsigned>> parts;

    Partition(unsigned n, std::vector<std::vector<unsigned>> parts);

    std::vector<unsigned> sizes() const;
    /// Consecutive blocks of the given sizes: {0..s0-1 | s0..s0+s1-1 | ...}.
    static Partition leading(unsigned n, const std::vector<unsigned>& sizes);
    /// Parses 1-based dash ranges, e.g. "1-3|4-6" or "1-2,5|3-4".
    static Partition parse(std::string_view text, unsigned n);
    std::string to_string() const;  // 1-based, parse() round-trips
};

using WeightProfile = std::vector<unsigned>;

/// Per-part Hamming weights of u under t; their sum is weight(u).
WeightProfile weight_profile(const Codeword& u, const Partition& t);

/// Exact minimum pairwise Hamming distance; full pair scan.
unsigned min_distance(const Code& code);

struct MdsReport {
    bool is_mds = false;
    unsigned n = 0;
    unsigned q = 0;
    std::size_t size = 0;
    std::optional<unsigned> k;       // present when size = q^k, k >= 1
    std::optional<unsigned> d;       // min distance when determined
    std::optional<std::pair<Codeword, Codeword>> witness;  // violating pair
    std::string reason;              // empty when is_mds
};

/// MDS check: |C| = q^k for an integer k >= 1 and min distance n-k+1.
/// Size failures and distance-witness failures are reported, never thrown.
MdsReport verify_mds(const Code& code);

/// Translate by the negation of the lexicographically smallest word, so
/// the result contains the zero word. Distances are unchanged.
Code normalize_contains_zero(const Code& code);

/// A coordinate permutation plus one symbol permutation per coordinate.
/// Image of u has coordinate i equal to pis[i](u[sigma[i]]).
struct Equivalence {
    std::vector<unsigned> sigma;           // 0-based coordinate map
    std::vector<std::vector<Symbol>> pis;  // pis[i][s] = image of symbol s

    static Equivalence identity(unsigned n, unsigned q);
};

Code apply_equivalence(const Code& code, const Equivalence& e);

using Assignments = std::vector<std::pair<unsigned, Symbol>>;  // (coordinate, symbol), 0-based

/// Number of codewords matching all coordinate assignments.
std::size_t count_fixed(const Code& code, const Assignments& fixed);
/// ... and with total Hamming weight w.
std::size_t count_fixed(const Code& code, const Assignments& fixed, unsigned w);
/// ... and with the given weight profile under t.
std::size_t count_fixed(const Code& code, const Assignments& fixed, const Partition& t,
                        const WeightProfile& profile);

/// Largest number of coordinates on which two distinct codewords agree;
/// equals n - min_distance, and k-1 exactly for MDS codes.
unsigned max_agreement(const Code& code);

struct SupportFamily {
    std::size_t size = 0;
    std::vector<Codeword> members;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Largest family of weight-w codewords whose supports contain `anchor`
/// and pairwise intersect in exactly `anchor`. Exact search over the
/// compatibility graph; throws BudgetExceeded when more than
/// `candidate_budget` codewords qualify as candidates.
SupportFamily max_common_support_family(const Code& code, const std::vector<unsigned>& anchor,
                                        unsigned w, std::size_t candidate_budget = 30);

} // namespace mdscode
