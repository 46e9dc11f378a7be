#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "mdscode/code.hpp"

namespace mdscode {

/// Deterministic code generators used as fixtures and search seeds.
///
///   rs                  polynomial evaluation code over a field, k <= n <= q;
///                       evaluation points are field elements 0..n-1 in index order
///   extended_rs         rs at all q points plus the coefficient of x^{k-1}; n = q+1
///   doubly_extended_rs  the classical length q+2 code for even q, k in {3, q-1}
///   parity              all words over a group summing to zero; (n, q^{n-1}, 2)
///   repetition          constant words; (n, q, n)
///   full                all of A^n; (n, q^n, 1)
///   twisted             base code with the symbol 3-cycle (1 2 3) applied to the
///                       last coordinate; an equivalence, so parameters are kept
enum class ConstructionKind { rs, extended_rs, doubly_extended_rs, parity, repetition, full, twisted };

const char* to_string(ConstructionKind kind);
ConstructionKind construction_kind_from_string(std::string_view text);

struct ConstructionSpec {
    ConstructionKind kind = ConstructionKind::parity;
    AlphabetSpec alphabet;
    unsigned k = 0;  // rs kinds
    unsigned n = 0;  // rs, parity, repetition, full (derived for extended kinds)
    std::shared_ptr<const ConstructionSpec> base;  // twisted

    static ConstructionSpec rs(AlphabetSpec alphabet, unsigned k, unsigned n);
    static ConstructionSpec extended_rs(AlphabetSpec alphabet, unsigned k);
    static ConstructionSpec doubly_extended_rs(AlphabetSpec alphabet, unsigned k);
    static ConstructionSpec parity(AlphabetSpec alphabet, unsigned n);
    static ConstructionSpec repetition(AlphabetSpec alphabet, unsigned n);
    static ConstructionSpec full(AlphabetSpec alphabet, unsigned n);
    static ConstructionSpec twisted(ConstructionSpec base);
};

Code build(const ConstructionSpec& spec);

/// Deterministic fixture list for tests and cross-checks: rs and
/// extended_rs for every prime-power q <= max_q with k in {2,3},
/// doubly_extended_rs (k=3) for even prime-power q >= 4, parity codes
/// over Z_2, Z_2 x Z_2 and Z_6 as their orders fit, and one twisted
/// (non-linear) code once q = 5 fits. Every entry is MDS. max_q <= 16.
std::vector<Code> fixture_suite(unsigned max_q);

} // namespace mdscode
