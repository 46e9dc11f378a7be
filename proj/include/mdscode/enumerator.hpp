#pragma once

#include <stdexcept>
#include <vector>

#include "mdscode/bigint.hpp"
#include "mdscode/code.hpp"

namespace mdscode {

/// Exact weight histogram E[0..n]. For an MDS code of size q^k and
/// distance d = n-k+1 containing the zero word:
///
///   E(0) = 1,  E(w) = 0 for 0 < w < d,
///   E(w) = (q-1) * C(n,w) * sum_{j=0}^{w-d} (-1)^j C(w-1,j) q^{w-d-j}   for w >= d.
///
/// The closed form can go negative when no such code exists; that is
/// reported through `negative_entries`, a nonexistence signal rather
/// than an error.
struct WeightDistribution {
    std::vector<BigInt> counts;
    bool negative_entries = false;

    BigInt total() const;
};

WeightDistribution mds_weight_distribution(unsigned n, unsigned k, unsigned q);

/// Direct count over the codewords. Callers that want the MDS closed
/// form to apply should normalize the code to contain zero first.
WeightDistribution empirical_weight_distribution(const Code& code);

/// Raised when an integer-valued count comes out non-integral; carries
/// the offending exact rational. This is the contradiction mechanism of
/// the divisibility bounds, surfaced as data.
struct NonIntegralValue : std::runtime_error {
    NonIntegralValue(const std::string& what, Rational value);
    Rational value;
};

/// Partition weight enumerator of a profile (w_1..w_p) for part sizes
/// (n_1..n_p):  A(w_1..w_p) = E(w) * prod C(n_i, w_i) / C(n, w), w = sum w_i.
struct PweValue {
    Rational exact;
    /// Set when the (n,k,q) weight distribution has a negative entry,
    /// i.e. no MDS code with these parameters can exist.
    bool hypothetical = false;

    bool integral() const { return is_integral(exact); }
    /// The exact integer value; throws NonIntegralValue otherwise.
    BigInt integer() const;
};

PweValue pwe_formula(unsigned n, unsigned k, unsigned q, const std::vector<unsigned>& part_sizes,
                     const WeightProfile& profile);

/// Direct count of codewords whose profile under t equals `profile`.
BigInt empirical_pwe(const Code& code, const Partition& t, const WeightProfile& profile);

/// The exact rationals that the counting arguments behind rules T2_1,
/// T2_2 and T2_3 force certain restricted codeword counts to equal.
/// Non-integrality is precisely what fires the corresponding bound.
enum class RestrictedCount {
    t2_1,  // q(q-2)/6                      (q even >= 4)
    t2_2,  // C(q+l-1, l+2) / (q-1)         (q even >= 4, param l >= 1)
    t2_3,  // C(q+k-4, q-3) / (q-1)         (q even >= 4, param k >= 4)
};

Rational restricted_count_value(unsigned q, RestrictedCount kind, unsigned param = 0);

} // namespace mdscode
