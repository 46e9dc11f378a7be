#include "mdscode/enumerator.hpp"

#include <sstream>

namespace mdscode {

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const BigInt& e : counts) t += e;
    return t;
}

WeightDistribution mds_weight_distribution(unsigned n, unsigned k, unsigned q) {
    if (k < 1 || k > n) throw std::invalid_argument("mds_weight_distribution: need 1 <= k <= n");
    if (q < 2) throw std::invalid_argument("mds_weight_distribution: need q >= 2");
    const unsigned d = n - k + 1;
    WeightDistribution dist;
    dist.counts.assign(n + 1, 0);
    dist.counts[0] = 1;
    for (unsigned w = d; w <= n; ++w) {
        BigInt alternating = 0;
        for (unsigned j = 0; j <= w - d; ++j) {
            BigInt term = binomial(w - 1, j) * int_pow(q, w - d - j);
            if (j % 2)
                alternating -= term;
            else
                alternating += term;
        }
        dist.counts[w] = BigInt(q - 1) * binomial(n, w) * alternating;
        if (dist.counts[w] < 0) dist.negative_entries = true;
    }
    return dist;
}

WeightDistribution empirical_weight_distribution(const Code& code) {
    WeightDistribution dist;
    dist.counts.assign(code.length() + 1, 0);
    for (const Codeword& w : code.words()) dist.counts[weight(w)] += 1;
    return dist;
}

NonIntegralValue::NonIntegralValue(const std::string& what, Rational value)
    : std::runtime_error(what), value(std::move(value)) {}

BigInt PweValue::integer() const {
    if (!integral()) {
        std::ostringstream msg;
        msg << "partition weight enumerator is not an integer: " << exact.get_str();
        throw NonIntegralValue(msg.str(), exact);
    }
    return exact.get_num();
}

PweValue pwe_formula(unsigned n, unsigned k, unsigned q, const std::vector<unsigned>& part_sizes,
                     const WeightProfile& profile) {
    if (part_sizes.size() != profile.size())
        throw std::invalid_argument("pwe_formula: profile size must match the number of parts");
    unsigned total_size = 0;
    for (unsigned s : part_sizes) total_size += s;
    if (total_size != n) throw std::invalid_argument("pwe_formula: part sizes must sum to n");
    unsigned w = 0;
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (profile[i] > part_sizes[i])
            throw std::invalid_argument("pwe_formula: profile entry exceeds its part size");
        w += profile[i];
    }
    const WeightDistribution dist = mds_weight_distribution(n, k, q);
    BigInt numerator = dist.counts[w];
    for (std::size_t i = 0; i < profile.size(); ++i) numerator *= binomial(part_sizes[i], profile[i]);
    PweValue value;
    value.exact = make_rational(std::move(numerator), binomial(n, w));
    value.hypothetical = dist.negative_entries;
    return value;
}

BigInt empirical_pwe(const Code& code, const Partition& t, const WeightProfile& profile) {
    if (t.n != code.length()) throw std::invalid_argument("empirical_pwe: partition length mismatch");
    if (profile.size() != t.parts.size())
        throw std::invalid_argument("empirical_pwe: profile size must match the number of parts");
    BigInt count = 0;
    for (const Codeword& w : code.words())
        if (weight_profile(w, t) == profile) count += 1;
    return count;
}

Rational restricted_count_value(unsigned q, RestrictedCount kind, unsigned param) {
    if (q < 4 || q % 2 != 0)
        throw std::invalid_argument("restricted_count_value: q must be even and >= 4");
    switch (kind) {
        case RestrictedCount::t2_1:
            return make_rational(BigInt(q) * (q - 2), 6);
        case RestrictedCount::t2_2: {
            if (param < 1) throw std::invalid_argument("restricted_count_value: l must be >= 1");
            return make_rational(binomial(q + param - 1, param + 2), q - 1);
        }
        case RestrictedCount::t2_3: {
            if (param < 4) throw std::invalid_argument("restricted_count_value: k must be >= 4");
            return make_rational(binomial(q + param - 4, q - 3), q - 1);
        }
    }
    throw std::logic_error("restricted_count_value: unknown kind");
}

} // namespace mdscode
