#include "mdscode/constructions.hpp"

#include <stdexcept>
#include <string>

namespace mdscode {

const char* to_string(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::rs: return "rs";
        case ConstructionKind::extended_rs: return "extended_rs";
        case ConstructionKind::doubly_extended_rs: return "doubly_extended_rs";
        case ConstructionKind::parity: return "parity";
        case ConstructionKind::repetition: return "repetition";
        case ConstructionKind::full: return "full";
        case ConstructionKind::twisted: return "twisted";
    }
    return "?";
}

ConstructionKind construction_kind_from_string(std::string_view text) {
    for (ConstructionKind kind :
         {ConstructionKind::rs, ConstructionKind::extended_rs, ConstructionKind::doubly_extended_rs,
          ConstructionKind::parity, ConstructionKind::repetition, ConstructionKind::full,
          ConstructionKind::twisted})
        if (text == to_string(kind)) return kind;
    throw std::invalid_argument("unknown construction kind '" + std::string(text) + "'");
}

ConstructionSpec ConstructionSpec::rs(AlphabetSpec alphabet, unsigned k, unsigned n) {
    ConstructionSpec s;
    s.kind = ConstructionKind::rs;
    s.alphabet = std::move(alphabet);
    s.k = k;
    s.n = n;
    return s;
}

ConstructionSpec ConstructionSpec::extended_rs(AlphabetSpec alphabet, unsigned k) {
    ConstructionSpec s;
    s.kind = ConstructionKind::extended_rs;
    s.alphabet = std::move(alphabet);
    s.k = k;
    return s;
}

ConstructionSpec ConstructionSpec::doubly_extended_rs(AlphabetSpec alphabet, unsigned k) {
    ConstructionSpec s;
    s.kind = ConstructionKind::doubly_extended_rs;
    s.alphabet = std::move(alphabet);
    s.k = k;
    return s;
}

ConstructionSpec ConstructionSpec::parity(AlphabetSpec alphabet, unsigned n) {
    ConstructionSpec s;
    s.kind = ConstructionKind::parity;
    s.alphabet = std::move(alphabet);
    s.n = n;
    return s;
}

ConstructionSpec ConstructionSpec::repetition(AlphabetSpec alphabet, unsigned n) {
    ConstructionSpec s;
    s.kind = ConstructionKind::repetition;
    s.alphabet = std::move(alphabet);
    s.n = n;
    return s;
}

ConstructionSpec ConstructionSpec::full(AlphabetSpec alphabet, unsigned n) {
    ConstructionSpec s;
    s.kind = ConstructionKind::full;
    s.alphabet = std::move(alphabet);
    s.n = n;
    return s;
}

ConstructionSpec ConstructionSpec::twisted(ConstructionSpec base) {
    ConstructionSpec s;
    s.kind = ConstructionKind::twisted;
    s.alphabet = base.alphabet;
    s.base = std::make_shared<const ConstructionSpec>(std::move(base));
    return s;
}

namespace {

unsigned long checked_code_size(unsigned q, unsigned k) {
    unsigned long size = 1;
    for (unsigned i = 0; i < k; ++i) {
        size *= q;
        if (size > (1ul << 24)) throw std::invalid_argument("construction: q^k too large to enumerate");
    }
    return size;
}

// Advance a base-q odometer; tuple[0] is the least significant digit.
bool next_tuple(std::vector<Symbol>& tuple, unsigned q) {
    for (auto& digit : tuple) {
        if (digit + 1u < q) {
            ++digit;
            return true;
        }
        digit = 0;
    }
    return false;
}

Symbol eval_poly(const Alphabet& f, const std::vector<Symbol>& coeffs, Symbol x) {
    Symbol acc = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs[i]);
    return acc;
}

// Evaluation codes: codeword = (f(0), ..., f(n-1) [, a_{k-1} [, a_1]]).
Code build_rs_family(const ConstructionSpec& spec) {
    AlphabetPtr alphabet = make_alphabet(spec.alphabet);
    if (!alphabet->is_field()) throw std::invalid_argument("rs construction requires a field alphabet");
    const unsigned q = alphabet->order();
    const unsigned k = spec.k;
    unsigned n = spec.n;
    unsigned extra = 0;
    switch (spec.kind) {
        case ConstructionKind::rs:
            if (k < 2 || k > q - 1) throw std::invalid_argument("rs: need 2 <= k <= q-1");
            if (n < k || n > q) throw std::invalid_argument("rs: need k <= n <= q");
            break;
        case ConstructionKind::extended_rs:
            if (k < 2 || k > q - 1) throw std::invalid_argument("extended_rs: need 2 <= k <= q-1");
            n = q + 1;
            extra = 1;
            break;
        case ConstructionKind::doubly_extended_rs:
            if (q % 2 != 0 || q < 4)
                throw std::invalid_argument("doubly_extended_rs: q must be even and >= 4");
            if (k != 3) throw std::invalid_argument("doubly_extended_rs: evaluation form needs k = 3");
            n = q + 2;
            extra = 2;
            break;
        default:
            throw std::logic_error("build_rs_family: not an rs kind");
    }
    const unsigned long size = checked_code_size(q, k);
    const unsigned points = n - extra;
    std::vector<Codeword> words;
    words.reserve(size);
    std::vector<Symbol> coeffs(k, 0);  // coeffs[i] multiplies x^i
    do {
        Codeword w;
        w.reserve(n);
        for (unsigned x = 0; x < points; ++x) w.push_back(eval_poly(*alphabet, coeffs, static_cast<Symbol>(x)));
        if (extra >= 1) w.push_back(coeffs[k - 1]);
        if (extra >= 2) w.push_back(coeffs[1]);
        words.push_back(std::move(w));
    } while (next_tuple(coeffs, q));
    return Code(std::move(alphabet), n, std::move(words));
}

// Length q+2 code with k = q-1 for even q: the null space of the three
// parity checks  sum c_j = 0,  sum x_j c_j + c_{q+1} = 0,
// sum x_j^2 c_j + c_q = 0  (x_j the j-th field element). Dual to the
// k = 3 evaluation form above.
Code build_doubly_extended_dual(const ConstructionSpec& spec) {
    AlphabetPtr alphabet = make_alphabet(spec.alphabet);
    if (!alphabet->is_field())
        throw std::invalid_argument("doubly_extended_rs requires a field alphabet");
    const Alphabet& f = *alphabet;
    const unsigned q = f.order();
    if (q % 2 != 0 || q < 4) throw std::invalid_argument("doubly_extended_rs: q must be even and >= 4");
    const unsigned n = q + 2;
    const unsigned long size = checked_code_size(q, q - 1);
    std::vector<Codeword> words;
    words.reserve(size);
    std::vector<Symbol> free(q - 1, 0);  // c_0..c_{q-2}
    do {
        Codeword w(n, 0);
        Symbol sum = 0, sum_x = 0, sum_x2 = 0;
        for (unsigned j = 0; j < q - 1; ++j) {
            w[j] = free[j];
            sum = f.add(sum, free[j]);
        }
        w[q - 1] = f.neg(sum);
        for (unsigned j = 0; j < q; ++j) {
            const auto x = static_cast<Symbol>(j);
            sum_x = f.add(sum_x, f.mul(x, w[j]));
            sum_x2 = f.add(sum_x2, f.mul(f.mul(x, x), w[j]));
        }
        w[q + 1] = f.neg(sum_x);
        w[q] = f.neg(sum_x2);
        words.push_back(std::move(w));
    } while (next_tuple(free, q));
    return Code(std::move(alphabet), n, std::move(words));
}

Code build_parity(const ConstructionSpec& spec) {
    AlphabetPtr alphabet = make_alphabet(spec.alphabet);
    const Alphabet& g = *alphabet;
    const unsigned q = g.order();
    const unsigned n = spec.n;
    if (n < 2) throw std::invalid_argument("parity: need n >= 2");
    const unsigned long size = checked_code_size(q, n - 1);
    std::vector<Codeword> words;
    words.reserve(size);
    std::vector<Symbol> prefix(n - 1, 0);
    do {
        Codeword w(prefix.begin(), prefix.end());
        Symbol sum = 0;
        for (Symbol s : prefix) sum = g.add(sum, s);
        w.push_back(g.neg(sum));
        words.push_back(std::move(w));
    } while (next_tuple(prefix, q));
    return Code(std::move(alphabet), n, std::move(words));
}

Code build_repetition(const ConstructionSpec& spec) {
    AlphabetPtr alphabet = make_alphabet(spec.alphabet);
    const unsigned n = spec.n;
    if (n < 1) throw std::invalid_argument("repetition: need n >= 1");
    std::vector<Codeword> words;
    for (unsigned s = 0; s < alphabet->order(); ++s) words.emplace_back(n, static_cast<Symbol>(s));
    return Code(std::move(alphabet), n, std::move(words));
}

Code build_full(const ConstructionSpec& spec) {
    AlphabetPtr alphabet = make_alphabet(spec.alphabet);
    const unsigned q = alphabet->order();
    const unsigned n = spec.n;
    if (n < 1) throw std::invalid_argument("full: need n >= 1");
    const unsigned long size = checked_code_size(q, n);
    std::vector<Codeword> words;
    words.reserve(size);
    std::vector<Symbol> w(n, 0);
    do {
        words.emplace_back(w.begin(), w.end());
    } while (next_tuple(w, q));
    return Code(std::move(alphabet), n, std::move(words));
}

Code build_twisted(const ConstructionSpec& spec) {
    if (!spec.base) throw std::invalid_argument("twisted: missing base construction");
    Code base = build(*spec.base);
    const unsigned q = base.q();
    if (q < 4) throw std::invalid_argument("twisted: alphabet must have at least 4 symbols");
    Equivalence e = Equivalence::identity(base.length(), q);
    auto& last = e.pis[base.length() - 1];
    last[1] = 2;  // the fixed 3-cycle (1 2 3)
    last[2] = 3;
    last[3] = 1;
    return apply_equivalence(base, e);
}

} // namespace

Code build(const ConstructionSpec& spec) {
    switch (spec.kind) {
        case ConstructionKind::rs:
        case ConstructionKind::extended_rs:
            return build_rs_family(spec);
        case ConstructionKind::doubly_extended_rs: {
            AlphabetPtr alphabet = make_alphabet(spec.alphabet);
            const unsigned q = alphabet->order();
            if (spec.k == q - 1) return build_doubly_extended_dual(spec);
            if (spec.k == 3) return build_rs_family(spec);
            throw std::invalid_argument("doubly_extended_rs: k must be 3 or q-1");
        }
        case ConstructionKind::parity:
            return build_parity(spec);
        case ConstructionKind::repetition:
            return build_repetition(spec);
        case ConstructionKind::full:
            return build_full(spec);
        case ConstructionKind::twisted:
            return build_twisted(spec);
    }
    throw std::logic_error("build: unknown construction kind");
}

std::vector<Code> fixture_suite(unsigned max_q) {
    if (max_q > 16) throw std::invalid_argument("fixture_suite: max_q must be <= 16");
    std::vector<Code> fixtures;
    for (unsigned q = 2; q <= max_q; ++q) {
        auto pm = prime_power(q);
        if (!pm) continue;
        AlphabetSpec field = AlphabetSpec::field(pm->first, pm->second);
        for (unsigned k : {2u, 3u}) {
            if (k > q - 1) continue;
            fixtures.push_back(build(ConstructionSpec::rs(field, k, q)));
            fixtures.push_back(build(ConstructionSpec::extended_rs(field, k)));
        }
        if (q % 2 == 0 && q >= 4)
            fixtures.push_back(build(ConstructionSpec::doubly_extended_rs(field, 3)));
    }
    if (max_q >= 2) fixtures.push_back(build(ConstructionSpec::parity(AlphabetSpec::cyclic(2), 3)));
    if (max_q >= 4)
        fixtures.push_back(build(ConstructionSpec::parity(AlphabetSpec::product({2, 2}), 5)));
    if (max_q >= 6) fixtures.push_back(build(ConstructionSpec::parity(AlphabetSpec::cyclic(6), 4)));
    if (max_q >= 5) {
        // a certified non-linear MDS code: symbol permutations over
        // GF(2), GF(3) and GF(4) are all additive, so GF(5) is the
        // smallest field where the 3-cycle twist breaks linearity
        ConstructionSpec base = ConstructionSpec::extended_rs(AlphabetSpec::field(5, 1), 2);
        fixtures.push_back(build(ConstructionSpec::twisted(std::move(base))));
    }
    return fixtures;
}

} // namespace mdscode
