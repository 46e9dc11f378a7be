#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mdscode {

/// Symbols are dense indices 0..q-1; 0 is always the additive identity.
using Symbol = std::uint16_t;

enum class AlphabetKind { cyclic, product, field };

/// Description of a finite abelian alphabet: Z_q, a direct product of
/// cyclic groups, or a finite field GF(p^m).
///
/// Product groups encode tuples in mixed radix, first factor most
/// significant. Field elements encode the coefficient vector of a
/// polynomial over GF(p): index = sum c_i * p^i where c_i is the
/// coefficient of x^i.
struct AlphabetSpec {
    AlphabetKind kind = AlphabetKind::cyclic;
    unsigned order = 0;                  // cyclic: q
    std::vector<unsigned> factors;       // product: orders of the cyclic factors
    unsigned p = 0, m = 0;               // field: GF(p^m)
    std::vector<unsigned> poly;          // field: c_0..c_m, monic; empty = default

    static AlphabetSpec cyclic(unsigned q);
    static AlphabetSpec product(std::vector<unsigned> factors);
    static AlphabetSpec field(unsigned p, unsigned m, std::vector<unsigned> poly = {});

    /// Grammar: `cyclic:<q>`, `product:<q1>x<q2>x...`,
    /// `field:<p>^<m>[:poly=<c0,c1,...,cm>]`.
    static AlphabetSpec parse(std::string_view text);
    std::string to_string() const;
};

/// Lexicographically smallest monic irreducible polynomial of degree m
/// over GF(p), as coefficients c_0..c_m. Defined for p^m <= 1024.
std::vector<unsigned> default_irreducible_poly(unsigned p, unsigned m);

/// (p, m) with q = p^m, p prime, or nullopt if q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q);

/// Exact arithmetic for one alphabet. Immutable after construction and
/// safe for concurrent reads. add/sub/neg exist for every kind; mul,
/// inv and div only for fields.
class Alphabet {
  public:
    explicit Alphabet(const AlphabetSpec& spec);

    AlphabetKind kind() const { return spec_.kind; }
    unsigned order() const { return q_; }
    bool is_field() const { return spec_.kind == AlphabetKind::field; }
    /// Spec with defaults resolved (a field always carries its polynomial).
    const AlphabetSpec& spec() const { return spec_; }
    std::string spec_string() const { return spec_.to_string(); }

    Symbol add(Symbol a, Symbol b) const;
    Symbol sub(Symbol a, Symbol b) const;
    Symbol neg(Symbol a) const;

    Symbol mul(Symbol a, Symbol b) const;
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const;

  private:
    void check(Symbol a) const;
    Symbol mul_raw(Symbol a, Symbol b) const;
    Symbol pow_raw(Symbol a, unsigned long e) const;

    AlphabetSpec spec_;
    unsigned q_ = 0;
    std::vector<unsigned> places_;       // product: mixed-radix place values
    std::vector<Symbol> mul_table_;      // field, q <= 256
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(const AlphabetSpec& spec);

} // namespace mdscode
