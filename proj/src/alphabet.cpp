#include "mdscode/alphabet.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace mdscode {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors c_0..c_deg with c_deg != 0
// (or the empty vector for the zero polynomial).
using Poly = std::vector<unsigned>;

Poly trim(Poly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

// Remainder of f mod g, both over GF(p), g monic.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
    f = trim(std::move(f));
    const std::size_t dg = g.size() - 1;
    while (f.size() >= g.size()) {
        const unsigned lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i < g.size(); ++i) {
            unsigned sub = (lead * g[i]) % p;
            f[shift + i] = (f[shift + i] + p - sub) % p;
        }
        f = trim(std::move(f));
        if (f.empty()) break;
    }
    return f;
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool is_irreducible(const Poly& f, unsigned p) {
    const std::size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    for (std::size_t d = 1; 2 * d <= m; ++d) {
        // enumerate monic g of degree d: free coefficients c_0..c_{d-1}
        unsigned long count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (unsigned long t = 0; t < count; ++t) {
            Poly g(d + 1, 0);
            unsigned long v = t;
            for (std::size_t i = 0; i < d; ++i) { g[i] = v % p; v /= p; }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

unsigned checked_pow(unsigned base, unsigned exp, unsigned limit) {
    unsigned long r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        r *= base;
        if (r > limit) throw std::invalid_argument("alphabet order too large");
    }
    return static_cast<unsigned>(r);
}

constexpr unsigned kMaxOrder = 65535;   // symbols are 16-bit indices

} // namespace

std::vector<unsigned> default_irreducible_poly(unsigned p, unsigned m) {
    if (!is_prime(p)) throw std::invalid_argument("default_irreducible_poly: p must be prime");
    if (m < 1) throw std::invalid_argument("default_irreducible_poly: m must be >= 1");
    unsigned long q = 1;
    for (unsigned i = 0; i < m; ++i) q *= p;
    if (q > 1024) throw std::invalid_argument("no default polynomial for p^m > 1024; pass one explicitly");
    // x^m + (c_{m-1} x^{m-1} + ... + c_0), candidates in increasing index order
    for (unsigned long t = 0; t < q; ++t) {
        Poly f(m + 1, 0);
        unsigned long v = t;
        for (unsigned i = 0; i < m; ++i) { f[i] = static_cast<unsigned>(v % p); v /= p; }
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw std::logic_error("default_irreducible_poly: no irreducible polynomial found");
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q) {
    if (q < 2) return std::nullopt;
    for (unsigned p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        if (!is_prime(p)) continue;
        unsigned m = 0, r = q;
        while (r % p == 0) { r /= p; ++m; }
        if (r == 1) return std::make_pair(p, m);
        return std::nullopt;
    }
    return std::nullopt;
}

AlphabetSpec AlphabetSpec::cyclic(unsigned q) {
    AlphabetSpec s;
    s.kind = AlphabetKind::cyclic;
    s.order = q;
    return s;
}

AlphabetSpec AlphabetSpec::product(std::vector<unsigned> factors) {
    AlphabetSpec s;
    s.kind = AlphabetKind::product;
    s.factors = std::move(factors);
    return s;
}

AlphabetSpec AlphabetSpec::field(unsigned p, unsigned m, std::vector<unsigned> poly) {
    AlphabetSpec s;
    s.kind = AlphabetKind::field;
    s.p = p;
    s.m = m;
    s.poly = std::move(poly);
    return s;
}

namespace {

unsigned parse_uint(std::string_view text, std::string_view what) {
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw std::invalid_argument("alphabet spec: bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find(sep, pos);
        if (next == std::string_view::npos) {
            out.push_back(text.substr(pos));
            return out;
        }
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
}

} // namespace

AlphabetSpec AlphabetSpec::parse(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("alphabet spec: expected '<kind>:...' in '" + std::string(text) + "'");
    const std::string_view head = text.substr(0, colon);
    const std::string_view rest = text.substr(colon + 1);
    if (head == "cyclic") return cyclic(parse_uint(rest, "order"));
    if (head == "product") {
        std::vector<unsigned> factors;
        for (auto tok : split(rest, 'x')) factors.push_back(parse_uint(tok, "factor"));
        return product(std::move(factors));
    }
    if (head == "field") {
        std::string_view pm = rest;
        std::string_view polytext;
        const std::size_t extra = rest.find(':');
        if (extra != std::string_view::npos) {
            pm = rest.substr(0, extra);
            std::string_view opt = rest.substr(extra + 1);
            if (!opt.starts_with("poly="))
                throw std::invalid_argument("alphabet spec: unknown field option '" + std::string(opt) + "'");
            polytext = opt.substr(5);
        }
        const std::size_t caret = pm.find('^');
        if (caret == std::string_view::npos)
            throw std::invalid_argument("alphabet spec: field needs '<p>^<m>'");
        unsigned p = parse_uint(pm.substr(0, caret), "prime");
        unsigned m = parse_uint(pm.substr(caret + 1), "extension degree");
        std::vector<unsigned> poly;
        if (!polytext.empty())
            for (auto tok : split(polytext, ',')) poly.push_back(parse_uint(tok, "coefficient"));
        return field(p, m, std::move(poly));
    }
    throw std::invalid_argument("alphabet spec: unknown kind '" + std::string(head) + "'");
}

std::string AlphabetSpec::to_string() const {
    std::ostringstream out;
    switch (kind) {
        case AlphabetKind::cyclic:
            out << "cyclic:" << order;
            break;
        case AlphabetKind::product: {
            out << "product:";
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) out << 'x';
                out << factors[i];
            }
            break;
        }
        case AlphabetKind::field: {
            out << "field:" << p << '^' << m;
            if (!poly.empty() && m > 1) {
                out << ":poly=";
                for (std::size_t i = 0; i < poly.size(); ++i) {
                    if (i) out << ',';
                    out << poly[i];
                }
            }
            break;
        }
    }
    return out.str();
}

Alphabet::Alphabet(const AlphabetSpec& spec) : spec_(spec) {
    switch (spec_.kind) {
        case AlphabetKind::cyclic: {
            if (spec_.order < 2) throw std::invalid_argument("alphabet: order must be >= 2");
            if (spec_.order > kMaxOrder) throw std::invalid_argument("alphabet order too large");
            q_ = spec_.order;
            break;
        }
        case AlphabetKind::product: {
            if (spec_.factors.empty()) throw std::invalid_argument("alphabet: product needs at least one factor");
            unsigned long q = 1;
            for (unsigned f : spec_.factors) {
                if (f < 2) throw std::invalid_argument("alphabet: product factors must be >= 2");
                q *= f;
                if (q > kMaxOrder) throw std::invalid_argument("alphabet order too large");
            }
            q_ = static_cast<unsigned>(q);
            places_.assign(spec_.factors.size(), 1);
            for (std::size_t i = spec_.factors.size(); i-- > 1;)
                places_[i - 1] = places_[i] * spec_.factors[i];
            spec_.order = q_;
            break;
        }
        case AlphabetKind::field: {
            if (!is_prime(spec_.p)) throw std::invalid_argument("alphabet: field characteristic must be prime");
            if (spec_.m < 1) throw std::invalid_argument("alphabet: field degree must be >= 1");
            q_ = checked_pow(spec_.p, spec_.m, kMaxOrder);
            if (spec_.poly.empty()) spec_.poly = default_irreducible_poly(spec_.p, spec_.m);
            if (spec_.poly.size() != spec_.m + 1)
                throw std::invalid_argument("alphabet: polynomial must have degree m");
            for (unsigned c : spec_.poly)
                if (c >= spec_.p) throw std::invalid_argument("alphabet: polynomial coefficient out of range");
            if (spec_.poly.back() != 1)
                throw std::invalid_argument("alphabet: polynomial must be monic");
            if (spec_.m >= 1 && !is_irreducible(spec_.poly, spec_.p))
                throw std::invalid_argument("alphabet: polynomial is reducible over GF(p)");
            spec_.order = q_;
            if (q_ <= 256) {
                mul_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
                for (unsigned a = 0; a < q_; ++a)
                    for (unsigned b = 0; b < q_; ++b)
                        mul_table_[static_cast<std::size_t>(a) * q_ + b] =
                            mul_raw(static_cast<Symbol>(a), static_cast<Symbol>(b));
            }
            break;
        }
    }
}

void Alphabet::check(Symbol a) const {
    if (a >= q_) throw std::out_of_range("symbol index out of range");
}

Symbol Alphabet::add(Symbol a, Symbol b) const {
    check(a);
    check(b);
    switch (spec_.kind) {
        case AlphabetKind::cyclic:
            return static_cast<Symbol>((a + b) % q_);
        case AlphabetKind::product: {
            unsigned r = 0;
            for (std::size_t i = 0; i < spec_.factors.size(); ++i) {
                unsigned da = (a / places_[i]) % spec_.factors[i];
                unsigned db = (b / places_[i]) % spec_.factors[i];
                r += ((da + db) % spec_.factors[i]) * places_[i];
            }
            return static_cast<Symbol>(r);
        }
        case AlphabetKind::field: {
            unsigned r = 0, pa = a, pb = b, place = 1;
            for (unsigned i = 0; i < spec_.m; ++i) {
                r += ((pa % spec_.p + pb % spec_.p) % spec_.p) * place;
                pa /= spec_.p;
                pb /= spec_.p;
                place *= spec_.p;
            }
            return static_cast<Symbol>(r);
        }
    }
    return 0;
}

Symbol Alphabet::neg(Symbol a) const {
    check(a);
    switch (spec_.kind) {
        case AlphabetKind::cyclic:
            return static_cast<Symbol>(a == 0 ? 0 : q_ - a);
        case AlphabetKind::product: {
            unsigned r = 0;
            for (std::size_t i = 0; i < spec_.factors.size(); ++i) {
                unsigned d = (a / places_[i]) % spec_.factors[i];
                r += (d == 0 ? 0 : spec_.factors[i] - d) * places_[i];
            }
            return static_cast<Symbol>(r);
        }
        case AlphabetKind::field: {
            unsigned r = 0, pa = a, place = 1;
            for (unsigned i = 0; i < spec_.m; ++i) {
                unsigned d = pa % spec_.p;
                r += (d == 0 ? 0 : spec_.p - d) * place;
                pa /= spec_.p;
                place *= spec_.p;
            }
            return static_cast<Symbol>(r);
        }
    }
    return 0;
}

Symbol Alphabet::sub(Symbol a, Symbol b) const { return add(a, neg(b)); }

Symbol Alphabet::mul_raw(Symbol a, Symbol b) const {
    const unsigned p = spec_.p, m = spec_.m;
    // schoolbook product of the coefficient vectors, then reduce by the
    // monic polynomial: x^m == -(c_0 + ... + c_{m-1} x^{m-1})
    std::vector<unsigned> da(m), db(m), prod(2 * m - 1, 0);
    unsigned va = a, vb = b;
    for (unsigned i = 0; i < m; ++i) { da[i] = va % p; va /= p; }
    for (unsigned i = 0; i < m; ++i) { db[i] = vb % p; vb /= p; }
    for (unsigned i = 0; i < m; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (unsigned deg = 2 * m - 2; deg >= m && deg < prod.size(); --deg) {
        const unsigned lead = prod[deg];
        if (lead == 0) continue;
        prod[deg] = 0;
        for (unsigned i = 0; i < m; ++i) {
            unsigned sub = (lead * spec_.poly[i]) % p;
            prod[deg - m + i] = (prod[deg - m + i] + p - sub) % p;
        }
    }
    unsigned r = 0, place = 1;
    for (unsigned i = 0; i < m; ++i) {
        r += prod[i] * place;
        place *= p;
    }
    return static_cast<Symbol>(r);
}

Symbol Alphabet::mul(Symbol a, Symbol b) const {
    if (!is_field()) throw std::domain_error("mul: alphabet is not a field");
    check(a);
    check(b);
    if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a) * q_ + b];
    return mul_raw(a, b);
}

Symbol Alphabet::pow_raw(Symbol a, unsigned long e) const {
    Symbol r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

Symbol Alphabet::inv(Symbol a) const {
    if (!is_field()) throw std::domain_error("inv: alphabet is not a field");
    check(a);
    if (a == 0) throw std::domain_error("inv: division by zero");
    return pow_raw(a, q_ - 2);
}

Symbol Alphabet::div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

AlphabetPtr make_alphabet(const AlphabetSpec& spec) {
    return std::make_shared<const Alphabet>(spec);
}

} // namespace mdscode
