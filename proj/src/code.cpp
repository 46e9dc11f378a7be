#include "mdscode/code.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace mdscode {

Code::Code(AlphabetPtr alphabet, unsigned n, std::vector<Codeword> words)
    : alphabet_(std::move(alphabet)), n_(n), words_(std::move(words)) {
    if (!alphabet_) throw std::invalid_argument("code: null alphabet");
    if (n_ == 0) throw std::invalid_argument("code: length must be >= 1");
    const unsigned q = alphabet_->order();
    for (const Codeword& w : words_) {
        if (w.size() != n_) throw std::invalid_argument("code: word length mismatch");
        for (Symbol s : w)
            if (s >= q) throw std::invalid_argument("code: symbol out of range");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());

    // k = round(log_q M), then validated by an exact power check
    if (!words_.empty()) {
        const double approx = std::log(static_cast<double>(words_.size())) / std::log(static_cast<double>(q));
        const auto k = static_cast<unsigned>(std::llround(approx));
        if (k >= 1) {
            unsigned long long power = 1;
            bool overflow = false;
            for (unsigned i = 0; i < k; ++i) {
                if (power > (1ull << 62) / q) { overflow = true; break; }
                power *= q;
            }
            if (!overflow && power == words_.size()) k_ = k;
        }
    }
}

bool Code::contains(const Codeword& w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

unsigned weight(const Codeword& u) {
    unsigned w = 0;
    for (Symbol s : u) w += (s != 0);
    return w;
}

unsigned hamming_distance(const Codeword& u, const Codeword& v) {
    if (u.size() != v.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    unsigned d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += (u[i] != v[i]);
    return d;
}

std::vector<unsigned> support(const Codeword& u) {
    std::vector<unsigned> s;
    for (unsigned i = 0; i < u.size(); ++i)
        if (u[i] != 0) s.push_back(i);
    return s;
}

std::vector<unsigned> co_support(const Codeword& u) {
    std::vector<unsigned> s;
    for (unsigned i = 0; i < u.size(); ++i)
        if (u[i] == 0) s.push_back(i);
    return s;
}

Partition::Partition(unsigned n, std::vector<std::vector<unsigned>> parts)
    : n(n), parts(std::move(parts)) {
    std::vector<bool> seen(n, false);
    if (this->parts.empty()) throw std::invalid_argument("partition: needs at least one part");
    for (auto& part : this->parts) {
        if (part.empty()) throw std::invalid_argument("partition: empty part");
        std::sort(part.begin(), part.end());
        for (unsigned i : part) {
            if (i >= n) throw std::invalid_argument("partition: coordinate out of range");
            if (seen[i]) throw std::invalid_argument("partition: coordinate repeated");
            seen[i] = true;
        }
    }
    for (unsigned i = 0; i < n; ++i)
        if (!seen[i]) throw std::invalid_argument("partition: coordinates not covered");
}

std::vector<unsigned> Partition::sizes() const {
    std::vector<unsigned> s;
    s.reserve(parts.size());
    for (const auto& part : parts) s.push_back(static_cast<unsigned>(part.size()));
    return s;
}

Partition Partition::leading(unsigned n, const std::vector<unsigned>& sizes) {
    std::vector<std::vector<unsigned>> parts;
    unsigned next = 0;
    for (unsigned s : sizes) {
        std::vector<unsigned> part;
        for (unsigned i = 0; i < s; ++i) part.push_back(next++);
        parts.push_back(std::move(part));
    }
    if (next != n) throw std::invalid_argument("partition: sizes do not sum to n");
    return Partition(n, std::move(parts));
}

Partition Partition::parse(std::string_view text, unsigned n) {
    std::vector<std::vector<unsigned>> parts;
    auto parse_coord = [&](std::string_view tok) -> unsigned {
        unsigned v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size() || v == 0)
            throw std::invalid_argument("partition: bad coordinate '" + std::string(tok) + "' (1-based)");
        return v - 1;
    };
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t bar = text.find('|', pos);
        std::string_view part_text = text.substr(pos, bar == std::string_view::npos ? bar : bar - pos);
        std::vector<unsigned> part;
        std::size_t tpos = 0;
        while (tpos <= part_text.size()) {
            std::size_t comma = part_text.find(',', tpos);
            std::string_view tok = part_text.substr(tpos, comma == std::string_view::npos ? comma : comma - tpos);
            std::size_t dash = tok.find('-');
            if (dash == std::string_view::npos) {
                part.push_back(parse_coord(tok));
            } else {
                unsigned lo = parse_coord(tok.substr(0, dash));
                unsigned hi = parse_coord(tok.substr(dash + 1));
                if (hi < lo) throw std::invalid_argument("partition: empty range in '" + std::string(tok) + "'");
                for (unsigned i = lo; i <= hi; ++i) part.push_back(i);
            }
            if (comma == std::string_view::npos) break;
            tpos = comma + 1;
        }
        parts.push_back(std::move(part));
        if (bar == std::string_view::npos) break;
        pos = bar + 1;
    }
    return Partition(n, std::move(parts));
}

std::string Partition::to_string() const {
    std::ostringstream out;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        if (p) out << '|';
        const auto& part = parts[p];
        std::size_t i = 0;
        bool first = true;
        while (i < part.size()) {
            std::size_t j = i;
            while (j + 1 < part.size() && part[j + 1] == part[j] + 1) ++j;
            if (!first) out << ',';
            first = false;
            if (j == i)
                out << part[i] + 1;
            else
                out << part[i] + 1 << '-' << part[j] + 1;
            i = j + 1;
        }
    }
    return out.str();
}

WeightProfile weight_profile(const Codeword& u, const Partition& t) {
    if (t.n != u.size()) throw std::invalid_argument("weight_profile: partition length mismatch");
    WeightProfile w(t.parts.size(), 0);
    for (std::size_t p = 0; p < t.parts.size(); ++p)
        for (unsigned i : t.parts[p]) w[p] += (u[i] != 0);
    return w;
}

unsigned min_distance(const Code& code) {
    const auto& words = code.words();
    if (words.size() < 2) throw std::invalid_argument("min_distance: need at least 2 words");
    unsigned best = code.length();
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            unsigned d = hamming_distance(words[i], words[j]);
            if (d < best) {
                best = d;
                if (best == 1) return best;  // cannot get lower for distinct words
            }
        }
    }
    return best;
}

MdsReport verify_mds(const Code& code) {
    MdsReport r;
    r.n = code.length();
    r.q = code.q();
    r.size = code.size();
    r.k = code.dimension_exponent();
    if (!r.k) {
        std::ostringstream msg;
        msg << "size " << r.size << " is not q^k for any integer k >= 1 (q=" << r.q << ")";
        r.reason = msg.str();
        return r;
    }
    const unsigned k = *r.k;
    if (k > r.n) {
        std::ostringstream msg;
        msg << "k=" << k << " exceeds length n=" << r.n;
        r.reason = msg.str();
        return r;
    }
    const unsigned d_expected = r.n - k + 1;
    // Early-exit pair scan: any pair closer than n-k+1 is a witness. A
    // clean scan settles it, since a code of size q^k cannot have
    // distance above n-k+1.
    const auto& words = code.words();
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            unsigned d = hamming_distance(words[i], words[j]);
            if (d < d_expected) {
                r.d = d;
                r.witness = std::make_pair(words[i], words[j]);
                std::ostringstream msg;
                msg << "pair at distance " << d << " < " << d_expected;
                r.reason = msg.str();
                return r;
            }
        }
    }
    r.is_mds = true;
    r.d = d_expected;
    return r;
}

Code normalize_contains_zero(const Code& code) {
    if (code.size() == 0) throw std::invalid_argument("normalize_contains_zero: empty code");
    const Alphabet& a = code.alphabet();
    const Codeword& anchor = code.words().front();  // lexicographically smallest
    std::vector<Codeword> out;
    out.reserve(code.size());
    for (const Codeword& w : code.words()) {
        Codeword t(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) t[i] = a.sub(w[i], anchor[i]);
        out.push_back(std::move(t));
    }
    return Code(code.alphabet_ptr(), code.length(), std::move(out));
}

Equivalence Equivalence::identity(unsigned n, unsigned q) {
    Equivalence e;
    e.sigma.resize(n);
    for (unsigned i = 0; i < n; ++i) e.sigma[i] = i;
    e.pis.assign(n, {});
    for (auto& pi : e.pis) {
        pi.resize(q);
        for (unsigned s = 0; s < q; ++s) pi[s] = static_cast<Symbol>(s);
    }
    return e;
}

namespace {

void check_permutation(const std::vector<unsigned>& sigma, unsigned n) {
    if (sigma.size() != n) throw std::invalid_argument("equivalence: sigma size mismatch");
    std::vector<bool> seen(n, false);
    for (unsigned v : sigma) {
        if (v >= n || seen[v]) throw std::invalid_argument("equivalence: sigma is not a permutation");
        seen[v] = true;
    }
}

void check_symbol_permutation(const std::vector<Symbol>& pi, unsigned q) {
    if (pi.size() != q) throw std::invalid_argument("equivalence: symbol permutation size mismatch");
    std::vector<bool> seen(q, false);
    for (Symbol v : pi) {
        if (v >= q || seen[v]) throw std::invalid_argument("equivalence: not a symbol permutation");
        seen[v] = true;
    }
}

} // namespace

Code apply_equivalence(const Code& code, const Equivalence& e) {
    const unsigned n = code.length(), q = code.q();
    check_permutation(e.sigma, n);
    if (e.pis.size() != n) throw std::invalid_argument("equivalence: need one symbol permutation per coordinate");
    for (const auto& pi : e.pis) check_symbol_permutation(pi, q);
    std::vector<Codeword> out;
    out.reserve(code.size());
    for (const Codeword& u : code.words()) {
        Codeword w(n);
        for (unsigned i = 0; i < n; ++i) w[i] = e.pis[i][u[e.sigma[i]]];
        out.push_back(std::move(w));
    }
    Code image(code.alphabet_ptr(), n, std::move(out));
    if (image.size() != code.size()) throw std::logic_error("apply_equivalence: image collapsed");
    return image;
}

namespace {

void check_assignments(const Assignments& fixed, unsigned n, unsigned q) {
    std::vector<bool> seen(n, false);
    for (auto [coord, sym] : fixed) {
        if (coord >= n) throw std::invalid_argument("count_fixed: coordinate out of range");
        if (sym >= q) throw std::invalid_argument("count_fixed: symbol out of range");
        if (seen[coord]) throw std::invalid_argument("count_fixed: duplicate coordinate");
        seen[coord] = true;
    }
}

bool matches(const Codeword& w, const Assignments& fixed) {
    for (auto [coord, sym] : fixed)
        if (w[coord] != sym) return false;
    return true;
}

} // namespace

std::size_t count_fixed(const Code& code, const Assignments& fixed) {
    check_assignments(fixed, code.length(), code.q());
    std::size_t count = 0;
    for (const Codeword& w : code.words()) count += matches(w, fixed);
    return count;
}

std::size_t count_fixed(const Code& code, const Assignments& fixed, unsigned w) {
    check_assignments(fixed, code.length(), code.q());
    std::size_t count = 0;
    for (const Codeword& word : code.words())
        count += matches(word, fixed) && weight(word) == w;
    return count;
}

std::size_t count_fixed(const Code& code, const Assignments& fixed, const Partition& t,
                        const WeightProfile& profile) {
    check_assignments(fixed, code.length(), code.q());
    if (t.n != code.length()) throw std::invalid_argument("count_fixed: partition length mismatch");
    if (profile.size() != t.parts.size()) throw std::invalid_argument("count_fixed: profile size mismatch");
    std::size_t count = 0;
    for (const Codeword& word : code.words())
        count += matches(word, fixed) && weight_profile(word, t) == profile;
    return count;
}

unsigned max_agreement(const Code& code) {
    return code.length() - min_distance(code);
}

namespace {

// Exact maximum clique over a small graph, depth-first with the trivial
// "current + remaining <= best" cut. Deterministic: candidates kept in
// input order, first maximum found wins.
void max_clique(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& current,
                std::vector<std::size_t>& candidates, std::vector<std::size_t>& best) {
    if (current.size() > best.size()) best = current;
    if (current.size() + candidates.size() <= best.size()) return;
    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        if (current.size() + (candidates.size() - idx) <= best.size()) return;
        std::size_t v = candidates[idx];
        std::vector<std::size_t> next;
        for (std::size_t j = idx + 1; j < candidates.size(); ++j)
            if (adj[v][candidates[j]]) next.push_back(candidates[j]);
        current.push_back(v);
        max_clique(adj, current, next, best);
        current.pop_back();
    }
}

} // namespace

SupportFamily max_common_support_family(const Code& code, const std::vector<unsigned>& anchor,
                                        unsigned w, std::size_t candidate_budget) {
    const unsigned n = code.length();
    if (w > n) throw std::invalid_argument("max_common_support_family: w exceeds length");
    std::vector<unsigned> anchor_sorted = anchor;
    std::sort(anchor_sorted.begin(), anchor_sorted.end());
    anchor_sorted.erase(std::unique(anchor_sorted.begin(), anchor_sorted.end()), anchor_sorted.end());
    for (unsigned i : anchor_sorted)
        if (i >= n) throw std::invalid_argument("max_common_support_family: anchor coordinate out of range");

    std::vector<const Codeword*> candidates;
    std::vector<std::vector<unsigned>> supports;
    for (const Codeword& word : code.words()) {
        if (weight(word) != w) continue;
        auto s = support(word);
        if (!std::includes(s.begin(), s.end(), anchor_sorted.begin(), anchor_sorted.end())) continue;
        candidates.push_back(&word);
        supports.push_back(std::move(s));
    }
    if (candidates.size() > candidate_budget) {
        std::ostringstream msg;
        msg << "max_common_support_family: " << candidates.size() << " candidates exceed budget "
            << candidate_budget;
        throw BudgetExceeded(msg.str());
    }

    const std::size_t c = candidates.size();
    std::vector<std::vector<bool>> adj(c, std::vector<bool>(c, false));
    for (std::size_t i = 0; i < c; ++i) {
        for (std::size_t j = i + 1; j < c; ++j) {
            std::vector<unsigned> inter;
            std::set_intersection(supports[i].begin(), supports[i].end(), supports[j].begin(),
                                  supports[j].end(), std::back_inserter(inter));
            adj[i][j] = adj[j][i] = (inter == anchor_sorted);
        }
    }
    std::vector<std::size_t> current, best, all(c);
    for (std::size_t i = 0; i < c; ++i) all[i] = i;
    max_clique(adj, current, all, best);

    SupportFamily family;
    family.size = best.size();
    for (std::size_t i : best) family.members.push_back(*candidates[i]);
    std::sort(family.members.begin(), family.members.end());
    return family;
}

} // namespace mdscode
