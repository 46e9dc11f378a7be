#include "mdscode/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mdscode {

namespace {

std::string format_message(const std::string& source, unsigned line, const std::string& what) {
    std::ostringstream out;
    out << source << ':' << line << ": " << what;
    return out.str();
}

} // namespace

ParseError::ParseError(std::string source, unsigned line, const std::string& what)
    : std::runtime_error(format_message(source, line, what)), source(std::move(source)), line(line) {}

Code read_code(std::istream& in, const std::string& source_name) {
    std::string line;
    unsigned line_no = 0;

    auto next_payload_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_payload_line()) throw ParseError(source_name, line_no, "missing header line");

    unsigned n = 0, q = 0;
    std::string alphabet_text;
    {
        std::istringstream header(line);
        std::string field;
        bool have_n = false, have_q = false;
        auto header_uint = [&](const std::string& text) -> unsigned {
            unsigned v = 0;
            auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
            if (ec != std::errc{} || p != text.data() + text.size())
                throw ParseError(source_name, line_no, "bad header number '" + text + "'");
            return v;
        };
        while (header >> field) {
            if (field.starts_with("n=")) {
                n = header_uint(field.substr(2));
                have_n = true;
            } else if (field.starts_with("q=")) {
                q = header_uint(field.substr(2));
                have_q = true;
            } else if (field.starts_with("alphabet=")) {
                alphabet_text = field.substr(9);
            } else {
                throw ParseError(source_name, line_no, "unexpected header field '" + field + "'");
            }
        }
        if (!have_n || !have_q || alphabet_text.empty())
            throw ParseError(source_name, line_no, "header must be 'n=<n> q=<q> alphabet=<spec>'");
    }

    AlphabetPtr alphabet;
    try {
        alphabet = make_alphabet(AlphabetSpec::parse(alphabet_text));
    } catch (const std::exception& e) {
        throw ParseError(source_name, line_no, e.what());
    }
    if (alphabet->order() != q)
        throw ParseError(source_name, line_no, "q disagrees with the alphabet order");
    if (n == 0) throw ParseError(source_name, line_no, "n must be >= 1");

    std::vector<Codeword> words;
    while (next_payload_line()) {
        Codeword w;
        w.reserve(n);
        std::istringstream row(line);
        long value;
        while (row >> value) {
            if (value < 0 || value >= static_cast<long>(q)) {
                std::ostringstream msg;
                msg << "symbol " << value << " out of range (q=" << q << "), column " << w.size() + 1;
                throw ParseError(source_name, line_no, msg.str());
            }
            w.push_back(static_cast<Symbol>(value));
        }
        if (!row.eof()) throw ParseError(source_name, line_no, "non-numeric token in codeword");
        if (w.size() != n) {
            std::ostringstream msg;
            msg << "expected " << n << " symbols, got " << w.size();
            throw ParseError(source_name, line_no, msg.str());
        }
        words.push_back(std::move(w));
    }
    if (words.empty()) throw ParseError(source_name, line_no, "no codewords");
    return Code(std::move(alphabet), n, std::move(words));
}

Code read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_code(in, path);
}

void write_code(std::ostream& out, const Code& code) {
    out << "n=" << code.length() << " q=" << code.q() << " alphabet=" << code.alphabet().spec_string()
        << '\n';
    for (const Codeword& w : code.words()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out << ' ';
            out << w[i];
        }
        out << '\n';
    }
}

void write_code_file(const std::string& path, const Code& code) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_code(out, code);
}

WeightProfile parse_profile(std::string_view text) {
    WeightProfile profile;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
        unsigned v = 0;
        auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || p != tok.data() + tok.size())
            throw std::invalid_argument("profile: bad entry '" + std::string(tok) + "'");
        profile.push_back(v);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return profile;
}

} // namespace mdscode
