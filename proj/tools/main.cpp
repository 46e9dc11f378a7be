// mdscode: construct, analyze, bound and search MDS codes over finite
// abelian alphabets. All subcommands are deterministic; no flag
// introduces randomness.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "mdscode/bounds.hpp"
#include "mdscode/constructions.hpp"
#include "mdscode/enumerator.hpp"
#include "mdscode/io.hpp"
#include "mdscode/search.hpp"

using json = nlohmann::ordered_json;
using namespace mdscode;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnknown = 2;

json bound_to_json(const BoundResult& r) {
    json out;
    out["q"] = r.q;
    out["k"] = r.k;
    out["bound"] = r.value;
    json by = json::array();
    for (TheoremId id : r.achieved_by()) by.push_back(to_string(id));
    out["by"] = by;
    if (r.l_star) out["l_star"] = *r.l_star;
    return out;
}

void print_bound_text(std::ostream& os, const BoundResult& r, bool quiet) {
    os << "M_" << r.q << "(" << r.k << ") <= " << r.value << "\n";
    if (quiet) return;
    for (const auto& p : r.provenance)
        os << "  " << to_string(p.id) << "\t" << p.value << "\t" << p.condition << "\n";
}

json report_to_json(const MdsReport& r) {
    json out;
    out["n"] = r.n;
    out["q"] = r.q;
    out["size"] = r.size;
    out["k"] = r.k ? json(*r.k) : json(nullptr);
    out["d"] = r.d ? json(*r.d) : json(nullptr);
    out["is_mds"] = r.is_mds;
    if (!r.is_mds) out["reason"] = r.reason;
    if (r.witness) {
        json pair = json::array();
        pair.push_back(r.witness->first);
        pair.push_back(r.witness->second);
        out["witness"] = pair;
    }
    return out;
}

std::string codeword_text(const Codeword& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ' ';
        os << w[i];
    }
    return os.str();
}

void print_report_text(std::ostream& os, const MdsReport& r) {
    os << "n=" << r.n << " q=" << r.q << " M=" << r.size;
    if (r.k) os << " k=" << *r.k;
    if (r.d) os << " d=" << *r.d;
    os << " mds=" << (r.is_mds ? "yes" : "no");
    if (!r.is_mds) os << "  (" << r.reason << ")";
    os << "\n";
    if (r.witness)
        os << "witness: " << codeword_text(r.witness->first) << "  /  "
           << codeword_text(r.witness->second) << "\n";
}

AlphabetSpec resolve_alphabet(const std::string& alphabet_text, ConstructionKind kind, unsigned q) {
    if (!alphabet_text.empty()) return AlphabetSpec::parse(alphabet_text);
    const bool needs_field = kind == ConstructionKind::rs || kind == ConstructionKind::extended_rs ||
                             kind == ConstructionKind::doubly_extended_rs ||
                             kind == ConstructionKind::twisted;
    if (needs_field) {
        auto pm = prime_power(q);
        if (!pm)
            throw std::invalid_argument("q = " + std::to_string(q) +
                                        " is not a prime power; pass --alphabet explicitly");
        return AlphabetSpec::field(pm->first, pm->second);
    }
    return AlphabetSpec::cyclic(q);
}

int run_construct(const std::string& kind_text, unsigned q, unsigned k, unsigned n,
                  const std::string& alphabet_text, const std::string& base_text,
                  const std::string& output) {
    const ConstructionKind kind = construction_kind_from_string(kind_text);
    AlphabetSpec alphabet = resolve_alphabet(alphabet_text, kind, q);
    auto make_spec = [&](ConstructionKind which) {
        switch (which) {
            case ConstructionKind::rs: return ConstructionSpec::rs(alphabet, k, n);
            case ConstructionKind::extended_rs: return ConstructionSpec::extended_rs(alphabet, k);
            case ConstructionKind::doubly_extended_rs:
                return ConstructionSpec::doubly_extended_rs(alphabet, k);
            case ConstructionKind::parity: return ConstructionSpec::parity(alphabet, n);
            case ConstructionKind::repetition: return ConstructionSpec::repetition(alphabet, n);
            case ConstructionKind::full: return ConstructionSpec::full(alphabet, n);
            default: throw std::invalid_argument("unsupported base kind");
        }
    };
    ConstructionSpec spec = (kind == ConstructionKind::twisted)
                                ? ConstructionSpec::twisted(make_spec(construction_kind_from_string(base_text)))
                                : make_spec(kind);
    const Code code = build(spec);
    if (output.empty() || output == "-")
        write_code(std::cout, code);
    else
        write_code_file(output, code);
    return kExitOk;
}

int run_verify(const std::string& path, bool as_json) {
    const Code code = read_code_file(path);
    const MdsReport report = verify_mds(code);
    if (as_json)
        std::cout << report_to_json(report).dump() << "\n";
    else
        print_report_text(std::cout, report);
    return kExitOk;
}

int run_analyze(const std::string& path, const std::string& pwe_text, const std::string& profile_text,
                bool as_json, bool quiet) {
    const Code code = normalize_contains_zero(read_code_file(path));
    const MdsReport report = verify_mds(code);
    const WeightDistribution empirical = empirical_weight_distribution(code);

    std::optional<WeightDistribution> formula;
    if (report.k) formula = mds_weight_distribution(report.n, *report.k, report.q);

    std::optional<Partition> partition;
    WeightProfile profile;
    std::optional<BigInt> pwe_form;
    std::optional<BigInt> pwe_emp;
    if (!pwe_text.empty()) {
        if (profile_text.empty()) throw std::invalid_argument("--pwe requires --profile");
        partition = Partition::parse(pwe_text, code.length());
        profile = parse_profile(profile_text);
        if (report.k)
            pwe_form = pwe_formula(report.n, *report.k, report.q, partition->sizes(), profile).integer();
        pwe_emp = empirical_pwe(code, *partition, profile);
    }

    if (as_json) {
        json out;
        out["n"] = report.n;
        out["k"] = report.k ? json(*report.k) : json(nullptr);
        out["q"] = report.q;
        out["is_mds"] = report.is_mds;
        out["d"] = report.d ? json(*report.d) : json(nullptr);
        json e = json::array();
        for (const BigInt& v : empirical.counts) e.push_back(v.get_str());
        out["E"] = e;
        if (formula) {
            json f = json::array();
            for (const BigInt& v : formula->counts) f.push_back(v.get_str());
            out["E_formula"] = f;
            out["E_match"] = (formula->counts == empirical.counts);
        }
        json rows = json::array();
        if (partition) {
            json row;
            row["parts"] = partition->sizes();
            row["profile"] = profile;
            row["value"] = pwe_form ? pwe_form->get_str() : pwe_emp->get_str();
            row["empirical"] = pwe_emp->get_str();
            if (pwe_form) row["match"] = (*pwe_form == *pwe_emp);
            rows.push_back(row);
        }
        out["pwe"] = rows;
        std::cout << out.dump() << "\n";
        return kExitOk;
    }

    print_report_text(std::cout, report);
    auto joined = [](const std::vector<BigInt>& v) {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ", ";
            os << v[i].get_str();
        }
        os << "]";
        return os.str();
    };
    std::cout << "E empirical = " << joined(empirical.counts) << "\n";
    if (formula && !quiet)
        std::cout << "E formula   = " << joined(formula->counts)
                  << "   match: " << (formula->counts == empirical.counts ? "yes" : "no") << "\n";
    if (partition) {
        std::cout << "PWE " << partition->to_string() << " profile=(";
        for (std::size_t i = 0; i < profile.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << profile[i];
        }
        std::cout << "): empirical=" << pwe_emp->get_str();
        if (pwe_form)
            std::cout << " formula=" << pwe_form->get_str()
                      << " match: " << (*pwe_form == *pwe_emp ? "yes" : "no");
        std::cout << "\n";
    }
    return kExitOk;
}

int run_search(unsigned n, unsigned q, unsigned k, std::uint64_t budget_nodes, double budget_secs,
               const std::string& alphabet_text, const std::string& output, bool quiet) {
    SearchProblem p;
    p.n = n;
    p.q = q;
    p.k = k;
    if (!alphabet_text.empty()) p.alphabet = AlphabetSpec::parse(alphabet_text);
    p.budget.max_nodes = budget_nodes;
    p.budget.max_seconds = budget_secs;
    const SearchOutcome outcome = exists_mds(p);
    if (outcome.witness && !quiet) {
        if (output.empty() || output == "-")
            write_code(std::cout, *outcome.witness);
        else
            write_code_file(output, *outcome.witness);
    }
    std::cout << "RESULT " << to_string(outcome.status) << " nodes=" << outcome.nodes
              << " secs=" << outcome.seconds << "\n";
    return outcome.status == SearchStatus::unknown ? kExitUnknown : kExitOk;
}

int run_maxlen(unsigned q, unsigned k, std::uint64_t budget_nodes, double budget_secs, bool as_json) {
    SearchBudget budget;
    budget.max_nodes = budget_nodes;
    budget.max_seconds = budget_secs;
    const MaxLengthOutcome out = max_length(q, k, budget);
    if (as_json) {
        json j;
        j["q"] = q;
        j["k"] = k;
        j["n_max"] = out.n_max;
        j["certified"] = out.certified;
        json statuses;
        for (const auto& [n, status] : out.statuses) statuses[std::to_string(n)] = to_string(status);
        j["statuses"] = statuses;
        j["nodes"] = out.nodes;
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& [n, status] : out.statuses)
            std::cout << "n=" << n << " " << to_string(status) << "\n";
        std::cout << "MAXLEN q=" << q << " k=" << k << " n_max=" << out.n_max
                  << " certified=" << (out.certified ? "yes" : "no") << " nodes=" << out.nodes
                  << " secs=" << out.seconds << "\n";
    }
    return out.certified ? kExitOk : kExitUnknown;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact construction, analysis, bounds and search for MDS codes over finite abelian alphabets"};
    app.require_subcommand(1);
    bool as_json = false;
    bool quiet = false;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_flag("--quiet", quiet, "suppress secondary output");

    auto* construct = app.add_subcommand("construct", "build a code and write it in the code file format");
    std::string kind_text, alphabet_text, base_text = "extended_rs", output;
    unsigned q = 0, k = 0, n = 0;
    construct->add_option("kind", kind_text,
                          "rs|extended_rs|doubly_extended_rs|parity|repetition|full|twisted")
        ->required();
    construct->add_option("--q", q, "alphabet order")->required();
    construct->add_option("--k", k, "dimension exponent (rs kinds)");
    construct->add_option("--n", n, "length (rs, parity, repetition, full)");
    construct->add_option("--alphabet", alphabet_text, "alphabet spec string, e.g. field:2^2");
    construct->add_option("--base", base_text, "base kind for twisted (default extended_rs)");
    construct->add_option("-o,--output", output, "output path (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "normalize, verify and enumerate a code file");
    std::string analyze_path, pwe_text, profile_text;
    analyze->add_option("file", analyze_path, "code file")->required();
    analyze->add_option("--pwe", pwe_text, "partition, 1-based dash ranges, e.g. 1-3|4-6");
    analyze->add_option("--profile", profile_text, "weight profile, e.g. 2,3");

    auto* verify = app.add_subcommand("verify", "MDS check with witness on failure");
    std::string verify_path;
    verify->add_option("file", verify_path, "code file")->required();

    auto* bound = app.add_subcommand("bound", "upper bound on M_q(k) with provenance");
    unsigned bq = 0, bk = 0;
    bound->add_option("--q", bq, "alphabet order")->required();
    bound->add_option("--k", bk, "dimension exponent (>= 2; k = 1 has no finite bound)")->required();

    auto* table = app.add_subcommand("bound-table", "bounds over a (q, k) range");
    unsigned q_min = 0, q_max = 0, k_min = 0, k_max = 0;
    table->add_option("--q-min", q_min)->required();
    table->add_option("--q-max", q_max)->required();
    table->add_option("--k-min", k_min)->required();
    table->add_option("--k-max", k_max)->required();

    auto* search = app.add_subcommand("search", "decide existence of an (n, q^k, n-k+1) MDS code");
    unsigned sn = 0, sq = 0, sk = 0;
    std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
    double budget_secs = SearchBudget{}.max_seconds;
    std::string search_alphabet, search_output;
    search->add_option("--n", sn, "length")->required();
    search->add_option("--q", sq, "alphabet order")->required();
    search->add_option("--k", sk, "dimension exponent")->required();
    search->add_option("--budget-nodes", budget_nodes, "node budget (default 1e8)");
    search->add_option("--budget-secs", budget_secs, "wall clock budget (default 600)");
    search->add_option("--alphabet", search_alphabet, "alphabet spec for the witness file");
    search->add_option("-o,--output", search_output, "witness path (default stdout)");

    auto* maxlen = app.add_subcommand("maxlen", "largest length with an existing MDS code");
    unsigned mq = 0, mk = 0;
    std::uint64_t m_nodes = SearchBudget{}.max_nodes;
    double m_secs = SearchBudget{}.max_seconds;
    maxlen->add_option("--q", mq, "alphabet order")->required();
    maxlen->add_option("--k", mk, "dimension exponent (>= 2)")->required();
    maxlen->add_option("--budget-nodes", m_nodes, "node budget per probe");
    maxlen->add_option("--budget-secs", m_secs, "wall clock budget per probe");

    // let the global --json / --quiet flags appear after the subcommand
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*construct) return run_construct(kind_text, q, k, n, alphabet_text, base_text, output);
        if (*analyze) return run_analyze(analyze_path, pwe_text, profile_text, as_json, quiet);
        if (*verify) return run_verify(verify_path, as_json);
        if (*bound) {
            const BoundResult r = aggregate_bound(bq, bk);
            if (as_json)
                std::cout << bound_to_json(r).dump() << "\n";
            else
                print_bound_text(std::cout, r, quiet);
            return kExitOk;
        }
        if (*table) {
            const auto rows = bound_table(q_min, q_max, k_min, k_max);
            if (as_json) {
                json arr = json::array();
                for (const auto& r : rows) arr.push_back(bound_to_json(r));
                std::cout << arr.dump() << "\n";
            } else {
                std::cout << "q\tk\tbound\tby\n";
                for (const auto& r : rows) {
                    std::cout << r.q << "\t" << r.k << "\t" << r.value << "\t";
                    const auto ids = r.achieved_by();
                    for (std::size_t i = 0; i < ids.size(); ++i) {
                        if (i) std::cout << ",";
                        std::cout << to_string(ids[i]);
                    }
                    if (r.l_star) std::cout << "\tl*=" << *r.l_star;
                    std::cout << "\n";
                }
            }
            return kExitOk;
        }
        if (*search)
            return run_search(sn, sq, sk, budget_nodes, budget_secs, search_alphabet, search_output,
                              quiet);
        if (*maxlen) return run_maxlen(mq, mk, m_nodes, m_secs, as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
