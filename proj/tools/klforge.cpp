#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "klforge/errors.hpp"
#include "klforge/json_io.hpp"
#include "klforge/kl.hpp"
#include "klforge/transition.hpp"
#include "klforge/verify.hpp"

using namespace klforge;

namespace {

enum class Format { json, table };

struct Config {
    std::string cache_path;
    bool no_cache = false;
    int threads = 1;
    std::optional<Format> format;
};

std::string q_text(const LaurentPoly& p) {
    try {
        return p.to_q_string();
    } catch (const NotAQPolynomial&) {
        return p.to_string();
    }
}

int env_threads() {
    const char* s = std::getenv("KLFORGE_THREADS");
    if (!s || !*s) return 1;
    try {
        return std::max(1, std::stoi(s));
    } catch (const std::exception&) {
        throw InvalidArgument(std::string("KLFORGE_THREADS must be a positive integer, got '") + s + "'");
    }
}

class Session {
public:
    explicit Session(const Config& cfg) : cfg_(cfg) {}

    KLTable& table() {
        if (!table_) {
            table_.emplace(cfg_.threads);
            if (!cfg_.no_cache && !cfg_.cache_path.empty()) table_->attach_cache(cfg_.cache_path);
        }
        return *table_;
    }

    ~Session() {
        if (table_) table_->flush();
    }

private:
    const Config& cfg_;
    std::optional<KLTable> table_;
};

Format format_or(const Config& cfg, Format fallback) { return cfg.format.value_or(fallback); }

void print_expansion(const Config& cfg, const Family& f, const Permutation& w, const Expansion& e) {
    if (format_or(cfg, Format::json) == Format::json) {
        Json terms = Json::array();
        for (const auto& s : f.index()) {
            auto it = e.find(s);
            if (it == e.end()) continue;
            terms.push_back(Json{{"sigma", perm_to_json(s)},
                                 {"multisegment", multisegment_to_json(f.multisegment(s))},
                                 {"coeff", poly_to_json_v(it->second)}});
        }
        std::cout << Json{{"omega", perm_to_json(w)}, {"terms", terms}}.dump() << "\n";
        return;
    }
    for (const auto& s : f.index()) {
        auto it = e.find(s);
        if (it == e.end()) continue;
        std::cout << std::left << std::setw(20) << s.to_string() << std::setw(40) << f.multisegment(s).to_string()
                  << it->second.to_string() << "\n";
    }
}

void print_matrix(const Config& cfg, const Family& f, const TransitionMatrix& M, const std::string& direction) {
    if (format_or(cfg, Format::json) == Format::json) {
        Json index = Json::array(), entries = Json::array();
        for (const auto& s : M.index) index.push_back(perm_to_json(s));
        for (const auto& row : M.entries) {
            Json r = Json::array();
            for (const auto& c : row) r.push_back(poly_to_json_v(c));
            entries.push_back(r);
        }
        std::cout << Json{{"family", bisequence_to_json(f.bisequence())},
                          {"direction", direction},
                          {"index", index},
                          {"entries", entries}}
                         .dump()
                  << "\n";
        return;
    }
    std::size_t width = 1;
    for (const auto& row : M.entries)
        for (const auto& c : row) width = std::max(width, c.to_string().size() + 2);
    for (std::size_t i = 0; i < M.index.size(); ++i) {
        std::cout << std::left << std::setw(20) << M.index[i].to_string();
        for (const auto& c : M.entries[i]) std::cout << std::setw(static_cast<int>(width)) << c.to_string();
        std::cout << "\n";
    }
}

void print_report_table(const VerificationReport& r) {
    std::ostringstream c;
    c << "k=" << r.k << " m=" << r.m;
    if (r.family) c << " A=" << r.family->to_string();
    if (r.sigma0) c << " s0=" << r.sigma0->to_string();
    if (r.sigma) c << " s=" << r.sigma->to_string();
    if (r.omega) c << " w=" << r.omega->to_string();
    std::cout << std::left << std::setw(16) << r.kind << std::setw(8) << to_string(r.status) << std::setw(56)
              << c.str() << q_text(r.claimed) << " | " << q_text(r.computed);
    if (!r.reason.empty()) std::cout << "  (" << r.reason << ")";
    std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kazhdan-Lusztig polynomials, parabolic variants and dual PBW transition data"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    if (const char* path = std::getenv("KLFORGE_CACHE")) cfg.cache_path = path;
    std::string format_name;
    std::optional<int> threads_flag;

    app.add_flag("--no-cache", cfg.no_cache, "Do not read or write the KL cache");
    app.add_option("--cache", cfg.cache_path, "KL cache file (default: $KLFORGE_CACHE)");
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--threads", threads_flag, "Worker threads (default: $KLFORGE_THREADS or 1)")
        ->check(CLI::PositiveNumber);

    std::string s_text, w_text, a_text, b_text, perm_text, family_text, variant = "q", direction = "e2g";
    int m = 1;
    SweepOptions sweep_opts;

    auto* kl = app.add_subcommand("kl", "Ordinary KL polynomial P_{s,w}");
    kl->add_option("--s", s_text, "Lower permutation, e.g. 1,2,3")->required();
    kl->add_option("--w", w_text, "Upper permutation")->required();

    auto* pkl = app.add_subcommand("pkl", "Parabolic KL polynomial of the replicated pair");
    pkl->add_option("--s", s_text)->required();
    pkl->add_option("--w", w_text)->required();
    pkl->add_option("--m", m, "Block size")->check(CLI::PositiveNumber);
    pkl->add_option("--variant", variant)->check(CLI::IsMember({"q", "neg1"}));

    auto* sig = app.add_subcommand("sigma0", "Minimal permutation of a bi-sequence");
    sig->add_option("--a", a_text)->required();
    sig->add_option("--b", b_text)->required();

    auto* mseg = app.add_subcommand("mseg", "Multisegment of a bi-sequence and permutation");
    mseg->add_option("--a", a_text)->required();
    mseg->add_option("--b", b_text)->required();
    mseg->add_option("--perm", perm_text)->required();

    auto* expand = app.add_subcommand("expand", "Transition data of a family");
    expand->add_option("--family", family_text, R"(Bi-sequence as {"a":[...],"b":[...]})")->required();
    expand->add_option("--m", m, "Replicate the family m times")->check(CLI::PositiveNumber);
    expand->add_option("--direction", direction)->check(CLI::IsMember({"e2g", "g2e"}));
    expand->add_option("--perm", perm_text, "Emit the single expansion of this permutation");

    auto* verify = app.add_subcommand("verify", "Sweep of the monomial, product and power checks");
    verify->add_option("--kmax", sweep_opts.kmax)->check(CLI::Range(1, 9));
    verify->add_option("--mmax", sweep_opts.mmax)->check(CLI::Range(2, 9));
    verify->add_option("--nmax", sweep_opts.nmax, "Largest m*k")->check(CLI::Range(1, 16));

    CLI11_PARSE(app, argc, argv);

    try {
        if (!format_name.empty()) cfg.format = format_name == "json" ? Format::json : Format::table;
        cfg.threads = threads_flag ? *threads_flag : env_threads();
        Session session(cfg);

        if (*kl) {
            const Permutation s = parse_permutation(s_text), w = parse_permutation(w_text);
            const LaurentPoly p = session.table().kl_poly(s, w);
            if (format_or(cfg, Format::table) == Format::json)
                std::cout << Json{{"s", perm_to_json(s)}, {"w", perm_to_json(w)}, {"p", poly_to_json(p)}}.dump()
                          << "\n";
            else
                std::cout << q_text(p) << "\n";
        } else if (*pkl) {
            const Permutation s = parse_permutation(s_text), w = parse_permutation(w_text);
            const LaurentPoly p = variant == "q" ? parabolic_kl_q(session.table(), s, w, m)
                                                 : parabolic_kl_neg1(session.table(), s, w, m);
            if (format_or(cfg, Format::table) == Format::json)
                std::cout << Json{{"s", perm_to_json(s)},
                                  {"w", perm_to_json(w)},
                                  {"m", m},
                                  {"variant", variant},
                                  {"p", poly_to_json(p)}}
                                 .dump()
                          << "\n";
            else
                std::cout << q_text(p) << "\n";
        } else if (*sig) {
            const BiSequence A(parse_int_list(a_text), parse_int_list(b_text));
            const Permutation s0 = sigma0(A);
            if (format_or(cfg, Format::table) == Format::json)
                std::cout << Json{{"family", bisequence_to_json(A)}, {"sigma0", perm_to_json(s0)}}.dump() << "\n";
            else
                std::cout << s0.to_string() << "\n";
        } else if (*mseg) {
            const BiSequence A(parse_int_list(a_text), parse_int_list(b_text));
            const Permutation w = parse_permutation(perm_text);
            const Multisegment M = multisegment_of(A, w);
            if (format_or(cfg, Format::table) == Format::json)
                std::cout << Json{{"family", bisequence_to_json(A)},
                                  {"perm", perm_to_json(w)},
                                  {"multisegment", multisegment_to_json(M)}}
                                 .dump()
                          << "\n";
            else
                std::cout << M.to_string() << "\n";
        } else if (*expand) {
            Json parsed;
            try {
                parsed = Json::parse(family_text);
            } catch (const Json::parse_error& e) {
                throw InvalidArgument(std::string("malformed --family JSON: ") + e.what());
            }
            const BiSequence A = replicate(bisequence_from_json(parsed), m);
            const Family f(A);
            const Direction d = direction == "e2g" ? Direction::e_in_g : Direction::g_in_e;
            if (!perm_text.empty()) {
                const Permutation w = parse_permutation(perm_text);
                const Expansion e = d == Direction::e_in_g ? expand_E_in_G(session.table(), A, w)
                                                           : expand_G_in_E(session.table(), A, w);
                print_expansion(cfg, f, f.representative(w), e);
            } else {
                print_matrix(cfg, f, transition_matrix(session.table(), A, d), direction);
            }
        } else if (*verify) {
            const auto reports = sweep(session.table(), sweep_opts);
            const bool json = format_or(cfg, Format::json) == Format::json;
            for (const auto& r : reports) {
                if (json) std::cout << report_to_json(r).dump() << "\n";
                else print_report_table(r);
            }
            const auto sum = summarize(reports);
            std::cerr << "passed " << sum.passed << ", failed " << sum.failed << ", skipped " << sum.skipped << "\n";
            return sum.failed == 0 ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
