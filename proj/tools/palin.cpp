// palin: palindrome analytics for finite words over a q-letter alphabet.
// Subcommands cover De Bruijn construction, palindrome-list generation,
// complexity profiles, and exact/Monte Carlo palindrome-abundance statistics.

#include "palin/complexity.hpp"
#include "palin/debruijn.hpp"
#include "palin/error.hpp"
#include "palin/palgen.hpp"
#include "palin/report.hpp"
#include "palin/stats.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace palin;

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_budget = 3;
constexpr int exit_invariant = 4;

struct Range {
    int lo = 0;
    int hi = 0;
};

Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    Range r;
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, dots));
            r.hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected N or LO..HI, got '" + text + "'");
    }
    if (r.lo < 1 || r.hi < r.lo)
        throw CLI::ValidationError("range", "expected 1 <= LO <= HI, got '" + text + "'");
    return r;
}

std::int64_t elapsed_ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << content;
}

Budget budget_from_env() {
    Budget b;
    if (const char* env = std::getenv("PALINLAB_BUDGET")) {
        try {
            b.word_space = std::stoull(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("PALINLAB_BUDGET must be an integer, got '" +
                                        std::string(env) + "'");
        }
    }
    return b;
}

std::string table_line(const StatsReport& r) {
    std::ostringstream out;
    out << "q=" << r.q << " n=" << r.n << " method=" << r.method << " M=" << r.m_exact.num
        << "/" << r.m_exact.den << " M*(n)=" << r.m_decimal
        << " bound=" << r.bound.decimal(5);
    if (r.seed) out << " seed=" << *r.seed;
    out << " elapsed_ms=" << r.elapsed_ms;
    return out.str();
}

std::string render_reports(const std::vector<StatsReport>& reports,
                           const std::string& format) {
    if (format == "json") return to_json(reports);
    if (format == "csv") return to_csv(reports);
    std::string out;
    for (const StatsReport& r : reports) {
        out += table_line(r);
        out += '\n';
    }
    return out;
}

// ---- debruijn ----

struct DebruijnArgs {
    int q = 2;
    int k = 1;
    Budget budget;
    std::string output;
};

int cmd_debruijn(const DebruijnArgs& a) {
    const DeBruijnWord db = generate_de_bruijn(Alphabet(a.q), a.k, a.budget);
    std::ostringstream out;
    out << "word: " << db.word.str() << "\n";
    out << "length: " << db.word.size() << "\n";
    out << "valid: " << (verify_de_bruijn(db.word, db.order) ? "true" : "false") << "\n";
    write_output(a.output, out.str());
    return exit_ok;
}

// ---- palindromes ----

struct PalindromesArgs {
    int q = 2;
    int n = 1;
    std::string method = "enum";
    Budget budget;
    std::string output;
};

int cmd_palindromes(const PalindromesArgs& a) {
    const Alphabet alphabet(a.q);
    PalindromeList list;
    std::optional<DiffRepresentation> diffs;
    if (a.method == "debruijn") {
        list = palindromes_from_de_bruijn(static_cast<std::size_t>(a.n), alphabet, a.budget);
    } else if (a.method == "diffs") {
        diffs = diff_representation(static_cast<std::size_t>(a.n), alphabet, a.budget);
        list = palindromes_from_diffs(*diffs);
    } else {
        list = enumerate_palindromes(static_cast<std::size_t>(a.n), alphabet, a.budget);
    }

    std::ostringstream out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i) out << ' ';
        out << list[i].str();
    }
    out << '\n';
    if (diffs) {
        out << "diffs:";
        for (Value d : diffs->diffs) out << ' ' << d;
        out << '\n';
    }
    write_output(a.output, out.str());
    return exit_ok;
}

// ---- profile ----

struct ProfileArgs {
    std::string literal;
    std::string file;
    int q = 0; // 0: infer max symbol + 1
    bool subword = false;
    bool palindrome = false;
    std::string format = "table";
    std::string output;
};

Word profile_word(const ProfileArgs& a) {
    std::string text = a.literal;
    if (!a.file.empty()) {
        std::ifstream in(a.file);
        if (!in) throw std::invalid_argument("cannot read word file " + a.file);
        in >> text;
    }
    if (text.empty()) throw std::invalid_argument("empty word");
    int q = a.q;
    if (q == 0) {
        // infer the alphabet from the symbols actually used
        const Word probe = Word::parse(text, Alphabet(Alphabet::max_letters));
        for (Symbol s : probe.symbols()) q = std::max(q, int(s) + 1);
        if (probe.q() <= 10) q = std::max(q, 2); // digit literals are at least binary
    }
    return Word::parse(text, Alphabet(q));
}

void append_valence_rows(std::ostringstream& out, const std::string& kind,
                         const ComplexityProfile& profile, const ValenceTable& valences,
                         bool csv) {
    for (std::size_t k = 1; k <= profile.counts.size(); ++k) {
        out << (csv ? kind : "") << (csv ? "," : "") << k << (csv ? "," : " ")
            << profile.counts[k - 1];
        for (long long s : valences.rows[k - 1]) out << (csv ? "," : " ") << s;
        out << '\n';
    }
}

int cmd_profile(const ProfileArgs& a) {
    const Word w = profile_word(a);
    const bool both = !a.subword && !a.palindrome;
    const bool csv = a.format == "csv";
    std::ostringstream out;

    if (csv) {
        out << "kind,k,count";
        for (int j = 0; j <= w.q(); ++j) out << ",s" << j;
        out << '\n';
    } else {
        out << "word: " << w.str() << " (q=" << w.q() << ", n=" << w.size() << ")\n";
    }

    if (a.subword || both) {
        const ComplexityProfile p = subword_complexity_profile(w);
        const ValenceTable s = right_valence_table(w);
        if (!csv) {
            out << "subword profile (k count s0..s" << w.q() << "):\n";
            append_valence_rows(out, "subword", p, s, false);
            out << "iteration check: " << (check_subword_iteration(w) ? "ok" : "FAILED")
                << '\n';
            const TrapezoidShape shape = trapezoid_shape(p);
            out << "trapezoid: J=" << shape.increase_end << " M=" << shape.plateau_end
                << '\n';
        } else {
            append_valence_rows(out, "subword", p, s, true);
        }
    }
    if (a.palindrome || both) {
        const ComplexityProfile pal = palindrome_profile(w);
        const ValenceTable sp = palindrome_valence_table(w);
        if (!csv) {
            out << "palindrome profile (k count s0..s" << w.q() << "):\n";
            append_valence_rows(out, "palindrome", pal, sp, false);
            out << "iteration check: " << (check_palindrome_iteration(w) ? "ok" : "FAILED")
                << '\n';
            out << "bounds check: " << (check_complexity_bounds(w) ? "ok" : "FAILED")
                << '\n';
            const auto [odd, even] = odd_even_projection(pal);
            out << "odd:";
            for (std::size_t i = 0; i < odd.lengths.size(); ++i)
                out << ' ' << odd.lengths[i] << ':' << odd.counts[i];
            out << "\neven:";
            for (std::size_t i = 0; i < even.lengths.size(); ++i)
                out << ' ' << even.lengths[i] << ':' << even.counts[i];
            out << '\n';
        } else {
            append_valence_rows(out, "palindrome", pal, sp, true);
        }
    }
    write_output(a.output, out.str());
    return exit_ok;
}

// ---- average ----

struct AverageArgs {
    int q = 2;
    std::string range = "1";
    std::string method = "both";
    int threads = 0;
    Budget budget;
    std::string format = "table";
    std::string output;
};

int cmd_average(const AverageArgs& a) {
    const Range range = parse_range(a.range);
    std::vector<StatsReport> reports;
    for (int n = range.lo; n <= range.hi; ++n) {
        const auto start = std::chrono::steady_clock::now();
        std::optional<Rational> enum_m;
        std::optional<AutomatonAverage> auto_m;
        if (a.method == "enum" || a.method == "both")
            enum_m = average_exact_enumeration(a.q, n, a.budget, a.threads);
        if (a.method == "automaton" || a.method == "both")
            auto_m = average_exact_automaton(a.q, n, a.budget, a.threads);
        if (enum_m && auto_m && !(*enum_m == auto_m->average))
            throw invariant_error("enumeration and automaton disagree at n = " +
                                  std::to_string(n) + ": " + enum_m->num.str() + "/" +
                                  enum_m->den.str() + " vs " + auto_m->average.num.str() +
                                  "/" + auto_m->average.den.str());
        Rational m = auto_m ? auto_m->average : *enum_m;
        std::vector<PerP> per_p = auto_m ? auto_m->per_p : std::vector<PerP>{};
        reports.push_back(make_report(a.q, n, a.method == "both" ? "both" : a.method,
                                      std::move(m), std::move(per_p), std::nullopt,
                                      elapsed_ms_since(start)));
    }
    write_output(a.output, render_reports(reports, a.format));
    return exit_ok;
}

// ---- mc ----

struct McArgs {
    int q = 2;
    int n = 1;
    int samples = 200;
    std::uint64_t seed = 0;
    int threads = 0;
    std::string format = "table";
    std::string output;
};

int cmd_mc(const McArgs& a) {
    const auto start = std::chrono::steady_clock::now();
    const MonteCarloResult mc = monte_carlo_average(a.q, a.n, a.samples, a.seed, a.threads);
    // m_exact is the mean P(w_i); /n happens inside make_report's m_decimal.
    StatsReport report = make_report(a.q, a.n, "monte-carlo",
                                     Rational(mc.total_p, BigInt(mc.samples)), {}, mc.seed,
                                     elapsed_ms_since(start));
    write_output(a.output, render_reports({report}, a.format));
    return exit_ok;
}

// ---- conjecture ----

struct ConjectureArgs {
    int q = 2;
    std::string range = "7..20";
    int threads = 0;
    Budget budget;
    std::string format = "table";
    std::string output;
};

int cmd_conjecture(const ConjectureArgs& a) {
    const Range range = parse_range(a.range);
    const auto start = std::chrono::steady_clock::now();
    const ConjectureScan scan = conjecture_scan(a.q, range.lo, range.hi, a.budget, a.threads);
    const std::int64_t total_ms = elapsed_ms_since(start);

    std::ostringstream out;
    if (a.format == "table") {
        for (const ConjectureRow& row : scan.rows) {
            out << "n=" << row.n << " M*(n)=" << row.m.divided_by(row.n).decimal(5);
            if (row.n != range.lo)
                out << (row.violates_decrease ? " VIOLATES strict decrease" : " decreasing");
            out << '\n';
        }
        if (scan.violations.empty()) {
            out << "violations: none\n";
        } else {
            out << "violations:";
            for (int n : scan.violations) out << ' ' << n;
            out << '\n';
        }
    } else {
        std::vector<StatsReport> reports;
        for (const ConjectureRow& row : scan.rows)
            reports.push_back(
                make_report(a.q, row.n, "automaton", row.m, {}, std::nullopt, 0));
        if (!reports.empty()) reports.back().elapsed_ms = total_ms;
        out << render_reports(reports, a.format);
        if (!scan.violations.empty()) {
            std::cerr << "violations of strict decrease at n =";
            for (int n : scan.violations) std::cerr << ' ' << n;
            std::cerr << '\n';
        }
    }
    write_output(a.output, out.str());
    return exit_ok;
}

void add_format_option(CLI::App* cmd, std::string& fmt, bool with_json = true) {
    auto values = with_json ? std::vector<std::string>{"table", "csv", "json"}
                            : std::vector<std::string>{"table", "csv"};
    cmd->add_option("--format", fmt, "output format")->check(CLI::IsMember(values));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"palindrome analytics for finite words"};
    app.require_subcommand(1);

    Budget default_budget;
    try {
        default_budget = budget_from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }

    DebruijnArgs dbr;
    dbr.budget = default_budget;
    auto* cmd_db = app.add_subcommand("debruijn", "generate and verify a De Bruijn word");
    cmd_db->add_option("-q", dbr.q, "alphabet size")->required()->check(CLI::Range(1, 255));
    cmd_db->add_option("-k", dbr.k, "window order")->required()->check(CLI::Range(1, 64));
    cmd_db->add_option("--enum-budget", dbr.budget.word_space, "cap on q^k");
    cmd_db->add_option("-o,--output", dbr.output, "write to file instead of stdout");

    PalindromesArgs pal;
    pal.budget = default_budget;
    auto* cmd_pal = app.add_subcommand("palindromes", "list all palindromes of one length");
    cmd_pal->add_option("-q", pal.q, "alphabet size")->required()->check(CLI::Range(1, 255));
    cmd_pal->add_option("-n", pal.n, "palindrome length")->required()
        ->check(CLI::Range(1, 1000000));
    cmd_pal->add_option("--method", pal.method, "generator to use")
        ->check(CLI::IsMember({"enum", "debruijn", "diffs"}));
    cmd_pal->add_option("--enum-budget", pal.budget.word_space, "cap on q^ceil(n/2)");
    cmd_pal->add_option("-o,--output", pal.output, "write to file instead of stdout");

    ProfileArgs prof;
    auto* cmd_prof = app.add_subcommand("profile", "complexity profiles of one word");
    cmd_prof->add_option("word", prof.literal, "word literal (digits, or comma-separated)");
    cmd_prof->add_option("--file", prof.file, "read the word from a file");
    cmd_prof->add_option("-q", prof.q, "alphabet size (default: inferred)")
        ->check(CLI::Range(1, 255));
    cmd_prof->add_flag("--subword", prof.subword, "subword profile only");
    cmd_prof->add_flag("--palindrome", prof.palindrome, "palindrome profile only");
    add_format_option(cmd_prof, prof.format, false);
    cmd_prof->add_option("-o,--output", prof.output, "write to file instead of stdout");

    AverageArgs avg;
    avg.budget = default_budget;
    auto* cmd_avg = app.add_subcommand("average", "exact average palindrome counts M_q(n)");
    cmd_avg->add_option("-q", avg.q, "alphabet size")->required()->check(CLI::Range(2, 255));
    cmd_avg->add_option("-n", avg.range, "length or inclusive range LO..HI")->required();
    cmd_avg->add_option("--method", avg.method, "enum, automaton, or both")
        ->check(CLI::IsMember({"enum", "automaton", "both"}));
    cmd_avg->add_option("--threads", avg.threads, "worker threads (0 = all cores)");
    cmd_avg->add_option("--enum-budget", avg.budget.word_space, "cap on q^n enumeration");
    cmd_avg->add_option("--dp-budget", avg.budget.dp_cells, "cap on automaton DP work");
    add_format_option(cmd_avg, avg.format);
    cmd_avg->add_option("-o,--output", avg.output, "write to file instead of stdout");

    McArgs mc;
    auto* cmd_mc_ = app.add_subcommand("mc", "Monte Carlo estimate of M_q(n)/n");
    cmd_mc_->add_option("-q", mc.q, "alphabet size")->required()->check(CLI::Range(2, 255));
    cmd_mc_->add_option("-n", mc.n, "word length")->required()->check(CLI::Range(1, 1000000));
    cmd_mc_->add_option("-l,--samples", mc.samples, "number of sampled words")
        ->required()
        ->check(CLI::Range(1, 1000000));
    cmd_mc_->add_option("--seed", mc.seed, "PRNG seed")->required();
    cmd_mc_->add_option("--threads", mc.threads, "worker threads (0 = all cores)");
    add_format_option(cmd_mc_, mc.format);
    cmd_mc_->add_option("-o,--output", mc.output, "write to file instead of stdout");

    ConjectureArgs conj;
    conj.budget = default_budget;
    auto* cmd_conj =
        app.add_subcommand("conjecture", "check strict decrease of M_q(n)/n on a range");
    cmd_conj->add_option("-q", conj.q, "alphabet size")->required()
        ->check(CLI::Range(2, 255));
    cmd_conj->add_option("-n", conj.range, "inclusive range LO..HI")->required();
    cmd_conj->add_option("--threads", conj.threads, "worker threads (0 = all cores)");
    cmd_conj->add_option("--dp-budget", conj.budget.dp_cells, "cap on automaton DP work");
    add_format_option(cmd_conj, conj.format);
    cmd_conj->add_option("-o,--output", conj.output, "write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (app.got_subcommand(cmd_db)) return cmd_debruijn(dbr);
        if (app.got_subcommand(cmd_pal)) return cmd_palindromes(pal);
        if (app.got_subcommand(cmd_prof)) return cmd_profile(prof);
        if (app.got_subcommand(cmd_avg)) return cmd_average(avg);
        if (app.got_subcommand(cmd_mc_)) return cmd_mc(mc);
        if (app.got_subcommand(cmd_conj)) return cmd_conjecture(conj);
    } catch (const budget_error& e) {
        std::cerr << "budget error: " << e.what() << '\n';
        return exit_budget;
    } catch (const invariant_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << '\n';
        return exit_invariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
