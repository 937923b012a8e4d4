#pragma once

#include "palin/rational.hpp"
#include "palin/stats.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace palin {

// One statistics run, ready for serialization. m_exact is M_q(n) for the
// exact methods and mean P(w_i) for monte-carlo; m_decimal is always
// m_exact / n rendered to five decimals (the M*(n) scale of the tables).
struct StatsReport {
    int q = 0;
    int n = 0;
    std::string method; // enumeration | automaton | both | monte-carlo
    Rational m_exact;
    std::string m_decimal;
    std::vector<PerP> per_p; // automaton runs only
    Rational bound;          // theorem bound on M_q(n)
    std::optional<std::uint64_t> seed;
    std::int64_t elapsed_ms = 0;
};

StatsReport make_report(int q, int n, std::string method, Rational m_exact,
                        std::vector<PerP> per_p = {},
                        std::optional<std::uint64_t> seed = {},
                        std::int64_t elapsed_ms = 0);

// JSON object with keys q, n, method, m_exact{num,den}, m_decimal, per_p,
// bound, seed, elapsed_ms. Integer aggregates are serialized as decimal
// strings so no reader truncates them.
std::string to_json(const StatsReport& report, int indent = 2);
std::string to_json(const std::vector<StatsReport>& reports, int indent = 2);

std::string csv_header();
std::string to_csv_row(const StatsReport& report);
std::string to_csv(const std::vector<StatsReport>& reports);

} // namespace palin
