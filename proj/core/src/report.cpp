#include "palin/report.hpp"

#include <json.hpp>

#include <utility>

namespace palin {

namespace {

nlohmann::ordered_json report_json(const StatsReport& r) {
    nlohmann::ordered_json j;
    j["q"] = r.q;
    j["n"] = r.n;
    j["method"] = r.method;
    j["m_exact"] = {{"num", r.m_exact.num.str()}, {"den", r.m_exact.den.str()}};
    j["m_decimal"] = r.m_decimal;
    nlohmann::ordered_json per_p = nlohmann::ordered_json::array();
    for (const PerP& e : r.per_p)
        per_p.push_back({{"p", e.p}, {"s_np", e.s_np.str()}});
    j["per_p"] = std::move(per_p);
    j["bound"] = r.bound.decimal(5);
    if (r.seed)
        j["seed"] = *r.seed;
    else
        j["seed"] = nullptr;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

} // namespace

StatsReport make_report(int q, int n, std::string method, Rational m_exact,
                        std::vector<PerP> per_p, std::optional<std::uint64_t> seed,
                        std::int64_t elapsed_ms) {
    StatsReport r;
    r.q = q;
    r.n = n;
    r.method = std::move(method);
    r.m_decimal = m_exact.divided_by(n).decimal(5);
    r.m_exact = std::move(m_exact);
    r.per_p = std::move(per_p);
    r.bound = theorem_bound(q, n);
    r.seed = seed;
    r.elapsed_ms = elapsed_ms;
    return r;
}

std::string to_json(const StatsReport& report, int indent) {
    return report_json(report).dump(indent) + "\n";
}

std::string to_json(const std::vector<StatsReport>& reports, int indent) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const StatsReport& r : reports) arr.push_back(report_json(r));
    return arr.dump(indent) + "\n";
}

std::string csv_header() {
    return "q,n,method,m_num,m_den,m_decimal,bound,seed,elapsed_ms";
}

std::string to_csv_row(const StatsReport& r) {
    std::string row;
    row += std::to_string(r.q);
    row += ',';
    row += std::to_string(r.n);
    row += ',';
    row += r.method;
    row += ',';
    row += r.m_exact.num.str();
    row += ',';
    row += r.m_exact.den.str();
    row += ',';
    row += r.m_decimal;
    row += ',';
    row += r.bound.decimal(5);
    row += ',';
    if (r.seed) row += std::to_string(*r.seed);
    row += ',';
    row += std::to_string(r.elapsed_ms);
    return row;
}

std::string to_csv(const std::vector<StatsReport>& reports) {
    std::string out = csv_header();
    out += '\n';
    for (const StatsReport& r : reports) {
        out += to_csv_row(r);
        out += '\n';
    }
    return out;
}

} // namespace palin
