#include "palin/stats.hpp"

#include "palin/avoidance.hpp"
#include "palin/eertree.hpp"
#include "palin/error.hpp"
#include "palin/palgen.hpp"
#include "palin/rng.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace palin {

namespace {

using u128 = unsigned __int128;

void require_q(int q) {
    if (q < 2 || q > Alphabet::max_letters)
        throw std::invalid_argument("statistics need 2 <= q <= " +
                                    std::to_string(Alphabet::max_letters));
}

void require_n(int n) {
    if (n < 1) throw std::invalid_argument("word length must be >= 1");
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    const unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

// Workers pull task indices from a shared counter; partial results are merged
// by exact integer addition, so the outcome does not depend on scheduling.
template <class Fn>
void for_each_task(std::uint64_t task_count, int threads, Fn&& fn) {
    const auto workers =
        static_cast<int>(std::min<std::uint64_t>(static_cast<std::uint64_t>(threads),
                                                 std::max<std::uint64_t>(task_count, 1)));
    if (workers <= 1) {
        for (std::uint64_t t = 0; t < task_count; ++t) fn(0, t);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            try {
                for (std::uint64_t t; (t = next.fetch_add(1)) < task_count;) fn(w, t);
            } catch (...) {
                std::lock_guard<std::mutex> guard(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

std::size_t half_length(std::size_t n) { return (n + 1) / 2; }

} // namespace

long long total_palindrome_complexity(const Word& w) {
    Eertree tree(w.alphabet(), w.size());
    tree.assign(w.symbols());
    return tree.distinct_palindromes();
}

Rational average_exact_enumeration(int q, int n, const Budget& budget, int threads) {
    require_q(q);
    require_n(n);
    const auto space = checked_pow(q, static_cast<std::size_t>(n));
    if (!space || *space > budget.word_space)
        throw budget_error("q^n exceeds the enumeration budget; the automaton method "
                           "handles larger n");

    threads = resolve_threads(threads);
    // Words share prefixes: walk the q-ary tree of A^n depth-first, undoing
    // one symbol per backtrack, and read P(w) off the tree at each leaf.
    // Workers split the space by prefixes of depth d.
    int d = 0;
    std::uint64_t prefixes = 1;
    while (d < n && prefixes < static_cast<std::uint64_t>(8) * threads) {
        prefixes *= static_cast<std::uint64_t>(q);
        ++d;
    }

    struct Worker {
        Eertree tree;
        u128 sum = 0;
        explicit Worker(int q_, int n_) : tree(Alphabet(q_), static_cast<std::size_t>(n_)) {}
    };
    std::vector<Worker> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) workers.emplace_back(q, n);

    const int rest = n - d;
    for_each_task(prefixes, threads, [&](int w, std::uint64_t prefix) {
        Worker& wk = workers[static_cast<std::size_t>(w)];
        wk.tree.clear();
        Symbol digits[64];
        std::uint64_t v = prefix;
        for (int i = d; i-- > 0;) {
            digits[i] = static_cast<Symbol>(v % static_cast<std::uint64_t>(q));
            v /= static_cast<std::uint64_t>(q);
        }
        for (int i = 0; i < d; ++i) wk.tree.push(digits[i]);

        auto dfs = [&](auto&& self, int depth) -> void {
            if (depth == 0) {
                wk.sum += static_cast<u128>(wk.tree.distinct_palindromes());
                return;
            }
            for (int c = 0; c < q; ++c) {
                wk.tree.push(static_cast<Symbol>(c));
                self(self, depth - 1);
                wk.tree.pop();
            }
        };
        dfs(dfs, rest);
    });

    BigInt total = 0;
    for (const Worker& wk : workers) total += u128_to_bigint(wk.sum);
    return Rational(total, bigint_pow(q, static_cast<std::size_t>(n)));
}

namespace {

// One pattern's DP sweep serves every target length at once, so S_{n,p} for
// all n <= n_max costs the same as for n = n_max alone.
struct SnpSweep {
    int q;
    int n_max;
    // avoid_sum[p-1][n] = sum over palindromes pi of length p of avoid(pi, n)
    std::vector<std::vector<BigInt>> avoid_sum;
};

SnpSweep run_snp_sweep(int q, int n_max, const std::vector<int>& lengths,
                       const Budget& budget, int threads) {
    require_q(q);
    require_n(n_max);

    BigInt cells = 0;
    for (int p : lengths)
        cells += bigint_pow(q, half_length(static_cast<std::size_t>(p))) * (p + 1) *
                 (n_max + 1) * q;
    if (cells > budget.dp_cells)
        throw budget_error("automaton sweep needs " + cells.str() +
                           " DP cell updates, over the configured budget");
    // Accumulators below stay in 128 bits: sum <= q^(ceil(p/2) + n).
    for (int p : lengths)
        if (bigint_pow(q, half_length(static_cast<std::size_t>(p)) +
                              static_cast<std::size_t>(n_max)) >= (BigInt(1) << 126))
            throw budget_error("avoidance accumulators would overflow 128 bits");

    struct Task {
        int p;
        std::uint64_t half_lo, half_hi;
    };
    std::vector<Task> tasks;
    constexpr std::uint64_t chunk = 2048;
    for (int p : lengths) {
        const std::uint64_t halves =
            *checked_pow(q, half_length(static_cast<std::size_t>(p)));
        for (std::uint64_t lo = 0; lo < halves; lo += chunk)
            tasks.push_back({p, lo, std::min(halves, lo + chunk)});
    }

    threads = resolve_threads(threads);
    struct Acc {
        // [index of p in lengths][n] in 128 bits, merged into BigInt at the end
        std::vector<std::vector<u128>> sums;
    };
    std::vector<int> p_index(static_cast<std::size_t>(n_max) + 1, -1);
    for (std::size_t i = 0; i < lengths.size(); ++i)
        p_index[static_cast<std::size_t>(lengths[i])] = static_cast<int>(i);
    std::vector<Acc> accs(static_cast<std::size_t>(threads));
    for (Acc& a : accs)
        a.sums.assign(lengths.size(),
                      std::vector<u128>(static_cast<std::size_t>(n_max) + 1, 0));

    const Alphabet alphabet(q);
    for_each_task(tasks.size(), threads, [&](int w, std::uint64_t t) {
        const Task& task = tasks[static_cast<std::size_t>(t)];
        auto& dst = accs[static_cast<std::size_t>(w)]
                        .sums[static_cast<std::size_t>(p_index[static_cast<std::size_t>(task.p)])];
        const std::size_t h = half_length(static_cast<std::size_t>(task.p));
        for (std::uint64_t half = task.half_lo; half < task.half_hi; ++half) {
            const Word pal = extend_to_palindrome(integer_to_word(half, h, alphabet),
                                                  static_cast<std::size_t>(task.p));
            const AvoidanceAutomaton automaton(pal);
            const auto counts = automaton.avoid_counts_up_to(static_cast<std::size_t>(n_max));
            for (int n = 0; n <= n_max; ++n)
                dst[static_cast<std::size_t>(n)] += counts[static_cast<std::size_t>(n)];
        }
    });

    SnpSweep sweep{q, n_max, {}};
    sweep.avoid_sum.assign(lengths.size(),
                           std::vector<BigInt>(static_cast<std::size_t>(n_max) + 1, 0));
    for (const Acc& a : accs)
        for (std::size_t i = 0; i < lengths.size(); ++i)
            for (int n = 0; n <= n_max; ++n)
                sweep.avoid_sum[i][static_cast<std::size_t>(n)] +=
                    u128_to_bigint(a.sums[i][static_cast<std::size_t>(n)]);
    return sweep;
}

BigInt snp_from_sweep(const SnpSweep& sweep, std::size_t p_slot, int p, int n) {
    const BigInt pal_count = bigint_pow(sweep.q, half_length(static_cast<std::size_t>(p)));
    return pal_count * bigint_pow(sweep.q, static_cast<std::size_t>(n)) -
           sweep.avoid_sum[p_slot][static_cast<std::size_t>(n)];
}

} // namespace

BigInt snp_automaton(int q, int n, int p, const Budget& budget, int threads) {
    require_q(q);
    require_n(n);
    if (p < 1 || p > n) throw std::invalid_argument("need 1 <= p <= n");
    const SnpSweep sweep = run_snp_sweep(q, n, {p}, budget, threads);
    return snp_from_sweep(sweep, 0, p, n);
}

std::vector<std::vector<BigInt>> snp_table(int q, int n_max, const Budget& budget,
                                           int threads) {
    require_q(q);
    require_n(n_max);
    std::vector<int> lengths;
    for (int p = 1; p <= n_max; ++p) lengths.push_back(p);
    const SnpSweep sweep = run_snp_sweep(q, n_max, lengths, budget, threads);

    std::vector<std::vector<BigInt>> table(static_cast<std::size_t>(n_max) + 1);
    for (int n = 1; n <= n_max; ++n) {
        auto& row = table[static_cast<std::size_t>(n)];
        row.reserve(static_cast<std::size_t>(n));
        for (int p = 1; p <= n; ++p)
            row.push_back(snp_from_sweep(sweep, static_cast<std::size_t>(p - 1), p, n));
    }
    return table;
}

AutomatonAverage average_exact_automaton(int q, int n, const Budget& budget, int threads) {
    const auto table = snp_table(q, n, budget, threads);
    const auto& row = table[static_cast<std::size_t>(n)];
    AutomatonAverage out;
    BigInt total = 0;
    for (int p = 1; p <= n; ++p) {
        total += row[static_cast<std::size_t>(p - 1)];
        out.per_p.push_back({p, row[static_cast<std::size_t>(p - 1)]});
    }
    out.average = Rational(total, bigint_pow(q, static_cast<std::size_t>(n)));
    return out;
}

BigInt sn1_closed(int q, int n) {
    require_q(q);
    require_n(n);
    return bigint_pow(q, static_cast<std::size_t>(n) + 1) -
           q * bigint_pow(q - 1, static_cast<std::size_t>(n));
}

BigInt psi_recurrence(int q, int n) {
    require_q(q);
    if (n < 2) throw std::invalid_argument("psi is defined for n >= 2");
    BigInt prev = BigInt(q) * q - 1;              // psi(2)
    BigInt cur = BigInt(q) * q * q - 2 * q + 1;   // psi(3)
    if (n == 2) return prev;
    for (int i = 4; i <= n; ++i) {
        BigInt next = (q - 1) * (cur + prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

Sn2 sn2_closed(int q, int n) {
    require_q(q);
    if (n < 2) throw std::invalid_argument("S_{n,2} is defined for n >= 2");
    Sn2 out;
    out.exact = q * (bigint_pow(q, static_cast<std::size_t>(n)) - psi_recurrence(q, n));

    // Characteristic roots of psi(n) = (q-1)(psi(n-1) + psi(n-2)); the
    // discriminant is (q-1)^2 + 4(q-1) = q^2 + 2q - 3.
    const long double s = std::sqrt(static_cast<long double>(q) * q + 2 * q - 3);
    const long double r_plus = (q - 1 + s) / 2;
    const long double r_minus = (q - 1 - s) / 2;
    const long double psi = (std::pow(r_plus, n + 2) - std::pow(r_minus, n + 2)) /
                            ((q - 1) * s);
    const long double value =
        std::pow(static_cast<long double>(q), n + 1) - static_cast<long double>(q) * psi;
    out.closed_form = static_cast<double>(value);
    return out;
}

Rational theorem_bound(int q, int n) {
    require_q(q);
    require_n(n);
    const BigInt constant = BigInt(q) * q * q - 2 * BigInt(q) * q - 2 * q - 1;
    const BigInt linear = 2 * BigInt(n) * (q - 1) + constant;
    const bool odd = n % 2 == 1;
    const auto m = static_cast<std::size_t>(odd ? (n - 1) / 2 : n / 2);
    const BigInt qm = bigint_pow(q, m);
    const BigInt head = odd ? BigInt(q) + 3 : 3 * BigInt(q) + 1;
    return Rational(head + qm * linear, qm * (BigInt(q) - 1) * (BigInt(q) - 1));
}

AsymptoticLimits asymptotic_limits(int q) {
    require_q(q);
    return {Rational(2, q - 1), Rational(q + 1, BigInt(q) * (q - 1))};
}

MonteCarloResult monte_carlo_average(int q, int n, int samples, std::uint64_t seed,
                                     int threads) {
    require_q(q);
    require_n(n);
    if (samples < 1) throw std::invalid_argument("sample count must be >= 1");

    threads = resolve_threads(threads);
    struct Worker {
        Eertree tree;
        u128 sum = 0;
        explicit Worker(int q_, int n_) : tree(Alphabet(q_), static_cast<std::size_t>(n_)) {}
    };
    std::vector<Worker> workers;
    workers.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) workers.emplace_back(q, n);

    for_each_task(static_cast<std::uint64_t>(samples), threads,
                  [&](int w, std::uint64_t index) {
                      Worker& wk = workers[static_cast<std::size_t>(w)];
                      SplitMix64 gen(substream_seed(seed, index));
                      wk.tree.clear();
                      for (int i = 0; i < n; ++i)
                          wk.tree.push(static_cast<Symbol>(
                              gen.next_below(static_cast<std::uint32_t>(q))));
                      wk.sum += static_cast<u128>(wk.tree.distinct_palindromes());
                  });

    MonteCarloResult out;
    out.samples = samples;
    out.seed = seed;
    out.total_p = 0;
    for (const Worker& wk : workers) out.total_p += u128_to_bigint(wk.sum);
    out.estimate = Rational(out.total_p, BigInt(samples) * n);
    return out;
}

ConjectureScan conjecture_scan(int q, int n_lo, int n_hi, const Budget& budget,
                               int threads) {
    require_q(q);
    require_n(n_lo);
    if (n_hi < n_lo) throw std::invalid_argument("empty length range");

    const auto table = snp_table(q, n_hi, budget, threads);
    auto m_of = [&](int n) {
        BigInt total = 0;
        for (const BigInt& s : table[static_cast<std::size_t>(n)]) total += s;
        return Rational(total, bigint_pow(q, static_cast<std::size_t>(n)));
    };

    ConjectureScan scan;
    for (int n = n_lo; n <= n_hi; ++n) {
        ConjectureRow row{n, m_of(n), false};
        if (n > n_lo) {
            const Rational& prev = scan.rows.back().m;
            // M(n)/n < M(n-1)/(n-1), cross-multiplied (denominators q^n n > 0)
            const BigInt lhs = row.m.num * (n - 1) * prev.den;
            const BigInt rhs = prev.num * n * row.m.den;
            row.violates_decrease = lhs >= rhs;
            if (row.violates_decrease) scan.violations.push_back(n);
        }
        scan.rows.push_back(std::move(row));
    }
    return scan;
}

} // namespace palin
