#include "cperm/stats.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

namespace cperm {

int lis_points(const RookPlacement& points) {
    std::vector<int> tails;
    for (const GridPoint& p : points.points()) {  // sorted by row
        auto it = std::lower_bound(tails.begin(), tails.end(), p.col);
        if (it == tails.end())
            tails.push_back(p.col);
        else
            *it = p.col;
    }
    return static_cast<int>(tails.size());
}

BigInt syt_count(const std::vector<int>& partition) {
    int n = 0;
    for (int part : partition) n += part;
    std::vector<int> conjugate;
    if (!partition.empty()) {
        conjugate.assign(static_cast<std::size_t>(partition[0]), 0);
        for (int part : partition)
            for (int j = 0; j < part; ++j) ++conjugate[static_cast<std::size_t>(j)];
    }
    BigInt hooks = 1;
    for (std::size_t i = 0; i < partition.size(); ++i)
        for (int j = 0; j < partition[i]; ++j)
            hooks *= (partition[i] - j) + (conjugate[static_cast<std::size_t>(j)] - static_cast<int>(i)) - 1;
    BigInt num = factorial(n);
    BigInt f = num / hooks;
    if (f * hooks != num) throw std::logic_error("hook product does not divide n!");
    return f;
}

const std::vector<BigInt>& lis_distribution(int j) {
    static std::mutex mutex;
    static std::map<int, std::vector<BigInt>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(j);
    if (it != cache.end()) return it->second;
    std::vector<BigInt> dist(static_cast<std::size_t>(j) + 1, BigInt(0));
    for_each_partition(j, [&](const std::vector<int>& lam) {
        const int first = lam.empty() ? 0 : lam[0];
        const BigInt f = syt_count(lam);
        dist[static_cast<std::size_t>(first)] += f * f;
    });
    return cache.emplace(j, std::move(dist)).first->second;
}

BigInt StatTable::at(long k) const {
    auto it = values.find(k);
    return it == values.end() ? BigInt(0) : it->second;
}

BigInt StatTable::total() const {
    BigInt t = 0;
    for (const auto& [k, v] : values) t += v;
    return t;
}

long StatTable::k_max() const {
    switch (kind) {
        case 'a': return n;
        case 'b': return 2L * n;
        default: return static_cast<long>(r) * n;
    }
}

namespace {

// Exhaustive count of a statistic over the colored permutation group,
// partitioned across workers by the first one-line value.
std::map<long, BigInt> count_by_statistic(int n, int r, int threads, const BigInt& cap,
                                          const std::function<long(const ColoredPermutation&)>& stat) {
    const BigInt total = group_order(n, r);
    if (total > cap)
        throw size_limit_error("group size r^n*n! = " + total.str() + " exceeds cap " + cap.str(), total, cap);
    if (threads == 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;

    std::map<long, BigInt> counts;
    if (threads == 1 || n < 2) {
        for_each_group_element(n, r, [&](const ColoredPermutation& w) { ++counts[stat(w)]; }, cap);
        return counts;
    }

    std::mutex merge_mutex;
    std::vector<std::thread> pool;
    std::atomic<int> next_value{1};
    for (int t = 0; t < std::min(threads, n); ++t) {
        pool.emplace_back([&] {
            std::map<long, BigInt> local;
            for (int v = next_value.fetch_add(1); v <= n; v = next_value.fetch_add(1))
                for_each_group_element_first_value(n, r, v,
                                                   [&](const ColoredPermutation& w) { ++local[stat(w)]; });
            std::lock_guard<std::mutex> lock(merge_mutex);
            for (const auto& [k, c] : local) counts[k] += c;
        });
    }
    for (std::thread& th : pool) th.join();
    return counts;
}

long colored_lis_statistic(const ColoredPermutation& w) {
    const ColoredDiagram d = diagram(w);
    const int r = w.r();
    long stat = static_cast<long>(r) * lis_points(d.layers[0]);
    for (int i = 1; i < r; ++i) stat += static_cast<long>(r - i) * static_cast<long>(d.layers[static_cast<std::size_t>(i)].size());
    return stat;
}

}  // namespace

StatTable count_a(int n, int threads, const BigInt& cap) {
    StatTable t{'a', n, 1, {}};
    t.values = count_by_statistic(n, 1, threads, cap, [](const ColoredPermutation& w) {
        return static_cast<long>(lis_points(diagram(w).layers[0]));
    });
    return t;
}

StatTable count_b(int n, int threads, const BigInt& cap) {
    StatTable t{'b', n, 2, {}};
    t.values = count_by_statistic(n, 2, threads, cap, colored_lis_statistic);
    return t;
}

StatTable count_c(int n, int r, int threads, const BigInt& cap) {
    StatTable t{'c', n, r, {}};
    t.values = count_by_statistic(n, r, threads, cap, colored_lis_statistic);
    return t;
}

namespace {

// Sum over color multiplicity vectors (m_1..m_{r-1}); each term places the
// colored points on M = sum m_i rows and columns, distributes colors, and
// fills the remaining grid with a permutation of prescribed lis.
void fast_colored_rec(int n, int r, std::size_t i, int placed, long color_weight, BigInt ways,
                      std::map<long, BigInt>& values) {
    if (i == static_cast<std::size_t>(r) - 1) {
        const int rest = n - placed;
        const BigInt base = binomial(n, placed) * binomial(n, placed) * factorial(placed) * ways;
        const std::vector<BigInt>& dist = lis_distribution(rest);
        for (int l = 0; l <= rest; ++l) {
            if (dist[static_cast<std::size_t>(l)] == 0) continue;
            const long k = static_cast<long>(r) * l + color_weight;
            values[k] += base * dist[static_cast<std::size_t>(l)];
        }
        return;
    }
    const int color = static_cast<int>(i) + 1;
    BigInt choose = 1;  // multinomial factor built incrementally: C(placed + m, m)
    for (int m = 0; placed + m <= n; ++m) {
        if (m > 0) {
            choose *= (placed + m);
            choose /= m;
        }
        fast_colored_rec(n, r, i + 1, placed + m, color_weight + static_cast<long>(r - color) * m,
                         ways * choose, values);
    }
}

}  // namespace

StatTable count_fast(char kind, int n, int r, int n_limit) {
    if (kind == 'a') r = 1;
    if (kind == 'b') r = 2;
    if (kind != 'a' && kind != 'b' && kind != 'c') throw std::invalid_argument("kind must be a, b or c");
    if (r < 1) throw std::invalid_argument("kind c needs r >= 1");
    if (n > n_limit)
        throw size_limit_error("fast path limited to n <= " + std::to_string(n_limit), BigInt(n), BigInt(n_limit));

    StatTable t{kind, n, r, {}};
    fast_colored_rec(n, r, 0, 0, 0, BigInt(1), t.values);
    for (auto it = t.values.begin(); it != t.values.end();)
        it = (it->second == 0) ? t.values.erase(it) : std::next(it);
    return t;
}

BigInt GradedSeries::sum() const {
    BigInt s = 0;
    for (const BigInt& c : coeffs) s += c;
    return s;
}

std::string GradedSeries::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] == 0) continue;
        if (!first) out << " + ";
        first = false;
        out << coeffs[d].str();
        if (d == 1) out << "*q";
        if (d > 1) out << "*q^" << d;
    }
    if (first) out << "0";
    return out.str();
}

GradedSeries hilbert_series(int n, int r, SeriesPath path, int threads, const BigInt& cap, int n_limit) {
    const long top = static_cast<long>(r) * n;
    GradedSeries s{n, r, std::vector<BigInt>(static_cast<std::size_t>(std::max(top, 1L)), BigInt(0))};
    const StatTable table = (path == SeriesPath::fast_path)
                                ? count_fast(r == 1 ? 'a' : (r == 2 ? 'b' : 'c'), n, r, n_limit)
                                : count_c(n, r, threads, cap);
    for (const auto& [k, count] : table.values) {
        const long d = top - k;
        if (d < 0 || d >= static_cast<long>(s.coeffs.size()))
            throw std::logic_error("statistic " + std::to_string(k) + " outside the expected degree range");
        s.coeffs[static_cast<std::size_t>(d)] += count;
    }
    if (s.sum() != group_order(n, r)) throw std::logic_error("Hilbert coefficients do not sum to the group order");
    return s;
}

namespace {

std::vector<std::pair<long, BigInt>> trim_support(const std::vector<std::pair<long, BigInt>>& seq) {
    std::size_t lo = 0;
    std::size_t hi = seq.size();
    while (lo < hi && seq[lo].second == 0) ++lo;
    while (hi > lo && seq[hi - 1].second == 0) --hi;
    return {seq.begin() + static_cast<std::ptrdiff_t>(lo), seq.begin() + static_cast<std::ptrdiff_t>(hi)};
}

std::vector<std::pair<long, BigInt>> table_sequence(const StatTable& t) {
    std::vector<std::pair<long, BigInt>> seq;
    for (long k = 1; k <= t.k_max(); ++k) seq.emplace_back(k, t.at(k));
    if (t.n == 0) seq.emplace_back(0, t.at(0));
    return seq;
}

std::vector<std::pair<long, BigInt>> series_sequence(const GradedSeries& s) {
    std::vector<std::pair<long, BigInt>> seq;
    for (std::size_t d = 0; d < s.coeffs.size(); ++d) seq.emplace_back(static_cast<long>(d), s.coeffs[d]);
    return seq;
}

}  // namespace

LogConcavityReport check_log_concave(const std::vector<std::pair<long, BigInt>>& labelled) {
    const auto seq = trim_support(labelled);
    LogConcavityReport report;
    if (seq.empty()) return report;
    report.support_lo = seq.front().first;
    report.support_hi = seq.back().first;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i)
        if (seq[i - 1].second * seq[i + 1].second > seq[i].second * seq[i].second)
            report.violations.push_back(seq[i].first);
    return report;
}

LogConcavityReport check_log_concave(const StatTable& table) { return check_log_concave(table_sequence(table)); }
LogConcavityReport check_log_concave(const GradedSeries& series) { return check_log_concave(series_sequence(series)); }

UnimodalityReport check_unimodal(const std::vector<std::pair<long, BigInt>>& labelled) {
    const auto seq = trim_support(labelled);
    UnimodalityReport report;
    if (seq.empty()) return report;
    std::size_t peak_at = 0;
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i].second > seq[peak_at].second) peak_at = i;
    report.peak = seq[peak_at].first;
    std::size_t first_descent = seq.size();
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        if (first_descent == seq.size()) {
            if (seq[i].second > seq[i + 1].second) first_descent = i;
        } else if (seq[i].second < seq[i + 1].second) {
            report.unimodal = false;
            report.witness = std::make_pair(seq[i].first, seq[i + 1].first);
            break;
        }
    }
    return report;
}

UnimodalityReport check_unimodal(const StatTable& table) { return check_unimodal(table_sequence(table)); }
UnimodalityReport check_unimodal(const GradedSeries& series) { return check_unimodal(series_sequence(series)); }

void histogram_csv(const StatTable& table, std::ostream& out) {
    out << "k,count\n";
    for (long k = 1; k <= table.k_max(); ++k) out << k << ',' << table.at(k).str() << '\n';
}

void histogram_csv(const StatTable& table, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    histogram_csv(table, out);
    if (!out.good()) throw std::runtime_error("write failed for " + path);
}

}  // namespace cperm
