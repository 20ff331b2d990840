#include "cperm/core.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace cperm {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
    const int n = static_cast<int>(one_line_.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : one_line_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
            throw std::invalid_argument("one-line notation is not a permutation of 1.." + std::to_string(n));
        seen[static_cast<std::size_t>(v) - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(one_line_.size());
    for (int i = 1; i <= n(); ++i) inv[static_cast<std::size_t>((*this)(i)) - 1] = i;
    return Permutation(std::move(inv));
}

ColoredPermutation::ColoredPermutation(Permutation sigma, std::vector<int> kappa, int r)
    : sigma_(std::move(sigma)), kappa_(std::move(kappa)), r_(r) {
    if (r_ < 1) throw std::invalid_argument("color count r must be >= 1");
    if (static_cast<int>(kappa_.size()) != sigma_.n())
        throw std::invalid_argument("color map must assign a color to every value 1..n");
    for (int c : kappa_)
        if (c < 0 || c >= r_) throw std::invalid_argument("color out of range 0..r-1");
}

ColoredPermutation ColoredPermutation::identity(int n, int r) {
    return ColoredPermutation(Permutation::identity(n), std::vector<int>(static_cast<std::size_t>(n), 0), r);
}

ColoredPermutation ColoredPermutation::operator*(const ColoredPermutation& rhs) const {
    if (n() != rhs.n() || r_ != rhs.r_) throw std::invalid_argument("mismatched group parameters");
    std::vector<int> sig(static_cast<std::size_t>(n()));
    for (int i = 1; i <= n(); ++i) sig[static_cast<std::size_t>(i) - 1] = rhs.sigma_(sigma_(i));
    const Permutation rhs_inv = rhs.sigma_.inverse();
    std::vector<int> kap(static_cast<std::size_t>(n()));
    for (int m = 1; m <= n(); ++m)
        kap[static_cast<std::size_t>(m) - 1] = (rhs.color(m) + color(rhs_inv(m))) % r_;
    return ColoredPermutation(Permutation(std::move(sig)), std::move(kap), r_);
}

ColoredPermutation ColoredPermutation::inverse() const {
    Permutation sig_inv = sigma_.inverse();
    std::vector<int> kap(static_cast<std::size_t>(n()));
    for (int m = 1; m <= n(); ++m)
        kap[static_cast<std::size_t>(m) - 1] = (r_ - color(sigma_(m))) % r_;
    return ColoredPermutation(std::move(sig_inv), std::move(kap), r_);
}

std::string ColoredPermutation::to_string() const {
    std::ostringstream out;
    for (int i = 1; i <= n(); ++i) {
        if (i > 1) out << ',';
        out << sigma_(i);
        if (r_ > 1) out << '^' << color(sigma_(i));
    }
    return out.str();
}

ColoredPermutation ColoredPermutation::parse(const std::string& text, int r) {
    struct Entry {
        int value;
        int color;
    };
    std::vector<Entry> entries;
    std::size_t pos = 0;
    const auto fail = [&](const std::string& msg, std::size_t at) -> void {
        throw parse_error(msg + " at column " + std::to_string(at + 1), at + 1);
    };
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    const auto read_int = [&](const char* what) -> int {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail(std::string("expected ") + what, start);
        long v = 0;
        for (std::size_t i = start; i < pos; ++i) {
            v = v * 10 + (text[i] - '0');
            if (v > 1000000) fail("number too large", start);
        }
        return static_cast<int>(v);
    };

    skip_ws();
    if (pos >= text.size()) fail("empty one-line notation", pos);
    while (true) {
        Entry e{read_int("a value"), 0};
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            e.color = read_int("a color");
        }
        entries.push_back(e);
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != ',') fail("expected ','", pos);
        ++pos;
    }

    int max_color = 0;
    for (const Entry& e : entries) max_color = std::max(max_color, e.color);
    const int rr = (r == 0) ? max_color + 1 : r;
    if (max_color >= rr) throw parse_error("color " + std::to_string(max_color) + " out of range for r=" + std::to_string(rr), 1);

    std::vector<int> one_line;
    one_line.reserve(entries.size());
    for (const Entry& e : entries) one_line.push_back(e.value);
    Permutation sigma(one_line);  // validates; throws std::invalid_argument
    std::vector<int> kappa(entries.size());
    for (const Entry& e : entries) kappa[static_cast<std::size_t>(e.value) - 1] = e.color;
    return ColoredPermutation(std::move(sigma), std::move(kappa), rr);
}

RookPlacement::RookPlacement(std::vector<GridPoint> points) : points_(std::move(points)) {
    std::sort(points_.begin(), points_.end());
    for (std::size_t i = 1; i < points_.size(); ++i)
        if (points_[i].row == points_[i - 1].row)
            throw std::invalid_argument("rook placement has two points in row " + std::to_string(points_[i].row));
    std::vector<int> cols;
    cols.reserve(points_.size());
    for (const GridPoint& p : points_) cols.push_back(p.col);
    std::sort(cols.begin(), cols.end());
    for (std::size_t i = 1; i < cols.size(); ++i)
        if (cols[i] == cols[i - 1])
            throw std::invalid_argument("rook placement has two points in column " + std::to_string(cols[i]));
}

bool RookPlacement::contains(GridPoint p) const {
    return std::binary_search(points_.begin(), points_.end(), p);
}

RookPlacement ColoredDiagram::union_placement() const {
    std::vector<GridPoint> all;
    for (const RookPlacement& layer : layers)
        all.insert(all.end(), layer.points().begin(), layer.points().end());
    return RookPlacement(std::move(all));
}

RPartition::RPartition(std::vector<std::vector<int>> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("r-partition needs at least one component");
    for (const std::vector<int>& lam : components_) {
        for (std::size_t i = 0; i < lam.size(); ++i) {
            if (lam[i] < 1) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && lam[i] > lam[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
}

int RPartition::total_size() const {
    int total = 0;
    for (const std::vector<int>& lam : components_)
        for (int part : lam) total += part;
    return total;
}

std::string RPartition::to_string() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t c = 0; c < components_.size(); ++c) {
        if (c) out << ',';
        const std::vector<int>& lam = components_[c];
        if (lam.empty()) {
            out << "()";
        } else {
            out << '(';
            for (std::size_t i = 0; i < lam.size(); ++i) {
                if (i) out << ',';
                out << lam[i];
            }
            out << ')';
        }
    }
    out << ')';
    return out.str();
}

BigInt group_order(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("need n >= 0 and r >= 1");
    return int_pow(BigInt(r), n) * factorial(n);
}

namespace {

void emit_colorings(const Permutation& sigma, int r, const std::function<void(const ColoredPermutation&)>& fn) {
    const int n = sigma.n();
    std::vector<int> kappa(static_cast<std::size_t>(n), 0);
    while (true) {
        fn(ColoredPermutation(sigma, kappa, r));
        // Next color word; the color of value n moves fastest, so the words
        // ascend as base-r numbers with the color of value 1 most significant.
        int pos = n - 1;
        while (pos >= 0 && kappa[static_cast<std::size_t>(pos)] == r - 1) {
            kappa[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++kappa[static_cast<std::size_t>(pos)];
    }
}

}  // namespace

void for_each_group_element(int n, int r, const std::function<void(const ColoredPermutation&)>& fn,
                            const BigInt& cap) {
    const BigInt total = group_order(n, r);
    if (total > cap)
        throw size_limit_error("group size r^n*n! = " + total.str() + " exceeds cap " + cap.str(), total, cap);
    std::vector<int> one_line(static_cast<std::size_t>(n));
    std::iota(one_line.begin(), one_line.end(), 1);
    do {
        emit_colorings(Permutation(one_line), r, fn);
    } while (std::next_permutation(one_line.begin(), one_line.end()));
}

void for_each_group_element_first_value(int n, int r, int first_value,
                                        const std::function<void(const ColoredPermutation&)>& fn) {
    if (n < 1 || first_value < 1 || first_value > n) throw std::invalid_argument("bad first value");
    std::vector<int> rest;
    for (int v = 1; v <= n; ++v)
        if (v != first_value) rest.push_back(v);
    do {
        std::vector<int> one_line;
        one_line.reserve(static_cast<std::size_t>(n));
        one_line.push_back(first_value);
        one_line.insert(one_line.end(), rest.begin(), rest.end());
        emit_colorings(Permutation(std::move(one_line)), r, fn);
    } while (std::next_permutation(rest.begin(), rest.end()));
}

std::vector<ColoredPermutation> enumerate_group(int n, int r, const BigInt& cap) {
    std::vector<ColoredPermutation> out;
    for_each_group_element(n, r, [&](const ColoredPermutation& w) { out.push_back(w); }, cap);
    return out;
}

RPartition cycle_type(const ColoredPermutation& w) {
    const int n = w.n();
    const int r = w.r();
    std::vector<std::vector<int>> components(static_cast<std::size_t>(r));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start) - 1]) continue;
        int len = 0;
        int color_sum = 0;
        int cur = start;
        do {
            seen[static_cast<std::size_t>(cur) - 1] = true;
            color_sum += w.color(cur);
            ++len;
            cur = w.sigma()(cur);
        } while (cur != start);
        components[static_cast<std::size_t>(color_sum % r)].push_back(len);
    }
    for (std::vector<int>& lam : components) std::sort(lam.begin(), lam.end(), std::greater<int>());
    return RPartition(std::move(components));
}

ColoredDiagram diagram(const ColoredPermutation& w) {
    const int n = w.n();
    std::vector<std::vector<GridPoint>> pts(static_cast<std::size_t>(w.r()));
    for (int i = 1; i <= n; ++i) {
        const int j = w.sigma()(i);
        pts[static_cast<std::size_t>(w.color(j))].push_back(GridPoint{i, j});
    }
    ColoredDiagram d;
    d.n = n;
    d.layers.reserve(pts.size());
    for (std::vector<GridPoint>& layer : pts) d.layers.emplace_back(std::move(layer));
    return d;
}

namespace {

void partition_rec(int m, int max_part, std::vector<int>& prefix,
                   const std::function<void(const std::vector<int>&)>& fn) {
    if (m == 0) {
        fn(prefix);
        return;
    }
    for (int first = std::min(m, max_part); first >= 1; --first) {
        prefix.push_back(first);
        partition_rec(m - first, first, prefix, fn);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_partition(int m, const std::function<void(const std::vector<int>&)>& fn) {
    if (m < 0) throw std::invalid_argument("partition size must be >= 0");
    std::vector<int> prefix;
    partition_rec(m, m, prefix, fn);
}

std::vector<std::vector<int>> enumerate_partitions(int m) {
    std::vector<std::vector<int>> out;
    for_each_partition(m, [&](const std::vector<int>& lam) { out.push_back(lam); });
    return out;
}

namespace {

void rpartition_rec(int remaining, int r, std::size_t comp, std::vector<std::vector<int>>& acc,
                    std::vector<RPartition>& out) {
    if (comp + 1 == static_cast<std::size_t>(r)) {
        for_each_partition(remaining, [&](const std::vector<int>& lam) {
            acc[comp] = lam;
            out.push_back(RPartition(acc));
        });
        return;
    }
    for (int size = remaining; size >= 0; --size) {
        for_each_partition(size, [&](const std::vector<int>& lam) {
            acc[comp] = lam;
            rpartition_rec(remaining - size, r, comp + 1, acc, out);
        });
    }
}

}  // namespace

std::vector<RPartition> enumerate_rpartitions(int n, int r) {
    if (n < 0 || r < 1) throw std::invalid_argument("need n >= 0 and r >= 1");
    std::vector<RPartition> out;
    std::vector<std::vector<int>> acc(static_cast<std::size_t>(r));
    rpartition_rec(n, r, 0, acc, out);
    return out;
}

RPartition dual_rpartition(const RPartition& lam) {
    std::vector<std::vector<int>> comps;
    comps.reserve(static_cast<std::size_t>(lam.r()));
    comps.push_back(lam.component(0));
    for (int i = lam.r() - 1; i >= 1; --i) comps.push_back(lam.component(i));
    return RPartition(std::move(comps));
}

}  // namespace cperm
