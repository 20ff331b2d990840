#include "cperm/characters.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace cperm {

namespace {

bool partition_contains(const std::vector<int>& outer, const std::vector<int>& inner) {
    if (inner.size() > outer.size()) return false;
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > outer[i]) return false;
    return true;
}

}  // namespace

SkewRShape::SkewRShape(RPartition outer_shape, RPartition inner_shape)
    : outer(std::move(outer_shape)), inner(std::move(inner_shape)) {
    if (outer.r() != inner.r()) throw std::invalid_argument("skew shape components disagree on r");
    for (int i = 0; i < outer.r(); ++i)
        if (!partition_contains(outer.component(i), inner.component(i)))
            throw std::invalid_argument("inner shape not contained in outer shape");
}

SkewRShape SkewRShape::straight(RPartition outer_shape) {
    const int r = outer_shape.r();
    return SkewRShape(std::move(outer_shape), RPartition::empty(r));
}

std::vector<CyclePart> class_cycles(const RPartition& type) {
    std::vector<CyclePart> cycles;
    for (int c = 0; c < type.r(); ++c)
        for (int part : type.component(c)) cycles.push_back(CyclePart{part, c});
    return cycles;
}

BigInt dim_irreducible(const RPartition& lam) {
    BigInt dim = factorial(lam.total_size());
    BigInt split = 1;
    for (int i = 0; i < lam.r(); ++i) {
        int size = 0;
        for (int part : lam.component(i)) size += part;
        split *= factorial(size);
        dim *= syt_count(lam.component(i));
    }
    return dim / split;
}

namespace {

struct StripRemoval {
    std::vector<int> shape;
    int height = 0;
};

// All ways to remove a border strip of the given size, via the bead model:
// move one first-column hook value down by the strip size onto a free slot.
std::vector<StripRemoval> border_strip_removals(const std::vector<int>& lam, long size) {
    std::vector<StripRemoval> removals;
    if (lam.empty() || size < 1) return removals;
    const int len = static_cast<int>(lam.size());
    std::vector<long> beads(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) beads[static_cast<std::size_t>(i)] = lam[static_cast<std::size_t>(i)] + (len - 1 - i);
    for (int i = 0; i < len; ++i) {
        const long target = beads[static_cast<std::size_t>(i)] - size;
        if (target < 0) continue;
        if (std::find(beads.begin(), beads.end(), target) != beads.end()) continue;
        int height = 0;
        for (long b : beads)
            if (b > target && b < beads[static_cast<std::size_t>(i)]) ++height;
        std::vector<long> moved = beads;
        moved[static_cast<std::size_t>(i)] = target;
        std::sort(moved.begin(), moved.end(), std::greater<long>());
        StripRemoval removal;
        removal.height = height;
        for (int t = 0; t < len; ++t) {
            const long part = moved[static_cast<std::size_t>(t)] - (len - 1 - t);
            if (part > 0) removal.shape.push_back(static_cast<int>(part));
        }
        removals.push_back(std::move(removal));
    }
    return removals;
}

struct MnContext {
    const RPartition* inner;
    const std::vector<CyclePart>* cycles;
    int r;
    std::map<std::pair<std::vector<std::vector<int>>, std::size_t>, CyclotomicNumber> memo;
};

CyclotomicNumber mn_rec(MnContext& ctx, const std::vector<std::vector<int>>& outer, std::size_t t) {
    if (t == 0)
        return outer == ctx.inner->components() ? CyclotomicNumber::one(ctx.r) : CyclotomicNumber::zero(ctx.r);
    const auto key = std::make_pair(outer, t);
    auto hit = ctx.memo.find(key);
    if (hit != ctx.memo.end()) return hit->second;

    const CyclePart cycle = (*ctx.cycles)[t - 1];
    CyclotomicNumber acc = CyclotomicNumber::zero(ctx.r);
    for (int j = 0; j < ctx.r; ++j) {
        for (const StripRemoval& removal : border_strip_removals(outer[static_cast<std::size_t>(j)], cycle.length)) {
            if (!partition_contains(removal.shape, ctx.inner->component(j))) continue;
            std::vector<std::vector<int>> next = outer;
            next[static_cast<std::size_t>(j)] = removal.shape;
            CyclotomicNumber contribution =
                CyclotomicNumber::root_of_unity(ctx.r, static_cast<long>(j) * cycle.color);
            if (removal.height % 2 == 1) contribution = -contribution;
            acc += contribution * mn_rec(ctx, next, t - 1);
        }
    }
    ctx.memo.emplace(key, acc);
    return acc;
}

}  // namespace

CharacterValue mn_character(const SkewRShape& shape, const std::vector<CyclePart>& cycles) {
    long total = 0;
    for (const CyclePart& c : cycles) {
        if (c.length < 1) throw std::invalid_argument("cycle lengths must be positive");
        total += c.length;
    }
    if (total != shape.size())
        throw std::invalid_argument("cycle lengths sum to " + std::to_string(total) + ", shape has size " +
                                    std::to_string(shape.size()));
    MnContext ctx{&shape.inner, &cycles, shape.outer.r(), {}};
    return mn_rec(ctx, shape.outer.components(), cycles.size());
}

namespace {

// All sub-r-partitions of lam with the given total size, componentwise contained.
void subshapes_rec(const RPartition& lam, int comp, int remaining, std::vector<std::vector<int>>& acc,
                   std::vector<RPartition>& out) {
    if (comp == lam.r()) {
        if (remaining == 0) out.push_back(RPartition(acc));
        return;
    }
    const std::vector<int>& bound = lam.component(comp);
    // enumerate partitions contained in `bound` with size <= remaining
    std::vector<int> cur;
    const std::function<void(int, int)> rec = [&](int row, int used) {
        acc[static_cast<std::size_t>(comp)] = cur;
        subshapes_rec(lam, comp + 1, remaining - used, acc, out);
        if (row >= static_cast<int>(bound.size())) return;
        const int row_max = std::min(bound[static_cast<std::size_t>(row)],
                                     row > 0 ? cur[static_cast<std::size_t>(row) - 1] : bound[0]);
        for (int part = 1; part <= row_max && used + part <= remaining; ++part) {
            cur.push_back(part);
            rec(row + 1, used + part);
            cur.pop_back();
        }
    };
    rec(0, 0);
}

std::vector<RPartition> subshapes(const RPartition& lam, int size) {
    std::vector<RPartition> out;
    std::vector<std::vector<int>> acc(static_cast<std::size_t>(lam.r()));
    subshapes_rec(lam, 0, size, acc, out);
    return out;
}

}  // namespace

bool verify_branching(const RPartition& lam, int k, const std::vector<CyclePart>& g_cycles,
                      const std::vector<CyclePart>& h_cycles) {
    const int n = lam.total_size();
    if (k <= 0 || k >= n) throw std::invalid_argument("need 0 < k < n");
    std::vector<CyclePart> combined = g_cycles;
    combined.insert(combined.end(), h_cycles.begin(), h_cycles.end());
    const CyclotomicNumber lhs = mn_character(SkewRShape::straight(lam), combined);
    CyclotomicNumber rhs = CyclotomicNumber::zero(lam.r());
    for (const RPartition& mu : subshapes(lam, k)) {
        const CyclotomicNumber straight_part = mn_character(SkewRShape::straight(mu), g_cycles);
        if (straight_part.is_zero()) continue;
        rhs += straight_part * mn_character(SkewRShape(lam, mu), h_cycles);
    }
    return lhs == rhs;
}

namespace {

long stratum_invariant(const RPartition& lam) {
    const int r = lam.r();
    long inv = static_cast<long>(r) * (lam.component(0).empty() ? 0 : lam.component(0)[0]);
    for (int i = 1; i < r; ++i) {
        long size = 0;
        for (int part : lam.component(i)) size += part;
        inv += static_cast<long>(i) * size;
    }
    return inv;
}

}  // namespace

std::vector<RPartition> strata(int n, int r, long k) {
    std::vector<RPartition> out;
    for (RPartition& lam : enumerate_rpartitions(n, r))
        if (stratum_invariant(lam) == static_cast<long>(r) * n - k) out.push_back(std::move(lam));
    return out;
}

std::vector<RPartition> strata_at_most(int n, int r, long k) {
    std::vector<RPartition> out;
    for (RPartition& lam : enumerate_rpartitions(n, r))
        if (stratum_invariant(lam) >= static_cast<long>(r) * n - k) out.push_back(std::move(lam));
    return out;
}

StrataReport verify_graded_decomposition(int n, int r, SeriesPath path, int threads, const BigInt& cap) {
    const GradedSeries series = hilbert_series(n, r, path, threads, cap);
    StrataReport report;
    report.n = n;
    report.r = r;
    for (long k = 0; k < static_cast<long>(series.coeffs.size()); ++k) {
        StrataReport::Row row;
        row.k = k;
        row.sum_dim_sq = 0;
        for (const RPartition& lam : strata(n, r, k)) {
            ++row.num_lambdas;
            row.sum_dim_sq += dim_irreducible(lam) * dim_irreducible(dual_rpartition(lam));
        }
        row.hilbert_coeff = series.coeffs[static_cast<std::size_t>(k)];
        row.match = row.sum_dim_sq == row.hilbert_coeff;
        report.all_match = report.all_match && row.match;
        report.rows.push_back(std::move(row));
    }
    return report;
}

void strata_report_csv(const StrataReport& report, std::ostream& out) {
    out << "k,num_lambdas,sum_dim_sq,hilbert_coeff,match\n";
    for (const StrataReport::Row& row : report.rows)
        out << row.k << ',' << row.num_lambdas << ',' << row.sum_dim_sq.str() << ',' << row.hilbert_coeff.str()
            << ',' << (row.match ? 1 : 0) << '\n';
}

BigInt class_size(int n, int r, const RPartition& type) {
    if (type.total_size() != n) throw std::invalid_argument("class label must be an r-partition of n");
    BigInt centralizer = 1;
    for (int c = 0; c < type.r(); ++c) {
        std::map<int, int> multiplicity;
        for (int part : type.component(c)) ++multiplicity[part];
        for (const auto& [part, count] : multiplicity)
            centralizer *= int_pow(BigInt(part), count) * factorial(count);
        centralizer *= int_pow(BigInt(r), static_cast<int>(type.component(c).size()));
    }
    const BigInt order = group_order(n, r);
    const BigInt size = order / centralizer;
    if (size * centralizer != order) throw std::logic_error("centralizer order does not divide the group order");
    return size;
}

BigInt class_size_by_enumeration(int n, int r, const RPartition& type, const BigInt& cap) {
    BigInt count = 0;
    for_each_group_element(n, r, [&](const ColoredPermutation& w) {
        if (cycle_type(w) == type) ++count;
    }, cap);
    return count;
}

CharacterTable character_table(int n, int r, int max_n, int max_r) {
    if (n > max_n || r > max_r)
        throw size_limit_error("character table bounded to n <= " + std::to_string(max_n) + ", r <= " +
                                   std::to_string(max_r),
                               BigInt(n), BigInt(max_n));
    CharacterTable table;
    table.n = n;
    table.r = r;
    table.labels = enumerate_rpartitions(n, r);
    table.class_sizes.reserve(table.labels.size());
    for (const RPartition& type : table.labels)
        table.class_sizes.push_back(n <= 4 ? class_size_by_enumeration(n, r, type) : class_size(n, r, type));
    table.values.reserve(table.labels.size());
    for (const RPartition& lam : table.labels) {
        std::vector<CharacterValue> row;
        row.reserve(table.labels.size());
        const SkewRShape shape = SkewRShape::straight(lam);
        for (const RPartition& type : table.labels) row.push_back(mn_character(shape, class_cycles(type)));
        table.values.push_back(std::move(row));
    }
    return table;
}

std::string character_table_json(const CharacterTable& table) {
    nlohmann::json j;
    j["schema"] = 1;
    j["n"] = table.n;
    j["r"] = table.r;
    j["modulus"] = table.r;
    nlohmann::json labels = nlohmann::json::array();
    for (const RPartition& lam : table.labels) {
        nlohmann::json components = nlohmann::json::array();
        for (const std::vector<int>& comp : lam.components()) components.push_back(comp);
        labels.push_back(components);
    }
    j["labels"] = labels;
    nlohmann::json sizes = nlohmann::json::array();
    for (const BigInt& s : table.class_sizes) sizes.push_back(s.str());
    j["class_sizes"] = sizes;
    nlohmann::json values = nlohmann::json::array();
    for (const std::vector<CharacterValue>& row : table.values) {
        nlohmann::json jrow = nlohmann::json::array();
        for (const CharacterValue& v : row) {
            nlohmann::json coords = nlohmann::json::array();
            for (const BigRational& c : v.coords())
                coords.push_back(numerator(c).str() + "/" + denominator(c).str());
            jrow.push_back(coords);
        }
        values.push_back(jrow);
    }
    j["values"] = values;
    return j.dump(2);
}

}  // namespace cperm
