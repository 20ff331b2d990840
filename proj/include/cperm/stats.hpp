#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cperm/core.hpp"
#include "cperm/shadow.hpp"

namespace cperm {

/// Longest chain of points increasing in both coordinates; patience sorting
/// on the column sequence after sorting by row. lis of an empty set is 0.
int lis_points(const RookPlacement& points);

/// Count of standard Young tableaux of a single shape, n!/prod(hooks).
BigInt syt_count(const std::vector<int>& partition);

/// Distribution of lis over permutations of j: entry l holds the number of
/// permutations with lis = l, computed from the squared tableau counts.
/// Cached per j.
const std::vector<BigInt>& lis_distribution(int j);

struct StatTable {
    char kind = 'a';  // 'a', 'b' or 'c'
    int n = 0;
    int r = 1;
    std::map<long, BigInt> values;  // nonzero counts only

    BigInt at(long k) const;
    BigInt total() const;
    /// Largest statistic value in the table's domain: n, 2n or rn.
    long k_max() const;
};

// Exhaustive-enumeration counting paths. threads = 0 picks a worker per core.
StatTable count_a(int n, int threads = 1, const BigInt& cap = default_enumeration_cap());
StatTable count_b(int n, int threads = 1, const BigInt& cap = default_enumeration_cap());
StatTable count_c(int n, int r, int threads = 1, const BigInt& cap = default_enumeration_cap());

inline constexpr int default_fast_n_limit = 64;

/// Closed-form counting path built from tableau counts and independent
/// row/column/color choices for the colored layers. Must agree with the
/// enumeration path; the test suite pins that down before anything trusts it.
StatTable count_fast(char kind, int n, int r = 0, int n_limit = default_fast_n_limit);

struct GradedSeries {
    int n = 0;
    int r = 1;
    std::vector<BigInt> coeffs;  // index d = coefficient of q^d

    BigInt sum() const;
    std::string to_string() const;
};

enum class SeriesPath { enumerate_path, fast_path };

/// Hilbert series of the graded quotient: coefficient of q^d counts group
/// elements whose statistic equals rn - d.
GradedSeries hilbert_series(int n, int r, SeriesPath path, int threads = 1,
                            const BigInt& cap = default_enumeration_cap(),
                            int n_limit = default_fast_n_limit);

struct LogConcavityReport {
    // Indices k (in the sequence's own labelling) where value(k)^2 < value(k-1)*value(k+1).
    std::vector<long> violations;
    long support_lo = 0;
    long support_hi = -1;  // empty support when hi < lo

    bool log_concave() const { return violations.empty(); }
};

LogConcavityReport check_log_concave(const std::vector<std::pair<long, BigInt>>& labelled);
LogConcavityReport check_log_concave(const StatTable& table);
LogConcavityReport check_log_concave(const GradedSeries& series);

struct UnimodalityReport {
    bool unimodal = true;
    std::optional<long> peak;                        // label of the first maximum
    std::optional<std::pair<long, long>> witness;    // labels of a rise after a fall
};

UnimodalityReport check_unimodal(const std::vector<std::pair<long, BigInt>>& labelled);
UnimodalityReport check_unimodal(const StatTable& table);
UnimodalityReport check_unimodal(const GradedSeries& series);

/// Two-column CSV `k,count` over the table's full domain 1..k_max, zeros included.
void histogram_csv(const StatTable& table, std::ostream& out);
void histogram_csv(const StatTable& table, const std::string& path);

/// Hilbert coefficients reported elsewhere for the signed group at n = 3,
/// kept for cross-checking; the enumeration path is the authority.
inline constexpr std::array<long, 5> reported_signed_series_n3 = {1, 9, 22, 9, 1};

}  // namespace cperm
