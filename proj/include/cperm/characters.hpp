#pragma once

#include <string>
#include <vector>

#include "cperm/core.hpp"
#include "cperm/cyclotomic.hpp"
#include "cperm/stats.hpp"

namespace cperm {

/// Componentwise skew pair of r-partitions; inner contained in outer.
struct SkewRShape {
    RPartition outer;
    RPartition inner;

    SkewRShape(RPartition outer_shape, RPartition inner_shape);
    static SkewRShape straight(RPartition outer_shape);

    int size() const { return outer.total_size() - inner.total_size(); }
};

using CharacterValue = CyclotomicNumber;

struct CyclePart {
    long length = 0;
    int color = 0;

    bool operator==(const CyclePart&) const = default;
    auto operator<=>(const CyclePart&) const = default;
};

/// Cycle data of the conjugacy class labelled by an r-partition: one cycle
/// per part, carrying the component's color.
std::vector<CyclePart> class_cycles(const RPartition& type);

/// Number of standard fillings of the r-shape: a multinomial across the
/// components times the single-shape tableau counts.
BigInt dim_irreducible(const RPartition& lam);

/// Character of the skew shape evaluated on the given cycle data via the
/// ribbon recursion: strip one border strip per cycle from the outer shape,
/// each contributing a sign from its height and a root of unity from the
/// component color paired with the cycle color.
CharacterValue mn_character(const SkewRShape& shape, const std::vector<CyclePart>& cycles);

/// Checks the restriction identity to the product subgroup: the character at a
/// concatenated cycle type equals the sum over sub-r-partitions of size k of
/// products of a straight and a skew character.
bool verify_branching(const RPartition& lam, int k, const std::vector<CyclePart>& g_cycles,
                      const std::vector<CyclePart>& h_cycles);

/// All r-partitions of n whose stratum invariant r*lambda^0_1 + sum_i i*|lambda^i|
/// equals rn - k (first part of an empty component read as 0).
std::vector<RPartition> strata(int n, int r, long k);
/// Cumulative form: invariant >= rn - k.
std::vector<RPartition> strata_at_most(int n, int r, long k);

struct StrataReport {
    struct Row {
        long k = 0;
        std::size_t num_lambdas = 0;
        BigInt sum_dim_sq;
        BigInt hilbert_coeff;
        bool match = false;
    };
    int n = 0;
    int r = 1;
    std::vector<Row> rows;
    bool all_match = true;
};

/// Per-degree comparison of the stratum dimension sums (dim times dual dim)
/// against the Hilbert coefficients.
StrataReport verify_graded_decomposition(int n, int r, SeriesPath path = SeriesPath::enumerate_path,
                                         int threads = 1, const BigInt& cap = default_enumeration_cap());

void strata_report_csv(const StrataReport& report, std::ostream& out);

/// Centralizer-formula class size; validated against enumeration in the tests.
BigInt class_size(int n, int r, const RPartition& type);
/// Exhaustive class size, usable at small n.
BigInt class_size_by_enumeration(int n, int r, const RPartition& type,
                                 const BigInt& cap = default_enumeration_cap());

struct CharacterTable {
    int n = 0;
    int r = 1;
    std::vector<RPartition> labels;  // row order = column order
    std::vector<BigInt> class_sizes;
    std::vector<std::vector<CharacterValue>> values;  // values[irrep][class]
};

/// Full table over all irreducible labels and classes. Class sizes come from
/// enumeration up to n = 4 and from the centralizer formula beyond.
CharacterTable character_table(int n, int r, int max_n = 5, int max_r = 3);

std::string character_table_json(const CharacterTable& table);

}  // namespace cperm
