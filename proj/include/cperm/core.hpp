#pragma once

#include <compare>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cperm/bigint.hpp"

namespace cperm {

/// Thrown when a computation would exceed a configured resource cap.
class size_limit_error : public std::runtime_error {
public:
    size_limit_error(const std::string& what, BigInt requested, BigInt cap)
        : std::runtime_error(what), requested_(std::move(requested)), cap_(std::move(cap)) {}

    const BigInt& requested() const { return requested_; }
    const BigInt& cap() const { return cap_; }

private:
    BigInt requested_;
    BigInt cap_;
};

/// Thrown on malformed textual input; column() is the 1-based offending position.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t column)
        : std::runtime_error(what), column_(column) {}

    std::size_t column() const { return column_; }

private:
    std::size_t column_;
};

inline BigInt default_enumeration_cap() { return BigInt(1000000000); }

/// A permutation of {1..n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);

    int n() const { return static_cast<int>(one_line_.size()); }
    /// Image of position i (1-based).
    int operator()(int i) const { return one_line_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& one_line() const { return one_line_; }

    Permutation inverse() const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

private:
    std::vector<int> one_line_;
};

/// An element of the r-colored permutation group: a permutation together with
/// a color in {0..r-1} attached to every value.
class ColoredPermutation {
public:
    ColoredPermutation() : r_(1) {}
    ColoredPermutation(Permutation sigma, std::vector<int> kappa, int r);

    static ColoredPermutation identity(int n, int r);

    int n() const { return sigma_.n(); }
    int r() const { return r_; }
    const Permutation& sigma() const { return sigma_; }
    /// Color of the value v (1-based).
    int color(int value) const { return kappa_[static_cast<std::size_t>(value) - 1]; }
    const std::vector<int>& kappa() const { return kappa_; }

    /// Composition matching the matrix model: (u * v) acts as u first, then v,
    /// so that the group-matrix map is multiplicative.
    ColoredPermutation operator*(const ColoredPermutation& rhs) const;
    ColoredPermutation inverse() const;

    /// One-line notation `v^c,...`; the `^0` suffix is omitted when r = 1.
    std::string to_string() const;
    /// Parses one-line notation. r = 0 infers the color count from the input
    /// (1 + max color seen). A missing `^c` suffix is read as color 0.
    static ColoredPermutation parse(const std::string& text, int r = 0);

    bool operator==(const ColoredPermutation&) const = default;
    auto operator<=>(const ColoredPermutation&) const = default;

private:
    Permutation sigma_;
    std::vector<int> kappa_;  // kappa_[v-1] = color of value v
    int r_;
};

struct GridPoint {
    int row = 0;
    int col = 0;

    bool operator==(const GridPoint&) const = default;
    auto operator<=>(const GridPoint&) const = default;
};

/// A set of grid points with at most one point per row and per column.
class RookPlacement {
public:
    RookPlacement() = default;
    explicit RookPlacement(std::vector<GridPoint> points);

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    /// Points sorted by row.
    const std::vector<GridPoint>& points() const { return points_; }
    bool contains(GridPoint p) const;

    bool operator==(const RookPlacement&) const = default;

private:
    std::vector<GridPoint> points_;
};

/// The per-color layers C_0(w), ..., C_{r-1}(w) of a colored permutation's diagram.
struct ColoredDiagram {
    int n = 0;
    std::vector<RookPlacement> layers;  // indexed by color

    /// Union of all layers; throws if the layers attack each other.
    RookPlacement union_placement() const;
};

/// An r-tuple of integer partitions with total size n.
class RPartition {
public:
    RPartition() = default;
    explicit RPartition(std::vector<std::vector<int>> components);

    static RPartition empty(int r) { return RPartition(std::vector<std::vector<int>>(static_cast<std::size_t>(r))); }

    int r() const { return static_cast<int>(components_.size()); }
    int total_size() const;
    const std::vector<std::vector<int>>& components() const { return components_; }
    const std::vector<int>& component(int i) const { return components_[static_cast<std::size_t>(i)]; }

    std::string to_string() const;

    bool operator==(const RPartition&) const = default;
    auto operator<=>(const RPartition&) const = default;

private:
    std::vector<std::vector<int>> components_;
};

BigInt group_order(int n, int r);

/// Visits every element of the r-colored permutation group on n letters exactly
/// once, ordered lexicographically by the one-line notation of the underlying
/// permutation and then by the color word (color of value 1 most significant).
/// Refuses to run when r^n * n! exceeds cap.
void for_each_group_element(int n, int r, const std::function<void(const ColoredPermutation&)>& fn,
                            const BigInt& cap = default_enumeration_cap());

/// Same order restricted to elements with sigma(1) = first_value (n >= 1, no cap check).
void for_each_group_element_first_value(int n, int r, int first_value,
                                        const std::function<void(const ColoredPermutation&)>& fn);

std::vector<ColoredPermutation> enumerate_group(int n, int r, const BigInt& cap = default_enumeration_cap());

/// Cycle type: component i collects the lengths of cycles whose colors sum to i mod r.
RPartition cycle_type(const ColoredPermutation& w);

/// Diagram layers: layers[c] = {(i, sigma(i)) : color(sigma(i)) = c}.
ColoredDiagram diagram(const ColoredPermutation& w);

/// Partitions of m in descending lexicographic order: (m) first, (1^m) last.
void for_each_partition(int m, const std::function<void(const std::vector<int>&)>& fn);
std::vector<std::vector<int>> enumerate_partitions(int m);

/// All r-partitions of n; the size of component 0 descends from n to 0, then
/// recursively for later components, partitions of each size in descending lex order.
std::vector<RPartition> enumerate_rpartitions(int n, int r);

/// (lambda^0, lambda^{r-1}, ..., lambda^1); an involution.
RPartition dual_rpartition(const RPartition& lam);

}  // namespace cperm
