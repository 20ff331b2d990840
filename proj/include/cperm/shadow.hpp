#pragma once

#include <map>
#include <string>
#include <vector>

#include "cperm/core.hpp"

namespace cperm {

/// One shadow line: its points in increasing x (hence decreasing y) and the
/// NE corner recorded between each pair of consecutive points.
struct ShadowLine {
    std::vector<GridPoint> points;
    std::vector<GridPoint> corners;
};

struct ShadowDecomposition {
    std::vector<ShadowLine> lines;
    RookPlacement shadow_set;            // all corners
    std::vector<int> horizontal_ray_ys;  // sorted min y per line
    std::vector<int> vertical_ray_xs;    // sorted first x per line
};

/// Sweep in increasing x; each point joins the first line whose current
/// minimum y exceeds its own y (recording the NE corner), else opens a new
/// line. Equivalent to tracing the shadow boundaries for a rook placement.
ShadowDecomposition shadow_lines(const RookPlacement& points);

struct TableauPair {
    std::vector<std::vector<int>> P;
    std::vector<std::vector<int>> Q;

    std::vector<int> shape_of_p() const;
    /// Same shape, rows and columns increasing, entries exactly {1..n} in both.
    bool is_standard() const;

    bool operator==(const TableauPair&) const = default;
};

/// Iterates the shadow construction; row k of P / Q collects the horizontal /
/// vertical ray coordinates of the k-th decomposition. On the diagram of a
/// permutation this yields its Schensted pair.
TableauPair iterated_shadows(const RookPlacement& points);

/// Classical row-insertion algorithm; the independent route to the same pair.
TableauPair schensted_insert(const Permutation& w);

/// Monomial attached to a colored permutation: exponent l on every point of
/// layer l (1 <= l <= r-1) and exponent r on the shadow set of layer 0.
struct ShadowMonomial {
    std::map<GridPoint, int> exponents;

    int degree() const;
    /// Sorted factor string such as `x[1,2]*x[3,5]^2`; "1" when empty.
    std::string to_string() const;

    bool operator==(const ShadowMonomial&) const = default;
    bool operator<(const ShadowMonomial& rhs) const { return exponents < rhs.exponents; }
};

ShadowMonomial shadow_monomial(const ColoredPermutation& w);

}  // namespace cperm
