#include "cperm/shadow.hpp"

#include <algorithm>
#include <sstream>

namespace cperm {

ShadowDecomposition shadow_lines(const RookPlacement& points) {
    ShadowDecomposition out;
    std::vector<int> minima;  // current minimum y per line; ascending across lines
    std::vector<GridPoint> corners;
    for (const GridPoint& p : points.points()) {
        auto it = std::upper_bound(minima.begin(), minima.end(), p.col);
        if (it == minima.end()) {
            minima.push_back(p.col);
            out.lines.push_back(ShadowLine{{p}, {}});
        } else {
            const std::size_t idx = static_cast<std::size_t>(it - minima.begin());
            corners.push_back(GridPoint{p.row, *it});
            out.lines[idx].corners.push_back(corners.back());
            out.lines[idx].points.push_back(p);
            *it = p.col;
        }
    }
    out.shadow_set = RookPlacement(std::move(corners));
    out.horizontal_ray_ys = minima;  // already ascending
    for (const ShadowLine& line : out.lines) out.vertical_ray_xs.push_back(line.points.front().row);
    std::sort(out.vertical_ray_xs.begin(), out.vertical_ray_xs.end());
    return out;
}

std::vector<int> TableauPair::shape_of_p() const {
    std::vector<int> shape;
    shape.reserve(P.size());
    for (const std::vector<int>& row : P) shape.push_back(static_cast<int>(row.size()));
    return shape;
}

namespace {

bool tableau_standard(const std::vector<std::vector<int>>& t) {
    int n = 0;
    for (const std::vector<int>& row : t) n += static_cast<int>(row.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i].empty()) return false;
        if (i > 0 && t[i].size() > t[i - 1].size()) return false;
        for (std::size_t j = 0; j < t[i].size(); ++j) {
            const int v = t[i][j];
            if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1]) return false;
            seen[static_cast<std::size_t>(v) - 1] = true;
            if (j > 0 && t[i][j - 1] >= v) return false;
            if (i > 0 && t[i - 1][j] >= v) return false;
        }
    }
    return true;
}

}  // namespace

bool TableauPair::is_standard() const {
    std::vector<int> shape_q;
    shape_q.reserve(Q.size());
    for (const std::vector<int>& row : Q) shape_q.push_back(static_cast<int>(row.size()));
    return shape_of_p() == shape_q && tableau_standard(P) && tableau_standard(Q);
}

TableauPair iterated_shadows(const RookPlacement& points) {
    TableauPair result;
    RookPlacement current = points;
    while (!current.empty()) {
        ShadowDecomposition dec = shadow_lines(current);
        result.P.push_back(dec.horizontal_ray_ys);
        result.Q.push_back(dec.vertical_ray_xs);
        current = dec.shadow_set;
    }
    return result;
}

TableauPair schensted_insert(const Permutation& w) {
    TableauPair t;
    for (int i = 1; i <= w.n(); ++i) {
        int v = w(i);
        std::size_t row = 0;
        while (true) {
            if (row == t.P.size()) {
                t.P.push_back({v});
                t.Q.push_back({i});
                break;
            }
            auto it = std::upper_bound(t.P[row].begin(), t.P[row].end(), v);
            if (it == t.P[row].end()) {
                t.P[row].push_back(v);
                t.Q[row].push_back(i);
                break;
            }
            std::swap(*it, v);  // bump the displaced entry to the next row
            ++row;
        }
    }
    return t;
}

int ShadowMonomial::degree() const {
    int d = 0;
    for (const auto& [point, exp] : exponents) d += exp;
    return d;
}

std::string ShadowMonomial::to_string() const {
    if (exponents.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [point, exp] : exponents) {
        if (!first) out << '*';
        first = false;
        out << "x[" << point.row << ',' << point.col << ']';
        if (exp != 1) out << '^' << exp;
    }
    return out.str();
}

ShadowMonomial shadow_monomial(const ColoredPermutation& w) {
    const ColoredDiagram d = diagram(w);
    const int r = w.r();
    ShadowMonomial m;
    for (int l = 1; l < r; ++l)
        for (const GridPoint& p : d.layers[static_cast<std::size_t>(l)].points()) m.exponents[p] = l;
    const ShadowDecomposition dec = shadow_lines(d.layers[0]);
    for (const GridPoint& p : dec.shadow_set.points()) m.exponents[p] = r;
    return m;
}

}  // namespace cperm
