#include "cperm/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace cperm {

namespace {

// Integer polynomial helpers, coefficients constant-term first.
using IntPoly = std::vector<BigInt>;

IntPoly poly_trim(IntPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// Exact division by a monic divisor.
IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
    num = poly_trim(num);
    if (den.empty() || den.back() != 1) throw std::logic_error("divisor must be monic");
    if (num.size() < den.size()) {
        if (!num.empty()) throw std::logic_error("inexact polynomial division");
        return {};
    }
    IntPoly quot(num.size() - den.size() + 1, BigInt(0));
    for (std::size_t k = quot.size(); k-- > 0;) {
        const BigInt c = num[k + den.size() - 1];
        quot[k] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
    }
    for (const BigInt& c : num)
        if (c != 0) throw std::logic_error("inexact polynomial division");
    return quot;
}

struct FieldData {
    int r = 1;
    IntPoly phi;                               // cyclotomic polynomial, monic
    std::size_t degree = 1;                    // phi(r)
    std::vector<std::vector<BigInt>> red_pow;  // x^k mod phi for k = 0 .. max needed
};

const FieldData& field_data(int r) {
    static std::mutex mutex;
    static std::map<int, FieldData> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(r);
    if (it != cache.end()) return it->second;

    FieldData data;
    data.r = r;
    data.phi = cyclotomic_poly(r);
    data.degree = data.phi.size() - 1;
    const std::size_t max_pow = std::max(2 * data.degree, static_cast<std::size_t>(r)) + 1;
    data.red_pow.resize(max_pow + 1);
    std::vector<BigInt> cur(data.degree, BigInt(0));
    cur[0] = 1;
    data.red_pow[0] = cur;
    for (std::size_t k = 1; k <= max_pow; ++k) {
        // multiply by x, then reduce the overflow coefficient with x^deg = -(lower part)
        BigInt overflow = data.degree ? cur.back() : BigInt(0);
        for (std::size_t i = data.degree; i-- > 1;) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (overflow != 0)
            for (std::size_t i = 0; i < data.degree; ++i) cur[i] -= overflow * data.phi[i];
        data.red_pow[k] = cur;
    }
    return cache.emplace(r, std::move(data)).first->second;
}

}  // namespace

std::vector<BigInt> cyclotomic_poly(int r) {
    if (r < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
    static std::mutex mutex;
    static std::map<int, IntPoly> cache;
    std::lock_guard<std::mutex> lock(mutex);
    const std::function<const IntPoly&(int)> compute = [&](int m) -> const IntPoly& {
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
        IntPoly num(static_cast<std::size_t>(m) + 1, BigInt(0));
        num[0] = -1;
        num[static_cast<std::size_t>(m)] = 1;  // x^m - 1
        IntPoly den{1};
        for (int d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            const IntPoly& phi_d = compute(d);
            IntPoly prod(den.size() + phi_d.size() - 1, BigInt(0));
            for (std::size_t i = 0; i < den.size(); ++i)
                for (std::size_t j = 0; j < phi_d.size(); ++j) prod[i + j] += den[i] * phi_d[j];
            den = std::move(prod);
        }
        return cache.emplace(m, poly_div_exact(std::move(num), den)).first->second;
    };
    return compute(r);
}

CyclotomicNumber::CyclotomicNumber(int r) : r_(r) {
    coords_.assign(field_data(r).degree, BigRational(0));
}

CyclotomicNumber CyclotomicNumber::from_rational(int r, BigRational value) {
    CyclotomicNumber x(r);
    x.coords_[0] = std::move(value);
    return x;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(int r, long k) {
    const FieldData& field = field_data(r);
    long e = k % r;
    if (e < 0) e += r;
    CyclotomicNumber x(r);
    const std::vector<BigInt>& red = field.red_pow[static_cast<std::size_t>(e)];
    for (std::size_t i = 0; i < field.degree; ++i) x.coords_[i] = BigRational(red[i]);
    return x;
}

CyclotomicNumber CyclotomicNumber::from_coords(int r, std::vector<BigRational> coords) {
    CyclotomicNumber x(r);
    if (coords.size() != x.coords_.size()) throw std::invalid_argument("coordinate vector has wrong length");
    x.coords_ = std::move(coords);
    return x;
}

bool CyclotomicNumber::is_zero() const {
    for (const BigRational& c : coords_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& rhs) const {
    if (r_ != rhs.r_) throw std::invalid_argument("mixed cyclotomic moduli");
    CyclotomicNumber out(r_);
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = coords_[i] + rhs.coords_[i];
    return out;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& rhs) const {
    if (r_ != rhs.r_) throw std::invalid_argument("mixed cyclotomic moduli");
    CyclotomicNumber out(r_);
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = coords_[i] - rhs.coords_[i];
    return out;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out(r_);
    for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = -coords_[i];
    return out;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& rhs) const {
    if (r_ != rhs.r_) throw std::invalid_argument("mixed cyclotomic moduli");
    const FieldData& field = field_data(r_);
    const std::size_t deg = field.degree;
    std::vector<BigRational> prod(2 * deg - 1, BigRational(0));
    for (std::size_t i = 0; i < deg; ++i) {
        if (coords_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j) {
            if (rhs.coords_[j] == 0) continue;
            prod[i + j] += coords_[i] * rhs.coords_[j];
        }
    }
    CyclotomicNumber out(r_);
    for (std::size_t i = 0; i < deg; ++i) out.coords_[i] = prod[i];
    for (std::size_t k = deg; k < prod.size(); ++k) {
        if (prod[k] == 0) continue;
        const std::vector<BigInt>& red = field.red_pow[k];
        for (std::size_t i = 0; i < deg; ++i)
            if (red[i] != 0) out.coords_[i] += prod[k] * BigRational(red[i]);
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::operator/(const CyclotomicNumber& rhs) const { return *this * rhs.inverse(); }

namespace {

using RatPoly = std::vector<BigRational>;

// Index one past the leading nonzero coefficient; 0 for the zero polynomial.
std::size_t rat_len(const RatPoly& p) {
    std::size_t d = p.size();
    while (d > 0 && p[d - 1] == 0) --d;
    return d;
}

// num = quot * den + rem with deg(rem) < deg(den); den nonzero.
std::pair<RatPoly, RatPoly> rat_divmod(RatPoly num, const RatPoly& den) {
    const std::size_t dlen = rat_len(den);
    if (dlen == 0) throw std::logic_error("polynomial division by zero");
    RatPoly quot;
    std::size_t nlen = rat_len(num);
    while (nlen >= dlen) {
        const std::size_t shift = nlen - dlen;
        const BigRational factor = num[nlen - 1] / den[dlen - 1];
        if (quot.size() < shift + 1) quot.resize(shift + 1, BigRational(0));
        quot[shift] += factor;
        for (std::size_t i = 0; i < dlen; ++i) num[i + shift] -= factor * den[i];
        num[nlen - 1] = 0;  // kill rounding-free leading term exactly
        nlen = rat_len(num);
    }
    return {std::move(quot), std::move(num)};
}

RatPoly rat_mul(const RatPoly& a, const RatPoly& b) {
    if (rat_len(a) == 0 || rat_len(b) == 0) return {};
    RatPoly prod(a.size() + b.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
    }
    return prod;
}

RatPoly rat_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), BigRational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return a;
}

}  // namespace

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in the cyclotomic field");
    if (is_rational()) {
        CyclotomicNumber out(r_);
        out.coords_[0] = 1 / coords_[0];
        return out;
    }
    const FieldData& field = field_data(r_);
    // Extended Euclid in Q[x]: maintain r_k == s_k * this (mod phi); when the
    // remainder becomes a nonzero constant c, the inverse is s_k / c.
    RatPoly r0(field.phi.size());
    for (std::size_t i = 0; i < field.phi.size(); ++i) r0[i] = BigRational(field.phi[i]);
    RatPoly r1 = coords_;
    RatPoly s0{BigRational(0)};
    RatPoly s1{BigRational(1)};
    while (rat_len(r1) > 0) {
        auto [quot, rem] = rat_divmod(r0, r1);
        RatPoly s2 = rat_sub(s0, rat_mul(quot, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (rat_len(r0) != 1) throw std::logic_error("modulus not coprime to a nonzero element");
    const BigRational g = r0[0];
    CyclotomicNumber out(r_);
    for (std::size_t i = 0; i < s0.size(); ++i) {
        if (s0[i] == 0) continue;
        if (i >= out.coords_.size()) throw std::logic_error("inverse exceeded the field degree");
        out.coords_[i] = s0[i] / g;
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
    CyclotomicNumber out(r_);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0) continue;
        CyclotomicNumber term = root_of_unity(r_, -static_cast<long>(i));
        for (std::size_t j = 0; j < out.coords_.size(); ++j) out.coords_[j] += coords_[i] * term.coords_[j];
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    CyclotomicNumber acc = one(r_);
    CyclotomicNumber base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out << ',';
        out << numerator(coords_[i]).str() << '/' << denominator(coords_[i]).str();
    }
    return out.str();
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, int r)
    : rows_(rows), cols_(cols), r_(r), entries_(rows * cols, CyclotomicNumber(r)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, int r) {
    ExactMatrix m(n, n, r);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = CyclotomicNumber::one(r);
    return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
    if (cols_ != rhs.rows_ || r_ != rhs.r_) throw std::invalid_argument("matrix shape mismatch");
    ExactMatrix out(rows_, rhs.cols_, r_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const CyclotomicNumber& left = at(i, k);
            if (left.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const CyclotomicNumber& right = rhs.at(k, j);
                if (right.is_zero()) continue;
                out.at(i, j) += left * right;
            }
        }
    return out;
}

namespace {

std::size_t coordinate_support(const CyclotomicNumber& x) {
    std::size_t s = 0;
    for (const BigRational& c : x.coords())
        if (c != 0) ++s;
    return s;
}

}  // namespace

bool ExactMatrix::invertible() const {
    if (rows_ != cols_) return false;
    ExactMatrix m = *this;
    const std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        std::size_t best_support = 0;
        for (std::size_t row = col; row < n; ++row) {
            const std::size_t support = coordinate_support(m.at(row, col));
            if (support > best_support) {
                best_support = support;
                pivot = row;
            }
        }
        if (pivot == n) return false;
        if (pivot != col)
            for (std::size_t j = col; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
        const CyclotomicNumber inv = m.at(col, col).inverse();
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m.at(row, col).is_zero()) continue;
            const CyclotomicNumber factor = m.at(row, col) * inv;
            m.at(row, col) = CyclotomicNumber::zero(r_);
            for (std::size_t j = col + 1; j < n; ++j) {
                if (m.at(col, j).is_zero()) continue;
                m.at(row, j) -= factor * m.at(col, j);
            }
        }
    }
    return true;
}

std::optional<ExactMatrix> ExactMatrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    ExactMatrix m = *this;
    ExactMatrix inv = identity(rows_, r_);
    const std::size_t n = rows_;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        std::size_t best_support = 0;
        for (std::size_t row = col; row < n; ++row) {
            const std::size_t support = coordinate_support(m.at(row, col));
            if (support > best_support) {
                best_support = support;
                pivot = row;
            }
        }
        if (pivot == n) return std::nullopt;
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        const CyclotomicNumber scale = m.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) = m.at(col, j) * scale;
            inv.at(col, j) = inv.at(col, j) * scale;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m.at(row, col).is_zero()) continue;
            const CyclotomicNumber factor = m.at(row, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(row, j) -= factor * m.at(col, j);
                inv.at(row, j) -= factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string ExactMatrix::to_text() const {
    std::ostringstream out;
    out << rows_ << ' ' << cols_ << ' ' << r_ << '\n';
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) out << ' ';
            out << at(i, j).to_string();
        }
        out << '\n';
    }
    return out.str();
}

ExactMatrix group_matrix(const ColoredPermutation& w) {
    const int n = w.n();
    ExactMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), w.r());
    for (int i = 1; i <= n; ++i) {
        const int j = w.sigma()(i);
        m.at(static_cast<std::size_t>(i) - 1, static_cast<std::size_t>(j) - 1) =
            CyclotomicNumber::root_of_unity(w.r(), w.color(j));
    }
    return m;
}

int MonomialKey::degree() const {
    int d = 0;
    for (const auto& [p, e] : exponents) d += e;
    return d;
}

MonomialKey MonomialKey::operator*(const MonomialKey& rhs) const {
    MonomialKey out = *this;
    for (const auto& [p, e] : rhs.exponents) out.exponents[p] += e;
    return out;
}

std::string MonomialKey::to_string() const {
    if (exponents.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, e] : exponents) {
        if (!first) out << '*';
        first = false;
        out << "x[" << p.row << ',' << p.col << ']';
        if (e != 1) out << '^' << e;
    }
    return out.str();
}

MonomialKey monomial_key(const ShadowMonomial& m) {
    MonomialKey key;
    key.exponents = m.exponents;
    return key;
}

CyclotomicNumber evaluate_monomial(const MonomialKey& m, const ExactMatrix& point) {
    CyclotomicNumber value = CyclotomicNumber::one(point.modulus());
    for (const auto& [p, e] : m.exponents) {
        if (p.row < 1 || p.col < 1 || static_cast<std::size_t>(p.row) > point.rows() ||
            static_cast<std::size_t>(p.col) > point.cols())
            throw std::invalid_argument("monomial variable outside the matrix");
        value = value * point.at(static_cast<std::size_t>(p.row) - 1, static_cast<std::size_t>(p.col) - 1).pow(e);
        if (value.is_zero()) return value;
    }
    return value;
}

std::strong_ordering toeplitz_compare(const MonomialKey& a, const MonomialKey& b) {
    int max_coord = 1;
    for (const auto& [p, e] : a.exponents) max_coord = std::max({max_coord, p.row, p.col});
    for (const auto& [p, e] : b.exponents) max_coord = std::max({max_coord, p.row, p.col});
    const auto exponent_of = [](const MonomialKey& m, GridPoint p) {
        auto it = m.exponents.find(p);
        return it == m.exponents.end() ? 0 : it->second;
    };
    for (int diag = 2; diag <= 2 * max_coord; ++diag) {
        for (int i = std::min(diag - 1, max_coord); i >= std::max(1, diag - max_coord); --i) {
            const GridPoint p{i, diag - i};
            const int ea = exponent_of(a, p);
            const int eb = exponent_of(b, p);
            if (ea != eb) return ea < eb ? std::strong_ordering::less : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

ExactMatrix evaluation_matrix(int n, int r, const BigInt& cap) {
    const BigInt size = group_order(n, r);
    if (size > cap)
        throw size_limit_error("evaluation matrix would have " + size.str() + " rows, cap " + cap.str(), size, cap);
    const std::vector<ColoredPermutation> elements = enumerate_group(n, r, cap);
    std::vector<MonomialKey> monomials;
    monomials.reserve(elements.size());
    for (const ColoredPermutation& v : elements) monomials.push_back(monomial_key(shadow_monomial(v)));
    ExactMatrix e(elements.size(), monomials.size(), r);
    for (std::size_t row = 0; row < elements.size(); ++row) {
        const ExactMatrix point = group_matrix(elements[row]);
        for (std::size_t col = 0; col < monomials.size(); ++col)
            e.at(row, col) = evaluate_monomial(monomials[col], point);
    }
    return e;
}

BasisCertificate verify_basis(int n, int r, const BigInt& cap) {
    const BigInt size = group_order(n, r);
    if (size > cap)
        throw size_limit_error("evaluation matrix would have " + size.str() + " rows, cap " + cap.str(), size, cap);
    const std::vector<ColoredPermutation> elements = enumerate_group(n, r, cap);

    BasisCertificate cert;
    cert.matrix_size = elements.size();

    std::vector<MonomialKey> monomials;
    monomials.reserve(elements.size());
    std::map<std::string, int> seen;
    for (const ColoredPermutation& v : elements) {
        monomials.push_back(monomial_key(shadow_monomial(v)));
        if (++seen[monomials.back().to_string()] > 1) cert.duplicate_monomials = true;
    }
    if (cert.duplicate_monomials) return cert;  // falsification; matrix not meaningful

    ExactMatrix e(elements.size(), monomials.size(), r);
    for (std::size_t row = 0; row < elements.size(); ++row) {
        const ExactMatrix point = group_matrix(elements[row]);
        for (std::size_t col = 0; col < monomials.size(); ++col)
            e.at(row, col) = evaluate_monomial(monomials[col], point);
    }
    cert.invertible = e.invertible();
    return cert;
}

std::string GeneratorPoly::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [coeff, mono] : terms) {
        BigInt c = coeff;
        if (first) {
            if (c < 0) {
                out << '-';
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (mono.exponents.empty())
            out << c.str();
        else if (c == 1)
            out << mono.to_string();
        else
            out << c.str() << '*' << mono.to_string();
    }
    return out.str();
}

CyclotomicNumber GeneratorPoly::evaluate(const ExactMatrix& point) const {
    CyclotomicNumber value = CyclotomicNumber::zero(point.modulus());
    for (const auto& [coeff, mono] : terms)
        value += CyclotomicNumber::from_rational(point.modulus(), BigRational(coeff)) * evaluate_monomial(mono, point);
    return value;
}

namespace {

MonomialKey single_variable(int i, int j, int e) {
    MonomialKey m;
    m.exponents[GridPoint{i, j}] = e;
    return m;
}

std::vector<GeneratorPoly> generator_families(int n, int r, bool vanishing_form) {
    if (n < 0 || r < 1) throw std::invalid_argument("need n >= 0 and r >= 1");
    std::vector<GeneratorPoly> gens;
    const MonomialKey unit;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            GeneratorPoly g;
            g.name = "power[" + std::to_string(i) + "," + std::to_string(j) + "]";
            g.terms.emplace_back(1, single_variable(i, j, r + 1));
            if (vanishing_form) g.terms.emplace_back(-1, single_variable(i, j, 1));
            gens.push_back(std::move(g));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int j2 = j + 1; j2 <= n; ++j2) {
                GeneratorPoly g;
                g.name = "row_product[" + std::to_string(i) + ";" + std::to_string(j) + "," + std::to_string(j2) + "]";
                g.terms.emplace_back(1, single_variable(i, j, 1) * single_variable(i, j2, 1));
                gens.push_back(std::move(g));
            }
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= n; ++i)
            for (int i2 = i + 1; i2 <= n; ++i2) {
                GeneratorPoly g;
                g.name = "col_product[" + std::to_string(j) + ";" + std::to_string(i) + "," + std::to_string(i2) + "]";
                g.terms.emplace_back(1, single_variable(i, j, 1) * single_variable(i2, j, 1));
                gens.push_back(std::move(g));
            }
    for (int i = 1; i <= n; ++i) {
        GeneratorPoly g;
        g.name = "row_power_sum[" + std::to_string(i) + "]";
        for (int j = 1; j <= n; ++j) g.terms.emplace_back(1, single_variable(i, j, r));
        if (vanishing_form) g.terms.emplace_back(-1, unit);
        gens.push_back(std::move(g));
    }
    for (int j = 1; j <= n; ++j) {
        GeneratorPoly g;
        g.name = "col_power_sum[" + std::to_string(j) + "]";
        for (int i = 1; i <= n; ++i) g.terms.emplace_back(1, single_variable(i, j, r));
        if (vanishing_form) g.terms.emplace_back(-1, unit);
        gens.push_back(std::move(g));
    }
    return gens;
}

}  // namespace

std::vector<GeneratorPoly> ideal_generators(int n, int r) { return generator_families(n, r, false); }

std::vector<GeneratorPoly> vanishing_generators(int n, int r) { return generator_families(n, r, true); }

}  // namespace cperm
