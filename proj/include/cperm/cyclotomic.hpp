#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cperm/core.hpp"
#include "cperm/shadow.hpp"

namespace cperm {

/// Coefficients (constant term first) of the r-th cyclotomic polynomial,
/// obtained by exact division of x^r - 1 by the proper-divisor factors.
std::vector<BigInt> cyclotomic_poly(int r);

/// Element of the cyclotomic field of order r, stored as rational coordinates
/// on the power basis 1, w, ..., w^{phi(r)-1} reduced mod the r-th cyclotomic
/// polynomial. No floating point anywhere.
class CyclotomicNumber {
public:
    CyclotomicNumber() : CyclotomicNumber(1) {}
    explicit CyclotomicNumber(int r);  // zero of the field of order r

    static CyclotomicNumber zero(int r) { return CyclotomicNumber(r); }
    static CyclotomicNumber one(int r) { return from_rational(r, 1); }
    static CyclotomicNumber from_rational(int r, BigRational value);
    /// w^k for w the primitive r-th root of unity; k may be any integer.
    static CyclotomicNumber root_of_unity(int r, long k);
    static CyclotomicNumber from_coords(int r, std::vector<BigRational> coords);

    int modulus() const { return r_; }
    const std::vector<BigRational>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    /// The coordinate on 1; meaningful unconditionally, the whole value iff is_rational().
    const BigRational& rational_coord() const { return coords_[0]; }

    CyclotomicNumber operator+(const CyclotomicNumber& rhs) const;
    CyclotomicNumber operator-(const CyclotomicNumber& rhs) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber operator*(const CyclotomicNumber& rhs) const;
    CyclotomicNumber operator/(const CyclotomicNumber& rhs) const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs) { return *this = *this + rhs; }
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs) { return *this = *this - rhs; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs) { return *this = *this * rhs; }

    CyclotomicNumber inverse() const;  // throws on zero
    /// Field conjugation w -> w^{-1}; complex conjugation on the root-of-unity model.
    CyclotomicNumber conjugate() const;
    CyclotomicNumber pow(int e) const;

    bool operator==(const CyclotomicNumber&) const = default;

    /// Coordinates as `a0/b0,a1/b1,...`.
    std::string to_string() const;

private:
    int r_;
    std::vector<BigRational> coords_;
};

/// Dense matrix over a single cyclotomic field.
class ExactMatrix {
public:
    ExactMatrix(std::size_t rows, std::size_t cols, int r);

    static ExactMatrix identity(std::size_t n, int r);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int modulus() const { return r_; }

    CyclotomicNumber& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const CyclotomicNumber& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    ExactMatrix operator*(const ExactMatrix& rhs) const;
    bool operator==(const ExactMatrix&) const = default;

    /// Forward Gaussian elimination over the field; true iff full rank.
    /// Pivot rows are chosen largest-coordinate-support first.
    bool invertible() const;
    /// Full Gauss-Jordan inverse; empty when singular.
    std::optional<ExactMatrix> inverse() const;

    /// Plain-text exact format: `rows cols modulus` header, then one line per
    /// row with cells separated by spaces, each cell `a0/b0,a1/b1,...`.
    std::string to_text() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    int r_;
    std::vector<CyclotomicNumber> entries_;
};

/// Matrix model of a colored permutation: entry (i, sigma(i)) holds w^{color}.
ExactMatrix group_matrix(const ColoredPermutation& w);

struct MonomialKey {
    std::map<GridPoint, int> exponents;  // (row, col) -> exponent > 0

    int degree() const;
    MonomialKey operator*(const MonomialKey& rhs) const;
    std::string to_string() const;

    bool operator==(const MonomialKey&) const = default;
};

MonomialKey monomial_key(const ShadowMonomial& m);

/// Point evaluation: product over the support of matrix entries raised to the
/// exponents; the empty product is 1.
CyclotomicNumber evaluate_monomial(const MonomialKey& m, const ExactMatrix& point);

/// Lexicographic comparison with variables ordered by antidiagonal i+j
/// ascending, then row descending: x[1,1] > x[2,1] > x[1,2] > x[3,1] > ...
std::strong_ordering toeplitz_compare(const MonomialKey& a, const MonomialKey& b);

struct BasisCertificate {
    bool invertible = false;
    std::size_t matrix_size = 0;
    bool duplicate_monomials = false;  // falsification: two elements shared a monomial
};

inline BigInt default_basis_cap() { return BigInt(200); }

/// Builds the square evaluation matrix of all shadow monomials at all group
/// matrices and certifies invertibility by exact elimination. Invertibility
/// plus the size count r^n*n! certifies the monomials form a basis of the
/// functions on the group.
BasisCertificate verify_basis(int n, int r, const BigInt& cap = default_basis_cap());

/// The evaluation matrix itself (rows: group elements in enumeration order,
/// columns: their shadow monomials in the same order).
ExactMatrix evaluation_matrix(int n, int r, const BigInt& cap = default_basis_cap());

/// Integer-coefficient polynomial as a named list of terms; enough structure
/// for generator listings, printing and point evaluation.
struct GeneratorPoly {
    std::string name;
    std::vector<std::pair<BigInt, MonomialKey>> terms;

    std::string to_string() const;  // e.g. `x[1,1]^3 - x[1,1]`
    CyclotomicNumber evaluate(const ExactMatrix& point) const;
};

/// The five homogeneous generator families of the graded ideal: (r+1)-th
/// powers, same-row products, same-column products, row sums of r-th powers,
/// column sums of r-th powers.
std::vector<GeneratorPoly> ideal_generators(int n, int r);

/// Generators of the inhomogeneous vanishing ideal of the group locus:
/// x^{r+1} - x, the same products, and the power sums minus 1.
std::vector<GeneratorPoly> vanishing_generators(int n, int r);

}  // namespace cperm
