#pragma once

// Integer matrices, Smith normal form and kernel lattices.

#include "toric/numeric.hpp"

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toric {

/// Dense row-major matrix of big integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ExponentVector column(std::size_t j) const;
    ExponentVector row(std::size_t i) const;
    /// Keeps only the listed columns, in order.
    IntMatrix select_columns(const IndexSet& cols) const;
    IntMatrix transpose() const;

    /// Largest bit length of any entry.
    std::size_t max_bit_length() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Matrix times column vector.
ExponentVector operator*(const IntMatrix& m, const ExponentVector& x);

/// Text format: a header line "d n" followed by d rows of n integers.
/// Parse errors name the offending line.
IntMatrix parse_matrix(std::string_view text);
std::string format_matrix(const IntMatrix& m);

/// U * M * W = D with U, W unimodular and D diagonal, D(i,i) > 0 for
/// i < rank and D(i,i) | D(i+1,i+1).
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix W;
    std::size_t rank = 0;
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
BigInt determinant(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Basis of ker(M_S) ∩ Z^|S|; vectors have length |S| and follow the order
/// of S.  Each vector has a positive leading nonzero entry.
using LatticeBasis = std::vector<ExponentVector>;
LatticeBasis kernel_lattice_basis(const IntMatrix& m, const IndexSet& support);

/// Embeds a vector indexed by S into Z^n (zeros off S).
ExponentVector lift_to_ambient(const ExponentVector& local, const IndexSet& support, std::size_t n);

/// Integer coefficients y with sum_k y_k basis[k] = x, if they exist.
std::optional<std::vector<BigInt>> integer_coordinates(const LatticeBasis& basis, const ExponentVector& x);

}  // namespace toric
