#ifndef EMBKIT_EXACT_LINALG_HPP
#define EMBKIT_EXACT_LINALG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "embkit/errors.hpp"

namespace embkit {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/// Dense matrix of arbitrary-precision integers.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(const IntVector& x) const;
    bool operator==(const IntMatrix& other) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    /// row a += c * row b
    void add_row_multiple(std::size_t a, std::size_t b, const Int& c);
    /// col a += c * col b
    void add_col_multiple(std::size_t a, std::size_t b, const Int& c);
    void negate_row(std::size_t a);
    void negate_col(std::size_t a);

    /// Exact determinant (Bareiss fraction-free elimination); square only.
    Int determinant() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// S = U * A * V with U, V unimodular, S diagonal, entries >= 0 and each
/// diagonal entry dividing the next.
struct SnfDecomposition {
    IntMatrix S;
    IntMatrix U;
    IntMatrix V;

    std::vector<Int> diagonal() const;
    std::size_t rank() const;
};

/// Computes the Smith normal form. The identity S = U*A*V, the diagonal
/// shape and the divisibility chain are verified before returning;
/// violations raise internal_error.
SnfDecomposition smith_normal_form(const IntMatrix& A);

/// Sparse integer matrix, column-major. Rows/cols are fixed at
/// construction; entries default to zero.
class SparseIntMatrix {
  public:
    SparseIntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cols_data_(cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t i, std::size_t j, Int v);
    const std::map<std::size_t, Int>& column(std::size_t j) const { return cols_data_[j]; }

    IntVector operator*(const IntVector& x) const;

    static SparseIntMatrix from_dense(const IntMatrix& A);
    IntMatrix to_dense() const;

  private:
    std::size_t rows_, cols_;
    std::vector<std::map<std::size_t, Int>> cols_data_;
};

/// Decides whether A*x = b has an integer solution and returns a witness
/// when it does. Works on the sparse representation; suitable for the large
/// finger-move systems. The witness is verified exactly before returning.
std::optional<IntVector> solve_integer(const SparseIntMatrix& A, const IntVector& b);

/// Dense convenience wrapper around solve_integer.
bool has_integer_solution(const IntMatrix& A, const IntVector& b, IntVector* witness = nullptr);

/// Dense GF(2) matrix backed by 64-bit words.
class BitMatrix {
  public:
    BitMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t i, std::size_t j, bool v);
    bool get(std::size_t i, std::size_t j) const;

    static BitMatrix from_int_matrix(const IntMatrix& A);

    std::size_t rank() const;
    /// Solves A*x = b over GF(2); returns a witness or nullopt.
    std::optional<std::vector<std::uint8_t>> solve(const std::vector<std::uint8_t>& b) const;

  private:
    std::size_t rows_, cols_, words_per_row_;
    std::vector<std::uint64_t> bits_;
};

std::size_t rank_mod2(const IntMatrix& A);
std::optional<std::vector<std::uint8_t>> solve_mod2(const IntMatrix& A, const IntVector& b);

/// Exact rational solve of a square system; nullopt when A is singular.
std::optional<RatVector> solve_rational(const std::vector<RatVector>& A, const RatVector& b);

/// Exact determinant of a square rational matrix.
Rat determinant_rational(const std::vector<RatVector>& A);

} // namespace embkit

#endif
