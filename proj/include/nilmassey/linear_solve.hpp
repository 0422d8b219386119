#pragma once

// Exact linear systems over Z/m. Elimination runs over each prime-power factor
// Z/p^a with minimal-valuation (full) pivoting, which brings the matrix to an
// echelon form whose pivots divide everything to their right. That form
// decides solvability exactly and also yields canonical cokernel coordinates.

#include <cstdint>
#include <optional>
#include <vector>

#include "nilmassey/coeffs.hpp"

namespace nilmassey {

/// Dense row-major matrix of residues.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  uint32_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  uint32_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  uint32_t* row(std::size_t r) { return data_.data() + r * cols_; }
  const uint32_t* row(std::size_t r) const { return data_.data() + r * cols_; }

  static ModMatrix identity(std::size_t n);

 private:
  std::size_t rows_, cols_;
  std::vector<uint32_t> data_;
};

/// Factorizes A once; solves A x = b for any number of right-hand sides.
class LinearSolver {
 public:
  /// Entries of A must already be reduced modulo `mod`.
  LinearSolver(const ModMatrix& a, Modulus mod);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Modulus& modulus() const { return mod_; }

  /// Some x with A x = b, or nullopt. Throws DimensionMismatch if b has the
  /// wrong length.
  std::optional<std::vector<uint32_t>> solve(const std::vector<uint32_t>& b) const;

  /// Coordinates of b in coker(A); all zero iff b lies in the image.
  std::vector<uint32_t> cokernel_coordinates(const std::vector<uint32_t>& b) const;

  /// Rank over each prime-power factor, in factorization order.
  std::vector<std::size_t> ranks() const;

 private:
  struct RowOp {
    uint32_t target;
    uint32_t source;  // source == target encodes a swap with `factor` as partner
    uint32_t factor;
    bool swap;
  };
  struct Echelon {
    PrimePower pp;
    ModMatrix w{0, 0};
    std::vector<RowOp> ops;
    std::vector<uint32_t> col_perm;
    std::vector<uint32_t> pivot_val;      // valuation of each pivot
    std::vector<uint32_t> pivot_unit_inv;  // inverse of the unit part
    std::size_t rank = 0;
  };

  static Echelon eliminate(const ModMatrix& a, const PrimePower& pp);
  static std::vector<uint32_t> transform(const Echelon& e, const std::vector<uint32_t>& b);
  static std::optional<std::vector<uint32_t>> solve_one(const Echelon& e,
                                                        const std::vector<uint32_t>& b);

  std::size_t rows_, cols_;
  Modulus mod_;
  std::vector<Echelon> parts_;
};

/// Solve A x = b over Z/p^a. Throws InvalidArgument if `mod` is not a prime
/// power and DimensionMismatch on shape errors.
std::optional<std::vector<uint32_t>> solve_linear(const ModMatrix& a, const std::vector<uint32_t>& b,
                                                  const Modulus& mod);

/// Same for general m (CRT-split internally).
std::optional<std::vector<uint32_t>> solve_mod(const ModMatrix& a, const std::vector<uint32_t>& b,
                                               const Modulus& mod);

}  // namespace nilmassey
