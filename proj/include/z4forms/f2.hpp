#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace z4 {

/// Maximum dimension of an F2Vector (one machine word of coordinates).
inline constexpr std::size_t kMaxVectorDim = 32;

/// Largest ambient dimension accepted by subspace enumeration.
inline constexpr std::size_t kSubspaceEnumerationGuard = 12;

/// A vector over the two-element field. Coordinate i is bit i of the word.
class F2Vector {
public:
    F2Vector() = default;
    explicit F2Vector(std::size_t dim);
    F2Vector(std::size_t dim, std::uint32_t bits);

    static F2Vector basis(std::size_t dim, std::size_t i);
    static F2Vector from_bits(const std::vector<int>& bits);

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
    [[nodiscard]] std::uint32_t bits() const noexcept { return bits_; }
    [[nodiscard]] bool operator[](std::size_t i) const noexcept { return (bits_ >> i) & 1U; }
    [[nodiscard]] bool is_zero() const noexcept { return bits_ == 0; }
    [[nodiscard]] int weight() const noexcept { return std::popcount(bits_); }

    /// Index of the first nonzero coordinate; dim() for the zero vector.
    [[nodiscard]] std::size_t pivot() const noexcept {
        return bits_ == 0 ? dim_ : static_cast<std::size_t>(std::countr_zero(bits_));
    }

    void set(std::size_t i, bool v = true);
    void flip(std::size_t i);

    F2Vector& operator+=(const F2Vector& o);
    friend F2Vector operator+(F2Vector a, const F2Vector& b) { return a += b; }

    [[nodiscard]] std::vector<int> to_bits() const;
    /// Coordinates as a string of '0'/'1', coordinate 0 first.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const F2Vector&, const F2Vector&) = default;
    friend auto operator<=>(const F2Vector& a, const F2Vector& b) {
        if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
        return a.bits_ <=> b.bits_;
    }

private:
    std::uint32_t bits_ = 0;
    std::uint8_t dim_ = 0;
};

/// Standard dot product sum(a_i b_i) mod 2.
bool dot(const F2Vector& a, const F2Vector& b);

/// A dense matrix over the two-element field, stored as rows.
class F2Matrix {
public:
    F2Matrix() = default;
    F2Matrix(std::size_t rows, std::size_t cols);
    F2Matrix(std::size_t cols, std::vector<F2Vector> rows);

    static F2Matrix identity(std::size_t n);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] const F2Vector& row(std::size_t i) const { return rows_.at(i); }
    [[nodiscard]] const std::vector<F2Vector>& row_vectors() const noexcept { return rows_; }
    [[nodiscard]] bool at(std::size_t i, std::size_t j) const { return rows_.at(i)[j]; }
    void set(std::size_t i, std::size_t j, bool v = true);

    /// Matrix-vector product m * x.
    [[nodiscard]] F2Vector apply(const F2Vector& x) const;
    [[nodiscard]] F2Matrix transpose() const;
    [[nodiscard]] bool is_symmetric() const;

    friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<F2Vector> rows_;
};

/// A linear subspace held by its reduced row-echelon basis, sorted by pivot.
/// Two subspaces are equal exactly when their representations are equal.
class Subspace {
public:
    /// The zero subspace of the given ambient dimension.
    explicit Subspace(std::size_t ambient_dim = 0);

    /// Span of arbitrary vectors (dependencies and zeros allowed).
    static Subspace span(std::size_t ambient_dim, const std::vector<F2Vector>& vectors);
    static Subspace full(std::size_t ambient_dim);

    [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_; }
    [[nodiscard]] std::size_t dim() const noexcept { return basis_.size(); }
    [[nodiscard]] const std::vector<F2Vector>& basis() const noexcept { return basis_; }

    [[nodiscard]] bool contains(const F2Vector& x) const;
    /// Calls fn on each of the 2^dim elements, starting with zero.
    void for_each_element(const std::function<void(const F2Vector&)>& fn) const;

    friend bool operator==(const Subspace&, const Subspace&) = default;
    friend auto operator<=>(const Subspace& a, const Subspace& b) {
        if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
        return a.basis_ <=> b.basis_;
    }

private:
    friend class SubspaceBuilder;
    Subspace(std::size_t ambient_dim, std::vector<F2Vector> rref_basis);

    std::size_t ambient_ = 0;
    std::vector<F2Vector> basis_;
};

std::size_t rank(const F2Matrix& m);

/// Some x with m*x = b, free variables set to zero, or nullopt if inconsistent.
std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b);

Subspace kernel_basis(const F2Matrix& m);

/// Number of dim-dimensional subspaces of an ambient_dim-dimensional space.
std::uint64_t gaussian_binomial(std::size_t ambient_dim, std::size_t dim);

/// Visits every dim-dimensional subspace once, in canonical order. The order is:
/// pivot sets in lexicographic order, then for each row (first row outermost) the
/// free entries counted upward as a binary number. Return false from fn to stop.
void for_each_subspace(std::size_t ambient_dim, std::size_t dim,
                       const std::function<bool(const Subspace&)>& fn);

std::vector<Subspace> enumerate_subspaces(std::size_t ambient_dim, std::size_t dim);

/// Canonical-order backtracking over reduced echelon bases. `accept_row` sees each
/// candidate row together with the rows already placed and may reject it; rejected
/// prefixes are not extended. Every subspace whose echelon rows all pass is visited.
void for_each_subspace_pruned(
    std::size_t ambient_dim, std::size_t dim,
    const std::function<bool(const F2Vector& row, const std::vector<F2Vector>& placed)>& accept_row,
    const std::function<bool(const Subspace&)>& fn);

}  // namespace z4
