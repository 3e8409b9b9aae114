#include "z4forms/f2.hpp"

#include <algorithm>
#include <numeric>

#include "z4forms/errors.hpp"

namespace z4 {

namespace {

void check_dim(std::size_t dim) {
    if (dim > kMaxVectorDim) {
        throw ContractViolation("vector dimension " + std::to_string(dim) + " exceeds " +
                                std::to_string(kMaxVectorDim));
    }
}

std::uint32_t low_mask(std::size_t dim) {
    return dim >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << dim) - 1U);
}

// In-place reduction to reduced row-echelon form (pivot = lowest set coordinate).
// Returns the pivot column of each nonzero row, in row order; zero rows are dropped.
std::vector<std::size_t> reduce(std::vector<F2Vector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(r), rows.end(),
                               [col](const F2Vector& v) { return v[col]; });
        if (it == rows.end()) continue;
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(r), it);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i != r && rows[i][col]) rows[i] += rows[r];
        }
        pivots.push_back(col);
        ++r;
    }
    rows.resize(r);
    return pivots;
}

}  // namespace

class SubspaceBuilder {
public:
    static Subspace make(std::size_t ambient, std::vector<F2Vector> rref) {
        return Subspace(ambient, std::move(rref));
    }
};

F2Vector::F2Vector(std::size_t dim) : dim_(static_cast<std::uint8_t>(dim)) { check_dim(dim); }

F2Vector::F2Vector(std::size_t dim, std::uint32_t bits)
    : bits_(bits), dim_(static_cast<std::uint8_t>(dim)) {
    check_dim(dim);
    if ((bits & ~low_mask(dim)) != 0) {
        throw ContractViolation("bit pattern has coordinates beyond dimension " + std::to_string(dim));
    }
}

F2Vector F2Vector::basis(std::size_t dim, std::size_t i) {
    if (i >= dim) throw ContractViolation("basis index out of range");
    return F2Vector(dim, std::uint32_t{1} << i);
}

F2Vector F2Vector::from_bits(const std::vector<int>& bits) {
    F2Vector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw ContractViolation("bit entries must be 0 or 1");
        v.set(i, bits[i] == 1);
    }
    return v;
}

void F2Vector::set(std::size_t i, bool v) {
    if (i >= dim_) throw ContractViolation("coordinate index out of range");
    if (v) {
        bits_ |= (std::uint32_t{1} << i);
    } else {
        bits_ &= ~(std::uint32_t{1} << i);
    }
}

void F2Vector::flip(std::size_t i) {
    if (i >= dim_) throw ContractViolation("coordinate index out of range");
    bits_ ^= (std::uint32_t{1} << i);
}

F2Vector& F2Vector::operator+=(const F2Vector& o) {
    if (o.dim_ != dim_) throw ContractViolation("dimension mismatch in vector addition");
    bits_ ^= o.bits_;
    return *this;
}

std::vector<int> F2Vector::to_bits() const {
    std::vector<int> out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) out[i] = (*this)[i] ? 1 : 0;
    return out;
}

std::string F2Vector::to_string() const {
    std::string s(dim_, '0');
    for (std::size_t i = 0; i < dim_; ++i) {
        if ((*this)[i]) s[i] = '1';
    }
    return s;
}

bool dot(const F2Vector& a, const F2Vector& b) {
    if (a.dim() != b.dim()) throw ContractViolation("dimension mismatch in dot product");
    return (std::popcount(a.bits() & b.bits()) & 1) != 0;
}

F2Matrix::F2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, F2Vector(cols)) {}

F2Matrix::F2Matrix(std::size_t cols, std::vector<F2Vector> rows) : cols_(cols), rows_(std::move(rows)) {
    check_dim(cols);
    for (const auto& r : rows_) {
        if (r.dim() != cols) throw ContractViolation("matrix row has wrong length");
    }
}

F2Matrix F2Matrix::identity(std::size_t n) {
    F2Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

void F2Matrix::set(std::size_t i, std::size_t j, bool v) { rows_.at(i).set(j, v); }

F2Vector F2Matrix::apply(const F2Vector& x) const {
    if (x.dim() != cols_) throw ContractViolation("dimension mismatch in matrix-vector product");
    F2Vector out(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (dot(rows_[i], x)) out.set(i);
    }
    return out;
}

F2Matrix F2Matrix::transpose() const {
    F2Matrix t(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (rows_[i][j]) t.set(j, i);
        }
    }
    return t;
}

bool F2Matrix::is_symmetric() const { return rows() == cols_ && transpose() == *this; }

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) { check_dim(ambient_dim); }

Subspace::Subspace(std::size_t ambient_dim, std::vector<F2Vector> rref_basis)
    : ambient_(ambient_dim), basis_(std::move(rref_basis)) {}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<F2Vector>& vectors) {
    check_dim(ambient_dim);
    std::vector<F2Vector> rows = vectors;
    for (const auto& v : rows) {
        if (v.dim() != ambient_dim) throw ContractViolation("spanning vector has wrong dimension");
    }
    reduce(rows, ambient_dim);
    return Subspace(ambient_dim, std::move(rows));
}

Subspace Subspace::full(std::size_t ambient_dim) {
    std::vector<F2Vector> rows;
    for (std::size_t i = 0; i < ambient_dim; ++i) rows.push_back(F2Vector::basis(ambient_dim, i));
    return Subspace(ambient_dim, std::move(rows));
}

bool Subspace::contains(const F2Vector& x) const {
    if (x.dim() != ambient_) throw ContractViolation("dimension mismatch in subspace membership");
    F2Vector r = x;
    for (const auto& b : basis_) {
        if (r[b.pivot()]) r += b;
    }
    return r.is_zero();
}

void Subspace::for_each_element(const std::function<void(const F2Vector&)>& fn) const {
    // Gray-code walk: each step adds one basis vector.
    F2Vector x(ambient_);
    fn(x);
    const std::uint64_t count = std::uint64_t{1} << basis_.size();
    for (std::uint64_t i = 1; i < count; ++i) {
        x += basis_[static_cast<std::size_t>(std::countr_zero(i))];
        fn(x);
    }
}

std::size_t rank(const F2Matrix& m) {
    std::vector<F2Vector> rows = m.row_vectors();
    return reduce(rows, m.cols()).size();
}

std::optional<F2Vector> solve(const F2Matrix& m, const F2Vector& b) {
    if (b.dim() != m.rows()) throw ContractViolation("right-hand side length does not match matrix rows");
    if (m.cols() + 1 > kMaxVectorDim) throw ContractViolation("too many columns to solve");
    // Augment each row with its right-hand side bit in column cols().
    const std::size_t n = m.cols();
    std::vector<F2Vector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint32_t bits = m.row(i).bits();
        if (b[i]) bits |= (std::uint32_t{1} << n);
        rows.emplace_back(n + 1, bits);
    }
    const auto pivots = reduce(rows, n + 1);
    F2Vector x(n);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n) return std::nullopt;
        if (rows[r][n]) x.set(pivots[r]);
    }
    return x;
}

Subspace kernel_basis(const F2Matrix& m) {
    const std::size_t n = m.cols();
    std::vector<F2Vector> rows = m.row_vectors();
    const auto pivots = reduce(rows, n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<F2Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        F2Vector v = F2Vector::basis(n, f);
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            if (rows[r][f]) v.set(pivots[r]);
        }
        basis.push_back(v);
    }
    return Subspace::span(n, basis);
}

std::uint64_t gaussian_binomial(std::size_t ambient_dim, std::size_t dim) {
    if (dim > ambient_dim) return 0;
    // prod_{i<dim} (2^{n-i} - 1) / (2^{i+1} - 1), accumulated so every step is exact.
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        num *= (std::uint64_t{1} << (ambient_dim - i)) - 1U;
        den *= (std::uint64_t{1} << (i + 1)) - 1U;
        const auto g = std::gcd(num, den);
        num /= g;
        den /= g;
    }
    return num / den;
}

namespace {

struct PrunedWalk {
    std::size_t n;
    std::size_t k;
    const std::function<bool(const F2Vector&, const std::vector<F2Vector>&)>* accept;
    const std::function<bool(const Subspace&)>* visit;
    std::vector<std::size_t> pivots;
    std::vector<F2Vector> placed;
    bool stopped = false;

    void choose_pivots(std::size_t next_col) {
        if (stopped) return;
        if (pivots.size() == k) {
            fill_row(0);
            return;
        }
        const std::size_t remaining = k - pivots.size();
        for (std::size_t c = next_col; c + remaining <= n && !stopped; ++c) {
            pivots.push_back(c);
            choose_pivots(c + 1);
            pivots.pop_back();
        }
    }

    void fill_row(std::size_t r) {
        if (stopped) return;
        if (r == k) {
            if (!(*visit)(SubspaceBuilder::make(n, placed))) stopped = true;
            return;
        }
        std::vector<std::size_t> free_cols;
        for (std::size_t c = pivots[r] + 1; c < n; ++c) {
            if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
        }
        const std::uint64_t count = std::uint64_t{1} << free_cols.size();
        for (std::uint64_t mask = 0; mask < count && !stopped; ++mask) {
            std::uint32_t bits = std::uint32_t{1} << pivots[r];
            for (std::size_t j = 0; j < free_cols.size(); ++j) {
                if ((mask >> j) & 1U) bits |= std::uint32_t{1} << free_cols[j];
            }
            F2Vector row(n, bits);
            if (accept != nullptr && !(*accept)(row, placed)) continue;
            placed.push_back(row);
            fill_row(r + 1);
            placed.pop_back();
        }
    }
};

void check_enumeration(std::size_t ambient_dim, std::size_t dim) {
    if (ambient_dim > kSubspaceEnumerationGuard) {
        throw ResourceLimit("subspace enumeration limited to ambient dimension " +
                            std::to_string(kSubspaceEnumerationGuard));
    }
    if (dim > ambient_dim) throw ContractViolation("subspace dimension exceeds ambient dimension");
}

}  // namespace

void for_each_subspace_pruned(
    std::size_t ambient_dim, std::size_t dim,
    const std::function<bool(const F2Vector&, const std::vector<F2Vector>&)>& accept_row,
    const std::function<bool(const Subspace&)>& fn) {
    check_enumeration(ambient_dim, dim);
    PrunedWalk walk{ambient_dim, dim, accept_row ? &accept_row : nullptr, &fn, {}, {}};
    walk.choose_pivots(0);
}

void for_each_subspace(std::size_t ambient_dim, std::size_t dim,
                       const std::function<bool(const Subspace&)>& fn) {
    for_each_subspace_pruned(ambient_dim, dim, {}, fn);
}

std::vector<Subspace> enumerate_subspaces(std::size_t ambient_dim, std::size_t dim) {
    std::vector<Subspace> out;
    for_each_subspace(ambient_dim, dim, [&out](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace z4
