#include "z4forms/fourmanifold.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "z4forms/brown.hpp"
#include "z4forms/errors.hpp"

namespace z4 {

namespace mp = boost::multiprecision;

namespace {

std::int64_t floor_mod2(std::int64_t v) { return ((v % 2) + 2) % 2; }

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

}  // namespace

std::int64_t exact_determinant(const IntMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::vector<mp::cpp_int>> a(n, std::vector<mp::cpp_int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw ContractViolation("determinant of a non-square matrix");
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    }
    if (n == 0) return 1;
    // Bareiss elimination: every division is exact.
    mp::cpp_int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    mp::cpp_int det = a[n - 1][n - 1] * sign;
    if (det > std::numeric_limits<std::int64_t>::max() || det < std::numeric_limits<std::int64_t>::min()) {
        throw ResourceLimit("determinant does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(det);
}

UnimodularForm::UnimodularForm(IntMatrix gram) : gram_(std::move(gram)) {
    const std::size_t n = gram_.size();
    if (n > kMaxUnimodularDim) {
        throw ContractViolation("unimodular forms limited to dimension " + std::to_string(kMaxUnimodularDim));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (gram_[i].size() != n) throw ContractViolation("Gram matrix must be square");
        for (std::size_t j = 0; j < i; ++j) {
            if (gram_[i][j] != gram_[j][i]) throw ContractViolation("Gram matrix must be symmetric");
        }
    }
    const auto det = exact_determinant(gram_);
    if (det != 1 && det != -1) {
        throw ContractViolation("form is not unimodular (determinant " + std::to_string(det) + ")");
    }
}

UnimodularForm UnimodularForm::e8() {
    // Positive definite E8: 2 on the diagonal, -1 on the Dynkin diagram edges.
    // Chain 0-1-2-3-4-5-6 with node 7 attached to node 4.
    IntMatrix g(8, IntVector(8, 0));
    for (std::size_t i = 0; i < 8; ++i) g[i][i] = 2;
    auto edge = [&g](std::size_t i, std::size_t j) { g[i][j] = g[j][i] = -1; };
    for (std::size_t i = 0; i + 1 < 7; ++i) edge(i, i + 1);
    edge(4, 7);
    return UnimodularForm(std::move(g));
}

UnimodularForm UnimodularForm::named(const std::string& key) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto plus = key.find('+', start);
        parts.push_back(trim(key.substr(start, plus == std::string::npos ? std::string::npos : plus - start)));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    UnimodularForm out;
    for (const auto& p : parts) {
        UnimodularForm piece;
        if (p == "1") {
            piece = UnimodularForm(IntMatrix{{1}});
        } else if (p == "-1") {
            piece = UnimodularForm(IntMatrix{{-1}});
        } else if (p == "H") {
            piece = UnimodularForm(IntMatrix{{0, 1}, {1, 0}});
        } else if (p == "E8") {
            piece = e8();
        } else {
            throw ContractViolation("unknown library form '" + p + "' (expected 1, -1, H or E8)");
        }
        out = orthogonal_sum(out, piece);
    }
    return out;
}

std::int64_t UnimodularForm::pair(const IntVector& x, const IntVector& y) const {
    if (x.size() != dim() || y.size() != dim()) throw ContractViolation("dimension mismatch in form pairing");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) s += x[i] * gram_[i][j] * y[j];
    }
    return s;
}

bool UnimodularForm::is_even() const {
    for (std::size_t i = 0; i < dim(); ++i) {
        if (floor_mod2(gram_[i][i]) != 0) return false;
    }
    return true;
}

BilinearForm UnimodularForm::mod2() const {
    F2Matrix g(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        for (std::size_t j = 0; j < dim(); ++j) g.set(i, j, floor_mod2(gram_[i][j]) == 1);
    }
    return BilinearForm(std::move(g));
}

UnimodularForm orthogonal_sum(const UnimodularForm& a, const UnimodularForm& b) {
    const std::size_t n = a.dim() + b.dim();
    IntMatrix g(n, IntVector(n, 0));
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) g[i][j] = a.gram()[i][j];
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) g[a.dim() + i][a.dim() + j] = b.gram()[i][j];
    }
    return UnimodularForm(std::move(g));
}

std::int64_t signature(const UnimodularForm& m) {
    const std::size_t n = m.dim();
    std::vector<std::vector<mp::cpp_rational>> a(n, std::vector<mp::cpp_rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.gram()[i][j];
    }
    auto swap_index = [&a, n](std::size_t i, std::size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        for (std::size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    };

    std::int64_t sig = 0;
    std::size_t k = 0;
    while (k < n) {
        std::size_t d = k;
        while (d < n && a[d][d] == 0) ++d;
        if (d < n) {
            swap_index(k, d);
            const mp::cpp_rational pivot = a[k][k];
            sig += pivot > 0 ? 1 : -1;
            for (std::size_t i = k + 1; i < n; ++i) {
                if (a[i][k] == 0) continue;
                const mp::cpp_rational f = a[i][k] / pivot;
                for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
            }
            k += 1;
            continue;
        }
        // Every remaining diagonal entry is zero: use a hyperbolic 2x2 pivot.
        std::size_t pi = n;
        std::size_t pj = n;
        for (std::size_t i = k; i < n && pi == n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == n) break;  // null block; cannot occur for unimodular forms
        swap_index(k, pi);
        swap_index(k + 1, pj);
        const mp::cpp_rational off = a[k][k + 1];
        // The block [[0, off], [off, 0]] has one positive and one negative eigenvalue.
        for (std::size_t i = k + 2; i < n; ++i) {
            for (std::size_t j = k + 2; j < n; ++j) {
                a[i][j] -= (a[i][k] * a[k + 1][j] + a[i][k + 1] * a[k][j]) / off;
            }
        }
        k += 2;
    }
    return sig;
}

bool is_characteristic(const UnimodularForm& m, const IntVector& c) {
    if (c.size() != m.dim()) throw ContractViolation("characteristic vector has wrong length");
    for (std::size_t i = 0; i < m.dim(); ++i) {
        std::int64_t ce = 0;
        for (std::size_t j = 0; j < m.dim(); ++j) ce += c[j] * m.gram()[j][i];
        if (floor_mod2(ce) != floor_mod2(m.gram()[i][i])) return false;
    }
    return true;
}

CharacteristicVector::CharacteristicVector(const UnimodularForm& m, IntVector coords)
    : coords_(std::move(coords)) {
    if (coords_.size() != m.dim()) throw ContractViolation("characteristic vector has wrong length");
    for (std::size_t i = 0; i < m.dim(); ++i) {
        std::int64_t ce = 0;
        for (std::size_t j = 0; j < m.dim(); ++j) ce += coords_[j] * m.gram()[j][i];
        if (floor_mod2(ce) != floor_mod2(m.gram()[i][i])) throw NotCharacteristic(i, ce, m.gram()[i][i]);
    }
}

std::vector<F2Vector> characteristic_classes_mod2(const UnimodularForm& m) {
    const BilinearForm reduced = m.mod2();
    F2Vector diagonal(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i) diagonal.set(i, reduced.gram().at(i, i));
    auto solution = solve(reduced.gram(), diagonal);
    if (!solution) throw InternalInconsistency("Wu condition has no solution for a unimodular form");
    return {*solution};
}

void for_each_characteristic_in_box(const UnimodularForm& m, std::int64_t lo, std::int64_t hi,
                                    const std::function<void(const IntVector&)>& fn) {
    const F2Vector parity = characteristic_classes_mod2(m).front();
    const std::size_t n = m.dim();
    std::vector<IntVector> choices(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::int64_t v = lo; v <= hi; ++v) {
            if (floor_mod2(v) == (parity[i] ? 1 : 0)) choices[i].push_back(v);
        }
        if (choices[i].empty()) return;
    }
    std::vector<std::size_t> idx(n, 0);
    IntVector c(n);
    while (true) {
        for (std::size_t i = 0; i < n; ++i) c[i] = choices[i][idx[i]];
        fn(c);
        std::size_t i = 0;
        while (i < n && ++idx[i] == choices[i].size()) idx[i++] = 0;
        if (i == n) return;
    }
}

Z8 gm_required_beta(const UnimodularForm& m, const CharacteristicVector& c) {
    const std::int64_t diff = c.square(m) - signature(m);
    if (diff % 8 != 0) {
        throw InternalInconsistency("van der Blij congruence failed: c·c - sign = " + std::to_string(diff));
    }
    return Z8(diff / 2);
}

bool gm_check(const UnimodularForm& m, const CharacteristicVector& c, const Enhancement& q) {
    return brown_invariant(q).beta == gm_required_beta(m, c);
}

}  // namespace z4
