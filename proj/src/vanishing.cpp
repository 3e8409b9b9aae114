#include "z4forms/vanishing.hpp"

#include "z4forms/errors.hpp"

namespace z4 {

namespace {

void check_guard(const Enhancement& q) {
    if (q.dim() > kVanishingSearchGuard) {
        throw ResourceLimit("vanishing search limited to dimension " + std::to_string(kVanishingSearchGuard));
    }
}

void require_nondegenerate(const Enhancement& q) {
    if (!q.form().is_nondegenerate()) throw DegenerateForm("vanishing search needs a nondegenerate form");
}

// q vanishes on a span iff it vanishes on each basis vector and the basis is
// pairwise orthogonal, since q(x + y) = q(x) + q(y) + 2 (x . y).
void search(const Enhancement& q, std::size_t dim, const std::function<bool(const Subspace&)>& fn) {
    check_guard(q);
    for_each_subspace_pruned(
        q.dim(), dim,
        [&q](const F2Vector& row, const std::vector<F2Vector>& placed) {
            if (eval_q(q, row) != Z4(0)) return false;
            for (const auto& p : placed) {
                if (q.form().pair(row, p)) return false;
            }
            return true;
        },
        fn);
}

}  // namespace

bool kernel_vanishing_check(const Enhancement& q, const Subspace& k) {
    if (k.ambient_dim() != q.dim()) throw ContractViolation("dimension mismatch in kernel_vanishing_check");
    bool all_zero = true;
    k.for_each_element([&](const F2Vector& x) {
        if (all_zero && eval_q(q, x) != Z4(0)) all_zero = false;
    });
    return all_zero;
}

std::vector<Subspace> vanishing_subspaces(const Enhancement& q, std::size_t dim) {
    std::vector<Subspace> out;
    if (dim > q.dim()) {
        check_guard(q);
        return out;
    }
    search(q, dim, [&out](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::optional<Subspace> first_vanishing_subspace(const Enhancement& q, std::size_t dim) {
    std::optional<Subspace> found;
    if (dim > q.dim()) {
        check_guard(q);
        return found;
    }
    search(q, dim, [&found](const Subspace& s) {
        found = s;
        return false;
    });
    return found;
}

std::size_t max_vanishing_dim(const Enhancement& q) {
    check_guard(q);
    require_nondegenerate(q);
    // Subspaces of q-null subspaces are q-null, so the first empty level ends the scan.
    std::size_t d = 0;
    while (d + 1 <= q.dim() && first_vanishing_subspace(q, d + 1)) ++d;
    return d;
}

std::optional<Subspace> null_lagrangian(const Enhancement& q) {
    check_guard(q);
    require_nondegenerate(q);
    if (q.dim() % 2 != 0) return std::nullopt;
    return first_vanishing_subspace(q, q.dim() / 2);
}

bool has_null_lagrangian(const Enhancement& q) { return null_lagrangian(q).has_value(); }

bool is_isotropic(const BilinearForm& form, const Subspace& s) {
    const auto& b = s.basis();
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i; j < b.size(); ++j) {
            if (form.pair(b[i], b[j])) return false;
        }
    }
    return true;
}

}  // namespace z4
