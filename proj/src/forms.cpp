#include "z4forms/forms.hpp"

#include <bit>

#include "z4forms/errors.hpp"

namespace z4 {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw ContractViolation(std::string("dimension mismatch in ") + what);
}

}  // namespace

BilinearForm::BilinearForm(F2Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_symmetric()) throw ContractViolation("Gram matrix must be square and symmetric");
    nondegenerate_ = rank(gram_) == gram_.rows();
}

BilinearForm BilinearForm::hyperbolic(std::size_t genus) {
    F2Matrix g(2 * genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        g.set(2 * i, 2 * i + 1);
        g.set(2 * i + 1, 2 * i);
    }
    return BilinearForm(std::move(g));
}

BilinearForm BilinearForm::crosscaps(std::size_t k) { return BilinearForm(F2Matrix::identity(k)); }

bool BilinearForm::is_even() const noexcept {
    for (std::size_t i = 0; i < dim(); ++i) {
        if (gram_.at(i, i)) return false;
    }
    return true;
}

bool BilinearForm::pair(const F2Vector& x, const F2Vector& y) const {
    require_same_dim(x.dim(), dim(), "form pairing");
    return dot(x, gram_.apply(y));
}

bool BilinearForm::self(const F2Vector& x) const {
    require_same_dim(x.dim(), dim(), "form pairing");
    bool s = false;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] && gram_.at(i, i)) s = !s;
    }
    return s;
}

BilinearForm orthogonal_sum(const BilinearForm& a, const BilinearForm& b) {
    const std::size_t n = a.dim() + b.dim();
    F2Matrix g(n, n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) g.set(i, j, a.gram().at(i, j));
    }
    for (std::size_t i = 0; i < b.dim(); ++i) {
        for (std::size_t j = 0; j < b.dim(); ++j) g.set(a.dim() + i, a.dim() + j, b.gram().at(i, j));
    }
    return BilinearForm(std::move(g));
}

SurfaceModel SurfaceModel::orientable(std::size_t genus) {
    return SurfaceModel(Kind::Orientable, genus, BilinearForm::hyperbolic(genus));
}

SurfaceModel SurfaceModel::nonorientable(std::size_t crosscaps) {
    if (crosscaps == 0) throw ContractViolation("a nonorientable surface needs at least one crosscap");
    return SurfaceModel(Kind::Nonorientable, crosscaps, BilinearForm::crosscaps(crosscaps));
}

std::string SurfaceModel::name() const {
    if (kind_ == Kind::Orientable) return "genus " + std::to_string(count_);
    return std::to_string(count_) + (count_ == 1 ? " crosscap" : " crosscaps");
}

std::vector<SurfaceModel> standard_surfaces(std::size_t max_dim) {
    std::vector<SurfaceModel> out;
    for (std::size_t g = 0; 2 * g <= max_dim; ++g) out.push_back(SurfaceModel::orientable(g));
    for (std::size_t k = 1; k <= max_dim; ++k) out.push_back(SurfaceModel::nonorientable(k));
    return out;
}

Enhancement::Enhancement(BilinearForm form, std::vector<Z4> basis_values)
    : form_(std::move(form)), values_(std::move(basis_values)) {
    require_same_dim(values_.size(), form_.dim(), "enhancement basis values");
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if ((values_[i].value() & 1) != static_cast<int>(form_.gram().at(i, i))) {
            throw ContractViolation("enhancement value on e" + std::to_string(i) +
                                    " must have the parity of e" + std::to_string(i) + "·e" +
                                    std::to_string(i));
        }
    }
}

Z4 eval_q(const Enhancement& q, const F2Vector& x) {
    require_same_dim(x.dim(), q.dim(), "eval_q");
    const auto& gram = q.form().gram();
    const std::uint32_t s = x.bits();
    int linear = 0;
    int incidences = 0;  // sum over i in S of #{j in S : gram(i,j)}, counting each i<j pair twice
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1U) {
        const auto i = static_cast<std::size_t>(std::countr_zero(rest));
        linear += q.basis_values()[i].value();
        const std::uint32_t row = gram.row(i).bits();
        incidences += std::popcount(row & s) - static_cast<int>((row >> i) & 1U);
    }
    const int pairs = incidences / 2;
    return Z4(linear + 2 * pairs);
}

std::vector<Z4> value_table(const Enhancement& q) {
    const std::size_t n = q.dim();
    if (n > 24) throw ResourceLimit("value table limited to dimension 24");
    std::vector<Z4> table(std::size_t{1} << n);
    // q(x + e_i) = q(x) + q(e_i) + 2 (x . e_i), building from lower patterns.
    for (std::size_t x = 1; x < table.size(); ++x) {
        const auto i = static_cast<std::size_t>(std::countr_zero(x));
        const std::size_t rest = x & (x - 1);
        const bool cross = (std::popcount(static_cast<std::uint32_t>(rest) & q.form().gram().row(i).bits()) & 1) != 0;
        table[x] = table[rest] + q.basis_values()[i] + Z4(cross ? 2 : 0);
    }
    return table;
}

void for_each_enhancement(const BilinearForm& form, const std::function<void(const Enhancement&)>& fn) {
    const std::size_t n = form.dim();
    if (n > kEnhancementEnumerationGuard) {
        throw ResourceLimit("enhancement enumeration limited to dimension " +
                            std::to_string(kEnhancementEnumerationGuard));
    }
    std::vector<Z4> values(n);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            values[i] = Z4(static_cast<int>(form.gram().at(i, i)) + 2 * static_cast<int>((s >> i) & 1U));
        }
        fn(Enhancement(form, values));
    }
}

std::vector<Enhancement> enumerate_enhancements(const BilinearForm& form) {
    std::vector<Enhancement> out;
    for_each_enhancement(form, [&out](const Enhancement& q) { out.push_back(q); });
    return out;
}

Enhancement torsor_act(const Enhancement& q, const Covector& y) {
    require_same_dim(y.dim(), q.dim(), "torsor_act");
    std::vector<Z4> values = q.basis_values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (y.coords()[i]) values[i] += Z4(2);
    }
    return Enhancement(q.form(), std::move(values));
}

F2Vector poincare_dual(const BilinearForm& form, const Covector& y) {
    require_same_dim(y.dim(), form.dim(), "poincare_dual");
    if (!form.is_nondegenerate()) throw DegenerateForm("Poincaré dual undefined: degenerate form");
    auto solution = solve(form.gram(), y.coords());
    if (!solution) throw InternalInconsistency("nondegenerate Gram matrix failed to solve");
    return *solution;
}

Enhancement restrict(const Enhancement& q, const Subspace& s) {
    require_same_dim(s.ambient_dim(), q.dim(), "restrict");
    const auto& basis = s.basis();
    const std::size_t k = basis.size();
    F2Matrix gram(k, k);
    std::vector<Z4> values(k);
    for (std::size_t i = 0; i < k; ++i) {
        values[i] = eval_q(q, basis[i]);
        for (std::size_t j = 0; j < k; ++j) gram.set(i, j, q.form().pair(basis[i], basis[j]));
    }
    return Enhancement(BilinearForm(std::move(gram)), std::move(values));
}

Enhancement direct_sum(const Enhancement& a, const Enhancement& b) {
    std::vector<Z4> values = a.basis_values();
    values.insert(values.end(), b.basis_values().begin(), b.basis_values().end());
    return Enhancement(orthogonal_sum(a.form(), b.form()), std::move(values));
}

std::vector<F2Vector> reduction_basis(const BilinearForm& form, const F2Vector& c) {
    require_same_dim(c.dim(), form.dim(), "isotropic_reduction");
    const std::size_t n = form.dim();
    // c-perp is the kernel of the functional x -> c . x.
    const F2Matrix functional(n, {form.gram().apply(c)});
    const Subspace perp = kernel_basis(functional);
    std::vector<F2Vector> chosen{c};
    std::vector<F2Vector> reps;
    for (const auto& v : perp.basis()) {
        chosen.push_back(v);
        if (Subspace::span(n, chosen).dim() == chosen.size()) {
            reps.push_back(v);
        } else {
            chosen.pop_back();
        }
    }
    return reps;
}

Enhancement isotropic_reduction(const Enhancement& q, const F2Vector& c) {
    require_same_dim(c.dim(), q.dim(), "isotropic_reduction");
    if (!q.form().is_nondegenerate()) throw DegenerateForm("isotropic reduction needs a nondegenerate form");
    if (c.is_zero()) throw SurgeryObstructed(SurgeryObstruction::ZeroClass);
    if (q.form().self(c)) throw SurgeryObstructed(SurgeryObstruction::NonIsotropic);
    if (eval_q(q, c) != Z4(0)) throw SurgeryObstructed(SurgeryObstruction::NonzeroValue);

    const auto reps = reduction_basis(q.form(), c);
    if (reps.size() + 2 != q.dim()) throw InternalInconsistency("quotient c-perp/c has wrong dimension");
    const std::size_t k = reps.size();
    F2Matrix gram(k, k);
    std::vector<Z4> values(k);
    for (std::size_t i = 0; i < k; ++i) {
        values[i] = eval_q(q, reps[i]);
        for (std::size_t j = 0; j < k; ++j) gram.set(i, j, q.form().pair(reps[i], reps[j]));
    }
    return Enhancement(BilinearForm(std::move(gram)), std::move(values));
}

}  // namespace z4
