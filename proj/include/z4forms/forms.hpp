#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "z4forms/f2.hpp"
#include "z4forms/residue.hpp"

namespace z4 {

/// Largest form dimension accepted by enhancement enumeration.
inline constexpr std::size_t kEnhancementEnumerationGuard = 12;

/// A symmetric bilinear form over the two-element field, given by its Gram matrix
/// in a fixed basis: gram(i, j) = e_i . e_j.
class BilinearForm {
public:
    BilinearForm() = default;
    explicit BilinearForm(F2Matrix gram);

    /// Orthogonal sum of g hyperbolic planes (closed orientable surface of genus g).
    static BilinearForm hyperbolic(std::size_t genus);
    /// Identity form (connected sum of k projective planes).
    static BilinearForm crosscaps(std::size_t k);

    [[nodiscard]] std::size_t dim() const noexcept { return gram_.rows(); }
    [[nodiscard]] const F2Matrix& gram() const noexcept { return gram_; }
    [[nodiscard]] bool is_nondegenerate() const noexcept { return nondegenerate_; }
    /// True when x.x = 0 for every x (every diagonal entry is zero).
    [[nodiscard]] bool is_even() const noexcept;

    [[nodiscard]] bool pair(const F2Vector& x, const F2Vector& y) const;
    /// x.x, which equals the sum of the diagonal entries on the support of x.
    [[nodiscard]] bool self(const F2Vector& x) const;

    friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

private:
    F2Matrix gram_;
    bool nondegenerate_ = true;
};

BilinearForm orthogonal_sum(const BilinearForm& a, const BilinearForm& b);

/// A closed surface by its standard model: the mod-2 intersection form in the
/// symplectic (orientable) or crosscap (nonorientable) basis.
class SurfaceModel {
public:
    enum class Kind { Orientable, Nonorientable };

    static SurfaceModel orientable(std::size_t genus);
    static SurfaceModel nonorientable(std::size_t crosscaps);

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    /// Genus for orientable surfaces, number of crosscaps otherwise.
    [[nodiscard]] std::size_t count() const noexcept { return count_; }
    [[nodiscard]] const BilinearForm& form() const noexcept { return form_; }
    [[nodiscard]] std::string name() const;

private:
    SurfaceModel(Kind kind, std::size_t count, BilinearForm form)
        : kind_(kind), count_(count), form_(std::move(form)) {}

    Kind kind_;
    std::size_t count_;
    BilinearForm form_;
};

/// All standard surface models whose form dimension is at most max_dim:
/// orientable genus 0..max_dim/2, then crosscaps 1..max_dim.
std::vector<SurfaceModel> standard_surfaces(std::size_t max_dim);

/// A linear functional on H_1, acting by the coordinate pairing <y, x>.
class Covector {
public:
    Covector() = default;
    explicit Covector(F2Vector coords) : coords_(coords) {}

    [[nodiscard]] std::size_t dim() const noexcept { return coords_.dim(); }
    [[nodiscard]] const F2Vector& coords() const noexcept { return coords_; }
    [[nodiscard]] bool operator()(const F2Vector& x) const { return dot(coords_, x); }

    friend bool operator==(const Covector&, const Covector&) = default;

private:
    F2Vector coords_;
};

/// A Z/4-valued quadratic enhancement q of a bilinear form, stored by its values
/// on the basis. q(x + y) = q(x) + q(y) + 2 (x . y) determines q everywhere.
///
/// Pin- structures on a surface correspond one-to-one to enhancements of its
/// intersection form, so this type also stands for a Pin- structure.
class Enhancement {
public:
    Enhancement() = default;
    /// Throws ContractViolation unless values[i] = gram(i, i) mod 2 for every i.
    Enhancement(BilinearForm form, std::vector<Z4> basis_values);

    [[nodiscard]] const BilinearForm& form() const noexcept { return form_; }
    [[nodiscard]] std::size_t dim() const noexcept { return form_.dim(); }
    [[nodiscard]] const std::vector<Z4>& basis_values() const noexcept { return values_; }

    friend bool operator==(const Enhancement&, const Enhancement&) = default;

private:
    BilinearForm form_;
    std::vector<Z4> values_;
};

Z4 eval_q(const Enhancement& q, const F2Vector& x);

/// Values of q on every class, indexed by the class's bit pattern.
std::vector<Z4> value_table(const Enhancement& q);

/// Visits all 2^dim enhancements of the form. Enhancement number s has
/// v_i = gram(i, i) + 2 * bit_i(s); they are visited for s = 0, 1, 2, ...
void for_each_enhancement(const BilinearForm& form, const std::function<void(const Enhancement&)>& fn);
std::vector<Enhancement> enumerate_enhancements(const BilinearForm& form);

/// q'(x) = q(x) + 2 <y, x>.
Enhancement torsor_act(const Enhancement& q, const Covector& y);

/// The class y^ with y^ . x = <y, x> for all x. Throws DegenerateForm on degenerate forms.
F2Vector poincare_dual(const BilinearForm& form, const Covector& y);

/// q restricted to s, re-expressed on s's echelon basis. The result may be degenerate.
Enhancement restrict(const Enhancement& q, const Subspace& s);

Enhancement direct_sum(const Enhancement& a, const Enhancement& b);

/// The enhancement induced on c-perp / c for a nonzero isotropic class c with q(c) = 0.
/// Throws SurgeryObstructed naming the first failing condition, DegenerateForm when the
/// form is degenerate.
Enhancement isotropic_reduction(const Enhancement& q, const F2Vector& c);

/// Representatives in c-perp of the quotient basis used by isotropic_reduction.
std::vector<F2Vector> reduction_basis(const BilinearForm& form, const F2Vector& c);

}  // namespace z4
