#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "z4forms/f2.hpp"
#include "z4forms/forms.hpp"
#include "z4forms/residue.hpp"

namespace z4 {

inline constexpr std::size_t kMaxUnimodularDim = 12;

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

/// Determinant computed exactly (fraction-free elimination).
std::int64_t exact_determinant(const IntMatrix& m);

/// The intersection form of a closed oriented 4-manifold: a symmetric integer
/// matrix with determinant +1 or -1.
class UnimodularForm {
public:
    UnimodularForm() = default;
    explicit UnimodularForm(IntMatrix gram);

    /// Library forms: "1", "-1", "H", "E8", joined by "+" for orthogonal sum.
    static UnimodularForm named(const std::string& key);
    static UnimodularForm e8();

    [[nodiscard]] std::size_t dim() const noexcept { return gram_.size(); }
    [[nodiscard]] const IntMatrix& gram() const noexcept { return gram_; }
    [[nodiscard]] std::int64_t pair(const IntVector& x, const IntVector& y) const;
    /// True when every diagonal entry is even.
    [[nodiscard]] bool is_even() const;
    /// Reduction mod 2 as a form over the two-element field.
    [[nodiscard]] BilinearForm mod2() const;

    friend bool operator==(const UnimodularForm&, const UnimodularForm&) = default;

private:
    IntMatrix gram_;
};

UnimodularForm orthogonal_sum(const UnimodularForm& a, const UnimodularForm& b);

/// Positive minus negative eigenvalue count, by exact congruence diagonalization.
std::int64_t signature(const UnimodularForm& m);

bool is_characteristic(const UnimodularForm& m, const IntVector& c);

/// An integer class c with c . x = x . x (mod 2) for every x.
class CharacteristicVector {
public:
    /// Throws NotCharacteristic naming the first failing basis vector.
    CharacteristicVector(const UnimodularForm& m, IntVector coords);

    [[nodiscard]] const IntVector& coords() const noexcept { return coords_; }
    [[nodiscard]] std::int64_t square(const UnimodularForm& m) const { return m.pair(coords_, coords_); }

private:
    IntVector coords_;
};

/// The mod-2 characteristic classes, i.e. solutions of gram c = diag(gram) mod 2.
/// Unimodularity makes this a single class.
std::vector<F2Vector> characteristic_classes_mod2(const UnimodularForm& m);

/// Visits every characteristic vector with all coordinates in [lo, hi].
void for_each_characteristic_in_box(const UnimodularForm& m, std::int64_t lo, std::int64_t hi,
                                    const std::function<void(const IntVector&)>& fn);

/// The Brown invariant a characteristic surface with class c must carry:
/// 2 beta = c.c - sign (mod 16), so beta = (c.c - sign) / 2 (mod 8).
Z8 gm_required_beta(const UnimodularForm& m, const CharacteristicVector& c);

/// Whether q's Brown invariant equals the required one. q must be nondegenerate.
bool gm_check(const UnimodularForm& m, const CharacteristicVector& c, const Enhancement& q);

}  // namespace z4
