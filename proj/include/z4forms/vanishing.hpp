#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "z4forms/f2.hpp"
#include "z4forms/forms.hpp"

namespace z4 {

/// Largest form dimension accepted by the vanishing-subspace search.
inline constexpr std::size_t kVanishingSearchGuard = 10;

/// True iff q(x) = 0 for every x in k (checked on all 2^dim(k) elements).
bool kernel_vanishing_check(const Enhancement& q, const Subspace& k);

/// Every dim-dimensional subspace on which q vanishes identically, in canonical order.
std::vector<Subspace> vanishing_subspaces(const Enhancement& q, std::size_t dim);

/// The first dim-dimensional q-null subspace in canonical order, if any.
std::optional<Subspace> first_vanishing_subspace(const Enhancement& q, std::size_t dim);

/// Largest dimension of a q-null subspace. Requires a nondegenerate form.
std::size_t max_vanishing_dim(const Enhancement& q);

/// A q-null subspace of dimension dim/2, for even dim. Odd-dimensional forms never
/// have one. Requires a nondegenerate form.
std::optional<Subspace> null_lagrangian(const Enhancement& q);

bool has_null_lagrangian(const Enhancement& q);

/// True iff x . y = 0 for all x, y in s.
bool is_isotropic(const BilinearForm& form, const Subspace& s);

}  // namespace z4
