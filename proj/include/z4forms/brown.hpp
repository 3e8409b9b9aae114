#pragma once

#include <array>
#include <cstdint>

#include "z4forms/forms.hpp"
#include "z4forms/residue.hpp"

namespace z4 {

/// Largest form dimension accepted by the Gauss-sum sweep.
inline constexpr std::size_t kGaussSumGuard = 20;

/// The Gauss sum sum_x i^{q(x)} = A + B i, kept as exact integers.
struct GaussSumResult {
    std::size_t n = 0;
    std::int64_t a = 0;  // N0 - N2
    std::int64_t b = 0;  // N1 - N3
    std::array<std::uint64_t, 4> counts{};  // N_k = #{x : q(x) = k}

    friend bool operator==(const GaussSumResult&, const GaussSumResult&) = default;
};

struct BrownValue {
    Z8 beta;
    friend bool operator==(const BrownValue&, const BrownValue&) = default;
};

GaussSumResult gauss_sum(const Enhancement& q);

/// Decodes (A, B) as 2^{n/2} e^{2 pi i beta / 8}. Throws DegenerateForm when the
/// pair matches none of the eight patterns.
BrownValue decode_gauss_sum(const GaussSumResult& g);

/// The Brown invariant in Z/8. Throws DegenerateForm on degenerate forms.
BrownValue brown_invariant(const Enhancement& q);

/// Arf invariant of an even enhancement (all basis values even): beta / 4.
int arf_from_brown(const Enhancement& q);

/// Sign s such that beta(torsor_act(q, y)) - beta(q) = s * 2 q(PD(y)) (mod 8).
/// Found by the exhaustive calibration below and frozen.
inline constexpr int kTorsorDeltaSign = -1;

/// Runs the torsor change formula over every (q, y) on the standard surface forms of
/// dimension at most max_dim and returns the one sign consistent with all of them.
/// Throws InternalInconsistency if neither sign (or both) fit.
int calibrate_torsor_sign(std::size_t max_dim = 2);

/// kTorsorDeltaSign * 2 q(PD(y)) in Z/8.
Z8 predicted_torsor_delta(const Enhancement& q, const Covector& y);

/// beta(torsor_act(q, y)) - beta(q).
Z8 measured_torsor_delta(const Enhancement& q, const Covector& y);

}  // namespace z4
