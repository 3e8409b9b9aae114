#include "z4forms/brown.hpp"

#include "z4forms/errors.hpp"

namespace z4 {

GaussSumResult gauss_sum(const Enhancement& q) {
    if (q.dim() > kGaussSumGuard) {
        throw ResourceLimit("Gauss sum limited to dimension " + std::to_string(kGaussSumGuard));
    }
    GaussSumResult g;
    g.n = q.dim();
    for (Z4 v : value_table(q)) ++g.counts[static_cast<std::size_t>(v.value())];
    g.a = static_cast<std::int64_t>(g.counts[0]) - static_cast<std::int64_t>(g.counts[2]);
    g.b = static_cast<std::int64_t>(g.counts[1]) - static_cast<std::int64_t>(g.counts[3]);
    return g;
}

BrownValue decode_gauss_sum(const GaussSumResult& g) {
    const std::int64_t a = g.a;
    const std::int64_t b = g.b;
    if (g.n % 2 == 0) {
        const std::int64_t r = std::int64_t{1} << (g.n / 2);
        if (a == r && b == 0) return {Z8(0)};
        if (a == 0 && b == r) return {Z8(2)};
        if (a == -r && b == 0) return {Z8(4)};
        if (a == 0 && b == -r) return {Z8(6)};
    } else {
        const std::int64_t r = std::int64_t{1} << ((g.n - 1) / 2);
        if (a == r && b == r) return {Z8(1)};
        if (a == -r && b == r) return {Z8(3)};
        if (a == -r && b == -r) return {Z8(5)};
        if (a == r && b == -r) return {Z8(7)};
    }
    throw DegenerateForm();
}

BrownValue brown_invariant(const Enhancement& q) {
    if (!q.form().is_nondegenerate()) throw DegenerateForm();
    return decode_gauss_sum(gauss_sum(q));
}

int arf_from_brown(const Enhancement& q) {
    for (Z4 v : q.basis_values()) {
        if (v.value() % 2 != 0) throw UnsupportedInput("Arf invariant needs an even enhancement");
    }
    const Z8 beta = brown_invariant(q).beta;
    if (beta != Z8(0) && beta != Z8(4)) {
        throw InternalInconsistency("even enhancement with Brown invariant " + std::to_string(beta.value()));
    }
    return beta.value() / 4;
}

Z8 measured_torsor_delta(const Enhancement& q, const Covector& y) {
    return brown_invariant(torsor_act(q, y)).beta - brown_invariant(q).beta;
}

Z8 predicted_torsor_delta(const Enhancement& q, const Covector& y) {
    return kTorsorDeltaSign * doubled(eval_q(q, poincare_dual(q.form(), y)));
}

int calibrate_torsor_sign(std::size_t max_dim) {
    bool plus_fits = true;
    bool minus_fits = true;
    for (const auto& surface : standard_surfaces(max_dim)) {
        const auto& form = surface.form();
        for_each_enhancement(form, [&](const Enhancement& q) {
            for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << form.dim()); ++bits) {
                const Covector y(F2Vector(form.dim(), bits));
                const Z8 measured = measured_torsor_delta(q, y);
                const Z8 change = doubled(eval_q(q, poincare_dual(form, y)));
                plus_fits = plus_fits && measured == change;
                minus_fits = minus_fits && measured == -change;
            }
        });
    }
    if (plus_fits == minus_fits) {
        throw InternalInconsistency("torsor change formula calibration is not decisive");
    }
    return plus_fits ? 1 : -1;
}

}  // namespace z4
