#include "xxz/spin/transfer.hpp"

#include <algorithm>
#include <bit>

namespace xxz {

namespace {

struct Path {
    std::uint32_t out;
    int aux;  // 1 = up
    Cyclotomic3 coeff;
};

// Weight of R_{(aux_in, out), (aux_out, in)} for one site.
const Cyclotomic3* weight(const RWeights& w, int aux_in, int out, int aux_out, int in) {
    if (aux_in == aux_out && out == in) return aux_in == in ? &w.a : &w.b;
    if (aux_in == 1 && out == 0 && aux_out == 0 && in == 1) return &w.c1;
    if (aux_in == 0 && out == 1 && aux_out == 1 && in == 0) return &w.c2;
    return nullptr;
}

std::vector<std::pair<std::uint32_t, Cyclotomic3>> apply_column(std::uint32_t s, const std::vector<RWeights>& ws,
                                                                const TwistSpec& twist) {
    const int N = static_cast<int>(ws.size());
    std::vector<std::pair<std::uint32_t, Cyclotomic3>> result;
    for (int a0 = 0; a0 < 2; ++a0) {
        std::vector<Path> paths{{0, a0, Cyclotomic3(1)}};
        for (int i = 0; i < N; ++i) {
            int si = s >> i & 1u;
            std::vector<Path> next;
            next.reserve(paths.size() * 2);
            for (const auto& p : paths)
                for (int ax2 = 0; ax2 < 2; ++ax2) {
                    int so = ax2 + si - p.aux;
                    if (so < 0 || so > 1) continue;
                    const Cyclotomic3* x = weight(ws[i], p.aux, so, ax2, si);
                    if (!x || x->is_zero()) continue;
                    next.push_back({p.out | (static_cast<std::uint32_t>(so) << i), ax2, p.coeff * *x});
                }
            paths = std::move(next);
        }
        Cyclotomic3 om = a0 ? twist.omega_up() : twist.omega_down();
        for (const auto& p : paths)
            if (p.aux == a0) result.emplace_back(p.out, p.coeff * om);
    }
    return result;
}

}  // namespace

SectorMatrix transfer_matrix_sector(const Cyclotomic3& y, const std::vector<Cyclotomic3>& z, const TwistSpec& twist,
                                    int ups, Exec exec) {
    SectorMatrix sm;
    sm.N = static_cast<int>(z.size());
    sm.ups = ups;
    sm.basis = sector_basis(sm.N, ups);
    sm.m = MatW(sm.basis.size(), sm.basis.size());
    std::vector<RWeights> ws;
    for (const auto& zi : z) ws.push_back(r_weights(y / zi));
    for_each_index(exec, sm.basis.size(), [&](std::size_t col) {
        for (const auto& [out, c] : apply_column(sm.basis[col], ws, twist)) {
            auto row = static_cast<std::size_t>(std::lower_bound(sm.basis.begin(), sm.basis.end(), out) -
                                                sm.basis.begin());
            sm.m(row, col) += c;
        }
    });
    return sm;
}

MatW transfer_matrix(const Cyclotomic3& y, const std::vector<Cyclotomic3>& z, const TwistSpec& twist, Exec exec) {
    const int N = static_cast<int>(z.size());
    MatW full(1u << N, 1u << N);
    for (int ups = 0; ups <= N; ++ups) {
        SectorMatrix sm = transfer_matrix_sector(y, z, twist, ups, exec);
        for (std::size_t i = 0; i < sm.basis.size(); ++i)
            for (std::size_t j = 0; j < sm.basis.size(); ++j) full(sm.basis[i], sm.basis[j]) = sm.m(i, j);
    }
    return full;
}

MatW hamiltonian(int N, Boundary boundary) {
    if (N < 2) throw AlgebraError("hamiltonian needs N >= 2");
    if ((boundary == Boundary::twisted) != (N % 2 == 0))
        throw AlgebraError("twisted boundary is used for even N, periodic for odd N");
    TwistSpec twist = boundary == Boundary::twisted ? default_twist(N) : TwistSpec{};
    const Rational quarter = make_rational(1, 4);
    const std::uint32_t dim = 1u << N;
    MatW h(dim, dim);
    for (int i = 1; i <= N; ++i) {
        int j = i == N ? 1 : i + 1;
        Cyclotomic3 phase_plus_i = i == N ? twist.boundary_phase() : Cyclotomic3(1);
        std::uint32_t mi = 1u << (i - 1), mj = 1u << (j - 1);
        for (std::uint32_t s = 0; s < dim; ++s) {
            bool ui = s & mi, uj = s & mj;
            h(s, s) += Cyclotomic3(ui == uj ? quarter : Rational(-quarter));
            if (ui != uj) {
                std::uint32_t t = s ^ mi ^ mj;
                // t has site i up: sigma^+_i sigma^-_j.
                h(t, s) += -(uj ? phase_plus_i : phase_plus_i.conj());
            }
        }
    }
    return h;
}

MatW sz_total(int N) {
    const std::uint32_t dim = 1u << N;
    MatW m(dim, dim);
    for (std::uint32_t s = 0; s < dim; ++s) m(s, s) = Cyclotomic3(make_rational(2 * std::popcount(s) - N, 2));
    return m;
}

}  // namespace xxz
