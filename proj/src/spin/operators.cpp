#include "xxz/spin/operators.hpp"

namespace xxz {

namespace {
const Cyclotomic3 kQ = Cyclotomic3::omega();
const Cyclotomic3 kQinv = Cyclotomic3::omega().conj();
}  // namespace

RWeights r_weights(const Cyclotomic3& z) {
    Cyclotomic3 den = kQ - kQinv * z;
    if (den.is_zero()) throw DivisionByZero();
    Cyclotomic3 inv = den.inverse();
    return {(kQ * z - kQinv) * inv, (z - Cyclotomic3(1)) * inv, (kQ - kQinv) * z * inv, (kQ - kQinv) * inv};
}

MatW r_matrix(const Cyclotomic3& z) {
    RWeights w = r_weights(z);
    MatW r(4, 4);
    r(0, 0) = w.a;
    r(3, 3) = w.a;
    r(1, 1) = w.b;
    r(2, 2) = w.b;
    r(1, 2) = w.c1;
    r(2, 1) = w.c2;
    return r;
}

MatW permutation4() {
    MatW p(4, 4);
    p(0, 0) = 1;
    p(1, 2) = 1;
    p(2, 1) = 1;
    p(3, 3) = 1;
    return p;
}

MatW r_check(const Cyclotomic3& z) { return permutation4() * r_matrix(z); }

MatW tl_block() {
    MatW e(4, 4);
    e(1, 1) = -kQ;
    e(1, 2) = 1;
    e(2, 1) = 1;
    e(2, 2) = -kQinv;
    return e;
}

Cyclotomic3 tl_tau() { return -kQ - kQinv; }

Cyclotomic3 TwistSpec::boundary_phase() const {
    switch (kind) {
        case Twist::plus: return kQ;
        case Twist::minus: return kQinv;
        case Twist::none: break;
    }
    return 1;
}

Cyclotomic3 TwistSpec::omega_up() const {
    switch (kind) {
        case Twist::plus: return Cyclotomic3::sqrt_omega();
        case Twist::minus: return Cyclotomic3::sqrt_omega().conj();
        case Twist::none: break;
    }
    return 1;
}

Cyclotomic3 TwistSpec::omega_down() const { return omega_up().conj(); }

MatW TwistSpec::omega_matrix() const {
    MatW m(2, 2);
    m(0, 0) = omega_up();
    m(1, 1) = omega_down();
    return m;
}

TwistSpec default_twist(int N) { return {N % 2 == 0 ? Twist::plus : Twist::none}; }

MatW embed_two_site(const MatW& op, int n, int a, int b) {
    const std::uint32_t dim = 1u << n;
    const std::uint32_t ma = 1u << (a - 1), mb = 1u << (b - 1);
    MatW out(dim, dim);
    for (std::uint32_t col = 0; col < dim; ++col) {
        int lc = local_index(col & ma, col & mb);
        std::uint32_t rest = col & ~(ma | mb);
        for (int lr = 0; lr < 4; ++lr) {
            const Cyclotomic3& x = op(lr, lc);
            if (x.is_zero()) continue;
            std::uint32_t row = rest | (lr < 2 ? ma : 0u) | (lr % 2 == 0 ? mb : 0u);
            out(row, col) = x;
        }
    }
    return out;
}

MatW embed_one_site(const MatW& op, int n, int a) {
    const std::uint32_t dim = 1u << n;
    const std::uint32_t ma = 1u << (a - 1);
    MatW out(dim, dim);
    for (std::uint32_t col = 0; col < dim; ++col) {
        int lc = (col & ma) ? 0 : 1;
        for (int lr = 0; lr < 2; ++lr) {
            const Cyclotomic3& x = op(lr, lc);
            if (x.is_zero()) continue;
            std::uint32_t row = (col & ~ma) | (lr == 0 ? ma : 0u);
            out(row, col) = x;
        }
    }
    return out;
}

MatW kron(const MatW& x, const MatW& y) {
    MatW out(x.rows() * y.rows(), x.cols() * y.cols());
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t j = 0; j < x.cols(); ++j)
            for (std::size_t k = 0; k < y.rows(); ++k)
                for (std::size_t l = 0; l < y.cols(); ++l)
                    out(i * y.rows() + k, j * y.cols() + l) = x(i, j) * y(k, l);
    return out;
}

MatW tl_generator(int N, int i) { return embed_two_site(tl_block(), N, i, i + 1); }

}  // namespace xxz
