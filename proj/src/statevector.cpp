#include "simdiag/statevector.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "simdiag/rng.hpp"

namespace simdiag {

namespace {

constexpr std::uint64_t kParallelCutoff = std::uint64_t(1) << 16;

/// Inserts a zero bit at position p (bits at and above p shift left).
inline std::uint64_t expand1(std::uint64_t base, int p) {
    const std::uint64_t low = (std::uint64_t(1) << p) - 1;
    return ((base & ~low) << 1) | (base & low);
}

/// Inserts zero bits at positions p < q of the final index.
inline std::uint64_t expand2(std::uint64_t base, int p, int q) {
    return expand1(expand1(base, p), q);
}

inline bool approx_unitary2(const Mat2& u) {
    // U * U^dagger == I within 1e-10.
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            Amplitude e = u[r * 2 + 0] * std::conj(u[c * 2 + 0]) +
                          u[r * 2 + 1] * std::conj(u[c * 2 + 1]);
            if (std::abs(e - (r == c ? 1.0 : 0.0)) > 1e-10) return false;
        }
    }
    return true;
}

inline bool approx_unitary4(const Mat4& u) {
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            Amplitude e = 0;
            for (int k = 0; k < 4; ++k) e += u[r * 4 + k] * std::conj(u[c * 4 + k]);
            if (std::abs(e - (r == c ? 1.0 : 0.0)) > 1e-10) return false;
        }
    }
    return true;
}

/// coeff with its sign flipped when parity is 1, branch-free.
inline double signed_by_parity(double coeff, std::uint64_t parity) {
    return std::bit_cast<double>(std::bit_cast<std::uint64_t>(coeff) ^ (parity << 63));
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("state vector qubit count out of range");
    }
    if (n_qubits > 30) {
        throw std::invalid_argument("state vector with n > 30 qubits exceeds sane memory");
    }
    amps_.assign(dim(), Amplitude(0.0, 0.0));
    amps_[0] = 1.0;
}

StateVector StateVector::zero_state(int n_qubits) {
    return StateVector(n_qubits);
}

StateVector StateVector::plus_state(int n_qubits) {
    StateVector sv(n_qubits);
    const double a = 1.0 / std::sqrt(static_cast<double>(sv.dim()));
    for (auto& amp : sv.amps_) amp = a;
    return sv;
}

StateVector StateVector::random_state(int n_qubits, std::uint64_t seed) {
    StateVector sv(n_qubits);
    double norm_sq = 0.0;
    for (std::uint64_t i = 0; i < sv.dim(); ++i) {
        const double re = rng::gaussian(rng::hash(seed, 0x57a7eull, i, 0));
        const double im = rng::gaussian(rng::hash(seed, 0x57a7eull, i, 1));
        sv.amps_[i] = {re, im};
        norm_sq += re * re + im * im;
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& amp : sv.amps_) amp *= inv;
    return sv;
}

void StateVector::check_qubit(int q) const {
    if (q < 0 || q >= n_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
}

void StateVector::apply_single_qubit(const Mat2& u, int target) {
    check_qubit(target);
    if (!approx_unitary2(u)) {
        throw std::invalid_argument("single-qubit matrix is not unitary");
    }
    Amplitude* const amp = amps_.data();
    const std::int64_t pairs = static_cast<std::int64_t>(dim() >> 1);
    const std::uint64_t tbit = std::uint64_t(1) << target;
    const Amplitude u00 = u[0], u01 = u[1], u10 = u[2], u11 = u[3];
#pragma omp parallel for schedule(static) if (dim() >= kParallelCutoff)
    for (std::int64_t base = 0; base < pairs; ++base) {
        const std::uint64_t i0 = expand1(static_cast<std::uint64_t>(base), target);
        const std::uint64_t i1 = i0 | tbit;
        const Amplitude a0 = amp[i0];
        const Amplitude a1 = amp[i1];
        amp[i0] = u00 * a0 + u01 * a1;
        amp[i1] = u10 * a0 + u11 * a1;
    }
    stats_.amp_reads += dim();
    stats_.amp_writes += dim();
    stats_.kernel_calls += 1;
}

void StateVector::apply_two_qubit(const Mat4& u, int q1, int q2) {
    check_qubit(q1);
    check_qubit(q2);
    if (q1 == q2) {
        throw std::invalid_argument("two-qubit gate requires distinct qubits");
    }
    if (!approx_unitary4(u)) {
        throw std::invalid_argument("two-qubit matrix is not unitary");
    }
    Amplitude* const amp = amps_.data();
    const std::int64_t quads = static_cast<std::int64_t>(dim() >> 2);
    const int lo = q1 < q2 ? q1 : q2;
    const int hi = q1 < q2 ? q2 : q1;
    const std::uint64_t b1 = std::uint64_t(1) << q1;
    const std::uint64_t b2 = std::uint64_t(1) << q2;
#pragma omp parallel for schedule(static) if (dim() >= kParallelCutoff)
    for (std::int64_t base = 0; base < quads; ++base) {
        const std::uint64_t i00 = expand2(static_cast<std::uint64_t>(base), lo, hi);
        const std::uint64_t idx[4] = {i00, i00 | b2, i00 | b1, i00 | b1 | b2};
        Amplitude v[4];
        for (int k = 0; k < 4; ++k) v[k] = amp[idx[k]];
        for (int r = 0; r < 4; ++r) {
            Amplitude acc = u[r * 4 + 0] * v[0];
            for (int k = 1; k < 4; ++k) acc += u[r * 4 + k] * v[k];
            amp[idx[r]] = acc;
        }
    }
    stats_.amp_reads += dim();
    stats_.amp_writes += dim();
    stats_.kernel_calls += 1;
}

void StateVector::apply_hadamard(int target) {
    check_qubit(target);
    Amplitude* const amp = amps_.data();
    const std::int64_t pairs = static_cast<std::int64_t>(dim() >> 1);
    const std::uint64_t tbit = std::uint64_t(1) << target;
    const double inv_sqrt2 = 0.7071067811865475244;
#pragma omp parallel for schedule(static) if (dim() >= kParallelCutoff)
    for (std::int64_t base = 0; base < pairs; ++base) {
        const std::uint64_t i0 = expand1(static_cast<std::uint64_t>(base), target);
        const std::uint64_t i1 = i0 | tbit;
        const Amplitude a0 = amp[i0];
        const Amplitude a1 = amp[i1];
        amp[i0] = (a0 + a1) * inv_sqrt2;
        amp[i1] = (a0 - a1) * inv_sqrt2;
    }
    stats_.amp_reads += dim();
    stats_.amp_writes += dim();
    stats_.kernel_calls += 1;
}

void StateVector::apply_batched_cnot(int control, std::uint64_t targets) {
    check_qubit(control);
    const std::uint64_t cbit = std::uint64_t(1) << control;
    const std::uint64_t all = dim() - 1;
    if (targets == 0) {
        throw std::invalid_argument("batched cnot needs at least one target");
    }
    if ((targets & ~all) != 0 || (targets & cbit) != 0) {
        throw std::invalid_argument("batched cnot targets overlap control or exceed register");
    }
    // Canonical pair representative: control bit 1, lowest target bit 0.
    const int t0 = std::countr_zero(targets);
    Amplitude* const amp = amps_.data();
    const std::int64_t quads = static_cast<std::int64_t>(dim() >> 2);
    const int lo = control < t0 ? control : t0;
    const int hi = control < t0 ? t0 : control;
#pragma omp parallel for schedule(static) if (dim() >= kParallelCutoff)
    for (std::int64_t base = 0; base < quads; ++base) {
        const std::uint64_t i = expand2(static_cast<std::uint64_t>(base), lo, hi) | cbit;
        const std::uint64_t j = i ^ targets;
        const Amplitude tmp = amp[i];
        amp[i] = amp[j];
        amp[j] = tmp;
    }
    stats_.amp_reads += dim() >> 1;
    stats_.amp_writes += dim() >> 1;
    stats_.kernel_calls += 1;
}

void StateVector::apply_phase_layer(std::uint64_t s_mask,
                                    std::span<const std::pair<int, int>> cz_pairs,
                                    bool dagger) {
    const std::uint64_t all = dim() - 1;
    if ((s_mask & ~all) != 0) {
        throw std::invalid_argument("phase layer s_mask exceeds register");
    }
    std::vector<std::uint64_t> pair_masks;
    pair_masks.reserve(cz_pairs.size());
    for (auto [a, b] : cz_pairs) {
        check_qubit(a);
        check_qubit(b);
        if (a == b) throw std::invalid_argument("cz pair with equal qubits");
        pair_masks.push_back((std::uint64_t(1) << a) | (std::uint64_t(1) << b));
    }
    Amplitude* const amp = amps_.data();
    const std::int64_t count = static_cast<std::int64_t>(dim());
    const std::uint64_t* const pm = pair_masks.data();
    const std::size_t n_pairs = pair_masks.size();
#pragma omp parallel for schedule(static) if (dim() >= kParallelCutoff)
    for (std::int64_t b = 0; b < count; ++b) {
        const std::uint64_t bits = static_cast<std::uint64_t>(b);
        unsigned p = static_cast<unsigned>(std::popcount(bits & s_mask)) & 3u;
        if (dagger) p = (4u - p) & 3u;
        unsigned cz = 0;
        for (std::size_t k = 0; k < n_pairs; ++k) {
            cz ^= ((bits & pm[k]) == pm[k]) ? 1u : 0u;
        }
        const unsigned quarter = (p + 2u * cz) & 3u;
        const Amplitude a = amp[b];
        switch (quarter) {
            case 0: break;
            case 1: amp[b] = Amplitude(-a.imag(), a.real()); break;
            case 2: amp[b] = -a; break;
            case 3: amp[b] = Amplitude(a.imag(), -a.real()); break;
        }
    }
    stats_.amp_reads += dim();
    stats_.amp_writes += dim();
    stats_.kernel_calls += 1;
}

void StateVector::apply_diagonal_exp(std::span<const std::uint64_t> z_masks,
                                     std::span<const double> coeffs, double dt) {
    if (z_masks.size() != coeffs.size()) {
        throw std::invalid_argument("diagonal exp: mask/coefficient count mismatch");
    }
    if (!std::isfinite(dt)) {
        throw std::invalid_argument("diagonal exp: non-finite time step");
    }
    const std::uint64_t all = dim() - 1;
    for (auto m : z_masks) {
        if ((m & ~all) != 0) throw std::invalid_argument("diagonal exp: mask exceeds register");
    }
    Amplitude* const amp = amps_.data();
    const std::int64_t count = static_cast<std::int64_t>(dim());
    const std::uint64_t* const zm = z_masks.data();
    const double* const cf = coeffs.data();
    const std::size_t m = z_masks.size();
#pragma omp parallel for schedule(static) if (dim() >= kParallelCutoff)
    for (std::int64_t b = 0; b < count; ++b) {
        const std::uint64_t bits = static_cast<std::uint64_t>(b);
        double angle = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const std::uint64_t parity =
                static_cast<std::uint64_t>(std::popcount(bits & zm[k])) & 1u;
            angle += signed_by_parity(cf[k], parity);
        }
        const double phi = -dt * angle;
        const Amplitude f(std::cos(phi), std::sin(phi));
        const Amplitude a = amp[b];
        amp[b] = Amplitude(a.real() * f.real() - a.imag() * f.imag(),
                           a.real() * f.imag() + a.imag() * f.real());
    }
    stats_.amp_reads += dim();
    stats_.amp_writes += dim();
    stats_.kernel_calls += 1;
}

void StateVector::apply_diagonal_exp(const DiagonalGroup& group, double dt) {
    apply_diagonal_exp(group.z_masks, group.signed_coeffs, dt);
}

void StateVector::apply_pauli_rotation(const WeightedTerm& term, double dt) {
    const PauliString& p = term.pauli;
    if (p.n_qubits() != n_qubits_) {
        throw std::invalid_argument("pauli rotation: qubit count mismatch");
    }
    const double theta = term.coeff * dt;
    Amplitude* const amp = amps_.data();
    const std::uint64_t z = p.z_mask();
    const std::uint64_t x = p.x_mask();

    if (x == 0) {
        // Diagonal term: amplitude picks e^{-i theta (+/-1)} by Z parity.
        const Amplitude f_even(std::cos(theta), -std::sin(theta));
        const Amplitude f_odd = std::conj(f_even);
        const std::int64_t count = static_cast<std::int64_t>(dim());
#pragma omp parallel for schedule(static) if (dim() >= kParallelCutoff)
        for (std::int64_t b = 0; b < count; ++b) {
            const bool odd = std::popcount(static_cast<std::uint64_t>(b) & z) & 1;
            const Amplitude f = odd ? f_odd : f_even;
            const Amplitude a = amp[b];
            amp[b] = Amplitude(a.real() * f.real() - a.imag() * f.imag(),
                               a.real() * f.imag() + a.imag() * f.real());
        }
    } else {
        // exp(-i theta P) = cos(theta) I - i sin(theta) P over amplitude
        // pairs (b, b^x); P|b> = i^s (-1)^{<z,b>} |b^x>.
        const double c = std::cos(theta);
        Amplitude w(0.0, -std::sin(theta));  // -i sin(theta) * i^{phase_exp}
        for (int k = 0; k < p.phase_exp(); ++k) w = Amplitude(-w.imag(), w.real());
        const int t0 = std::countr_zero(x);
        const bool y_parity = std::popcount(z & x) & 1;
        const std::int64_t pairs = static_cast<std::int64_t>(dim() >> 1);
#pragma omp parallel for schedule(static) if (dim() >= kParallelCutoff)
        for (std::int64_t base = 0; base < pairs; ++base) {
            const std::uint64_t i0 = expand1(static_cast<std::uint64_t>(base), t0);
            const std::uint64_t i1 = i0 ^ x;
            const bool par0 = std::popcount(i0 & z) & 1;
            const bool par1 = par0 ^ y_parity;
            const Amplitude w0 = par1 ? -w : w;  // phase attached to a1 -> new a0
            const Amplitude w1 = par0 ? -w : w;
            const Amplitude a0 = amp[i0];
            const Amplitude a1 = amp[i1];
            amp[i0] = c * a0 + w0 * a1;
            amp[i1] = c * a1 + w1 * a0;
        }
    }
    stats_.amp_reads += dim();
    stats_.amp_writes += dim();
    stats_.kernel_calls += 1;
}

void StateVector::apply_clifford(const CliffordCircuit& c) {
    for (int t : c.h_pre) apply_hadamard(t);
    for (std::size_t k = 0; k < c.cnots.size();) {
        const int control = c.cnots[k].first;
        std::uint64_t targets = 0;
        while (k < c.cnots.size() && c.cnots[k].first == control) {
            targets |= std::uint64_t(1) << c.cnots[k].second;
            ++k;
        }
        apply_batched_cnot(control, targets);
    }
    if (!c.czs.empty() || !c.s_layer.empty()) {
        std::uint64_t s_mask = 0;
        for (int t : c.s_layer) s_mask |= std::uint64_t(1) << t;
        apply_phase_layer(s_mask, c.czs, false);
    }
    for (int t : c.h_post) apply_hadamard(t);
}

void StateVector::apply_clifford_inverse(const CliffordCircuit& c) {
    for (int t : c.h_post) apply_hadamard(t);
    if (!c.czs.empty() || !c.s_layer.empty()) {
        std::uint64_t s_mask = 0;
        for (int t : c.s_layer) s_mask |= std::uint64_t(1) << t;
        apply_phase_layer(s_mask, c.czs, true);
    }
    // Same-control CNOTs commute; distinct control batches invert in
    // reverse order.
    std::vector<std::pair<int, std::uint64_t>> batches;
    for (std::size_t k = 0; k < c.cnots.size();) {
        const int control = c.cnots[k].first;
        std::uint64_t targets = 0;
        while (k < c.cnots.size() && c.cnots[k].first == control) {
            targets |= std::uint64_t(1) << c.cnots[k].second;
            ++k;
        }
        batches.emplace_back(control, targets);
    }
    for (auto it = batches.rbegin(); it != batches.rend(); ++it) {
        apply_batched_cnot(it->first, it->second);
    }
    for (int t : c.h_pre) apply_hadamard(t);
}

void StateVector::save_raw(std::ostream& out) const {
    static_assert(sizeof(Amplitude) == 2 * sizeof(double));
    out.write(reinterpret_cast<const char*>(amps_.data()),
              static_cast<std::streamsize>(amps_.size() * sizeof(Amplitude)));
}

StateVector StateVector::load_raw(std::istream& in) {
    std::vector<Amplitude> amps;
    Amplitude a;
    while (in.read(reinterpret_cast<char*>(&a), sizeof(Amplitude))) {
        amps.push_back(a);
    }
    if (amps.empty() || (amps.size() & (amps.size() - 1)) != 0) {
        throw std::invalid_argument("raw state size is not a power of two");
    }
    StateVector sv(std::bit_width(amps.size()) - 1);
    sv.amps_ = std::move(amps);
    return sv;
}

double norm(const StateVector& a) {
    double s = 0.0;
    for (const auto& amp : a.amplitudes()) s += std::norm(amp);
    return std::sqrt(s);
}

double fidelity(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    Amplitude overlap = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::abs(overlap);
}

}  // namespace simdiag
