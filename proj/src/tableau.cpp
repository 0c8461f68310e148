#include "simdiag/tableau.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <utility>

namespace simdiag {

BinaryTableau::BinaryTableau(int n_qubits, std::size_t row_count)
    : n_qubits_(n_qubits), rows_(row_count) {
    if (n_qubits < 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("tableau qubit count out of range");
    }
}

BinaryTableau BinaryTableau::from_terms(std::span<const PauliString> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("tableau requires at least one term");
    }
    BinaryTableau tab(terms[0].n_qubits(), terms.size());
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (terms[k].n_qubits() != tab.n_qubits_) {
            throw std::invalid_argument("tableau terms must share qubit count");
        }
        tab.rows_[k].x = terms[k].x_mask();
        tab.rows_[k].z = terms[k].z_mask();
    }
    return tab;
}

void BinaryTableau::check_qubit(int q) const {
    if (q < 0 || q >= n_qubits_) {
        throw std::out_of_range("tableau qubit index out of range");
    }
}

void BinaryTableau::apply_h(int t) {
    check_qubit(t);
    const std::uint64_t bit = 1ull << t;
    for (auto& r : rows_) {
        r.sign ^= ((r.x & r.z) >> t) & 1;
        const std::uint64_t xt = r.x & bit;
        const std::uint64_t zt = r.z & bit;
        r.x = (r.x & ~bit) | zt;
        r.z = (r.z & ~bit) | xt;
    }
}

void BinaryTableau::apply_s(int t) {
    check_qubit(t);
    const std::uint64_t bit = 1ull << t;
    for (auto& r : rows_) {
        r.sign ^= ((r.x & r.z) >> t) & 1;
        r.z ^= r.x & bit;
    }
}

void BinaryTableau::apply_cnot(int c, int t) {
    check_qubit(c);
    check_qubit(t);
    if (c == t) {
        throw std::invalid_argument("cnot control equals target");
    }
    const std::uint64_t cbit = 1ull << c;
    const std::uint64_t tbit = 1ull << t;
    for (auto& r : rows_) {
        const bool xc = r.x & cbit;
        const bool zc = r.z & cbit;
        const bool xt = r.x & tbit;
        const bool zt = r.z & tbit;
        r.sign ^= xc && zt && (xt == zc);
        if (xc) r.x ^= tbit;  // x_t ^= x_c
        if (zt) r.z ^= cbit;  // z_c ^= z_t (Z propagates target -> control)
    }
}

void BinaryTableau::apply_cz(int c, int t) {
    check_qubit(c);
    check_qubit(t);
    if (c == t) {
        throw std::invalid_argument("cz qubits must differ");
    }
    const std::uint64_t cbit = 1ull << c;
    const std::uint64_t tbit = 1ull << t;
    for (auto& r : rows_) {
        const bool xc = r.x & cbit;
        const bool xt = r.x & tbit;
        const bool zc = r.z & cbit;
        const bool zt = r.z & tbit;
        r.sign ^= xc && xt && (zt != zc);
        if (xc) r.z ^= tbit;  // z_t ^= x_c
        if (xt) r.z ^= cbit;  // z_c ^= x_t
    }
}

void BinaryTableau::swap_rows(std::size_t i, std::size_t j) {
    std::swap(rows_[i], rows_[j]);
}

int BinaryTableau::rank_x_block() const {
    std::array<std::uint64_t, kMaxQubits> pivots{};
    int rank = 0;
    for (const auto& r : rows_) {
        std::uint64_t w = r.x;
        while (w != 0) {
            const int lead = std::countr_zero(w);
            if (pivots[lead] == 0) {
                pivots[lead] = w;
                ++rank;
                break;
            }
            w ^= pivots[lead];
        }
    }
    return rank;
}

BinaryTableau BinaryTableau::padded_to_square() const {
    if (rows_.size() > static_cast<std::size_t>(n_qubits_)) {
        throw std::invalid_argument("tableau has more rows than qubits; cannot pad to square");
    }
    BinaryTableau out = *this;
    out.rows_.resize(static_cast<std::size_t>(n_qubits_));
    return out;
}

std::string BinaryTableau::str() const {
    std::string out;
    for (const auto& r : rows_) {
        for (int q = 0; q < n_qubits_; ++q) out += ((r.x >> q) & 1) ? '1' : '0';
        out += '|';
        for (int q = 0; q < n_qubits_; ++q) out += ((r.z >> q) & 1) ? '1' : '0';
        out += '|';
        out += r.sign ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::vector<std::size_t> independent_subset(std::span<const PauliString> terms) {
    if (terms.empty()) {
        throw std::invalid_argument("independent_subset requires at least one term");
    }
    const int n = terms[0].n_qubits();
    struct SweepRow {
        std::uint64_t x, z;
        std::size_t origin;
    };
    std::vector<SweepRow> rows;
    rows.reserve(terms.size());
    for (std::size_t k = 0; k < terms.size(); ++k) {
        if (terms[k].n_qubits() != n) {
            throw std::invalid_argument("independent_subset terms must share qubit count");
        }
        rows.push_back({terms[k].x_mask(), terms[k].z_mask(), k});
    }

    auto column_bit = [n](const SweepRow& r, int col) -> bool {
        return col < n ? (r.x >> col) & 1 : (r.z >> (col - n)) & 1;
    };

    std::size_t row_cursor = 0;
    int col = 0;
    while (row_cursor < rows.size() && col < 2 * n) {
        if (!column_bit(rows[row_cursor], col)) {
            std::size_t found = rows.size();
            for (std::size_t j = row_cursor + 1; j < rows.size(); ++j) {
                if (column_bit(rows[j], col)) {
                    found = j;
                    break;
                }
            }
            if (found == rows.size()) {
                ++col;
                continue;
            }
            std::swap(rows[row_cursor], rows[found]);
        }
        // Clear this column in every row below the pivot.
        for (std::size_t j = row_cursor + 1; j < rows.size(); ++j) {
            if (column_bit(rows[j], col)) {
                rows[j].x ^= rows[row_cursor].x;
                rows[j].z ^= rows[row_cursor].z;
            }
        }
        ++row_cursor;
        ++col;
    }

    std::vector<std::size_t> kept;
    for (const auto& r : rows) {
        if (r.x != 0 || r.z != 0) {
            kept.push_back(r.origin);
        }
    }
    return kept;
}

}  // namespace simdiag
