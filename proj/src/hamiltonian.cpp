#include "simdiag/hamiltonian.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace simdiag {

namespace {

struct MaskKey {
    std::uint64_t x, z;
    bool operator==(const MaskKey&) const = default;
};

struct MaskKeyHash {
    std::size_t operator()(const MaskKey& k) const {
        std::uint64_t h = k.x * 0x9e3779b97f4a7c15ull;
        h ^= k.z + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

[[noreturn]] void load_error(std::size_t line_no, const std::string& what) {
    throw std::invalid_argument("hamiltonian load error at line " + std::to_string(line_no) +
                                ": " + what);
}

}  // namespace

Hamiltonian Hamiltonian::from_terms(int n_qubits, std::vector<WeightedTerm> terms,
                                    double drop_tolerance, std::size_t* merged_count) {
    std::vector<WeightedTerm> merged;
    merged.reserve(terms.size());
    std::unordered_map<MaskKey, std::size_t, MaskKeyHash> index;
    std::size_t collisions = 0;
    for (auto& t : terms) {
        if (t.pauli.n_qubits() != n_qubits) {
            throw std::invalid_argument("term qubit count does not match hamiltonian");
        }
        if (!std::isfinite(t.coeff)) {
            throw std::invalid_argument("non-finite coefficient");
        }
        const MaskKey key{t.pauli.x_mask(), t.pauli.z_mask()};
        auto [it, inserted] = index.emplace(key, merged.size());
        if (inserted) {
            merged.push_back(std::move(t));
        } else {
            merged[it->second].coeff += t.coeff;
            ++collisions;
        }
    }
    if (merged_count != nullptr) {
        *merged_count = collisions;
    }
    std::vector<WeightedTerm> kept;
    kept.reserve(merged.size());
    for (auto& t : merged) {
        if (std::abs(t.coeff) > drop_tolerance) {
            kept.push_back(std::move(t));
        }
    }
    return Hamiltonian(n_qubits, std::move(kept));
}

Hamiltonian Hamiltonian::load(std::istream& in, double drop_tolerance) {
    std::vector<WeightedTerm> terms;
    int n_qubits = -1;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string coeff_text, pauli_text, extra;
        if (!(fields >> coeff_text)) {
            continue;  // blank or comment-only line
        }
        if (!(fields >> pauli_text)) {
            load_error(line_no, "expected `<coeff> <pauli>`");
        }
        if (fields >> extra) {
            load_error(line_no, "unexpected trailing field '" + extra + "'");
        }
        double coeff = 0.0;
        const char* begin = coeff_text.data();
        const char* end = begin + coeff_text.size();
        auto [ptr, ec] = std::from_chars(begin, end, coeff);
        if (ec != std::errc() || ptr != end) {
            load_error(line_no, "invalid coefficient '" + coeff_text + "'");
        }
        if (!std::isfinite(coeff)) {
            load_error(line_no, "non-finite coefficient");
        }
        if (n_qubits < 0) {
            n_qubits = static_cast<int>(pauli_text.size());
            if (n_qubits == 0 || n_qubits > kMaxQubits) {
                load_error(line_no, "unsupported qubit count " + std::to_string(n_qubits));
            }
        }
        try {
            terms.push_back({coeff, PauliString::parse(pauli_text, n_qubits)});
        } catch (const std::invalid_argument& e) {
            load_error(line_no, e.what());
        }
    }
    if (n_qubits < 0) {
        throw std::invalid_argument("hamiltonian load error: no terms in input");
    }
    return from_terms(n_qubits, std::move(terms), drop_tolerance);
}

Hamiltonian Hamiltonian::load_file(const std::string& path, double drop_tolerance) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open hamiltonian file: " + path);
    }
    return load(in, drop_tolerance);
}

void Hamiltonian::save(std::ostream& out) const {
    out.precision(17);
    for (const auto& t : terms_) {
        out << t.coeff << ' ' << t.pauli.str() << '\n';
    }
}

std::vector<CommutingGroup> greedy_partition(const Hamiltonian& h) {
    std::vector<CommutingGroup> groups;
    for (const auto& term : h.terms()) {
        bool placed = false;
        for (auto& g : groups) {
            bool fits = true;
            for (const auto& member : g.terms) {
                if (!commutes(term.pauli, member.pauli)) {
                    fits = false;
                    break;
                }
            }
            if (fits) {
                g.terms.push_back(term);
                placed = true;
                break;
            }
        }
        if (!placed) {
            groups.push_back({static_cast<int>(groups.size()), {term}});
        }
    }
    return groups;
}

PartitionStats partition_stats(int n_qubits, std::span<const CommutingGroup> groups) {
    PartitionStats s;
    s.group_count = groups.size();
    for (const auto& g : groups) {
        s.term_count += g.terms.size();
        s.max_group_size = std::max(s.max_group_size, g.terms.size());
    }
    if (n_qubits > 0 && s.group_count > 0) {
        s.predicted_speedup = static_cast<double>(s.term_count) /
                              (static_cast<double>(n_qubits) * static_cast<double>(s.group_count));
    }
    return s;
}

}  // namespace simdiag
