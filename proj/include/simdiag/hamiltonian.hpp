#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "simdiag/pauli.hpp"

namespace simdiag {

/// Coefficients with magnitude at or below this are dropped at load/build time.
inline constexpr double kDropTolerance = 1e-12;

/// Weighted Pauli-sum Hamiltonian. Terms are unique by Pauli string
/// (duplicates are merged by summing coefficients) and keep first-seen order.
class Hamiltonian {
  public:
    Hamiltonian() = default;

    /// Merges duplicate Pauli strings, drops |coeff| <= drop_tolerance,
    /// validates per-term qubit counts and finiteness.
    /// merged_count, when given, receives the number of merge collisions.
    static Hamiltonian from_terms(int n_qubits, std::vector<WeightedTerm> terms,
                                  double drop_tolerance = kDropTolerance,
                                  std::size_t* merged_count = nullptr);

    /// Reads the text format: one `<coeff> <pauli>` pair per line, `#` starts
    /// a comment, qubit count inferred from the first data line.
    /// Throws std::invalid_argument naming the offending line.
    static Hamiltonian load(std::istream& in, double drop_tolerance = kDropTolerance);
    static Hamiltonian load_file(const std::string& path,
                                 double drop_tolerance = kDropTolerance);

    void save(std::ostream& out) const;

    int n_qubits() const { return n_qubits_; }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<WeightedTerm>& terms() const { return terms_; }

  private:
    Hamiltonian(int n, std::vector<WeightedTerm> terms)
        : n_qubits_(n), terms_(std::move(terms)) {}

    int n_qubits_ = 0;
    std::vector<WeightedTerm> terms_;
};

/// A subset of Hamiltonian terms whose Pauli strings pairwise commute.
struct CommutingGroup {
    int group_index = 0;
    std::vector<WeightedTerm> terms;
};

/// First-fit greedy partition into mutually commuting groups: terms are
/// scanned in Hamiltonian order and placed into the first existing group
/// whose members all commute with them, else a new group is opened.
std::vector<CommutingGroup> greedy_partition(const Hamiltonian& h);

struct PartitionStats {
    std::size_t term_count = 0;
    std::size_t group_count = 0;
    std::size_t max_group_size = 0;
    double predicted_speedup = 0.0;  // m / (n * n_g), 0 when undefined
};

PartitionStats partition_stats(int n_qubits, std::span<const CommutingGroup> groups);

}  // namespace simdiag
