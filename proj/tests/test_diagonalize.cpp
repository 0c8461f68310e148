#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"
#include "simdiag/diagonalize.hpp"
#include "simdiag/serialize.hpp"

using namespace simdiag;

namespace {

CommutingGroup group_of(std::initializer_list<const char*> texts, double coeff = 1.0) {
    CommutingGroup g;
    for (const char* t : texts) g.terms.push_back({coeff, PauliString::parse(t)});
    return g;
}

const CommutingGroup kWorkedExample = group_of(
    {"YIXI", "IXIY", "XZYZ", "YZXZ", "XIYI", "IYIX", "ZXZY", "ZYZX"});

using IntPairs = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("worked example: synthesis steps match the published trace") {
    std::vector<PauliString> paulis;
    for (const auto& t : kWorkedExample.terms) paulis.push_back(t.pauli);
    auto idx = independent_subset(paulis);
    REQUIRE(idx == std::vector<std::size_t>{0, 1, 2, 3});

    std::vector<PauliString> basis{paulis[0], paulis[1], paulis[2], paulis[3]};
    auto tab = BinaryTableau::from_terms(basis).padded_to_square();
    const std::uint64_t all = 0b1111;

    auto h_pre = maximize_x_rank(tab, all);
    std::sort(h_pre.begin(), h_pre.end());
    CHECK(h_pre == std::vector<int>{2, 3});
    CHECK(tab.rank_x_block() == 4);

    auto sweep = clear_upper_x(tab, all);
    CHECK(sweep.cnots == IntPairs{{1, 3}, {2, 3}});
    // Full-rank square tableau: pivots land on the diagonal.
    REQUIRE(sweep.pivots.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(sweep.pivots[k].first == k);
        CHECK(sweep.pivots[k].second == static_cast<int>(k));
    }

    auto phase = clear_z_block(tab, all, sweep.pivots);
    CHECK(phase.czs == IntPairs{{0, 2}, {1, 2}, {1, 3}});
    CHECK(phase.s_layer == std::vector<int>{0, 1});

    auto h_post = x_to_z(tab);
    CHECK(h_post == std::vector<int>{0, 1, 2, 3});
    for (std::size_t k = 0; k < tab.row_count(); ++k) CHECK(tab.row(k).x == 0);
}

TEST_CASE("worked example: full circuit and signed diagonal") {
    auto diag = diagonalize_group(kWorkedExample);

    CHECK(diag.circuit.h_pre == std::vector<int>{2, 3});
    CHECK(diag.circuit.cnots == IntPairs{{1, 3}, {2, 3}});
    CHECK(diag.circuit.czs == IntPairs{{0, 2}, {1, 2}, {1, 3}});
    CHECK(diag.circuit.s_layer == std::vector<int>{0, 1});
    CHECK(diag.circuit.h_post == std::vector<int>{0, 1, 2, 3});

    // -Z0 +Z1 -Z0Z2 -Z0Z3 -Z0Z2Z3 +Z1Z3 +Z1Z2Z3 +Z1Z2, in source order.
    const std::vector<std::uint64_t> masks = {0b0001, 0b0010, 0b0101, 0b1001,
                                              0b1101, 0b1010, 0b1110, 0b0110};
    const std::vector<double> coeffs = {-1, 1, -1, -1, -1, 1, 1, 1};
    REQUIRE(diag.z_masks.size() == 8);
    for (std::size_t k = 0; k < 8; ++k) {
        CHECK(diag.z_masks[k] == masks[k]);
        CHECK(diag.signed_coeffs[k] == doctest::Approx(coeffs[k]));
    }
}

TEST_CASE("already-diagonal group yields the identity circuit") {
    auto g = group_of({"ZZII", "IZZI", "ZIIZ", "IIZZ"}, 0.5);
    auto circuit = find_clifford(g);
    CHECK(circuit.empty());

    auto diag = diagonalize_group(g);
    for (std::size_t k = 0; k < g.terms.size(); ++k) {
        CHECK(diag.z_masks[k] == g.terms[k].pauli.z_mask());
        CHECK(diag.signed_coeffs[k] == doctest::Approx(0.5));
    }
}

TEST_CASE("X-only group needs just the H layer") {
    auto g = group_of({"XIII", "IXII", "IIXI", "IIIX"});
    auto circuit = find_clifford(g);
    CHECK(circuit.h_pre.empty());
    CHECK(circuit.cnots.empty());
    CHECK(circuit.czs.empty());
    CHECK(circuit.s_layer.empty());
    CHECK(circuit.h_post == std::vector<int>{0, 1, 2, 3});

    CommutingGroup single;
    single.terms.push_back({0.7, PauliString::parse("X")});
    auto diag = diagonalize_group(single);
    CHECK(diag.circuit.h_post == std::vector<int>{0});
    CHECK(diag.circuit.gate_count() == 1);
    CHECK(diag.z_masks[0] == 0b1);
    CHECK(diag.signed_coeffs[0] == doctest::Approx(0.7));
}

TEST_CASE("column classification") {
    auto kinds = classify_columns(group_of({"ZXYI", "IXYI", "ZIYI"}));
    CHECK(kinds[0] == ColumnKind::diag_only);
    CHECK(kinds[1] == ColumnKind::flip_only);
    CHECK(kinds[2] == ColumnKind::general);
    CHECK(kinds[3] == ColumnKind::diag_only);  // identity column counts as diagonal

    for (auto k : classify_columns(kWorkedExample)) CHECK(k == ColumnKind::general);
}

TEST_CASE("maximize_x_rank edge cases") {
    auto full = BinaryTableau::from_terms(
        std::vector{PauliString::parse("XI"), PauliString::parse("IX")});
    auto gates = maximize_x_rank(full, 0b11);
    CHECK(gates.empty());

    auto zs = BinaryTableau::from_terms(
        std::vector{PauliString::parse("ZI"), PauliString::parse("IZ")});
    gates = maximize_x_rank(zs, 0b11);
    std::sort(gates.begin(), gates.end());
    CHECK(gates == std::vector<int>{0, 1});
    CHECK(zs.rank_x_block() == 2);
}

TEST_CASE("clear_upper_x edge cases") {
    auto lower = BinaryTableau::from_terms(
        std::vector{PauliString::parse("XI"), PauliString::parse("XX")});
    CHECK(clear_upper_x(lower, 0b11).cnots.empty());

    auto one_row = BinaryTableau::from_terms(std::vector{PauliString::parse("XX")})
                       .padded_to_square();
    auto sweep = clear_upper_x(one_row, 0b11);
    CHECK(sweep.cnots == IntPairs{{0, 1}});
    CHECK(one_row.row(0).x == 0b01);
}

TEST_CASE("clear_z_block edge cases") {
    auto clean = BinaryTableau::from_terms(
        std::vector{PauliString::parse("XI"), PauliString::parse("IX")});
    auto sweep = clear_upper_x(clean, 0b11);
    auto phase = clear_z_block(clean, 0b11, sweep.pivots);
    CHECK(phase.czs.empty());
    CHECK(phase.s_layer.empty());

    auto y_row = BinaryTableau::from_terms(std::vector{PauliString::parse("Y")});
    sweep = clear_upper_x(y_row, 0b1);
    phase = clear_z_block(y_row, 0b1, sweep.pivots);
    CHECK(phase.czs.empty());
    CHECK(phase.s_layer == std::vector<int>{0});
    CHECK(y_row.row(0).z == 0);
}

TEST_CASE("x_to_z edge cases") {
    auto zs = BinaryTableau::from_terms(std::vector{PauliString::parse("ZZ")});
    CHECK(x_to_z(zs).empty());

    auto mid = BinaryTableau::from_terms(std::vector{PauliString::parse("IXI")});
    CHECK(x_to_z(mid) == std::vector<int>{1});
    CHECK(mid.row(0).x == 0);
}

TEST_CASE("random commuting groups diagonalize against the dense oracle") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);  // up to 5 qubits
        const int max_terms = std::min(8, 1 << n);
        const int m = 1 + static_cast<int>(rng() % max_terms);
        auto group = oracle::random_commuting_group(n, m, rng);
        auto diag = diagonalize_group(group);

        oracle::Mat u = oracle::circuit_unitary(diag.circuit);
        for (std::size_t k = 0; k < group.terms.size(); ++k) {
            oracle::Mat lhs =
                u * (group.terms[k].coeff * oracle::pauli_dense(group.terms[k].pauli)) *
                u.adjoint();
            oracle::Mat rhs = diag.signed_coeffs[k] *
                              oracle::pauli_dense(
                                  PauliString::from_masks(n, 0, diag.z_masks[k]));
            CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("circuit layers stay sorted and within the gate budget") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        const int m = 1 + static_cast<int>(rng() % (1 << std::min(n, 3)));
        auto group = oracle::random_commuting_group(n, m, rng);
        auto c = find_clifford(group);

        CHECK(std::is_sorted(c.h_pre.begin(), c.h_pre.end()));
        CHECK(std::is_sorted(c.s_layer.begin(), c.s_layer.end()));
        CHECK(std::is_sorted(c.h_post.begin(), c.h_post.end()));
        CHECK(std::is_sorted(c.cnots.begin(), c.cnots.end()));
        CHECK(std::is_sorted(c.czs.begin(), c.czs.end()));

        CHECK(c.h_pre.size() <= static_cast<std::size_t>(n));
        CHECK(c.cnots.size() <= static_cast<std::size_t>(n * (n - 1) / 2));
        CHECK(c.czs.size() <= static_cast<std::size_t>(n * (n - 1)));
        CHECK(c.s_layer.size() <= static_cast<std::size_t>(n));
        CHECK(c.h_post.size() <= static_cast<std::size_t>(n));
    }
}

TEST_CASE("diagonalizing an already-diagonal output is idempotent") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 4);
        auto group = oracle::random_commuting_group(n, 4, rng);
        auto diag = diagonalize_group(group);

        CommutingGroup diagonal_group;
        std::size_t kept = 0;
        for (std::size_t k = 0; k < diag.z_masks.size(); ++k) {
            bool dup = false;
            for (std::size_t j = 0; j < k; ++j) dup |= diag.z_masks[j] == diag.z_masks[k];
            if (dup) continue;
            diagonal_group.terms.push_back(
                {diag.signed_coeffs[k], PauliString::from_masks(n, 0, diag.z_masks[k])});
            ++kept;
        }
        auto again = diagonalize_group(diagonal_group);
        CHECK(again.circuit.empty());
        for (std::size_t k = 0; k < kept; ++k) {
            CHECK(again.z_masks[k] == diagonal_group.terms[k].pauli.z_mask());
            CHECK(again.signed_coeffs[k] ==
                  doctest::Approx(diagonal_group.terms[k].coeff));
        }
    }
}

TEST_CASE("non-commuting input is reported, not silently accepted") {
    CommutingGroup bad;
    bad.terms.push_back({1.0, PauliString::parse("XX")});
    bad.terms.push_back({1.0, PauliString::parse("ZI")});
    CHECK_THROWS_AS(diagonalize_group(bad), std::runtime_error);
}

TEST_CASE("circuit JSON round trip") {
    auto diag = diagonalize_group(kWorkedExample);
    auto j = circuit_to_json(diag.circuit);
    CHECK(circuit_from_json(j) == diag.circuit);

    auto doc = diag_document(4, std::vector<DiagonalGroup>{diag});
    CHECK(doc["n_groups"] == 1);
    CHECK(doc["groups"][0]["z_masks"][0] == "0x1");
    CHECK(doc["groups"][0]["coeffs"][0] == doctest::Approx(-1.0));
}
