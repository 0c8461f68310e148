#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "oracle.hpp"
#include "simdiag/hamiltonian.hpp"
#include "simdiag/models.hpp"

using namespace simdiag;

TEST_CASE("load parses the line format") {
    std::istringstream in("# two-qubit example\n0.5 ZZ\n-0.3 XI\n");
    auto h = Hamiltonian::load(in);
    CHECK(h.n_qubits() == 2);
    REQUIRE(h.term_count() == 2);
    CHECK(h.terms()[0].coeff == doctest::Approx(0.5));
    CHECK(h.terms()[0].pauli == PauliString::parse("ZZ"));
    CHECK(h.terms()[1].coeff == doctest::Approx(-0.3));
}

TEST_CASE("load merges duplicates and drops zero terms") {
    std::istringstream in("1.0 ZI\n0.5 ZI\n0.0 XX\n");
    auto h = Hamiltonian::load(in);
    REQUIRE(h.term_count() == 1);
    CHECK(h.terms()[0].coeff == doctest::Approx(1.5));
    CHECK(h.terms()[0].pauli == PauliString::parse("ZI"));
}

TEST_CASE("load keeps first-seen order across merges") {
    std::istringstream in("1.0 XX\n2.0 ZZ\n0.25 XX\n-1.0 YY\n");
    auto h = Hamiltonian::load(in);
    REQUIRE(h.term_count() == 3);
    CHECK(h.terms()[0].pauli == PauliString::parse("XX"));
    CHECK(h.terms()[0].coeff == doctest::Approx(1.25));
    CHECK(h.terms()[1].pauli == PauliString::parse("ZZ"));
    CHECK(h.terms()[2].pauli == PauliString::parse("YY"));
}

TEST_CASE("load reports the offending line") {
    {
        std::istringstream in("0.5 ZZ\nnope ZZ\n");
        CHECK_THROWS_WITH_AS(Hamiltonian::load(in), doctest::Contains("line 2"),
                             std::invalid_argument);
    }
    {
        std::istringstream in("0.5 ZZ\n0.5 ZZZ\n");
        CHECK_THROWS_WITH_AS(Hamiltonian::load(in), doctest::Contains("line 2"),
                             std::invalid_argument);
    }
    {
        std::istringstream in("0.5 ZA\n");
        CHECK_THROWS_AS(Hamiltonian::load(in), std::invalid_argument);
    }
    {
        std::istringstream in("# empty\n");
        CHECK_THROWS_WITH_AS(Hamiltonian::load(in), doctest::Contains("no terms"),
                             std::invalid_argument);
    }
}

TEST_CASE("save/load round trip") {
    std::mt19937_64 rng(3);
    auto h = oracle::random_hamiltonian(6, 20, rng);
    std::stringstream buf;
    h.save(buf);
    auto h2 = Hamiltonian::load(buf);
    REQUIRE(h2.term_count() == h.term_count());
    for (std::size_t k = 0; k < h.term_count(); ++k) {
        CHECK(h2.terms()[k].pauli == h.terms()[k].pauli);
        CHECK(h2.terms()[k].coeff == doctest::Approx(h.terms()[k].coeff));
    }
}

TEST_CASE("greedy partition: TFIM lands in two groups") {
    auto h = gen_tfim(8, 42);
    auto groups = greedy_partition(h);
    REQUIRE(groups.size() == 2);
    CHECK(groups[0].terms.size() == 8 * 7 / 2);
    CHECK(groups[1].terms.size() == 8);
}

TEST_CASE("greedy partition: worked 4-qubit group stays whole") {
    std::istringstream in(
        "1 YIXI\n1 IXIY\n1 XZYZ\n1 YZXZ\n1 XIYI\n1 IYIX\n1 ZXZY\n1 ZYZX\n");
    auto h = Hamiltonian::load(in);
    // Brute-force all-pairs commutation over the listed terms backs the
    // single-group expectation.
    for (std::size_t a = 0; a < h.term_count(); ++a) {
        for (std::size_t b = a + 1; b < h.term_count(); ++b) {
            CHECK(commutes(h.terms()[a].pauli, h.terms()[b].pauli));
        }
    }
    auto groups = greedy_partition(h);
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].terms.size() == 8);
}

TEST_CASE("greedy partition: single term") {
    std::istringstream in("0.7 XYZ\n");
    auto groups = greedy_partition(Hamiltonian::load(in));
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].terms.size() == 1);
}

TEST_CASE("partition covers terms exactly and groups commute internally") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 10);
        const int m = 1 + static_cast<int>(rng() % 60);
        auto h = oracle::random_hamiltonian(n, m, rng);
        auto groups = greedy_partition(h);

        std::map<std::pair<std::uint64_t, std::uint64_t>, int> wanted;
        for (const auto& t : h.terms()) {
            wanted[{t.pauli.x_mask(), t.pauli.z_mask()}]++;
        }
        std::size_t placed = 0;
        for (const auto& g : groups) {
            for (std::size_t a = 0; a < g.terms.size(); ++a) {
                wanted[{g.terms[a].pauli.x_mask(), g.terms[a].pauli.z_mask()}]--;
                ++placed;
                for (std::size_t b = a + 1; b < g.terms.size(); ++b) {
                    CHECK(commutes(g.terms[a].pauli, g.terms[b].pauli));
                }
            }
        }
        CHECK(placed == h.term_count());
        for (const auto& [key, count] : wanted) CHECK(count == 0);
    }
}

TEST_CASE("partition is deterministic") {
    std::mt19937_64 rng(9);
    auto h = oracle::random_hamiltonian(8, 40, rng);
    auto a = greedy_partition(h);
    auto b = greedy_partition(h);
    REQUIRE(a.size() == b.size());
    for (std::size_t g = 0; g < a.size(); ++g) {
        REQUIRE(a[g].terms.size() == b[g].terms.size());
        for (std::size_t k = 0; k < a[g].terms.size(); ++k) {
            CHECK(a[g].terms[k].pauli == b[g].terms[k].pauli);
        }
    }
}

TEST_CASE("partition stats") {
    auto h = gen_tfim(30, 1);
    CHECK(h.term_count() == 465);
    auto groups = greedy_partition(h);
    auto stats = partition_stats(30, groups);
    CHECK(stats.term_count == 465);
    CHECK(stats.group_count == 2);
    CHECK(stats.max_group_size == 435);
    CHECK(stats.predicted_speedup == doctest::Approx(465.0 / (30.0 * 2.0)));

    auto empty = partition_stats(30, {});
    CHECK(empty.term_count == 0);
    CHECK(empty.group_count == 0);
    CHECK(empty.max_group_size == 0);
    CHECK(empty.predicted_speedup == 0.0);
}
