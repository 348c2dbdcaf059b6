#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "replab/symbolic.hpp"

using namespace replab;

namespace {
// Independent string-based oracle for admissibility.
bool str_admissible(const std::string& s, bool cyclic) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == '1' && s[i + 1] == '1') return false;
    if (cyclic && !s.empty() && s.front() == '1' && s.back() == '1') return false;
    return true;
}

std::vector<std::string> brute_words(int n, bool cyclic) {
    std::vector<std::string> out;
    for (std::uint64_t m = 0; m < (1ull << n); ++m) {
        std::string s(n, '0');
        for (int j = 0; j < n; ++j)
            if ((m >> j) & 1u) s[j] = '1';
        if (str_admissible(s, cyclic)) out.push_back(s);
    }
    return out;
}

// Transfer-matrix oracle: trace of [[1,1],[1,0]]^n.
std::uint64_t matrix_trace(int n) {
    std::array<std::uint64_t, 4> M{1, 1, 1, 0}, R{1, 0, 0, 1};
    auto mul = [](const std::array<std::uint64_t, 4>& A, const std::array<std::uint64_t, 4>& B) {
        return std::array<std::uint64_t, 4>{
            A[0] * B[0] + A[1] * B[2], A[0] * B[1] + A[1] * B[3],
            A[2] * B[0] + A[3] * B[2], A[2] * B[1] + A[3] * B[3]};
    };
    for (int i = 0; i < n; ++i) R = mul(R, M);
    return R[0] + R[3];
}
}  // namespace

TEST_CASE("admissibility basics") {
    CHECK(is_admissible(SymbolicWord::from_string("0101")));
    CHECK(is_admissible(SymbolicWord::from_string("0101", WordMode::Cyclic)));
    CHECK_FALSE(is_admissible(SymbolicWord::from_string("0110")));
    // Wraparound: linearly fine, cyclically forbidden.
    CHECK(is_admissible(SymbolicWord::from_string("10001")));
    CHECK_FALSE(is_admissible(SymbolicWord::from_string("10001", WordMode::Cyclic)));
    // The single-symbol word "1" wraps onto itself.
    CHECK(is_admissible(SymbolicWord::from_string("1")));
    CHECK_FALSE(is_admissible(SymbolicWord::from_string("1", WordMode::Cyclic)));
}

TEST_CASE("admissibility agrees with the string oracle up to n = 14") {
    for (int n = 1; n <= 14; ++n) {
        for (std::uint64_t m = 0; m < (1ull << n); ++m) {
            std::string s(n, '0');
            for (int j = 0; j < n; ++j)
                if ((m >> j) & 1u) s[j] = '1';
            CHECK(is_admissible(SymbolicWord::from_string(s)) == str_admissible(s, false));
            CHECK(is_admissible(SymbolicWord::from_string(s, WordMode::Cyclic)) ==
                  str_admissible(s, true));
        }
    }
}

TEST_CASE("shift semantics") {
    CHECK(shift(SymbolicWord::from_string("100", WordMode::Cyclic)).to_string() == "001");
    CHECK(shift(SymbolicWord::from_string("000", WordMode::Cyclic)).to_string() == "000");
    CHECK(shift(SymbolicWord::from_string("101")).to_string() == "01");
    // Rotation preserves cyclic admissibility.
    for (const auto& s : brute_words(10, true)) {
        SymbolicWord w = SymbolicWord::from_string(s, WordMode::Cyclic);
        for (int k = 0; k < 10; ++k) {
            w = shift(w);
            CHECK(is_admissible(w));
        }
    }
}

TEST_CASE("truncated metric on prefixes") {
    const auto w1 = SymbolicWord::from_string("0101");
    CHECK(sigma_metric(w1, w1) == 0.0);
    CHECK(sigma_metric(SymbolicWord::from_string("01"), SymbolicWord::from_string("10")) == 1.5);
    CHECK(sigma_metric(SymbolicWord::from_string("00"), SymbolicWord::from_string("10")) == 1.0);
    CHECK_THROWS(sigma_metric(w1, SymbolicWord::from_string("01")));
}

TEST_CASE("metric axioms on random triples") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<std::uint64_t> bits(0, (1ull << 16) - 1);
    for (int trial = 0; trial < 200; ++trial) {
        SymbolicWord x{bits(rng), 16, WordMode::Linear};
        SymbolicWord y{bits(rng), 16, WordMode::Linear};
        SymbolicWord z{bits(rng), 16, WordMode::Linear};
        CHECK(sigma_metric(x, y) == sigma_metric(y, x));
        CHECK(sigma_metric(x, z) <= sigma_metric(x, y) + sigma_metric(y, z) + 1e-15);
        if (x.bits != y.bits) CHECK(sigma_metric(x, y) > 0.0);
    }
}

TEST_CASE("count table: pinned small values and identities") {
    CHECK(counts(1).A == 2);
    CHECK(counts(2).A == 3);
    CHECK(counts(3).A == 5);
    CHECK(counts(4).A == 8);
    CHECK(counts(1).B == 1);
    CHECK(counts(2).B == 3);
    CHECK(counts(3).B == 4);
    CHECK(counts(10).B == 123);
    CHECK(counts(10).L == 123);
    for (int n = 1; n <= 40; ++n) {
        const auto t = counts(n);
        CHECK(t.A == counts(n + 2).F);          // A_n = F_{n+2}
        CHECK(t.B == t.L);                      // B_n = L_n
        if (n >= 2) CHECK(t.L == counts(n + 1).F + counts(n - 1).F);
    }
}

TEST_CASE("recurrences survive far beyond machine integers") {
    const auto t = counts(1000);
    CHECK(t.A == counts(999).A + counts(998).A);
    CHECK(t.B == t.L);
    // F_1000 has 209 decimal digits; a 64-bit overflow would wrap silently.
    CHECK(t.F.str().size() == 209);
}

TEST_CASE("exhaustive enumeration matches recurrences and the matrix trace") {
    for (int n = 1; n <= 20; ++n) {
        const auto en = enumerate_periodic(n);
        CHECK(BigInt(en.words.size()) == en.table.B);
        CHECK(BigInt(matrix_trace(n)) == en.table.L);
        const auto brute = brute_words(n, true);
        REQUIRE(en.words.size() == brute.size());
        std::set<std::string> got;
        for (const auto& w : en.words) got.insert(w.to_string());
        for (const auto& s : brute) CHECK(got.count(s) == 1);
    }
}

TEST_CASE("shift orbits partition the cyclic words") {
    const int n = 12;
    const auto en = enumerate_periodic(n);
    std::set<std::uint64_t> seen;
    std::map<int, long> orbits_by_least_period;
    for (const auto& w : en.words) {
        if (seen.count(w.bits)) continue;
        SymbolicWord r = w;
        std::vector<std::uint64_t> cycle;
        do {
            cycle.push_back(r.bits);
            seen.insert(r.bits);
            r = shift(r);
        } while (r.bits != w.bits);
        orbits_by_least_period[static_cast<int>(cycle.size())]++;
    }
    BigInt total = 0;
    for (const auto& [d, cnt] : orbits_by_least_period) {
        CHECK(n % d == 0);  // orbit sizes divide n
        total += BigInt(d) * cnt;
    }
    CHECK(total == en.table.B);
}

TEST_CASE("dense-orbit prefix starts as the hand expansion and stays admissible") {
    // Blocks in length-then-lex order, each closed by a 0 separator:
    // 0,1,00,01,10,000,...
    const std::string prefix = dense_orbit_prefix(5);
    CHECK(prefix.rfind("0010000010100", 0) == 0);
    // Long prefixes outgrow the bit-packed words; check the string directly.
    for (long m = 1; m <= 40; ++m) CHECK(str_admissible(dense_orbit_prefix(m), false));
}

TEST_CASE("dense-orbit block census matches the linear counts") {
    // The first A_1 + A_2 + A_3 = 2 + 3 + 5 blocks exhaust lengths 1..3.
    const auto words3 = admissible_words(3);
    CHECK(BigInt(words3.size()) == counts(3).A);
    long m = 0;
    for (int n = 1; n <= 3; ++n) m += static_cast<long>(admissible_words(n).size());
    CHECK(m == 10);
    const std::string prefix = dense_orbit_prefix(m);
    // Every block of length n appears; check total length: sum n*A_n + m separators.
    CHECK(prefix.size() == static_cast<std::size_t>(1 * 2 + 2 * 3 + 3 * 5 + m));
}

TEST_CASE("round trip through strings") {
    for (const auto& s : {"0", "1", "010", "1000101", "000000000000001"}) {
        CHECK(SymbolicWord::from_string(s).to_string() == s);
        CHECK(SymbolicWord::from_string(s, WordMode::Cyclic).to_string() == s);
    }
}
