#include "replab/symbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace replab {

SymbolicWord SymbolicWord::from_string(const std::string& s, WordMode mode) {
    if (s.size() > 63) throw std::invalid_argument("SymbolicWord: length > 63");
    SymbolicWord w;
    w.length = static_cast<int>(s.size());
    w.mode = mode;
    for (int j = 0; j < w.length; ++j) {
        if (s[j] == '1')
            w.bits |= (1ull << j);
        else if (s[j] != '0')
            throw std::invalid_argument("SymbolicWord: symbols must be 0/1");
    }
    return w;
}

std::string SymbolicWord::to_string() const {
    std::string s(length, '0');
    for (int j = 0; j < length; ++j)
        if (symbol(j)) s[j] = '1';
    return s;
}

bool is_admissible(const SymbolicWord& w) {
    if (w.length == 0) return true;
    const std::uint64_t mask = w.length >= 64 ? ~0ull : (1ull << w.length) - 1;
    const std::uint64_t b = w.bits & mask;
    if ((b & (b >> 1)) != 0) return false;
    if (w.mode == WordMode::Cyclic) {
        if (w.length == 1) return (b & 1u) == 0;  // "1" repeats into "11..."
        if ((b & 1u) && (b >> (w.length - 1))) return false;
    }
    return true;
}

SymbolicWord shift(const SymbolicWord& w) {
    if (w.length == 0) throw std::invalid_argument("shift: empty word");
    SymbolicWord out = w;
    if (w.mode == WordMode::Linear) {
        out.bits = w.bits >> 1;
        out.length = w.length - 1;
    } else {
        out.bits = (w.bits >> 1) | ((w.bits & 1ull) << (w.length - 1));
    }
    return out;
}

double sigma_metric(const SymbolicWord& a, const SymbolicWord& b) {
    if (a.length != b.length) throw std::invalid_argument("sigma_metric: length mismatch");
    double sum = 0.0;
    double weight = 1.0;
    for (int j = 0; j < a.length; ++j) {
        if (a.symbol(j) != b.symbol(j)) sum += weight;
        weight *= 0.5;
    }
    return sum;
}

CountTable counts(long n) {
    if (n < 1) throw std::invalid_argument("counts: n must be >= 1");
    CountTable t;
    t.n = static_cast<int>(n);
    // A_1 = 2, A_2 = 3, A_{k+2} = A_{k+1} + A_k.
    BigInt a1 = 2, a2 = 3;
    if (n == 1)
        t.A = a1;
    else {
        for (long k = 3; k <= n; ++k) {
            const BigInt next = a1 + a2;
            a1 = a2;
            a2 = next;
        }
        t.A = a2;
    }
    // Fibonacci and Lucas.
    BigInt f1 = 1, f2 = 1;  // F_1, F_2
    BigInt l1 = 1, l2 = 3;  // L_1, L_2
    if (n == 1) {
        t.F = f1;
        t.L = l1;
    } else {
        for (long k = 3; k <= n; ++k) {
            const BigInt fn = f1 + f2;
            f1 = f2;
            f2 = fn;
            const BigInt ln = l1 + l2;
            l1 = l2;
            l2 = ln;
        }
        t.F = f2;
        t.L = l2;
    }
    // B_1 = 1, B_2 = 3, B_{k+1} = A_k + A_{k-2}  (A_0 = 1).
    if (n == 1)
        t.B = 1;
    else if (n == 2)
        t.B = 3;
    else {
        auto A_of = [](long k) -> BigInt {
            if (k == 0) return 1;
            BigInt x1 = 2, x2 = 3;
            if (k == 1) return x1;
            for (long j = 3; j <= k; ++j) {
                const BigInt nx = x1 + x2;
                x1 = x2;
                x2 = nx;
            }
            return x2;
        };
        t.B = A_of(n - 1) + A_of(n - 3);
    }
    return t;
}

PeriodicEnumeration enumerate_periodic(int n) {
    if (n < 1 || n > 30) throw std::invalid_argument("enumerate_periodic: need 1 <= n <= 30");
    PeriodicEnumeration out;
    out.table = counts(n);
    for (std::uint64_t b = 0; b < (1ull << n); ++b) {
        SymbolicWord w{b, n, WordMode::Cyclic};
        if (is_admissible(w)) out.words.push_back(w);
    }
    if (BigInt(out.words.size()) != out.table.B)
        throw std::logic_error("enumerate_periodic: enumeration disagrees with recurrence");
    return out;
}

std::vector<std::string> admissible_words(int n) {
    std::vector<std::string> words;
    for (std::uint64_t b = 0; b < (1ull << n); ++b) {
        SymbolicWord w{b, n, WordMode::Linear};
        if (is_admissible(w)) words.push_back(w.to_string());
    }
    std::sort(words.begin(), words.end());
    return words;
}

std::string dense_orbit_prefix(long m) {
    if (m < 1) throw std::invalid_argument("dense_orbit_prefix: m must be >= 1");
    std::string out;
    long emitted = 0;
    for (int len = 1; emitted < m && len <= 30; ++len) {
        for (const auto& w : admissible_words(len)) {
            out += w;
            out += '0';  // separator, part of the pattern
            if (++emitted == m) break;
        }
    }
    return out;
}

}  // namespace replab
