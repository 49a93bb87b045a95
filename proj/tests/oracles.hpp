#pragma once

// Test-only brute-force oracles, kept independent of the library's solvers.

#include "torictool/monoid.hpp"
#include "torictool/symbols.hpp"

#include <functional>
#include <random>
#include <vector>

namespace torictool::testing {

// visit all Q in N^n with |Q| <= bound
inline void for_each_multiindex(int n, long bound, const std::function<void(const IntVec &)> &fn) {
    IntVec cur(n, Int(0));
    auto rec = [&](auto &&self, int pos, long left) -> void {
        if (pos == n) {
            fn(cur);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, bound);
}

// all N^n solutions of the system with |x| <= bound, by direct scan
inline std::vector<IntVec> brute_solutions(const DioSystem &sys, long bound) {
    std::vector<IntVec> out;
    for_each_multiindex(sys.n, bound, [&](const IntVec &x) {
        if (sys.satisfied_by(x)) out.push_back(x);
    });
    return out;
}

// is x a particular + N-combination of generators?
inline bool generated_by(const AffineMonoidDescription &d, const IntVec &x) {
    std::vector<IntVec> starts = d.particulars;
    if (starts.empty()) starts.push_back(IntVec(d.n, Int(0)));
    std::function<bool(const IntVec &)> combo = [&](const IntVec &rem) -> bool {
        bool zero = true;
        for (auto &v : rem) {
            if (v < 0) return false;
            if (v != 0) zero = false;
        }
        if (zero) return true;
        for (auto &g : d.generators) {
            bool fits = true;
            for (size_t i = 0; i < rem.size(); ++i)
                if (rem[i] < g[i]) { fits = false; break; }
            if (!fits) continue;
            IntVec next = rem;
            for (size_t i = 0; i < rem.size(); ++i) next[i] -= g[i];
            if (combo(next)) return true;
        }
        return false;
    };
    for (auto &p : starts) {
        IntVec rem = x;
        bool ok = true;
        for (size_t i = 0; i < rem.size(); ++i) {
            rem[i] -= p[i];
            if (rem[i] < 0) ok = false;
        }
        if (ok && combo(rem)) return true;
    }
    return false;
}

// direct-definition support-order minimal elements of (lattice cap N^n), scanning
// all points with |x| <= bound
inline std::vector<IntVec> brute_paper_minimals(const LatticeConstraints &C, int n, long bound) {
    std::vector<IntVec> pts;
    for_each_multiindex(n, bound, [&](const IntVec &x) {
        if (total_degree(x) == 0) return;
        if (lattice_contains(C, x)) pts.push_back(x);
    });
    auto support = [](const IntVec &v) {
        std::vector<int> s;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) s.push_back((int)i);
        return s;
    };
    auto subseteq = [](const std::vector<int> &a, const std::vector<int> &b) {
        return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    std::vector<IntVec> out;
    for (auto &x : pts) {
        bool minimal = true;
        auto sx = support(x);
        for (auto &y : pts) {
            if (y == x) continue;
            auto sy = support(y);
            bool strictly_smaller_support = subseteq(sy, sx) && sy != sx;
            bool same_support_lex_less = sy == sx && y < x;
            if (strictly_smaller_support || same_support_lex_less) { minimal = false; break; }
        }
        if (minimal) out.push_back(x);
    }
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

struct Rng {
    std::mt19937_64 gen;
    explicit Rng(uint64_t seed) : gen(seed) {}
    long pick(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen); }
    Rat rat(long mx = 9) {
        long p = pick(-mx, mx);
        long q = pick(1, mx);
        return Rat(p, q);
    }
};

} // namespace torictool::testing
