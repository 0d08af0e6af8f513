#pragma once

// rho vectors, dominant representatives under the compact Weyl group W_k,
// exact shifted norms, and full orbit enumeration at small rank.
//
// W_k per family:
//   sp / so*  : all permutations of the n coordinates
//   su        : independent permutations within each block
//   so-even   : permutations of coordinates 2..n plus an even number of sign
//               changes there (coordinate 1 fixed)
//   so-odd    : permutations of coordinates 2..n plus arbitrary sign changes
//               (coordinate 1 fixed)
//
// The kernels are templated on the coordinate ring so the exact-rational API
// and the doubled-int64 fast path (used by the exhaustive verifiers) share
// one implementation.

#include "diracgate/weight.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace diracgate {

inline constexpr std::uint64_t kDefaultOrbitGuard = 1'000'000;

namespace detail {

// ---------------------------------------------------------------- kernels

template <typename T>
void dominant_in_place(FamilyKind kind, int left_block, std::vector<T>& v) {
    switch (kind) {
        case FamilyKind::SpReal:
        case FamilyKind::SoStar:
            std::sort(v.begin(), v.end(), std::greater<T>());
            break;
        case FamilyKind::SU:
            std::sort(v.begin(), v.begin() + left_block, std::greater<T>());
            std::sort(v.begin() + left_block, v.end(), std::greater<T>());
            break;
        case FamilyKind::SoEven: {
            // Coordinate 1 fixed; tail -> absolute values sorted descending.
            // Sign changes come in pairs, so the last coordinate ends up
            // negative exactly when the original tail had an odd number of
            // negative entries and no zero to absorb the parity.
            bool any_zero = false;
            int negatives = 0;
            for (std::size_t i = 1; i < v.size(); ++i) {
                if (v[i] < 0) {
                    ++negatives;
                    v[i] = -v[i];
                } else if (v[i] == 0) {
                    any_zero = true;
                }
            }
            std::sort(v.begin() + 1, v.end(), std::greater<T>());
            if (negatives % 2 == 1 && !any_zero) v.back() = -v.back();
            break;
        }
        case FamilyKind::SoOdd: {
            for (std::size_t i = 1; i < v.size(); ++i)
                if (v[i] < 0) v[i] = -v[i];
            std::sort(v.begin() + 1, v.end(), std::greater<T>());
            break;
        }
    }
}

template <typename T>
T norm_sq_shifted_kernel(const std::vector<T>& v, const std::vector<T>& rho) {
    T acc(0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        T t = v[i] + rho[i];
        acc += t * t;
    }
    return acc;
}

inline Int factorial(int k) {
    Int f(1);
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

// Number of distinct permutations of a multiset given as a sorted range.
template <typename It>
Int multiset_perm_count(It first, It last) {
    Int count = factorial(static_cast<int>(last - first));
    It run = first;
    while (run != last) {
        It next = run;
        int m = 0;
        while (next != last && *next == *run) { ++next; ++m; }
        count /= factorial(m);
        run = next;
    }
    return count;
}

template <typename T>
Int orbit_size_kernel(FamilyKind kind, int left_block, std::vector<T> v) {
    switch (kind) {
        case FamilyKind::SpReal:
        case FamilyKind::SoStar:
            std::sort(v.begin(), v.end());
            return multiset_perm_count(v.begin(), v.end());
        case FamilyKind::SU: {
            std::sort(v.begin(), v.begin() + left_block);
            std::sort(v.begin() + left_block, v.end());
            return multiset_perm_count(v.begin(), v.begin() + left_block) *
                   multiset_perm_count(v.begin() + left_block, v.end());
        }
        case FamilyKind::SoEven:
        case FamilyKind::SoOdd: {
            int nonzero = 0;
            for (std::size_t i = 1; i < v.size(); ++i) {
                if (v[i] < 0) v[i] = -v[i];
                if (v[i] != 0) ++nonzero;
            }
            std::sort(v.begin() + 1, v.end());
            Int count = multiset_perm_count(v.begin() + 1, v.end());
            int sign_bits = nonzero;
            // Even-sign-change group: without a zero to absorb parity, only
            // half of the sign patterns are reachable.
            if (kind == FamilyKind::SoEven && nonzero == static_cast<int>(v.size()) - 1)
                sign_bits = nonzero - 1;
            return count << sign_bits;
        }
    }
    return Int(1);
}

template <typename T>
std::vector<std::vector<T>> orbit_kernel(FamilyKind kind, int left_block, const std::vector<T>& v,
                                         std::uint64_t guard) {
    Int size = orbit_size_kernel<T>(kind, left_block, v);
    if (size > guard)
        throw Error(ErrorKind::OrbitTooLarge,
                    "orbit size " + size.str() + " exceeds guard " + std::to_string(guard));

    std::vector<std::vector<T>> orbit;
    orbit.reserve(size.template convert_to<std::size_t>());

    switch (kind) {
        case FamilyKind::SpReal:
        case FamilyKind::SoStar: {
            std::vector<T> w = v;
            std::sort(w.begin(), w.end());
            do orbit.push_back(w);
            while (std::next_permutation(w.begin(), w.end()));
            break;
        }
        case FamilyKind::SU: {
            std::vector<T> w = v;
            std::sort(w.begin(), w.begin() + left_block);
            do {
                std::sort(w.begin() + left_block, w.end());
                do orbit.push_back(w);
                while (std::next_permutation(w.begin() + left_block, w.end()));
            } while (std::next_permutation(w.begin(), w.begin() + left_block));
            break;
        }
        case FamilyKind::SoEven:
        case FamilyKind::SoOdd: {
            std::vector<T> w = v;
            bool any_zero = false;
            int input_negatives = 0;
            for (std::size_t i = 1; i < w.size(); ++i) {
                if (w[i] < 0) {
                    ++input_negatives;
                    w[i] = -w[i];
                }
                if (w[i] == 0) any_zero = true;
            }
            std::sort(w.begin() + 1, w.end());
            // Even sign-change group, no zero to absorb parity: only masks
            // matching the input's own negative-count parity reproduce v's
            // orbit (sign parity is an orbit invariant then).
            const bool parity_bound = (kind == FamilyKind::SoEven) && !any_zero;
            const int wanted_parity = input_negatives % 2;
            do {
                std::vector<int> nonzero_pos;
                for (std::size_t i = 1; i < w.size(); ++i)
                    if (w[i] != 0) nonzero_pos.push_back(static_cast<int>(i));
                const std::uint32_t masks = 1u << nonzero_pos.size();
                for (std::uint32_t mask = 0; mask < masks; ++mask) {
                    if (parity_bound && (std::popcount(mask) % 2 != wanted_parity)) continue;
                    std::vector<T> img = w;
                    for (std::size_t b = 0; b < nonzero_pos.size(); ++b)
                        if (mask & (1u << b)) img[nonzero_pos[b]] = -img[nonzero_pos[b]];
                    orbit.push_back(std::move(img));
                }
            } while (std::next_permutation(w.begin() + 1, w.end()));
            break;
        }
    }
    return orbit;
}

// ---------------------------------------------------- doubled-int64 helpers

inline std::vector<std::int64_t> rho_doubled(const Family& f) {
    const int n = f.coord_count();
    std::vector<std::int64_t> r(n);
    for (int i = 1; i <= n; ++i) {
        switch (f.kind()) {
            case FamilyKind::SpReal: r[i - 1] = 2 * (n - i + 1); break;
            case FamilyKind::SoStar:
            case FamilyKind::SoEven: r[i - 1] = 2 * (n - i); break;
            case FamilyKind::SU:     r[i - 1] = n + 1 - 2 * i; break;
            case FamilyKind::SoOdd:  r[i - 1] = 2 * (n - i) + 1; break;
        }
    }
    return r;
}

// Converts a rational vector to doubled-int64 coordinates; false when any
// coordinate is not a moderate half-integer.
inline bool to_doubled(const Weight& w, std::vector<std::int64_t>& out) {
    out.clear();
    out.reserve(w.size());
    for (const Scalar& c : w) {
        auto d = to_doubled_int(c);
        if (!d) return false;
        out.push_back(*d);
    }
    return true;
}

}  // namespace detail

// ------------------------------------------------------------- public API

inline Weight rho(const Family& f) {
    const int n = f.coord_count();
    Weight r(n);
    for (int i = 1; i <= n; ++i) {
        switch (f.kind()) {
            case FamilyKind::SpReal: r[i - 1] = Scalar(n - i + 1); break;
            case FamilyKind::SoStar:
            case FamilyKind::SoEven: r[i - 1] = Scalar(n - i); break;
            case FamilyKind::SU:     r[i - 1] = make_scalar(n + 1 - 2 * i, 2); break;
            case FamilyKind::SoOdd:  r[i - 1] = make_scalar(2 * (n - i) + 1, 2); break;
        }
    }
    return r;
}

// The unique W_k-conjugate of v in the dominance shape.  v is any vector of
// the right length (typically lambda - s, which is not itself valid).
inline Weight dominant(const Family& f, Weight v) {
    detail::check_length(f, v);
    detail::dominant_in_place(f.kind(), f.left_block(), v);
    return v;
}

// || v + rho ||^2, exactly.
inline Scalar norm_sq_shifted(const Family& f, const Weight& v) {
    detail::check_length(f, v);
    return detail::norm_sq_shifted_kernel(v, rho(f));
}

inline std::uint64_t weyl_orbit_size(const Family& f, const Weight& v) {
    detail::check_length(f, v);
    Int size = detail::orbit_size_kernel(f.kind(), f.left_block(), v);
    if (size > std::numeric_limits<std::uint64_t>::max())
        throw Error(ErrorKind::OrbitTooLarge, "orbit size exceeds 2^64");
    return size.convert_to<std::uint64_t>();
}

// The full orbit { w . v : w in W_k } as a set of distinct vectors.
inline std::vector<Weight> weyl_orbit(const Family& f, const Weight& v,
                                      std::uint64_t guard = kDefaultOrbitGuard) {
    detail::check_length(f, v);
    return detail::orbit_kernel(f.kind(), f.left_block(), v, guard);
}

}  // namespace diracgate
