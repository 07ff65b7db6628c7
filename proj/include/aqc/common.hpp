#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace aqc {

// ============================================================================
// Error taxonomy
// ============================================================================

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

struct DimensionError : Error {
    using Error::Error;
};

/// Requested operation needs data the object does not carry (e.g. a derivative).
struct UnsupportedError : Error {
    using Error::Error;
};

/// Conjugate of a non-superlinear function; carries the finite slope threshold.
struct DegenerateConjugateError : Error {
    double slope_threshold;
    explicit DegenerateConjugateError(double threshold)
        : Error("degenerate conjugate: function has linear growth, psi* is +inf above slope " +
                std::to_string(threshold)),
          slope_threshold(threshold) {}
};

/// Symbol not invertible; carries a witness frequency.
struct SingularSymbolError : Error {
    std::vector<double> xi;
    explicit SingularSymbolError(std::vector<double> witness)
        : Error("singular symbol: operator is not elliptic"), xi(std::move(witness)) {}
};

struct NoKernelError : Error {
    using Error::Error;
};

struct UnsupportedBoundaryError : Error {
    using Error::Error;
};

/// Input violates a growth-class precondition (e.g. unbounded Delta_2).
struct ClassViolationError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// ============================================================================
// Deterministic RNG
// ============================================================================

/// All experiment randomness flows through one of these, seeded explicitly.
/// Uniform doubles are built from the top 53 bits so streams are identical
/// across standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    double uniform() {  // in [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Box-Muller; avoids distribution objects for cross-platform determinism.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    int uniform_int(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

// ============================================================================
// Numeric helpers
// ============================================================================

inline std::vector<double> logspace(double lo, double hi, std::size_t count) {
    if (!(lo > 0.0) || !(hi > lo) || count < 2) throw DomainError("logspace: need 0 < lo < hi, count >= 2");
    std::vector<double> out(count);
    const double la = std::log(lo), lb = std::log(hi);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = std::exp(la + (lb - la) * static_cast<double>(i) / static_cast<double>(count - 1));
    out.front() = lo;
    out.back() = hi;
    return out;
}

inline std::vector<double> linspace(double lo, double hi, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i)
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return out;
}

/// Pairwise (tree) reduction of term(i) over [begin, end). Deterministic for a
/// fixed index range regardless of chunking elsewhere.
template <class F>
double pairwise_sum(std::size_t begin, std::size_t end, F&& term) {
    const std::size_t len = end - begin;
    if (len <= 64) {
        double s = 0.0;
        for (std::size_t i = begin; i < end; ++i) s += term(i);
        return s;
    }
    const std::size_t mid = begin + len / 2;
    return pairwise_sum(begin, mid, term) + pairwise_sum(mid, end, term);
}

/// FNV-1a over a string; used for config digests in reports.
inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

inline bool nearly_equal(double a, double b, double rel, double abs_floor = 0.0) {
    const double diff = std::fabs(a - b);
    return diff <= abs_floor + rel * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace aqc
