#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace modrep {

using i64 = std::int64_t;
using u64 = std::uint64_t;

enum class ErrorKind {
    InvalidInput,
    Depth,
    HalfInteger,
    Multiplicity,
    SmallWeight,
    ModulusTooSmall,
    BudgetExceeded,
    Genericity,
    Invariant,
    Division,
    NoSolution,
    Singular,
    WindowOverflow,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Integer weight vector. Groups use a prefix of the four slots; the rest stay 0.
struct Weight {
    std::array<i64, 4> v{};

    Weight() = default;
    Weight(i64 a) : v{a, 0, 0, 0} {}
    Weight(i64 a, i64 b) : v{a, b, 0, 0} {}
    Weight(i64 a, i64 b, i64 c) : v{a, b, c, 0} {}
    Weight(i64 a, i64 b, i64 c, i64 d) : v{a, b, c, d} {}

    i64& operator[](std::size_t i) { return v[i]; }
    i64 operator[](std::size_t i) const { return v[i]; }

    Weight& operator+=(const Weight& o) {
        for (int i = 0; i < 4; ++i) v[i] += o.v[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (int i = 0; i < 4; ++i) v[i] -= o.v[i];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a) {
        for (auto& x : a.v) x = -x;
        return a;
    }
    friend Weight operator*(i64 k, Weight a) {
        for (auto& x : a.v) x *= k;
        return a;
    }
    friend bool operator==(const Weight& a, const Weight& b) { return a.v == b.v; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.v != b.v; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.v < b.v; }
};

std::ostream& operator<<(std::ostream& os, const Weight& w);
std::string to_string(const Weight& w, int dims);

struct WeightHash {
    std::size_t operator()(const Weight& w) const noexcept {
        u64 h = 1469598103934665603ULL;
        for (auto x : w.v) {
            h ^= static_cast<u64>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

// Floor division and non-negative remainder.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}
inline i64 pmod(i64 a, i64 m) {
    i64 r = a % m;
    return r < 0 ? r + m : r;
}

bool is_prime(i64 n);

// Arithmetic in Z/m for m < 2^62.
i64 mulmod(i64 a, i64 b, i64 m);
i64 powmod(i64 a, i64 e, i64 m);
i64 invmod(i64 a, i64 m);  // throws Division if not invertible

// Teichmuller lift of x in F_p^x to (Z/p^N)^x.
i64 teichmuller(i64 x, i64 p, int N);

i64 ipow(i64 b, int e);

// p-adic valuation of a non-zero integer.
int valuation(i64 x, i64 p);

}  // namespace modrep
