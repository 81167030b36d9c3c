#include "modrep/common.hpp"

#include <sstream>

namespace modrep {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::Depth: return "DepthError";
        case ErrorKind::HalfInteger: return "HalfIntegerError";
        case ErrorKind::Multiplicity: return "MultiplicityError";
        case ErrorKind::SmallWeight: return "SmallWeightError";
        case ErrorKind::ModulusTooSmall: return "ModulusTooSmall";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::Genericity: return "GenericityError";
        case ErrorKind::Invariant: return "InvariantError";
        case ErrorKind::Division: return "DivisionError";
        case ErrorKind::NoSolution: return "NoSolution";
        case ErrorKind::Singular: return "SingularError";
        case ErrorKind::WindowOverflow: return "WindowOverflow";
    }
    return "Unknown";
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
    return os << "(" << w[0] << "," << w[1] << "," << w[2] << "," << w[3] << ")";
}

std::string to_string(const Weight& w, int dims) {
    std::ostringstream os;
    os << "(";
    for (int i = 0; i < dims; ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << ")";
    return os.str();
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

i64 mulmod(i64 a, i64 b, i64 m) {
    return static_cast<i64>((static_cast<__int128>(pmod(a, m)) * pmod(b, m)) % m);
}

i64 powmod(i64 a, i64 e, i64 m) {
    i64 r = 1 % m, b = pmod(a, m);
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

i64 invmod(i64 a, i64 m) {
    i64 g = m, x = 0, x1 = 1, a1 = pmod(a, m);
    while (a1 != 0) {
        i64 q = g / a1;
        i64 t = g - q * a1;
        g = a1;
        a1 = t;
        t = x - q * x1;
        x = x1;
        x1 = t;
    }
    if (g != 1) throw Error(ErrorKind::Division, "element not invertible modulo " + std::to_string(m));
    return pmod(x, m);
}

i64 ipow(i64 b, int e) {
    i64 r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

i64 teichmuller(i64 x, i64 p, int N) {
    i64 m = ipow(p, N);
    i64 x0 = pmod(x, p);
    if (x0 == 0) throw Error(ErrorKind::Division, "Teichmuller lift of 0");
    return powmod(x0, ipow(p, N - 1), m);
}

int valuation(i64 x, i64 p) {
    if (x == 0) throw Error(ErrorKind::InvalidInput, "valuation of 0");
    int k = 0;
    while (x % p == 0) {
        x /= p;
        ++k;
    }
    return k;
}

}  // namespace modrep
