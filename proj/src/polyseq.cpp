#include "wpslab/polyseq.hpp"

#include <mutex>
#include <stdexcept>

namespace wpslab {

namespace {

std::mutex cache_mutex;

// All caches below are guarded by cache_mutex and grow monotonically.

std::vector<mpz_class>& sylvester_cache() {
    static std::vector<mpz_class> cache{mpz_class(2)};
    return cache;
}

std::vector<IntPoly>& f_cache() {
    static std::vector<IntPoly> cache{
        IntPoly({1, 1}),  // y + 1
        IntPoly({1, 0, 1}),  // y^2 + 1
    };
    return cache;
}

// prefix(i) = f_0 f_1 ... f_{i-1}, prefix(0) = 1.
std::vector<IntPoly>& prefix_cache() {
    static std::vector<IntPoly> cache{IntPoly::constant(1)};
    return cache;
}

std::vector<IntPoly>& b_cache() {
    static std::vector<IntPoly> cache{IntPoly::constant(1)};
    return cache;
}

std::vector<IntPoly>& z_cache() {
    static std::vector<IntPoly> cache{
        IntPoly({-1, 1}),  // y - 1
        IntPoly({1, -1, 1}),  // y^2 - y + 1
    };
    return cache;
}

// Callers hold cache_mutex.
const IntPoly& f_locked(unsigned i) {
    auto& cache = f_cache();
    while (cache.size() <= i) {
        const IntPoly& a = cache[cache.size() - 1];
        const IntPoly& b = cache[cache.size() - 2];
        IntPoly next = a * b + (a - mpz_class(1)) * (a - mpz_class(2));
        cache.push_back(std::move(next));
    }
    return cache[i];
}

const IntPoly& prefix_locked(unsigned i) {
    auto& cache = prefix_cache();
    while (cache.size() <= i) {
        unsigned k = static_cast<unsigned>(cache.size());
        cache.push_back(cache.back() * f_locked(k - 1));
    }
    return cache[i];
}

IntPoly e_locked(unsigned i) { return prefix_locked(i) * IntPoly::variable(); }

const IntPoly& b_locked(unsigned i) {
    auto& cache = b_cache();
    while (cache.size() <= i) {
        unsigned k = static_cast<unsigned>(cache.size());
        mpz_class sign = (k % 2 == 0) ? 1 : -1;
        cache.push_back(f_locked(k - 1) * cache.back() + sign);
    }
    return cache[i];
}

const IntPoly& z_locked(unsigned i) {
    auto& cache = z_cache();
    while (cache.size() <= i) {
        unsigned k = static_cast<unsigned>(cache.size());
        cache.push_back(e_locked(k - 1) * cache[k - 1] + cache[k - 2]);
    }
    return cache[i];
}

IntPoly d_locked(unsigned i) {
    return e_locked(i) + b_locked(i) * (f_locked(i) - mpz_class(1));
}

IntPoly dtilde_locked(unsigned i) {
    return b_locked(i) * (f_locked(i) - mpz_class(1)) - e_locked(i);
}

}  // namespace

mpz_class sylvester(unsigned i) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto& cache = sylvester_cache();
    while (cache.size() <= i) {
        const mpz_class& c = cache.back();
        cache.push_back(c * (c - 1) + 1);
    }
    return cache[i];
}

const char* to_string(PolySequenceKind kind) {
    switch (kind) {
        case PolySequenceKind::F: return "f";
        case PolySequenceKind::E: return "e";
        case PolySequenceKind::B: return "b";
        case PolySequenceKind::Z: return "z";
        case PolySequenceKind::D: return "d";
        case PolySequenceKind::DTilde: return "dtilde";
    }
    throw std::invalid_argument("unknown polynomial sequence kind");
}

IntPoly poly_sequence(PolySequenceKind kind, unsigned i) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    switch (kind) {
        case PolySequenceKind::F: return f_locked(i);
        case PolySequenceKind::E: return e_locked(i);
        case PolySequenceKind::B: return b_locked(i);
        case PolySequenceKind::Z: return z_locked(i);
        case PolySequenceKind::D: return d_locked(i);
        case PolySequenceKind::DTilde: return dtilde_locked(i);
    }
    throw std::invalid_argument("unknown polynomial sequence kind");
}

std::vector<IdentityCheck> verify_identities(unsigned i_max) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    std::vector<IdentityCheck> checks;
    const IntPoly y = IntPoly::variable();

    // f_i = 1 + y * sum_{j<=i} (-1)^{i-j} f_0...f_{j-1}
    for (unsigned i = 0; i <= i_max; ++i) {
        IntPoly acc;
        for (unsigned j = 0; j <= i; ++j) {
            if ((i - j) % 2 == 0) {
                acc += prefix_locked(j);
            } else {
                acc -= prefix_locked(j);
            }
        }
        bool holds = f_locked(i) == y * acc + mpz_class(1);
        checks.push_back({"f_alternating_prefix_sum", i, holds});
    }

    // e_i = f_i + f_{i-1} - 2
    for (unsigned i = 1; i <= i_max; ++i) {
        bool holds = e_locked(i) == f_locked(i) + f_locked(i - 1) - mpz_class(2);
        checks.push_back({"e_as_f_sum", i, holds});
    }

    // e_i = f_{i-1} e_{i-1}
    for (unsigned i = 1; i <= i_max; ++i) {
        bool holds = e_locked(i) == f_locked(i - 1) * e_locked(i - 1);
        checks.push_back({"e_product_step", i, holds});
    }

    // f_0...f_{i-1} z_i = (-1)^{i+1} + b_i (f_i - 1)
    for (unsigned i = 0; i <= i_max; ++i) {
        mpz_class sign = (i % 2 == 0) ? -1 : 1;
        bool holds = prefix_locked(i) * z_locked(i) ==
                     b_locked(i) * (f_locked(i) - mpz_class(1)) + sign;
        checks.push_back({"prefix_times_z", i, holds});
    }

    // d_i = (-1)^i + f_0...f_{i-1} (z_i + y)
    for (unsigned i = 0; i <= i_max; ++i) {
        mpz_class sign = (i % 2 == 0) ? 1 : -1;
        bool holds = d_locked(i) == prefix_locked(i) * (z_locked(i) + y) + sign;
        checks.push_back({"d_closed_form", i, holds});
    }

    // dtilde_i = (-1)^i + f_0...f_{i-1} (z_i - y)
    for (unsigned i = 0; i <= i_max; ++i) {
        mpz_class sign = (i % 2 == 0) ? 1 : -1;
        bool holds = dtilde_locked(i) == prefix_locked(i) * (z_locked(i) - y) + sign;
        checks.push_back({"dtilde_closed_form", i, holds});
    }

    return checks;
}

}  // namespace wpslab
