#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "torusq/errors.hpp"

namespace torusq {

// Arbitrary-precision integer and exact rational.  Arithmetic on canonical
// mpq_class values stays canonical, but the (num, den) constructor does NOT
// reduce -- always build quotients through make_rat.
using Int = mpz_class;
using Rat = mpq_class;

using IVec = std::vector<long>;   // small integer coordinate vectors
using RVec = std::vector<Rat>;    // exact rational coordinate vectors

inline Int num(const Rat& r) { return r.get_num(); }
inline Int den(const Rat& r) { return r.get_den(); }

// Canonical rational num/den (reduced, positive denominator).
inline Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) throw PreconditionError("make_rat: zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// floor/ceil of an exact rational as a big integer.
inline Int rat_floor(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Int rat_ceil(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Rational upper bound on sqrt(r), r >= 0.  sqrt(a/b) = sqrt(ab)/b and
// mpz_sqrt truncates, so (floor(sqrt(ab)) + 1)/b is a strict upper bound.
inline Rat sqrt_upper_bound(const Rat& r) {
    if (r < 0) throw InternalError("sqrt_upper_bound: negative argument");
    Int ab = num(r) * den(r);
    Int s;
    mpz_sqrt(s.get_mpz_t(), ab.get_mpz_t());
    return make_rat(s + 1, den(r));
}

// Exact quotient a/b; throws InternalError when b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw InternalError("exact_div: non-exact integer division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Parse "a" or "a/b" into an exact rational.  Throws PreconditionError on
// malformed input (this is the CLI ingestion path).
Rat parse_rat(const std::string& s);

// "a" when integral, "a/b" otherwise.
std::string rat_str(const Rat& r);

// Hash for small integer vectors (FNV-1a over the words).
struct IVecHash {
    size_t operator()(const IVec& v) const {
        size_t h = 1469598103934665603ull;
        for (long x : v) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Number of worker threads: min(TORUSQ_THREADS, hardware concurrency),
// defaulting to hardware concurrency when the variable is unset or unusable.
unsigned thread_count();

// Evaluate fn(i) for i in [0, n) on up to thread_count() threads.  The
// caller's fn must only touch state indexed by i; results are therefore
// deterministic regardless of scheduling.
void parallel_for_index(size_t n, const std::function<void(size_t)>& fn);

} // namespace torusq
