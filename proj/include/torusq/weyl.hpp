#pragma once

#include <unordered_map>
#include <vector>

#include "torusq/numeric.hpp"

namespace torusq {

struct RootDatum;
struct Weight;

// A Weyl group element as its integer matrix in the simple-root basis
// (column vectors of root coordinates transform as x -> mat * x), together
// with one reduced word.  For elements produced by enumerate_weyl the word
// is the lexicographically least reduced word; length = word size is the
// inversion count and sign = det = (-1)^length.
struct WeylElement {
    size_t rank = 0;
    IVec mat;               // rank*rank, row-major
    std::vector<int> word;  // generator indices, 1-based; r[word0] applied last
    int sign = 1;

    int length() const { return static_cast<int>(word.size()); }
    bool same_element(const WeylElement& o) const { return mat == o.mat; }
};

WeylElement weyl_identity(size_t rank);

// The simple reflection r_i (i 1-based) of the datum.
WeylElement simple_reflection(const RootDatum& d, int i);

// Operator composition: (a*b)(x) = a(b(x)); words concatenate.
WeylElement compose(const WeylElement& a, const WeylElement& b);

// Inverse via the reversed word (simple reflections are involutions).
WeylElement inverse(const WeylElement& w);

RVec act(const WeylElement& w, const RVec& root_coords);
Weight act(const WeylElement& w, const Weight& x);

// The full Weyl group in breadth-first order: by length, then by
// lexicographic reduced word.  elements[0] is the identity; the longest
// element is unique and sits last.
struct WeylGroup {
    std::vector<WeylElement> elements;
    std::unordered_map<IVec, size_t, IVecHash> index_of;  // matrix -> index

    size_t order() const { return elements.size(); }
    const WeylElement& longest() const { return elements.back(); }
    size_t find(const WeylElement& w) const;
};

// Full in-memory enumeration.  Cheap through rank 4 (F4: 1152 elements),
// fine for E6 (51840); E7/E8 are permitted but large.
WeylGroup enumerate_weyl(const RootDatum& d);

// (x+, w) with x+ dominant and w(x) = x+.  The returned w is the unique
// minimal-length such element (for singular x this is the minimal coset
// representative modulo the stabilizer); any simple-reflection ascent
// reaches it, so ties over reduced words never affect the element.
std::pair<Weight, WeylElement> dominant_representative(const RootDatum& d,
                                                       const Weight& x);

} // namespace torusq
