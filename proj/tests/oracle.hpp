#pragma once

// Reference computations that share no code with the library. Words are
// vectors of generator names in print order (rightmost letter acts first);
// the empty word at vertex v stands for the idempotent e_v.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cedga/algebra.hpp"
#include "cedga/morphisms.hpp"

namespace oracle {

using Letters = std::vector<std::string>;

struct Key {
    Letters letters;
    int vertex = 0;  // only used for the empty word
    auto operator<=>(const Key&) const = default;
};

// Integer combination of words; GF2 results are read off mod 2.
using Poly = std::map<Key, long>;

struct Gen {
    std::string name;
    int degree = 0;
    int from = 0;  // vertex, 1-based
    int to = 0;
    int level = 0;
};

struct Algebra {
    std::vector<Gen> gens;
    std::map<std::string, Poly> d;

    const Gen& gen(const std::string& n) const;
    int degree(const Letters& w) const;
};

enum class Sign : std::uint8_t { Transposed, Potential, UniformMinus };

// The n-point algebra with chord levels 0..p_max. `minus` selects the
// grading 1 - 2p - m(j) + m(i); otherwise 1 - 2p + m(j) - m(i).
Algebra point_algebra(int n, const std::vector<int>& m, int p_max, bool minus, Sign sign,
                      const std::string& prefix = "c");

// Families x, y (copies of the point algebra) and xh with |xh| = |x| - 1,
// d xh = x - y - G(d c) where G keeps one hatted slot, writes y to its left
// and x to its right, with the sign (-1)^(degrees passed over). `closed`
// identifies y with x.
Algebra hat_point_algebra(int n, const std::vector<int>& m, int p_max, bool closed, Sign sign);

void add(Poly& into, const Poly& x, long scale = 1);
Poly mul(const Algebra& A, const Poly& x, const Poly& y);
Poly d(const Algebra& A, const Key& w);
Poly d(const Algebra& A, const Poly& x);
Poly reduce_mod2(const Poly& x);
bool is_zero(const Poly& x);

// Generators, endpoints and differentials read off a presentation.
Algebra from_presentation(const cedga::Presentation& P);

// phi(d g) == d phi(g) for every source generator, computed in oracle
// form (mod 2 over GF2).
bool chain_map(const cedga::DgMap& phi);

// Library element to oracle form; coefficients must be integers (Q) or bits.
Poly from_element(const cedga::Presentation& P, const cedga::Element& x);

// Composable words from vertex `from` to `to` (source to target) of the
// given degree, lengths 1..max_len, chord level <= max_level.
std::vector<Letters> words(const Algebra& A, int from, int to, int degree, int max_len, int max_level);

// Dense GF2 solve of d x = target over the span of `basis`.
bool gf2_solvable(const Algebra& A, const std::vector<Letters>& basis, const Poly& target);

// Dimension of the image of V_K in V_L / I_L, K < L. V_L spans the words
// of degree-0 generators of length <= L (idempotents included); I_L spans
// u (d g) v over |g| = -1 with every term of length <= L. Words near length
// L cannot be rewritten inside V_L, hence the smaller K. Linear algebra mod
// a large prime.
std::size_t h0_truncated_dimension(const cedga::Presentation& P, int K, int L);

}  // namespace oracle
