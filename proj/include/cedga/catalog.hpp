#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cedga/bundle.hpp"

namespace cedga {

/// Sign attached to the quadratic term c^{p-l}_kj c^l_ik of d c^p_ij.
///   Transposed:   (-1)^(m(k)+m(j))
///   Potential:    (-1)^(m(i)+m(k))
///   UniformMinus: -1
/// Over GF2 all three agree. Over Q only Transposed gives d^2 = 0 for every
/// potential; the other two need m = 0 (mod 2).
enum class SignReading : std::uint8_t { Transposed, Potential, UniformMinus };

std::string to_string(SignReading s);

/// One copy of the n-point algebra inside a larger presentation.
struct PointFamily {
    std::string prefix = "c";           // generator names are prefix + p + "_" + ij
    std::string link;                   // link id; defaults to prefix
    std::vector<IdempotentId> sigma;    // point i (0-based) -> idempotent
    std::vector<int> m;                 // Maslov potential, one per point
    int p_max = 2;
    PotentialConvention convention = PotentialConvention::PotentialMinus;
    SignReading signs = SignReading::Transposed;
};

/// (p, i, j) with 1-based i, j.
using ChordKey = std::tuple<int, int, int>;
using FamilyIndex = std::map<ChordKey, GeneratorId>;

/// |c^p_ij| under the given convention (i, j 1-based).
int chord_degree(const std::vector<int>& m, PotentialConvention conv, int p, int i, int j);

/// "c0_12", or "c0_12_3"-style with underscores when an index exceeds 9.
std::string chord_name(const std::string& prefix, int p, int i, int j);

/// Adds the generators of one n-point family (short chords) and their
/// differentials. Throws InvalidArgument for n < 2 or mismatched sizes.
FamilyIndex add_point_family(Presentation& P, const PointFamily& f);

/// Adds a hat family: hatted generators with |xh| = |x| - 1 and
/// d xh = x - y - G(d xh), with G the operator that keeps one hatted slot,
/// puts y left of it and x right of it, with the Koszul sign of the
/// unhatted letters passed over. G is the (y, x)-derivation extending
/// c -> xh, so the minus sign is what makes d^2 = 0 over Q; over GF2 the
/// sign is invisible. With y == x (closed) the x - y term drops.
FamilyIndex add_hat_family(Presentation& P, const PointFamily& hat, const FamilyIndex& x, const FamilyIndex& y);

Presentation make_point_algebra(int n, std::vector<int> m, int p_max, PotentialConvention conv, CoeffRing ring,
                                SignReading signs = SignReading::Transposed);

/// Families x, y and xh over idempotents e1..en; closed identifies x and y.
Presentation make_hat_point_algebra(int n, std::vector<int> m, int p_max, bool closed, CoeffRing ring,
                                    PotentialConvention conv = PotentialConvention::PotentialMinus,
                                    SignReading signs = SignReading::Transposed);

struct FreeProduct {
    PresentationPtr product;
    DgMap inc1;
    DgMap inc2;
};

/// Free product over shared idempotents. shared[k] names the idempotent of
/// P1 that idempotent k of P2 is glued to; std::nullopt keeps it separate.
/// Throws RingMismatch, or InvalidArgument for a non-injective matching or
/// a generator name present in both factors.
FreeProduct free_product(PresentationPtr P1, PresentationPtr P2, const std::vector<std::optional<IdempotentId>>& shared);

struct ExampleOptions {
    int p_max = 2;
    std::optional<CoeffRing> ring;  // overrides the entry's default ring
};

/// Registry of worked examples and family instances.
std::vector<std::string> example_names();
CatalogBundle example(const std::string& name, const ExampleOptions& opts = {});

}  // namespace cedga
