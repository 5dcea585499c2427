#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclocode/cosets.hpp"
#include "cyclocode/counting.hpp"
#include "cyclocode/galois.hpp"
#include "cyclocode/params.hpp"

namespace cyclocode {

/// Default seed for every randomized probe.
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// T straight from its definition: the union of the rotation orbits of every
/// descendant of u = a..a b 0..0. Any 1 <= a, b <= q-1.
DefiningSet brute_T(const CodeParams& p, std::uint64_t cap = kDefaultIndexCap);

/// Number of words with digits_ok for each exact pattern profile; the (0, 0)
/// entry counts the words (including 0) with no occurrence at all.
std::map<AdmissiblePair, std::uint64_t> brute_profile_census(const CodeParams& p);

/// n - deg g, with g the generator polynomial of the cyclic code whose zeros
/// are D within [1, n-1].
std::uint64_t brute_dimension(const FieldContext& field, const DefiningSet& d);

/// The v with [0, v) inside the set and v outside it; nullopt if the set is
/// all of [0, n].
std::optional<std::uint64_t> brute_max_prefix(const DefiningSet& t_perp);

enum class DistanceKind { exact, lower_bound_only, budget_exhausted };

struct DistanceResult {
  DistanceKind kind = DistanceKind::exact;
  /// exact: the minimum distance. lower_bound_only: the supplied proven floor.
  /// budget_exhausted: smallest nonzero weight among the codewords seen, an upper bound.
  std::uint64_t value = 0;
  std::uint64_t enumerated = 0;  // nonzero codewords examined
  std::uint64_t dimension = 0;   // dimension of the enumerated dual code
};

/// Which dual is measured: that of the cyclic code with zeros T \ {0}
/// (length n), or that of its extension with zeros T (length q^m).
enum class DualFamily { cyclic, extended };

/// Minimum nonzero weight of the dual code by enumerating all of it when its
/// size q^k is at most `budget`. `weight_floor` must be a proven lower bound
/// (1 is always safe); the search stops as soon as a codeword of that weight
/// appears. Over budget, the first `budget` codewords are scanned and the
/// result is budget_exhausted, or lower_bound_only when weight_floor > 1.
DistanceResult dual_min_distance(const FieldContext& field, const DefiningSet& t, DualFamily family,
                                 std::uint64_t budget, std::uint64_t weight_floor = 1);

/// Generator matrix rows (k x N) of the cyclic code with zeros D within
/// [1, n-1], or of its extension when `extended` (parity at index n).
std::vector<std::vector<unsigned>> code_generator_matrix(const FieldContext& field, const DefiningSet& d,
                                                         bool extended);

/// Generator matrix of the dual of that code: shifts of the reciprocal check
/// polynomial, plus the all-ones word when `extended`.
std::vector<std::vector<unsigned>> dual_generator_matrix(const FieldContext& field, const DefiningSet& d,
                                                         bool extended);

/// Basis of {x : G x^T = 0} over GF(q).
std::vector<std::vector<unsigned>> null_space(const BaseField& f, std::vector<std::vector<unsigned>> rows,
                                              std::size_t width);

/// Applies g -> u g + v to the coordinates of an extended word (index i holds
/// alpha^i, index n holds the element 0). Requires u != 0 and a table-backed field.
std::vector<unsigned> apply_affine(const FieldContext& field, std::span<const unsigned> word, Element u,
                                   Element v);

/// True iff rho_s(word) = 0 for every s in D.
bool satisfies_zeros(const FieldContext& field, std::span<const unsigned> word, const DefiningSet& d);

struct ProbeResult {
  bool invariant = true;
  std::uint64_t trials = 0;
  std::uint64_t seed = kDefaultSeed;
  std::string violation;  // first failing (u, v, s), empty when invariant
};

/// Samples random codewords of the extended code with defining set D and
/// random affine maps, checking that each image still has the zeros D.
ProbeResult affine_invariance_probe(const FieldContext& field, const DefiningSet& d, std::uint64_t trials,
                                    std::uint64_t seed = kDefaultSeed);

/// Probe on build_T(p) / brute_T(p).
bool affine_invariance_probe(const FieldContext& field, const CodeParams& p, std::uint64_t trials,
                             std::uint64_t seed = kDefaultSeed);

/// Negative control: D with the orbit of its smallest nonzero member with a
/// strict ascendant in D removed, so the result is no longer descendant-closed.
/// nullopt when no such member exists.
std::optional<DefiningSet> drop_descendant_orbit(const DefiningSet& d);

}  // namespace cyclocode
