#pragma once

#include <memory>
#include <vector>

#include "idemca/cyclic.hpp"
#include "idemca/errors.hpp"

namespace idemca {

/// A total function on {0..|X|-1}, stored as its image list.
struct FiniteFunction {
    std::vector<int> images;

    static FiniteFunction identity(int domain_size);

    int domain_size() const { return static_cast<int>(images.size()); }
    int apply(int x) const { return images[static_cast<std::size_t>(x)]; }
    bool is_identity() const;
    bool is_bijection() const;
    bool is_idempotent() const;

    bool operator==(const FiniteFunction&) const = default;
};

/// (f o g)(x) = f(g(x)).
FiniteFunction compose(const FiniteFunction& f, const FiniteFunction& g);

/// An ordered factor list; factors are applied right to left, so the
/// represented map is factors[0] o factors[1] o ... o factors.back().
struct FiniteFactorization {
    FiniteFunction target;
    std::vector<FiniteFunction> factors;
};

/// Writes a non-bijective function (or the identity) as a product of
/// idempotents: per-element movers onto chosen preimages, a set move onto
/// the image, and spare-element transposition triples for the residual
/// permutation of the image. Throws NotDecomposable on non-identity
/// bijections.
FiniteFactorization decompose_finite(const FiniteFunction& f);

bool verify_factorization(const FiniteFactorization& fact);

/// The points of least period <= m over {0..k-1}, with rotation and orbit
/// structure. Case m = 0 is the empty carrier.
class PeriodicCarrier {
public:
    PeriodicCarrier(int k, int m);

    int alphabet_size() const { return k_; }
    int max_period() const { return m_; }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<CyclicWord>& points() const { return points_; }
    const CyclicWord& point(int index) const { return points_[static_cast<std::size_t>(index)]; }
    int index_of(const CyclicWord& x) const;

    int period(int index) const { return point(index).least_period(); }
    int rotate(int index, int amount) const;  // sigma^amount as an index map

    int orbit_count() const { return static_cast<int>(orbits_.size()); }
    int orbit_of(int index) const { return orbit_of_[static_cast<std::size_t>(index)]; }
    const std::vector<int>& orbit(int orbit_id) const;
    int orbit_rep(int orbit_id) const;     // lex-least point of the orbit
    int orbit_period(int orbit_id) const;  // = orbit size
    int phase_of(int index) const;         // s with point = sigma^s(rep)

private:
    int k_;
    int m_;
    std::vector<CyclicWord> points_;  // sorted by (least_period, word)
    std::vector<int> rotate_one_;
    std::vector<int> orbit_of_;
    std::vector<int> phase_of_;
    std::vector<std::vector<int>> orbits_;
    std::vector<int> orbit_reps_;
};

/// A self-map of the carrier commuting with rotation; the image period of
/// a point always divides its period.
class EquivariantMap {
public:
    EquivariantMap(std::shared_ptr<const PeriodicCarrier> carrier, std::vector<int> images);

    static EquivariantMap identity(std::shared_ptr<const PeriodicCarrier> carrier);

    const PeriodicCarrier& carrier() const { return *carrier_; }
    const std::shared_ptr<const PeriodicCarrier>& carrier_ptr() const { return carrier_; }
    const std::vector<int>& images() const { return images_; }

    int apply(int index) const { return images_[static_cast<std::size_t>(index)]; }
    bool is_identity() const;
    bool is_idempotent() const;
    bool is_equivariant() const;

    bool operator==(const EquivariantMap& other) const { return images_ == other.images_; }

private:
    std::shared_ptr<const PeriodicCarrier> carrier_;
    std::vector<int> images_;
};

EquivariantMap compose(const EquivariantMap& f, const EquivariantMap& g);

struct EquivariantFactorization {
    EquivariantMap target;
    std::vector<EquivariantMap> factors;  // applied right to left
};

/// Period-by-period idempotent factorization of an equivariant map that
/// satisfies the bounded orbit condition (each Q_i mapped onto itself only
/// identically). Drops to smaller periods move directly; same-period orbit
/// shuffles lift the finite scheme to orbits with shift-power corrections.
/// Throws ConditionViolated when the precondition fails.
EquivariantFactorization decompose_equivariant(const EquivariantMap& f);

bool verify_factorization(const EquivariantFactorization& fact);

/// Every equivariant map on the carrier, enumerated deterministically by
/// orbit-representative image choices.
std::vector<EquivariantMap> enumerate_equivariant_maps(
    std::shared_ptr<const PeriodicCarrier> carrier);

struct OracleReport {
    int k = 0;
    int m = 0;
    std::size_t map_count = 0;
    std::size_t idempotent_count = 0;
    std::size_t closure_size = 0;
    std::size_t condition_size = 0;
    bool equal = false;
    /// Image vectors in the symmetric difference (empty when equal).
    std::vector<std::vector<int>> counterexamples;
};

/// Brute-force ground truth: the composition closure of the idempotent
/// equivariant maps on Q_{<=m} versus the set satisfying the bounded orbit
/// condition. The two must coincide.
OracleReport monoid_closure_oracle(int k, int m, std::uint64_t budget = kDefaultBudget);

}  // namespace idemca
