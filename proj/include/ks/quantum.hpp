#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "ks/ksset.hpp"
#include "ks/question.hpp"

namespace ks {

using Complex = std::complex<double>;
using Amplitudes = std::array<Complex, 4>;

/**
 * A pure state of the two-qubit system, normalized at construction.
 *
 * Amplitudes are in the product basis |z+z+>, |z+z->, |z-z+>, |z-z->,
 * matching the basis in which rays are written.
 */
class StateVector {
public:
    /// Normalizes; throws std::invalid_argument if the vector is (near) zero.
    explicit StateVector(const Amplitudes& amps);

    static StateVector singlet();   // (0, 1, -1, 0)/sqrt(2)
    static StateVector z00();       // (1, 0, 0, 0)
    static StateVector phi_plus();  // (1, 0, 0, 1)/sqrt(2)

    const Amplitudes& amps() const { return amps_; }

private:
    Amplitudes amps_;
};

/**
 * A general (possibly mixed) two-qubit state.
 *
 * The constructor validates Hermiticity and unit trace within 1e-12 and
 * positive semidefiniteness (smallest eigenvalue >= -1e-10).
 */
class DensityMatrix {
public:
    using Matrix = std::array<std::array<Complex, 4>, 4>;

    explicit DensityMatrix(const Matrix& m);

    /// The rank-1 projector onto a pure state.
    static DensityMatrix pure(const StateVector& psi);

    const Matrix& entries() const { return m_; }

private:
    Matrix m_;
};

/// Probability that the projective test along ray r answers "yes".
/// The ray is evaluated to reals and normalized internally.
double born_probability(const StateVector& state, const Ray& r);
double born_probability(const DensityMatrix& state, const Ray& r);

/// Outcome probabilities of one maximal test (context), in member order.
struct TestDistribution {
    std::string context;
    std::array<double, 4> probabilities{};
};

/// Throws std::invalid_argument unless the context is an orthogonal basis
/// of a dimension-4 set; the resulting probabilities sum to 1.
TestDistribution test_distribution(const StateVector& state, const Context& ctx, const KSSet& set);
TestDistribution test_distribution(const DensityMatrix& state, const Context& ctx, const KSSet& set);

/// Draws one outcome index from test_distribution; deterministic given the
/// generator state.  Exactly one question answers "yes" per run.
std::size_t sample_test(const StateVector& state, const Context& ctx, const KSSet& set,
                        std::mt19937_64& rng);
std::size_t sample_test(const StateVector& state, const Context& ctx, const KSSet& set,
                        std::uint64_t seed);

/// A Haar-ish random pure state (normalized complex Gaussian amplitudes).
StateVector random_state(std::mt19937_64& rng);

/// Per-state weights for the 16 hidden states, in enumerate_states() order.
using HiddenWeights = std::array<double, 16>;

/**
 * Outcome of running the all-entangled test repeatedly under both models.
 *
 * Each histogram counts runs by the number of "yes" answers (0..4).
 * Quantum runs always land on 1; hidden-variable runs never do.
 */
struct DiscriminationReport {
    std::string context;  // name of the all-entangled context
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::array<std::uint64_t, 5> qm_yes_counts{};
    std::array<std::uint64_t, 5> nchv_yes_counts{};
    bool single_run_separation = false;  // every run: QM == 1 and NCHV != 1

    bool operator==(const DiscriminationReport&) const = default;
};

/**
 * Simulates `trials` runs of the unique all-entangled context under the
 * quantum model (Born-rule sampling of `state`) and under a hidden-variable
 * model drawing states from `weights` (uniform if omitted).
 *
 * Throws std::invalid_argument if trials == 0, if the set/labels do not
 * contain exactly one all-entangled context, or if weights are invalid
 * (negative or all zero).
 */
DiscriminationReport discriminate(const StateVector& state, const KSSet& set,
                                  const LabelMap& labels, std::uint64_t trials,
                                  std::uint64_t seed,
                                  const std::optional<HiddenWeights>& weights = std::nullopt);

}  // namespace ks
