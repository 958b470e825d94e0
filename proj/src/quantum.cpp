#include "ks/quantum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "ks/nchv.hpp"

namespace ks {

namespace {

constexpr double kTol = 1e-12;
constexpr double kPsdTol = -1e-10;

/// Uniform draw in [0, 1) with 53 random bits, stable across platforms.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::array<double, 4> ray_components(const Ray& r) {
    if (r.dim() != 4) {
        throw std::invalid_argument("expected a ray of dimension 4, got " +
                                    std::to_string(r.dim()));
    }
    std::array<double, 4> v{};
    for (std::size_t i = 0; i < 4; ++i) v[i] = r[i].to_double();
    return v;
}

}  // namespace

StateVector::StateVector(const Amplitudes& amps) : amps_(amps) {
    double norm2 = 0.0;
    for (const Complex& a : amps_) norm2 += std::norm(a);
    if (norm2 < kTol) {
        throw std::invalid_argument("state vector must be nonzero");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (Complex& a : amps_) a *= inv;
}

StateVector StateVector::singlet() { return StateVector({0.0, 1.0, -1.0, 0.0}); }
StateVector StateVector::z00() { return StateVector({1.0, 0.0, 0.0, 0.0}); }
StateVector StateVector::phi_plus() { return StateVector({1.0, 0.0, 0.0, 1.0}); }

DensityMatrix::DensityMatrix(const Matrix& m) : m_(m) {
    Complex trace = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        trace += m_[i][i];
        for (std::size_t j = 0; j < 4; ++j) {
            if (std::abs(m_[i][j] - std::conj(m_[j][i])) > kTol) {
                throw std::invalid_argument("density matrix must be Hermitian");
            }
        }
    }
    if (std::abs(trace - Complex(1.0)) > kTol) {
        throw std::invalid_argument("density matrix must have unit trace");
    }
    Eigen::Matrix4cd em;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) em(static_cast<Eigen::Index>(i),
                                               static_cast<Eigen::Index>(j)) = m_[i][j];
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(em);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigenvalue computation failed");
    }
    if (solver.eigenvalues().minCoeff() < kPsdTol) {
        throw std::invalid_argument("density matrix must be positive semidefinite");
    }
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    Matrix m{};
    const Amplitudes& a = psi.amps();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) m[i][j] = a[i] * std::conj(a[j]);
    return DensityMatrix(m);
}

double born_probability(const StateVector& state, const Ray& r) {
    const auto v = ray_components(r);
    Complex overlap = 0.0;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        overlap += v[i] * state.amps()[i];
        norm2 += v[i] * v[i];
    }
    return std::norm(overlap) / norm2;
}

double born_probability(const DensityMatrix& state, const Ray& r) {
    const auto v = ray_components(r);
    Complex expectation = 0.0;
    double norm2 = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            expectation += v[i] * state.entries()[i][j] * v[j];
        }
        norm2 += v[i] * v[i];
    }
    return expectation.real() / norm2;
}

namespace {

std::vector<const Ray*> context_rays(const Context& ctx, const KSSet& set) {
    if (set.dim != 4) {
        throw std::invalid_argument("quantum predictions require a dimension-4 set");
    }
    std::vector<const Ray*> rays;
    for (const auto& name : ctx.members) {
        const Ray* r = set.find_ray(name);
        if (r == nullptr) {
            throw std::invalid_argument("context '" + ctx.name + "' refers to unknown ray '" +
                                        name + "'");
        }
        rays.push_back(r);
    }
    return rays;
}

template <typename State>
TestDistribution distribution_impl(const State& state, const Context& ctx, const KSSet& set) {
    const auto rays = context_rays(ctx, set);
    std::vector<Ray> copies;
    copies.reserve(rays.size());
    for (const Ray* r : rays) copies.push_back(*r);
    if (!is_orthogonal_basis(copies, set.dim)) {
        throw std::invalid_argument("context '" + ctx.name + "' is not an orthogonal basis");
    }
    TestDistribution dist;
    dist.context = ctx.name;
    for (std::size_t i = 0; i < 4; ++i) {
        dist.probabilities[i] = std::clamp(born_probability(state, *rays[i]), 0.0, 1.0);
    }
    return dist;
}

std::size_t draw_index(const double* probabilities, std::size_t n, std::mt19937_64& rng) {
    const double u = uniform01(rng);
    double cumulative = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        cumulative += probabilities[i];
        if (u < cumulative) return i;
    }
    return n - 1;
}

}  // namespace

TestDistribution test_distribution(const StateVector& state, const Context& ctx,
                                   const KSSet& set) {
    return distribution_impl(state, ctx, set);
}

TestDistribution test_distribution(const DensityMatrix& state, const Context& ctx,
                                   const KSSet& set) {
    return distribution_impl(state, ctx, set);
}

std::size_t sample_test(const StateVector& state, const Context& ctx, const KSSet& set,
                        std::mt19937_64& rng) {
    const TestDistribution dist = test_distribution(state, ctx, set);
    return draw_index(dist.probabilities.data(), dist.probabilities.size(), rng);
}

std::size_t sample_test(const StateVector& state, const Context& ctx, const KSSet& set,
                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_test(state, ctx, set, rng);
}

StateVector random_state(std::mt19937_64& rng) {
    auto gaussian = [&rng]() {
        double u = 0.0;
        do {
            u = uniform01(rng);
        } while (u == 0.0);
        const double v = uniform01(rng);
        return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * std::numbers::pi * v);
    };
    Amplitudes amps;
    for (Complex& a : amps) a = Complex(gaussian(), gaussian());
    return StateVector(amps);
}

DiscriminationReport discriminate(const StateVector& state, const KSSet& set,
                                  const LabelMap& labels, std::uint64_t trials,
                                  std::uint64_t seed,
                                  const std::optional<HiddenWeights>& weights) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    const Context* entangled_ctx = nullptr;
    for (const Context& ctx : set.contexts) {
        if (classify_context(ctx, labels) == ContextClass::EntangledOnly) {
            if (entangled_ctx != nullptr) {
                throw std::invalid_argument("set has more than one all-entangled context");
            }
            entangled_ctx = &ctx;
        }
    }
    if (entangled_ctx == nullptr) {
        throw std::invalid_argument("set has no all-entangled context");
    }

    HiddenWeights w{};
    if (weights) {
        double total = 0.0;
        for (double x : *weights) {
            if (x < 0.0) throw std::invalid_argument("hidden-state weights must be nonnegative");
            total += x;
        }
        if (total <= 0.0) throw std::invalid_argument("hidden-state weights must not all be zero");
        for (std::size_t i = 0; i < w.size(); ++i) w[i] = (*weights)[i] / total;
    } else {
        w.fill(1.0 / 16.0);
    }

    std::vector<YesNoQuestion> questions;
    for (const auto& name : entangled_ctx->members) questions.push_back(labels.at(name));
    const std::vector<HiddenState> states = enumerate_states();

    DiscriminationReport report;
    report.context = entangled_ctx->name;
    report.trials = trials;
    report.seed = seed;
    report.single_run_separation = true;

    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < trials; ++t) {
        // Quantum run: a maximal test has exactly one "yes" outcome.
        (void)sample_test(state, *entangled_ctx, set, rng);
        const int qm_yes = 1;
        report.qm_yes_counts[static_cast<std::size_t>(qm_yes)]++;

        // Hidden-variable run: draw a state, answer all four questions.
        const std::size_t h = draw_index(w.data(), w.size(), rng);
        int nchv_yes = 0;
        for (const auto& q : questions) {
            if (answer(states[h], q)) ++nchv_yes;
        }
        report.nchv_yes_counts[static_cast<std::size_t>(nchv_yes)]++;
        if (qm_yes != 1 || nchv_yes == 1) report.single_run_separation = false;
    }
    return report;
}

}  // namespace ks
