// Copyright 2026 The SwarmVQC Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Particle Swarm Optimization over the unit hypercube with linearly
 * time-varying coefficients.
 *
 * The cognitive weight c1 starts high and decays, the social weight c2
 * starts low and grows, and the inertia w decays, so early iterations
 * explore around each particle's own best and later ones exploit the
 * swarm best. Fitness is minimized.
 *
 * Updates are synchronous: all particles are evaluated against the
 * global best settled at the end of the previous iteration, and bests
 * are updated in particle-index order once every fitness is known.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "swarmvqc/random.hpp"

namespace swarmvqc {

struct SwarmConfig {
    std::size_t n_particles = 50;
    std::size_t dimensions = 40;
    std::size_t iterations = 100;
    double c1_start = 2.5;
    double c1_end = 0.5;
    double c2_start = 0.5;
    double c2_end = 2.5;
    double w_start = 0.9;
    double w_end = 0.4;
    /// Velocity clamp as a fraction of the (unit) domain width.
    double v_max = 0.05;
    std::uint64_t seed = 0;

    /// Throws InvalidArgument on a bad field or schedule direction.
    void validate() const;
};

struct Coefficients {
    double c1 = 0.0;
    double c2 = 0.0;
    double w = 0.0;
};

struct Particle {
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> best_position;
    double best_fitness = 0.0;
};

struct IterationRecord {
    std::size_t iteration = 0;
    double gbest_fitness = 0.0;
    double mean_fitness = 0.0;
    Coefficients coefficients;
};

struct SwarmResult {
    std::vector<double> best_position;
    double best_fitness = 0.0;
    std::vector<IterationRecord> history;
};

using FitnessFunction = std::function<double(std::span<const double>)>;

/// start + (end - start) * iteration / (total - 1); `start` when total == 1.
[[nodiscard]] double schedule(double start, double end, std::size_t iteration,
                              std::size_t total);

[[nodiscard]] Coefficients coefficients_at(const SwarmConfig &config,
                                           std::size_t iteration);

/**
 * Velocity and position update of a single particle:
 *
 *     v = w v + c1 r1 (pbest - x) + c2 r2 (gbest - x),  |v| <= v_max
 *     x = clamp(x + v, 0, 1)
 *
 * r1 and r2 are drawn per coordinate, r1 first, from `draw`. The
 * velocity is not altered when the position hits a wall.
 */
template <class UniformDraw>
void update_particle(Particle &particle, std::span<const double> gbest,
                     const Coefficients &coeffs, double v_max,
                     UniformDraw &&draw);

/// One synchronous step of the whole swarm, drawing from the per-particle
/// streams of `iteration`.
void step(std::vector<Particle> &swarm, std::span<const double> gbest,
          const Coefficients &coeffs, double v_max, std::uint64_t seed,
          std::size_t iteration);

struct OptimizeOptions {
    /// Worker threads for fitness evaluation (0 = default_thread_count()).
    std::size_t threads = 0;
    /// Receives one progress line per iteration when non-null.
    std::ostream *progress = nullptr;
};

[[nodiscard]] SwarmResult optimize(const FitnessFunction &fitness,
                                   const SwarmConfig &config,
                                   const OptimizeOptions &options = {});

/// `iter=<k> gbest=<f> mean=<f> c1=<v> c2=<v> w=<v>`
[[nodiscard]] std::string progress_line(const IterationRecord &record);

/// CSV with header `iteration,gbest_fitness,mean_fitness`.
[[nodiscard]] std::string history_to_csv(
    std::span<const IterationRecord> history);

// Implementation

void check_dimensions(const Particle &particle, std::size_t dims);

template <class UniformDraw>
void update_particle(Particle &particle, std::span<const double> gbest,
                     const Coefficients &coeffs, double v_max,
                     UniformDraw &&draw) {
    check_dimensions(particle, gbest.size());
    for (std::size_t j = 0; j < gbest.size(); ++j) {
        const double r1 = draw();
        const double r2 = draw();
        const double x = particle.position[j];
        double v = coeffs.w * particle.velocity[j] +
                   coeffs.c1 * r1 * (particle.best_position[j] - x) +
                   coeffs.c2 * r2 * (gbest[j] - x);
        v = v < -v_max ? -v_max : (v > v_max ? v_max : v);
        particle.velocity[j] = v;
        const double moved = x + v;
        particle.position[j] = moved < 0.0 ? 0.0 : (moved > 1.0 ? 1.0 : moved);
    }
}

} // namespace swarmvqc
