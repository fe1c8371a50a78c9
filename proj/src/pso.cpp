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

#include "swarmvqc/pso.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "swarmvqc/error.hpp"
#include "swarmvqc/parallel.hpp"
#include "swarmvqc/text_util.hpp"

namespace swarmvqc {

void SwarmConfig::validate() const {
    if (n_particles == 0 || dimensions == 0 || iterations == 0) {
        throw InvalidArgument(
            "particles, dimensions and iterations must be positive");
    }
    if (!(c1_start >= c1_end)) {
        throw InvalidArgument("c1 schedule must not increase");
    }
    if (!(c2_start <= c2_end)) {
        throw InvalidArgument("c2 schedule must not decrease");
    }
    if (!(w_start >= w_end)) {
        throw InvalidArgument("inertia schedule must not increase");
    }
    if (!(v_max > 0.0 && v_max <= 1.0)) {
        throw InvalidArgument("v_max must lie in (0, 1]");
    }
}

double schedule(double start, double end, std::size_t iteration,
                std::size_t total) {
    if (total <= 1) {
        return start;
    }
    return start + (end - start) * static_cast<double>(iteration) /
                       static_cast<double>(total - 1);
}

Coefficients coefficients_at(const SwarmConfig &config,
                             std::size_t iteration) {
    return {schedule(config.c1_start, config.c1_end, iteration,
                     config.iterations),
            schedule(config.c2_start, config.c2_end, iteration,
                     config.iterations),
            schedule(config.w_start, config.w_end, iteration,
                     config.iterations)};
}

void check_dimensions(const Particle &particle, std::size_t dims) {
    if (particle.position.size() != dims || particle.velocity.size() != dims ||
        particle.best_position.size() != dims) {
        throw InvalidArgument("particle dimension mismatch: expected " +
                              std::to_string(dims));
    }
}

void step(std::vector<Particle> &swarm, std::span<const double> gbest,
          const Coefficients &coeffs, double v_max, std::uint64_t seed,
          std::size_t iteration) {
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        auto engine = make_engine(seed, Stream::SwarmStep, {iteration, i});
        update_particle(swarm[i], gbest, coeffs, v_max,
                        [&engine] { return uniform01(engine); });
    }
}

namespace {

std::vector<Particle> initial_swarm(const SwarmConfig &config) {
    std::vector<Particle> swarm(config.n_particles);
    for (std::size_t i = 0; i < swarm.size(); ++i) {
        auto engine = make_engine(config.seed, Stream::SwarmInit, {i});
        auto &p = swarm[i];
        p.position.resize(config.dimensions);
        p.velocity.resize(config.dimensions);
        for (std::size_t j = 0; j < config.dimensions; ++j) {
            p.position[j] = uniform01(engine);
        }
        for (std::size_t j = 0; j < config.dimensions; ++j) {
            p.velocity[j] = uniform(engine, -config.v_max, config.v_max);
        }
        p.best_position = p.position;
    }
    return swarm;
}

std::vector<double> evaluate_all(const FitnessFunction &fitness,
                                 const std::vector<Particle> &swarm,
                                 std::size_t iteration, std::size_t threads) {
    std::vector<double> values(swarm.size());
    parallel_for(
        swarm.size(),
        [&](std::size_t i) {
            double f = 0.0;
            try {
                f = fitness(swarm[i].position);
            } catch (const std::exception &e) {
                throw Error("fitness evaluation failed for particle " +
                            std::to_string(i) + " in iteration " +
                            std::to_string(iteration) + ": " + e.what());
            }
            if (std::isnan(f)) {
                throw Error("fitness returned NaN for particle " +
                            std::to_string(i) + " in iteration " +
                            std::to_string(iteration));
            }
            values[i] = f;
        },
        threads);
    return values;
}

double mean_of(const std::vector<double> &values) {
    double sum = 0.0;
    for (const double v : values) {
        sum += v;
    }
    return sum / static_cast<double>(values.size());
}

} // namespace

SwarmResult optimize(const FitnessFunction &fitness, const SwarmConfig &config,
                     const OptimizeOptions &options) {
    config.validate();
    auto swarm = initial_swarm(config);

    SwarmResult result;
    // Initial evaluation seeds the personal and global bests.
    {
        const auto values = evaluate_all(fitness, swarm, 0, options.threads);
        std::size_t best = 0;
        for (std::size_t i = 0; i < swarm.size(); ++i) {
            swarm[i].best_fitness = values[i];
            if (values[i] < values[best]) {
                best = i;
            }
        }
        result.best_position = swarm[best].position;
        result.best_fitness = values[best];
    }

    result.history.reserve(config.iterations);
    for (std::size_t k = 0; k < config.iterations; ++k) {
        const auto coeffs = coefficients_at(config, k);
        step(swarm, result.best_position, coeffs, config.v_max, config.seed, k);
        const auto values = evaluate_all(fitness, swarm, k + 1, options.threads);

        // Strict improvement only; ties keep the incumbent.
        for (std::size_t i = 0; i < swarm.size(); ++i) {
            auto &p = swarm[i];
            if (values[i] < p.best_fitness) {
                p.best_fitness = values[i];
                p.best_position = p.position;
            }
        }
        for (const auto &p : swarm) {
            if (p.best_fitness < result.best_fitness) {
                result.best_fitness = p.best_fitness;
                result.best_position = p.best_position;
            }
        }

        IterationRecord record{k, result.best_fitness, mean_of(values), coeffs};
        if (options.progress != nullptr) {
            *options.progress << progress_line(record) << '\n';
        }
        result.history.push_back(record);
    }
    return result;
}

std::string progress_line(const IterationRecord &record) {
    std::ostringstream out;
    out << "iter=" << record.iteration
        << " gbest=" << format_double(record.gbest_fitness)
        << " mean=" << format_double(record.mean_fitness)
        << " c1=" << format_double(record.coefficients.c1)
        << " c2=" << format_double(record.coefficients.c2)
        << " w=" << format_double(record.coefficients.w);
    return out.str();
}

std::string history_to_csv(std::span<const IterationRecord> history) {
    std::string csv = "iteration,gbest_fitness,mean_fitness\n";
    for (const auto &r : history) {
        csv += std::to_string(r.iteration) + ',' +
               format_double(r.gbest_fitness) + ',' +
               format_double(r.mean_fitness) + '\n';
    }
    return csv;
}

} // namespace swarmvqc
