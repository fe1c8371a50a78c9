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

// Reference computations used only by tests. Nothing here shares code with
// the library's simulator, decomposition or optimizer.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <utility>
#include <vector>

#include "swarmvqc/circuit.hpp"

namespace oracle {

using cplx = std::complex<double>;

// Dense row-major square matrix.
struct Dense {
    std::size_t dim = 0;
    std::vector<cplx> a;

    explicit Dense(std::size_t d) : dim(d), a(d * d) {}
    cplx &operator()(std::size_t r, std::size_t c) { return a[r * dim + c]; }
    cplx operator()(std::size_t r, std::size_t c) const { return a[r * dim + c]; }

    static Dense identity(std::size_t d) {
        Dense m(d);
        for (std::size_t i = 0; i < d; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }
};

inline Dense kron(const Dense &x, const Dense &y) {
    Dense out(x.dim * y.dim);
    for (std::size_t r1 = 0; r1 < x.dim; ++r1)
        for (std::size_t c1 = 0; c1 < x.dim; ++c1)
            for (std::size_t r2 = 0; r2 < y.dim; ++r2)
                for (std::size_t c2 = 0; c2 < y.dim; ++c2)
                    out(r1 * y.dim + r2, c1 * y.dim + c2) = x(r1, c1) * y(r2, c2);
    return out;
}

inline Dense matmul(const Dense &x, const Dense &y) {
    Dense out(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t k = 0; k < x.dim; ++k) {
            const cplx v = x(i, k);
            if (v == cplx{}) continue;
            for (std::size_t j = 0; j < x.dim; ++j) out(i, j) += v * y(k, j);
        }
    return out;
}

inline Dense add(const Dense &x, const Dense &y) {
    Dense out(x.dim);
    for (std::size_t i = 0; i < x.a.size(); ++i) out.a[i] = x.a[i] + y.a[i];
    return out;
}

// exp(-i theta P / 2) written out entry by entry.
inline Dense rotation_2x2(swarmvqc::GateKind kind, double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const cplx i{0.0, 1.0};
    Dense m(2);
    switch (kind) {
    case swarmvqc::GateKind::RX:
        m(0, 0) = c; m(0, 1) = -i * s;
        m(1, 0) = -i * s; m(1, 1) = c;
        break;
    case swarmvqc::GateKind::RY:
        m(0, 0) = c; m(0, 1) = -s;
        m(1, 0) = s; m(1, 1) = c;
        break;
    case swarmvqc::GateKind::RZ:
        m(0, 0) = std::exp(-i * theta / 2.0);
        m(1, 1) = std::exp(i * theta / 2.0);
        break;
    default:
        break;
    }
    return m;
}

// Tensor product over qubits, most significant (qubit n-1) first, so
// basis index bit q is qubit q.
inline Dense tensor(const std::vector<Dense> &per_qubit) {
    Dense out = Dense::identity(1);
    for (std::size_t q = per_qubit.size(); q-- > 0;) out = kron(out, per_qubit[q]);
    return out;
}

inline Dense gate_matrix(const swarmvqc::Gate &g, std::size_t n) {
    std::vector<Dense> factors(n, Dense::identity(2));
    if (g.is_rotation()) {
        factors[g.target()] = rotation_2x2(g.kind(), g.angle());
        return tensor(factors);
    }
    Dense p0(2), p1(2), x(2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    x(0, 1) = 1.0;
    x(1, 0) = 1.0;
    std::vector<Dense> keep = factors;
    keep[g.control()] = p0;
    std::vector<Dense> flip = factors;
    flip[g.control()] = p1;
    flip[g.target()] = x;
    return add(tensor(keep), tensor(flip));
}

inline Dense circuit_unitary(const swarmvqc::Circuit &circuit) {
    const std::size_t dim = std::size_t{1} << circuit.n_qubits();
    Dense u = Dense::identity(dim);
    for (const auto &g : circuit.gates()) u = matmul(gate_matrix(g, circuit.n_qubits()), u);
    return u;
}

inline std::vector<cplx> matvec(const Dense &m, const std::vector<cplx> &v) {
    std::vector<cplx> out(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i)
        for (std::size_t j = 0; j < m.dim; ++j) out[i] += m(i, j) * v[j];
    return out;
}

inline std::vector<cplx> zero_state(std::size_t n) {
    std::vector<cplx> v(std::size_t{1} << n);
    v[0] = 1.0;
    return v;
}

inline double expectation_z(const std::vector<cplx> &amps, std::size_t qubit) {
    double e = 0.0;
    for (std::size_t b = 0; b < amps.size(); ++b)
        e += std::norm(amps[b]) * (((b >> qubit) & 1U) ? -1.0 : 1.0);
    return e;
}

// Angle-encode then run, all through dense matrices.
inline double classify_expectation(const swarmvqc::Circuit &circuit,
                                   const std::vector<double> &features) {
    const std::size_t n = circuit.n_qubits();
    std::vector<Dense> enc(n, Dense::identity(2));
    for (std::size_t q = 0; q < n; ++q)
        enc[q] = rotation_2x2(swarmvqc::GateKind::RY, features[q]);
    const auto psi = matvec(tensor(enc), zero_state(n));
    return expectation_z(matvec(circuit_unitary(circuit), psi), 0);
}

// Cyclic Jacobi eigendecomposition of a real symmetric matrix. Returns
// (eigenvalues, eigenvectors as columns), unsorted.
inline std::pair<std::vector<double>, std::vector<std::vector<double>>>
jacobi_eigen(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a[i][i];
    return {values, v};
}

// Random circuit over {RX, RY, RZ, CNOT}, drawn with the standard library
// engine rather than the project's seed derivation.
inline swarmvqc::Circuit random_circuit(std::mt19937 &rng, std::size_t n,
                                        std::size_t gates) {
    std::uniform_int_distribution<int> kind(0, n >= 2 ? 3 : 2);
    std::uniform_int_distribution<std::size_t> qubit(0, n - 1);
    std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
    swarmvqc::Circuit c(n);
    for (std::size_t i = 0; i < gates; ++i) {
        const int k = kind(rng);
        if (k == 3) {
            const std::size_t ctl = qubit(rng);
            std::size_t tgt = qubit(rng);
            while (tgt == ctl) tgt = qubit(rng);
            c.append(swarmvqc::Gate::cnot(ctl, tgt));
        } else {
            c.append(swarmvqc::Gate::rotation(static_cast<swarmvqc::GateKind>(k),
                                              qubit(rng), angle(rng)));
        }
    }
    return c;
}

} // namespace oracle
