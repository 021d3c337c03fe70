// Copyright 2026 The graphdiag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHDIAG_CIRCUIT_SIM_H
#define GRAPHDIAG_CIRCUIT_SIM_H

#include <complex>
#include <cstdint>
#include <vector>

#include "graphdiag/dense.h"

namespace graphdiag {

/// Pure state simulator, qubit k = bit k of the amplitude index.
class StateVector {
   public:
    /// |basis>.
    StateVector(int num_qubits, uint64_t basis = 0);

    int num_qubits() const {
        return n_;
    }
    const DenseVector &amplitudes() const {
        return amp_;
    }

    void h(int q);
    void x(int q);
    void z(int q);
    void cz(int a, int b);
    void ccz(int a, int b, int c);
    /// Probability of reading 0 on qubit q.
    double probability_zero(int q) const;

   private:
    int n_;
    DenseVector amp_;
};

/// Mixed state simulator over a dense 2^n x 2^n matrix.
class DensityMatrix {
   public:
    explicit DensityMatrix(DenseOperator rho);

    /// |0><0| on `ancillas` low qubits tensored with rho on the rest.
    static DensityMatrix with_zero_ancillas(int ancillas, const DenseOperator &rho);
    /// rho tensored with 1/2^m on m new high qubits.
    DensityMatrix tensor_maximally_mixed(int m) const;

    int num_qubits() const {
        return n_;
    }
    const DenseOperator &matrix() const {
        return rho_;
    }

    void h(int q);
    void z(int q);
    void cz(int a, int b);
    void ccz(int a, int b, int c);
    double probability_zero(int q) const;

   private:
    /// rho(r, c) *= phase(r) * conj(phase(c)) for a +-1 diagonal gate.
    template <typename Sign>
    void apply_diagonal(Sign &&sign);

    int n_;
    DenseOperator rho_;
};

}  // namespace graphdiag

#endif
