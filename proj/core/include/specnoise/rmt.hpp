#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "specnoise/common.hpp"

namespace specnoise {

enum class EnsembleKind { Goe, Gue, Cue, Coe, Poisson };

EnsembleKind ensemble_kind_from_string(const std::string& s);
std::string to_string(EnsembleKind k);

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::Goe;
    int dim = 0;
    int realizations = 1;
    std::uint64_t seed = 0;

    void validate() const;
};

/// Sorted level sequences, one per realization. Gaussian ensembles return
/// eigenvalues (goe: H_ii ~ N(0,1), H_i<j ~ N(0,1/2); gue: H_ii ~ N(0,1),
/// |H_i<j|^2 mean 1), circular ensembles return eigenphases in [-pi, pi),
/// poisson returns sorted iid uniform levels on [0, dim) (unit mean
/// spacing). Realization r uses the RNG stream derived from (seed, r).
std::vector<std::vector<double>> sample_levels(const EnsembleSpec& spec);

enum class TheoryClass { Beta1, Beta2, Beta4, Poisson };

/// Closed-form <P_k^delta>: D_H/(2 beta pi^2 k) for the chaotic classes,
/// D_H^2/(4 pi^2 k^2) for poisson. Valid for 1 <= k << D_H; throws
/// ConfigError for k >= D_H.
double theory_pk(TheoryClass kind, int D_H, int k);

}  // namespace specnoise
