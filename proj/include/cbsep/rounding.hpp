#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cbsep/graph.hpp"
#include "cbsep/psd.hpp"
#include "cbsep/zpoint.hpp"

namespace cbsep {

/// Deterministic random source.  The mt19937_64 stream is bit-specified by
/// the standard and the uniform/normal transforms are written out here
/// (no std::*_distribution, whose output is implementation-defined), so the
/// same seed reproduces the same draws.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next_u64() { return eng_(); }
    double uniform();       // [0, 1)
    double uniform_pos();   // (0, 1]
    double normal();        // standard normal via Box-Muller

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Sub-seed for trial t of a run with the given master seed (splitmix64 of
/// master + (t + 1) * golden-ratio increment).  Trials are independent
/// streams, so they can be replayed individually without changing results.
std::uint64_t trial_seed(std::uint64_t master_seed, int trial);

/// Unit vectors whose Gram matrix is 1 - Z: eigendecompose, clip eigenvalues
/// in [-tol, 0) to zero (more negative throws std::invalid_argument), scale
/// eigenvectors and renormalize rows.  Inner products reproduce 1 - z_ij
/// within n * tol.
std::vector<std::vector<double>> gram_vectors(const ZPoint& z, double tol = kPsdTol);

/// One random-hyperplane cut: S = { i : <g, v_i> >= 0 } for a standard
/// normal g (ties land in S).
VertexSet hyperplane_cut(const std::vector<std::vector<double>>& vectors, Rng& rng);

struct CutResult {
    VertexSet side;
    int cut_size = 0;
    double balance = 0.0;     // min(|S|, n - |S|) / n
    int trials_used = 0;
    int balanced_trials = 0;  // trials achieving balance >= c
    std::uint64_t seed = 0;

    bool operator==(const CutResult& other) const = default;
};

/// True when `a` is preferable to `b`: balanced (>= c) first, then smaller
/// cut, then larger balance.
bool cut_preferred(const CutResult& a, const CutResult& b, double c);

/// Best cut over `trials` hyperplane draws from the Gram vectors of z.
/// Deterministic given the seed; ranking per cut_preferred with the earliest
/// trial winning ties.
CutResult round(const ZPoint& z, const Graph& g, double c, int trials, std::uint64_t seed);

}  // namespace cbsep
