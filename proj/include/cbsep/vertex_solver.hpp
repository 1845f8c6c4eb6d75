#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cbsep/partial_clique.hpp"
#include "cbsep/relaxation.hpp"
#include "cbsep/zpoint.hpp"

namespace cbsep {

enum class CandidateKind {
    gamma,   // balance hyperplane meets a partial-clique indicator ray
    type1,   // gamma point whose generator is a biclique (hence in the spectrahedron)
    type2,   // balanced-cut embedding (a 0/2 cube vertex on or above the hyperplane)
};

std::string to_string(CandidateKind kind);

struct VertexCandidate {
    CandidateKind kind;
    PartialClique source;
    double lambda = 0.0;       // scale applied to the source indicator
    ZPoint point;
    double value = 0.0;        // relaxation objective at the point
};

/// Intersections of the balance hyperplane with the rays through scaled
/// partial-clique indicators: for each B with at least one derived edge,
/// lambda* = bound / m_B, kept when lambda* <= 2 (up to 1e-9 slack).
std::vector<VertexCandidate> gamma_points(const ProgramInstance& inst,
                                          int limit = kDefaultEnumerationLimit);

/// The gamma points generated by bicliques.  These are provably in the
/// spectrahedron; the claim is re-checked through the eigenvalue oracle and
/// a failure throws PropertyViolation.
std::vector<VertexCandidate> type1_vertices(const ProgramInstance& inst,
                                            int limit = kDefaultEnumerationLimit);

/// Cut embeddings meeting the balance bound: one candidate per unordered
/// class {S, complement}, represented by the side containing vertex 0.
std::vector<VertexCandidate> type2_vertices(const ProgramInstance& inst,
                                            int limit = kDefaultEnumerationLimit);

struct SolveResult {
    std::vector<VertexCandidate> candidates;   // type1 + type2, sorted
    std::size_t best_index = 0;
    long gamma_count = 0;
    long type1_count = 0;
    long type2_count = 0;

    const VertexCandidate& best() const { return candidates[best_index]; }
    double best_value() const { return best().value; }
};

/// Exhaustive ranking of the characterized vertex candidates by objective
/// value (ties: lexicographically smaller point, then kind).  Every
/// candidate's generator is round-tripped through recognition and through
/// completion over the full pair set as a consistency check.  Throws
/// std::runtime_error when no candidate exists.
SolveResult optimize_over_vertices(const ProgramInstance& inst,
                                   int limit = kDefaultEnumerationLimit);

}  // namespace cbsep
