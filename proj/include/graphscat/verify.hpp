#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graphscat/bound_states.hpp"
#include "graphscat/phase_winding.hpp"

namespace graphscat {

/// Exact rational for the identity's right-hand side.
struct Rational {
    long long num = 0;
    long long den = 1;

    bool is_integer() const { return den == 1 || num % den == 0; }
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool equals(long long k) const { return num == k * den; }
};

struct VerificationReport {
    BoundStateCensus census;
    int w_phase = 0;
    int w_roots = 0;
    Rational rhs; // 2 (m - n_b - n_c - n_h/2)
    bool holds = false;
    bool reduced = false;
    std::vector<std::string> diagnostics;

    bool flagged() const { return !diagnostics.empty(); }
};

/// Peel the attachment vertex into the tail while a = 0 and ||b|| = 1:
/// a phase-fixed Householder reflection maps b onto the first internal
/// coordinate, D is conjugated, and the block is re-sliced one size down.
/// Idempotent on non-degenerate inputs.
GraphSpec reduce_degenerate(const GraphSpec& spec);

/// Full bound-state census. Requires the theorem precondition; call
/// reduce_degenerate first on degenerate instances.
BoundStateCensus classify(const GraphSpec& spec);

/// Verify the identity w(R) = 2 (m - n_b - n_c - n_h/2) with both winding
/// computations. Never throws: ambiguities land in diagnostics with
/// holds = false.
VerificationReport verify(const GraphSpec& spec, int n_initial_phase_grid = 512);

struct RandomOptions {
    bool force_half_bound = false;
    bool force_confined = false;
    double weight_scale = 3.0; // integer backbone draws from {-w..w}
};

/// Deterministic-in-seed random instance: Hermitian integer-backbone
/// weights with continuous jitter; optional constructions forcing a
/// half-bound state (a := 1 - C(1)) or a confined state (one eigenvector
/// of D rotated orthogonal to b).
GraphSpec random_instance(std::uint64_t seed, std::size_t m, const RandomOptions& opts = {});

/// Sorted spectrum of the (m+1+L)-dimensional truncated Hamiltonian.
std::vector<double> truncated_oracle(const GraphSpec& spec, int tail_len);

struct FuzzOptions {
    int count = 100;
    std::uint64_t seed = 0;
    std::size_t max_m = 8;
    bool force_half_bound = false;
    bool force_confined = false;
    double weight_scale = 3.0;
    int n_initial_phase_grid = 512;
};

struct FuzzInstanceResult {
    std::uint64_t seed = 0;
    std::size_t m = 0;
    VerificationReport report;
};

struct FuzzSummary {
    int count = 0;
    int held = 0;
    int violated = 0;
    int flagged = 0;
    std::vector<FuzzInstanceResult> failures; // violated or flagged instances
};

/// Deterministic fuzz loop shared by the CLI and the acceptance suite.
FuzzSummary run_fuzz(const FuzzOptions& opts);

/// Draw the instance the fuzz loop would use at position `index`.
GraphSpec fuzz_instance(const FuzzOptions& opts, int index, std::size_t* m_out = nullptr);

} // namespace graphscat
