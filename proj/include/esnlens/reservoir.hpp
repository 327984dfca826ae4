#pragma once

#include "esnlens/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace esnlens {

/// One reservoir in the stack: fixed random recurrent weights plus the
/// weights mapping this layer's input (the external input for layer 1, the
/// previous layer's state for layers >= 2).
struct ReservoirLayer {
    Matrix internal_weights;  // N x N
    Matrix input_weights;     // N x K_l
    double leaking_rate = 1.0;
    Activation activation = Activation::Tanh;

    Index size() const { return internal_weights.rows(); }
};

struct ReservoirConfig {
    std::uint64_t seed = 0;
    int num_layers = 1;
    int neurons = 100;
    int input_dim = 1;
    int output_dim = 1;
    std::vector<double> leaking_rates = {0.99};  // broadcast when a single value
    double spectral_radius_bound = 0.95;
    double density = 0.1;
    double input_scaling = 1.0;
    bool feedback = false;
    Activation activation = Activation::Tanh;

    double leaking_rate_for(int layer) const;
    void validate() const;
};

/// A stack of reservoirs plus the trained linear readout. Immutable after
/// training; safe to share read-only across threads.
struct DeepEsnModel {
    std::vector<ReservoirLayer> layers;
    Matrix feedback_weights;  // N x L, rows()==0 when absent (single-layer only)
    Matrix readout_weights;   // L x feature_dim(), rows()==0 until trained
    ReadoutActivation readout_activation = ReadoutActivation::Identity;
    double spectral_radius_bound = 0.95;
    int input_dim = 1;
    int output_dim = 1;
    double input_scaling = 1.0;
    double density = 0.1;
    std::uint64_t seed = 0;
    std::optional<TrainConfig> train_info;

    bool trained() const { return readout_weights.rows() > 0; }
    bool has_feedback() const { return feedback_weights.rows() > 0; }
    bool single_layer() const { return layers.size() == 1; }
    Index num_layers() const { return static_cast<Index>(layers.size()); }

    /// Width of z(t): [x(t); u(t)] in single-layer mode, the concatenation
    /// of all layer states in deep mode.
    Index feature_dim() const;

    std::vector<Vector> zero_state() const;
};

/// Per-layer states over one input sequence; row t of each matrix is the
/// state after consuming input row t.
struct StateTrajectory {
    std::vector<Matrix> per_layer_states;  // each T x N
    Matrix inputs;                         // T x K

    Index steps() const { return inputs.rows(); }
};

/// Draws a model at random and rescales every layer so that the leaky
/// update matrix (1-a)I + a*W has spectral radius equal to
/// spectral_radius_bound * 0.99, which keeps the echo state property bound
/// strict and testable. Deterministic for a fixed seed.
DeepEsnModel init_random(const ReservoirConfig& config);

/// One leaky update for the whole stack. Layer 1 consumes `input`; layer l
/// consumes the freshly updated state of layer l-1. `y_prev` enters the
/// feedback term of single-layer models and is ignored otherwise. Pure
/// function of its arguments.
std::vector<Vector> step(const DeepEsnModel& model, const std::vector<Vector>& state,
                         const Vector& input, const Vector* y_prev = nullptr);

/// Runs the stack over all input rows, recording every state. With teacher
/// outputs and feedback enabled, row t-1 of the teacher drives the feedback
/// term at step t (teacher forcing); a trained feedback model without a
/// teacher free-runs on its own outputs.
StateTrajectory run_sequence(const DeepEsnModel& model, const Matrix& inputs,
                             const std::vector<Vector>* initial_state = nullptr,
                             const Matrix* teacher_outputs = nullptr);

/// Per-row readout g(W_out z(t)) over a recorded trajectory.
Matrix readout(const DeepEsnModel& model, const StateTrajectory& trajectory);

/// Rows z(t) for a trajectory (the readout's input features).
Matrix feature_matrix(const DeepEsnModel& model, const StateTrajectory& trajectory);

/// Row-wise numerically stable softmax.
Matrix softmax_rows(const Matrix& scores);

namespace detail {

/// Raw (pre-rescaling) sparse-uniform internal weights of one layer. Public
/// so tests can reproduce the exact draw from the documented seed scheme.
Matrix raw_internal_weights(std::uint64_t seed, int layer, Index n, double density);

/// Raw dense-uniform input weights of one layer (before input scaling).
Matrix raw_input_weights(std::uint64_t seed, int layer, Index rows, Index cols);

void step_in_place(const DeepEsnModel& model, std::vector<Vector>& state,
                   const Vector& input, const Vector* y_prev, Vector& scratch);

Vector readout_single(const DeepEsnModel& model, const std::vector<Vector>& state,
                      const Vector& input);

}  // namespace detail

}  // namespace esnlens
