#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <string>

namespace esnlens {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using BinaryMatrix = Eigen::Matrix<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
using Index = Eigen::Index;

enum class Activation { Tanh, Identity };
enum class ReadoutActivation { Identity, Softmax };
enum class TaskKind { Regression, Classification };
enum class Pooling { Last, Mean };

/// How W^out is fitted and how sequences map to design-matrix rows.
struct TrainConfig {
    double lambda = 1e-6;
    int washout = 50;
    TaskKind task = TaskKind::Regression;
    Pooling pooling = Pooling::Last;
};

std::string to_string(Activation a);
std::string to_string(ReadoutActivation g);
std::string to_string(TaskKind t);
std::string to_string(Pooling p);

Activation activation_from_string(const std::string& s);
TaskKind task_from_string(const std::string& s);
Pooling pooling_from_string(const std::string& s);

}  // namespace esnlens
