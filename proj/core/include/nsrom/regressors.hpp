#pragma once

#include <array>
#include <string>
#include <vector>

namespace nsrom::regress {

/// Gaussian-kernel RBF interpolant with ridge smoothing, mapping a scalar
/// parameter to a coefficient vector. Centers are stored normalized to
/// [0, 1] over the training range.
struct RBFModel {
  std::vector<double> centers;
  double mu_min = 0.0;
  double mu_max = 1.0;
  std::vector<double> weights;  // [center][mode], row-major
  int n_modes = 0;
  std::string kernel = "gaussian";
  double epsilon = 1.0;    // shape parameter on normalized distances
  double smoothing = 0.1;  // lambda_s
};

/// Solves (K + lambda_s I) W = Y by Cholesky with a pivoted fallback.
/// epsilon <= 0 selects the default shape 1 / (mean pairwise distance).
RBFModel rbf_fit(const std::vector<double>& mus,
                 const std::vector<std::vector<double>>& coefficients,
                 const std::string& kernel = "gaussian", double epsilon = 0.0,
                 double smoothing = 0.1);

std::vector<double> rbf_eval(const RBFModel& model, double mu);

double silu(double x);
double logsigmoid(double x);

enum class Activation { SiLU, LogSigmoid };
Activation activation_from_string(const std::string& s);
const char* to_string(Activation a);

/// Feed-forward network 1 -> 50 -> 10 -> n_modes with a linear output
/// layer. Inputs are normalized to [0, 1], outputs are scaled per mode by
/// the largest training magnitude.
struct ANNModel {
  std::vector<int> layer_sizes;               // {1, 50, 10, n_modes}
  std::vector<std::vector<double>> weights;   // per layer, [out][in]
  std::vector<std::vector<double>> biases;    // per layer
  Activation activation = Activation::SiLU;
  double in_min = 0.0;
  double in_max = 1.0;
  std::vector<double> out_scale;
};

struct TrainingConfig {
  double learning_rate = 1e-3;
  long max_epochs = 50000;
  double tolerance = 1e-8;  // normalized MSE
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps_adam = 1e-8;
  unsigned long long seed = 42;
  long patience = 5000;
  std::array<int, 2> hidden{50, 10};
};

std::vector<double> ann_forward(const ANNModel& model, double mu);

/// Full-batch loss (mean squared error over samples and modes, in
/// normalized units) and its gradient with respect to every parameter,
/// ordered (W1, b1, W2, b2, W3, b3). Exposed so gradients can be checked
/// against finite differences.
double ann_loss_and_gradient(const ANNModel& model,
                             const std::vector<double>& inputs_normalized,
                             const std::vector<std::vector<double>>& targets,
                             std::vector<double>& gradient);

size_t ann_parameter_count(const ANNModel& model);
std::vector<double> ann_pack_parameters(const ANNModel& model);
void ann_unpack_parameters(ANNModel& model, const std::vector<double>& theta);

struct TrainResult {
  ANNModel model;
  std::vector<double> loss_history;
  long epochs = 0;
  double final_loss = 0.0;
};

/// Full-batch Adam on the normalized问题; deterministic for a fixed seed.
TrainResult ann_train(const std::vector<double>& mus,
                      const std::vector<std::vector<double>>& coefficients,
                      Activation activation, const TrainingConfig& config);

void save_rbf(const RBFModel& model, const std::string& path);
RBFModel load_rbf(const std::string& path);
void save_ann(const ANNModel& model, const std::string& path);
ANNModel load_ann(const std::string& path);

}  // namespace nsrom::regress
