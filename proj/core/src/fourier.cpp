// Copyright (c) the hardyleray developers. All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "hardyleray/fourier.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace hardyleray {

namespace {

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Plan creation is not thread safe; fftw_execute_dft on caller-owned
// buffers is. Plans are created unaligned and in-place so any
// std::complex<double> buffer qualifies.
class PlanCache {
 public:
  static fftw_plan get(int n, int sign) {
    static PlanCache cache;
    std::lock_guard<std::mutex> lock(cache.mutex_);
    auto key = std::make_pair(n, sign);
    auto it = cache.plans_.find(key);
    if (it != cache.plans_.end()) return it->second;
    std::vector<std::complex<double>> dummy(n);
    fftw_plan plan = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(dummy.data()),
        reinterpret_cast<fftw_complex*>(dummy.data()), sign,
        FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan) throw std::runtime_error("fftw plan creation failed");
    cache.plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

void execute(std::complex<double>* data, int n, int sign) {
  if (!power_of_two(n)) {
    throw std::invalid_argument("dft: length must be a power of two");
  }
  fftw_plan plan = PlanCache::get(n, sign);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(data),
                   reinterpret_cast<fftw_complex*>(data));
}

}  // namespace

void dft_forward(std::complex<double>* data, int n) {
  execute(data, n, FFTW_FORWARD);
}

void dft_inverse(std::complex<double>* data, int n) {
  execute(data, n, FFTW_BACKWARD);
}

Eigen::VectorXd fft_frequencies(int nt, double dt) {
  Eigen::VectorXd lambdas(nt);
  const double dl = 2.0 * std::numbers::pi / (nt * dt);
  for (int j = 0; j < nt; ++j) {
    const int jt = j <= nt / 2 ? j : j - nt;
    lambdas[j] = dl * jt;
  }
  return lambdas;
}

Eigen::VectorXcd fft_derivative_multipliers(int nt, double dt) {
  Eigen::VectorXd lambdas = fft_frequencies(nt, dt);
  Eigen::VectorXcd mult(nt);
  for (int j = 0; j < nt; ++j) {
    mult[j] = std::complex<double>(0.0, lambdas[j]);
  }
  mult[nt / 2] = 0.0;
  return mult;
}

Eigen::MatrixXcd fft_forward_columns(const Eigen::MatrixXd& v, double dt) {
  const int nt = static_cast<int>(v.rows());
  const double scale = dt / std::sqrt(2.0 * std::numbers::pi);
  Eigen::MatrixXcd w = v.cast<std::complex<double>>();
  for (int c = 0; c < w.cols(); ++c) {
    dft_forward(w.col(c).data(), nt);
  }
  return w * scale;
}

Eigen::MatrixXd fft_inverse_columns_real(const Eigen::MatrixXcd& w, double dt) {
  const int nt = static_cast<int>(w.rows());
  const double scale = std::sqrt(2.0 * std::numbers::pi) / (dt * nt);
  Eigen::MatrixXcd tmp = w;
  for (int c = 0; c < tmp.cols(); ++c) {
    dft_inverse(tmp.col(c).data(), nt);
  }
  return tmp.real() * scale;
}

Eigen::MatrixXd dt_derivative_columns(const Eigen::MatrixXd& v, double dt) {
  const int nt = static_cast<int>(v.rows());
  Eigen::MatrixXcd w = v.cast<std::complex<double>>();
  const Eigen::VectorXcd mult = fft_derivative_multipliers(nt, dt);
  for (int c = 0; c < w.cols(); ++c) {
    dft_forward(w.col(c).data(), nt);
    w.col(c).array() *= mult.array();
    dft_inverse(w.col(c).data(), nt);
  }
  return w.real() / nt;
}

}  // namespace hardyleray
