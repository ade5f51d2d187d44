#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "entmap/entmap.hpp"

namespace testsupport {

// Deterministic across platforms: raw mt19937_64 output mapped onto [0, 1)
// with 53 bits, distributions hand-rolled (the std:: ones are
// implementation-defined and would tie expected values to one libstdc++).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double range(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int bernoulli(double p) { return uniform() < p ? 1 : 0; }
  int below(int n) { return static_cast<int>(uniform() * n); }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    constexpr double tau = 6.283185307179586;
    spare_ = r * std::sin(tau * u2);
    have_spare_ = true;
    return r * std::cos(tau * u2);
  }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

inline entmap::LabelSpace make_space(int size) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) names.push_back("l" + std::to_string(i));
  return entmap::LabelSpace(names);
}

inline entmap::LabelVector random_vector(Rng& rng, int size, double p = 0.5) {
  Eigen::ArrayXi bits(size);
  for (int i = 0; i < size; ++i) bits(i) = rng.bernoulli(p);
  return entmap::LabelVector(bits);
}

inline std::vector<entmap::LabelVector> random_vectors(Rng& rng, int n, int size,
                                                       double p = 0.5) {
  std::vector<entmap::LabelVector> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) out.push_back(random_vector(rng, size, p));
  return out;
}

inline entmap::LikelihoodRecord random_record(Rng& rng, int size, std::string id) {
  Eigen::VectorXd p_yes(size), p_no(size);
  for (int i = 0; i < size; ++i) {
    p_yes(i) = rng.range(0.01, 0.99);
    p_no(i) = 1.0 - p_yes(i);
  }
  return entmap::LikelihoodRecord(std::move(id), std::move(p_yes), std::move(p_no));
}

inline entmap::IsingPrior random_prior(Rng& rng, const entmap::LabelSpace& space,
                                       double bias_scale, double coupling_scale) {
  const int size = space.size();
  Eigen::VectorXd bias(size);
  for (int i = 0; i < size; ++i) bias(i) = rng.range(-bias_scale, bias_scale);
  Eigen::MatrixXd coupling = Eigen::MatrixXd::Zero(size, size);
  for (int i = 0; i < size; ++i) {
    for (int j = i + 1; j < size; ++j) {
      coupling(i, j) = rng.range(-coupling_scale, coupling_scale);
    }
  }
  return entmap::IsingPrior(space, std::move(bias), std::move(coupling), 0.0);
}

}  // namespace testsupport
