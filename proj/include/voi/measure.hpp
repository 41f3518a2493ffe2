#pragma once

#include <vector>

#include "voi/types.hpp"

namespace voi {

enum class DivergenceKind { quadratic, kl, entropy_reduction };

enum class PhiKind { identity, power };

// A measure of the amount of information: a strictly convex divergence
// c(x, reference) together with an increasing convex outer transform phi.
// The amount carried by a distribution over posteriors F is
// phi(E_F c(x, reference)).
class InformationMeasure {
 public:
  InformationMeasure(DivergenceKind divergence, PhiKind phi, double p, Belief reference);

  DivergenceKind divergence() const { return divergence_; }
  PhiKind phi() const { return phi_; }
  double power() const { return p_; }
  const Belief& reference() const { return reference_; }

 private:
  DivergenceKind divergence_;
  PhiKind phi_;
  double p_;
  Belief reference_;
};

// A finite-support distribution over beliefs with a stated barycenter.
// Bayes-plausible when the barycenter equals the prior.
class PosteriorDistribution {
 public:
  PosteriorDistribution(std::vector<Belief> support, std::vector<double> probs,
                        Belief mean);

  const std::vector<Belief>& support() const { return support_; }
  const std::vector<double>& probs() const { return probs_; }
  const Belief& mean() const { return mean_; }
  int size() const { return static_cast<int>(support_.size()); }

  static PosteriorDistribution point_mass(const Belief& x);

 private:
  std::vector<Belief> support_;
  std::vector<double> probs_;
  Belief mean_;
};

// Divergence of a posterior from the measure's reference belief.
//   quadratic          -> squared Euclidean distance
//   kl                 -> Kullback-Leibler divergence, natural log, 0 ln 0 = 0
//   entropy_reduction  -> H(reference) - H(x), natural log (can be negative)
double eval_divergence(const InformationMeasure& measure, const Belief& x);

// Amount of information phi(E_F c) carried by a Bayes-plausible F whose mean
// is the measure's reference. Nonnegative by Jensen.
double eval_amount(const InformationMeasure& measure, const PosteriorDistribution& f);

// The outer transform and its inverse (identity or x^p with p >= 1).
double eval_phi(const InformationMeasure& measure, double inner);
double eval_phi_inverse(const InformationMeasure& measure, double eta);

// Shannon entropy with natural log and the 0 ln 0 = 0 convention.
double shannon_entropy(const Belief& x);

}  // namespace voi
