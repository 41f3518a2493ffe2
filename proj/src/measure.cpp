#include "voi/measure.hpp"

#include <cmath>
#include <stdexcept>

namespace voi {

InformationMeasure::InformationMeasure(DivergenceKind divergence, PhiKind phi, double p,
                                       Belief reference)
    : divergence_(divergence), phi_(phi), p_(p), reference_(std::move(reference)) {
  if (phi_ == PhiKind::identity) {
    p_ = 1.0;
  } else if (!(p_ >= 1.0)) {
    throw std::invalid_argument("measure: power exponent must be >= 1");
  }
  if (divergence_ == DivergenceKind::kl && !reference_.strictly_positive())
    throw std::invalid_argument("measure: kl divergence requires a strictly positive reference");
}

PosteriorDistribution::PosteriorDistribution(std::vector<Belief> support,
                                             std::vector<double> probs, Belief mean)
    : support_(std::move(support)), probs_(std::move(probs)), mean_(std::move(mean)) {
  if (support_.empty() || support_.size() != probs_.size())
    throw std::invalid_argument("posterior distribution: support/probs size mismatch");
  const int n = mean_.dim();
  double total = 0.0;
  for (const auto& x : support_)
    if (x.dim() != n)
      throw std::invalid_argument("posterior distribution: dimension mismatch");
  for (double& p : probs_) {
    if (!std::isfinite(p) || p < -1e-10)
      throw std::invalid_argument("posterior distribution: negative weight");
    if (p < 0.0) p = 0.0;
    total += p;
  }
  if (std::fabs(total - 1.0) > 1e-10)
    throw std::invalid_argument("posterior distribution: weights sum to " +
                                std::to_string(total));
  for (int s = 0; s < n; ++s) {
    double bary = 0.0;
    for (std::size_t j = 0; j < support_.size(); ++j) bary += probs_[j] * support_[j][s];
    if (std::fabs(bary - mean_[s]) > kFeasibilityTol)
      throw std::invalid_argument("posterior distribution: barycenter differs from mean in coordinate " +
                                  std::to_string(s));
  }
}

PosteriorDistribution PosteriorDistribution::point_mass(const Belief& x) {
  return PosteriorDistribution({x}, {1.0}, x);
}

double shannon_entropy(const Belief& x) {
  double h = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    const double v = x[i];
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

double eval_divergence(const InformationMeasure& measure, const Belief& x) {
  const Belief& mu = measure.reference();
  if (x.dim() != mu.dim())
    throw std::invalid_argument("eval_divergence: dimension mismatch");
  switch (measure.divergence()) {
    case DivergenceKind::quadratic: {
      double d = 0.0;
      for (int i = 0; i < x.dim(); ++i) {
        const double t = x[i] - mu[i];
        d += t * t;
      }
      return d;
    }
    case DivergenceKind::kl: {
      double d = 0.0;
      for (int i = 0; i < x.dim(); ++i) {
        const double xi = x[i];
        if (xi > 0.0) {
          if (mu[i] <= 0.0)
            throw std::invalid_argument("eval_divergence: kl with zero reference coordinate");
          d += xi * std::log(xi / mu[i]);
        }
      }
      return d;
    }
    case DivergenceKind::entropy_reduction:
      return shannon_entropy(mu) - shannon_entropy(x);
  }
  throw std::logic_error("eval_divergence: unknown divergence kind");
}

double eval_amount(const InformationMeasure& measure, const PosteriorDistribution& f) {
  const Belief& mu = measure.reference();
  if (f.mean().dim() != mu.dim())
    throw std::invalid_argument("eval_amount: dimension mismatch");
  if (f.mean().distance_inf(mu) > kFeasibilityTol)
    throw std::invalid_argument("eval_amount: distribution is not Bayes-plausible for the reference");
  double inner = 0.0;
  for (int j = 0; j < f.size(); ++j)
    inner += f.probs()[static_cast<std::size_t>(j)] *
             eval_divergence(measure, f.support()[static_cast<std::size_t>(j)]);
  // Jensen keeps the expectation nonnegative; trim arithmetic noise.
  if (inner < 0.0 && inner > -kFeasibilityTol) inner = 0.0;
  return eval_phi(measure, inner);
}

double eval_phi(const InformationMeasure& measure, double inner) {
  if (measure.phi() == PhiKind::identity) return inner;
  if (inner < 0.0)
    throw std::invalid_argument("eval_phi: negative inner expectation");
  return std::pow(inner, measure.power());
}

double eval_phi_inverse(const InformationMeasure& measure, double eta) {
  if (eta < 0.0) throw std::invalid_argument("eval_phi_inverse: eta must be nonnegative");
  if (measure.phi() == PhiKind::identity) return eta;
  return std::pow(eta, 1.0 / measure.power());
}

}  // namespace voi
