#pragma once

// Class-conditional generative label model for entity matching.
//
// Each LF j votes independently given the latent class y in {M, U} with a
// three-outcome categorical distribution
//
//   P(vote = +1 | y = c) = p_match_vote(j, c)
//   P(vote = -1 | y = c) = p_unmatch_vote(j, c)
//   P(vote =  0 | y = c) = 1 - p_match_vote(j, c) - p_unmatch_vote(j, c)
//
// with column 0 = M and column 1 = U. The LF's accuracy on matches is
// alpha_M = p_match_vote(j, M), on non-matches alpha_U = p_unmatch_vote(j, U).
// Parameters and the class prior pi are fitted by EM; after every E-step the
// posterior can be lifted onto the transitivity-feasible set.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "lfm/core/error.hpp"
#include "lfm/core/label_matrix.hpp"
#include "lfm/model/pair_graph.hpp"

namespace lfm::model {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// +1 forces a pair to match, -1 to non-match, 0 leaves it to the model.
using ClampVector = Eigen::Matrix<std::int8_t, Eigen::Dynamic, 1>;

template <typename Scalar>
inline constexpr Scalar kProbabilityFloor = Scalar(1e-4);

inline constexpr Eigen::Index kMatch = 0;
inline constexpr Eigen::Index kNonMatch = 1;

template <typename Scalar>
struct LfParameters {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 2> p_match_vote;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 2> p_unmatch_vote;

  Eigen::Index n_lfs() const { return p_match_vote.rows(); }
  Scalar alpha_match(Eigen::Index j) const { return p_match_vote(j, kMatch); }
  Scalar alpha_unmatch(Eigen::Index j) const { return p_unmatch_vote(j, kNonMatch); }
  Scalar p_abstain(Eigen::Index j, Eigen::Index cls) const {
    return Scalar(1) - p_match_vote(j, cls) - p_unmatch_vote(j, cls);
  }
  Scalar vote_probability(Eigen::Index j, Eigen::Index cls, std::int8_t vote) const {
    if (vote > 0) return p_match_vote(j, cls);
    if (vote < 0) return p_unmatch_vote(j, cls);
    return p_abstain(j, cls);
  }
};

template <typename Scalar>
struct Posterior {
  Vector<Scalar> gamma;                 // P(y = M | votes) per pair
  Scalar pi = Scalar(0.5);              // P(y = M)
  std::vector<Scalar> log_likelihood;   // one entry per EM iteration, before projection
  int iterations = 0;
  bool converged = false;
};

template <typename Scalar>
struct FitResult {
  Posterior<Scalar> posterior;
  LfParameters<Scalar> params;
};

struct FitConfig {
  int max_iter = 100;
  double tol = 1e-6;
  bool project = true;
};

namespace detail {

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> indicator(const VoteMatrix& votes,
                                                                std::int8_t value) {
  return (votes.array() == value).template cast<Scalar>().matrix();
}

// Per pair, log P(y = c, votes) for c = M (column 0) and U (column 1).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 2> joint_log(const VoteMatrix& votes,
                                                   const LfParameters<Scalar>& params, Scalar pi) {
  const Eigen::Index m = votes.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 2> log_pos(m, 2), log_neg(m, 2), log_abs(m, 2);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index c : {kMatch, kNonMatch}) {
      log_pos(j, c) = std::log(params.p_match_vote(j, c));
      log_neg(j, c) = std::log(params.p_unmatch_vote(j, c));
      log_abs(j, c) = std::log(params.p_abstain(j, c));
    }
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 2> out =
      indicator<Scalar>(votes, 1) * log_pos + indicator<Scalar>(votes, -1) * log_neg +
      indicator<Scalar>(votes, 0) * log_abs;
  out.col(kMatch).array() += std::log(pi);
  out.col(kNonMatch).array() += std::log1p(-pi);
  return out;
}

template <typename Scalar>
Scalar clamp_probability(Scalar p) {
  return std::clamp(p, kProbabilityFloor<Scalar>, Scalar(1) - kProbabilityFloor<Scalar>);
}

}  // namespace detail

// Posterior match probability per pair, computed in log space. Pairs with a
// clamp are pinned to exactly 1 or 0.
template <typename Scalar>
Vector<Scalar> e_step(const VoteMatrix& votes, const LfParameters<Scalar>& params, Scalar pi,
                      const ClampVector* clamp = nullptr) {
  const auto joint = detail::joint_log(votes, params, pi);
  Vector<Scalar> gamma =
      ((joint.col(kNonMatch) - joint.col(kMatch)).array().exp() + Scalar(1)).inverse().matrix();
  if (clamp) {
    for (Eigen::Index i = 0; i < gamma.size(); ++i) {
      if ((*clamp)(i) != 0) gamma(i) = (*clamp)(i) > 0 ? Scalar(1) : Scalar(0);
    }
  }
  return gamma;
}

// Observed-data log-likelihood; a clamped pair contributes its joint with the
// observed class instead of the marginal.
template <typename Scalar>
Scalar log_likelihood(const VoteMatrix& votes, const LfParameters<Scalar>& params, Scalar pi,
                      const ClampVector* clamp = nullptr) {
  const auto joint = detail::joint_log(votes, params, pi);
  Scalar total = 0;
  for (Eigen::Index i = 0; i < joint.rows(); ++i) {
    const Scalar a = joint(i, kMatch), b = joint(i, kNonMatch);
    if (clamp && (*clamp)(i) != 0) {
      total += (*clamp)(i) > 0 ? a : b;
    } else {
      const Scalar hi = std::max(a, b);
      total += hi + std::log(std::exp(a - hi) + std::exp(b - hi));
    }
  }
  return total;
}

// Soft-count maximum likelihood. Every probability is clamped to
// [eps, 1 - eps] and each (LF, class) keeps at least eps abstain mass: if
// p_match_vote + p_unmatch_vote exceeds 1 - eps the excess comes off the
// larger of the two.
template <typename Scalar>
std::pair<LfParameters<Scalar>, Scalar> m_step(const VoteMatrix& votes,
                                               const Vector<Scalar>& gamma) {
  constexpr Scalar eps = kProbabilityFloor<Scalar>;
  const Eigen::Index n = votes.rows(), m = votes.cols();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 2> weights(n, 2);
  weights.col(kMatch) = gamma;
  weights.col(kNonMatch) = Vector<Scalar>::Ones(n) - gamma;
  const Eigen::Matrix<Scalar, 1, 2> mass = weights.colwise().sum();

  LfParameters<Scalar> params;
  params.p_match_vote = detail::indicator<Scalar>(votes, 1).transpose() * weights;
  params.p_unmatch_vote = detail::indicator<Scalar>(votes, -1).transpose() * weights;
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index c : {kMatch, kNonMatch}) {
      Scalar pos = mass(c) > 0 ? params.p_match_vote(j, c) / mass(c) : Scalar(0);
      Scalar neg = mass(c) > 0 ? params.p_unmatch_vote(j, c) / mass(c) : Scalar(0);
      pos = detail::clamp_probability(pos);
      neg = detail::clamp_probability(neg);
      const Scalar excess = pos + neg - (Scalar(1) - eps);
      if (excess > 0) (pos >= neg ? pos : neg) -= excess;
      params.p_match_vote(j, c) = pos;
      params.p_unmatch_vote(j, c) = neg;
    }
  }
  const Scalar pi = n > 0 ? detail::clamp_probability(gamma.mean()) : Scalar(0.5);
  return {std::move(params), pi};
}

// Hard majority vote: 1 where the vote sum is positive, 0 otherwise (ties
// and all-abstain rows count as non-match).
template <typename Scalar>
Vector<Scalar> majority_vote(const VoteMatrix& votes) {
  const Eigen::Matrix<int, Eigen::Dynamic, 1> sums = votes.template cast<int>().rowwise().sum();
  return (sums.array() > 0).template cast<Scalar>().matrix();
}

struct ProjectionOptions {
  // Visit triangles in a seeded random order instead of index order.
  std::optional<std::uint64_t> shuffle_seed;
};

struct ProjectionStats {
  std::size_t updates = 0;
  std::size_t triangle_visits = 0;
};

// Monotone multiplicative closure onto the transitivity-feasible set: for
// every triangle (i, j, k) of the pair graph and each rotation,
// gamma_jk <- max(gamma_jk, gamma_ij * gamma_ik), repeated until nothing
// changes. Values only rise and stay in [0, 1], so this terminates, and the
// fixed point is the least feasible vector above the input regardless of
// visiting order. Clamped pairs are never modified.
template <typename Scalar>
Vector<Scalar> transitivity_project(Vector<Scalar> gamma, const PairGraph& graph,
                                    const ClampVector* clamp = nullptr,
                                    const ProjectionOptions& options = {},
                                    ProjectionStats* stats = nullptr) {
  if (static_cast<std::size_t>(gamma.size()) != graph.n_edges()) {
    throw Error(Errc::invalid_argument, "posterior size does not match the pair graph");
  }
  const auto& triangles = graph.triangles();
  if (triangles.empty()) return gamma;

  std::vector<std::uint32_t> order(triangles.size());
  std::iota(order.begin(), order.end(), 0u);
  std::optional<std::mt19937_64> rng;
  if (options.shuffle_seed) {
    rng.emplace(*options.shuffle_seed);
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[(*rng)() % i]);
  }
  std::deque<std::uint32_t> work(order.begin(), order.end());
  std::vector<char> queued(triangles.size(), 1);
  auto frozen = [&](std::uint32_t e) { return clamp && (*clamp)(e) != 0; };

  ProjectionStats local;
  while (!work.empty()) {
    std::uint32_t t;
    if (rng && work.size() > 1) {
      const std::size_t pick = (*rng)() % work.size();
      std::swap(work[pick], work.front());
    }
    t = work.front();
    work.pop_front();
    queued[t] = 0;
    ++local.triangle_visits;

    const auto& tri = triangles[t];
    for (int rot = 0; rot < 3; ++rot) {
      const std::uint32_t a = tri[static_cast<std::size_t>(rot)];
      const std::uint32_t b = tri[static_cast<std::size_t>((rot + 1) % 3)];
      const std::uint32_t target = tri[static_cast<std::size_t>((rot + 2) % 3)];
      if (frozen(target)) continue;
      const Scalar implied = gamma(a) * gamma(b);
      if (implied > gamma(target)) {
        gamma(target) = implied;
        ++local.updates;
        for (auto other : graph.triangles_of(target)) {
          if (!queued[other]) {
            queued[other] = 1;
            work.push_back(other);
          }
        }
      }
    }
  }
  if (stats) *stats = local;
  return gamma;
}

// Largest violation max(0, gamma_ij * gamma_ik - gamma_jk) over all triangles
// and rotations, ignoring targets that are clamped.
template <typename Scalar>
Scalar max_transitivity_violation(const Vector<Scalar>& gamma, const PairGraph& graph,
                                  const ClampVector* clamp = nullptr) {
  Scalar worst = 0;
  for (const auto& tri : graph.triangles()) {
    for (int rot = 0; rot < 3; ++rot) {
      const auto a = tri[static_cast<std::size_t>(rot)];
      const auto b = tri[static_cast<std::size_t>((rot + 1) % 3)];
      const auto target = tri[static_cast<std::size_t>((rot + 2) % 3)];
      if (clamp && (*clamp)(target) != 0) continue;
      worst = std::max(worst, gamma(a) * gamma(b) - gamma(target));
    }
  }
  return worst;
}

// EM from a majority-vote start: e_step -> transitivity_project -> m_step
// until the log-likelihood gains less than tol or max_iter is reached.
// Throws Error{no_usable_lfs} when no LF ever casts a non-abstain vote.
template <typename Scalar>
FitResult<Scalar> fit(const VoteMatrix& votes, const PairGraph* graph,
                      const ClampVector* clamp, const FitConfig& config = {}) {
  if (votes.rows() == 0 || votes.cols() == 0 || (votes.array() != 0).count() == 0) {
    throw Error(Errc::no_usable_lfs, "no usable LFs: every LF abstains on every pair");
  }
  if (clamp && clamp->size() != votes.rows()) {
    throw Error(Errc::invalid_argument, "clamp vector does not match the label matrix");
  }
  Vector<Scalar> gamma = majority_vote<Scalar>(votes);
  if (clamp) {
    for (Eigen::Index i = 0; i < gamma.size(); ++i) {
      if ((*clamp)(i) != 0) gamma(i) = (*clamp)(i) > 0 ? Scalar(1) : Scalar(0);
    }
  }
  auto [params, pi] = m_step<Scalar>(votes, gamma);

  FitResult<Scalar> out;
  auto& post = out.posterior;
  for (int iter = 0; iter < config.max_iter; ++iter) {
    const Scalar ll = log_likelihood<Scalar>(votes, params, pi, clamp);
    gamma = e_step<Scalar>(votes, params, pi, clamp);
    if (config.project && graph) gamma = transitivity_project<Scalar>(std::move(gamma), *graph, clamp);
    std::tie(params, pi) = m_step<Scalar>(votes, gamma);
    post.log_likelihood.push_back(ll);
    post.iterations = iter + 1;
    const auto k = post.log_likelihood.size();
    if (k >= 2 && post.log_likelihood[k - 1] - post.log_likelihood[k - 2] < Scalar(config.tol)) {
      post.converged = true;
      break;
    }
  }
  post.gamma = std::move(gamma);
  post.pi = pi;
  out.params = std::move(params);
  return out;
}

struct LfQuality {
  double est_fpr = 0.0;
  double est_fnr = 0.0;
};

// est_fpr: posterior-weighted share of an LF's +1 votes on non-matches;
// est_fnr: share of its -1 votes on matches. 0 when the LF casts no such vote.
template <typename Scalar>
std::vector<LfQuality> lf_quality(const VoteMatrix& votes, const Vector<Scalar>& gamma) {
  const Eigen::Index n = votes.rows();
  const auto pos = detail::indicator<Scalar>(votes, 1);
  const auto neg = detail::indicator<Scalar>(votes, -1);
  const Vector<Scalar> fp_mass = pos.transpose() * (Vector<Scalar>::Ones(n) - gamma);
  const Vector<Scalar> fn_mass = neg.transpose() * gamma;
  const Vector<Scalar> n_pos = pos.colwise().sum().transpose();
  const Vector<Scalar> n_neg = neg.colwise().sum().transpose();
  std::vector<LfQuality> out(static_cast<std::size_t>(votes.cols()));
  for (Eigen::Index j = 0; j < votes.cols(); ++j) {
    auto& q = out[static_cast<std::size_t>(j)];
    q.est_fpr = n_pos(j) > 0 ? static_cast<double>(fp_mass(j) / n_pos(j)) : 0.0;
    q.est_fnr = n_neg(j) > 0 ? static_cast<double>(fn_mass(j) / n_neg(j)) : 0.0;
  }
  return out;
}

// Pairs where LF `lf` votes +1 but gamma < 0.5, lowest gamma first.
template <typename Scalar>
std::vector<Eigen::Index> fp_drilldown(const VoteMatrix& votes, Eigen::Index lf,
                                       const Vector<Scalar>& gamma) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < votes.rows(); ++i) {
    if (votes(i, lf) > 0 && gamma(i) < Scalar(0.5)) out.push_back(i);
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return gamma(a) < gamma(b); });
  return out;
}

// Pairs where LF `lf` votes -1 but gamma >= 0.5, highest gamma first.
template <typename Scalar>
std::vector<Eigen::Index> fn_drilldown(const VoteMatrix& votes, Eigen::Index lf,
                                       const Vector<Scalar>& gamma) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < votes.rows(); ++i) {
    if (votes(i, lf) < 0 && gamma(i) >= Scalar(0.5)) out.push_back(i);
  }
  std::stable_sort(out.begin(), out.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return gamma(a) > gamma(b); });
  return out;
}

// Seeded uniform sample (without replacement) of up to n pairs with
// gamma >= 0.5, returned in ascending index order. Throws
// Error{no_predicted_matches} when there is none.
template <typename Scalar>
std::vector<Eigen::Index> sample_predicted_matches(const Vector<Scalar>& gamma, std::size_t n,
                                                   std::uint64_t seed) {
  std::vector<Eigen::Index> pool;
  for (Eigen::Index i = 0; i < gamma.size(); ++i) {
    if (gamma(i) >= Scalar(0.5)) pool.push_back(i);
  }
  if (pool.empty()) throw Error(Errc::no_predicted_matches, "the model predicts no matches");
  std::mt19937_64 rng(seed);
  const std::size_t take = std::min(n, pool.size());
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(take);
  std::sort(pool.begin(), pool.end());
  return pool;
}

struct PrecisionEstimate {
  double precision = 0.0;
  std::size_t n_labels = 0;
};

// Fraction of labeled sample pairs marked match. `labels` holds, per sampled
// pair, nullopt when unlabeled. Returns nullopt when nothing is labeled.
inline std::optional<PrecisionEstimate> estimate_em_precision(
    const std::vector<std::optional<bool>>& labels) {
  PrecisionEstimate est;
  std::size_t matches = 0;
  for (const auto& l : labels) {
    if (!l) continue;
    ++est.n_labels;
    matches += *l;
  }
  if (est.n_labels == 0) return std::nullopt;
  est.precision = static_cast<double>(matches) / static_cast<double>(est.n_labels);
  return est;
}

}  // namespace lfm::model
