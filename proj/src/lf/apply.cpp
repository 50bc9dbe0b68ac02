#include "lfm/lf/engine.hpp"
#include "lfm/util/parallel.hpp"

namespace lfm::lf {

ApplyResult apply_all(const std::vector<LabelFunctionSpec>& specs, const CandidateSet& candidates,
                      const CorpusIndex& corpus, const LabelMatrix* existing) {
  const auto n = static_cast<Eigen::Index>(candidates.size());
  const bool cache_usable = existing && existing->votes.rows() == n;

  ApplyResult result;
  LabelMatrix& m = result.matrix;
  m.votes.resize(n, static_cast<Eigen::Index>(specs.size()));
  std::vector<std::size_t> todo;
  for (std::size_t j = 0; j < specs.size(); ++j) {
    m.lf_ids.push_back(specs[j].name);
    m.lf_versions.push_back(lf_version(specs[j]));
    std::optional<std::size_t> old;
    if (cache_usable) old = existing->column_of(specs[j].name);
    if (old && existing->lf_versions[*old] == m.lf_versions[j]) {
      m.votes.col(static_cast<Eigen::Index>(j)) = existing->votes.col(static_cast<Eigen::Index>(*old));
      ++result.columns_reused;
    } else {
      todo.push_back(j);
    }
  }

  std::vector<std::vector<std::int8_t>> columns(todo.size());
  parallel_for(todo.size(), [&](std::size_t t) {
    columns[t] = evaluate_column(specs[todo[t]], candidates, corpus);
  });
  for (std::size_t t = 0; t < todo.size(); ++t) {
    m.votes.col(static_cast<Eigen::Index>(todo[t])) =
        Eigen::Map<const Eigen::Matrix<std::int8_t, Eigen::Dynamic, 1>>(columns[t].data(), n);
  }
  result.columns_recomputed = todo.size();
  result.evaluations = todo.size() * candidates.size();
  return result;
}

}  // namespace lfm::lf
