#include <algorithm>
#include <cmath>

#include "lfm/core/error.hpp"
#include "lfm/text/text_kit.hpp"

namespace lfm::text {

CorpusStats CorpusStats::build(const std::vector<std::vector<std::string>>& documents) {
  CorpusStats stats;
  stats.n_documents = documents.size();
  for (const auto& doc : documents) {
    std::vector<std::string> distinct(doc);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (auto& tok : distinct) ++stats.df[tok];
  }
  return stats;
}

double CorpusStats::idf(const std::string& token) const {
  auto it = df.find(token);
  const double d = it == df.end() ? 0.0 : static_cast<double>(it->second);
  return std::log((static_cast<double>(n_documents) + 1.0) / (d + 1.0));
}

WeightedTokenSet::WeightedTokenSet(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (e.second < 0.0) throw Error(Errc::invalid_argument, "negative token weight");
    if (!entries_.empty() && entries_.back().first == e.first) {
      entries_.back().second += e.second;
    } else {
      entries_.push_back(std::move(e));
    }
  }
}

double WeightedTokenSet::weight(const std::string& token) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), token,
                             [](const Entry& e, const std::string& t) { return e.first < t; });
  return it != entries_.end() && it->first == token ? it->second : 0.0;
}

WeightedTokenSet weigh(const std::vector<std::string>& tokens, Weighting weighting,
                       const CorpusStats* stats) {
  std::vector<std::string> sorted(tokens);
  std::sort(sorted.begin(), sorted.end());
  std::vector<WeightedTokenSet::Entry> entries;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    entries.emplace_back(sorted[i], static_cast<double>(j - i));  // term frequency
    i = j;
  }
  if (weighting == Weighting::uniform) {
    for (auto& e : entries) e.second = 1.0;
  } else {
    if (!stats) throw Error(Errc::invalid_argument, "tf-idf weighting requires corpus statistics");
    for (auto& e : entries) e.second *= stats->idf(e.first);
  }
  return WeightedTokenSet(std::move(entries));
}

}  // namespace lfm::text
