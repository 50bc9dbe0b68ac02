#include <algorithm>
#include <cmath>
#include <vector>

#include "lfm/core/error.hpp"
#include "lfm/text/text_kit.hpp"

namespace lfm::text {
namespace {

bool same_keys(const WeightedTokenSet& a, const WeightedTokenSet& b) {
  return std::equal(a.entries().begin(), a.entries().end(), b.entries().begin(),
                    b.entries().end(),
                    [](const auto& x, const auto& y) { return x.first == y.first; });
}

// Walks both sorted entry lists in lockstep.
template <typename F>
void merge_walk(const WeightedTokenSet& a, const WeightedTokenSet& b, F&& visit) {
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      visit(ia->second, 0.0);
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      visit(0.0, ib->second);
      ++ib;
    } else {
      visit(ia->second, ib->second);
      ++ia;
      ++ib;
    }
  }
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

double distance(std::string_view a, std::string_view b, DistanceKind kind) {
  if (kind != DistanceKind::edit_distance_normalized) {
    throw Error(Errc::invalid_argument,
                std::string(name(kind)) + " operates on token sets, not text");
  }
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return 1.0;
  return static_cast<double>(levenshtein(a, b)) / static_cast<double>(std::max(a.size(), b.size()));
}

double distance(const WeightedTokenSet& a, const WeightedTokenSet& b, DistanceKind kind) {
  if (kind == DistanceKind::edit_distance_normalized) {
    throw Error(Errc::invalid_argument, "edit-distance-normalized operates on text, not token sets");
  }
  if (a.empty() && b.empty()) return 0.0;
  if (a.empty() || b.empty()) return 1.0;

  switch (kind) {
    case DistanceKind::jaccard: {
      std::size_t inter = 0, uni = 0;
      merge_walk(a, b, [&](double, double) { ++uni; });
      inter = a.size() + b.size() - uni;
      return 1.0 - static_cast<double>(inter) / static_cast<double>(uni);
    }
    case DistanceKind::overlap_coefficient: {
      std::size_t uni = 0;
      merge_walk(a, b, [&](double, double) { ++uni; });
      const std::size_t inter = a.size() + b.size() - uni;
      return 1.0 - static_cast<double>(inter) / static_cast<double>(std::min(a.size(), b.size()));
    }
    case DistanceKind::weighted_jaccard: {
      double num = 0.0, den = 0.0;
      merge_walk(a, b, [&](double x, double y) {
        num += std::min(x, y);
        den += std::max(x, y);
      });
      if (den == 0.0) return same_keys(a, b) ? 0.0 : 1.0;
      return clamp01(1.0 - num / den);
    }
    case DistanceKind::cosine: {
      double dot = 0.0, na = 0.0, nb = 0.0;
      merge_walk(a, b, [&](double x, double y) {
        dot += x * y;
        na += x * x;
        nb += y * y;
      });
      if (na == 0.0 || nb == 0.0) return (na == nb && same_keys(a, b)) ? 0.0 : 1.0;
      if (same_keys(a, b) && a == b) return 0.0;
      return clamp01(1.0 - dot / (std::sqrt(na) * std::sqrt(nb)));
    }
    case DistanceKind::edit_distance_normalized:
      break;
  }
  return 1.0;
}

double distance(const DistanceOperand& a, const DistanceOperand& b, DistanceKind kind) {
  if (a.index() != b.index()) throw Error(Errc::invalid_argument, "distance operand kinds differ");
  if (const auto* s = std::get_if<std::string>(&a)) {
    return distance(std::string_view(*s), std::string_view(std::get<std::string>(b)), kind);
  }
  return distance(std::get<WeightedTokenSet>(a), std::get<WeightedTokenSet>(b), kind);
}

}  // namespace lfm::text
