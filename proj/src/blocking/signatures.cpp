#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "lfm/blocking/blocking.hpp"
#include "lfm/core/csv.hpp"
#include "lfm/core/error.hpp"
#include "lfm/text/text_kit.hpp"
#include "lfm/util/hash.hpp"

namespace lfm::blocking {

std::vector<std::string> tuple_tokens(const Tuple& tuple) {
  std::string all;
  for (const auto& v : tuple.values) {
    all += v;
    all.push_back(' ');
  }
  auto tokens = text::tokenize(text::preprocess(all, {text::PreprocessStep::lowercase}),
                               text::Tokenizer{text::TokenizerKind::whitespace, 3});
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  return tokens;
}

std::vector<std::uint64_t> minhash(const std::vector<std::string>& tokens, std::size_t k,
                                   std::uint64_t seed) {
  std::vector<std::uint64_t> sig(k, std::numeric_limits<std::uint64_t>::max());
  std::vector<std::uint64_t> salts(k);
  for (std::size_t i = 0; i < k; ++i) salts[i] = mix64(seed * 0x9e3779b97f4a7c15ULL + i);
  for (const auto& t : tokens) {
    const std::uint64_t h = fnv1a64(t);
    for (std::size_t i = 0; i < k; ++i) sig[i] = std::min(sig[i], mix64(h ^ salts[i]));
  }
  return sig;
}

SignatureSet build_minhash_signatures(const TablePair& tables, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw Error(Errc::invalid_argument, "signature length k must be positive");
  SignatureSet out;
  out.source = SignatureSource::builtin_minhash;
  out.k = k;
  for (Side side : {Side::left, Side::right}) {
    auto& dest = side == Side::left ? out.left : out.right;
    for (const auto& t : tables.side(side).rows()) {
      dest.push_back({t.id, minhash(tuple_tokens(t), k, seed)});
    }
  }
  return out;
}

EmbeddingTable read_embeddings(std::istream& in) {
  EmbeddingTable out;
  std::optional<Eigen::Index> dim;
  auto records = csv::read(in);
  for (std::size_t n = 0; n < records.size(); ++n) {
    const auto& rec = records[n];
    if (rec.fields.size() < 2) {
      throw Error(Errc::parse_error,
                  "embeddings: line " + std::to_string(rec.line) + ": expected id and values");
    }
    Eigen::VectorXd v(static_cast<Eigen::Index>(rec.fields.size() - 1));
    std::optional<std::string> bad;
    for (Eigen::Index i = 0; i < v.size() && !bad; ++i) {
      const auto& f = rec.fields[static_cast<std::size_t>(i) + 1];
      char* end = nullptr;
      v(i) = std::strtod(f.c_str(), &end);
      if (f.empty() || end != f.c_str() + f.size()) bad = f;
    }
    if (bad) {
      if (n == 0) continue;  // header row
      throw Error(Errc::parse_error, "embeddings: line " + std::to_string(rec.line) + ": '" +
                                         *bad + "' is not a number");
    }
    if (dim && *dim != v.size()) {
      throw Error(Errc::dimension_mismatch, "embeddings: line " + std::to_string(rec.line) +
                                                ": dimension " + std::to_string(v.size()) +
                                                ", expected " + std::to_string(*dim));
    }
    dim = v.size();
    out[rec.fields[0]] = std::move(v);
  }
  return out;
}

SignatureSet build_embedding_signatures(const TablePair& tables, const EmbeddingTable& vectors,
                                        std::size_t k, std::uint64_t seed) {
  if (k == 0) throw Error(Errc::invalid_argument, "signature length k must be positive");
  if (vectors.empty()) throw Error(Errc::missing_ids, "embedding table is empty");
  const auto dim = vectors.begin()->second.size();

  SignatureSet out;
  out.source = SignatureSource::imported_embedding;
  out.k = k;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd planes(static_cast<Eigen::Index>(k), dim);
  for (Eigen::Index i = 0; i < planes.rows(); ++i) {
    for (Eigen::Index j = 0; j < planes.cols(); ++j) planes(i, j) = normal(rng);
  }

  std::vector<std::string> missing;
  for (Side side : {Side::left, Side::right}) {
    const Table& table = tables.side(side);
    auto& sigs = side == Side::left ? out.left : out.right;
    auto& mat = side == Side::left ? out.left_vectors : out.right_vectors;
    mat.resize(static_cast<Eigen::Index>(table.size()), dim);
    const std::string qualifier = side == Side::left ? "left:" : "right:";
    for (std::size_t r = 0; r < table.size(); ++r) {
      const auto& id = table[r].id;
      auto it = vectors.find(qualifier + id);
      if (it == vectors.end()) it = vectors.find(id);
      if (it == vectors.end()) {
        missing.push_back(qualifier + id);
        continue;
      }
      if (it->second.size() != dim) {
        throw Error(Errc::dimension_mismatch, "embedding for '" + id + "' has dimension " +
                                                  std::to_string(it->second.size()));
      }
      mat.row(static_cast<Eigen::Index>(r)) = it->second.transpose();
      const Eigen::VectorXd proj = planes * it->second;
      TupleSignature sig{id, std::vector<std::uint64_t>(k)};
      for (std::size_t i = 0; i < k; ++i) sig.values[i] = proj(static_cast<Eigen::Index>(i)) >= 0.0;
      sigs.push_back(std::move(sig));
    }
  }
  if (!missing.empty()) {
    std::string msg = "no embedding for " + std::to_string(missing.size()) + " tuple(s), e.g. " + missing.front();
    throw Error(Errc::missing_ids, msg);
  }
  return out;
}

double signature_similarity(const SignatureSet& s, std::size_t left_row, std::size_t right_row) {
  if (s.source == SignatureSource::imported_embedding) {
    const auto a = s.left_vectors.row(static_cast<Eigen::Index>(left_row));
    const auto b = s.right_vectors.row(static_cast<Eigen::Index>(right_row));
    const double na = a.norm(), nb = b.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;
    return std::clamp(a.dot(b) / (na * nb), 0.0, 1.0);
  }
  const auto& a = s.left[left_row].values;
  const auto& b = s.right[right_row].values;
  std::size_t equal = 0;
  for (std::size_t i = 0; i < a.size(); ++i) equal += a[i] == b[i];
  return a.empty() ? 0.0 : static_cast<double>(equal) / static_cast<double>(a.size());
}

}  // namespace lfm::blocking
