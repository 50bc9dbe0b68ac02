#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

#include "lfm/core/candidates.hpp"
#include "lfm/core/table.hpp"

namespace lfm::blocking {

enum class SignatureSource { builtin_minhash, imported_embedding };

struct TupleSignature {
  std::string tuple_id;
  std::vector<std::uint64_t> values;  // minhash values, or 0/1 hyperplane bits
};

// One signature per tuple, in table row order on each side.
struct SignatureSet {
  SignatureSource source = SignatureSource::builtin_minhash;
  std::size_t k = 0;
  std::vector<TupleSignature> left;
  std::vector<TupleSignature> right;
  // Imported embedding vectors, one row per tuple; empty in minhash mode.
  Eigen::MatrixXd left_vectors;
  Eigen::MatrixXd right_vectors;
};

// Lowercased, whitespace-split distinct tokens of all attributes.
std::vector<std::string> tuple_tokens(const Tuple& tuple);

// k seeded hash functions; an empty token set hashes to all-ones.
std::vector<std::uint64_t> minhash(const std::vector<std::string>& tokens, std::size_t k,
                                   std::uint64_t seed);

SignatureSet build_minhash_signatures(const TablePair& tables, std::size_t k, std::uint64_t seed);

// Rows of `id,x1,...,xd`. An id may be qualified as `left:<id>` or
// `right:<id>`; a qualified row wins over a bare one for its side.
using EmbeddingTable = std::map<std::string, Eigen::VectorXd>;
EmbeddingTable read_embeddings(std::istream& in);

// Random-hyperplane signatures over imported vectors. Throws
// Error{missing_ids} when a tuple has no vector and Error{dimension_mismatch}
// when rows disagree on dimension.
SignatureSet build_embedding_signatures(const TablePair& tables, const EmbeddingTable& vectors,
                                        std::size_t k, std::uint64_t seed);

struct Bucket {
  std::vector<std::size_t> left_rows;
  std::vector<std::size_t> right_rows;
};

struct LshIndex {
  std::size_t bands = 0;
  std::size_t rows = 0;
  std::vector<std::map<std::uint64_t, Bucket>> buckets;  // one map per band
};

// Throws Error{invalid_argument} unless k == bands * rows.
LshIndex build_index(const SignatureSet& signatures, std::size_t bands, std::size_t rows);

// Every left/right pair sharing at least one bucket, deduplicated. The
// block key names the first band that produced the pair.
CandidateSet block(const SignatureSet& signatures, std::size_t bands, std::size_t rows);

// Fraction of equal minhash coordinates, or cosine clamped to [0, 1] for
// imported embeddings.
double signature_similarity(const SignatureSet& signatures, std::size_t left_row,
                            std::size_t right_row);

struct SmartSampleEntry {
  std::size_t candidate = 0;  // index into the candidate set
  double likelihood = 0.0;
};

inline constexpr double kMatchThreshold = 0.5;

// Pairs with gamma below the match threshold, by similarity hint descending,
// ties by (left_id, right_id). Throws Error{model_not_fit} on an empty
// posterior and Error{invalid_argument} when n == 0.
std::vector<SmartSampleEntry> smart_sample(const CandidateSet& candidates,
                                           std::span<const double> gamma, std::size_t n);

// |matches in candidates| / |matches|; nullopt when there are no matches.
std::optional<double> blocking_recall(const CandidateSet& candidates,
                                      const std::map<PairKey, bool>& truth);

}  // namespace lfm::blocking
