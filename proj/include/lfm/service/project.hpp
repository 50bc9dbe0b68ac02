#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "lfm/core/candidates.hpp"
#include "lfm/core/ground_truth.hpp"
#include "lfm/core/label_matrix.hpp"
#include "lfm/core/table.hpp"
#include "lfm/lf/engine.hpp"
#include "lfm/lf/spec.hpp"
#include "lfm/model/label_model.hpp"
#include "lfm/model/pair_graph.hpp"
#include "lfm/service/config.hpp"

namespace lfm::service {

inline constexpr int kFormatVersion = 1;

struct EMStats {
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  std::size_t candidate_count = 0;
  std::size_t matches_found = 0;                   // pairs with gamma >= 0.5
  std::optional<double> estimated_precision;       // from labeled precision-sample pairs
  std::size_t precision_labels = 0;
  std::optional<double> blocking_recall;           // only with fixture labels
  std::string model_status;                        // "fit", "not fit", "no usable LFs"
};

struct LfStatsRow {
  std::string name;
  lf::Origin origin = lf::Origin::user;
  std::size_t n_match = 0;
  std::size_t n_unmatch = 0;
  std::size_t n_abstain = 0;
  double coverage = 0.0;
  std::optional<double> est_fpr;  // absent until the model covers this LF
  std::optional<double> est_fnr;
  std::optional<double> alpha_match;
  std::optional<double> alpha_unmatch;
};

struct Dashboard {
  EMStats em;
  std::vector<LfStatsRow> lfs;
};

struct ApplyReport {
  Dashboard dashboard;
  std::size_t evaluations = 0;
  std::size_t columns_recomputed = 0;
  bool refit = false;  // false when the previous fit was still current
};

struct SampleRow {
  PairView view;
  double likelihood = 0.0;                // smart samples: blocking similarity
  double gamma = 0.0;
  std::optional<bool> label;              // effective ground-truth label, if any
};

enum class SampleKind { smart, precision };
enum class DrilldownKind { fp, fn };
enum class LabelValue { match, non_match, clear };

struct LfEntry {
  lf::LabelFunctionSpec spec;
  std::string version;
  bool applied = false;  // current version is in the label matrix
};

struct UpsertResult {
  std::vector<lf::Diagnostic> diagnostics;  // nonempty: store unchanged
  std::string version;
  bool ok() const { return diagnostics.empty(); }
};

struct ModelState {
  std::string fit_key;
  std::vector<std::string> lf_ids;
  model::Vector<double> gamma;
  double pi = 0.5;
  model::LfParameters<double> params;
  std::vector<double> log_likelihood;
  int iterations = 0;
  bool converged = false;
};

// One project per directory:
//   config.json
//   tables/{meta.json,left.csv,right.csv}
//   candidates/candidates.csv
//   lfs/<name>.json
//   labels/{user.csv,fixture.csv,precision_sample.csv}
//   model/{matrix.json,model.json}
// Every file is replaced by atomic rename. Mutations are serialized; reads
// may run concurrently.
class Project {
 public:
  // Ingest, block, auto-generate LFs, apply them and fit once. `truth_path`
  // optionally names a left_id,right_id list of true matches used for
  // evaluation only (blocking recall); it never clamps the model.
  static std::unique_ptr<Project> create(const std::filesystem::path& dir,
                                         const std::string& left_path,
                                         const std::string& right_path,
                                         const std::string& id_column,
                                         const ProjectConfig& config,
                                         const std::optional<std::string>& truth_path = {});
  static std::unique_ptr<Project> open(const std::filesystem::path& dir);
  static bool exists(const std::filesystem::path& dir);

  Project(const Project&) = delete;
  Project& operator=(const Project&) = delete;

  Dashboard stats() const;
  std::vector<LfEntry> list_lfs() const;
  LfEntry get_lf(const std::string& name) const;
  UpsertResult upsert_lf(const lf::LabelFunctionSpec& spec);
  void delete_lf(const std::string& name);
  lf::EvaluationTrace dry_run(const lf::LabelFunctionSpec& spec, const PairKey& pair) const;

  ApplyReport apply_and_fit();

  std::vector<SampleRow> sample(SampleKind kind, std::size_t n);
  EMStats label_pair(const PairKey& pair, LabelValue value);
  std::vector<SampleRow> drilldown(const std::string& lf_name, DrilldownKind kind) const;
  void export_matches(std::ostream& out) const;

  const std::filesystem::path& dir() const { return dir_; }
  const ProjectConfig& config() const { return config_; }
  const TablePair& tables() const { return *tables_; }
  const CandidateSet& candidates() const { return candidates_; }
  const LabelMatrix& label_matrix() const { return matrix_; }
  const std::optional<ModelState>& model_state() const { return model_; }
  const GroundTruthStore& ground_truth() const { return truth_; }
  std::size_t evaluations_total() const { return evaluations_total_; }

 private:
  explicit Project(std::filesystem::path dir);

  void load();
  void save_config() const;
  void save_tables() const;
  void save_candidates() const;
  void save_lf(const lf::LabelFunctionSpec& spec) const;
  void save_labels() const;
  void save_matrix() const;
  void save_model() const;
  void save_precision_sample() const;
  void rebuild_derived();

  ApplyReport apply_and_fit_locked();
  Dashboard compute_dashboard() const;
  EMStats compute_em_stats() const;
  std::string fit_key() const;
  SampleRow make_row(std::size_t candidate) const;

  std::filesystem::path dir_;
  ProjectConfig config_;
  std::unique_ptr<TablePair> tables_;
  CandidateSet candidates_;
  std::unique_ptr<lf::CorpusIndex> corpus_;
  model::PairGraph graph_;
  std::map<std::string, lf::LabelFunctionSpec> lfs_;
  LabelMatrix matrix_;
  std::optional<ModelState> model_;
  GroundTruthStore truth_;
  std::vector<PairKey> precision_sample_;
  std::size_t evaluations_total_ = 0;

  mutable std::shared_mutex mutex_;
  mutable std::optional<Dashboard> dashboard_cache_;
};

// Payloads shared by the HTTP API and the CLI.
nlohmann::json to_json(const EMStats& s);
nlohmann::json to_json(const LfStatsRow& r);
nlohmann::json to_json(const Dashboard& d);
nlohmann::json to_json(const ApplyReport& r);
nlohmann::json to_json(const SampleRow& r, SampleKind kind);
nlohmann::json to_json(const LfEntry& e);
nlohmann::json to_json(const lf::EvaluationTrace& t);
nlohmann::json to_json(const std::vector<lf::Diagnostic>& d);

SampleKind parse_sample_kind(const std::string& s);
DrilldownKind parse_drilldown_kind(const std::string& s);
LabelValue parse_label_value(const std::string& s);

}  // namespace lfm::service
