#include "lfm/service/project.hpp"

#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>

#include "lfm/autolf/auto_lf.hpp"
#include "lfm/blocking/blocking.hpp"
#include "lfm/core/csv.hpp"
#include "lfm/core/error.hpp"
#include "lfm/lf/spec_io.hpp"
#include "lfm/service/store.hpp"
#include "lfm/util/hash.hpp"

namespace lfm::service {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string labels_text(const std::map<PairKey, bool>& labels) {
  std::ostringstream out;
  write_labels(out, labels);
  return out.str();
}

std::map<PairKey, bool> load_labels(const fs::path& path) {
  if (!fs::exists(path)) return {};
  std::istringstream in(read_text(path));
  return read_labels(in);
}

json vector_json(const model::Vector<double>& v) {
  return json(std::vector<double>(v.data(), v.data() + v.size()));
}

model::Vector<double> vector_from_json(const json& j) {
  const auto values = j.get<std::vector<double>>();
  return Eigen::Map<const model::Vector<double>>(values.data(),
                                                 static_cast<Eigen::Index>(values.size()));
}

json params_json(const Eigen::Matrix<double, Eigen::Dynamic, 2>& m) {
  json rows = json::array();
  for (Eigen::Index j = 0; j < m.rows(); ++j) rows.push_back({m(j, 0), m(j, 1)});
  return rows;
}

Eigen::Matrix<double, Eigen::Dynamic, 2> params_from_json(const json& j) {
  Eigen::Matrix<double, Eigen::Dynamic, 2> m(static_cast<Eigen::Index>(j.size()), 2);
  for (std::size_t r = 0; r < j.size(); ++r) {
    m(static_cast<Eigen::Index>(r), 0) = j[r].at(0).get<double>();
    m(static_cast<Eigen::Index>(r), 1) = j[r].at(1).get<double>();
  }
  return m;
}

void check_format(const json& j, const std::string& what) {
  if (!j.contains("format_version") || j.at("format_version").get<int>() != kFormatVersion) {
    throw Error(Errc::parse_error, what + ": unsupported format version");
  }
}

}  // namespace

Project::Project(fs::path dir) : dir_(std::move(dir)) {}

bool Project::exists(const fs::path& dir) { return fs::exists(dir / "config.json"); }

std::unique_ptr<Project> Project::create(const fs::path& dir, const std::string& left_path,
                                         const std::string& right_path,
                                         const std::string& id_column, const ProjectConfig& config,
                                         const std::optional<std::string>& truth_path) {
  if (exists(dir)) throw Error(Errc::invalid_argument, "a project already exists in " + dir.string());
  std::unique_ptr<Project> p(new Project(dir));
  p->config_ = config;
  p->tables_ = std::make_unique<TablePair>(ingest_table_pair(left_path, right_path, id_column));
  if (truth_path) {
    std::ifstream in(*truth_path, std::ios::binary);
    if (!in) throw Error(Errc::file_not_found, "file not found: " + *truth_path);
    for (const auto& [key, match] : read_match_list(in)) {
      p->truth_.set({key, match, LabelSource::fixture});
    }
  }

  const auto& b = config.blocking;
  blocking::SignatureSet signatures;
  if (b.mode == blocking::SignatureSource::builtin_minhash) {
    signatures = blocking::build_minhash_signatures(*p->tables_, b.k, b.seed);
  } else {
    std::ifstream in(b.embedding_file, std::ios::binary);
    if (!in) throw Error(Errc::file_not_found, "file not found: " + b.embedding_file);
    signatures = blocking::build_embedding_signatures(*p->tables_, blocking::read_embeddings(in),
                                                      b.k, b.seed);
  }
  p->candidates_ = blocking::block(signatures, b.bands, b.rows);
  p->rebuild_derived();

  fs::create_directories(dir);
  p->save_tables();
  p->save_candidates();
  p->save_labels();

  const auto generated = autolf::generate(config.auto_lf.grid, config.auto_lf.target_precision,
                                          config.auto_lf.max_lfs, p->candidates_, *p->corpus_,
                                          config.auto_lf.reference);
  for (const auto& spec : generated.specs) {
    p->lfs_[spec.name] = spec;
    p->save_lf(spec);
  }
  if (!p->lfs_.empty()) {
    try {
      p->apply_and_fit_locked();
    } catch (const Error& e) {
      if (e.code() != Errc::no_usable_lfs) throw;
    }
  }
  // Written last: its presence marks a complete project.
  p->save_config();
  return p;
}

std::unique_ptr<Project> Project::open(const fs::path& dir) {
  if (!exists(dir)) throw Error(Errc::file_not_found, "no project in " + dir.string());
  std::unique_ptr<Project> p(new Project(dir));
  p->load();
  return p;
}

void Project::rebuild_derived() {
  corpus_ = std::make_unique<lf::CorpusIndex>(*tables_);
  graph_ = model::PairGraph::from_candidates(candidates_);
}

void Project::load() {
  config_ = config_from_json(json::parse(read_text(dir_ / "config.json")));

  const json meta = json::parse(read_text(dir_ / "tables" / "meta.json"));
  check_format(meta, "tables/meta.json");
  {
    std::istringstream l(read_text(dir_ / "tables" / "left.csv"));
    std::istringstream r(read_text(dir_ / "tables" / "right.csv"));
    tables_ = std::make_unique<TablePair>(
        ingest_table_pair(l, r, meta.at("id_column").get<std::string>()));
  }
  {
    std::istringstream in(read_text(dir_ / "candidates" / "candidates.csv"));
    candidates_ = read_candidates(in);
    candidates_.check_integrity(*tables_);
  }
  rebuild_derived();

  if (fs::exists(dir_ / "lfs")) {
    for (const auto& entry : fs::directory_iterator(dir_ / "lfs")) {
      if (entry.path().extension() != ".json") continue;
      auto spec = lf::parse_spec_text(read_text(entry.path()));
      lfs_[spec.name] = std::move(spec);
    }
  }

  for (const auto& [k, v] : load_labels(dir_ / "labels" / "user.csv")) {
    truth_.set({k, v, LabelSource::user_click});
  }
  for (const auto& [k, v] : load_labels(dir_ / "labels" / "fixture.csv")) {
    truth_.set({k, v, LabelSource::fixture});
  }
  if (fs::exists(dir_ / "labels" / "precision_sample.csv")) {
    for (const auto& rec : [&] {
           std::istringstream in(read_text(dir_ / "labels" / "precision_sample.csv"));
           return csv::read(in);
         }()) {
      if (rec.line == 1) continue;
      if (rec.fields.size() == 2) precision_sample_.emplace_back(rec.fields[0], rec.fields[1]);
    }
  }

  if (fs::exists(dir_ / "model" / "matrix.json")) {
    const json j = json::parse(read_text(dir_ / "model" / "matrix.json"));
    check_format(j, "model/matrix.json");
    matrix_.lf_ids = j.at("lf_ids").get<std::vector<std::string>>();
    matrix_.lf_versions = j.at("lf_versions").get<std::vector<std::string>>();
    const auto n = j.at("n_pairs").get<Eigen::Index>();
    matrix_.votes.resize(n, static_cast<Eigen::Index>(matrix_.lf_ids.size()));
    const auto& cols = j.at("columns");
    for (std::size_t c = 0; c < matrix_.lf_ids.size(); ++c) {
      decode_column(cols.at(c).get<std::string>(), matrix_, c);
    }
  }
  if (fs::exists(dir_ / "model" / "model.json")) {
    const json j = json::parse(read_text(dir_ / "model" / "model.json"));
    check_format(j, "model/model.json");
    ModelState m;
    m.fit_key = j.at("fit_key").get<std::string>();
    m.lf_ids = j.at("lf_ids").get<std::vector<std::string>>();
    m.gamma = vector_from_json(j.at("gamma"));
    m.pi = j.at("pi").get<double>();
    m.params.p_match_vote = params_from_json(j.at("p_match_vote"));
    m.params.p_unmatch_vote = params_from_json(j.at("p_unmatch_vote"));
    m.log_likelihood = j.at("log_likelihood").get<std::vector<double>>();
    m.iterations = j.at("iterations").get<int>();
    m.converged = j.at("converged").get<bool>();
    if (static_cast<std::size_t>(m.gamma.size()) != candidates_.size()) {
      throw Error(Errc::parse_error, "model/model.json: posterior does not match candidates");
    }
    model_ = std::move(m);
  }
}

void Project::save_config() const {
  atomic_write(dir_ / "config.json", to_json(config_).dump(2) + "\n");
}

void Project::save_tables() const {
  json meta = {{"format_version", kFormatVersion},
               {"id_column", tables_->id_column},
               {"schema", tables_->schema}};
  atomic_write(dir_ / "tables" / "meta.json", meta.dump(2) + "\n");
  for (Side side : {Side::left, Side::right}) {
    std::ostringstream out;
    write_table(out, *tables_, side);
    atomic_write(dir_ / "tables" / (side == Side::left ? "left.csv" : "right.csv"), out.str());
  }
}

void Project::save_candidates() const {
  std::ostringstream out;
  write_candidates(out, candidates_);
  atomic_write(dir_ / "candidates" / "candidates.csv", out.str());
}

void Project::save_lf(const lf::LabelFunctionSpec& spec) const {
  atomic_write(dir_ / "lfs" / (spec.name + ".json"), lf::to_json(spec).dump(2) + "\n");
}

void Project::save_labels() const {
  atomic_write(dir_ / "labels" / "user.csv", labels_text(truth_.user_labels()));
  atomic_write(dir_ / "labels" / "fixture.csv", labels_text(truth_.fixture_labels()));
}

void Project::save_precision_sample() const {
  std::ostringstream out;
  csv::write_row(out, {"left_id", "right_id"});
  for (const auto& [l, r] : precision_sample_) csv::write_row(out, {l, r});
  atomic_write(dir_ / "labels" / "precision_sample.csv", out.str());
}

void Project::save_matrix() const {
  json cols = json::array();
  for (std::size_t c = 0; c < matrix_.n_lfs(); ++c) cols.push_back(encode_column(matrix_, c));
  json j = {{"format_version", kFormatVersion},
            {"n_pairs", matrix_.n_pairs()},
            {"lf_ids", matrix_.lf_ids},
            {"lf_versions", matrix_.lf_versions},
            {"columns", cols}};
  atomic_write(dir_ / "model" / "matrix.json", j.dump() + "\n");
}

void Project::save_model() const {
  if (!model_) return;
  json j = {{"format_version", kFormatVersion},
            {"fit_key", model_->fit_key},
            {"lf_ids", model_->lf_ids},
            {"pi", model_->pi},
            {"gamma", vector_json(model_->gamma)},
            {"p_match_vote", params_json(model_->params.p_match_vote)},
            {"p_unmatch_vote", params_json(model_->params.p_unmatch_vote)},
            {"log_likelihood", model_->log_likelihood},
            {"iterations", model_->iterations},
            {"converged", model_->converged}};
  atomic_write(dir_ / "model" / "model.json", j.dump() + "\n");
}

std::string Project::fit_key() const {
  std::string material;
  for (std::size_t c = 0; c < matrix_.n_lfs(); ++c) {
    material += matrix_.lf_ids[c] + "=" + matrix_.lf_versions[c] + ";";
  }
  material += "|" + labels_text(truth_.user_labels());
  material += "|" + to_json(config_).at("model").dump();
  return to_hex(fnv1a64(material));
}

ApplyReport Project::apply_and_fit() {
  std::unique_lock lock(mutex_);
  return apply_and_fit_locked();
}

ApplyReport Project::apply_and_fit_locked() {
  if (lfs_.empty()) throw Error(Errc::no_usable_lfs, "no LFs to apply");
  std::vector<lf::LabelFunctionSpec> specs;
  for (const auto& [name, spec] : lfs_) specs.push_back(spec);

  auto applied = lf::apply_all(specs, candidates_, *corpus_, &matrix_);
  evaluations_total_ += applied.evaluations;
  if ((applied.matrix.votes.array() != 0).count() == 0) {
    // The columns are still valid cache entries; only the model is withheld.
    if (!(applied.matrix == matrix_)) {
      matrix_ = std::move(applied.matrix);
      save_matrix();
      dashboard_cache_.reset();
    }
    throw Error(Errc::no_usable_lfs, "no usable LFs: every LF abstains on every pair");
  }

  ApplyReport report;
  report.evaluations = applied.evaluations;
  report.columns_recomputed = applied.columns_recomputed;
  const bool matrix_changed = !(applied.matrix == matrix_);
  matrix_ = std::move(applied.matrix);
  const std::string key = fit_key();
  if (!model_ || model_->fit_key != key) {
    model::ClampVector clamp = model::ClampVector::Zero(static_cast<Eigen::Index>(candidates_.size()));
    for (const auto& [pair, match] : truth_.user_labels()) {
      if (auto i = candidates_.find(pair)) clamp(static_cast<Eigen::Index>(*i)) = match ? 1 : -1;
    }
    auto result = model::fit<double>(matrix_.votes, &graph_, &clamp, config_.model.fit);
    ModelState m;
    m.fit_key = key;
    m.lf_ids = matrix_.lf_ids;
    m.gamma = std::move(result.posterior.gamma);
    m.pi = result.posterior.pi;
    m.params = std::move(result.params);
    m.log_likelihood = std::move(result.posterior.log_likelihood);
    m.iterations = result.posterior.iterations;
    m.converged = result.posterior.converged;
    model_ = std::move(m);
    report.refit = true;
  }
  if (matrix_changed) save_matrix();
  if (report.refit) save_model();
  dashboard_cache_.reset();
  report.dashboard = compute_dashboard();
  dashboard_cache_ = report.dashboard;
  return report;
}

EMStats Project::compute_em_stats() const {
  EMStats s;
  s.left_size = tables_->left.size();
  s.right_size = tables_->right.size();
  s.candidate_count = candidates_.size();
  if (model_) {
    s.matches_found = static_cast<std::size_t>((model_->gamma.array() >= 0.5).count());
    s.model_status = "fit";
  } else if (lfs_.empty() || (matrix_.n_lfs() > 0 && (matrix_.votes.array() != 0).count() == 0)) {
    s.model_status = "no usable LFs";
  } else {
    s.model_status = "not fit";
  }
  std::vector<std::optional<bool>> labels;
  for (const auto& key : precision_sample_) {
    auto l = truth_.user_label(key);
    labels.push_back(l ? std::optional<bool>(l->match) : std::nullopt);
  }
  if (auto est = model::estimate_em_precision(labels)) {
    s.estimated_precision = est->precision;
    s.precision_labels = est->n_labels;
  }
  if (truth_.has_fixture()) s.blocking_recall = blocking::blocking_recall(candidates_, truth_.fixture_labels());
  return s;
}

Dashboard Project::compute_dashboard() const {
  Dashboard d;
  d.em = compute_em_stats();
  if (matrix_.n_lfs() == 0 || matrix_.n_pairs() == 0) return d;
  const auto raw = lf_raw_stats(matrix_);
  std::vector<model::LfQuality> quality;
  const bool model_current = model_ && model_->lf_ids == matrix_.lf_ids;
  if (model_current) quality = model::lf_quality<double>(matrix_.votes, model_->gamma);
  for (std::size_t j = 0; j < raw.size(); ++j) {
    LfStatsRow row;
    row.name = raw[j].lf_id;
    if (auto it = lfs_.find(row.name); it != lfs_.end()) row.origin = it->second.origin;
    row.n_match = raw[j].n_match;
    row.n_unmatch = raw[j].n_unmatch;
    row.n_abstain = raw[j].n_abstain;
    row.coverage = raw[j].coverage;
    if (model_current) {
      row.est_fpr = quality[j].est_fpr;
      row.est_fnr = quality[j].est_fnr;
      row.alpha_match = model_->params.alpha_match(static_cast<Eigen::Index>(j));
      row.alpha_unmatch = model_->params.alpha_unmatch(static_cast<Eigen::Index>(j));
    }
    d.lfs.push_back(std::move(row));
  }
  return d;
}

Dashboard Project::stats() const {
  {
    std::shared_lock lock(mutex_);
    if (dashboard_cache_) return *dashboard_cache_;
  }
  std::unique_lock lock(mutex_);
  if (!dashboard_cache_) dashboard_cache_ = compute_dashboard();
  return *dashboard_cache_;
}

std::vector<LfEntry> Project::list_lfs() const {
  std::shared_lock lock(mutex_);
  std::vector<LfEntry> out;
  for (const auto& [name, spec] : lfs_) {
    LfEntry e{spec, lf::lf_version(spec), false};
    if (auto c = matrix_.column_of(name)) e.applied = matrix_.lf_versions[*c] == e.version;
    out.push_back(std::move(e));
  }
  return out;
}

LfEntry Project::get_lf(const std::string& name) const {
  for (auto& e : list_lfs()) {
    if (e.spec.name == name) return e;
  }
  throw Error(Errc::unknown_lf, "unknown LF '" + name + "'");
}

UpsertResult Project::upsert_lf(const lf::LabelFunctionSpec& spec) {
  std::unique_lock lock(mutex_);
  UpsertResult r;
  r.diagnostics = lf::validate(spec, &tables_->schema);
  if (!r.ok()) return r;
  r.version = lf::lf_version(spec);
  save_lf(spec);
  lfs_[spec.name] = spec;
  dashboard_cache_.reset();
  return r;
}

void Project::delete_lf(const std::string& name) {
  std::unique_lock lock(mutex_);
  if (!lfs_.contains(name)) throw Error(Errc::unknown_lf, "unknown LF '" + name + "'");
  fs::remove(dir_ / "lfs" / (name + ".json"));
  lfs_.erase(name);
  dashboard_cache_.reset();
}

lf::EvaluationTrace Project::dry_run(const lf::LabelFunctionSpec& spec, const PairKey& pair) const {
  std::shared_lock lock(mutex_);
  auto diags = lf::validate(spec, &tables_->schema);
  if (!diags.empty()) {
    throw Error(Errc::validation_failed, diags.front().field + ": " + diags.front().message);
  }
  const CandidatePair probe{pair.first, pair.second, "", 0.0};
  if (!tables_->left.find(pair.first) || !tables_->right.find(pair.second)) {
    throw Error(Errc::unknown_pair, "unknown tuple pair (" + pair.first + ", " + pair.second + ")");
  }
  return lf::evaluate_traced(spec, probe, *corpus_);
}

SampleRow Project::make_row(std::size_t i) const {
  SampleRow row;
  row.view = pair_view(candidates_[i], *tables_);
  row.likelihood = candidates_[i].similarity_hint;
  row.gamma = model_ ? model_->gamma(static_cast<Eigen::Index>(i)) : 0.0;
  if (auto l = truth_.effective(candidates_[i].key())) row.label = l->match;
  return row;
}

std::vector<SampleRow> Project::sample(SampleKind kind, std::size_t n) {
  std::unique_lock lock(mutex_);
  if (!model_) throw Error(Errc::model_not_fit, "the labeling model has not been fit yet");
  if (n == 0) throw Error(Errc::invalid_argument, "sample size must be at least 1");
  std::vector<SampleRow> rows;
  if (kind == SampleKind::smart) {
    const std::span<const double> gamma(model_->gamma.data(), static_cast<std::size_t>(model_->gamma.size()));
    for (const auto& e : blocking::smart_sample(candidates_, gamma, n)) {
      rows.push_back(make_row(e.candidate));
      rows.back().likelihood = e.likelihood;
    }
    return rows;
  }
  const auto picked = model::sample_predicted_matches<double>(model_->gamma, n, config_.model.seed);
  precision_sample_.clear();
  for (auto i : picked) {
    precision_sample_.push_back(candidates_[static_cast<std::size_t>(i)].key());
    rows.push_back(make_row(static_cast<std::size_t>(i)));
  }
  save_precision_sample();
  dashboard_cache_.reset();
  return rows;
}

EMStats Project::label_pair(const PairKey& pair, LabelValue value) {
  std::unique_lock lock(mutex_);
  if (!candidates_.contains(pair)) {
    throw Error(Errc::unknown_pair, "(" + pair.first + ", " + pair.second + ") is not a candidate pair");
  }
  if (value == LabelValue::clear) {
    truth_.clear(pair, LabelSource::user_click);
  } else {
    truth_.set({pair, value == LabelValue::match, LabelSource::user_click});
  }
  save_labels();
  dashboard_cache_.reset();
  return compute_em_stats();
}

std::vector<SampleRow> Project::drilldown(const std::string& lf_name, DrilldownKind kind) const {
  std::shared_lock lock(mutex_);
  auto col = matrix_.column_of(lf_name);
  if (!col) throw Error(Errc::unknown_lf, "LF '" + lf_name + "' is unknown or not applied yet");
  if (!model_ || model_->lf_ids != matrix_.lf_ids) {
    throw Error(Errc::model_not_fit, "the labeling model does not cover the current LFs; apply first");
  }
  const auto j = static_cast<Eigen::Index>(*col);
  const auto idx = kind == DrilldownKind::fp ? model::fp_drilldown<double>(matrix_.votes, j, model_->gamma)
                                             : model::fn_drilldown<double>(matrix_.votes, j, model_->gamma);
  std::vector<SampleRow> rows;
  for (auto i : idx) rows.push_back(make_row(static_cast<std::size_t>(i)));
  return rows;
}

void Project::export_matches(std::ostream& out) const {
  std::shared_lock lock(mutex_);
  if (!model_) throw Error(Errc::model_not_fit, "the labeling model has not been fit yet");
  csv::write_row(out, {"left_id", "right_id", "gamma"});
  for (std::size_t i = 0; i < candidates_.size(); ++i) {
    const double g = model_->gamma(static_cast<Eigen::Index>(i));
    if (g < 0.5) continue;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", g);
    csv::write_row(out, {candidates_[i].left_id, candidates_[i].right_id, buf});
  }
}

namespace {

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

json weights_json(const text::WeightedTokenSet& w) {
  json out = json::object();
  for (const auto& [token, weight] : w.entries()) out[token] = weight;
  return out;
}

}  // namespace

json to_json(const EMStats& s) {
  return {{"left_size", s.left_size},
          {"right_size", s.right_size},
          {"candidate_count", s.candidate_count},
          {"matches_found", s.matches_found},
          {"estimated_precision", optional_json(s.estimated_precision)},
          {"precision_labels", s.precision_labels},
          {"blocking_recall", optional_json(s.blocking_recall)},
          {"model_status", s.model_status}};
}

json to_json(const LfStatsRow& r) {
  return {{"name", r.name},
          {"origin", lf::name(r.origin)},
          {"n_match", r.n_match},
          {"n_unmatch", r.n_unmatch},
          {"n_abstain", r.n_abstain},
          {"coverage", r.coverage},
          {"est_fpr", optional_json(r.est_fpr)},
          {"est_fnr", optional_json(r.est_fnr)},
          {"alpha_match", optional_json(r.alpha_match)},
          {"alpha_unmatch", optional_json(r.alpha_unmatch)}};
}

json to_json(const Dashboard& d) {
  json lfs = json::array();
  for (const auto& r : d.lfs) lfs.push_back(to_json(r));
  return {{"em", to_json(d.em)}, {"lfs", lfs}};
}

json to_json(const ApplyReport& r) {
  return {{"dashboard", to_json(r.dashboard)},
          {"evaluations", r.evaluations},
          {"columns_recomputed", r.columns_recomputed},
          {"refit", r.refit}};
}

json to_json(const SampleRow& r, SampleKind kind) {
  json left = json::object();
  json right = json::object();
  for (std::size_t a = 0; a < r.view.schema.size(); ++a) {
    left[r.view.schema[a]] = r.view.left_values[a];
    right[r.view.schema[a]] = r.view.right_values[a];
  }
  json j = {{"left_id", r.view.left_id},
            {"right_id", r.view.right_id},
            {"left", left},
            {"right", right},
            {"gamma", r.gamma},
            {"label", r.label ? json(*r.label ? "match" : "non-match") : json(nullptr)}};
  if (kind == SampleKind::smart) j["likelihood"] = r.likelihood;
  return j;
}

json to_json(const LfEntry& e) {
  return {{"spec", lf::to_json(e.spec)}, {"version", e.version}, {"applied", e.applied}};
}

json to_json(const lf::EvaluationTrace& t) {
  json j = {{"vote", to_int(t.vote)},
            {"left_text", t.left_text},
            {"right_text", t.right_text},
            {"reason", t.reason}};
  if (t.pipeline) {
    const auto& p = *t.pipeline;
    j["pipeline"] = {{"left_preprocessed", p.left_preprocessed},
                     {"right_preprocessed", p.right_preprocessed},
                     {"left_tokens", p.left_tokens},
                     {"right_tokens", p.right_tokens},
                     {"left_weights", weights_json(p.left_weights)},
                     {"right_weights", weights_json(p.right_weights)},
                     {"distance", p.distance},
                     {"similarity", p.similarity}};
  }
  if (t.left_capture) j["left_capture"] = *t.left_capture;
  if (t.right_capture) j["right_capture"] = *t.right_capture;
  return j;
}

json to_json(const std::vector<lf::Diagnostic>& d) {
  json out = json::array();
  for (const auto& x : d) out.push_back({{"field", x.field}, {"message", x.message}});
  return out;
}

SampleKind parse_sample_kind(const std::string& s) {
  if (s == "smart") return SampleKind::smart;
  if (s == "precision") return SampleKind::precision;
  throw Error(Errc::invalid_argument, "sample kind must be 'smart' or 'precision', got '" + s + "'");
}

DrilldownKind parse_drilldown_kind(const std::string& s) {
  if (s == "fp") return DrilldownKind::fp;
  if (s == "fn") return DrilldownKind::fn;
  throw Error(Errc::invalid_argument, "drilldown kind must be 'fp' or 'fn', got '" + s + "'");
}

LabelValue parse_label_value(const std::string& s) {
  if (s == "match") return LabelValue::match;
  if (s == "non-match" || s == "non_match") return LabelValue::non_match;
  if (s == "clear" || s == "none") return LabelValue::clear;
  throw Error(Errc::invalid_argument, "label must be 'match', 'non-match' or 'clear', got '" + s + "'");
}

}  // namespace lfm::service
