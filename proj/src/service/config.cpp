#include "lfm/service/config.hpp"

#include "lfm/core/error.hpp"

namespace lfm::service {

using nlohmann::json;

namespace {

template <typename T>
void read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(Errc::parse_error, std::string("config: bad value for '") + key + "': " + e.what());
  }
}

template <typename F>
auto parse_enum(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(Errc::parse_error, std::string("config: ") + e.what());
  }
}

}  // namespace

json to_json(const autolf::Grid& g) {
  json pre = json::array();
  for (const auto& set : g.preprocess_sets) {
    json s = json::array();
    for (auto step : set) s.push_back(text::name(step));
    pre.push_back(s);
  }
  json toks = json::array();
  for (const auto& t : g.tokenizers) toks.push_back(text::describe(t));
  json ws = json::array();
  for (auto w : g.weightings) ws.push_back(text::name(w));
  json ds = json::array();
  for (auto d : g.distances) ds.push_back(text::name(d));
  return {{"preprocess_sets", pre}, {"tokenizers", toks},  {"weightings", ws},
          {"distances", ds},        {"attribute_sets", g.attribute_sets},
          {"thresholds", g.thresholds}, {"novelty", g.novelty}};
}

autolf::Grid grid_from_json(const json& j, autolf::Grid g) {
  if (j.contains("preprocess_sets")) {
    g.preprocess_sets.clear();
    for (const auto& set : j.at("preprocess_sets")) {
      std::vector<text::PreprocessStep> steps;
      for (const auto& s : set) {
        steps.push_back(parse_enum([&] { return text::parse_preprocess_step(s.get<std::string>()); }));
      }
      g.preprocess_sets.push_back(std::move(steps));
    }
  }
  if (j.contains("tokenizers")) {
    g.tokenizers.clear();
    for (const auto& t : j.at("tokenizers")) {
      g.tokenizers.push_back(parse_enum([&] { return text::parse_tokenizer(t.get<std::string>()); }));
    }
  }
  if (j.contains("weightings")) {
    g.weightings.clear();
    for (const auto& w : j.at("weightings")) {
      g.weightings.push_back(parse_enum([&] { return text::parse_weighting(w.get<std::string>()); }));
    }
  }
  if (j.contains("distances")) {
    g.distances.clear();
    for (const auto& d : j.at("distances")) {
      g.distances.push_back(parse_enum([&] { return text::parse_distance(d.get<std::string>()); }));
    }
  }
  read(j, "attribute_sets", g.attribute_sets);
  read(j, "thresholds", g.thresholds);
  read(j, "novelty", g.novelty);
  return g;
}

json to_json(const ProjectConfig& c) {
  return {
      {"blocking",
       {{"k", c.blocking.k},
        {"b", c.blocking.bands},
        {"r", c.blocking.rows},
        {"mode", c.blocking.mode == blocking::SignatureSource::builtin_minhash
                     ? "builtin-minhash"
                     : "imported-embedding"},
        {"embedding_file", c.blocking.embedding_file},
        {"seed", c.blocking.seed}}},
      {"auto_lf",
       {{"grid", to_json(c.auto_lf.grid)},
        {"target_precision", c.auto_lf.target_precision},
        {"max_lfs", c.auto_lf.max_lfs},
        {"reference_side", c.auto_lf.reference == Side::left ? "left" : "right"}}},
      {"model",
       {{"max_iter", c.model.fit.max_iter},
        {"tol", c.model.fit.tol},
        {"project", c.model.fit.project},
        {"seed", c.model.seed}}},
  };
}

ProjectConfig config_from_json(const json& j) {
  ProjectConfig c;
  if (!j.is_object()) throw Error(Errc::parse_error, "config: expected an object");
  if (j.contains("blocking")) {
    const auto& b = j.at("blocking");
    read(b, "k", c.blocking.k);
    read(b, "b", c.blocking.bands);
    read(b, "r", c.blocking.rows);
    read(b, "embedding_file", c.blocking.embedding_file);
    read(b, "seed", c.blocking.seed);
    std::string mode = "builtin-minhash";
    read(b, "mode", mode);
    if (mode == "builtin-minhash") c.blocking.mode = blocking::SignatureSource::builtin_minhash;
    else if (mode == "imported-embedding") c.blocking.mode = blocking::SignatureSource::imported_embedding;
    else throw Error(Errc::parse_error, "config: unknown blocking mode '" + mode + "'");
  }
  if (j.contains("auto_lf")) {
    const auto& a = j.at("auto_lf");
    if (a.contains("grid")) c.auto_lf.grid = grid_from_json(a.at("grid"));
    read(a, "target_precision", c.auto_lf.target_precision);
    read(a, "max_lfs", c.auto_lf.max_lfs);
    std::string side = "left";
    read(a, "reference_side", side);
    if (side != "left" && side != "right") {
      throw Error(Errc::parse_error, "config: reference_side must be left or right");
    }
    c.auto_lf.reference = side == "left" ? Side::left : Side::right;
  }
  if (j.contains("model")) {
    const auto& m = j.at("model");
    read(m, "max_iter", c.model.fit.max_iter);
    read(m, "tol", c.model.fit.tol);
    read(m, "project", c.model.fit.project);
    read(m, "seed", c.model.seed);
  }
  return c;
}

}  // namespace lfm::service
