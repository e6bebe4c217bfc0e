#include "rpga/session.hpp"

#include <algorithm>

#include "rpga/error.hpp"

namespace rpga {

std::string_view to_string(SessionMode mode) {
  switch (mode) {
    case SessionMode::Initial: return "initial";
    case SessionMode::Configured: return "configured";
    case SessionMode::User: return "user";
  }
  return "initial";
}

std::string_view to_string(NodeState state) {
  return state == NodeState::Active ? "active" : "inactive";
}

std::string_view to_string(TapState state) { return state == TapState::Bound ? "bound" : "unbound"; }

std::string_view to_string(OutputState state) {
  switch (state) {
    case OutputState::Undriven: return "undriven";
    case OutputState::On: return "on";
    case OutputState::Off: return "off";
  }
  return "undriven";
}

std::size_t RenderModel::active_outputs() const { return outputs.size(); }

Session::Session(std::shared_ptr<const Fabric> fabric) : fabric_(std::move(fabric)) {}

RenderModel Session::load_config(std::shared_ptr<const Configuration> config) {
  if (!config || !(config->fabric() == *fabric_))
    throw Error(ErrorCode::ConfigMismatch,
                "configuration built for a " +
                    (config ? std::to_string(config->fabric().n()) + "-input " +
                                  std::string(to_string(config->fabric().realization()))
                            : std::string("missing")) +
                    " fabric, session has " + std::to_string(fabric_->n()) + "-input " +
                    std::string(to_string(fabric_->realization())));
  config_ = std::move(config);
  mode_ = SessionMode::Configured;
  cursor_.reset();
  last_result_.reset();
  return snapshot();
}

void Session::require_config() const {
  if (!config_) throw Error(ErrorCode::NotConfigured, "session has no configuration loaded");
}

RenderModel Session::apply_input(std::span<const std::uint8_t> word) {
  require_config();
  if (word.size() != fabric_->n())
    throw Error(ErrorCode::WidthError, "fabric has " + std::to_string(fabric_->n()) +
                                           " inputs, got " + std::to_string(word.size()));
  last_result_ = fabric_eval(*config_, word);
  cursor_ = to_word(word);
  mode_ = SessionMode::User;
  return snapshot();
}

RenderModel Session::apply_input(Word word) {
  const std::size_t n = fabric_->n();
  if (word >> n) throw Error(ErrorCode::WidthError, "input word wider than the fabric");
  return apply_input(to_bits(word, n));
}

RenderModel Session::next() {
  require_config();
  const Word size = Word{1} << fabric_->n();
  return apply_input((cursor_.value_or(0) + 1) % size);
}

RenderModel Session::prev() {
  require_config();
  const Word size = Word{1} << fabric_->n();
  return apply_input((cursor_.value_or(0) + size - 1) % size);
}

RenderModel Session::reset() {
  config_.reset();
  mode_ = SessionMode::Initial;
  cursor_.reset();
  last_result_.reset();
  return snapshot();
}

RenderModel Session::snapshot() const {
  RenderModel model;
  model.mode = mode_;
  model.n = fabric_->n();
  model.cursor = cursor_;
  if (cursor_) model.input = to_bits(*cursor_, fabric_->n());

  std::vector<bool> active(fabric_->nodes().size(), false);
  std::vector<bool> bound(fabric_->n() + 1, false);
  if (config_) {
    active = config_->active_nodes();
    bound = config_->bound_taps();
  }
  for (const auto& node : fabric_->nodes())
    model.nodes.push_back({node.id, node.level, active[node.id] ? NodeState::Active : NodeState::Inactive});
  for (unsigned k = 0; k <= fabric_->n(); ++k)
    model.taps.push_back({k, bound[k] ? TapState::Bound : TapState::Unbound});

  if (config_) {
    const auto& bindings = config_->bindings();
    for (std::size_t i = 0; i < bindings.size(); ++i) {
      OutputState state = OutputState::Undriven;
      if (mode_ == SessionMode::User && last_result_)
        state = last_result_->outputs[i].second ? OutputState::On : OutputState::Off;
      model.outputs.push_back({bindings[i].name, bindings[i].index_set, state});
    }
  }
  return model;
}

}  // namespace rpga
