#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rpga/fabric.hpp"

namespace rpga {

enum class SessionMode { Initial, Configured, User };
enum class NodeState { Inactive, Active };
enum class TapState { Unbound, Bound };
enum class OutputState { Undriven, On, Off };

std::string_view to_string(SessionMode mode);
std::string_view to_string(NodeState state);
std::string_view to_string(TapState state);
std::string_view to_string(OutputState state);

/// Presentation-free view of the fabric. The UI maps these states to
/// colours; nothing here depends on how they are drawn.
struct RenderModel {
  struct Node {
    std::size_t id = 0;
    std::size_t level = 0;
    NodeState state = NodeState::Inactive;
    bool operator==(const Node&) const = default;
  };
  struct Tap {
    unsigned index = 0;  // k of S_k, 0..n
    TapState state = TapState::Unbound;
    bool operator==(const Tap&) const = default;
  };
  struct Output {
    std::string name;
    std::set<unsigned> index_set;
    OutputState state = OutputState::Undriven;
    bool operator==(const Output&) const = default;
  };

  SessionMode mode = SessionMode::Initial;
  std::size_t n = 0;
  std::optional<Word> cursor;
  std::optional<Bits> input;
  std::vector<Node> nodes;
  std::vector<Tap> taps;
  std::vector<Output> outputs;

  std::size_t active_outputs() const;
  bool operator==(const RenderModel&) const = default;
};

/// Configuration mode / user mode state machine over one fabric.
///
/// Initial: fabric only, everything inactive. Configured: bindings loaded,
/// outputs undriven. User: a cursor over the 2^n inputs with the last
/// evaluation. next()/prev() wrap modulo 2^n; from Configured they start
/// from an implicit cursor of 0.
class Session {
 public:
  explicit Session(std::shared_ptr<const Fabric> fabric);

  SessionMode mode() const noexcept { return mode_; }
  const Fabric& fabric() const noexcept { return *fabric_; }
  const std::shared_ptr<const Configuration>& config() const noexcept { return config_; }
  std::optional<Word> cursor() const noexcept { return cursor_; }
  const std::optional<FabricResult>& last_result() const noexcept { return last_result_; }

  /// Throws Error(ConfigMismatch) when the configuration's fabric differs.
  RenderModel load_config(std::shared_ptr<const Configuration> config);
  /// Throws Error(NotConfigured) in Initial mode, Error(WidthError) for a
  /// word of the wrong length.
  RenderModel apply_input(std::span<const std::uint8_t> word);
  RenderModel apply_input(Word word);
  RenderModel next();
  RenderModel prev();
  RenderModel reset();

  RenderModel snapshot() const;

 private:
  void require_config() const;

  std::shared_ptr<const Fabric> fabric_;
  std::shared_ptr<const Configuration> config_;
  SessionMode mode_ = SessionMode::Initial;
  std::optional<Word> cursor_;
  std::optional<FabricResult> last_result_;
};

}  // namespace rpga
