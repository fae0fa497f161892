#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdanet/types.hpp"

namespace cdanet {

struct Param {
  std::string name;
  Mat value;
  Mat grad;
  bool trainable = true;
};

// Owns every parameter of one model. Insertion order is the canonical
// order for checkpoints and for the optimizer walk.
class ParamStore {
 public:
  Param& create(const std::string& name, Index rows, Index cols);
  Param* find(const std::string& name);
  const Param* find(const std::string& name) const;

  void zero_grads();
  std::size_t size() const { return params_.size(); }

  std::vector<Param*> all();
  std::vector<const Param*> all() const;

  // Deep value snapshot / restore, used for best-epoch bookkeeping.
  std::vector<Mat> snapshot_values() const;
  void restore_values(const std::vector<Mat>& values);

 private:
  std::vector<std::unique_ptr<Param>> params_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace cdanet
