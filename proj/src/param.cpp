#include "cdanet/param.hpp"

#include "cdanet/errors.hpp"

namespace cdanet {

Param& ParamStore::create(const std::string& name, Index rows, Index cols) {
  if (name.empty()) throw StateError("ParamStore: empty parameter name");
  if (index_.count(name))
    throw StateError("ParamStore: duplicate parameter '" + name + "'");
  auto p = std::make_unique<Param>();
  p->name = name;
  p->value = Mat::Zero(rows, cols);
  p->grad = Mat::Zero(rows, cols);
  index_[name] = params_.size();
  params_.push_back(std::move(p));
  return *params_.back();
}

Param* ParamStore::find(const std::string& name) {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : params_[it->second].get();
}

const Param* ParamStore::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : params_[it->second].get();
}

void ParamStore::zero_grads() {
  for (auto& p : params_) p->grad.setZero();
}

std::vector<Param*> ParamStore::all() {
  std::vector<Param*> out;
  out.reserve(params_.size());
  for (auto& p : params_) out.push_back(p.get());
  return out;
}

std::vector<const Param*> ParamStore::all() const {
  std::vector<const Param*> out;
  out.reserve(params_.size());
  for (auto& p : params_) out.push_back(p.get());
  return out;
}

std::vector<Mat> ParamStore::snapshot_values() const {
  std::vector<Mat> out;
  out.reserve(params_.size());
  for (auto& p : params_) out.push_back(p->value);
  return out;
}

void ParamStore::restore_values(const std::vector<Mat>& values) {
  if (values.size() != params_.size())
    throw StateError("ParamStore: snapshot size mismatch");
  for (std::size_t i = 0; i < params_.size(); ++i) {
    if (values[i].rows() != params_[i]->value.rows() ||
        values[i].cols() != params_[i]->value.cols())
      throw StateError("ParamStore: snapshot shape mismatch for '" +
                       params_[i]->name + "'");
    params_[i]->value = values[i];
  }
}

}  // namespace cdanet
