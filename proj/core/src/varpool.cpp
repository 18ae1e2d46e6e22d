#include "dbcell/varpool.hpp"

#include <mutex>

#include "dbcell/errors.hpp"

namespace dbcell {

VarPool& VarPool::instance() {
  static VarPool pool;
  return pool;
}

VarId VarPool::intern(const std::string& name) {
  {
    std::shared_lock lock(mutex_);
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
  }
  std::unique_lock lock(mutex_);
  auto it = index_.find(name);
  if (it != index_.end()) return it->second;
  VarId id = static_cast<VarId>(names_.size());
  names_.push_back(name);
  index_.emplace(name, id);
  return id;
}

const std::string& VarPool::name(VarId id) const {
  std::shared_lock lock(mutex_);
  if (id < 0 || id >= static_cast<VarId>(names_.size()))
    throw UndefinedVariable("variable id " + std::to_string(id));
  return names_[id];
}

bool VarPool::known(const std::string& name) const {
  std::shared_lock lock(mutex_);
  return index_.count(name) != 0;
}

}  // namespace dbcell
