#ifndef DBCELL_VARPOOL_HPP
#define DBCELL_VARPOOL_HPP

#include <deque>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace dbcell {

using VarId = int;

// Global interned variable table. Append-only: ids and name references are
// stable for the lifetime of the process (deque storage never reallocates
// existing entries).
class VarPool {
 public:
  static VarPool& instance();

  VarId intern(const std::string& name);
  const std::string& name(VarId id) const;
  bool known(const std::string& name) const;

 private:
  VarPool() = default;
  mutable std::shared_mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, VarId> index_;
};

inline VarId var(const std::string& name) { return VarPool::instance().intern(name); }
inline const std::string& var_name(VarId id) { return VarPool::instance().name(id); }

}  // namespace dbcell

#endif
