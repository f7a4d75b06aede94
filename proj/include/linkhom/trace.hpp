#pragma once

#include <limits>
#include <set>
#include <string>
#include <vector>

namespace linkhom {

/// Sentinel for +infinity (depth of the zero module, unbounded grades).
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Records the names of the top-level library operations invoked while it is alive:
/// operations called from inside another traced operation are not recorded.
/// Scopes nest; an operation is recorded in every active scope of the thread.
class TraceScope {
 public:
  TraceScope();
  ~TraceScope();
  TraceScope(const TraceScope&) = delete;
  TraceScope& operator=(const TraceScope&) = delete;

  const std::set<std::string>& ops() const { return ops_; }

  static void record(const char* op);

 private:
  std::set<std::string> ops_;
};

/// Marks the extent of one traced operation.
class TraceOp {
 public:
  explicit TraceOp(const char* op);
  ~TraceOp();
  TraceOp(const TraceOp&) = delete;
  TraceOp& operator=(const TraceOp&) = delete;
};

/// True if the two operation sets share no element.
bool disjoint(const std::set<std::string>& a, const std::set<std::string>& b);

}  // namespace linkhom

#define LH_TRACE(name) const ::linkhom::TraceOp lh_trace_op_(name)
