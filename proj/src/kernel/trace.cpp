#include "linkhom/trace.hpp"

#include <algorithm>

namespace linkhom {

namespace {
thread_local std::vector<TraceScope*> active;
thread_local int op_depth = 0;
}

TraceScope::TraceScope() { active.push_back(this); }

TraceScope::~TraceScope() {
  auto it = std::find(active.begin(), active.end(), this);
  if (it != active.end()) active.erase(it);
}

void TraceScope::record(const char* op) {
  for (auto* s : active) s->ops_.insert(op);
}

TraceOp::TraceOp(const char* op) {
  if (op_depth == 0) TraceScope::record(op);
  ++op_depth;
}

TraceOp::~TraceOp() { --op_depth; }

bool disjoint(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::none_of(a.begin(), a.end(), [&b](const std::string& x) { return b.count(x) > 0; });
}

}  // namespace linkhom
