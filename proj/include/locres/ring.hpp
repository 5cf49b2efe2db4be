#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "locres/order.hpp"

namespace locres {

// Every nonvanishing assumption made about the parameters during a parametric
// run lands here, as the canonical string of the polynomial assumed nonzero.
class GenericityLog {
  public:
    void record(std::string entry) const {
        std::lock_guard<std::mutex> g(mu_);
        entries_.insert(std::move(entry));
    }
    std::vector<std::string> snapshot() const {
        std::lock_guard<std::mutex> g(mu_);
        return std::vector<std::string>(entries_.begin(), entries_.end());
    }
    void clear() const {
        std::lock_guard<std::mutex> g(mu_);
        entries_.clear();
    }

  private:
    mutable std::mutex mu_;
    mutable std::set<std::string> entries_;
};

struct Ring;
using RingPtr = std::shared_ptr<const Ring>;

struct Ring {
    std::vector<std::string> vars;
    MonomialOrder order;
    // parameter ring (its vars are the parameter names); null for plain Q
    RingPtr params;
    mutable GenericityLog glog;  // used on parameter rings

    Ring(std::vector<std::string> v, MonomialOrder o, RingPtr p)
        : vars(std::move(v)), order(std::move(o)), params(std::move(p)) {}

    int nvars() const { return (int)vars.size(); }
    std::optional<int> var_index(std::string_view name) const {
        for (int i = 0; i < nvars(); ++i)
            if (vars[i] == name) return i;
        return std::nullopt;
    }
};

inline RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order, RingPtr params = nullptr) {
    if ((int)vars.size() != order.nvars()) throw InputError("variable/order arity mismatch");
    return std::make_shared<Ring>(std::move(vars), std::move(order), std::move(params));
}

inline RingPtr make_param_ring(std::vector<std::string> names) {
    auto ord = MonomialOrder::wdeglex(std::vector<long>(names.size(), 1));
    return std::make_shared<Ring>(std::move(names), std::move(ord), nullptr);
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->vars != b->vars || !(a->order == b->order)) return false;
    if (!a->params != !b->params) return false;
    return !a->params || same_ring(a->params, b->params);
}

}  // namespace locres
