#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace hzeta {

// Global append-only registry of symbolic variables.
//
// Ids double as significance ranks when comparing monomials: `p` before `t`
// before every auxiliary variable, in registration order.  The registry is
// populated before any parallel evaluation starts and is read-only afterwards;
// the mutex only serializes the (rare) registrations themselves.
class VarRegistry {
public:
    static constexpr int P = 0;
    static constexpr int T = 1;
    static constexpr int Y = 2;

    static VarRegistry& instance();

    int id(const std::string& name);
    const std::string& name(int id) const;
    int size() const;

private:
    VarRegistry();
    mutable std::mutex mu_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> ids_;
};

inline int var_p() { return VarRegistry::P; }
inline int var_t() { return VarRegistry::T; }
inline int var_Y() { return VarRegistry::Y; }

// X1, X2, ... (1-based, as printed)
int var_X(int i);
// Z1, Z2, ...
int var_Z(int i);
// Subset-indexed family X{1,3}, X{2}, ...; mask bit i encodes element i+1.
int var_X_subset(std::uint32_t mask);

std::string subset_name(std::uint32_t mask);

}  // namespace hzeta
