#include "hzeta/varreg.hpp"

#include <stdexcept>

namespace hzeta {

VarRegistry::VarRegistry() {
    names_ = {"p", "t", "Y"};
    for (int i = 0; i < (int)names_.size(); ++i) ids_[names_[i]] = i;
}

VarRegistry& VarRegistry::instance() {
    static VarRegistry reg;
    return reg;
}

int VarRegistry::id(const std::string& name) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    int nid = (int)names_.size();
    names_.push_back(name);
    ids_[name] = nid;
    return nid;
}

const std::string& VarRegistry::name(int id) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (id < 0 || id >= (int)names_.size()) throw std::out_of_range("VarRegistry::name: bad id");
    return names_[id];
}

int VarRegistry::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return (int)names_.size();
}

int var_X(int i) { return VarRegistry::instance().id("X" + std::to_string(i)); }

int var_Z(int i) { return VarRegistry::instance().id("Z" + std::to_string(i)); }

std::string subset_name(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (mask & (1u << i)) {
            if (!first) s += ",";
            s += std::to_string(i + 1);
            first = false;
        }
    }
    s += "}";
    return s;
}

int var_X_subset(std::uint32_t mask) {
    return VarRegistry::instance().id("X" + subset_name(mask));
}

}  // namespace hzeta
