#include "hzeta/monomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "hzeta/varreg.hpp"

namespace hzeta {

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.e_.reserve(e_.size() + o.e_.size());
    size_t i = 0, j = 0;
    while (i < e_.size() && j < o.e_.size()) {
        if (e_[i].first < o.e_[j].first) {
            r.e_.push_back(e_[i++]);
        } else if (e_[i].first > o.e_[j].first) {
            r.e_.push_back(o.e_[j++]);
        } else {
            int s = e_[i].second + o.e_[j].second;
            if (s != 0) r.e_.emplace_back(e_[i].first, s);
            ++i, ++j;
        }
    }
    while (i < e_.size()) r.e_.push_back(e_[i++]);
    while (j < o.e_.size()) r.e_.push_back(o.e_[j++]);
    return r;
}

Monomial Monomial::inverse() const {
    Monomial r = *this;
    for (auto& [v, e] : r.e_) e = -e;
    return r;
}

Monomial Monomial::invert_vars(const std::vector<int>& vars) const {
    Monomial r = *this;
    for (auto& [v, e] : r.e_)
        if (std::find(vars.begin(), vars.end(), v) != vars.end()) e = -e;
    return r;
}

Monomial Monomial::pow(int k) const {
    if (k == 0) return Monomial();
    Monomial r = *this;
    for (auto& [v, e] : r.e_) e *= k;
    return r;
}

Monomial Monomial::half() const {
    Monomial r = *this;
    for (auto& [v, e] : r.e_) {
        if (e % 2 != 0) throw std::logic_error("Monomial::half: odd exponent");
        e /= 2;
    }
    return r;
}

bool Monomial::uses_only(std::initializer_list<int> allowed) const {
    for (const auto& [v, e] : e_) {
        bool ok = false;
        for (int a : allowed)
            if (v == a) ok = true;
        if (!ok) return false;
    }
    return true;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    size_t i = 0, j = 0;
    while (i < a.e_.size() || j < b.e_.size()) {
        int va = i < a.e_.size() ? a.e_[i].first : INT32_MAX;
        int vb = j < b.e_.size() ? b.e_[j].first : INT32_MAX;
        int ea = 0, eb = 0;
        if (va <= vb) ea = a.e_[i].second;
        if (vb <= va) eb = b.e_[j].second;
        if (ea != eb) return ea > eb ? 1 : -1;
        if (va <= vb) ++i;
        if (vb <= va) ++j;
    }
    return 0;
}

Rat Monomial::evaluate(const std::map<int, Rat>& point) const {
    Rat r = 1;
    for (const auto& [v, e] : e_) {
        auto it = point.find(v);
        if (it == point.end()) throw std::invalid_argument("Monomial::evaluate: missing variable " + VarRegistry::instance().name(v));
        r *= rat_pow(it->second, e);
    }
    return r;
}

std::string Monomial::str() const {
    if (e_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : e_) {
        if (!s.empty()) s += "*";
        s += VarRegistry::instance().name(v);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

}  // namespace hzeta
