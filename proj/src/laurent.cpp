#include "hzeta/laurent.hpp"

#include <climits>
#include <sstream>
#include <stdexcept>

namespace hzeta {

Poly Poly::constant(const Rat& c) {
    Poly p;
    if (c != 0) p.t_.emplace(Monomial::one(), c);
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rat& c) {
    Poly p;
    if (c != 0) p.t_.emplace(m, c);
    return p;
}

Poly Poly::var(int id, int exp, const Rat& c) { return monomial(Monomial::var(id, exp), c); }

bool Poly::is_one() const {
    return t_.size() == 1 && t_.begin()->first.is_one() && t_.begin()->second == 1;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    const Poly& small = t_.size() <= o.t_.size() ? *this : o;
    const Poly& big = t_.size() <= o.t_.size() ? o : *this;
    Poly r;
    for (const auto& [ms, cs] : small.t_)
        for (const auto& [mb, cb] : big.t_) r.add_term(ms * mb, cs * cb);
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly Poly::scaled(const Monomial& m, const Rat& c) const {
    Poly r;
    if (c == 0) return r;
    for (const auto& [mm, cc] : t_) r.t_.emplace(mm * m, cc * c);
    return r;
}

Poly Poly::scaled(const Rat& c) const { return scaled(Monomial::one(), c); }

std::optional<Poly> Poly::divide_binomial(const Monomial& m, int sign) const {
    if (m.is_one()) throw std::invalid_argument("divide_binomial: trivial base");
    if (is_zero()) return Poly();

    // Grade monomials by the dot product with m's exponent vector, so that
    // multiplying by m strictly increases the grade.
    auto weight = [&m](const Monomial& x) -> long long {
        long long w = 0;
        for (const auto& [v, e] : m.exps()) w += (long long)e * x.exponent(v);
        return w;
    };
    const long long wm = weight(m);
    if (wm <= 0) throw std::invalid_argument("divide_binomial: base not positively graded");

    std::map<std::pair<long long, Monomial>, Rat> rem;
    long long maxw = LLONG_MIN;
    for (const auto& [mon, c] : t_) {
        long long w = weight(mon);
        maxw = std::max(maxw, w);
        rem.emplace(std::make_pair(w, mon), c);
    }

    Poly q;
    while (!rem.empty()) {
        auto it = rem.begin();
        const long long w = it->first.first;
        if (w > maxw) return std::nullopt;  // can never cancel
        Monomial x = it->first.second;
        Rat c = it->second;
        rem.erase(it);
        q.t_.emplace(x, c);
        Monomial xm = x * m;
        Rat add = sign > 0 ? c : -c;
        auto key = std::make_pair(w + wm, xm);
        auto [jt, inserted] = rem.try_emplace(key, add);
        if (!inserted) {
            jt->second += add;
            if (jt->second == 0) rem.erase(jt);
        }
    }
    return q;
}

Poly Poly::invert_vars(const std::vector<int>& vars) const {
    Poly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m.invert_vars(vars), c);
    return r;
}

Poly Poly::subst_monomial(int var, const Monomial& m) const {
    Poly r;
    for (const auto& [mon, c] : t_) {
        int e = mon.exponent(var);
        if (e == 0) {
            r.add_term(mon, c);
        } else {
            Monomial rest = mon * Monomial::var(var, -e);
            r.add_term(rest * m.pow(e), c);
        }
    }
    return r;
}

Poly Poly::subst_value(int var, const Rat& c) const {
    Poly r;
    for (const auto& [mon, co] : t_) {
        int e = mon.exponent(var);
        if (e == 0) {
            r.add_term(mon, co);
        } else {
            Monomial rest = mon * Monomial::var(var, -e);
            r.add_term(rest, co * rat_pow(c, e));
        }
    }
    return r;
}

bool Poly::has_var(int var) const {
    for (const auto& [m, c] : t_)
        if (m.exponent(var) != 0) return true;
    return false;
}

std::set<int> Poly::vars() const {
    std::set<int> s;
    for (const auto& [m, c] : t_)
        for (const auto& [v, e] : m.exps()) s.insert(v);
    return s;
}

int Poly::min_exp(int var) const {
    int r = 0;
    bool first = true;
    for (const auto& [m, c] : t_) {
        int e = m.exponent(var);
        if (first || e < r) r = e;
        first = false;
    }
    return r;
}

int Poly::max_exp(int var) const {
    int r = 0;
    bool first = true;
    for (const auto& [m, c] : t_) {
        int e = m.exponent(var);
        if (first || e > r) r = e;
        first = false;
    }
    return r;
}

bool Poly::is_polynomial() const {
    for (const auto& [m, c] : t_)
        for (const auto& [v, e] : m.exps())
            if (e < 0) return false;
    return true;
}

bool Poly::coefficients_integral() const {
    for (const auto& [m, c] : t_)
        if (boost::multiprecision::denominator(c) != 1) return false;
    return true;
}

bool Poly::coefficients_nonnegative() const {
    for (const auto& [m, c] : t_)
        if (c < 0) return false;
    return true;
}

Rat Poly::evaluate(const std::map<int, Rat>& point) const {
    Rat r = 0;
    for (const auto& [m, c] : t_) r += c * m.evaluate(point);
    return r;
}

const std::pair<const Monomial, Rat>& Poly::leading() const {
    if (t_.empty()) throw std::logic_error("Poly::leading: zero polynomial");
    return *t_.rbegin();
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print leading terms first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const Rat& c = it->second;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rat a = c < 0 ? Rat(-c) : c;
        if (a != 1 || it->first.is_one()) {
            os << a.str();
            if (!it->first.is_one()) os << "*";
        }
        if (!it->first.is_one()) os << it->first.str();
        first = false;
    }
    return os.str();
}

}  // namespace hzeta
