#include "hzeta/ratfunc.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "hzeta/varreg.hpp"

#include <nlohmann/json.hpp>

namespace hzeta {

RatFunc RatFunc::gp(const Monomial& m) {
    RatFunc r(Poly::monomial(m));
    r.den[m] = 1;
    r.canonicalize();
    return r;
}

RatFunc RatFunc::gpzero(const Monomial& m) {
    RatFunc r(Poly::one());
    r.den[m] = 1;
    r.canonicalize();
    return r;
}

void RatFunc::canonicalize() {
    // Absorb units so every factor base is positive-leading:
    // 1/(1-u)^k = (-1)^k u^{-k} / (1-u^{-1})^k.
    std::map<Monomial, int> flipped;
    for (const auto& [m, k] : den) {
        if (k == 0) continue;
        if (k < 0) throw std::logic_error("RatFunc: negative factor multiplicity");
        if (m.is_one()) throw std::logic_error("RatFunc: trivial denominator base");
        if (m.leading_sign() < 0) {
            Monomial mi = m.inverse();
            num = num.scaled(mi.pow(k), (k % 2) ? Rat(-1) : Rat(1));
            flipped[mi] += k;
        } else {
            flipped[m] += k;
        }
    }
    den = std::move(flipped);

    if (num.is_zero()) {
        den.clear();
        return;
    }

    bool changed = true;
    while (changed) {
        changed = false;
        // Cancel factors dividing the numerator exactly.
        for (auto it = den.begin(); it != den.end();) {
            while (it->second > 0) {
                auto q = num.divide_binomial(it->first, +1);
                if (!q) break;
                num = std::move(*q);
                --it->second;
                changed = true;
            }
            if (it->second == 0)
                it = den.erase(it);
            else
                ++it;
        }
        // Split (1 - u^2) -> (1 - u) when the numerator carries (1 + u).
        for (auto it = den.begin(); it != den.end(); ++it) {
            if (it->second == 0 || !it->first.all_exponents_even()) continue;
            Monomial u = it->first.half();
            auto q = num.divide_binomial(u, -1);
            if (q) {
                num = std::move(*q);
                --it->second;
                den[u] += 1;
                changed = true;
                break;  // map mutated; restart scan
            }
        }
    }
    for (auto it = den.begin(); it != den.end();) {
        if (it->second == 0)
            it = den.erase(it);
        else
            ++it;
    }
}

namespace {

// Expand prod (1 - m)^k over the factor list.
Poly expand_factors(const std::map<Monomial, int>& fs) {
    Poly r = Poly::one();
    for (const auto& [m, k] : fs) {
        Poly f = Poly::one();
        f.add_term(m, -1);
        for (int i = 0; i < k; ++i) r *= f;
    }
    return r;
}

std::map<Monomial, int> multiset_diff(const std::map<Monomial, int>& a, const std::map<Monomial, int>& b) {
    std::map<Monomial, int> r;
    for (const auto& [m, k] : a) {
        auto it = b.find(m);
        int d = k - (it == b.end() ? 0 : it->second);
        if (d > 0) r[m] = d;
    }
    return r;
}

}  // namespace

RatFunc rf_add(const RatFunc& a, const RatFunc& b) {
    std::map<Monomial, int> den;
    for (const auto& [m, k] : a.den) den[m] = k;
    for (const auto& [m, k] : b.den) {
        auto& v = den[m];
        v = std::max(v, k);
    }
    Poly na = a.num * expand_factors(multiset_diff(den, a.den));
    Poly nb = b.num * expand_factors(multiset_diff(den, b.den));
    RatFunc r(na + nb, std::move(den));
    r.canonicalize();
    return r;
}

RatFunc rf_sub(const RatFunc& a, const RatFunc& b) { return rf_add(a, rf_neg(b)); }

RatFunc rf_neg(const RatFunc& a) {
    RatFunc r = a;
    r.num = -r.num;
    return r;
}

RatFunc rf_mul(const RatFunc& a, const RatFunc& b) {
    std::map<Monomial, int> den = a.den;
    for (const auto& [m, k] : b.den) den[m] += k;
    RatFunc r(a.num * b.num, std::move(den));
    r.canonicalize();
    return r;
}

RatFunc rf_mul(const RatFunc& a, const Poly& b) {
    RatFunc r(a.num * b, a.den);
    r.canonicalize();
    return r;
}

RatFunc rf_sum(std::vector<RatFunc> terms) {
    if (terms.empty()) return RatFunc::zero();
    while (terms.size() > 1) {
        std::vector<RatFunc> next;
        next.reserve((terms.size() + 1) / 2);
        for (size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(rf_add(terms[i], terms[i + 1]));
        if (terms.size() % 2) next.push_back(std::move(terms.back()));
        terms = std::move(next);
    }
    return terms[0];
}

bool rf_equal(const RatFunc& a, const RatFunc& b) {
    Poly lhs = a.num * expand_factors(multiset_diff(b.den, a.den));
    Poly rhs = b.num * expand_factors(multiset_diff(a.den, b.den));
    return lhs == rhs;
}

RatFunc rf_invert_vars(const RatFunc& a, const std::vector<int>& vars) {
    RatFunc r(a.num.invert_vars(vars));
    for (const auto& [m, k] : a.den) r.den[m.invert_vars(vars)] += k;
    r.canonicalize();
    return r;
}

Rat rf_evaluate(const RatFunc& a, const std::map<int, Rat>& point) {
    Rat v = a.num.evaluate(point);
    for (const auto& [m, k] : a.den) {
        Rat f = 1 - m.evaluate(point);
        if (f == 0) throw std::domain_error("rf_evaluate: denominator zero at point");
        v /= rat_pow(f, k);
    }
    return v;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("series order mismatch");
    TruncatedSeries r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = c_[k] + o.c_[k];
    return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
    if (order() != o.order()) throw std::invalid_argument("series order mismatch");
    TruncatedSeries r(order());
    for (int i = 0; i <= order(); ++i) {
        if (c_[i].is_zero()) continue;
        for (int j = 0; i + j <= order(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    }
    return r;
}

std::vector<Rat> TruncatedSeries::evaluate_p(const Rat& p) const {
    std::vector<Rat> r;
    r.reserve(c_.size());
    std::map<int, Rat> pt{{var_p(), p}};
    for (const auto& c : c_) r.push_back(c.evaluate(pt));
    return r;
}

TruncatedSeries rf_series(const RatFunc& a, int order) {
    if (order < 0) throw std::invalid_argument("rf_series: negative order");
    Poly num = a.num;
    std::vector<std::pair<Monomial, int>> factors;
    for (const auto& [m, k] : a.den) {
        if (!m.uses_only({var_p(), var_t()}))
            throw std::domain_error("rf_series: denominator factor involves a variable other than p, t: " + m.str());
        if (m.exponent(var_t()) <= 0) {
            // A t-free factor cannot be expanded as a power series in t; it
            // must divide the numerator exactly.
            Poly cur = num;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                auto q = cur.divide_binomial(m, +1);
                if (!q)
                    ok = false;
                else
                    cur = std::move(*q);
            }
            if (!ok)
                throw std::domain_error("rf_series: factor (1 - " + m.str() +
                                        ") has no positive t-exponent and does not divide the numerator");
            num = std::move(cur);
        } else {
            factors.emplace_back(m, k);
        }
    }
    for (const auto& [m, c] : num.terms()) {
        if (!m.uses_only({var_p(), var_t()}))
            throw std::domain_error("rf_series: numerator involves a variable other than p, t");
        if (m.exponent(var_t()) < 0) throw std::domain_error("rf_series: numerator has negative t-exponent");
    }

    TruncatedSeries s(order);
    for (const auto& [m, c] : num.terms()) {
        int k = m.exponent(var_t());
        if (k > order) continue;
        s.coeff(k).add_term(Monomial::var(var_p(), m.exponent(var_p())), c);
    }
    for (const auto& [m, k] : factors) {
        int b = m.exponent(var_t());
        int a_exp = m.exponent(var_p());
        // multiply by sum_j C(j+k-1, k-1) p^{a j} t^{b j}
        TruncatedSeries next(order);
        for (int d = 0; d <= order; ++d) {
            for (int j = 0; j * b <= d; ++j) {
                const Poly& src = s.coeff(d - j * b);
                if (src.is_zero()) continue;
                Rat coef(binomial(j + k - 1, k - 1));
                next.coeff(d) += src.scaled(Monomial::var(var_p(), a_exp * j), coef);
            }
        }
        s = std::move(next);
    }
    return s;
}

namespace {

nlohmann::ordered_json monomial_to_json(const Monomial& m) {
    nlohmann::ordered_json e = nlohmann::ordered_json::object();
    for (const auto& [v, k] : m.exps()) e[VarRegistry::instance().name(v)] = k;
    return e;
}

}  // namespace

std::string rf_to_json(const RatFunc& a, int indent) {
    nlohmann::ordered_json j;
    j["numerator"] = nlohmann::ordered_json::array();
    for (const auto& [m, c] : a.num.terms()) {
        nlohmann::ordered_json term = nlohmann::ordered_json::array();
        term.push_back(boost::multiprecision::numerator(c).str());
        term.push_back(boost::multiprecision::denominator(c).str());
        term.push_back(monomial_to_json(m));
        j["numerator"].push_back(term);
    }
    j["denominator"] = nlohmann::ordered_json::array();
    for (const auto& [m, k] : a.den) {
        nlohmann::ordered_json f = nlohmann::ordered_json::array();
        f.push_back(monomial_to_json(m));
        f.push_back(k);
        j["denominator"].push_back(f);
    }
    return j.dump(indent);
}

namespace {

std::string monomial_to_latex(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (const auto& [v, e] : m.exps()) {
        std::string nm = VarRegistry::instance().name(v);
        s += nm;
        if (e != 1) s += "^{" + std::to_string(e) + "}";
    }
    return s;
}

}  // namespace

std::string poly_to_latex(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const Rat& c = it->second;
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        Rat a = c < 0 ? Rat(-c) : c;
        bool unit = (a == 1);
        if (!unit || it->first.is_one()) {
            if (boost::multiprecision::denominator(a) == 1)
                s += boost::multiprecision::numerator(a).str();
            else
                s += "\\tfrac{" + boost::multiprecision::numerator(a).str() + "}{" +
                     boost::multiprecision::denominator(a).str() + "}";
        }
        if (!it->first.is_one()) s += monomial_to_latex(it->first);
        first = false;
    }
    return s;
}

std::string rf_to_latex(const RatFunc& a) {
    std::string num = poly_to_latex(a.num);
    if (a.den.empty()) return num;
    std::string den;
    for (const auto& [m, k] : a.den) {
        den += "(1 - " + monomial_to_latex(m) + ")";
        if (k != 1) den += "^{" + std::to_string(k) + "}";
    }
    return "\\frac{" + num + "}{" + den + "}";
}

std::string RatFunc::str() const {
    std::ostringstream os;
    os << "(" << num.str() << ")";
    for (const auto& [m, k] : den) {
        os << " / (1 - " << m.str() << ")";
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

}  // namespace hzeta
