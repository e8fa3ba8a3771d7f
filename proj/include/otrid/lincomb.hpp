#pragma once

#include <map>
#include <string>
#include <utility>

#include "otrid/rational.hpp"

namespace otrid {

// Sparse formal linear combination over an ordered basis-key type.
// Zero coefficients are never stored; the empty map is the zero element.
template <class K>
class LinComb {
public:
    LinComb() = default;

    static LinComb single(K key, Rational coeff = Rational(1)) {
        LinComb c;
        c.add_term(std::move(key), std::move(coeff));
        return c;
    }

    void add_term(K key, const Rational& coeff) {
        if (coeff.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    const std::map<K, Rational>& terms() const { return terms_; }

    Rational coeff(const K& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational() : it->second;
    }

    friend LinComb operator+(const LinComb& a, const LinComb& b) {
        LinComb r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }

    friend LinComb operator-(const LinComb& a, const LinComb& b) {
        LinComb r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
        return r;
    }

    LinComb scaled(const Rational& c) const {
        LinComb r;
        if (c.is_zero()) return r;
        for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
        return r;
    }

    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LinComb& a, const LinComb& b) { return !(a == b); }

    // Bilinear extension of f : K x K -> LinComb.
    template <class F>
    static LinComb bilinear(F&& f, const LinComb& a, const LinComb& b) {
        LinComb r;
        for (const auto& [ka, ca] : a.terms_) {
            for (const auto& [kb, cb] : b.terms_) {
                LinComb part = f(ka, kb);
                Rational c = ca * cb;
                for (const auto& [k, v] : part.terms_) r.add_term(k, v * c);
            }
        }
        return r;
    }

    // Linear extension of f : K -> LinComb<K2>.
    template <class K2, class F>
    LinComb<K2> mapped(F&& f) const {
        LinComb<K2> r;
        for (const auto& [k, c] : terms_) {
            LinComb<K2> part = f(k);
            for (const auto& [k2, v] : part.terms()) r.add_term(k2, v * c);
        }
        return r;
    }

    // "c1*<key1> + c2*<key2>" with terms in key order; "0" when empty.
    template <class Show>
    std::string str(Show&& show_key) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) s += " + ";
            first = false;
            s += c.str();
            s += "*";
            s += show_key(k);
        }
        return s;
    }

private:
    std::map<K, Rational> terms_;
};

}  // namespace otrid
