#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "locres/errors.hpp"

namespace locres {

// Exponent vector of a monomial; all entries >= 0.
struct ExpVec {
    std::vector<int32_t> e;

    ExpVec() = default;
    explicit ExpVec(std::vector<int32_t> v) : e(std::move(v)) {}
    ExpVec(std::initializer_list<int32_t> v) : e(v) {}

    static ExpVec zero(int n) { return ExpVec(std::vector<int32_t>(n, 0)); }
    static ExpVec unit(int n, int i) {
        ExpVec r = zero(n);
        r.e[i] = 1;
        return r;
    }

    int size() const { return (int)e.size(); }
    int32_t operator[](int i) const { return e[i]; }
    int32_t& operator[](int i) { return e[i]; }

    long total_degree() const { return std::accumulate(e.begin(), e.end(), 0L); }
    bool is_zero() const {
        return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
    }

    // componentwise: this divides o
    bool divides(const ExpVec& o) const {
        for (int i = 0; i < size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    ExpVec operator+(const ExpVec& o) const {
        ExpVec r = *this;
        for (int i = 0; i < size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    // componentwise difference; caller guarantees o divides *this
    ExpVec operator-(const ExpVec& o) const {
        ExpVec r = *this;
        for (int i = 0; i < size(); ++i) {
            r.e[i] -= o.e[i];
            if (r.e[i] < 0) throw Error("negative exponent in monomial quotient");
        }
        return r;
    }

    static ExpVec lcm(const ExpVec& a, const ExpVec& b) {
        ExpVec r = a;
        for (int i = 0; i < a.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    friend bool operator==(const ExpVec& a, const ExpVec& b) { return a.e == b.e; }
    friend bool operator!=(const ExpVec& a, const ExpVec& b) { return !(a == b); }

    // container ordering (not a monomial order); used for deterministic maps
    friend bool lex_less(const ExpVec& a, const ExpVec& b) { return a.e < b.e; }

    struct LexLess {
        bool operator()(const ExpVec& a, const ExpVec& b) const { return a.e < b.e; }
    };
    struct Hash {
        std::size_t operator()(const ExpVec& v) const {
            std::size_t h = 0xcbf29ce484222325ULL;
            for (int32_t x : v.e) h = (h ^ (std::size_t)(uint32_t)x) * 0x100000001b3ULL;
            return h;
        }
    };

    // "1,4" form, used as a JSON object key
    std::string key() const {
        std::string s;
        for (int i = 0; i < size(); ++i) {
            if (i) s += ',';
            s += std::to_string(e[i]);
        }
        return s;
    }
    static std::optional<ExpVec> from_key(const std::string& s, int n);
};

inline std::optional<ExpVec> ExpVec::from_key(const std::string& s, int n) {
    ExpVec r;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        auto comma = s.find(',', pos);
        std::string part = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part.empty()) return std::nullopt;
        for (char c : part)
            if (c < '0' || c > '9') return std::nullopt;
        r.e.push_back((int32_t)std::stol(part));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (r.size() != n) return std::nullopt;
    return r;
}

}  // namespace locres
