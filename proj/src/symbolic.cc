// Copyright 2026 The ifsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ifs/symbolic.h"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace ifs {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_integer(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

std::int64_t parse_integer(std::string_view s, std::string_view context) {
    if (!is_integer(s)) {
        throw std::invalid_argument("expected an integer in '" + std::string(context) + "', got '" + std::string(s) + "'");
    }
    return std::stoll(std::string(s));
}

}  // namespace

SymbolicReal SymbolicReal::raw(double value) {
    SymbolicReal r;
    r.raw_ = value;
    return r;
}

SymbolicReal SymbolicReal::pi_multiple(Rational coefficient, double scale) {
    if (!(scale > 0) || !std::isfinite(scale)) {
        throw std::invalid_argument("pi-multiple scale must be positive and finite");
    }
    SymbolicReal r;
    r.symbolic_ = true;
    r.coefficient_ = coefficient;
    r.scale_ = scale;
    return r;
}

double SymbolicReal::value() const {
    if (!symbolic_) {
        return raw_;
    }
    return boost::rational_cast<double>(coefficient_) * std::numbers::pi / scale_;
}

SymbolicReal SymbolicReal::operator-() const {
    SymbolicReal r = *this;
    r.coefficient_ = -r.coefficient_;
    r.raw_ = -r.raw_;
    return r;
}

SymbolicReal SymbolicReal::scaled(Rational factor) const {
    if (symbolic_) {
        return pi_multiple(coefficient_ * factor, scale_);
    }
    return raw(raw_ * boost::rational_cast<double>(factor));
}

std::string SymbolicReal::str() const {
    if (!symbolic_) {
        return hex_double(raw_);
    }
    std::string out;
    auto num = coefficient_.numerator();
    auto den = coefficient_.denominator();
    if (num == 0) {
        out = "0*pi";
    } else {
        if (num < 0) {
            out += "-";
            num = -num;
        }
        if (num != 1) {
            out += std::to_string(num) + "*";
        }
        out += "pi";
    }
    if (den != 1) {
        out += "/" + std::to_string(den);
    }
    if (scale_ != 1.0) {
        out += "/" + hex_double(scale_);
    }
    return out;
}

SymbolicReal SymbolicReal::parse(std::string_view text) {
    std::string_view s = trim(text);
    auto pi_pos = s.find("pi");
    if (pi_pos == std::string_view::npos) {
        return raw(parse_double(s));
    }

    bool negative = false;
    std::string_view prefix = trim(s.substr(0, pi_pos));
    if (!prefix.empty() && prefix.front() == '-') {
        negative = true;
        prefix = trim(prefix.substr(1));
    }
    std::int64_t num = 1;
    if (!prefix.empty()) {
        if (prefix.back() != '*') {
            throw std::invalid_argument("malformed pi expression '" + std::string(text) + "'");
        }
        num = parse_integer(trim(prefix.substr(0, prefix.size() - 1)), text);
    }

    std::vector<std::string_view> divisors;
    std::string_view rest = trim(s.substr(pi_pos + 2));
    while (!rest.empty()) {
        if (rest.front() != '/') {
            throw std::invalid_argument("malformed pi expression '" + std::string(text) + "'");
        }
        rest.remove_prefix(1);
        auto next = rest.find('/');
        divisors.push_back(trim(rest.substr(0, next)));
        rest = next == std::string_view::npos ? std::string_view{} : rest.substr(next);
    }
    if (divisors.size() > 2) {
        throw std::invalid_argument("too many divisors in '" + std::string(text) + "'");
    }

    std::int64_t den = 1;
    double scale = 1.0;
    if (divisors.size() == 2) {
        den = parse_integer(divisors[0], text);
        scale = parse_double(divisors[1]);
    } else if (divisors.size() == 1) {
        if (is_integer(divisors[0])) {
            den = parse_integer(divisors[0], text);
        } else {
            scale = parse_double(divisors[0]);
        }
    }
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return pi_multiple(Rational(negative ? -num : num, den), scale);
}

bool SymbolicReal::operator==(const SymbolicReal &other) const {
    if (symbolic_ != other.symbolic_) {
        return false;
    }
    if (symbolic_) {
        return coefficient_ == other.coefficient_ && scale_ == other.scale_;
    }
    return raw_ == other.raw_;
}

std::optional<SymbolicReal> exact_sum(std::span<const SymbolicReal> terms) {
    if (terms.empty()) {
        return SymbolicReal::pi_multiple(Rational(0));
    }
    Rational total(0);
    double scale = terms.front().scale();
    for (const auto &t : terms) {
        if (!t.is_symbolic() || t.scale() != scale) {
            return std::nullopt;
        }
        total += t.pi_coefficient();
    }
    return SymbolicReal::pi_multiple(total, scale);
}

double compensated_sum(std::span<const double> values) {
    double sum = 0.0;
    double carry = 0.0;
    for (double v : values) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            carry += (sum - t) + v;
        } else {
            carry += (v - t) + sum;
        }
        sum = t;
    }
    return sum + carry;
}

std::string hex_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%a", value);
    return buf;
}

double parse_double(std::string_view text) {
    std::string s(trim(text));
    if (s.empty()) {
        throw std::invalid_argument("expected a number, got empty text");
    }
    char *end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) {
        throw std::invalid_argument("expected a number, got '" + s + "'");
    }
    return v;
}

}  // namespace ifs
