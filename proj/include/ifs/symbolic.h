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

#ifndef IFS_SYMBOLIC_H
#define IFS_SYMBOLIC_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ifs {

using Rational = boost::rational<std::int64_t>;

/// A real number that is either an exact rational multiple of pi divided by a
/// scale (the usual shape of gate angles and interaction times, e.g. pi/(16*J1))
/// or a plain double.
///
/// Text form:
///     "pi/16"           ->  (1/16) pi
///     "-3*pi/4"         -> (-3/4) pi
///     "pi/16/0x1.8p+1"  ->  (1/16) pi / 3
///     "0x1.3333333333333p-2" or "0.3"  -> raw value
/// The scale is rendered as a hex float so that round trips are bit exact.
class SymbolicReal {
   public:
    SymbolicReal() = default;

    static SymbolicReal raw(double value);
    static SymbolicReal pi_multiple(Rational coefficient, double scale = 1.0);
    static SymbolicReal parse(std::string_view text);

    double value() const;
    bool is_symbolic() const {
        return symbolic_;
    }
    /// Only meaningful when is_symbolic().
    const Rational &pi_coefficient() const {
        return coefficient_;
    }
    double scale() const {
        return scale_;
    }

    SymbolicReal operator-() const;
    SymbolicReal scaled(Rational factor) const;

    std::string str() const;

    bool operator==(const SymbolicReal &other) const;

   private:
    bool symbolic_ = false;
    Rational coefficient_{0};
    double scale_ = 1.0;
    double raw_ = 0.0;
};

/// Exact sum if every term is symbolic with an identical scale.
std::optional<SymbolicReal> exact_sum(std::span<const SymbolicReal> terms);

/// Neumaier-compensated sum of the numeric values.
double compensated_sum(std::span<const double> values);

std::string hex_double(double value);
/// Accepts decimal or hex-float text; the whole string must be consumed.
double parse_double(std::string_view text);

}  // namespace ifs

#endif
