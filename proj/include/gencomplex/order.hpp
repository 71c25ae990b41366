#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "gencomplex/errors.hpp"

namespace gencomplex {

/// Order of a Renyi entropy, extended with its limit cases.
class OrderParam {
public:
    enum class Kind { ZeroLimit, Finite, ShannonLimit, InfinityLimit };

    /// Finite orders within this distance of 1 use the Shannon path.
    static constexpr double kShannonWindow = 1e-6;

    static OrderParam zero() { return OrderParam(Kind::ZeroLimit, 0.0); }
    static OrderParam shannon() { return OrderParam(Kind::ShannonLimit, 1.0); }
    static OrderParam infinity()
    {
        return OrderParam(Kind::InfinityLimit, std::numeric_limits<double>::infinity());
    }

    static OrderParam finite(double value)
    {
        if (std::isinf(value) && value > 0)
            return infinity();
        if (!(value > 0.0) || !std::isfinite(value))
            throw DomainError("OrderParam: finite order must be a positive real");
        if (std::abs(value - 1.0) < kShannonWindow)
            return shannon();
        return OrderParam(Kind::Finite, value);
    }

    /// 0 -> ZeroLimit, +inf -> InfinityLimit, ~1 -> ShannonLimit.
    static OrderParam from_value(double value)
    {
        if (value == 0.0)
            return zero();
        return finite(value);
    }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }

    /// Numeric position on the extended half-line: 0, alpha, 1 or +inf.
    double value() const { return value_; }

    std::string to_string() const
    {
        switch (kind_) {
        case Kind::ZeroLimit:
            return "0";
        case Kind::ShannonLimit:
            return "1";
        case Kind::InfinityLimit:
            return "inf";
        case Kind::Finite:
            break;
        }
        std::ostringstream os;
        os.precision(17);
        os << value_;
        return os.str();
    }

    friend bool operator==(const OrderParam& a, const OrderParam& b)
    {
        return a.kind_ == b.kind_ && a.value_ == b.value_;
    }
    friend bool operator<(const OrderParam& a, const OrderParam& b) { return a.value_ < b.value_; }

private:
    OrderParam(Kind kind, double value) : kind_(kind), value_(value) {}

    Kind kind_;
    double value_;
};

}  // namespace gencomplex
