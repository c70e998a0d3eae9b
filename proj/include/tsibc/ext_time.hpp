#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace tsibc {

// Integer time extended with the two infinities. The infinities are tags,
// not large integers, so arithmetic never overflows into a "real" time.
class ExtTime {
public:
    enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

    constexpr ExtTime() = default;
    constexpr ExtTime(std::int64_t t) : kind_(Kind::Finite), value_(t) {}

    static constexpr ExtTime neg_inf() { return ExtTime(Kind::NegInf); }
    static constexpr ExtTime pos_inf() { return ExtTime(Kind::PosInf); }

    constexpr bool finite() const { return kind_ == Kind::Finite; }
    constexpr bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    constexpr bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    constexpr Kind kind() const { return kind_; }

    // Precondition: finite().
    constexpr std::int64_t value() const { return value_; }

    constexpr std::strong_ordering operator<=>(const ExtTime& o) const {
        if (kind_ != o.kind_) return kind_ <=> o.kind_;
        if (kind_ != Kind::Finite) return std::strong_ordering::equal;
        return value_ <=> o.value_;
    }
    constexpr bool operator==(const ExtTime& o) const { return (*this <=> o) == 0; }

    std::string str() const {
        switch (kind_) {
        case Kind::NegInf: return "-inf";
        case Kind::PosInf: return "inf";
        default: return std::to_string(value_);
        }
    }

private:
    constexpr explicit ExtTime(Kind k) : kind_(k) {}

    Kind kind_ = Kind::NegInf;
    std::int64_t value_ = 0;
};

}  // namespace tsibc
