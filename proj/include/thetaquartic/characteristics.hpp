#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thetaquartic/error.hpp"

namespace thetaquartic {

class SymplecticMatrix;

inline constexpr int kMaxGenus = 8;

// A g-characteristic [m'|m''] with entries in {0,1}. Bits are packed so that
// entry 0 is the most significant bit of each half, which makes the integer
// order of index() coincide with the lexicographic order of the text form
// "m'|m''".
class Characteristic {
public:
    Characteristic() = default;
    Characteristic(int genus, std::uint32_t top_bits, std::uint32_t bottom_bits);

    static Characteristic zero(int genus);
    static Characteristic from_index(int genus, std::uint32_t index);
    // Reduces arbitrary integer vectors mod 2.
    static Characteristic from_vectors(std::span<const int> top, std::span<const int> bottom);
    // Parses "101|010".
    static Characteristic parse(std::string_view text);

    int genus() const noexcept { return genus_; }
    int top(int i) const noexcept { return (top_ >> (genus_ - 1 - i)) & 1U; }
    int bottom(int i) const noexcept { return (bottom_ >> (genus_ - 1 - i)) & 1U; }
    std::uint32_t top_bits() const noexcept { return top_; }
    std::uint32_t bottom_bits() const noexcept { return bottom_; }
    std::uint32_t index() const noexcept { return (top_ << genus_) | bottom_; }

    std::string to_string() const;

    friend bool operator==(const Characteristic&, const Characteristic&) = default;
    friend std::strong_ordering operator<=>(const Characteristic& a, const Characteristic& b) {
        if (auto c = a.genus_ <=> b.genus_; c != 0) return c;
        return a.index() <=> b.index();
    }

private:
    int genus_ = 0;
    std::uint32_t top_ = 0;
    std::uint32_t bottom_ = 0;
};

struct SignedCharacteristic {
    Characteristic ch;
    int sign = 1;  // +1 or -1

    friend bool operator==(const SignedCharacteristic&, const SignedCharacteristic&) = default;
};

enum class ParityFilter { Even, Odd, All };

// e(m) = (-1)^{m'.m''}
int parity(const Characteristic& m) noexcept;
inline bool is_even(const Characteristic& m) noexcept { return parity(m) == 1; }
inline bool is_odd(const Characteristic& m) noexcept { return parity(m) == -1; }

Characteristic add(const Characteristic& a, const Characteristic& b);
inline Characteristic operator+(const Characteristic& a, const Characteristic& b) { return add(a, b); }

// (-1)^{a'.b'' + b'.a''}, the correction term in parity(a+b).
int pairing_sign(const Characteristic& a, const Characteristic& b);

std::vector<Characteristic> enumerate(int genus, ParityFilter filter = ParityFilter::All);

bool is_azygetic_triple(const Characteristic& a, const Characteristic& b, const Characteristic& c);
bool is_azygetic_tuple(std::span<const Characteristic> tuple);

struct AronholdSet {
    std::array<Characteristic, 7> members;
    Characteristic sum;

    friend bool operator==(const AronholdSet&, const AronholdSet&) = default;
};

// All 288 unordered Aronhold sets of genus 3, members sorted, list sorted.
std::vector<AronholdSet> enumerate_aronhold_sets(int genus = 3);

// Aronhold sets with sum == m1 and members[0]+members[1]+members[2] == m2,
// produced in backtracking order; at most `limit` of them.
std::vector<AronholdSet> aronhold_sets_for_pair(const Characteristic& m1, const Characteristic& m2,
                                                std::size_t limit);

// First hit of the constrained backtracking search. Throws NotFound if none.
AronholdSet aronhold_for_pair(const Characteristic& m1, const Characteristic& m2);

// n_ij = m + n_i + n_j for 0 <= i < j < 7 (zero-based member indices).
std::map<std::pair<int, int>, Characteristic> complete_aronhold_labels(const AronholdSet& s);

// Checks the defining conditions directly; used by tests and by loaders.
bool is_aronhold_set(std::span<const Characteristic> members);

// Action of the Siegel modular group on characteristics, reduced to the
// canonical {0,1} representative. The sign is (-1)^{r'.n''} where the raw
// integer vector equals r + 2n.
SignedCharacteristic gamma_act_char(const SymplecticMatrix& gamma, const Characteristic& m);

}  // namespace thetaquartic
