#include "thetaquartic/characteristics.hpp"

#include <algorithm>
#include <bit>

#include "thetaquartic/symplectic.hpp"

namespace thetaquartic {

namespace {

void check_genus(int genus) {
    if (genus < 1 || genus > kMaxGenus)
        throw Error(ErrorCode::UnsupportedGenus, "genus must be in [1, " + std::to_string(kMaxGenus) + "]");
}

void require_same_genus(const Characteristic& a, const Characteristic& b) {
    if (a.genus() != b.genus())
        throw Error(ErrorCode::GenusMismatch, "characteristics " + a.to_string() + " and " + b.to_string() +
                                                  " have different genus");
}

int popcount_parity(std::uint32_t x) { return std::popcount(x) & 1; }

// x mod n in [0, n).
int mod_positive(const Integer& x, int n) {
    Integer r = x % n;
    if (r < 0) r += n;
    return static_cast<int>(r);
}

}  // namespace

Characteristic::Characteristic(int genus, std::uint32_t top_bits, std::uint32_t bottom_bits)
    : genus_(genus), top_(top_bits), bottom_(bottom_bits) {
    check_genus(genus);
    const std::uint32_t mask = (1U << genus) - 1U;
    if ((top_bits & ~mask) != 0 || (bottom_bits & ~mask) != 0)
        throw Error(ErrorCode::InvalidArgument, "characteristic bits exceed genus");
}

Characteristic Characteristic::zero(int genus) { return Characteristic(genus, 0, 0); }

Characteristic Characteristic::from_index(int genus, std::uint32_t index) {
    check_genus(genus);
    const std::uint32_t mask = (1U << genus) - 1U;
    if (index >= (1U << (2 * genus))) throw Error(ErrorCode::InvalidArgument, "characteristic index out of range");
    return Characteristic(genus, (index >> genus) & mask, index & mask);
}

Characteristic Characteristic::from_vectors(std::span<const int> top, std::span<const int> bottom) {
    if (top.size() != bottom.size())
        throw Error(ErrorCode::GenusMismatch, "characteristic halves have different length");
    const int g = static_cast<int>(top.size());
    check_genus(g);
    std::uint32_t t = 0;
    std::uint32_t b = 0;
    for (int i = 0; i < g; ++i) {
        t = (t << 1) | static_cast<std::uint32_t>(top[i] & 1);
        b = (b << 1) | static_cast<std::uint32_t>(bottom[i] & 1);
    }
    return Characteristic(g, t, b);
}

Characteristic Characteristic::parse(std::string_view text) {
    const auto bar = text.find('|');
    if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
        throw Error(ErrorCode::ParseError, "characteristic must look like \"101|010\": " + std::string(text));
    const auto top = text.substr(0, bar);
    const auto bottom = text.substr(bar + 1);
    if (top.size() != bottom.size() || top.empty() || top.size() > static_cast<std::size_t>(kMaxGenus))
        throw Error(ErrorCode::ParseError, "malformed characteristic: " + std::string(text));
    std::uint32_t t = 0;
    std::uint32_t b = 0;
    for (std::size_t i = 0; i < top.size(); ++i) {
        if ((top[i] != '0' && top[i] != '1') || (bottom[i] != '0' && bottom[i] != '1'))
            throw Error(ErrorCode::ParseError, "characteristic entries must be 0 or 1: " + std::string(text));
        t = (t << 1) | static_cast<std::uint32_t>(top[i] - '0');
        b = (b << 1) | static_cast<std::uint32_t>(bottom[i] - '0');
    }
    return Characteristic(static_cast<int>(top.size()), t, b);
}

std::string Characteristic::to_string() const {
    std::string s;
    s.reserve(static_cast<std::size_t>(2 * genus_ + 1));
    for (int i = 0; i < genus_; ++i) s.push_back(static_cast<char>('0' + top(i)));
    s.push_back('|');
    for (int i = 0; i < genus_; ++i) s.push_back(static_cast<char>('0' + bottom(i)));
    return s;
}

int parity(const Characteristic& m) noexcept {
    return popcount_parity(m.top_bits() & m.bottom_bits()) ? -1 : 1;
}

Characteristic add(const Characteristic& a, const Characteristic& b) {
    require_same_genus(a, b);
    return Characteristic(a.genus(), a.top_bits() ^ b.top_bits(), a.bottom_bits() ^ b.bottom_bits());
}

int pairing_sign(const Characteristic& a, const Characteristic& b) {
    require_same_genus(a, b);
    const int e = popcount_parity(a.top_bits() & b.bottom_bits()) ^ popcount_parity(b.top_bits() & a.bottom_bits());
    return e ? -1 : 1;
}

std::vector<Characteristic> enumerate(int genus, ParityFilter filter) {
    check_genus(genus);
    std::vector<Characteristic> out;
    const std::uint32_t total = 1U << (2 * genus);
    for (std::uint32_t i = 0; i < total; ++i) {
        auto m = Characteristic::from_index(genus, i);
        if (filter == ParityFilter::All || (filter == ParityFilter::Even) == is_even(m)) out.push_back(m);
    }
    return out;
}

bool is_azygetic_triple(const Characteristic& a, const Characteristic& b, const Characteristic& c) {
    require_same_genus(a, b);
    require_same_genus(a, c);
    if (a == b || a == c || b == c)
        throw Error(ErrorCode::RepeatedCharacteristic, "azygetic test needs distinct characteristics");
    return parity(a) * parity(b) * parity(c) * parity(a + b + c) == -1;
}

bool is_azygetic_tuple(std::span<const Characteristic> tuple) {
    if (tuple.size() < 3) throw Error(ErrorCode::InvalidArgument, "azygetic tuple needs at least 3 entries");
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j) {
            require_same_genus(tuple[i], tuple[j]);
            if (tuple[i] == tuple[j])
                throw Error(ErrorCode::RepeatedCharacteristic, "repeated characteristic " + tuple[i].to_string());
        }
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            for (std::size_t k = j + 1; k < tuple.size(); ++k)
                if (!is_azygetic_triple(tuple[i], tuple[j], tuple[k])) return false;
    return true;
}

namespace {

Characteristic sum_of(std::span<const Characteristic> xs) {
    Characteristic s = Characteristic::zero(xs.front().genus());
    for (const auto& x : xs) s = s + x;
    return s;
}

// Every triple formed by c and two members of `chosen` is azygetic.
bool extends_azygetically(std::span<const Characteristic> chosen, const Characteristic& c) {
    if (std::find(chosen.begin(), chosen.end(), c) != chosen.end()) return false;
    for (std::size_t i = 0; i < chosen.size(); ++i)
        for (std::size_t j = i + 1; j < chosen.size(); ++j)
            if (!is_azygetic_triple(chosen[i], chosen[j], c)) return false;
    return true;
}

void require_genus3(int genus) {
    if (genus != 3) throw Error(ErrorCode::UnsupportedGenus, "Aronhold machinery is implemented for genus 3 only");
}

void enumerate_rec(const std::vector<Characteristic>& odd, std::size_t start, std::vector<Characteristic>& chosen,
                   std::vector<AronholdSet>& out) {
    if (chosen.size() == 7) {
        const Characteristic s = sum_of(chosen);
        if (!extends_azygetically(chosen, s)) return;
        AronholdSet set;
        std::copy(chosen.begin(), chosen.end(), set.members.begin());
        set.sum = s;
        out.push_back(set);
        return;
    }
    for (std::size_t i = start; i < odd.size(); ++i) {
        if (odd.size() - i < 7 - chosen.size()) break;
        if (!extends_azygetically(chosen, odd[i])) continue;
        chosen.push_back(odd[i]);
        enumerate_rec(odd, i + 1, chosen, out);
        chosen.pop_back();
    }
}

// Fills members 3..6 given the leading triple; m1 already known, so every
// candidate must also be azygetic with m1 against each chosen member.
void complete_rec(const std::vector<Characteristic>& odd, std::size_t start, const Characteristic& m1,
                  std::vector<Characteristic>& chosen, std::vector<AronholdSet>& out, std::size_t limit) {
    if (out.size() >= limit) return;
    auto admissible = [&](const Characteristic& c) {
        if (!extends_azygetically(chosen, c)) return false;
        for (const auto& a : chosen)
            if (!is_azygetic_triple(a, c, m1)) return false;
        return true;
    };
    if (chosen.size() == 6) {
        const Characteristic last = m1 + sum_of(chosen);
        if (!is_odd(last) || last <= chosen.back() || !admissible(last)) return;
        AronholdSet set;
        std::copy(chosen.begin(), chosen.end(), set.members.begin());
        set.members[6] = last;
        set.sum = m1;
        out.push_back(set);
        return;
    }
    for (std::size_t i = start; i < odd.size() && out.size() < limit; ++i) {
        if (!admissible(odd[i])) continue;
        chosen.push_back(odd[i]);
        complete_rec(odd, i + 1, m1, chosen, out, limit);
        chosen.pop_back();
    }
}

}  // namespace

std::vector<AronholdSet> enumerate_aronhold_sets(int genus) {
    require_genus3(genus);
    const auto odd = enumerate(3, ParityFilter::Odd);
    std::vector<AronholdSet> out;
    std::vector<Characteristic> chosen;
    enumerate_rec(odd, 0, chosen, out);
    return out;
}

std::vector<AronholdSet> aronhold_sets_for_pair(const Characteristic& m1, const Characteristic& m2,
                                                std::size_t limit) {
    require_same_genus(m1, m2);
    require_genus3(m1.genus());
    if (!is_even(m1) || !is_even(m2))
        throw Error(ErrorCode::InvalidArgument, "Aronhold pair search needs even characteristics");
    if (m1 == m2) throw Error(ErrorCode::InvalidArgument, "Aronhold pair search needs distinct characteristics");

    const auto odd = enumerate(3, ParityFilter::Odd);
    std::vector<AronholdSet> out;
    std::vector<Characteristic> chosen;
    for (std::size_t i = 0; i < odd.size() && out.size() < limit; ++i) {
        for (std::size_t j = i + 1; j < odd.size() && out.size() < limit; ++j) {
            const Characteristic third = m2 + odd[i] + odd[j];
            if (!is_odd(third) || third <= odd[j]) continue;
            if (!is_azygetic_triple(odd[i], odd[j], third)) continue;
            chosen = {odd[i], odd[j], third};
            bool ok = true;
            for (std::size_t a = 0; a < 3 && ok; ++a)
                for (std::size_t b = a + 1; b < 3 && ok; ++b) ok = is_azygetic_triple(chosen[a], chosen[b], m1);
            if (!ok) continue;
            // The remaining four members are drawn in increasing order; they
            // need not exceed the leading triple.
            complete_rec(odd, 0, m1, chosen, out, limit);
        }
    }
    return out;
}

AronholdSet aronhold_for_pair(const Characteristic& m1, const Characteristic& m2) {
    auto sets = aronhold_sets_for_pair(m1, m2, 1);
    if (sets.empty())
        throw Error(ErrorCode::NotFound,
                    "no Aronhold set with sum " + m1.to_string() + " and leading triple sum " + m2.to_string());
    return sets.front();
}

std::map<std::pair<int, int>, Characteristic> complete_aronhold_labels(const AronholdSet& s) {
    std::map<std::pair<int, int>, Characteristic> labels;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j) labels.emplace(std::pair{i, j}, s.sum + s.members[i] + s.members[j]);
    return labels;
}

bool is_aronhold_set(std::span<const Characteristic> members) {
    if (members.size() != 7) return false;
    for (const auto& n : members)
        if (n.genus() != 3 || !is_odd(n)) return false;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (members[i] == members[j]) return false;
    std::vector<Characteristic> eight(members.begin(), members.end());
    eight.push_back(sum_of(members));
    if (!is_even(eight.back())) return false;
    return is_azygetic_tuple(eight);
}

SignedCharacteristic gamma_act_char(const SymplecticMatrix& gamma, const Characteristic& m) {
    const int g = m.genus();
    if (gamma.genus() != g) throw Error(ErrorCode::GenusMismatch, "gamma and characteristic differ in genus");
    const IntMatrix a = gamma.a();
    const IntMatrix b = gamma.b();
    const IntMatrix c = gamma.c();
    const IntMatrix d = gamma.d();
    const IntMatrix cdt = c * d.transpose();
    const IntMatrix abt = a * b.transpose();

    std::vector<int> r_top(static_cast<std::size_t>(g));
    std::vector<int> r_bottom(static_cast<std::size_t>(g));
    int carry_pairing = 0;
    for (int i = 0; i < g; ++i) {
        Integer top = cdt(i, i);
        Integer bottom = abt(i, i);
        for (int j = 0; j < g; ++j) {
            top += d(i, j) * m.top(j) - c(i, j) * m.bottom(j);
            bottom += -b(i, j) * m.top(j) + a(i, j) * m.bottom(j);
        }
        const int rt = mod_positive(top, 2);
        const int b4 = mod_positive(bottom, 4);
        const int rb = b4 & 1;
        const int carry_bottom = (b4 - rb) / 2;  // (bottom - rb) / 2 mod 2
        r_top[static_cast<std::size_t>(i)] = rt;
        r_bottom[static_cast<std::size_t>(i)] = rb;
        carry_pairing ^= (rt & carry_bottom);
    }
    return {Characteristic::from_vectors(r_top, r_bottom), carry_pairing ? -1 : 1};
}

}  // namespace thetaquartic
