// Evaluation instance description: ranks, named intersection pairings, and
// the truncation order. Pairing keys come from a fixed registry so typos are
// rejected at parse time rather than read as zero.
#ifndef QUOTVIR_SETUP_HPP
#define QUOTVIR_SETUP_HPP

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rational.hpp"

namespace quotvir {

namespace symbols {

inline bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

// Divisor symbols of the degree-1 Chow group used by the l=1 oracle.
inline bool is_divisor_symbol(std::string_view s)
{
    if (s == "c1S" || s == "c1E" || s == "c1Ep" || s == "c1Epp" || s == "c1L" || s == "c1M")
        return true;
    if (s.size() > 3 && s.substr(0, 3) == "c1F")
        return all_digits(s.substr(3)) || s.size() == 4;
    return s == "c1F";
}

// Intrinsic degree-2 symbols (second Chern classes).
inline bool is_point_symbol(std::string_view s)
{
    return s == "c2S" || s == "c2E" || s == "c2Ep" || s == "c2Epp" || s == "c2F";
}

// Keys of the degree-2 pairing table: either an intrinsic degree-2 symbol or
// a product "a*b" of two divisor symbols in sorted order.
inline bool is_pairing_monomial(std::string_view s)
{
    if (is_point_symbol(s))
        return true;
    auto star = s.find('*');
    if (star == std::string_view::npos)
        return false;
    return is_divisor_symbol(s.substr(0, star)) && is_divisor_symbol(s.substr(star + 1));
}

// Named intersection-number and rank symbols of the series layer. The ".K"
// suffix is a naming convention only: a key like "c1EL.K" holds the pairing
// c1(E otimes L).c1(S).
inline bool is_series_symbol(std::string_view s)
{
    if (s == "K2" || s == "chiTop" || s == "g" || s == "r" || s == "m" || s == "a" || s == "q")
        return true;
    if (s.size() > 1 && s[0] == 'f' && all_digits(s.substr(1)))
        return true;
    if (s.size() > 2 && s.substr(s.size() - 2) == ".K") {
        auto base = s.substr(0, s.size() - 2);
        return base == "c1E" || base == "c1L" || base == "c1M" || base == "c1EL" ||
               base == "c1EM" || base == "c1LM" || base == "c1Ep" || base == "c1Epp" ||
               base == "c1EppL" ||
               (base.size() > 4 && base.substr(0, 4) == "c1EF" && all_digits(base.substr(4))) ||
               (base.size() > 3 && base.substr(0, 3) == "c1F" && all_digits(base.substr(3)));
    }
    return false;
}

inline bool known(std::string_view s) { return is_series_symbol(s) || is_pairing_monomial(s); }

inline void require_known(std::string_view s)
{
    if (!known(s))
        throw error("unknown symbol '" + std::string(s) + "'");
}

} // namespace symbols

// One evaluation instance: rank of E, ranks of the tautological inputs F_i,
// the numeric pairing table, and the series truncation order.
struct quot_setup {
    int rank = 1;
    std::vector<int> taut_ranks;
    std::map<std::string, rational> pairings;
    int order = 10;

    quot_setup& with(const std::string& key, const rational& value)
    {
        symbols::require_known(key);
        pairings[key] = value;
        return *this;
    }

    rational pairing(const std::string& key) const
    {
        symbols::require_known(key);
        auto it = pairings.find(key);
        if (it == pairings.end())
            throw error("missing pairing '" + key + "'");
        return it->second;
    }

    void validate() const
    {
        if (rank < 1)
            throw error("setup: rank must be >= 1");
        if (order < 0)
            throw error("setup: truncation order must be >= 0");
        for (const auto& [k, v] : pairings)
            symbols::require_known(k);
        for (int f : taut_ranks)
            if (f < 1)
                throw error("setup: tautological ranks must be >= 1");
    }
};

} // namespace quotvir

#endif
