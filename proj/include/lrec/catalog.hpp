#ifndef LREC_CATALOG_HPP
#define LREC_CATALOG_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lrec/expansion.hpp"

namespace lrec {

/// Real Dirichlet character given by its residue table (index = n mod modulus).
struct CharacterTable {
    unsigned modulus = 0;
    std::vector<int> values;  // entries in {-1, 0, +1}

    int operator()(std::uint64_t n) const { return values[n % modulus]; }
};

struct UnknownCharacter : std::runtime_error {
    explicit UnknownCharacter(const std::string& name)
        : std::runtime_error("UnknownCharacter: " + name) {}
};

/// Builds a catalog character by short name:
/// chi_m3, chi_p3, chi_m5, chi_6, chi_m6, chi_10, chi_m10.
CharacterTable character_from_paper(const std::string& name);

/// Which modified L-function the series represents: L(s)-1 or 1-L(s); chosen
/// per series so that the leading stream coefficient is positive.
enum class Orientation { L_minus_1, one_minus_L };

enum class SeriesTag {
    zeta_minus_1,
    one_minus_eta,
    dirichlet_lambda_minus_1,
    one_minus_beta,
    log_zeta,
    prime_zeta,
    mobius_complement,
    liouville_complement,
    thue_morse_upsilon,
    thue_morse_xi,
    character,
    hurwitz_zeta,
    hurwitz_lambda,
};

struct SeriesId {
    SeriesTag tag;
    std::string char_name;            // character only
    Orientation orientation = Orientation::L_minus_1;  // character only
    Rational q = Rational(0);         // hurwitz only

    std::string name() const;
};

SeriesSpec make_series(const SeriesId& id);

/// Parses "zeta_minus_1", "chi_6", "hurwitz_zeta:3/2", ... (the CLI surface).
SeriesId parse_series_id(const std::string& name);

/// Every series the catalog knows, with the Hurwitz examples at q = 3/2.
std::vector<SeriesId> all_series_ids();

struct CatalogEntry {
    std::string name;
    std::string description;
    Rational leading_base;
    std::string orientation;
};

std::vector<CatalogEntry> catalog_listing();

}  // namespace lrec

#endif
