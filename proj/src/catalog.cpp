#include "lrec/catalog.hpp"

#include <numeric>

#include "lrec/number_theory.hpp"

namespace lrec {

namespace {

CharacterTable make_table(unsigned modulus, std::vector<int> values) {
    CharacterTable t{modulus, std::move(values)};
    for (unsigned r = 0; r < modulus; ++r) {
        const bool coprime = std::gcd(r, modulus) == 1;
        if (coprime == (t.values[r] == 0))
            throw UnsupportedParameter("character table zero-set mismatch at residue " +
                                       std::to_string(r));
    }
    return t;
}

}  // namespace

CharacterTable character_from_paper(const std::string& name) {
    // The only real characters the catalog needs, given by residue table.
    if (name == "chi_m3") return make_table(3, {0, 1, -1});
    if (name == "chi_p3") return make_table(3, {0, 1, 1});
    if (name == "chi_m5") return make_table(5, {0, 1, -1, -1, 1});
    if (name == "chi_6") return make_table(6, {0, 1, 0, 0, 0, 1});
    if (name == "chi_m6") return make_table(6, {0, 1, 0, 0, 0, -1});
    if (name == "chi_10") return make_table(10, {0, 1, 0, 1, 0, 0, 0, 1, 0, 1});
    if (name == "chi_m10") return make_table(10, {0, 1, 0, -1, 0, 0, 0, -1, 0, 1});
    throw UnknownCharacter(name);
}

std::string SeriesId::name() const {
    switch (tag) {
        case SeriesTag::zeta_minus_1: return "zeta_minus_1";
        case SeriesTag::one_minus_eta: return "one_minus_eta";
        case SeriesTag::dirichlet_lambda_minus_1: return "dirichlet_lambda_minus_1";
        case SeriesTag::one_minus_beta: return "one_minus_beta";
        case SeriesTag::log_zeta: return "log_zeta";
        case SeriesTag::prime_zeta: return "prime_zeta";
        case SeriesTag::mobius_complement: return "mobius_complement";
        case SeriesTag::liouville_complement: return "liouville_complement";
        case SeriesTag::thue_morse_upsilon: return "thue_morse_upsilon";
        case SeriesTag::thue_morse_xi: return "thue_morse_xi";
        case SeriesTag::character: return char_name;
        case SeriesTag::hurwitz_zeta: return "hurwitz_zeta:" + to_string(q);
        case SeriesTag::hurwitz_lambda: return "hurwitz_lambda:" + to_string(q);
    }
    return "?";
}

namespace {

// Stream over integers n >= start with coeff(n) possibly zero (skipped).
SeriesSpec integer_stream(std::string name, std::string description, std::uint64_t start,
                          std::function<Rational(std::uint64_t)> coeff) {
    return SeriesSpec{std::move(name), std::move(description),
                      [start, coeff]() -> SeriesStream {
                          std::uint64_t n = start;
                          return [n, coeff]() mutable -> std::optional<SeriesTerm> {
                              for (;; ++n) {
                                  Rational c = coeff(n);
                                  if (c != 0) return SeriesTerm{rational(static_cast<long>(n++)), c};
                              }
                          };
                      }};
}

}  // namespace

SeriesSpec make_series(const SeriesId& id) {
    using T = SeriesTag;
    switch (id.tag) {
        case T::zeta_minus_1:
            return integer_stream("zeta_minus_1", "1/(zeta(s)-1)", 2,
                                  [](std::uint64_t) { return rational(1); });
        case T::one_minus_eta:
            return integer_stream("one_minus_eta", "1/(1-eta(s))", 2, [](std::uint64_t n) {
                return rational(n % 2 == 0 ? 1 : -1);
            });
        case T::dirichlet_lambda_minus_1:
            return integer_stream("dirichlet_lambda_minus_1", "1/(lambda(s)-1)", 3,
                                  [](std::uint64_t n) { return rational(n % 2 == 1 ? 1 : 0); });
        case T::one_minus_beta:
            return integer_stream("one_minus_beta", "1/(1-beta(s))", 3, [](std::uint64_t n) {
                if (n % 2 == 0) return rational(0);
                // n = 2k+1, coeff -(-1)^k
                return rational((n - 1) / 2 % 2 == 1 ? 1 : -1);
            });
        case T::log_zeta:
            // Prime powers p^k with coefficient 1/k: the Dirichlet series of ln zeta.
            return integer_stream("log_zeta", "1/ln(zeta(s))", 2, [](std::uint64_t n) {
                auto f = factorize(n);
                if (f.size() != 1) return rational(0);
                return rational(1, f[0].second);
            });
        case T::prime_zeta:
            return integer_stream("prime_zeta", "1/P(s), P the prime zeta function", 2,
                                  [](std::uint64_t n) { return rational(is_prime(n) ? 1 : 0); });
        case T::mobius_complement:
            return integer_stream("mobius_complement", "1/(1-1/zeta(s)) = zeta/(zeta-1)", 2,
                                  [](std::uint64_t n) { return rational(-mobius(n)); });
        case T::liouville_complement:
            return integer_stream("liouville_complement", "1/(1-zeta(2s)/zeta(s))", 2,
                                  [](std::uint64_t n) { return rational(-liouville(n)); });
        case T::thue_morse_upsilon:
            return integer_stream("thue_morse_upsilon", "1/(1-Upsilon(s)), Thue-Morse signs", 2,
                                  [](std::uint64_t n) { return rational(-thue_morse_sign(n)); });
        case T::thue_morse_xi:
            // Xi itself: explicit 2^{-s} head, then the Thue-Morse tail for n > 2.
            return integer_stream("thue_morse_xi", "1/Xi(s), Thue-Morse signs with 2^-s head", 2,
                                  [](std::uint64_t n) {
                                      if (n == 2) return rational(1);
                                      return rational(thue_morse_sign(n));
                                  });
        case T::character: {
            CharacterTable chi = character_from_paper(id.char_name);
            const int sign = id.orientation == Orientation::L_minus_1 ? 1 : -1;
            const std::string desc = id.orientation == Orientation::L_minus_1
                                         ? "1/(L(s,chi)-1)"
                                         : "1/(1-L(s,chi))";
            return integer_stream(id.char_name, desc, 2, [chi, sign](std::uint64_t n) {
                return rational(sign * chi(n));
            });
        }
        case T::hurwitz_zeta: {
            if (id.q <= 1) throw UnsupportedParameter("hurwitz q must exceed 1");
            const Rational q = id.q;
            return SeriesSpec{id.name(), "1/zeta(s,q), Hurwitz zeta",
                              [q]() -> SeriesStream {
                                  Rational base = q;
                                  return [base]() mutable -> std::optional<SeriesTerm> {
                                      SeriesTerm t{base, rational(1)};
                                      base += 1;
                                      return t;
                                  };
                              }};
        }
        case T::hurwitz_lambda: {
            if (id.q <= 1) throw UnsupportedParameter("hurwitz q must exceed 1");
            const Rational q = id.q;
            return SeriesSpec{id.name(), "1/lambda(s,q), Hurwitz analogue of Dirichlet lambda",
                              [q]() -> SeriesStream {
                                  Rational base = q;
                                  return [base]() mutable -> std::optional<SeriesTerm> {
                                      SeriesTerm t{base, rational(1)};
                                      base += 2;
                                      return t;
                                  };
                              }};
        }
    }
    throw UnsupportedParameter("unknown series tag");
}

SeriesId parse_series_id(const std::string& name) {
    auto simple = [&](SeriesTag tag) {
        SeriesId id;
        id.tag = tag;
        return id;
    };
    if (name == "zeta_minus_1") return simple(SeriesTag::zeta_minus_1);
    if (name == "one_minus_eta") return simple(SeriesTag::one_minus_eta);
    if (name == "dirichlet_lambda_minus_1") return simple(SeriesTag::dirichlet_lambda_minus_1);
    if (name == "one_minus_beta") return simple(SeriesTag::one_minus_beta);
    if (name == "log_zeta") return simple(SeriesTag::log_zeta);
    if (name == "prime_zeta") return simple(SeriesTag::prime_zeta);
    if (name == "mobius_complement") return simple(SeriesTag::mobius_complement);
    if (name == "liouville_complement") return simple(SeriesTag::liouville_complement);
    if (name == "thue_morse_upsilon") return simple(SeriesTag::thue_morse_upsilon);
    if (name == "thue_morse_xi") return simple(SeriesTag::thue_morse_xi);
    if (name.rfind("chi_", 0) == 0) {
        // Orientation chosen so the leading stream coefficient is +1.
        Orientation o = Orientation::L_minus_1;
        if (name == "chi_m3" || name == "chi_m5" || name == "chi_m6" || name == "chi_m10")
            o = Orientation::one_minus_L;
        character_from_paper(name);  // validates the name
        return SeriesId{SeriesTag::character, name, o, Rational(0)};
    }
    if (name.rfind("hurwitz_zeta:", 0) == 0)
        return SeriesId{SeriesTag::hurwitz_zeta, "", Orientation::L_minus_1,
                        parse_rational(name.substr(13))};
    if (name.rfind("hurwitz_lambda:", 0) == 0)
        return SeriesId{SeriesTag::hurwitz_lambda, "", Orientation::L_minus_1,
                        parse_rational(name.substr(15))};
    throw UnsupportedParameter("unknown series '" + name + "'");
}

std::vector<SeriesId> all_series_ids() {
    std::vector<SeriesId> ids;
    for (const char* n :
         {"zeta_minus_1", "one_minus_eta", "dirichlet_lambda_minus_1", "one_minus_beta",
          "log_zeta", "prime_zeta", "mobius_complement", "liouville_complement",
          "thue_morse_upsilon", "thue_morse_xi", "chi_m3", "chi_p3", "chi_m5", "chi_6",
          "chi_m6", "chi_10", "chi_m10", "hurwitz_zeta:3/2", "hurwitz_lambda:3/2"})
        ids.push_back(parse_series_id(n));
    return ids;
}

std::vector<CatalogEntry> catalog_listing() {
    std::vector<CatalogEntry> out;
    for (const auto& id : all_series_ids()) {
        SeriesSpec spec = make_series(id);
        auto stream = spec.open();
        auto first = stream();
        CatalogEntry e;
        e.name = spec.name;
        e.description = spec.description;
        e.leading_base = first ? first->base : Rational(0);
        e.orientation = id.tag == SeriesTag::character
                            ? (id.orientation == Orientation::L_minus_1 ? "L_minus_1" : "one_minus_L")
                            : "definitional";
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace lrec
