#include "lrec/expansion_core.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lrec {

std::vector<SeriesTerm> take_up_to(const SeriesSpec& spec, const Rational& max_base) {
    std::vector<SeriesTerm> out;
    auto stream = spec.open();
    Rational prev(0);
    while (auto t = stream()) {
        if (t->base <= prev)
            throw UnsupportedParameter("stream of '" + spec.name + "' not strictly ascending");
        prev = t->base;
        if (t->base > max_base) break;
        if (t->coeff != 0) out.push_back(*t);
    }
    return out;
}

namespace {

// Sort descending by base, sum equal bases, drop zeros.
std::vector<PowerTerm> merge_terms(std::vector<PowerTerm>&& raw) {
    std::sort(raw.begin(), raw.end(),
              [](const PowerTerm& x, const PowerTerm& y) { return x.base > y.base; });
    std::vector<PowerTerm> out;
    out.reserve(raw.size());
    for (auto& t : raw) {
        if (!out.empty() && out.back().base == t.base)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    std::erase_if(out, [](const PowerTerm& t) { return t.coeff == 0; });
    return out;
}

}  // namespace

std::vector<PowerTerm> series_product_serial(const std::vector<PowerTerm>& a,
                                             const std::vector<PowerTerm>& b,
                                             const Rational& floor) {
    std::map<Rational, Rational, std::greater<Rational>> acc;
    for (const auto& ta : a)
        for (const auto& tb : b) {
            Rational base = ta.base * tb.base;
            if (base < floor) continue;
            acc[base] += ta.coeff * tb.coeff;
        }
    std::vector<PowerTerm> out;
    out.reserve(acc.size());
    for (auto& [base, coeff] : acc)
        if (coeff != 0) out.push_back({coeff, base});
    return out;
}

std::vector<PowerTerm> series_product(const std::vector<PowerTerm>& a,
                                      const std::vector<PowerTerm>& b,
                                      const Rational& floor) {
    std::vector<std::vector<PowerTerm>> partial(a.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(a.size()); ++i) {
        auto& row = partial[i];
        row.reserve(b.size());
        for (const auto& tb : b) {
            Rational base = a[i].base * tb.base;
            if (base < floor) continue;
            row.push_back({a[i].coeff * tb.coeff, std::move(base)});
        }
    }
    std::vector<PowerTerm> raw;
    for (auto& row : partial)
        raw.insert(raw.end(), std::make_move_iterator(row.begin()),
                   std::make_move_iterator(row.end()));
    return merge_terms(std::move(raw));
}

Expansion reciprocal_expansion(const SeriesSpec& spec, const Rational& threshold,
                               std::size_t term_cap) {
    if (threshold <= 0 || threshold >= 1)
        throw UnsupportedParameter("threshold must lie in (0,1)");

    auto stream = spec.open();
    std::optional<SeriesTerm> first = stream();
    if (!first) throw EmptySeries();
    const Rational b1 = first->base;
    const Rational c1 = first->coeff;
    if (b1 <= 1) throw UnsupportedParameter("leading base must exceed 1");
    if (c1 == 0) throw UnsupportedParameter("leading coefficient must be nonzero");
    if (threshold >= b1) throw ThresholdTooHigh();

    // Factors of T = sum_{k>=2} (c_k/c_1)(b_1/b_k)^s. A factor can only reach
    // the threshold after the final b_1 scaling if b_k <= b_1^2/threshold.
    const Rational max_base = b1 * b1 / threshold;
    std::vector<PowerTerm> factors;
    {
        Rational prev = b1;
        while (auto t = stream()) {
            if (t->base <= prev)
                throw UnsupportedParameter("stream of '" + spec.name + "' not strictly ascending");
            prev = t->base;
            if (t->base > max_base) break;
            if (t->coeff != 0) factors.push_back({t->coeff / c1, b1 / t->base});
        }
    }

    const Rational floor = threshold / b1;
    // sum_{j>=0} (-T)^j, truncated at floor; P holds (-T)^j.
    std::vector<PowerTerm> total{{Rational(1), Rational(1)}};
    std::vector<PowerTerm> power = total;
    while (!power.empty()) {
        std::vector<PowerTerm> next = series_product(power, factors, floor);
        for (auto& t : next) t.coeff = -t.coeff;
        next = merge_terms(std::move(next));
        total.insert(total.end(), next.begin(), next.end());
        power = std::move(next);
    }
    total = merge_terms(std::move(total));

    Expansion e;
    e.source = spec.name;
    e.threshold = threshold;
    for (auto& t : total) {
        Rational base = t.base * b1;
        if (base < threshold) continue;
        e.terms.push_back({t.coeff / c1, std::move(base)});
        if (e.terms.size() > term_cap) throw TermCapExceeded();
    }
    return e;
}

Expansion analytic_transform(const std::function<Rational(unsigned)>& coeffs,
                             const Expansion& u, const Rational& floor) {
    for (const auto& t : u.terms)
        if (t.base >= 1) throw DivergentComposition();

    std::vector<PowerTerm> total;
    std::vector<PowerTerm> power = u.terms;  // u^j
    for (unsigned j = 1; !power.empty(); ++j) {
        const Rational aj = coeffs(j);
        if (aj != 0)
            for (const auto& t : power) total.push_back({aj * t.coeff, t.base});
        power = series_product(power, u.terms, floor);
    }
    Expansion out;
    out.source = u.source;
    out.threshold = floor;
    out.terms = merge_terms(std::move(total));
    return out;
}

namespace {

void enumerate_tuples(const std::vector<PowerTerm>& factors, const Rational& remaining,
                      unsigned depth, unsigned depth_cap, const Rational& coeff_product,
                      Rational& acc) {
    if (remaining == 1) {
        acc += (depth % 2 == 0 ? coeff_product : -coeff_product);
        return;
    }
    if (depth == depth_cap) return;
    for (const auto& f : factors) {
        if (f.base < remaining) continue;  // further factors only shrink
        enumerate_tuples(factors, remaining / f.base, depth + 1, depth_cap,
                         coeff_product * f.coeff, acc);
    }
}

}  // namespace

Rational oracle_coefficient(const SeriesSpec& spec, const Rational& target_base,
                            unsigned depth_cap) {
    auto stream = spec.open();
    std::optional<SeriesTerm> first = stream();
    if (!first) throw EmptySeries();
    const Rational b1 = first->base;
    const Rational c1 = first->coeff;
    if (target_base > b1)
        throw UnsupportedParameter("target base exceeds the leading reciprocal base");

    const Rational max_base = b1 * b1 / target_base;
    std::vector<PowerTerm> factors;
    std::optional<Rational> b2;
    {
        Rational prev = b1;
        while (auto t = stream()) {
            if (t->base <= prev)
                throw UnsupportedParameter("stream of '" + spec.name + "' not strictly ascending");
            prev = t->base;
            if (t->base > max_base) break;
            if (t->coeff == 0) continue;
            if (!b2) b2 = t->base;
            factors.push_back({t->coeff / c1, b1 / t->base});
        }
    }
    if (factors.empty())
        return target_base == b1 ? Rational(1) / c1 : Rational(0);

    // Tuples of length j have base product >= (b_1/b_2)^j; the cap must put
    // every reachable length strictly inside it.
    const Rational ratio = b1 / *b2;
    Rational bound = b1;
    for (unsigned j = 0; j <= depth_cap; ++j) bound *= ratio;
    if (bound >= target_base) throw DepthCapTooSmall();

    Rational acc(0);
    enumerate_tuples(factors, target_base / b1, 0, depth_cap, Rational(1), acc);
    return acc / c1;
}

std::vector<DiffEntry> diff_expansions(const Expansion& computed, const Expansion& reference) {
    std::map<Rational, std::pair<Rational, Rational>, std::greater<Rational>> merged;
    for (const auto& t : computed.terms) merged[t.base].first = t.coeff;
    for (const auto& t : reference.terms) merged[t.base].second = t.coeff;
    std::vector<DiffEntry> out;
    for (const auto& [base, pair] : merged)
        if (pair.first != pair.second) out.push_back({base, pair.first, pair.second});
    return out;
}

SeriesSpec expansion_as_series(const Expansion& e, const std::string& name) {
    for (const auto& t : e.terms)
        if (t.base >= 1)
            throw UnsupportedParameter("expansion_as_series needs all bases below 1");
    auto terms = e.terms;  // base-descending => 1/base ascending
    return SeriesSpec{
        name, "reinterpreted expansion " + e.source,
        [terms]() -> SeriesStream {
            std::size_t i = 0;
            return [terms, i]() mutable -> std::optional<SeriesTerm> {
                if (i >= terms.size()) return std::nullopt;
                const auto& t = terms[i++];
                return SeriesTerm{1 / t.base, t.coeff};
            };
        }};
}

}  // namespace lrec
