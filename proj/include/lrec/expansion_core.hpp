#ifndef LREC_EXPANSION_CORE_HPP
#define LREC_EXPANSION_CORE_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "lrec/expansion.hpp"

namespace lrec {

/// Sparse convolution: all pairwise products of terms from `a` and `b`,
/// coefficients multiplied, bases multiplied, merged by equal base, terms with
/// base < floor dropped. Output base-descending. OpenMP kernel; deterministic.
std::vector<PowerTerm> series_product(const std::vector<PowerTerm>& a,
                                      const std::vector<PowerTerm>& b,
                                      const Rational& floor);

/// Serial reference for series_product, kept for testing and benchmarking.
std::vector<PowerTerm> series_product_serial(const std::vector<PowerTerm>& a,
                                             const std::vector<PowerTerm>& b,
                                             const Rational& floor);

/// Expands 1/F(s) for F = sum c_k b_k^{-s} as a signed sum of rational powers,
/// keeping every term with base >= threshold (inclusive), merged and sorted
/// base-descending. Truncation is complete: all geometric-inversion products
/// that can reach the threshold are included.
Expansion reciprocal_expansion(const SeriesSpec& spec, const Rational& threshold,
                               std::size_t term_cap = 512);

/// sum_{j>=1} a_j u^j truncated at `floor`; `coeffs(j)` is a_j (1-indexed).
/// Requires every base of u strictly below 1 so powers sink under the floor.
Expansion analytic_transform(const std::function<Rational(unsigned)>& coeffs,
                             const Expansion& u, const Rational& floor);

/// Coefficient of target_base in the reciprocal expansion, by direct
/// enumeration of ordered index tuples. Independent of series_product /
/// reciprocal_expansion; used as their oracle.
Rational oracle_coefficient(const SeriesSpec& spec, const Rational& target_base,
                            unsigned depth_cap);

struct DiffEntry {
    Rational base;
    Rational computed;   // zero when the term is absent on that side
    Rational reference;
};

/// Symmetric difference by base, equal terms omitted, base-descending.
std::vector<DiffEntry> diff_expansions(const Expansion& computed,
                                       const Expansion& reference);

/// Reinterprets an expansion with bases < 1 as a Dirichlet series in 1/base
/// ascending order (used to re-expand composed logarithms).
SeriesSpec expansion_as_series(const Expansion& e, const std::string& name);

}  // namespace lrec

#endif
