#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "radiopath/path_power.hpp"

namespace radiopath {

// Thrown when an operation that is only certified for large enough k is
// invoked below that threshold without an explicit unchecked request.
struct HypothesisError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class DiamParity { Even, Odd };
enum class Divisibility { Divides, NotDivides };

// One of the four regimes of the closed-form span: diameter parity
// crossed with whether m divides n.
struct CaseTag {
    DiamParity parity;
    Divisibility divisibility;

    bool operator==(const CaseTag&) const = default;
};

CaseTag case_of(int n, int m);

// "even-divides", "even-not-divides", "odd-divides", "odd-not-divides"
std::string to_string(const CaseTag& tag);

// The parity constant in the consecutive-gap bound
// gap >= k - f(u) - f(v) + epsilon: 1 for even diameter, 0 for odd.
int parity_epsilon(DiamParity parity);
int parity_epsilon(const PathPowerGraph& g);

// True iff k is large enough for the closed form and the construction to
// be certified: k > diam for even diameters, k > diam + 1 for odd ones.
bool hypothesis_holds(int n, int m, int k);

// Smallest k for which hypothesis_holds(n, m, k) is true.
int hypothesis_min_k(int n, int m);

// Instance-constant part of the span lower bound:
//   n(k+1) - 2 * sum_i i*|L_i|   (even diameter)
//   n k    - 2 * sum_i i*|L_i|   (odd diameter)
// evaluated in closed form; the internal division by 2m is exact and is
// asserted (a remainder would indicate a layering bug).
int64_t alpha1(int n, int m, int k);

// Coloring-independent floor of the alpha_2 term: 0 / 1 / 1 / m-s+1 for
// (odd,divides) / (odd,not) / (even,divides) / (even,not), s = n mod m.
int64_t alpha2_lower_bound(int n, int m);

enum class FormulaVariant { Consistent, AsPrinted };

std::string to_string(FormulaVariant v);
FormulaVariant variant_from_string(const std::string& s);

struct SpanFormulaResult {
    int64_t value = 0;
    CaseTag case_tag{};
    int64_t alpha1 = 0;
    int64_t alpha2_lower_bound = 0;
    FormulaVariant variant = FormulaVariant::Consistent;
    bool hypothesis_holds = false;
};

// Four-case closed form for the minimum span, with s = n mod m:
//   odd diam,  m | n:   nk - (n^2 - m^2) / 2m
//   odd diam,  m ∤ n:   nk - (n^2 - s^2) / 2m + 1
//   even diam, m | n:   nk - n^2 / 2m + 1
//   even diam, m ∤ n:   nk - (n^2 - (m-s)^2) / 2m + 1      [Consistent]
//                       nk - (n^2 - (m+s)^2) / 2m + 1      [AsPrinted]
//
// The two variants differ only in the last case; Consistent always equals
// alpha1 + alpha2_lower_bound and matches the exact search, while AsPrinted
// reproduces a known misprint and overshoots that case by 2s.
//
// Throws HypothesisError when checked and the k-threshold fails.
SpanFormulaResult closed_form_span(int n, int m, int k,
                                   FormulaVariant variant = FormulaVariant::Consistent,
                                   bool checked = true);

}  // namespace radiopath
