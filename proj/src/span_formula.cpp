#include "radiopath/span_formula.hpp"

#include <string>

namespace radiopath {

namespace {

int64_t exact_div(int64_t num, int64_t den, const char* what) {
    if (num % den != 0)
        throw std::logic_error(std::string(what) + ": division by " +
                               std::to_string(den) + " is not exact");
    return num / den;
}

}  // namespace

CaseTag case_of(int n, int m) {
    const PathPowerGraph g(n, m);
    return CaseTag{
        g.diameter() % 2 == 0 ? DiamParity::Even : DiamParity::Odd,
        n % m == 0 ? Divisibility::Divides : Divisibility::NotDivides,
    };
}

std::string to_string(const CaseTag& tag) {
    std::string s = tag.parity == DiamParity::Even ? "even-" : "odd-";
    s += tag.divisibility == Divisibility::Divides ? "divides" : "not-divides";
    return s;
}

int parity_epsilon(DiamParity parity) { return parity == DiamParity::Even ? 1 : 0; }

int parity_epsilon(const PathPowerGraph& g) {
    return g.diameter() % 2 == 0 ? 1 : 0;
}

bool hypothesis_holds(int n, int m, int k) {
    const int diam = PathPowerGraph(n, m).diameter();
    return diam % 2 == 0 ? k > diam : k > diam + 1;
}

int hypothesis_min_k(int n, int m) {
    const int diam = PathPowerGraph(n, m).diameter();
    return diam % 2 == 0 ? diam + 1 : diam + 2;
}

int64_t alpha1(int n, int m, int k) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    const Layering ly{PathPowerGraph(n, m)};
    const int64_t nn = n, mm = m, s = ly.s_layer();
    const int64_t num = ly.diam_even() ? nn * nn + mm * mm - s * s : nn * nn - s * s;
    return nn * k - exact_div(num, 2 * mm, "alpha1");
}

int64_t alpha2_lower_bound(int n, int m) {
    const CaseTag tag = case_of(n, m);
    if (tag.parity == DiamParity::Odd)
        return tag.divisibility == Divisibility::Divides ? 0 : 1;
    if (tag.divisibility == Divisibility::Divides) return 1;
    return static_cast<int64_t>(m) - n % m + 1;
}

std::string to_string(FormulaVariant v) {
    return v == FormulaVariant::Consistent ? "consistent" : "as-printed";
}

FormulaVariant variant_from_string(const std::string& s) {
    if (s == "consistent") return FormulaVariant::Consistent;
    if (s == "as-printed") return FormulaVariant::AsPrinted;
    throw std::invalid_argument("unknown variant '" + s + "' (expected consistent or as-printed)");
}

SpanFormulaResult closed_form_span(int n, int m, int k, FormulaVariant variant, bool checked) {
    if (k < 1) throw std::invalid_argument("k must be a positive integer");
    const bool hyp = hypothesis_holds(n, m, k);
    if (checked && !hyp)
        throw HypothesisError("k = " + std::to_string(k) + " is below the certified threshold " +
                              std::to_string(hypothesis_min_k(n, m)) + " for n = " +
                              std::to_string(n) + ", m = " + std::to_string(m));

    const CaseTag tag = case_of(n, m);
    const int64_t nn = n, mm = m, s = n % m;

    int64_t value = 0;
    if (tag.parity == DiamParity::Odd) {
        if (tag.divisibility == Divisibility::Divides)
            value = nn * k - exact_div(nn * nn - mm * mm, 2 * mm, "closed form, odd/divides");
        else
            value = nn * k - exact_div(nn * nn - s * s, 2 * mm, "closed form, odd/not-divides") + 1;
    } else {
        if (tag.divisibility == Divisibility::Divides) {
            value = nn * k - exact_div(nn * nn, 2 * mm, "closed form, even/divides") + 1;
        } else {
            const int64_t corr = variant == FormulaVariant::Consistent ? mm - s : mm + s;
            value = nn * k -
                    exact_div(nn * nn - corr * corr, 2 * mm, "closed form, even/not-divides") + 1;
        }
    }

    return SpanFormulaResult{value,    tag,     alpha1(n, m, k),
                             alpha2_lower_bound(n, m), variant, hyp};
}

}  // namespace radiopath
