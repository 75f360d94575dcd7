#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "hivebr/partition.hpp"

namespace hivebr {

// Multivariate Laurent polynomial over the integers with a fixed number of
// variables. Terms are keyed by exponent vectors under lexicographic order,
// so the lex-greatest term is terms().rbegin(). No zero coefficients stored.
class LaurentPolynomial {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Int>;

    explicit LaurentPolynomial(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPolynomial monomial(Exponents exps, Int coeff);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Int coefficient(const Exponents& e) const;

    void add_term(const Exponents& e, Int coeff);
    LaurentPolynomial& operator+=(const LaurentPolynomial& other);
    LaurentPolynomial& operator-=(const LaurentPolynomial& other);
    LaurentPolynomial operator*(const LaurentPolynomial& other) const;

private:
    std::size_t nvars_;
    TermMap terms_;
};

} // namespace hivebr
