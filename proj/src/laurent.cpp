#include "hivebr/laurent.hpp"

namespace hivebr {

LaurentPolynomial LaurentPolynomial::monomial(Exponents exps, Int coeff) {
    LaurentPolynomial p(exps.size());
    p.add_term(exps, coeff);
    return p;
}

Int LaurentPolynomial::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(const Exponents& e, Int coeff) {
    if (coeff == 0) return;
    if (e.size() != nvars_)
        throw error(errc::invalid_argument, "exponent vector has the wrong arity");
    auto [it, inserted] = terms_.emplace(e, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& other) const {
    LaurentPolynomial out(nvars_);
    Exponents sum(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : other.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) sum[i] = ea[i] + eb[i];
            out.add_term(sum, ca * cb);
        }
    return out;
}

} // namespace hivebr
