#include "ecsum/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace ecsum {

Monomial::Monomial(unsigned arity) : arity_(arity) {
    if (arity == 0 || arity > kMaxVars) {
        throw Error("monomial arity out of range: " + std::to_string(arity));
    }
}

Monomial Monomial::unit(unsigned arity, unsigned var, unsigned exp) {
    Monomial m(arity);
    return m.with_exp(var, exp);
}

unsigned Monomial::exp(unsigned var) const {
    if (var >= arity_) throw Error("monomial variable index out of range");
    return exps_[var];
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned i = 0; i < arity_; ++i) d += exps_[i];
    return d;
}

Monomial Monomial::with_exp(unsigned var, unsigned exp) const {
    if (var >= arity_) throw Error("monomial variable index out of range");
    if (exp > 255) throw Error("monomial exponent overflow");
    Monomial m = *this;
    m.exps_[var] = static_cast<uint8_t>(exp);
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
    if (arity_ != other.arity_) {
        throw ArityMismatchError("monomials over different variable sets");
    }
    Monomial m(arity_);
    for (unsigned i = 0; i < arity_; ++i) {
        const unsigned e = exps_[i] + other.exps_[i];
        if (e > 255) throw Error("monomial exponent overflow");
        m.exps_[i] = static_cast<uint8_t>(e);
    }
    return m;
}

Monomial Monomial::permuted(std::span<const unsigned> perm) const {
    if (perm.size() != arity_) {
        throw ArityMismatchError("permutation size differs from monomial arity");
    }
    Monomial m(arity_);
    for (unsigned i = 0; i < arity_; ++i) {
        if (perm[i] >= arity_) throw Error("bad variable permutation");
        m.exps_[perm[i]] = exps_[i];
    }
    return m;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    if (a.arity_ != b.arity_) {
        throw ArityMismatchError("comparing monomials over different variable sets");
    }
    const unsigned da = a.total_degree();
    const unsigned db = b.total_degree();
    if (da != db) return da < db;
    for (unsigned i = 0; i < a.arity_; ++i) {
        if (a.exps_[i] != b.exps_[i]) return a.exps_[i] < b.exps_[i];
    }
    return false;
}

size_t Monomial::hash() const {
    uint64_t h = 0x9e3779b97f4a7c15ULL ^ arity_;
    for (unsigned i = 0; i < arity_; i += 8) {
        uint64_t word = 0;
        for (unsigned j = i; j < std::min(i + 8, arity_); ++j) {
            word = (word << 8) | exps_[j];
        }
        h ^= word + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        h *= 0xbf58476d1ce4e5b9ULL;
        h ^= h >> 29;
    }
    return static_cast<size_t>(h);
}

SparsePolynomial::SparsePolynomial(unsigned arity) : arity_(arity) {
    if (arity == 0 || arity > Monomial::kMaxVars) {
        throw Error("polynomial arity out of range");
    }
}

SparsePolynomial SparsePolynomial::constant(unsigned arity, const mpq_class& value) {
    SparsePolynomial f(arity);
    if (value != 0) {
        f.terms_.push_back({Monomial(arity), value});
    }
    return f;
}

SparsePolynomial SparsePolynomial::variable(unsigned arity, unsigned var) {
    SparsePolynomial f(arity);
    f.terms_.push_back({Monomial::unit(arity, var), mpq_class(1)});
    return f;
}

SparsePolynomial SparsePolynomial::from_terms(unsigned arity, std::vector<Term> terms) {
    SparsePolynomial f(arity);
    f.terms_ = std::move(terms);
    for (const Term& t : f.terms_) {
        if (t.mono.arity() != arity) {
            throw ArityMismatchError("term arity differs from polynomial arity");
        }
    }
    f.normalize();
    return f;
}

void SparsePolynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return grlex_less(b.mono, a.mono); });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!merged.empty() && merged.back().mono == t.mono) {
            merged.back().coeff += t.coeff;
            if (merged.back().coeff == 0) merged.pop_back();
        } else if (t.coeff != 0) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

namespace {

void require_same_arity(const SparsePolynomial& f, const SparsePolynomial& g) {
    if (f.arity() != g.arity()) {
        throw ArityMismatchError("polynomials over different variable sets");
    }
}

// Merge of two canonical (grlex-descending) term lists.
SparsePolynomial merge(const SparsePolynomial& f, const SparsePolynomial& g, bool subtract) {
    const auto& ft = f.terms();
    const auto& gt = g.terms();
    std::vector<SparsePolynomial::Term> out;
    out.reserve(ft.size() + gt.size());
    size_t i = 0;
    size_t j = 0;
    while (i < ft.size() || j < gt.size()) {
        if (j == gt.size() || (i < ft.size() && grlex_less(gt[j].mono, ft[i].mono))) {
            out.push_back(ft[i++]);
        } else if (i == ft.size() || grlex_less(ft[i].mono, gt[j].mono)) {
            mpq_class c = subtract ? mpq_class(-gt[j].coeff) : gt[j].coeff;
            out.push_back({gt[j].mono, std::move(c)});
            ++j;
        } else {
            mpq_class c = subtract ? mpq_class(ft[i].coeff - gt[j].coeff)
                                   : mpq_class(ft[i].coeff + gt[j].coeff);
            if (c != 0) out.push_back({ft[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return SparsePolynomial::from_terms(f.arity(), std::move(out));
}

}  // namespace

SparsePolynomial operator+(const SparsePolynomial& f, const SparsePolynomial& g) {
    require_same_arity(f, g);
    return merge(f, g, false);
}

SparsePolynomial operator-(const SparsePolynomial& f, const SparsePolynomial& g) {
    require_same_arity(f, g);
    return merge(f, g, true);
}

SparsePolynomial operator*(const SparsePolynomial& f, const SparsePolynomial& g) {
    require_same_arity(f, g);
    if (f.is_zero() || g.is_zero()) return SparsePolynomial(f.arity());
    std::unordered_map<Monomial, mpq_class, MonomialHash> acc;
    acc.reserve(f.term_count() + g.term_count());
    for (const auto& ft : f.terms()) {
        for (const auto& gt : g.terms()) {
            acc[ft.mono * gt.mono] += ft.coeff * gt.coeff;
        }
    }
    std::vector<SparsePolynomial::Term> terms;
    terms.reserve(acc.size());
    for (auto& [mono, coeff] : acc) {
        if (coeff != 0) terms.push_back({mono, std::move(coeff)});
    }
    return SparsePolynomial::from_terms(f.arity(), std::move(terms));
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial f(arity_);
    f.terms_ = terms_;
    for (Term& t : f.terms_) t.coeff = -t.coeff;
    return f;
}

SparsePolynomial SparsePolynomial::pow(unsigned e) const {
    SparsePolynomial acc = constant(arity_, 1);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

SparsePolynomial operator*(const mpq_class& c, const SparsePolynomial& f) {
    if (c == 0) return SparsePolynomial(f.arity());
    std::vector<SparsePolynomial::Term> terms = f.terms();
    for (auto& t : terms) t.coeff *= c;
    return SparsePolynomial::from_terms(f.arity(), std::move(terms));
}

SparsePolynomial SparsePolynomial::permuted(std::span<const unsigned> perm) const {
    std::vector<Term> terms;
    terms.reserve(terms_.size());
    for (const Term& t : terms_) {
        terms.push_back({t.mono.permuted(perm), t.coeff});
    }
    return from_terms(arity_, std::move(terms));
}

unsigned SparsePolynomial::total_degree() const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

unsigned SparsePolynomial::degree_in(unsigned var) const {
    unsigned d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.exp(var));
    return d;
}

FieldValue SparsePolynomial::evaluate(std::span<const FieldValue> assignment) const {
    if (assignment.size() != arity_) {
        throw ArityMismatchError("assignment size differs from polynomial arity");
    }
    const Field& f = assignment[0].field();
    FieldValue acc = f.zero();
    for (const Term& t : terms_) {
        FieldValue v = f.is_rationals()
                           ? f.from_fraction(t.coeff.get_num(), t.coeff.get_den())
                           : f.from_integer(t.coeff.get_num()) / f.from_integer(t.coeff.get_den());
        for (unsigned i = 0; i < arity_; ++i) {
            const unsigned e = t.mono.exp(i);
            if (e > 0) v = v * assignment[i].pow(e);
        }
        acc = acc + v;
    }
    return acc;
}

std::string SparsePolynomial::to_string(std::span<const std::string> names) const {
    if (names.size() != arity_) {
        throw ArityMismatchError("name list size differs from polynomial arity");
    }
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t k = 0; k < terms_.size(); ++k) {
        const Term& t = terms_[k];
        mpq_class c = t.coeff;
        if (k == 0) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        std::string vars;
        for (unsigned i = 0; i < arity_; ++i) {
            const unsigned e = t.mono.exp(i);
            if (e == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += names[i];
            if (e > 1) vars += "^" + std::to_string(e);
        }
        if (vars.empty()) {
            out += c.get_str();
        } else {
            if (c != 1) out += c.get_str() + "*";
            out += vars;
        }
    }
    return out;
}

bool operator==(const SparsePolynomial& f, const SparsePolynomial& g) {
    if (f.arity_ != g.arity_ || f.terms_.size() != g.terms_.size()) return false;
    for (size_t i = 0; i < f.terms_.size(); ++i) {
        if (!(f.terms_[i].mono == g.terms_[i].mono) ||
            f.terms_[i].coeff != g.terms_[i].coeff) {
            return false;
        }
    }
    return true;
}

}  // namespace ecsum
