#include "csm/ring.hpp"

#include <algorithm>
#include <sstream>

namespace csm {

std::shared_ptr<const BaseGeometry>
BaseGeometry::formal(int dim, std::vector<std::string> line_symbols) {
    if (dim < 0)
        throw ConfigError("formal base dimension must be >= 0");
    auto b = std::shared_ptr<BaseGeometry>(new BaseGeometry());
    b->kind_ = Kind::Formal;
    b->dim_ = dim;
    for (int i = 1; i <= dim; ++i)
        b->symbols_.push_back({"c" + std::to_string(i), i});
    for (auto& s : line_symbols) {
        if (b->symbol_index(s) >= 0)
            throw ConfigError("duplicate symbol name: " + s);
        b->symbols_.push_back({s, 1});
        b->line_slots_.push_back(std::move(s));
    }
    return b;
}

std::shared_ptr<const BaseGeometry>
BaseGeometry::projective(int n, std::vector<std::pair<std::string, int>> line_assignments) {
    if (n < 0)
        throw ConfigError("projective base dimension must be >= 0");
    auto b = std::shared_ptr<BaseGeometry>(new BaseGeometry());
    b->kind_ = Kind::Projective;
    b->dim_ = n;
    b->symbols_.push_back({"H", 1});
    for (auto& [name, mult] : line_assignments) {
        b->line_slots_.push_back(name);
        b->assignments_.push_back(mult);
    }
    return b;
}

int BaseGeometry::symbol_index(std::string_view name) const {
    for (size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name == name)
            return static_cast<int>(i);
    return -1;
}

int BaseGeometry::line_assignment(int slot) const {
    if (kind_ != Kind::Projective)
        throw ConfigError("line_assignment is only meaningful on a projective base");
    if (slot < 0 || slot >= static_cast<int>(assignments_.size()))
        throw MissingAssignmentError("no assignment for line symbol slot " + std::to_string(slot));
    return assignments_[static_cast<size_t>(slot)];
}

ChowClass BaseGeometry::zero() const {
    return ChowClass(shared_from_this());
}

ChowClass BaseGeometry::one() const {
    return rational(1);
}

ChowClass BaseGeometry::rational(const Rational& r) const {
    ChowClass c(shared_from_this());
    c.add_term(Monomial(symbols_.size(), 0), r);
    return c;
}

ChowClass BaseGeometry::symbol(std::string_view name) const {
    int idx = symbol_index(name);
    if (idx < 0)
        throw MissingAssignmentError("unknown symbol: " + std::string(name));
    ChowClass c(shared_from_this());
    Monomial m(symbols_.size(), 0);
    m[static_cast<size_t>(idx)] = 1;
    c.add_term(m, 1);
    return c;
}

ChowClass BaseGeometry::line_class(int slot) const {
    if (slot < 0 || slot >= static_cast<int>(line_slots_.size()))
        throw MissingAssignmentError("no line symbol in slot " + std::to_string(slot));
    if (kind_ == Kind::Formal)
        return symbol(line_slots_[static_cast<size_t>(slot)]);
    return Rational(line_assignment(slot)) * symbol("H");
}

ChowClass BaseGeometry::tangent_class() const {
    ChowClass t = one();
    if (kind_ == Kind::Formal) {
        for (int i = 1; i <= dim_; ++i)
            t += symbol("c" + std::to_string(i));
        return t;
    }
    // (1+H)^(n+1), truncated at H^n by add_term
    ChowClass h = symbol("H");
    ChowClass result = one();
    ChowClass pow = one();
    for (int i = 1; i <= dim_ + 1; ++i) {
        pow = pow * h;
        result += Rational(binomial(dim_ + 1, i)) * pow;
    }
    return result;
}

std::string BaseGeometry::describe() const {
    std::ostringstream os;
    if (kind_ == Kind::Formal) {
        os << "formal(d=" << dim_;
        for (auto& s : line_slots_)
            os << "," << s;
        os << ")";
    } else {
        os << "P" << dim_;
        for (size_t i = 0; i < line_slots_.size(); ++i)
            os << " " << line_slots_[i] << "=" << assignments_[i];
    }
    return os.str();
}

bool BaseGeometry::operator==(const BaseGeometry& o) const {
    if (kind_ != o.kind_ || dim_ != o.dim_)
        return false;
    if (symbols_.size() != o.symbols_.size())
        return false;
    for (size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i].name != o.symbols_[i].name || symbols_[i].degree != o.symbols_[i].degree)
            return false;
    return line_slots_ == o.line_slots_ && assignments_ == o.assignments_;
}

int monomial_degree(const BaseGeometry& base, const Monomial& m) {
    int deg = 0;
    for (size_t i = 0; i < m.size(); ++i)
        deg += m[i] * base.symbols()[i].degree;
    return deg;
}

void require_same_base(const ChowClass& a, const ChowClass& b) {
    if (!a.bound() || !b.bound())
        throw BaseMismatchError("operation on an unbound class");
    if (a.base_ != b.base_ && *a.base_ != *b.base_)
        throw BaseMismatchError("operands live over different bases");
}

Rational ChowClass::constant_term() const {
    if (!bound())
        return 0;
    return coefficient(Monomial(base_->symbols().size(), 0));
}

Rational ChowClass::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int ChowClass::max_degree() const {
    int deg = -1;
    for (auto& [m, c] : terms_)
        deg = std::max(deg, monomial_degree(*base_, m));
    return deg;
}

ChowClass& ChowClass::add_term(const Monomial& m, const Rational& c) {
    if (c == 0)
        return *this;
    if (m.size() != base_->symbols().size())
        throw BaseMismatchError("monomial length does not match base symbol count");
    if (monomial_degree(*base_, m) > base_->dim())
        return *this; // truncated
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
    return *this;
}

ChowClass ChowClass::operator-() const {
    ChowClass r(base_);
    for (auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
    require_same_base(*this, o);
    for (auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
    require_same_base(*this, o);
    for (auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    require_same_base(a, b);
    ChowClass r(a.base_);
    const auto& base = *a.base_;
    for (auto& [ma, ca] : a.terms_) {
        int da = monomial_degree(base, ma);
        for (auto& [mb, cb] : b.terms_) {
            if (da + monomial_degree(base, mb) > base.dim())
                continue;
            Monomial m = ma;
            for (size_t i = 0; i < m.size(); ++i)
                m[i] += mb[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

ChowClass operator*(const Rational& r, ChowClass a) {
    if (r == 0)
        return ChowClass(a.base());
    for (auto& [m, c] : a.terms_)
        c *= r;
    return a;
}

bool ChowClass::operator==(const ChowClass& o) const {
    require_same_base(*this, o);
    return terms_ == o.terms_;
}

ChowClass series_invert(const ChowClass& a) {
    if (!a.bound())
        throw BaseMismatchError("series_invert of an unbound class");
    if (a.constant_term() != 1)
        throw NonUnitError("series_invert requires constant term 1");
    // 1/(1+x) = sum (-x)^k; x has positive degree, so the sum stops at dim.
    ChowClass x = a - a.base()->one();
    ChowClass result = a.base()->one();
    ChowClass pow = a.base()->one();
    for (int k = 1; k <= a.base()->dim() && !pow.is_zero(); ++k) {
        pow = pow * x;
        result += (k % 2 ? Rational(-1) : Rational(1)) * pow;
    }
    return result;
}

ChowClass degree_component(const ChowClass& a, int k) {
    if (!a.bound())
        throw BaseMismatchError("degree_component of an unbound class");
    if (k < 0)
        throw ConfigError("degree_component needs k >= 0");
    ChowClass r(a.base());
    for (auto& [m, c] : a.terms())
        if (monomial_degree(*a.base(), m) == k)
            r.add_term(m, c);
    return r;
}

Rational integrate_top(const ChowClass& a) {
    if (!a.bound())
        throw BaseMismatchError("integrate_top of an unbound class");
    if (!a.base()->concrete())
        throw NoIntegrationError("integration requires a projective base");
    Monomial top(a.base()->symbols().size(), 0);
    top[0] = a.base()->dim();
    return a.coefficient(top);
}

ChowClass specialize_base(const ChowClass& a, const BasePtr& target) {
    if (!a.bound())
        throw BaseMismatchError("specialize_base of an unbound class");
    if (!target || !target->concrete())
        throw ConfigError("specialization target must be a projective base");
    const auto& src = *a.base();
    if (src.concrete())
        throw ConfigError("specialize_base expects a formal source base");
    int n = target->dim();

    // Scalar image of each source symbol: c_i -> binom(n+1,i) (with H^i),
    // line symbols to their target assignment (with H). Degrees of symbol
    // and image match, so the H-power of a monomial image is its total
    // degree. A line symbol with no target assignment is an error, but
    // only when it actually occurs in a term.
    std::vector<Rational> factor(src.symbols().size());
    std::vector<bool> has_image(src.symbols().size(), true);
    for (size_t i = 0; i < src.symbols().size(); ++i) {
        const auto& sym = src.symbols()[i];
        bool is_line = std::find(src.line_slots().begin(), src.line_slots().end(), sym.name)
                       != src.line_slots().end();
        if (!is_line) {
            factor[i] = Rational(binomial(n + 1, sym.degree));
            continue;
        }
        has_image[i] = false;
        for (size_t k = 0; k < target->line_slots().size(); ++k) {
            if (target->line_slots()[k] == sym.name) {
                factor[i] = target->line_assignment(static_cast<int>(k));
                has_image[i] = true;
                break;
            }
        }
    }

    ChowClass r(target);
    size_t tlen = target->symbols().size();
    for (auto& [m, c] : a.terms()) {
        Rational coeff = c;
        int hpow = 0;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!has_image[i])
                throw MissingAssignmentError("no image for symbol " + src.symbols()[i].name +
                                             " on " + target->describe());
            for (int e = 0; e < m[i]; ++e)
                coeff *= factor[i];
            hpow += m[i] * src.symbols()[i].degree;
        }
        if (hpow > n || coeff == 0)
            continue;
        Monomial tm(tlen, 0);
        tm[0] = hpow;
        r.add_term(tm, coeff);
    }
    return r;
}

std::string to_string(const ChowClass& a) {
    if (!a.bound())
        return "<unbound>";
    if (a.is_zero())
        return "0";
    std::vector<std::pair<Monomial, Rational>> sorted(a.terms().begin(), a.terms().end());
    std::sort(sorted.begin(), sorted.end(), [&](const auto& x, const auto& y) {
        int dx = monomial_degree(*a.base(), x.first);
        int dy = monomial_degree(*a.base(), y.first);
        if (dx != dy)
            return dx < dy;
        return x.first < y.first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto& [m, c] : sorted) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool any_sym = false;
        std::ostringstream mono;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (any_sym)
                mono << "*";
            mono << a.base()->symbols()[i].name;
            if (m[i] > 1)
                mono << "^" << m[i];
            any_sym = true;
        }
        if (!any_sym) {
            os << abs;
        } else {
            if (abs != 1)
                os << abs << "*";
            os << mono.str();
        }
    }
    return os.str();
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    Integer r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

} // namespace csm
