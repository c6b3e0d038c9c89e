#pragma once
// Exact truncated graded polynomial calculus: the value type for every
// characteristic class in this project. A base is either formal of
// dimension d (symbols c1..cd standing for the Chern classes of the
// tangent bundle, plus declared degree-1 line symbols such as L and S)
// or a concrete projective space P^n (single hyperplane symbol H, with
// integer H-multiples recorded for each line symbol). The only relation
// is truncation above the base dimension; coefficients are exact
// rationals with unbounded integers.

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "csm/errors.hpp"

namespace csm {

using Rational = boost::multiprecision::cpp_rational;
using Integer  = boost::multiprecision::cpp_int;

struct SymbolInfo {
    std::string name;
    int degree = 1;
};

class ChowClass;

class BaseGeometry : public std::enable_shared_from_this<BaseGeometry> {
public:
    enum class Kind { Formal, Projective };

    // Formal base of dimension d: symbols c1..cd plus the given degree-1
    // line symbols (order matters: slot 0 plays the role of L, slot 1 of S).
    static std::shared_ptr<const BaseGeometry>
    formal(int dim, std::vector<std::string> line_symbols = {"L"});

    // P^n with hyperplane symbol H; each line symbol maps to an integer
    // multiple of H.
    static std::shared_ptr<const BaseGeometry>
    projective(int n, std::vector<std::pair<std::string, int>> line_assignments = {});

    Kind kind() const { return kind_; }
    int dim() const { return dim_; }
    bool concrete() const { return kind_ == Kind::Projective; }
    const std::vector<SymbolInfo>& symbols() const { return symbols_; }
    int symbol_index(std::string_view name) const; // -1 when absent
    int symbol_degree(int idx) const { return symbols_[static_cast<size_t>(idx)].degree; }

    // Line-symbol slots in declaration order.
    const std::vector<std::string>& line_slots() const { return line_slots_; }
    int line_assignment(int slot) const; // Projective only

    ChowClass zero() const;
    ChowClass one() const;
    ChowClass rational(const Rational& r) const;
    ChowClass symbol(std::string_view name) const;
    // The class of the slot-th line symbol: the symbol itself on a formal
    // base, assignment * H on a projective one.
    ChowClass line_class(int slot) const;
    // c(TB): 1 + c1 + ... + cd formally, (1+H)^(n+1) truncated on P^n.
    ChowClass tangent_class() const;

    std::string describe() const;
    bool operator==(const BaseGeometry& o) const;
    bool operator!=(const BaseGeometry& o) const { return !(*this == o); }

private:
    BaseGeometry() = default;
    Kind kind_ = Kind::Formal;
    int dim_ = 0;
    std::vector<SymbolInfo> symbols_;
    std::vector<std::string> line_slots_;
    std::vector<int> assignments_; // parallel to line_slots_, Projective only
};

using BasePtr = std::shared_ptr<const BaseGeometry>;

// Exponent vector over the base symbols, in symbol order. Grading weights
// come from the base, so the map's lexicographic key order is arbitrary
// but deterministic.
using Monomial = std::vector<int>;

int monomial_degree(const BaseGeometry& base, const Monomial& m);

class ChowClass {
public:
    ChowClass() = default; // unbound placeholder; bind before use
    explicit ChowClass(BasePtr base) : base_(std::move(base)) {}

    const BasePtr& base() const { return base_; }
    bool bound() const { return base_ != nullptr; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    int max_degree() const; // largest total degree present, -1 when zero

    // Adds c * m, truncating above the base dimension and dropping zeros.
    ChowClass& add_term(const Monomial& m, const Rational& c);

    ChowClass operator-() const;
    ChowClass& operator+=(const ChowClass& o);
    ChowClass& operator-=(const ChowClass& o);
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { a += b; return a; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { a -= b; return a; }
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator*(const Rational& r, ChowClass a);
    bool operator==(const ChowClass& o) const;
    bool operator!=(const ChowClass& o) const { return !(*this == o); }

private:
    friend void require_same_base(const ChowClass& a, const ChowClass& b);
    BasePtr base_;
    std::map<Monomial, Rational> terms_;
};

// Multiplicative inverse of a class with constant term 1, truncated.
ChowClass series_invert(const ChowClass& a);

// Degree-k homogeneous part (k past the dimension gives zero).
ChowClass degree_component(const ChowClass& a, int k);

// Coefficient of H^n on P^n; error on formal bases.
Rational integrate_top(const ChowClass& a);

// Substitution into a projective target: c_i -> binom(n+1,i) H^i, line
// symbols to their declared H-multiples. Errors when the target lacks an
// image for a symbol that actually occurs.
ChowClass specialize_base(const ChowClass& a, const BasePtr& target);

// Deterministic rendering: terms sorted by total degree, then by exponent
// vector; coefficients as exact rationals.
std::string to_string(const ChowClass& a);

Integer binomial(int n, int k);

} // namespace csm
