#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "residue/numberfield.hpp"
#include "residue/upoly.hpp"

namespace parshin {

// Graded lexicographic order on exponent vectors, s < t (first variable least
// significant in the tie-break so that t-heavy terms sort above).
struct GrlexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// Sparse multivariate polynomial, exact coefficients in Q or one Q(θ).
class MultiPoly {
  public:
    using TermMap = std::map<std::vector<int>, AlgNumber, GrlexLess>;

    explicit MultiPoly(std::vector<std::string> vars = {"s", "t"}) : vars_(std::move(vars)) {}
    MultiPoly(std::vector<std::string> vars, TermMap terms);

    static MultiPoly constant(AlgNumber c, std::vector<std::string> vars = {"s", "t"});
    static MultiPoly variable(const std::string& name,
                              std::vector<std::string> vars = {"s", "t"});

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    bool isConstant() const;
    AlgNumber constantValue() const;  // throws unless constant (or zero)
    long totalDegree() const;         // -1 for zero
    long degreeIn(std::size_t varIndex) const;
    FieldPtr coefficientField() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const AlgNumber& c) const;
    MultiPoly pow(long e) const;
    bool operator==(const MultiPoly& o) const;

    MultiPoly derivative(const std::string& var) const;
    AlgNumber eval(const std::vector<AlgNumber>& point) const;
    // f(x0 + offset0, x1 + offset1, ...)
    MultiPoly shifted(const std::vector<AlgNumber>& offset) const;

    // Leading coefficient under grlex; normalization divides by it.
    AlgNumber leadingCoeff() const;

    // Bivariate views (requires exactly 2 variables). Outer variable is
    // vars()[1] (t), inner coefficients are univariate in vars()[0] (s).
    UPoly<UPoly<AlgNumber>> toRecursive() const;
    static MultiPoly fromRecursive(const UPoly<UPoly<AlgNumber>>& p,
                                   std::vector<std::string> vars);
    MultiPoly swappedVars() const;  // exchange the two variables

    std::optional<MultiPoly> tryDivide(const MultiPoly& d) const;  // exact division

    std::string str() const;  // canonical, parseable when coefficients are rational

  private:
    void insertTerm(std::vector<int> exp, AlgNumber c);
    std::vector<std::string> vars_;
    TermMap terms_;  // no zero coefficients stored
};

// Polynomial expression parser per the grammar:
//   expr   := term (("+"|"-") term)*
//   term   := factor ("*" factor)*          ("/" also allowed in ratfunc mode)
//   factor := base ("^" natural)?
//   base   := rational | variable | "(" expr ")" | "-" base
MultiPoly parseExpression(const std::string& text,
                          std::vector<std::string> vars = {"s", "t"});

struct ParsedRatio {
    MultiPoly num;
    MultiPoly den;
};
// Same grammar with "/" permitted as an operator at any level.
ParsedRatio parseRationalExpression(const std::string& text,
                                    std::vector<std::string> vars = {"s", "t"});

}  // namespace parshin
