#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qsing {

using Rational = mpq_class;

/// Element of Q(zeta_88) over the power basis {zeta^k : 0 <= k < 40} modulo
/// Phi_88(x) = Phi_11(-x^4) = sum_{k=0}^{10} (-1)^k x^{4k}. Always fully
/// reduced; equality is coefficient equality. The field contains every scalar
/// the O11 generators need: lambda = zeta^4 (order 22), an 8th root zeta^11,
/// i = zeta^22, and sqrt(2) = zeta^11 + zeta^77.
class Cyclotomic {
public:
    static constexpr int kDegree = 40;

    Cyclotomic() : c_(kDegree) {}
    explicit Cyclotomic(const Rational& r) : c_(kDegree) { c_[0] = r; }
    explicit Cyclotomic(long v) : c_(kDegree) { c_[0] = v; }

    // zeta_88^k for any integer k, reduced into the power basis.
    static Cyclotomic root_power(long k);

    const Rational& coeff(int k) const { return c_[k]; }
    Rational& coeff(int k) { return c_[k]; }

    bool is_zero() const;
    bool is_rational() const;

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator*(const Rational& r) const;
    Cyclotomic& operator+=(const Cyclotomic& o);

    Cyclotomic pow(long e) const;

    bool operator==(const Cyclotomic& o) const { return c_ == o.c_; }

    std::string str() const;

private:
    std::vector<Rational> c_;
};

struct Matrix2 {
    Cyclotomic a, b, c, d;  // row major: [[a, b], [c, d]]

    static Matrix2 identity();
    Matrix2 operator*(const Matrix2& o) const;
    Matrix2 pow(long e) const;
    Cyclotomic det() const;
    bool operator==(const Matrix2& o) const = default;
};

/// Sparse element of Q(zeta_88)[u,v]; no zero coefficients stored, terms kept
/// in graded-lex order on (i, j).
class Poly2 {
public:
    struct GradedLex {
        bool operator()(const std::pair<int, int>& x, const std::pair<int, int>& y) const {
            int dx = x.first + x.second, dy = y.first + y.second;
            if (dx != dy) return dx < dy;
            return x < y;
        }
    };
    using Terms = std::map<std::pair<int, int>, Cyclotomic, GradedLex>;

    Poly2() = default;
    static Poly2 monomial(int i, int j, Cyclotomic coeff);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const;  // total degree; -1 for the zero polynomial

    void add_term(int i, int j, const Cyclotomic& coeff);

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    Poly2 scaled(const Cyclotomic& s) const;
    Poly2 pow(long e) const;

    bool operator==(const Poly2& o) const { return t_ == o.t_; }

private:
    Terms t_;
};

// p(M11 u + M12 v, M21 u + M22 v), fully expanded and canonical.
Poly2 substitute(const Poly2& p, const Matrix2& m);

bool is_invariant(const Poly2& p, const Matrix2& m);

// substitute(p, m) == det(m) * p
bool is_semi_invariant(const Poly2& p, const Matrix2& m);

namespace o11 {

// Generators of the group and of the invariant theory data from the E7 story.
Matrix2 phi();   // diag(lambda, lambda), lambda of order 22
Matrix2 psi();   // diag(zeta, zeta^-1), zeta of order 8
Matrix2 tau();   // [[0, i], [i, 0]]
Matrix2 eta();   // (1/sqrt 2) [[zeta, zeta^3], [zeta, zeta^7]]

Poly2 g1();  // (u^5 v - u v^5)^2
Poly2 g2();  // uv (u^4 - v^4)(u^12 - 33 u^8 v^4 - 33 u^4 v^8 + v^12)
Poly2 g3();  // u^8 + 14 u^4 v^4 + v^8
Poly2 f();   // g3^3, the canonical element
std::vector<Poly2> z();  // z1..z6, generators of the maximal ideal

struct CheckResult {
    std::string name;
    bool passed;
};

// Machine check of every polynomial identity in the nearly-Gorenstein proof
// for the octahedral singularity: determinants, the order of phi, invariance
// of g1..g3 and z1..z6, semi-invariance of f, divisibility of z1,z2,z4,z6 by
// f via explicit cofactors, and the cross-multiplied ratio identity.
std::vector<CheckResult> verify();

std::string report_json(const std::vector<CheckResult>& checks);

}  // namespace o11
}  // namespace qsing
