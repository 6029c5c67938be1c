#include "qsing/cyclotomic.hpp"

#include <sstream>

#include <json.hpp>

namespace qsing {

namespace {

// Reduce a coefficient array of degree < 79 modulo Phi_88. The relation is
// x^40 = sum_{j=0}^{9} (-1)^{j+1} x^{4j}.
void reduce(std::vector<Rational>& c) {
    for (int k = static_cast<int>(c.size()) - 1; k >= Cyclotomic::kDegree; --k) {
        if (sgn(c[k]) == 0) continue;
        Rational v = c[k];
        c[k] = 0;
        for (int j = 0; j < 10; ++j) {
            if (j % 2 == 0) c[k - 40 + 4 * j] -= v;
            else c[k - 40 + 4 * j] += v;
        }
    }
    c.resize(Cyclotomic::kDegree);
}

}  // namespace

Cyclotomic Cyclotomic::root_power(long k) {
    k %= 88;
    if (k < 0) k += 88;
    std::vector<Rational> c(k + 1);
    c[k] = 1;
    if (k >= kDegree) reduce(c);
    c.resize(kDegree);
    Cyclotomic out;
    for (int i = 0; i < kDegree; ++i) out.c_[i] = c[i];
    return out;
}

bool Cyclotomic::is_zero() const {
    for (const auto& x : c_)
        if (sgn(x) != 0) return false;
    return true;
}

bool Cyclotomic::is_rational() const {
    for (int i = 1; i < kDegree; ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    Cyclotomic out;
    for (int i = 0; i < kDegree; ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
    for (int i = 0; i < kDegree; ++i) c_[i] += o.c_[i];
    return *this;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
    Cyclotomic out;
    for (int i = 0; i < kDegree; ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out;
    for (int i = 0; i < kDegree; ++i) out.c_[i] = -c_[i];
    return out;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    std::vector<Rational> prod(2 * kDegree - 1);
    for (int i = 0; i < kDegree; ++i) {
        if (sgn(c_[i]) == 0) continue;
        for (int j = 0; j < kDegree; ++j) {
            if (sgn(o.c_[j]) == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    reduce(prod);
    Cyclotomic out;
    for (int i = 0; i < kDegree; ++i) out.c_[i] = prod[i];
    return out;
}

Cyclotomic Cyclotomic::operator*(const Rational& r) const {
    Cyclotomic out;
    if (sgn(r) == 0) return out;
    for (int i = 0; i < kDegree; ++i) out.c_[i] = c_[i] * r;
    return out;
}

Cyclotomic Cyclotomic::pow(long e) const {
    Cyclotomic out(1);
    Cyclotomic base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) out = out * base;
        if (e > 1) base = base * base;
    }
    return out;
}

std::string Cyclotomic::str() const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < kDegree; ++i) {
        if (sgn(c_[i]) == 0) continue;
        if (!first) out << " + ";
        out << c_[i];
        if (i > 0) out << "*z^" << i;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

Matrix2 Matrix2::identity() {
    return {Cyclotomic(1), Cyclotomic(0), Cyclotomic(0), Cyclotomic(1)};
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

Matrix2 Matrix2::pow(long e) const {
    Matrix2 out = identity();
    Matrix2 base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) out = out * base;
        if (e > 1) base = base * base;
    }
    return out;
}

Cyclotomic Matrix2::det() const {
    return a * d - b * c;
}

Poly2 Poly2::monomial(int i, int j, Cyclotomic coeff) {
    Poly2 p;
    if (!coeff.is_zero()) p.t_.emplace(std::make_pair(i, j), std::move(coeff));
    return p;
}

int Poly2::degree() const {
    if (t_.empty()) return -1;
    auto last = std::prev(t_.end());
    return last->first.first + last->first.second;
}

void Poly2::add_term(int i, int j, const Cyclotomic& coeff) {
    auto key = std::make_pair(i, j);
    auto it = t_.find(key);
    if (it == t_.end()) {
        if (!coeff.is_zero()) t_.emplace(key, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) t_.erase(it);
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 out = *this;
    for (const auto& [e, c] : o.t_) out.add_term(e.first, e.second, c);
    return out;
}

Poly2 Poly2::operator-(const Poly2& o) const {
    Poly2 out = *this;
    for (const auto& [e, c] : o.t_) out.add_term(e.first, e.second, -c);
    return out;
}

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 out;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_)
            out.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return out;
}

Poly2 Poly2::scaled(const Cyclotomic& s) const {
    Poly2 out;
    if (s.is_zero()) return out;
    for (const auto& [e, c] : t_) out.add_term(e.first, e.second, c * s);
    return out;
}

Poly2 Poly2::pow(long e) const {
    Poly2 out = monomial(0, 0, Cyclotomic(1));
    Poly2 base = *this;
    for (; e > 0; e >>= 1) {
        if (e & 1) out = out * base;
        if (e > 1) base = base * base;
    }
    return out;
}

Poly2 substitute(const Poly2& p, const Matrix2& m) {
    int max_u = 0, max_v = 0;
    for (const auto& [e, c] : p.terms()) {
        max_u = std::max(max_u, e.first);
        max_v = std::max(max_v, e.second);
    }
    const Poly2 pu = Poly2::monomial(1, 0, m.a) + Poly2::monomial(0, 1, m.b);
    const Poly2 pv = Poly2::monomial(1, 0, m.c) + Poly2::monomial(0, 1, m.d);
    std::vector<Poly2> upow(max_u + 1), vpow(max_v + 1);
    upow[0] = Poly2::monomial(0, 0, Cyclotomic(1));
    vpow[0] = upow[0];
    for (int i = 1; i <= max_u; ++i) upow[i] = upow[i - 1] * pu;
    for (int j = 1; j <= max_v; ++j) vpow[j] = vpow[j - 1] * pv;
    Poly2 out;
    for (const auto& [e, c] : p.terms())
        out = out + (upow[e.first] * vpow[e.second]).scaled(c);
    return out;
}

bool is_invariant(const Poly2& p, const Matrix2& m) {
    return substitute(p, m) == p;
}

bool is_semi_invariant(const Poly2& p, const Matrix2& m) {
    return substitute(p, m) == p.scaled(m.det());
}

namespace o11 {

namespace {

Poly2 mono(int i, int j, long c) {
    return Poly2::monomial(i, j, Cyclotomic(c));
}

}  // namespace

Matrix2 phi() {
    Cyclotomic l = Cyclotomic::root_power(4);
    return {l, Cyclotomic(0), Cyclotomic(0), l};
}

Matrix2 psi() {
    return {Cyclotomic::root_power(11), Cyclotomic(0), Cyclotomic(0),
            Cyclotomic::root_power(-11)};
}

Matrix2 tau() {
    Cyclotomic i = Cyclotomic::root_power(22);
    return {Cyclotomic(0), i, i, Cyclotomic(0)};
}

Matrix2 eta() {
    // 1/sqrt2 = (zeta + zeta^-1)/2 with zeta = zeta_88^11
    Cyclotomic inv_sqrt2 =
        (Cyclotomic::root_power(11) + Cyclotomic::root_power(-11)) * Rational(1, 2);
    auto zp = [](long k) { return Cyclotomic::root_power(11 * k); };
    return {zp(1) * inv_sqrt2, zp(3) * inv_sqrt2, zp(1) * inv_sqrt2, zp(7) * inv_sqrt2};
}

Poly2 g1() {
    Poly2 base = mono(5, 1, 1) - mono(1, 5, 1);
    return base * base;
}

Poly2 g2() {
    return mono(1, 1, 1) * (mono(4, 0, 1) - mono(0, 4, 1)) *
           (mono(12, 0, 1) - mono(8, 4, 33) - mono(4, 8, 33) + mono(0, 12, 1));
}

Poly2 g3() {
    return mono(8, 0, 1) + mono(4, 4, 14) + mono(0, 8, 1);
}

Poly2 f() {
    return g3().pow(3);
}

std::vector<Poly2> z() {
    const Poly2 a = g1(), b = g2(), c = g3();
    return {c.pow(11),    a * c.pow(4), a.pow(4) * b,
            b * c.pow(6), a.pow(3) * c, a.pow(2) * b * c.pow(3)};
}

std::vector<CheckResult> verify() {
    std::vector<CheckResult> out;
    const Matrix2 mphi = phi(), mpsi = psi(), mtau = tau(), meta = eta();
    const Cyclotomic one(1);
    const Cyclotomic lambda = Cyclotomic::root_power(4);

    out.push_back({"determinants: det(psi)=det(tau)=det(eta)=1, det(phi)=lambda^2",
                   mpsi.det() == one && mtau.det() == one && meta.det() == one &&
                       mphi.det() == lambda * lambda});

    out.push_back({"phi^22 = identity", mphi.pow(22) == Matrix2::identity()});

    {
        const std::vector<Poly2> gs = {g1(), g2(), g3()};
        bool ok = true;
        for (const auto& g : gs)
            ok = ok && is_invariant(g, mpsi) && is_invariant(g, mtau) && is_invariant(g, meta);
        out.push_back({"g1, g2, g3 invariant under psi, tau, eta", ok});
    }

    const std::vector<Poly2> zs = z();
    {
        bool ok = true;
        for (const auto& zk : zs)
            ok = ok && is_invariant(zk, mphi) && is_invariant(zk, mpsi) &&
                 is_invariant(zk, mtau) && is_invariant(zk, meta);
        out.push_back({"z1..z6 invariant under phi, psi, tau, eta (invariance only)", ok});
    }

    {
        const Poly2 ff = f();
        bool ok = is_semi_invariant(ff, mphi) && is_semi_invariant(ff, mpsi) &&
                  is_semi_invariant(ff, mtau) && is_semi_invariant(ff, meta);
        out.push_back({"f = g3^3 semi-invariant under phi, psi, tau, eta", ok});
    }

    {
        // z1 = f*g3^8, z2 = f*g1*g3, z4 = f*g2*g3^3, z6 = f*g1^2*g2
        const Poly2 ff = f(), a = g1(), b = g2(), c = g3();
        bool ok = zs[0] == ff * c.pow(8) && zs[1] == ff * a * c &&
                  zs[3] == ff * b * c.pow(3) && zs[5] == ff * a * a * b;
        out.push_back({"z1, z2, z4, z6 divisible by f (explicit cofactors)", ok});
    }

    out.push_back({"z3*z2 = z5*z6", zs[2] * zs[1] == zs[4] * zs[5]});

    return out;
}

std::string report_json(const std::vector<CheckResult>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}});
    return arr.dump(2) + "\n";
}

}  // namespace o11
}  // namespace qsing
