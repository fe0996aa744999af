// Exact intersection theory on the length-1 Quot scheme of a surface, which
// is the bundle P(E) of rank-1 quotients of E. This is the independent
// oracle for the q^1 coefficient of every closed-form series.
//
// Conventions, fixed here and validated by the q^1 checks:
//  * zeta is c1 of the universal quotient line bundle O(1) on P(E); the
//    pushforward to the surface sends zeta^{r-1} -> 1, zeta^r -> c1(E),
//    zeta^{r+1} -> c1(E)^2 - c2(E) and kills lower powers.
//  * the tautological sheaf of a line bundle L at length 1 is
//    (pullback L) ⊗ O(1), so c1(L^[1]) = c1(L) + zeta.
//  * the obstruction sheaf at length 1 is the pullback of the line with
//    first Chern class c1(S) ("c1S"), so e(Ob) = c1S and virtual integrals
//    are integrals against c1S over P(E).
//  * degree-2 monomials on the surface evaluate through a single pairing
//    table; a missing entry is an error, never a silent zero.
#ifndef QUOTVIR_CHOW_HPP
#define QUOTVIR_CHOW_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "poly.hpp"
#include "rational.hpp"

namespace quotvir {

inline const std::string surface_c1 = "c1S"; // c1 of the surface (= -K)
inline const std::string surface_c2 = "c2S"; // c2 of the surface (chi_top)

// Canonical key of the product of two degree-1 symbols.
inline std::string product_key(const std::string& a, const std::string& b)
{
    return a <= b ? a + "*" + b : b + "*" + a;
}

// Graded class on the surface with parts in degrees 0, 1, 2; degree-1 parts
// are combinations of named divisor symbols, degree-2 parts combinations of
// canonical monomial keys. Products of total degree > 2 vanish.
class surface_class {
  public:
    surface_class() = default;
    surface_class(int n) : d0_(n) {}
    surface_class(const rational& c) : d0_(c) {}

    static surface_class divisor(const std::string& name, const rational& c = rational(1))
    {
        surface_class s;
        if (!quotvir::is_zero(c))
            s.d1_[name] = c;
        return s;
    }

    // Intrinsic degree-2 class (e.g. a second Chern class).
    static surface_class point_class(const std::string& key, const rational& c = rational(1))
    {
        surface_class s;
        if (!quotvir::is_zero(c))
            s.d2_[key] = c;
        return s;
    }

    const rational& scalar_part() const { return d0_; }
    const std::map<std::string, rational>& divisor_part() const { return d1_; }
    const std::map<std::string, rational>& point_part() const { return d2_; }

    bool is_zero() const { return quotvir::is_zero(d0_) && d1_.empty() && d2_.empty(); }

    // Highest degree with a nonzero part; 0 for the zero class.
    int top_degree() const { return !d2_.empty() ? 2 : (!d1_.empty() ? 1 : 0); }

    friend surface_class operator+(const surface_class& a, const surface_class& b)
    {
        surface_class r = a;
        r.d0_ += b.d0_;
        for (const auto& [k, c] : b.d1_)
            add_into(r.d1_, k, c);
        for (const auto& [k, c] : b.d2_)
            add_into(r.d2_, k, c);
        return r;
    }

    friend surface_class operator-(const surface_class& a, const surface_class& b)
    {
        return a + (-b);
    }

    surface_class operator-() const
    {
        surface_class r;
        r.d0_ = -d0_;
        for (const auto& [k, c] : d1_)
            r.d1_[k] = -c;
        for (const auto& [k, c] : d2_)
            r.d2_[k] = -c;
        return r;
    }

    friend surface_class operator*(const surface_class& a, const surface_class& b)
    {
        surface_class r;
        r.d0_ = a.d0_ * b.d0_;
        if (!quotvir::is_zero(b.d0_))
            for (const auto& [k, c] : a.d1_)
                add_into(r.d1_, k, c * b.d0_);
        if (!quotvir::is_zero(a.d0_))
            for (const auto& [k, c] : b.d1_)
                add_into(r.d1_, k, a.d0_ * c);
        if (!quotvir::is_zero(b.d0_))
            for (const auto& [k, c] : a.d2_)
                add_into(r.d2_, k, c * b.d0_);
        if (!quotvir::is_zero(a.d0_))
            for (const auto& [k, c] : b.d2_)
                add_into(r.d2_, k, a.d0_ * c);
        for (const auto& [k1, c1] : a.d1_)
            for (const auto& [k2, c2] : b.d1_)
                add_into(r.d2_, product_key(k1, k2), c1 * c2);
        return r; // anything of degree > 2 is gone
    }

    surface_class& operator+=(const surface_class& o) { return *this = *this + o; }
    surface_class& operator-=(const surface_class& o) { return *this = *this - o; }
    surface_class& operator*=(const surface_class& o) { return *this = *this * o; }

    friend bool operator==(const surface_class& a, const surface_class& b)
    {
        return a.d0_ == b.d0_ && a.d1_ == b.d1_ && a.d2_ == b.d2_;
    }
    friend bool operator!=(const surface_class& a, const surface_class& b) { return !(a == b); }

    // Drop graded parts above max_degree.
    surface_class truncated(int max_degree) const
    {
        surface_class r;
        if (max_degree >= 0)
            r.d0_ = d0_;
        if (max_degree >= 1)
            r.d1_ = d1_;
        if (max_degree >= 2)
            r.d2_ = d2_;
        return r;
    }

  private:
    static void add_into(std::map<std::string, rational>& m, const std::string& k,
                         const rational& c)
    {
        auto it = m.find(k);
        if (it == m.end()) {
            if (!quotvir::is_zero(c))
                m[k] = c;
            return;
        }
        it->second += c;
        if (quotvir::is_zero(it->second))
            m.erase(it);
    }

    rational d0_ = rational(0);
    std::map<std::string, rational> d1_;
    std::map<std::string, rational> d2_;
};

// Evaluation of degree-2 surface monomials. Symbolic tables turn every key
// into its own polynomial variable; numeric tables reject missing keys.
class pairing_table {
  public:
    static pairing_table symbolic() { return pairing_table(); }

    static pairing_table numeric(std::map<std::string, poly> entries)
    {
        pairing_table t;
        t.entries_ = std::move(entries);
        return t;
    }

    static pairing_table numeric_values(const std::map<std::string, rational>& entries)
    {
        std::map<std::string, poly> m;
        for (const auto& [k, v] : entries)
            m[k] = poly(v);
        return numeric(std::move(m));
    }

    poly eval(const std::string& key) const
    {
        if (!entries_)
            return poly::variable(key);
        auto it = entries_->find(key);
        if (it == entries_->end())
            throw error("pairing table: missing entry '" + key + "'");
        return it->second;
    }

  private:
    std::optional<std::map<std::string, poly>> entries_;
};

// Integral over the surface: only the degree-2 part contributes.
inline poly integrate(const surface_class& c, const pairing_table& table)
{
    poly r;
    for (const auto& [k, v] : c.point_part())
        r += poly(v) * table.eval(k);
    return r;
}

// The ambient data of P(E): rank of E and its first two Chern classes as
// surface classes (c2 must be zero for rank <= 1).
struct quot_geometry {
    int rank = 1;
    surface_class c1;
    surface_class c2;

    // Geometry with purely symbolic Chern classes c1<tag>, c2<tag>.
    static quot_geometry symbolic(const std::string& tag, int rank)
    {
        quot_geometry g;
        g.rank = rank;
        g.c1 = surface_class::divisor("c1" + tag);
        if (rank >= 2)
            g.c2 = surface_class::point_class("c2" + tag);
        return g;
    }

    friend bool operator==(const quot_geometry& a, const quot_geometry& b)
    {
        return a.rank == b.rank && a.c1 == b.c1 && a.c2 == b.c2;
    }

    void validate() const
    {
        if (rank < 1)
            throw error("quot_geometry: rank must be >= 1");
        if (!(c1.scalar_part() == rational(0)) || !c1.point_part().empty())
            throw error("quot_geometry: c1 must be a pure degree-1 class");
        if (!(c2.scalar_part() == rational(0)) || !c2.divisor_part().empty())
            throw error("quot_geometry: c2 must be a pure degree-2 class");
        if (rank == 1 && !c2.is_zero())
            throw error("quot_geometry: rank-1 sheaves have no c2");
    }
};

// Class on P(E), stored as surface-class coefficients of powers of zeta.
// Components of total degree (zeta power + surface degree) above
// dim P(E) = rank + 1 vanish and are discarded eagerly.
class pe_class {
  public:
    explicit pe_class(quot_geometry geom) : geom_(std::move(geom)), zc_(zsize(geom_)) {}

    static pe_class from_surface(const quot_geometry& g, const surface_class& s)
    {
        pe_class c(g);
        c.zc_[0] = s.truncated(std::min(2, g.rank + 1));
        return c;
    }

    static pe_class one(const quot_geometry& g) { return from_surface(g, surface_class(1)); }

    static pe_class zeta(const quot_geometry& g, int power = 1)
    {
        pe_class c(g);
        if (power < 0)
            throw error("pe_class: negative zeta power");
        if (power < static_cast<int>(c.zc_.size()))
            c.zc_[power] = surface_class(1);
        return c;
    }

    const quot_geometry& geometry() const { return geom_; }
    int dim() const { return geom_.rank + 1; }

    const surface_class& zeta_coeff(int j) const
    {
        static const surface_class zero;
        if (j < 0 || j >= static_cast<int>(zc_.size()))
            return zero;
        return zc_[static_cast<size_t>(j)];
    }

    friend pe_class operator+(const pe_class& a, const pe_class& b)
    {
        a.same_space(b);
        pe_class r(a.geom_);
        for (size_t j = 0; j < r.zc_.size(); ++j)
            r.zc_[j] = a.zc_[j] + b.zc_[j];
        return r;
    }

    friend pe_class operator-(const pe_class& a, const pe_class& b)
    {
        a.same_space(b);
        pe_class r(a.geom_);
        for (size_t j = 0; j < r.zc_.size(); ++j)
            r.zc_[j] = a.zc_[j] - b.zc_[j];
        return r;
    }

    pe_class operator-() const
    {
        pe_class r(geom_);
        for (size_t j = 0; j < zc_.size(); ++j)
            r.zc_[j] = -zc_[j];
        return r;
    }

    friend pe_class operator*(const pe_class& a, const pe_class& b)
    {
        a.same_space(b);
        pe_class r(a.geom_);
        const int top = a.dim();
        for (int j1 = 0; j1 < static_cast<int>(a.zc_.size()); ++j1) {
            if (a.zc_[j1].is_zero())
                continue;
            for (int j2 = 0; j1 + j2 <= top; ++j2) {
                if (b.zc_[j2].is_zero())
                    continue;
                int j = j1 + j2;
                r.zc_[j] += (a.zc_[j1] * b.zc_[j2]).truncated(top - j);
            }
        }
        return r;
    }

    pe_class& operator+=(const pe_class& o) { return *this = *this + o; }
    pe_class& operator-=(const pe_class& o) { return *this = *this - o; }
    pe_class& operator*=(const pe_class& o) { return *this = *this * o; }

    friend bool operator==(const pe_class& a, const pe_class& b)
    {
        a.same_space(b);
        return a.zc_ == b.zc_;
    }

    bool is_zero() const
    {
        for (const auto& s : zc_)
            if (!s.is_zero())
                return false;
        return true;
    }

  private:
    static size_t zsize(const quot_geometry& g) { return static_cast<size_t>(g.rank) + 2; }

    void same_space(const pe_class& o) const
    {
        if (!(geom_ == o.geom_))
            throw error("pe_class: classes live on different bundles");
    }

    quot_geometry geom_;
    std::vector<surface_class> zc_;
};

// Pushforward to the surface: zeta^{rank-1+i} -> s_i with s_0 = 1,
// s_1 = c1(E), s_2 = c1(E)^2 - c2(E); lower zeta powers die.
inline surface_class pe_pushforward(const pe_class& c)
{
    const quot_geometry& g = c.geometry();
    surface_class segre[3] = {surface_class(1), g.c1, (g.c1 * g.c1 - g.c2).truncated(2)};
    surface_class r;
    for (int j = 0; j <= g.rank + 1; ++j) {
        int i = j - (g.rank - 1);
        if (i < 0 || i > 2)
            continue;
        r += (c.zeta_coeff(j) * segre[i]).truncated(2);
    }
    return r;
}

// Inverse of a class with scalar term 1 (Neumann series; the augmentation
// part is nilpotent).
inline pe_class invert(const pe_class& a)
{
    const quot_geometry& g = a.geometry();
    if (!(a.zeta_coeff(0).scalar_part() == rational(1)))
        throw error("pe_class: invert requires scalar term 1");
    pe_class n = a - pe_class::one(g);
    pe_class acc = pe_class::one(g);
    pe_class p = pe_class::one(g);
    for (int k = 1; k <= g.rank + 1; ++k) {
        p *= n;
        if (p.is_zero())
            break;
        acc = (k % 2 == 0) ? acc + p : acc - p;
    }
    return acc;
}

// c1 of the length-1 tautological sheaf of a line bundle with first Chern
// class c1L: pullback plus the universal quotient twist.
inline pe_class taut_line_c1(const quot_geometry& g, const surface_class& c1L)
{
    return pe_class::from_surface(g, c1L) + pe_class::zeta(g);
}

// Total Chern class of (pullback V)^dual ⊗ O(1) for V of rank v with Chern
// classes (c1V, c2V): sum_k (-1)^k c_k(V) (1+zeta)^{v-k}.
inline pe_class total_chern_dual_twist(const quot_geometry& g, int v, const surface_class& c1V,
                                       const surface_class& c2V)
{
    pe_class one_zeta = pe_class::one(g) + pe_class::zeta(g);
    pe_class acc(g);
    surface_class ck[3] = {surface_class(1), -c1V, c2V};
    for (int k = 0; k <= std::min(v, 2); ++k) {
        pe_class t = pe_class::from_surface(g, ck[k]);
        for (int i = 0; i < v - k; ++i)
            t *= one_zeta;
        acc += t;
    }
    return acc;
}

// Euler (top Chern) class of (pullback V)^dual ⊗ O(1):
// zeta^v - c1(V) zeta^{v-1} + c2(V) zeta^{v-2}. Rank 0 gives 1.
inline pe_class euler_dual_twist(const quot_geometry& g, int v, const surface_class& c1V,
                                 const surface_class& c2V)
{
    if (v == 0)
        return pe_class::one(g);
    surface_class ck[3] = {surface_class(1), -c1V, c2V};
    pe_class acc(g);
    for (int k = 0; k <= std::min(v, 2); ++k)
        acc += pe_class::from_surface(g, ck[k]) * pe_class::zeta(g, v - k);
    return acc;
}

// Obstruction line at length 1: pullback of the line with c1 = c1S.
inline pe_class euler_obstruction(const quot_geometry& g)
{
    return pe_class::from_surface(g, surface_class::divisor(surface_c1));
}

// c(T^vir) = c(T_{P(E)}) / c(Ob). The tangent bundle of P(E) has
// c = c(pullback E^dual ⊗ O(1)) * c(pullback T_S).
inline pe_class chern_tvir(const quot_geometry& g)
{
    surface_class chern_ts =
        surface_class(1) + surface_class::divisor(surface_c1) + surface_class::point_class(surface_c2);
    pe_class ctp = total_chern_dual_twist(g, g.rank, g.c1, g.c2) * pe_class::from_surface(g, chern_ts);
    pe_class cob = pe_class::from_surface(g, surface_class(1) + surface_class::divisor(surface_c1));
    return ctp * invert(cob);
}

// Total Segre class of the length-1 tautological sheaf of a line bundle.
inline pe_class segre_taut_line(const quot_geometry& g, const surface_class& c1L)
{
    return invert(pe_class::one(g) + taut_line_c1(g, c1L));
}

// Integral of the top-degree part of integrand * e(Ob) over P(E), evaluated
// through the pairing table. Integrands that never reach the top degree
// integrate to zero.
inline poly quot1_virtual_integral(const pe_class& integrand, const pairing_table& table)
{
    pe_class total = integrand * euler_obstruction(integrand.geometry());
    return integrate(pe_pushforward(total), table);
}

// Integrand descriptions that can be instantiated on any P(E); used where
// the same tautological expression must be compared across two bundles.
struct integrand_one {};
struct integrand_euler_line_pow {
    surface_class c1L;
    int power = 1;
};
struct integrand_chern_tvir {};
struct integrand_segre_line {
    surface_class c1L;
};
using integrand_expr =
    std::variant<integrand_one, integrand_euler_line_pow, integrand_chern_tvir, integrand_segre_line>;

inline pe_class instantiate(const integrand_expr& e, const quot_geometry& g)
{
    if (std::holds_alternative<integrand_one>(e))
        return pe_class::one(g);
    if (const auto* ep = std::get_if<integrand_euler_line_pow>(&e)) {
        pe_class c = pe_class::one(g);
        pe_class f = taut_line_c1(g, ep->c1L);
        for (int i = 0; i < ep->power; ++i)
            c *= f;
        return c;
    }
    if (std::holds_alternative<integrand_chern_tvir>(e))
        return chern_tvir(g);
    return segre_taut_line(g, std::get<integrand_segre_line>(e).c1L);
}

struct rank_reduction_check {
    bool ok = false;
    poly lhs; // integral over P(E'')
    poly rhs; // integral over P(E) against e(E'^dual[1])
};

// Length-1 instance of the rank-reduction identity for an exact sequence
// 0 -> E' -> E -> E'' -> 0: the integral of a tautological expression over
// P(E'') equals the integral over P(E) of the same expression times
// e((pullback E'^dual) ⊗ O(1)). Chern data of the three sheaves must be
// consistent with the sequence.
inline rank_reduction_check verify_rank_reduction_l1(const quot_geometry& sub,
                                                     const quot_geometry& total,
                                                     const quot_geometry& quotient,
                                                     const integrand_expr& integrand,
                                                     const pairing_table& table)
{
    quotient.validate();
    total.validate();
    if (sub.rank < 0 || sub.rank + quotient.rank != total.rank)
        throw error("rank reduction: ranks do not fit the exact sequence");
    if (sub.rank == 0 && !(sub.c1.is_zero() && sub.c2.is_zero()))
        throw error("rank reduction: rank-0 kernel must have zero Chern classes");
    if (sub.rank == 1 && !sub.c2.is_zero())
        throw error("rank reduction: rank-1 kernel has no c2");
    if (!(total.c1 == sub.c1 + quotient.c1))
        throw error("rank reduction: inconsistent c1 data");
    surface_class expected_c2 = (sub.c2 + quotient.c2 + sub.c1 * quotient.c1).truncated(2);
    if (!(total.c2 == expected_c2))
        throw error("rank reduction: inconsistent c2 data");

    rank_reduction_check r;
    r.lhs = quot1_virtual_integral(instantiate(integrand, quotient), table);
    pe_class lifted = instantiate(integrand, total) * euler_dual_twist(total, sub.rank, sub.c1, sub.c2);
    r.rhs = quot1_virtual_integral(lifted, table);
    r.ok = (r.lhs == r.rhs);
    return r;
}

} // namespace quotvir

#endif
