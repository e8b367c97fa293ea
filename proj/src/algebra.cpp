#include "newton/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace newton {

// ---------------------------------------------------------------------------
// FieldTower

TowerPtr FieldTower::rationals() {
    static TowerPtr q = std::make_shared<FieldTower>();
    return q;
}

const FieldTower::Level& FieldTower::level(int i) const {
    const FieldTower* t = this;
    while (t && t->height_ > i) t = t->parent_.get();
    if (!t || t->height_ != i || !t->top_) throw precondition_error("tower level out of range");
    return *t->top_;
}

AlgebraicScalar FieldTower::generator(int k) const {
    if (k < 1 || k > height_) throw precondition_error("generator level out of range");
    std::vector<AlgebraicScalar> c;
    c.emplace_back(Rat(0));
    c.emplace_back(Rat(1));
    auto self = shared_from_this();
    AlgebraicScalar g(self, k, std::move(c));
    return g;
}

std::string FieldTower::describe() const {
    if (height_ == 0) return "Q";
    std::string s = parent_->describe();
    s += "(" + top_->name + ": " + top_->minpoly.to_string() + " = 0)";
    return s;
}

bool tower_is_prefix(const TowerPtr& a, const TowerPtr& b) {
    if (!a || a->height() == 0) return true;
    const FieldTower* t = b.get();
    while (t && t->height() > a->height()) t = t->parent().get();
    return t == a.get();
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
    int ha = a ? a->height() : 0;
    int hb = b ? b->height() : 0;
    const TowerPtr& deep = ha >= hb ? a : b;
    const TowerPtr& shallow = ha >= hb ? b : a;
    if (!tower_is_prefix(shallow, deep)) throw precondition_error("incompatible field towers");
    return deep ? deep : FieldTower::rationals();
}

// ---------------------------------------------------------------------------
// AlgebraicScalar

AlgebraicScalar::AlgebraicScalar(TowerPtr tower, int level, std::vector<AlgebraicScalar> coeffs)
    : tower_(std::move(tower)), level_(level), c_(std::move(coeffs)) {
    normalize();
}

void AlgebraicScalar::normalize() {
    if (level_ == 0) {
        q_.canonicalize();
        tower_.reset();
        return;
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) {
        level_ = 0;
        q_ = 0;
        tower_.reset();
    } else if (c_.size() == 1 && c_[0].level() < level_) {
        AlgebraicScalar inner = std::move(c_[0]);
        *this = inner;
    }
}

bool AlgebraicScalar::is_zero() const {
    if (level_ == 0) return q_ == 0;
    return c_.empty();
}

bool AlgebraicScalar::is_one() const {
    if (level_ == 0) return q_ == 1;
    return c_.size() == 1 && c_[0].is_one();
}

const Rat& AlgebraicScalar::rational() const {
    if (level_ != 0) throw precondition_error("scalar is not rational");
    return q_;
}

AlgebraicScalar AlgebraicScalar::lifted(const TowerPtr& tower) const {
    if (level_ == 0) return *this;
    bool up = tower_is_prefix(tower_, tower);
    bool down = tower && tower_is_prefix(tower, tower_) && level_ <= tower->height();
    if (!up && !down) throw precondition_error("cannot retag scalar into incompatible tower");
    AlgebraicScalar r = *this;
    r.tower_ = tower;
    return r;
}

namespace {

// Dense vector arithmetic over scalars of one level below (helpers for extension
// arithmetic; vectors are raw, not reduced).
using Vec = std::vector<AlgebraicScalar>;

void vec_trim(Vec& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    vec_trim(r);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    if (r.size() < b.size()) r.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    vec_trim(r);
    return r;
}

Vec vec_mul(const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return {};
    Vec r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    vec_trim(r);
    return r;
}

// a mod m, m monic.
Vec vec_mod(Vec a, const Vec& m) {
    vec_trim(a);
    size_t dm = m.size() - 1;
    while (a.size() > dm) {
        AlgebraicScalar lead = a.back();
        size_t shift = a.size() - 1 - dm;
        if (!lead.is_zero()) {
            for (size_t i = 0; i < dm; ++i) a[shift + i] -= lead * m[i];
        }
        a.pop_back();
        vec_trim(a);
    }
    return a;
}

// Extended Euclid over the level-below field: returns g (monic gcd) with u*a ≡ g mod m
// when called as inverse machinery.  Implemented directly for the inverse use case:
// computes a^{-1} mod m via the extended algorithm.
Vec vec_invmod(const Vec& a0, const Vec& m) {
    // classic extended Euclid on (m, a)
    Vec r0 = m, r1 = a0;
    vec_trim(r1);
    if (r1.empty()) throw precondition_error("division by zero in extension field");
    Vec t0, t1{AlgebraicScalar(Rat(1))};
    while (!(r1.size() == 1)) {
        // divmod r0 by r1
        Vec q;
        Vec rem = r0;
        vec_trim(rem);
        size_t d1 = r1.size() - 1;
        AlgebraicScalar inv_lead = r1.back().inverse();
        if (rem.size() >= r1.size()) q.resize(rem.size() - d1);
        while (rem.size() >= r1.size() && !rem.empty()) {
            AlgebraicScalar coef = rem.back() * inv_lead;
            size_t shift = rem.size() - 1 - d1;
            q[shift] = coef;
            for (size_t i = 0; i + 1 < r1.size(); ++i) rem[shift + i] -= coef * r1[i];
            rem.pop_back();
            vec_trim(rem);
        }
        vec_trim(q);
        // (r0, r1) <- (r1, rem); (t0, t1) <- (t1, t0 - q*t1)
        Vec t2 = vec_sub(t0, vec_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
        if (r1.empty())
            throw precondition_error(
                "non-invertible element: minimal polynomial is reducible over the tower");
    }
    // r1 is a nonzero constant: inverse = t1 / r1
    AlgebraicScalar c = r1[0].inverse();
    for (auto& x : t1) x *= c;
    vec_trim(t1);
    return t1;
}

}  // namespace

AlgebraicScalar& AlgebraicScalar::operator+=(const AlgebraicScalar& o) {
    TowerPtr tw = common_tower(tower_, o.tower_);
    if (level_ == 0 && o.level_ == 0) {
        q_ += o.q_;
        return *this;
    }
    int lvl = std::max(level_, o.level_);
    Vec a = level_ == lvl ? c_ : Vec{*this};
    Vec b = o.level_ == lvl ? o.c_ : Vec{o};
    AlgebraicScalar r(tw, lvl, vec_add(a, b));
    *this = std::move(r);
    return *this;
}

AlgebraicScalar& AlgebraicScalar::operator-=(const AlgebraicScalar& o) {
    *this += -o;
    return *this;
}

AlgebraicScalar AlgebraicScalar::operator-() const {
    AlgebraicScalar r = *this;
    if (r.level_ == 0) {
        r.q_ = -r.q_;
    } else {
        for (auto& x : r.c_) x = -x;
    }
    return r;
}

AlgebraicScalar& AlgebraicScalar::operator*=(const AlgebraicScalar& o) {
    TowerPtr tw = common_tower(tower_, o.tower_);
    if (level_ == 0 && o.level_ == 0) {
        q_ *= o.q_;
        return *this;
    }
    if (is_zero() || o.is_zero()) {
        *this = AlgebraicScalar();
        return *this;
    }
    int lvl = std::max(level_, o.level_);
    Vec a = level_ == lvl ? c_ : Vec{*this};
    Vec b = o.level_ == lvl ? o.c_ : Vec{o};
    Vec prod = vec_mul(a, b);
    const UniPoly& mp = tw->level(lvl).minpoly;
    prod = vec_mod(std::move(prod), mp.coeffs());
    AlgebraicScalar r(tw, lvl, std::move(prod));
    *this = std::move(r);
    return *this;
}

AlgebraicScalar AlgebraicScalar::inverse() const {
    if (is_zero()) throw precondition_error("inverse of zero");
    if (level_ == 0) {
        AlgebraicScalar r;
        r.q_ = 1 / q_;
        return r;
    }
    const UniPoly& mp = tower_->level(level_).minpoly;
    Vec inv = vec_invmod(c_, mp.coeffs());
    return AlgebraicScalar(tower_, level_, std::move(inv));
}

AlgebraicScalar& AlgebraicScalar::operator/=(const AlgebraicScalar& o) {
    *this *= o.inverse();
    return *this;
}

AlgebraicScalar AlgebraicScalar::pow(long e) const {
    if (e == 0) return AlgebraicScalar(Rat(1));
    AlgebraicScalar base = e < 0 ? inverse() : *this;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    AlgebraicScalar acc(Rat(1));
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool operator==(const AlgebraicScalar& a, const AlgebraicScalar& b) {
    return AlgebraicScalar::compare(a, b) == 0;
}

int AlgebraicScalar::compare(const AlgebraicScalar& a, const AlgebraicScalar& b) {
    // Reduced representations are canonical, so equal values share a level.
    if (a.level_ != b.level_) return a.level_ < b.level_ ? -1 : 1;
    if (a.level_ == 0) return ::cmp(a.q_, b.q_);
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
    for (size_t i = a.c_.size(); i-- > 0;) {
        int c = compare(a.c_[i], b.c_[i]);
        if (c) return c;
    }
    return 0;
}

std::string AlgebraicScalar::to_string() const {
    if (level_ == 0) return q_.get_str();
    const std::string& g = tower_->level(level_).name;
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string coef = c_[i].to_string();
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coef;
        } else {
            if (coef == "1") {
                os << g;
            } else if (coef.find_first_of("+*^ ") != std::string::npos) {
                os << "(" << coef << ")*" << g;
            } else {
                os << coef << "*" << g;
            }
            if (i > 1) os << "^" << i;
        }
    }
    if (first) return "0";
    return os.str();
}

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(TowerPtr tower, std::string var, std::vector<AlgebraicScalar> coeffs)
    : tower_(std::move(tower)), var_(std::move(var)), c_(std::move(coeffs)) {
    normalize();
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::from_roots(const TowerPtr& tower, const std::string& var,
                            const std::vector<AlgebraicScalar>& roots) {
    UniPoly p(tower, var, {AlgebraicScalar(Rat(1))});
    for (const auto& r : roots) {
        UniPoly lin(tower, var, {-r, AlgebraicScalar(Rat(1))});
        p = p * lin;
    }
    return p;
}

const AlgebraicScalar& UniPoly::operator[](int i) const {
    static const AlgebraicScalar zero;
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const AlgebraicScalar& UniPoly::leading() const {
    if (c_.empty()) throw precondition_error("leading coefficient of zero polynomial");
    return c_.back();
}

AlgebraicScalar UniPoly::constant_term() const { return (*this)[0]; }

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    TowerPtr tw = common_tower(a.tower_, b.tower_);
    UniPoly r(tw, a.c_.empty() ? b.var_ : a.var_);
    r.c_ = a.c_;
    if (r.c_.size() < b.c_.size()) r.c_.resize(b.c_.size());
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.normalize();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    TowerPtr tw = common_tower(a.tower_, b.tower_);
    UniPoly r(tw, a.c_.empty() ? b.var_ : a.var_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, AlgebraicScalar());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.normalize();
    return r;
}

UniPoly UniPoly::operator*(const AlgebraicScalar& s) const {
    UniPoly r = *this;
    for (auto& x : r.c_) x *= s;
    r.normalize();
    return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const {
    UniPoly r(tower_, var_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * AlgebraicScalar(Rat(i));
    r.normalize();
    return r;
}

AlgebraicScalar UniPoly::eval(const AlgebraicScalar& x) const {
    AlgebraicScalar acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::shifted(const AlgebraicScalar& s) const {
    // Horner: p(x+s)
    TowerPtr tw = common_tower(tower_, s.tower());
    UniPoly acc(tw, var_);
    UniPoly xs(tw, var_, {s, AlgebraicScalar(Rat(1))});
    for (size_t i = c_.size(); i-- > 0;) {
        acc = acc * xs;
        acc = acc + UniPoly(tw, var_, {c_[i]});
    }
    return acc;
}

UniPoly UniPoly::scaled_arg(const AlgebraicScalar& s) const {
    TowerPtr tw = common_tower(tower_, s.tower());
    UniPoly r(tw, var_);
    r.c_ = c_;
    AlgebraicScalar f(Rat(1));
    for (size_t i = 0; i < r.c_.size(); ++i) {
        r.c_[i] *= f;
        f *= s;
    }
    r.normalize();
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw precondition_error("division by zero polynomial");
    TowerPtr tw = common_tower(a.tower_, b.tower_);
    UniPoly q(tw, a.var_.empty() ? b.var_ : a.var_), r = a;
    r.tower_ = tw;
    if (a.degree() < b.degree()) return {q, r};
    q.c_.assign(a.degree() - b.degree() + 1, AlgebraicScalar());
    AlgebraicScalar inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        AlgebraicScalar coef = r.leading() * inv;
        q.c_[shift] = coef;
        for (int i = 0; i <= b.degree(); ++i) r.c_[shift + i] -= coef * b.c_[i];
        r.normalize();
    }
    q.normalize();
    return {q, r};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.monic();
}

int UniPoly::compare(const UniPoly& a, const UniPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (size_t i = a.c_.size(); i-- > 0;) {
        int c = AlgebraicScalar::compare(a.c_[i], b.c_[i]);
        if (c) return c;
    }
    return 0;
}

std::string UniPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        std::string coef = c_[i].to_string();
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << coef;
            continue;
        }
        if (coef == "1") {
        } else if (coef.find_first_of("+*^ ") != std::string::npos || coef[0] == '-') {
            os << "(" << coef << ")*";
        } else {
            os << coef << "*";
        }
        os << var_;
        if (i > 1) os << "^" << i;
    }
    if (first) return "0";
    return os.str();
}

UniPoly UniPoly::lifted(const TowerPtr& tower) const {
    UniPoly r = *this;
    r.tower_ = tower ? tower : FieldTower::rationals();
    for (auto& x : r.c_) x = x.lifted(r.tower_);
    return r;
}

// ---------------------------------------------------------------------------
// Square-free decomposition (Yun, characteristic zero)

std::vector<SquarefreePart> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw precondition_error("squarefree decomposition of zero polynomial");
    std::vector<SquarefreePart> out;
    if (p.degree() == 0) return out;
    UniPoly f = p.monic();
    UniPoly fp = f.derivative();
    UniPoly a = UniPoly::gcd(f, fp);
    UniPoly b = UniPoly::divmod(f, a).first;
    UniPoly c = UniPoly::divmod(fp, a).first;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly g = UniPoly::gcd(b, d);
        if (g.degree() > 0) out.push_back({g, i});
        b = UniPoly::divmod(b, g).first;
        c = UniPoly::divmod(d, g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Resultant (Euclidean remainder sequence with the standard multiplier identities)

AlgebraicScalar resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw precondition_error("resultant of zero polynomial");
    UniPoly a = p, b = q;
    AlgebraicScalar acc(Rat(1));
    bool swapped_sign = false;
    while (true) {
        if (b.degree() == 0) {
            acc *= b.leading().pow(a.degree());
            break;
        }
        if (a.degree() < b.degree()) {
            if ((static_cast<long>(a.degree()) * b.degree()) % 2 == 1)
                swapped_sign = !swapped_sign;
            std::swap(a, b);
            continue;
        }
        UniPoly r = UniPoly::divmod(a, b).second;
        if (r.is_zero()) return AlgebraicScalar();  // nonconstant common factor
        acc *= b.leading().pow(a.degree() - r.degree());
        if ((static_cast<long>(a.degree()) * b.degree()) % 2 == 1) swapped_sign = !swapped_sign;
        a = std::move(b);
        b = std::move(r);
    }
    if (swapped_sign) acc = -acc;
    return acc;
}

// ---------------------------------------------------------------------------
// Face discriminant via interpolation: disc_s(P(s)-c) has degree <= deg P - 1 in c.

UniPoly face_discriminant(const UniPoly& P, const std::string& cvar) {
    int d = P.degree();
    if (d < 1) throw precondition_error("face discriminant requires deg P >= 1");
    TowerPtr tw = P.tower();
    UniPoly dP = P.derivative();
    // disc(P - c) = (-1)^{d(d-1)/2} res_s(P - c, P') / lc(P)
    int npts = d;  // degree in c is at most d-1
    std::vector<AlgebraicScalar> xs, ys;
    AlgebraicScalar sign(Rat(((static_cast<long>(d) * (d - 1) / 2) % 2 == 0) ? 1 : -1));
    AlgebraicScalar lc_inv = P.leading().inverse();
    for (int i = 0; i < npts; ++i) {
        AlgebraicScalar ci{Rat(i)};
        UniPoly shifted = P - UniPoly(tw, P.var(), {ci});
        AlgebraicScalar r;
        if (dP.is_zero())
            throw precondition_error("face discriminant of constant derivative");
        r = resultant(shifted, dP);
        xs.push_back(ci);
        ys.push_back(sign * r * lc_inv);
    }
    // Lagrange interpolation in cvar
    UniPoly result(tw, cvar);
    for (int i = 0; i < npts; ++i) {
        UniPoly basis(tw, cvar, {AlgebraicScalar(Rat(1))});
        AlgebraicScalar denom(Rat(1));
        for (int j = 0; j < npts; ++j) {
            if (j == i) continue;
            basis = basis * UniPoly(tw, cvar, {-xs[j], AlgebraicScalar(Rat(1))});
            denom *= xs[i] - xs[j];
        }
        result = result + basis * (ys[i] / denom);
    }
    return result;
}

}  // namespace newton
