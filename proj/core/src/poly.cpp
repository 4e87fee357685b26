#include "cyclotwist/poly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "cyclotwist/errors.hpp"

namespace cyclotwist {

namespace {

int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}

std::vector<int> reduce_exponents(int n, const std::vector<int>& exponents) {
    std::map<int, int> count;
    for (int e : exponents) ++count[mod(e, n)];
    std::vector<int> out;
    for (auto [e, c] : count)
        if (c & 1) out.push_back(e);
    return out;
}

}  // namespace

CyclicPoly::CyclicPoly(int n, const std::vector<int>& exponents) : n_(n) {
    if (n <= 0) throw DimensionError("cyclic polynomial modulus must be positive");
    exps_ = reduce_exponents(n, exponents);
}

bool CyclicPoly::contains(int e) const {
    return std::binary_search(exps_.begin(), exps_.end(), mod(e, n_));
}

CyclicPoly CyclicPoly::operator+(const CyclicPoly& other) const {
    if (other.n_ != n_) throw DimensionError("cyclic polynomial modulus mismatch");
    std::vector<int> all = exps_;
    all.insert(all.end(), other.exps_.begin(), other.exps_.end());
    return CyclicPoly(n_, all);
}

CyclicPoly CyclicPoly::operator*(const CyclicPoly& other) const {
    if (other.n_ != n_) throw DimensionError("cyclic polynomial modulus mismatch");
    std::vector<int> conv;
    conv.reserve(exps_.size() * other.exps_.size());
    for (int a : exps_)
        for (int b : other.exps_) conv.push_back(mod(a + b, n_));
    return CyclicPoly(n_, conv);
}

CyclicPoly CyclicPoly::shifted(int k) const {
    std::vector<int> out;
    out.reserve(exps_.size());
    for (int e : exps_) out.push_back(mod(e + k, n_));
    return CyclicPoly(n_, out);
}

std::string CyclicPoly::to_string() const {
    if (exps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int e : exps_) {
        if (!first) os << "+";
        first = false;
        if (e == 0) os << "1";
        else if (e == 1) os << "x";
        else os << "x^" << e;
    }
    return os.str();
}

CyclicPoly poly_mul(const CyclicPoly& a, const CyclicPoly& b) {
    return a * b;
}

CyclicPoly poly_transpose(const CyclicPoly& a) {
    std::vector<int> out;
    out.reserve(a.exponents().size());
    for (int e : a.exponents()) out.push_back(mod(-e, a.modulus()));
    return CyclicPoly(a.modulus(), out);
}

BinMatrix regular_representation(const CyclicPoly& a) {
    int n = a.modulus();
    BinMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (int e : a.exponents()) m.set(mod(e + j, n), j, true);
    return m;
}

PlainPoly::PlainPoly(const std::vector<int>& exponents) {
    for (int e : exponents) {
        if (e < 0) throw DimensionError("plain polynomial exponent must be non-negative");
        std::size_t wi = static_cast<std::size_t>(e) >> 6;
        if (wi >= w_.size()) w_.resize(wi + 1, 0);
        w_[wi] ^= std::uint64_t(1) << (e & 63);
    }
    normalize();
}

PlainPoly PlainPoly::x_n_plus_1(int n) {
    return PlainPoly({0, n});
}

bool PlainPoly::get(int e) const {
    std::size_t wi = static_cast<std::size_t>(e) >> 6;
    if (e < 0 || wi >= w_.size()) return false;
    return (w_[wi] >> (e & 63)) & 1;
}

std::vector<int> PlainPoly::exponents() const {
    std::vector<int> out;
    for (int e = 0; e <= deg_; ++e)
        if (get(e)) out.push_back(e);
    return out;
}

void PlainPoly::operator^=(const PlainPoly& other) {
    if (other.w_.size() > w_.size()) w_.resize(other.w_.size(), 0);
    for (std::size_t i = 0; i < other.w_.size(); ++i) w_[i] ^= other.w_[i];
    normalize();
}

PlainPoly PlainPoly::shifted(int k) const {
    PlainPoly out;
    for (int e = 0; e <= deg_; ++e)
        if (get(e)) {
            std::size_t wi = static_cast<std::size_t>(e + k) >> 6;
            if (wi >= out.w_.size()) out.w_.resize(wi + 1, 0);
            out.w_[wi] ^= std::uint64_t(1) << ((e + k) & 63);
        }
    out.normalize();
    return out;
}

void PlainPoly::normalize() {
    deg_ = -1;
    for (std::size_t wi = w_.size(); wi-- > 0;) {
        if (w_[wi]) {
            deg_ = static_cast<int>(wi * 64 + 63 - std::countl_zero(w_[wi]));
            break;
        }
    }
    w_.resize(deg_ < 0 ? 0 : static_cast<std::size_t>(deg_ / 64 + 1));
}

PlainPoly poly_mod(PlainPoly a, const PlainPoly& b) {
    if (b.is_zero()) throw DimensionError("polynomial division by zero");
    while (!a.is_zero() && a.degree() >= b.degree()) {
        a ^= b.shifted(a.degree() - b.degree());
    }
    return a;
}

PlainPoly poly_gcd(PlainPoly a, PlainPoly b) {
    if (a.is_zero() && b.is_zero()) throw DimensionError("gcd of two zero polynomials");
    while (!b.is_zero()) {
        PlainPoly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a;
}

bool poly_divides(const PlainPoly& b, const PlainPoly& a) {
    return poly_mod(a, b).is_zero();
}

}  // namespace cyclotwist
