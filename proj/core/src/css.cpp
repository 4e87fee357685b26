#include "cyclotwist/css.hpp"

#include "cyclotwist/errors.hpp"

namespace cyclotwist {

namespace {
int mod(int a, int n) {
    int r = a % n;
    return r < 0 ? r + n : r;
}
}  // namespace

GroupTuple bp_canonicalize(int l, int a, int b) {
    a = mod(a, l);
    b = mod(b, l);
    int carry = a / 3;
    return {a % 3, mod(b + 3 * carry, l)};
}

int CodeIndex::tuple_index(int a, int b) const {
    if (kind == ProductKind::balanced) {
        GroupTuple t = bp_canonicalize(l, a, b);
        return t.a * l + t.b;
    }
    return mod(a, l) * m + mod(b, m);
}

int CodeIndex::qubit_index(EdgeKind kind_, int a, int b) const {
    int base = kind_ == EdgeKind::vertical ? 0 : block_size();
    return base + tuple_index(a, b);
}

GroupTuple CodeIndex::tuple_of(int index) const {
    if (kind == ProductKind::balanced) return {index / l, index % l};
    return {index / m, index % m};
}

QubitLabel CodeIndex::qubit_label_of(int q) const {
    EdgeKind k = q < block_size() ? EdgeKind::vertical : EdgeKind::horizontal;
    GroupTuple t = tuple_of(q % block_size());
    return {k, t.a, t.b};
}

GroupTuple CodeIndex::mul(GroupTuple u, GroupTuple v) const {
    if (kind == ProductKind::balanced) return bp_canonicalize(l, u.a + v.a, u.b + v.b);
    return {mod(u.a + v.a, l), mod(u.b + v.b, m)};
}

GroupTuple CodeIndex::inv(GroupTuple u) const {
    if (kind == ProductKind::balanced) return bp_canonicalize(l, -u.a, -u.b);
    return {mod(-u.a, l), mod(-u.b, m)};
}

bool commutation_holds(const CssCode& code) {
    return product_is_zero(code.hx, code.hz);
}

}  // namespace cyclotwist
