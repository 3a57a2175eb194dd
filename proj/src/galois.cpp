#include "anforge/galois.hpp"

#include <algorithm>

namespace anforge::galois {

namespace {

void require_element(const FieldSpec& spec, const FieldElement& a) {
    if (a.coeffs.size() != spec.m) throw input_error("field element does not match the spec");
    for (Sym c : a.coeffs)
        if (c >= spec.p) throw input_error("field element coefficient not reduced mod p");
}

// a*b mod (modulus, p), schoolbook product then top-down reduction.
std::vector<Sym> mulmod(const std::vector<Sym>& a, const std::vector<Sym>& b,
                        const std::vector<Sym>& modulus, std::uint32_t p) {
    std::size_t m = modulus.size() - 1;
    std::vector<std::uint64_t> prod(2 * m - 1, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            prod[i + j] += static_cast<std::uint64_t>(a[i]) * b[j];
    for (std::size_t k = 2 * m - 1; k-- > m;) {
        std::uint64_t c = prod[k] % p;
        if (c == 0) continue;
        // subtract c * xi^{k-m} * modulus
        for (std::size_t i = 0; i <= m; ++i) {
            std::uint64_t sub = (c * modulus[i]) % p;
            std::size_t pos = k - m + i;
            prod[pos] = (prod[pos] + static_cast<std::uint64_t>(p) * p - sub);
        }
        prod[k] = 0; // killed by the monic top coefficient
    }
    std::vector<Sym> r(m);
    for (std::size_t i = 0; i < m; ++i) r[i] = static_cast<Sym>(prod[i] % p);
    return r;
}

bool is_one(const std::vector<Sym>& a) {
    if (a.empty() || a[0] != 1) return false;
    return std::all_of(a.begin() + 1, a.end(), [](Sym c) { return c == 0; });
}

} // namespace

std::uint64_t FieldSpec::order() const {
    return checked_pow(p, static_cast<int>(m));
}

bool FieldElement::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](Sym c) { return c == 0; });
}

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

FieldElement zero(const FieldSpec& spec) { return FieldElement{std::vector<Sym>(spec.m, 0)}; }

FieldElement one(const FieldSpec& spec) {
    FieldElement e = zero(spec);
    e.coeffs[0] = 1;
    return e;
}

FieldElement element_from_symbol(const FieldSpec& spec, std::uint64_t s) {
    if (s >= spec.order()) throw input_error("symbol out of range for this field");
    FieldElement e = zero(spec);
    for (std::uint32_t i = 0; i < spec.m; ++i) {
        e.coeffs[i] = static_cast<Sym>(s % spec.p);
        s /= spec.p;
    }
    return e;
}

std::uint64_t symbol_from_element(const FieldSpec& spec, const FieldElement& a) {
    require_element(spec, a);
    std::uint64_t s = 0;
    for (std::uint32_t i = spec.m; i-- > 0;)
        s = s * spec.p + a.coeffs[i];
    return s;
}

FieldElement add(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
    require_element(spec, a);
    require_element(spec, b);
    FieldElement r = zero(spec);
    for (std::uint32_t i = 0; i < spec.m; ++i)
        r.coeffs[i] = static_cast<Sym>((a.coeffs[i] + b.coeffs[i]) % spec.p);
    return r;
}

FieldElement neg(const FieldSpec& spec, const FieldElement& a) {
    require_element(spec, a);
    FieldElement r = zero(spec);
    for (std::uint32_t i = 0; i < spec.m; ++i)
        r.coeffs[i] = static_cast<Sym>((spec.p - a.coeffs[i]) % spec.p);
    return r;
}

FieldElement sub(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
    return add(spec, a, neg(spec, b));
}

FieldElement mul(const FieldSpec& spec, const FieldElement& a, const FieldElement& b) {
    require_element(spec, a);
    require_element(spec, b);
    return FieldElement{mulmod(a.coeffs, b.coeffs, spec.modulus, spec.p)};
}

FieldElement pow(const FieldSpec& spec, const FieldElement& a, std::uint64_t e) {
    require_element(spec, a);
    FieldElement base = a;
    FieldElement acc = one(spec);
    while (e > 0) {
        if (e & 1) acc = mul(spec, acc, base);
        base = mul(spec, base, base);
        e >>= 1;
    }
    return acc;
}

std::uint64_t element_order(const FieldSpec& spec, const FieldElement& a) {
    require_element(spec, a);
    if (a.is_zero()) throw input_error("the zero element has no multiplicative order");
    std::uint64_t bound = spec.order() - 1;
    FieldElement x = a;
    for (std::uint64_t t = 1; t <= bound; ++t) {
        if (is_one(x.coeffs)) return t;
        x = mul(spec, x, a);
    }
    throw input_error("element order exceeds p^m - 1; modulus is not irreducible");
}

namespace {

// Order of xi in K[xi]/(P) for a monic P over a symbol field; returns 0
// when xi never reaches 1 within q^n - 1 steps (so P is not primitive).
std::uint64_t xi_order(const SymbolField& field, const std::vector<Sym>& coeffs, int n,
                       std::uint64_t bound) {
    std::vector<Sym> x(static_cast<std::size_t>(n), 0); // xi^1
    if (n == 1) {
        // xi is congruent to -c0
        x[0] = field.neg(coeffs[0]);
    } else {
        x[1] = 1;
    }
    std::vector<Sym> next(static_cast<std::size_t>(n));
    for (std::uint64_t t = 1; t <= bound; ++t) {
        bool one = x[0] == 1;
        for (int i = 1; one && i < n; ++i) one = x[static_cast<std::size_t>(i)] == 0;
        if (one) return t;
        // multiply by xi: shift up, reduce by the monic modulus
        Sym top = x[static_cast<std::size_t>(n) - 1];
        for (int i = n - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i) - 1];
        next[0] = 0;
        if (top != 0) {
            for (int i = 0; i < n; ++i) {
                Sym delta = field.mul(top, coeffs[static_cast<std::size_t>(i)]);
                next[static_cast<std::size_t>(i)] = field.sub(next[static_cast<std::size_t>(i)], delta);
            }
        }
        x.swap(next);
    }
    return 0;
}

} // namespace

std::vector<Sym> find_primitive_polynomial_over(const SymbolField& field, int n) {
    if (n < 1) throw input_error("extension degree must be >= 1");
    int q = field.q();
    std::uint64_t count = checked_pow(static_cast<std::uint64_t>(q), n);
    std::uint64_t target = count - 1;
    std::vector<Sym> coeffs(static_cast<std::size_t>(n) + 1, 0);
    coeffs[static_cast<std::size_t>(n)] = 1;
    for (std::uint64_t packed = 1; packed < count; ++packed) {
        std::uint64_t v = packed;
        for (int i = 0; i < n; ++i) {
            coeffs[static_cast<std::size_t>(i)] = static_cast<Sym>(v % static_cast<std::uint64_t>(q));
            v /= static_cast<std::uint64_t>(q);
        }
        if (coeffs[0] == 0) continue; // xi would not be a unit
        if (xi_order(field, coeffs, n, target) == target) return coeffs;
    }
    throw input_error("no primitive polynomial found; base is not a field");
}

FieldSpec find_primitive_polynomial(std::uint32_t p, std::uint32_t m) {
    if (!is_prime(p)) throw input_error("field characteristic must be prime");
    if (m < 1) throw input_error("extension degree must be >= 1");
    std::uint64_t order = checked_pow(p, static_cast<int>(m));
    if (order > max_space())
        throw space_limit_error("p^m exceeds the enumeration limit");
    SymbolField base(static_cast<int>(p));
    FieldSpec spec{p, m, find_primitive_polynomial_over(base, static_cast<int>(m))};
    return spec;
}

bool prime_power(int q, std::uint32_t& p, std::uint32_t& m) {
    if (q < 2) return false;
    int v = q;
    for (int d = 2; d <= v; ++d) {
        if (v % d != 0) continue;
        p = static_cast<std::uint32_t>(d);
        m = 0;
        while (v % d == 0) {
            v /= d;
            ++m;
        }
        return v == 1;
    }
    return false;
}

SymbolField::SymbolField(int q) : q_(q) {
    if (!prime_power(q, p_, m_)) throw input_error("symbol field size must be a prime power");
    if (q > 4096) throw input_error("symbol field tables capped at q <= 4096");
    add_.resize(static_cast<std::size_t>(q) * q);
    mul_.resize(static_cast<std::size_t>(q) * q);
    neg_.resize(static_cast<std::size_t>(q));
    if (m_ == 1) {
        for (int a = 0; a < q; ++a) {
            neg_[static_cast<std::size_t>(a)] = static_cast<Sym>((q - a) % q);
            for (int b = 0; b < q; ++b) {
                add_[idx(static_cast<Sym>(a), static_cast<Sym>(b))] = static_cast<Sym>((a + b) % q);
                mul_[idx(static_cast<Sym>(a), static_cast<Sym>(b))] = static_cast<Sym>((a * b) % q);
            }
        }
        return;
    }
    FieldSpec spec = find_primitive_polynomial(p_, m_);
    std::vector<FieldElement> elems(static_cast<std::size_t>(q));
    for (int s = 0; s < q; ++s)
        elems[static_cast<std::size_t>(s)] = element_from_symbol(spec, static_cast<std::uint64_t>(s));
    for (int a = 0; a < q; ++a) {
        neg_[static_cast<std::size_t>(a)] = static_cast<Sym>(
            symbol_from_element(spec, galois::neg(spec, elems[static_cast<std::size_t>(a)])));
        for (int b = 0; b < q; ++b) {
            add_[idx(static_cast<Sym>(a), static_cast<Sym>(b))] =
                static_cast<Sym>(symbol_from_element(
                    spec, galois::add(spec, elems[static_cast<std::size_t>(a)],
                                      elems[static_cast<std::size_t>(b)])));
            mul_[idx(static_cast<Sym>(a), static_cast<Sym>(b))] =
                static_cast<Sym>(symbol_from_element(
                    spec, galois::mul(spec, elems[static_cast<std::size_t>(a)],
                                      elems[static_cast<std::size_t>(b)])));
        }
    }
}

} // namespace anforge::galois
