#include <doctest.h>

#include "anforge/galois.hpp"
#include "helpers.hpp"

using namespace anforge;
using namespace anforge::galois;

namespace {

// independent oracle: naive polynomial power modulo (modulus, p), written
// against plain int vectors
std::vector<int> oracle_mulmod(std::vector<int> a, const std::vector<int>& b,
                               const std::vector<int>& modulus, int p) {
    std::size_t m = modulus.size() - 1;
    std::vector<int> prod(2 * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    for (std::size_t k = 2 * m; k-- > m;) {
        int c = prod[k];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= m; ++i) {
            std::size_t pos = k - m + i;
            prod[pos] = ((prod[pos] - c * modulus[i]) % p + p * p) % p;
        }
    }
    prod.resize(m);
    return prod;
}

std::uint64_t oracle_xi_order(const std::vector<int>& modulus, int p, std::uint64_t bound) {
    std::size_t m = modulus.size() - 1;
    std::vector<int> xi(m, 0), x;
    if (m == 1)
        xi[0] = (p - modulus[0] % p) % p;
    else
        xi[1] = 1;
    x = xi;
    for (std::uint64_t t = 1; t <= bound; ++t) {
        bool one = x[0] == 1;
        for (std::size_t i = 1; i < m; ++i) one = one && x[i] == 0;
        if (one) return t;
        x = oracle_mulmod(x, xi, modulus, p);
    }
    return 0;
}

FieldElement alpha(const FieldSpec& spec) {
    if (spec.m == 1)
        return FieldElement{{static_cast<Sym>((spec.p - spec.modulus[0] % spec.p) % spec.p)}};
    FieldElement e = zero(spec);
    e.coeffs[1] = 1;
    return e;
}

} // namespace

TEST_CASE("primitive polynomial for GF(2^3) is xi^3 + xi + 1") {
    FieldSpec spec = find_primitive_polynomial(2, 3);
    CHECK(spec.modulus == std::vector<Sym>{1, 1, 0, 1});
}

TEST_CASE("primitive polynomial for GF(2) is xi + 1") {
    FieldSpec spec = find_primitive_polynomial(2, 1);
    CHECK(spec.modulus == std::vector<Sym>{1, 1});
}

TEST_CASE("primitive polynomial for GF(3^2) has xi of order 8") {
    FieldSpec spec = find_primitive_polynomial(3, 2);
    CHECK(spec.modulus.size() == 3);
    CHECK(spec.modulus.back() == 1);
    std::vector<int> modulus(spec.modulus.begin(), spec.modulus.end());
    CHECK(oracle_xi_order(modulus, 3, 8) == 8);
    // deterministic
    CHECK(find_primitive_polynomial(3, 2).modulus == spec.modulus);
}

TEST_CASE("every returned modulus is primitive: order of xi is p^m - 1") {
    const std::pair<std::uint32_t, std::uint32_t> cases[] = {
        {2, 2}, {2, 4}, {2, 6}, {3, 3}, {5, 2}, {7, 1}, {11, 1}};
    for (auto [p, m] : cases) {
        FieldSpec spec = find_primitive_polynomial(p, m);
        CHECK(element_order(spec, alpha(spec)) == spec.order() - 1);
        std::vector<int> modulus(spec.modulus.begin(), spec.modulus.end());
        CHECK(oracle_xi_order(modulus, static_cast<int>(p), spec.order() - 1) == spec.order() - 1);
    }
}

TEST_CASE("GF(2^3): alpha * alpha^2 = alpha + 1 and alpha^7 = 1") {
    FieldSpec spec = find_primitive_polynomial(2, 3);
    FieldElement a = alpha(spec);
    FieldElement a2 = mul(spec, a, a);
    CHECK(mul(spec, a, a2).coeffs == std::vector<Sym>{1, 1, 0});
    CHECK(pow(spec, a, 7).coeffs == one(spec).coeffs);
    CHECK(element_order(spec, a) == 7);
    CHECK(element_order(spec, one(spec)) == 1);
    CHECK(element_order(spec, mul(spec, a2, a)) == 7); // alpha^3
}

TEST_CASE("multiplying by one is the identity on every element") {
    FieldSpec spec = find_primitive_polynomial(2, 3);
    for (std::uint64_t s = 0; s < spec.order(); ++s) {
        FieldElement e = element_from_symbol(spec, s);
        CHECK(mul(spec, e, one(spec)).coeffs == e.coeffs);
        CHECK(symbol_from_element(spec, e) == s);
    }
}

TEST_CASE("field axioms hold exhaustively for p^m <= 81") {
    const std::pair<std::uint32_t, std::uint32_t> cases[] = {{2, 2}, {2, 3}, {3, 2}, {2, 4}, {3, 4}, {5, 1}};
    for (auto [p, m] : cases) {
        FieldSpec spec = find_primitive_polynomial(p, m);
        std::uint64_t size = spec.order();
        std::vector<FieldElement> elems;
        for (std::uint64_t s = 0; s < size; ++s) elems.push_back(element_from_symbol(spec, s));

        for (std::uint64_t a = 0; a < size; ++a) {
            bool has_inverse = elems[a].is_zero();
            for (std::uint64_t b = 0; b < size; ++b) {
                CHECK(mul(spec, elems[a], elems[b]).coeffs == mul(spec, elems[b], elems[a]).coeffs);
                if (mul(spec, elems[a], elems[b]).coeffs == one(spec).coeffs) has_inverse = true;
            }
            CHECK(has_inverse);
        }
        // associativity and distributivity over all triples
        for (std::uint64_t a = 0; a < size; ++a)
            for (std::uint64_t b = 0; b < size; ++b)
                for (std::uint64_t c = 0; c < size; ++c) {
                    auto ab_c = mul(spec, mul(spec, elems[a], elems[b]), elems[c]);
                    auto a_bc = mul(spec, elems[a], mul(spec, elems[b], elems[c]));
                    CHECK(ab_c.coeffs == a_bc.coeffs);
                    auto left = mul(spec, elems[a], add(spec, elems[b], elems[c]));
                    auto right = add(spec, mul(spec, elems[a], elems[b]), mul(spec, elems[a], elems[c]));
                    CHECK(left.coeffs == right.coeffs);
                }
    }
}

TEST_CASE("element order rejects zero, mul rejects mismatched elements") {
    FieldSpec spec = find_primitive_polynomial(2, 3);
    CHECK_THROWS_AS(element_order(spec, zero(spec)), input_error);
    CHECK_THROWS_AS(mul(spec, FieldElement{{1, 0}}, one(spec)), input_error);
}

TEST_CASE("symbol fields match their backing field specs") {
    SymbolField f4(4);
    FieldSpec spec = find_primitive_polynomial(2, 2);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            auto ea = element_from_symbol(spec, static_cast<std::uint64_t>(a));
            auto eb = element_from_symbol(spec, static_cast<std::uint64_t>(b));
            CHECK(f4.mul(static_cast<Sym>(a), static_cast<Sym>(b)) ==
                  symbol_from_element(spec, mul(spec, ea, eb)));
            CHECK(f4.add(static_cast<Sym>(a), static_cast<Sym>(b)) ==
                  symbol_from_element(spec, add(spec, ea, eb)));
        }
    SymbolField f5(5);
    CHECK(f5.mul(3, 4) == 2);
    CHECK(f5.sub(1, 3) == 3);
    CHECK_THROWS_AS(SymbolField(6), input_error);
    CHECK_THROWS_AS(SymbolField(1), input_error);
}

TEST_CASE("prime power decomposition") {
    std::uint32_t p = 0, m = 0;
    CHECK(prime_power(8, p, m));
    CHECK(p == 2);
    CHECK(m == 3);
    CHECK(prime_power(9, p, m));
    CHECK(p == 3);
    CHECK(m == 2);
    CHECK(prime_power(7, p, m));
    CHECK(m == 1);
    CHECK_FALSE(prime_power(6, p, m));
    CHECK_FALSE(prime_power(12, p, m));
    CHECK_FALSE(prime_power(1, p, m));
}

TEST_CASE("primitive polynomials over composite symbol fields") {
    SymbolField f4(4);
    auto poly = find_primitive_polynomial_over(f4, 2);
    CHECK(poly.size() == 3);
    CHECK(poly.back() == 1);
    CHECK(poly[0] != 0);
    // consistency: the prime case agrees with the FieldSpec search
    SymbolField f2(2);
    auto over_f2 = find_primitive_polynomial_over(f2, 3);
    CHECK(over_f2 == find_primitive_polynomial(2, 3).modulus);
}
