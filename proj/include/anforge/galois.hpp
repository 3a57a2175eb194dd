#pragma once

#include <cstdint>
#include <vector>

#include "anforge/core.hpp"

namespace anforge::galois {

// GF(p^m) presented as GF(p)[xi]/(modulus). modulus holds m+1 coefficients
// c0..cm with cm = 1; elements are coefficient vectors of length m.
struct FieldSpec {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::vector<Sym> modulus;

    std::uint64_t order() const; // p^m
};

struct FieldElement {
    std::vector<Sym> coeffs;

    bool is_zero() const;
};

bool is_prime(std::uint64_t v);

FieldElement zero(const FieldSpec& spec);
FieldElement one(const FieldSpec& spec);

// Alphabet symbol s <-> the element whose coefficient vector is the base-p
// digit expansion of s.
FieldElement element_from_symbol(const FieldSpec& spec, std::uint64_t s);
std::uint64_t symbol_from_element(const FieldSpec& spec, const FieldElement& a);

FieldElement add(const FieldSpec& spec, const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldSpec& spec, const FieldElement& a, const FieldElement& b);
FieldElement neg(const FieldSpec& spec, const FieldElement& a);
FieldElement mul(const FieldSpec& spec, const FieldElement& a, const FieldElement& b);
FieldElement pow(const FieldSpec& spec, const FieldElement& a, std::uint64_t e);

// Least t >= 1 with a^t = 1; throws input_error on a = 0.
std::uint64_t element_order(const FieldSpec& spec, const FieldElement& a);

// Lexicographically smallest (by packed coefficient value) monic degree-m
// polynomial over GF(p) whose root xi has multiplicative order p^m - 1.
// Primitivity is established by direct order computation.
FieldSpec find_primitive_polynomial(std::uint32_t p, std::uint32_t m);

// Arithmetic on alphabet symbols 0..q-1 for a prime power q = p^m, backed
// by table lookups. For m = 1 this is plain Z_p; for m > 1 the tables come
// from the canonical FieldSpec(p, m).
class SymbolField {
  public:
    explicit SymbolField(int q);

    int q() const { return q_; }
    std::uint32_t characteristic() const { return p_; }
    std::uint32_t extension_degree() const { return m_; }

    Sym add(Sym a, Sym b) const { return add_[idx(a, b)]; }
    Sym mul(Sym a, Sym b) const { return mul_[idx(a, b)]; }
    Sym neg(Sym a) const { return neg_[a]; }
    Sym sub(Sym a, Sym b) const { return add(a, neg(b)); }

  private:
    std::size_t idx(Sym a, Sym b) const { return static_cast<std::size_t>(a) * q_ + b; }

    int q_;
    std::uint32_t p_;
    std::uint32_t m_;
    std::vector<Sym> add_;
    std::vector<Sym> mul_;
    std::vector<Sym> neg_;
};

// q = p^m decomposition; returns false when q is not a prime power >= 2.
bool prime_power(int q, std::uint32_t& p, std::uint32_t& m);

// Lexicographically smallest monic degree-n polynomial over the symbol
// field K (coefficients c0..c_{n-1} packed in base q) that is primitive:
// xi has order q^n - 1 in K[xi]/(P). Returns the n+1 coefficients.
std::vector<Sym> find_primitive_polynomial_over(const SymbolField& field, int n);

} // namespace anforge::galois
