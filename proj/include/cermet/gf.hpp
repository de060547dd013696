#pragma once

#include <cstdint>
#include <vector>

#include "cermet/errors.hpp"

namespace cermet::gf {

// Element of GF(2^m), m <= 16. Bit i is the coefficient of x^i.
using Elem = std::uint16_t;

// Binary extension field GF(2^m) given by an irreducible reduction polynomial.
// The polynomial is encoded as an (m+1)-bit integer with the top bit set,
// e.g. 0x13 = x^4 + x + 1.
class FieldSpec {
public:
    FieldSpec(unsigned m, std::uint32_t reduction_poly);

    // Default field for m in {2, 4, 8, 16}: 0x7, 0x13, 0x11B, 0x1100B.
    // 0x13 and 0x1100B are primitive, so x (= 2) generates the multiplicative
    // group; 0x11B is the AES polynomial, irreducible but with 2 of order 51.
    static FieldSpec with_default_poly(unsigned m);

    unsigned m() const { return m_; }
    std::uint32_t order() const { return std::uint32_t(1) << m_; }  // q = 2^m
    std::uint32_t reduction_poly() const { return poly_; }
    Elem max_element() const { return Elem(order() - 1); }

    bool operator==(const FieldSpec&) const = default;

private:
    unsigned m_;
    std::uint32_t poly_;
};

// Discrete log / antilog tables for one (field, generator) pair.
// log[0] is the sentinel q-1, which is never a valid exponent.
struct LogExpTables {
    FieldSpec spec;
    Elem generator;
    std::vector<std::uint16_t> log;
    std::vector<Elem> exp;  // exp[q-1] wraps to 1

    static constexpr std::uint16_t kNoLog = 0xFFFF;
};

Elem gf_add(Elem a, Elem b);

// Shift-and-XOR multiplication with per-step modular reduction.
Elem gf_mul_rpa(Elem a, Elem b, const FieldSpec& spec);

// Requires a generator of the full multiplicative group; throws not_primitive
// if its order is less than 2^m - 1.
LogExpTables build_log_exp_tables(const FieldSpec& spec, Elem generator = 2);

Elem gf_mul_table(Elem a, Elem b, const LogExpTables& tables);

// Smallest element >= 2 that generates the multiplicative group.
Elem find_generator(const FieldSpec& spec);

Elem gf_pow(Elem a, std::uint64_t k, const FieldSpec& spec);

// a^(2^j): j-fold Frobenius. F_2-linear in a.
Elem gf_pow2k(Elem a, unsigned j, const FieldSpec& spec);

Elem gf_inv(Elem a, const FieldSpec& spec);

}  // namespace cermet::gf
