#include "cermet/gf.hpp"

namespace cermet::gf {

namespace {

unsigned poly_degree(std::uint64_t p) {
    unsigned d = 0;
    while (p >>= 1) ++d;
    return d;
}

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t p) {
    const unsigned dp = poly_degree(p);
    while (a >> dp) {
        a ^= p << (poly_degree(a) - dp);
    }
    return a;
}

// Irreducible over F_2 iff no divisor of degree 1..m/2.
bool poly_irreducible(std::uint32_t p, unsigned m) {
    for (std::uint64_t g = 2; poly_degree(g) <= m / 2; ++g) {
        if (poly_mod(p, g) == 0) return false;
    }
    return true;
}

}  // namespace

FieldSpec::FieldSpec(unsigned m, std::uint32_t reduction_poly) : m_(m), poly_(reduction_poly) {
    if (m < 2 || m > 16) raise(Errc::bad_config, "field degree m must be in [2, 16]");
    if (poly_degree(poly_) != m)
        raise(Errc::bad_config, "reduction polynomial degree does not match m");
    if (!poly_irreducible(poly_, m_))
        raise(Errc::bad_config, "reduction polynomial is reducible over F_2");
}

FieldSpec FieldSpec::with_default_poly(unsigned m) {
    switch (m) {
        case 2: return FieldSpec(2, 0x7);           // x^2+x+1
        case 4: return FieldSpec(4, 0x13);          // x^4+x+1
        case 8: return FieldSpec(8, 0x11B);         // x^8+x^4+x^3+x+1 (AES)
        case 16: return FieldSpec(16, 0x1100B);     // x^16+x^12+x^3+x+1
        default:
            raise(Errc::bad_config, "no default reduction polynomial for m=" + std::to_string(m) +
                                        "; pass one explicitly");
    }
}

Elem gf_add(Elem a, Elem b) { return Elem(a ^ b); }

Elem gf_mul_rpa(Elem a_in, Elem b_in, const FieldSpec& spec) {
    if (a_in == 0 || b_in == 0) return 0;
    const unsigned m = spec.m();
    const std::uint32_t p = spec.reduction_poly();
    const std::uint32_t mask = std::uint32_t(1) << (m - 1);
    std::uint32_t a = a_in, b = b_in, c = 0;
    for (unsigned i = 0; i < m; ++i) {
        if (b == 0) break;
        if (b & 1) c ^= a;
        const std::uint32_t highbit = a & mask;
        a <<= 1;
        b >>= 1;
        if (highbit) a ^= p;
    }
    return Elem(c);
}

LogExpTables build_log_exp_tables(const FieldSpec& spec, Elem generator) {
    const std::uint32_t q = spec.order();
    LogExpTables t{spec, generator,
                   std::vector<std::uint16_t>(q, LogExpTables::kNoLog),
                   std::vector<Elem>(q, 0)};
    Elem power = 1;
    for (std::uint32_t i = 0; i + 1 < q; ++i) {
        if (t.log[power] != LogExpTables::kNoLog)
            raise(Errc::not_primitive, "generator order divides " + std::to_string(i) +
                                           " < 2^m - 1");
        t.log[power] = std::uint16_t(i);
        t.exp[i] = power;
        power = gf_mul_rpa(generator, power, spec);
    }
    if (power != 1) raise(Errc::not_primitive, "generator powers do not close the group");
    t.log[0] = LogExpTables::kNoLog;
    t.exp[q - 1] = 1;  // wraparound padding, exponent q-1 == exponent 0
    return t;
}

Elem gf_mul_table(Elem a, Elem b, const LogExpTables& tables) {
    if (a == 0 || b == 0) return 0;
    const std::uint32_t group = tables.spec.order() - 1;
    const std::uint32_t s = (std::uint32_t(tables.log[a]) + tables.log[b]) % group;
    return tables.exp[s];
}

Elem find_generator(const FieldSpec& spec) {
    const std::uint32_t q = spec.order();
    for (std::uint32_t g = 2; g < q; ++g) {
        std::uint32_t ord = 1;
        Elem x = Elem(g);
        while (x != 1) {
            x = gf_mul_rpa(x, Elem(g), spec);
            ++ord;
        }
        if (ord == q - 1) return Elem(g);
    }
    raise(Errc::not_primitive, "no generator found (field misconstructed)");
}

Elem gf_pow(Elem a, std::uint64_t k, const FieldSpec& spec) {
    if (a == 0) return k == 0 ? Elem(1) : Elem(0);
    Elem result = 1, base = a;
    while (k) {
        if (k & 1) result = gf_mul_rpa(result, base, spec);
        base = gf_mul_rpa(base, base, spec);
        k >>= 1;
    }
    return result;
}

Elem gf_pow2k(Elem a, unsigned j, const FieldSpec& spec) {
    Elem r = a;
    for (unsigned i = 0; i < j; ++i) r = gf_mul_rpa(r, r, spec);
    return r;
}

Elem gf_inv(Elem a, const FieldSpec& spec) {
    if (a == 0) raise(Errc::division_by_zero, "inverse of zero");
    return gf_pow(a, spec.order() - 2, spec);
}

}  // namespace cermet::gf
