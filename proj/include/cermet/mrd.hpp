#pragma once

#include <cstdint>
#include <vector>

#include "cermet/gf.hpp"

namespace cermet {

// Dense row-major matrix over GF(2^m).
class GfMatrix {
public:
    GfMatrix() : rows_(0), cols_(0) {}
    GfMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, 0) {}

    static GfMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    gf::Elem& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    gf::Elem at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    bool operator==(const GfMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<gf::Elem> entries_;
};

// Monomial basis 1, x, x^2, ..., x^(n-1). Throws too_many_channels if n > m.
std::vector<gf::Elem> default_basis(std::size_t n, const gf::FieldSpec& spec);

// True iff the elements, viewed as bit vectors, have full rank over F_2.
bool check_f2_independence(const std::vector<gf::Elem>& h, unsigned m);

// Moore matrix H[i][j] = h_i^(2^j). Invertible whenever the basis is
// F_2-independent; throws dependent_basis otherwise.
GfMatrix build_parity_matrix(const std::vector<gf::Elem>& h, const gf::FieldSpec& spec);

// Gauss-Jordan elimination; pivots on the first nonzero entry in each column
// (every nonzero field element is an exact pivot). Verifies A * A^-1 = I
// before returning. Throws singular.
GfMatrix invert_matrix(const GfMatrix& a, const gf::FieldSpec& spec);

std::vector<gf::Elem> mat_vec_mul(const GfMatrix& a, const std::vector<gf::Elem>& v,
                                  const gf::FieldSpec& spec);

// The secrecy code shared by sender and receiver: basis h, parity matrix H
// (Moore form), and the cached generator G = H^-1 used for premixing.
// Immutable after construction; the matrix itself is public.
class SecrecyCode {
public:
    // Default monomial basis.
    SecrecyCode(std::size_t n, const gf::FieldSpec& spec);
    SecrecyCode(std::vector<gf::Elem> h, const gf::FieldSpec& spec);

    // H = G = I; leaks by construction. Negative control for audits.
    static SecrecyCode identity(std::size_t n, const gf::FieldSpec& spec);

    std::size_t n() const { return n_; }
    const gf::FieldSpec& spec() const { return spec_; }
    const std::vector<gf::Elem>& basis() const { return h_; }
    const GfMatrix& parity() const { return H_; }     // receiver-side unmixer
    const GfMatrix& generator() const { return G_; }  // sender-side premixer

    // Canonical byte form: m u8, poly u32 BE, n u8, then n basis elements
    // as u16 BE. Only basis-built (Moore) codes serialize; the identity
    // control has no basis and throws bad_config.
    std::vector<std::uint8_t> serialize() const;
    static SecrecyCode deserialize(const std::vector<std::uint8_t>& bytes);

private:
    SecrecyCode(std::size_t n, const gf::FieldSpec& spec, GfMatrix h_mat, GfMatrix g_mat);

    std::size_t n_;
    gf::FieldSpec spec_;
    std::vector<gf::Elem> h_;
    GfMatrix H_;
    GfMatrix G_;
};

}  // namespace cermet
