#pragma once

// Exact arithmetic over GF(2) for the small projective spaces PG(3,2),
// PG(4,2) and PG(5,2).
//
// Bit ordering: coordinate x_k (1-based, as in the usual textbook forms)
// lives in bit position k-1 of BinaryVector::bits. Every module uses this.

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finigeo/errors.hpp"

namespace finigeo {

inline constexpr int kMaxDimension = 8;

struct BinaryVector {
    std::uint8_t bits = 0;
    int dim = 6;

    constexpr BinaryVector() = default;
    constexpr BinaryVector(std::uint8_t b, int d) : bits(b), dim(d) {
        if (d < 1 || d > kMaxDimension) throw InputError("BinaryVector: dimension out of range");
        if (d < 8 && (b >> d) != 0) throw InputError("BinaryVector: bits beyond dimension");
    }

    /// Standard basis vector e_k, k is 1-based.
    static constexpr BinaryVector unit(int k, int d) {
        if (k < 1 || k > d) throw InputError("BinaryVector::unit: index out of range");
        return BinaryVector(static_cast<std::uint8_t>(1u << (k - 1)), d);
    }

    /// Coordinate x_k, k is 1-based.
    [[nodiscard]] constexpr int coord(int k) const { return (bits >> (k - 1)) & 1; }
    [[nodiscard]] constexpr bool is_zero() const { return bits == 0; }
    [[nodiscard]] constexpr int weight() const { return std::popcount(bits); }

    friend constexpr BinaryVector operator+(BinaryVector a, BinaryVector b) {
        if (a.dim != b.dim) throw InputError("BinaryVector: dimension mismatch");
        return BinaryVector(static_cast<std::uint8_t>(a.bits ^ b.bits), a.dim);
    }
    friend constexpr bool operator==(BinaryVector, BinaryVector) = default;

    /// "(1,0,1,0,0,0)"
    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (int k = 1; k <= dim; ++k) {
            if (k > 1) s += ',';
            s += static_cast<char>('0' + coord(k));
        }
        return s + ")";
    }
};

/// All 2^d - 1 nonzero vectors, i.e. the points of PG(d-1,2), in increasing
/// order of their bit pattern.
inline std::vector<BinaryVector> projective_points(int dim) {
    if (dim < 1 || dim > kMaxDimension) throw InputError("projective_points: dimension out of range");
    std::vector<BinaryVector> out;
    const unsigned n = 1u << dim;
    out.reserve(n - 1);
    for (unsigned b = 1; b < n; ++b) out.emplace_back(static_cast<std::uint8_t>(b), dim);
    return out;
}

inline int parity(unsigned v) { return std::popcount(v) & 1; }

/// Symmetric bilinear form given by its Gram matrix; row i is a bit mask.
class BilinearForm {
public:
    explicit BilinearForm(int dim) : dim_(dim) {
        if (dim < 1 || dim > kMaxDimension) throw InputError("BilinearForm: dimension out of range");
    }

    [[nodiscard]] int dim() const { return dim_; }
    [[nodiscard]] int entry(int i, int j) const { return (rows_[i - 1] >> (j - 1)) & 1; }
    void set_entry(int i, int j, int value) {
        const auto mask = static_cast<std::uint8_t>(1u << (j - 1));
        if (value & 1) rows_[i - 1] |= mask; else rows_[i - 1] &= static_cast<std::uint8_t>(~mask);
    }

    [[nodiscard]] int eval(BinaryVector x, BinaryVector y) const {
        check(x);
        check(y);
        int acc = 0;
        for (int i = 0; i < dim_; ++i)
            if ((x.bits >> i) & 1) acc ^= parity(rows_[i] & y.bits);
        return acc;
    }

    /// Nonzero vectors of the radical {x : B(x,y) = 0 for all y}.
    [[nodiscard]] std::vector<BinaryVector> radical() const {
        std::vector<BinaryVector> out;
        const auto pts = projective_points(dim_);
        for (auto x : pts) {
            bool in = true;
            for (int k = 1; k <= dim_ && in; ++k)
                if (eval(x, BinaryVector::unit(k, dim_))) in = false;
            if (in) out.push_back(x);
        }
        return out;
    }

    /// Dimension of the radical as a vector space.
    [[nodiscard]] int radical_dimension() const {
        return std::bit_width(radical().size());  // |rad \ 0| = 2^r - 1
    }

    [[nodiscard]] bool is_alternating() const {
        for (int i = 1; i <= dim_; ++i)
            if (entry(i, i)) return false;
        return true;
    }

    friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    void check(BinaryVector v) const {
        if (v.dim != dim_) throw InputError("BilinearForm: dimension mismatch");
    }

    int dim_;
    std::array<std::uint8_t, kMaxDimension> rows_{};
};

/// theta(x,y) = sum_k x_{2k-1} y_{2k} + x_{2k} y_{2k-1}; signs vanish over GF(2).
class SymplecticForm {
public:
    explicit SymplecticForm(int dim = 6) : dim_(dim) {
        if (dim < 2 || dim > kMaxDimension || dim % 2 != 0)
            throw InputError("SymplecticForm: dimension must be even");
    }

    [[nodiscard]] int dim() const { return dim_; }

    [[nodiscard]] int eval(BinaryVector x, BinaryVector y) const {
        if (x.dim != dim_ || y.dim != dim_) throw InputError("SymplecticForm: dimension mismatch");
        // Swap each pair (x_{2k-1}, x_{2k}) and take the dot product.
        const unsigned odd = 0x55u, even = 0xAAu;
        const unsigned swapped = ((y.bits & odd) << 1) | ((y.bits & even) >> 1);
        return parity(x.bits & swapped);
    }

    [[nodiscard]] BilinearForm as_bilinear() const {
        BilinearForm b(dim_);
        for (int k = 1; k < dim_; k += 2) {
            b.set_entry(k, k + 1, 1);
            b.set_entry(k + 1, k, 1);
        }
        return b;
    }

private:
    int dim_;
};

enum class FormKind { Hyperbolic, Elliptic, Parabolic, Degenerate };

inline std::string to_string(FormKind k) {
    switch (k) {
        case FormKind::Hyperbolic: return "hyperbolic";
        case FormKind::Elliptic: return "elliptic";
        case FormKind::Parabolic: return "parabolic";
        case FormKind::Degenerate: return "degenerate";
    }
    return "?";
}

/// Q(x) = sum_{i<=j} c_ij x_i x_j with an upper-triangular coefficient table.
class QuadraticForm {
public:
    explicit QuadraticForm(int dim) : dim_(dim) {
        if (dim < 1 || dim > kMaxDimension) throw InputError("QuadraticForm: dimension out of range");
    }

    /// x1x2 + x3x4 + ... + x_{d-1}x_d
    static QuadraticForm hyperbolic(int dim) {
        if (dim % 2 != 0) throw InputError("hyperbolic form needs even dimension");
        QuadraticForm q(dim);
        for (int k = 1; k < dim; k += 2) q.set_coeff(k, k + 1, 1);
        return q;
    }

    /// x1^2 + x1x2 + x2^2 + x3x4 + ... ; f(x1,x2) = x1^2+x1x2+x2^2 is the
    /// irreducible binary quadratic.
    static QuadraticForm elliptic(int dim) {
        QuadraticForm q = hyperbolic(dim);
        q.set_coeff(1, 1, 1);
        q.set_coeff(2, 2, 1);
        return q;
    }

    /// x1x2 + ... + x_{d-2}x_{d-1} + x_d^2, d odd.
    static QuadraticForm parabolic(int dim) {
        if (dim % 2 != 1 || dim < 3) throw InputError("parabolic form needs odd dimension >= 3");
        QuadraticForm q(dim);
        for (int k = 1; k < dim - 1; k += 2) q.set_coeff(k, k + 1, 1);
        q.set_coeff(dim, dim, 1);
        return q;
    }

    [[nodiscard]] int dim() const { return dim_; }

    /// c_ij, i <= j, 1-based.
    [[nodiscard]] int coeff(int i, int j) const {
        if (i > j) std::swap(i, j);
        return (upper_[i - 1] >> (j - 1)) & 1;
    }
    void set_coeff(int i, int j, int value) {
        if (i < 1 || j < 1 || i > dim_ || j > dim_) throw InputError("QuadraticForm: index out of range");
        if (i > j) std::swap(i, j);
        const auto mask = static_cast<std::uint8_t>(1u << (j - 1));
        if (value & 1) upper_[i - 1] |= mask; else upper_[i - 1] &= static_cast<std::uint8_t>(~mask);
    }

    [[nodiscard]] int eval(BinaryVector x) const {
        if (x.dim != dim_) throw InputError("QuadraticForm: dimension mismatch");
        int acc = 0;
        for (int i = 0; i < dim_; ++i)
            if ((x.bits >> i) & 1) acc ^= parity(upper_[i] & x.bits);
        return acc;
    }

    /// Coefficient-wise sum (the forms' pointwise sum as functions).
    friend QuadraticForm operator+(const QuadraticForm& a, const QuadraticForm& b) {
        if (a.dim_ != b.dim_) throw InputError("QuadraticForm: dimension mismatch");
        QuadraticForm out(a.dim_);
        for (int i = 0; i < a.dim_; ++i) out.upper_[i] = a.upper_[i] ^ b.upper_[i];
        return out;
    }

    /// Projective zeros {x != 0 : Q(x) = 0}.
    [[nodiscard]] std::vector<BinaryVector> zeros() const {
        std::vector<BinaryVector> out;
        for (auto x : projective_points(dim_))
            if (eval(x) == 0) out.push_back(x);
        return out;
    }

private:
    int dim_;
    std::array<std::uint8_t, kMaxDimension> upper_{};
};

inline int symplectic_eval(const SymplecticForm& form, BinaryVector x, BinaryVector y) { return form.eval(x, y); }
inline int quad_eval(const QuadraticForm& form, BinaryVector x) { return form.eval(x); }

/// B(x,y) = Q(x+y) + Q(x) + Q(y), built from the identity on basis pairs.
inline BilinearForm polarize(const QuadraticForm& q) {
    const int d = q.dim();
    BilinearForm b(d);
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            const auto ei = BinaryVector::unit(i, d), ej = BinaryVector::unit(j, d);
            const int v = i == j ? 0 : q.eval(ei + ej) ^ q.eval(ei) ^ q.eval(ej);
            b.set_entry(i, j, v);
        }
    return b;
}

struct FormClassification {
    FormKind kind = FormKind::Degenerate;
    int zero_count = 0;  // projective zeros
    int radical_dimension = 0;
};

/// Classify by counting projective zeros on top of the polarization's radical.
/// dim 4: 9 / 5 zeros; dim 6: 35 / 27 zeros (non-degenerate polarization);
/// dim 5: 15 zeros with a one-dimensional radical not on the quadric.
inline FormClassification classify_form(const QuadraticForm& q) {
    const int d = q.dim();
    if (d < 4 || d > 6) throw InputError("classify_form: supported dimensions are 4, 5, 6");

    FormClassification out;
    out.zero_count = static_cast<int>(q.zeros().size());
    const auto b = polarize(q);
    const auto rad = b.radical();
    out.radical_dimension = b.radical_dimension();

    if (d % 2 == 0) {
        if (!rad.empty()) return out;
        const int hyp = d == 4 ? 9 : 35;
        const int ell = d == 4 ? 5 : 27;
        if (out.zero_count == hyp) out.kind = FormKind::Hyperbolic;
        else if (out.zero_count == ell) out.kind = FormKind::Elliptic;
        return out;
    }
    if (rad.size() == 1 && q.eval(rad.front()) == 1 && out.zero_count == 15) out.kind = FormKind::Parabolic;
    return out;
}

}  // namespace finigeo
