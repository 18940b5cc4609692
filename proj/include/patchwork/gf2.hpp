/**
 * Exact linear algebra over the two-element field.
 *
 * Vectors are bit-packed into 64-bit words. Subspaces are always kept in
 * reduced row-echelon form, where the pivot of a basis vector is its lowest
 * set index and no other basis vector has that index set; two subspaces are
 * therefore equal exactly when their bases are equal.
 */

#ifndef PATCHWORK_GF2_HPP
#define PATCHWORK_GF2_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace patchwork::gf2 {

class DimensionError : public std::invalid_argument
{
    public:
        using std::invalid_argument::invalid_argument;
};

class BitVector
{
    public:
        static constexpr std::size_t npos = static_cast<std::size_t>(-1);

        BitVector() = default;
        explicit BitVector(std::size_t length);

        /** Build from explicit 0/1 entries, index 0 first. */
        static BitVector from_bits(const std::vector<int>& bits);
        static BitVector unit(std::size_t length, std::size_t index);

        std::size_t size() const { return length_; }
        bool test(std::size_t i) const
        {
            return (words_[i >> 6] >> (i & 63)) & 1U;
        }
        void set(std::size_t i, bool value = true);
        void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

        BitVector& operator^=(const BitVector& other);
        friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
        BitVector& operator&=(const BitVector& other);

        bool any() const;
        bool none() const { return !any(); }
        std::size_t count() const;

        /** Parity of the overlap, i.e. the standard bilinear form. */
        bool dot(const BitVector& other) const;

        std::size_t find_first() const;
        std::size_t find_next(std::size_t after) const;

        /** Concatenation: this followed by `tail`. */
        BitVector concat(const BitVector& tail) const;
        BitVector slice(std::size_t begin, std::size_t end) const;

        std::vector<int> to_bits() const;
        std::string to_string() const;

        friend bool operator==(const BitVector& a, const BitVector& b)
        {
            return a.length_ == b.length_ && a.words_ == b.words_;
        }
        /** Lexicographic on (length, entries from index 0). */
        friend bool operator<(const BitVector& a, const BitVector& b);

    private:
        std::size_t length_ = 0;
        std::vector<std::uint64_t> words_;
};

/** Row-major dense matrix. */
class Matrix
{
    public:
        Matrix() = default;
        Matrix(std::size_t rows, std::size_t cols);

        static Matrix identity(std::size_t n);
        static Matrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
        static Matrix from_rows(std::size_t cols, const std::vector<BitVector>& rows);
        static Matrix from_columns(std::size_t rows, const std::vector<BitVector>& columns);

        std::size_t rows() const { return rows_; }
        std::size_t cols() const { return cols_; }
        bool at(std::size_t r, std::size_t c) const { return data_[r].test(c); }
        void set(std::size_t r, std::size_t c, bool value = true) { data_[r].set(c, value); }
        const BitVector& row(std::size_t r) const { return data_[r]; }
        BitVector& row(std::size_t r) { return data_[r]; }
        BitVector column(std::size_t c) const;

        BitVector apply(const BitVector& x) const;
        Matrix transposed() const;
        bool is_zero() const;

        friend Matrix operator*(const Matrix& a, const Matrix& b);
        friend bool operator==(const Matrix& a, const Matrix& b)
        {
            return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
        }

        std::vector<std::vector<int>> to_nested() const;

    private:
        std::size_t rows_ = 0;
        std::size_t cols_ = 0;
        std::vector<BitVector> data_;
};

class Subspace
{
    public:
        Subspace() = default;
        explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

        /** Canonical basis of the span of arbitrary generators. */
        static Subspace span(std::size_t ambient_dim, const std::vector<BitVector>& generators);
        static Subspace full(std::size_t ambient_dim);

        std::size_t ambient_dim() const { return ambient_dim_; }
        std::size_t dim() const { return basis_.size(); }
        const std::vector<BitVector>& basis() const { return basis_; }
        const std::vector<std::size_t>& pivots() const { return pivots_; }

        /** Canonical representative of v modulo this subspace. */
        BitVector reduce(const BitVector& v) const;
        bool contains(const BitVector& v) const { return reduce(v).none(); }
        bool contains(const Subspace& other) const;

        /** Coefficients of v in the echelon basis, or nothing if v is outside. */
        std::optional<BitVector> coordinates(const BitVector& v) const;
        /** Inverse of coordinates(). */
        BitVector combine(const BitVector& coefficients) const;

        friend bool operator==(const Subspace& a, const Subspace& b)
        {
            return a.ambient_dim_ == b.ambient_dim_ && a.basis_ == b.basis_;
        }

    private:
        void insert(BitVector v);

        std::size_t ambient_dim_ = 0;
        std::vector<BitVector> basis_;
        std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& m);
Subspace kernel_basis(const Matrix& m);
/** Span of the columns of m. */
Subspace column_space(const Matrix& m);
/** Image of a subspace of the domain. */
Subspace image(const Matrix& m, const Subspace& domain);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
/** {x : m x in w}. */
Subspace preimage_subspace(const Matrix& m, const Subspace& w);
/** dim b - dim a, after checking a is contained in b. */
std::size_t quotient_dim(const Subspace& b, const Subspace& a);
/** Some x with m x = rhs, if one exists. */
std::optional<BitVector> solve(const Matrix& m, const BitVector& rhs);

}   // namespace patchwork::gf2

#endif
