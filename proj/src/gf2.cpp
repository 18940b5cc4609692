#include "patchwork/gf2.hpp"

#include <algorithm>
#include <bit>

namespace patchwork::gf2 {

namespace {

std::size_t word_count(std::size_t length) { return (length + 63) / 64; }

void require_same(std::size_t a, std::size_t b, const char* what)
{
    if (a != b) {
        throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                             " vs " + std::to_string(b) + ")");
    }
}

}   // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::from_bits(const std::vector<int>& bits)
{
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] & 1) {
            v.set(i);
        }
    }
    return v;
}

BitVector BitVector::unit(std::size_t length, std::size_t index)
{
    BitVector v(length);
    v.set(index);
    return v;
}

void BitVector::set(std::size_t i, bool value)
{
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    require_same(length_, other.length_, "xor");
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other)
{
    require_same(length_, other.length_, "and");
    for (std::size_t w = 0; w < words_.size(); ++w) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

bool BitVector::any() const
{
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::count() const
{
    std::size_t total = 0;
    for (auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

bool BitVector::dot(const BitVector& other) const
{
    require_same(length_, other.length_, "dot");
    unsigned parity = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        parity ^= static_cast<unsigned>(std::popcount(words_[w] & other.words_[w])) & 1U;
    }
    return parity != 0;
}

std::size_t BitVector::find_first() const
{
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
    }
    return npos;
}

std::size_t BitVector::find_next(std::size_t after) const
{
    std::size_t i = after + 1;
    if (i >= length_) {
        return npos;
    }
    std::size_t w = i >> 6;
    std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
    while (true) {
        if (word != 0) {
            return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        }
        if (++w >= words_.size()) {
            return npos;
        }
        word = words_[w];
    }
}

BitVector BitVector::concat(const BitVector& tail) const
{
    BitVector out(length_ + tail.length_);
    for (std::size_t i = find_first(); i != npos; i = find_next(i)) {
        out.set(i);
    }
    for (std::size_t i = tail.find_first(); i != npos; i = tail.find_next(i)) {
        out.set(length_ + i);
    }
    return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t end) const
{
    if (begin > end || end > length_) {
        throw DimensionError("slice out of range");
    }
    BitVector out(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
        if (test(i)) {
            out.set(i - begin);
        }
    }
    return out;
}

std::vector<int> BitVector::to_bits() const
{
    std::vector<int> bits(length_);
    for (std::size_t i = 0; i < length_; ++i) {
        bits[i] = test(i) ? 1 : 0;
    }
    return bits;
}

std::string BitVector::to_string() const
{
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i) {
        if (test(i)) {
            s[i] = '1';
        }
    }
    return s;
}

bool operator<(const BitVector& a, const BitVector& b)
{
    if (a.length_ != b.length_) {
        return a.length_ < b.length_;
    }
    for (std::size_t i = 0; i < a.length_; ++i) {
        const bool x = a.test(i);
        const bool y = b.test(i);
        if (x != y) {
            return y;
        }
    }
    return false;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols))
{
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<int>> rows)
{
    const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
    Matrix m(rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        require_same(row.size(), cols, "from_rows");
        std::size_t c = 0;
        for (int value : row) {
            m.set(r, c++, (value & 1) != 0);
        }
        ++r;
    }
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<BitVector>& rows)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same(rows[r].size(), cols, "from_rows");
        m.data_[r] = rows[r];
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<BitVector>& columns)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        require_same(columns[c].size(), rows, "from_columns");
        for (std::size_t r = columns[c].find_first(); r != BitVector::npos;
             r = columns[c].find_next(r)) {
            m.set(r, c);
        }
    }
    return m;
}

BitVector Matrix::column(std::size_t c) const
{
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (at(r, c)) {
            v.set(r);
        }
    }
    return v;
}

BitVector Matrix::apply(const BitVector& x) const
{
    require_same(x.size(), cols_, "apply");
    BitVector y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (data_[r].dot(x)) {
            y.set(r);
        }
    }
    return y;
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = data_[r].find_first(); c != BitVector::npos;
             c = data_[r].find_next(c)) {
            t.set(c, r);
        }
    }
    return t;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const BitVector& r) { return r.none(); });
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    require_same(a.cols_, b.rows_, "multiply");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
        BitVector acc(b.cols_);
        const BitVector& row = a.data_[r];
        for (std::size_t k = row.find_first(); k != BitVector::npos; k = row.find_next(k)) {
            acc ^= b.data_[k];
        }
        out.data_[r] = std::move(acc);
    }
    return out;
}

std::vector<std::vector<int>> Matrix::to_nested() const
{
    std::vector<std::vector<int>> out;
    out.reserve(rows_);
    for (const auto& row : data_) {
        out.push_back(row.to_bits());
    }
    return out;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<BitVector>& generators)
{
    Subspace s(ambient_dim);
    for (const auto& g : generators) {
        require_same(g.size(), ambient_dim, "span");
        s.insert(g);
    }
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim)
{
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        s.basis_.push_back(BitVector::unit(ambient_dim, i));
        s.pivots_.push_back(i);
    }
    return s;
}

BitVector Subspace::reduce(const BitVector& v) const
{
    require_same(v.size(), ambient_dim_, "reduce");
    BitVector r = v;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (r.test(pivots_[i])) {
            r ^= basis_[i];
        }
    }
    return r;
}

bool Subspace::contains(const Subspace& other) const
{
    require_same(other.ambient_dim_, ambient_dim_, "contains");
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [this](const BitVector& v) { return contains(v); });
}

std::optional<BitVector> Subspace::coordinates(const BitVector& v) const
{
    BitVector coeffs(basis_.size());
    BitVector r = v;
    require_same(v.size(), ambient_dim_, "coordinates");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (r.test(pivots_[i])) {
            r ^= basis_[i];
            coeffs.set(i);
        }
    }
    if (r.any()) {
        return std::nullopt;
    }
    return coeffs;
}

BitVector Subspace::combine(const BitVector& coefficients) const
{
    require_same(coefficients.size(), basis_.size(), "combine");
    BitVector out(ambient_dim_);
    for (std::size_t i = coefficients.find_first(); i != BitVector::npos;
         i = coefficients.find_next(i)) {
        out ^= basis_[i];
    }
    return out;
}

void Subspace::insert(BitVector v)
{
    v = reduce(v);
    const std::size_t p = v.find_first();
    if (p == BitVector::npos) {
        return;
    }
    for (auto& b : basis_) {
        if (b.test(p)) {
            b ^= v;
        }
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(v));
}

std::size_t rank(const Matrix& m)
{
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows.push_back(m.row(r));
    }
    return Subspace::span(m.cols(), rows).dim();
}

Subspace kernel_basis(const Matrix& m)
{
    // Row-reduce [M^T | I]; rows whose left part vanishes carry kernel vectors.
    const std::size_t n = m.cols();
    const std::size_t rows = m.rows();
    std::vector<BitVector> work;
    work.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        work.push_back(m.column(c).concat(BitVector::unit(n, c)));
    }
    std::size_t lead = 0;
    for (std::size_t col = 0; col < rows && lead < work.size(); ++col) {
        std::size_t pick = lead;
        while (pick < work.size() && !work[pick].test(col)) {
            ++pick;
        }
        if (pick == work.size()) {
            continue;
        }
        std::swap(work[lead], work[pick]);
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i != lead && work[i].test(col)) {
                work[i] ^= work[lead];
            }
        }
        ++lead;
    }
    std::vector<BitVector> kernel;
    for (std::size_t i = lead; i < work.size(); ++i) {
        kernel.push_back(work[i].slice(rows, rows + n));
    }
    return Subspace::span(n, kernel);
}

Subspace column_space(const Matrix& m)
{
    std::vector<BitVector> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        cols.push_back(m.column(c));
    }
    return Subspace::span(m.rows(), cols);
}

Subspace image(const Matrix& m, const Subspace& domain)
{
    require_same(domain.ambient_dim(), m.cols(), "image");
    std::vector<BitVector> imgs;
    imgs.reserve(domain.dim());
    for (const auto& b : domain.basis()) {
        imgs.push_back(m.apply(b));
    }
    return Subspace::span(m.rows(), imgs);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b)
{
    require_same(a.ambient_dim(), b.ambient_dim(), "subspace_sum");
    std::vector<BitVector> gens = a.basis();
    gens.insert(gens.end(), b.basis().begin(), b.basis().end());
    return Subspace::span(a.ambient_dim(), gens);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b)
{
    // Zassenhaus: reduce rows (a|a) and (b|0); rows with zero left half span a ∩ b.
    require_same(a.ambient_dim(), b.ambient_dim(), "subspace_intersection");
    const std::size_t n = a.ambient_dim();
    std::vector<BitVector> gens;
    for (const auto& v : a.basis()) {
        gens.push_back(v.concat(v));
    }
    for (const auto& v : b.basis()) {
        gens.push_back(v.concat(BitVector(n)));
    }
    const Subspace joint = Subspace::span(2 * n, gens);
    std::vector<BitVector> out;
    for (std::size_t i = 0; i < joint.dim(); ++i) {
        if (joint.pivots()[i] >= n) {
            out.push_back(joint.basis()[i].slice(n, 2 * n));
        }
    }
    return Subspace::span(n, out);
}

Subspace preimage_subspace(const Matrix& m, const Subspace& w)
{
    require_same(w.ambient_dim(), m.rows(), "preimage_subspace");
    // x ↦ (M x mod W) is linear; its kernel is the preimage.
    Matrix residue(m.rows(), m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        const BitVector r = w.reduce(m.column(c));
        for (std::size_t i = r.find_first(); i != BitVector::npos; i = r.find_next(i)) {
            residue.set(i, c);
        }
    }
    return kernel_basis(residue);
}

std::size_t quotient_dim(const Subspace& b, const Subspace& a)
{
    require_same(a.ambient_dim(), b.ambient_dim(), "quotient_dim");
    if (!b.contains(a)) {
        throw DimensionError("quotient_dim: subspace is not contained in the larger space");
    }
    return b.dim() - a.dim();
}

std::optional<BitVector> solve(const Matrix& m, const BitVector& rhs)
{
    require_same(rhs.size(), m.rows(), "solve");
    // Track which columns build each echelon vector of the column space.
    const std::size_t n = m.cols();
    std::vector<BitVector> basis;
    std::vector<std::size_t> pivots;
    std::vector<BitVector> combos;
    for (std::size_t c = 0; c < n; ++c) {
        BitVector v = m.column(c);
        BitVector combo = BitVector::unit(n, c);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (v.test(pivots[i])) {
                v ^= basis[i];
                combo ^= combos[i];
            }
        }
        const std::size_t p = v.find_first();
        if (p == BitVector::npos) {
            continue;
        }
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].test(p)) {
                basis[i] ^= v;
                combos[i] ^= combo;
            }
        }
        basis.push_back(std::move(v));
        pivots.push_back(p);
        combos.push_back(std::move(combo));
    }
    BitVector r = rhs;
    BitVector x(n);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (r.test(pivots[i])) {
            r ^= basis[i];
            x ^= combos[i];
        }
    }
    if (r.any()) {
        return std::nullopt;
    }
    return x;
}

}   // namespace patchwork::gf2
