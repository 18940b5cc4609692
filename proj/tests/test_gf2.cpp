#include "catch_amalgamated.hpp"

#include "generators.hpp"

#include "patchwork/gf2.hpp"

using namespace patchwork::gf2;
using patchwork::testing::Rng;

namespace {

BitVector random_vector(std::size_t n, Rng& rng)
{
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v.set(i, (rng() & 1U) != 0);
    }
    return v;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng)
{
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        m.row(r) = random_vector(cols, rng);
    }
    return m;
}

BitVector from_index(std::size_t n, std::size_t index)
{
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v.set(i, ((index >> i) & 1U) != 0);
    }
    return v;
}

/** Every element of a subspace, by brute force over the ambient space. */
std::vector<BitVector> members(const Subspace& s)
{
    std::vector<BitVector> out;
    for (std::size_t i = 0; i < (std::size_t{1} << s.ambient_dim()); ++i) {
        auto v = from_index(s.ambient_dim(), i);
        if (s.contains(v)) {
            out.push_back(v);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BitVector> span_members(std::size_t n, const std::vector<BitVector>& gens)
{
    std::vector<BitVector> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << gens.size()); ++mask) {
        BitVector v(n);
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (mask & (std::size_t{1} << i)) {
                v ^= gens[i];
            }
        }
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}   // namespace

TEST_CASE("bit vectors across word boundaries")
{
    BitVector v(130);
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.count() == 3);
    CHECK(v.find_first() == 0);
    CHECK(v.find_next(0) == 64);
    CHECK(v.find_next(64) == 129);
    CHECK(v.find_next(129) == BitVector::npos);
    v.flip(64);
    CHECK(v.count() == 2);
    CHECK(v.slice(120, 130).find_first() == 9);
    CHECK(v.concat(BitVector::unit(3, 1)).size() == 133);
    CHECK(v.concat(BitVector::unit(3, 1)).test(131));
}

TEST_CASE("bit vector basics")
{
    const auto a = BitVector::from_bits({1, 0, 1, 1});
    const auto b = BitVector::from_bits({0, 1, 1, 0});
    CHECK((a ^ b).to_bits() == std::vector<int>{1, 1, 0, 1});
    CHECK(a.dot(b) == true);
    CHECK(a.to_string() == "1011");
    CHECK(BitVector(5).none());
    BitVector c = a;
    c &= b;
    CHECK(c.to_bits() == std::vector<int>{0, 0, 1, 0});
    CHECK_THROWS_AS(a ^ BitVector(3), DimensionError);
}

TEST_CASE("matrix product and transpose")
{
    const auto m = Matrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    const auto t = m.transposed();
    CHECK(t.rows() == 3);
    CHECK((m * t).to_nested() == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    CHECK(m.apply(BitVector::from_bits({1, 1, 1})).to_bits() == std::vector<int>{0, 0});
    CHECK(m.column(1).to_bits() == std::vector<int>{1, 1});
    CHECK_THROWS_AS(m * m, DimensionError);
}

TEST_CASE("rank, kernel and column space of a fixed matrix")
{
    const auto m = Matrix::from_rows({{1, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 1}});
    CHECK(rank(m) == 2);
    const auto k = kernel_basis(m);
    CHECK(k.dim() == 2);
    for (const auto& v : k.basis()) {
        CHECK(m.apply(v).none());
    }
    CHECK(column_space(m).dim() == 2);
}

TEST_CASE("rank-nullity and kernel correctness on random matrices")
{
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 9;
        const std::size_t cols = 1 + rng() % 9;
        const auto m = random_matrix(rows, cols, rng);
        const auto k = kernel_basis(m);
        CHECK(rank(m) + k.dim() == cols);
        CHECK(rank(m) == rank(m.transposed()));
        CHECK(column_space(m).dim() == rank(m));
        std::size_t zeros = 0;
        for (std::size_t i = 0; i < (std::size_t{1} << cols); ++i) {
            const auto v = from_index(cols, i);
            const bool in_kernel = m.apply(v).none();
            zeros += in_kernel ? 1 : 0;
            CHECK(in_kernel == k.contains(v));
        }
        CHECK(zeros == (std::size_t{1} << k.dim()));
    }
}

TEST_CASE("subspace span is canonical")
{
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 7;
        std::vector<BitVector> gens;
        const std::size_t count = rng() % 6;
        for (std::size_t i = 0; i < count; ++i) {
            gens.push_back(random_vector(n, rng));
        }
        const auto s = Subspace::span(n, gens);
        auto shuffled = gens;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        if (shuffled.size() >= 2) {
            shuffled[0] ^= shuffled[1];
        }
        CHECK(Subspace::span(n, shuffled) == s);
        CHECK(members(s) == span_members(n, gens));
        for (std::size_t i = 0; i < s.dim(); ++i) {
            CHECK(s.basis()[i].find_first() == s.pivots()[i]);
        }
    }
}

TEST_CASE("sum, intersection and preimage against brute force")
{
    Rng rng(13);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 6;
        std::vector<BitVector> ga;
        std::vector<BitVector> gb;
        const std::size_t na = rng() % 5;
        const std::size_t nb = rng() % 5;
        for (std::size_t i = 0; i < na; ++i) {
            ga.push_back(random_vector(n, rng));
        }
        for (std::size_t i = 0; i < nb; ++i) {
            gb.push_back(random_vector(n, rng));
        }
        const auto a = Subspace::span(n, ga);
        const auto b = Subspace::span(n, gb);
        const auto sum = subspace_sum(a, b);
        const auto meet = subspace_intersection(a, b);
        CHECK(sum.dim() + meet.dim() == a.dim() + b.dim());
        for (std::size_t i = 0; i < (std::size_t{1} << n); ++i) {
            const auto v = from_index(n, i);
            CHECK(meet.contains(v) == (a.contains(v) && b.contains(v)));
        }
        auto all = ga;
        all.insert(all.end(), gb.begin(), gb.end());
        CHECK(members(sum) == span_members(n, all));

        const std::size_t cols = 1 + rng() % 6;
        const auto m = random_matrix(n, cols, rng);
        const auto pre = preimage_subspace(m, a);
        for (std::size_t i = 0; i < (std::size_t{1} << cols); ++i) {
            const auto v = from_index(cols, i);
            CHECK(pre.contains(v) == a.contains(m.apply(v)));
        }
        const auto dom = Subspace::span(cols, {random_vector(cols, rng), random_vector(cols, rng)});
        const auto img = image(m, dom);
        for (const auto& v : members(dom)) {
            CHECK(img.contains(m.apply(v)));
        }
        CHECK(img.dim() <= dom.dim());
    }
}

TEST_CASE("coordinates round trip and quotient dimension")
{
    Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 8;
        const auto s = Subspace::span(n, {random_vector(n, rng), random_vector(n, rng), random_vector(n, rng)});
        for (const auto& v : members(s)) {
            const auto c = s.coordinates(v);
            REQUIRE(c.has_value());
            CHECK(s.combine(*c) == v);
        }
        const auto outside = random_vector(n, rng);
        CHECK(s.coordinates(outside).has_value() == s.contains(outside));
        const auto small = Subspace::span(n, {s.dim() ? s.basis().front() : BitVector(n)});
        CHECK(quotient_dim(s, small) == s.dim() - small.dim());
    }
    const auto a = Subspace::span(3, {BitVector::from_bits({1, 0, 0})});
    const auto b = Subspace::span(3, {BitVector::from_bits({0, 1, 0})});
    CHECK_THROWS(quotient_dim(a, b));
}

TEST_CASE("solve finds solutions exactly when the system is consistent")
{
    Rng rng(15);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 7;
        const std::size_t cols = 1 + rng() % 7;
        const auto m = random_matrix(rows, cols, rng);
        const auto rhs = random_vector(rows, rng);
        const auto x = solve(m, rhs);
        bool consistent = false;
        for (std::size_t i = 0; i < (std::size_t{1} << cols); ++i) {
            consistent = consistent || m.apply(from_index(cols, i)) == rhs;
        }
        CHECK(x.has_value() == consistent);
        if (x) {
            CHECK(m.apply(*x) == rhs);
        }
    }
}
