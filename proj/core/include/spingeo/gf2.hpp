#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spingeo {

// Vector over GF(2). Bits are packed into 64-bit words; all observable
// behaviour is independent of the word size. Addition is XOR.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length);

    static BitVector unit(std::size_t length, std::size_t index);
    static BitVector from_bits(std::initializer_list<int> bits);
    static BitVector from_string(std::string_view bits);  // e.g. "1011"

    std::size_t size() const { return length_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value);

    bool is_zero() const;
    std::size_t popcount() const;

    // <u,v> = sum_i u_i v_i (mod 2)
    int dot(const BitVector& other) const;

    BitVector& operator+=(const BitVector& other);
    friend BitVector operator+(BitVector lhs, const BitVector& rhs)
    {
        lhs += rhs;
        return lhs;
    }
    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::string to_string() const;

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense matrix over GF(2), stored as packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::vector<BitVector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    const BitVector& row(std::size_t r) const;
    void set_row(std::size_t r, BitVector v);

    BitVector apply(const BitVector& v) const;  // A v
    BitMatrix operator*(const BitMatrix& rhs) const;
    BitMatrix transposed() const;

    bool is_identity() const;
    bool is_symmetric() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

// Solution set of an affine system A x = rhs: one particular solution plus a
// basis of the nullspace of A. The full set is { particular + span(basis) },
// of size 2^(basis size).
struct AffineSolution {
    BitVector particular;
    std::vector<BitVector> nullspace_basis;

    std::size_t solution_count_log2() const { return nullspace_basis.size(); }
    bool contains(const BitVector& candidate) const;
};

// Gaussian elimination over GF(2) with deterministic pivoting: columns are
// scanned left to right and the first row with a nonzero entry is chosen.
// Returns std::nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const BitMatrix& a, const BitVector& rhs);

std::size_t rank(const BitMatrix& a);

}  // namespace spingeo
