#include "spingeo/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace spingeo {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t length)
{
    return (length + kWordBits - 1) / kWordBits;
}
}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(word_count(length), 0) {}

BitVector BitVector::unit(std::size_t length, std::size_t index)
{
    BitVector v(length);
    v.set(index, true);
    return v;
}

BitVector BitVector::from_bits(std::initializer_list<int> bits)
{
    BitVector v(bits.size());
    std::size_t i = 0;
    for (int b : bits) {
        if (b != 0 && b != 1)
            throw std::invalid_argument("BitVector::from_bits: entries must be 0 or 1");
        v.set(i++, b == 1);
    }
    return v;
}

BitVector BitVector::from_string(std::string_view bits)
{
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i, true);
        else if (bits[i] != '0')
            throw std::invalid_argument("BitVector::from_string: characters must be '0' or '1'");
    }
    return v;
}

bool BitVector::get(std::size_t i) const
{
    if (i >= length_)
        throw std::out_of_range("BitVector::get: index out of range");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value)
{
    if (i >= length_)
        throw std::out_of_range("BitVector::set: index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

bool BitVector::is_zero() const
{
    for (std::uint64_t w : words_)
        if (w != 0)
            return false;
    return true;
}

std::size_t BitVector::popcount() const
{
    std::size_t n = 0;
    for (std::uint64_t w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

int BitVector::dot(const BitVector& other) const
{
    if (length_ != other.length_)
        throw std::invalid_argument("BitVector::dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
        acc ^= words_[i] & other.words_[i];
    return std::popcount(acc) & 1;
}

BitVector& BitVector::operator+=(const BitVector& other)
{
    if (length_ != other.length_)
        throw std::invalid_argument("BitVector::operator+=: length mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] ^= other.words_[i];
    return *this;
}

std::string BitVector::to_string() const
{
    std::string s(length_, '0');
    for (std::size_t i = 0; i < length_; ++i)
        if (get(i))
            s[i] = '1';
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows, BitVector(cols))
{
}

BitMatrix BitMatrix::identity(std::size_t n)
{
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, true);
    return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows)
{
    if (rows.empty())
        return BitMatrix();
    const std::size_t cols = rows.front().size();
    for (const BitVector& r : rows)
        if (r.size() != cols)
            throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    BitMatrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    m.data_ = std::move(rows);
    return m;
}

bool BitMatrix::get(std::size_t r, std::size_t c) const
{
    if (r >= rows_)
        throw std::out_of_range("BitMatrix::get: row out of range");
    return data_[r].get(c);
}

void BitMatrix::set(std::size_t r, std::size_t c, bool value)
{
    if (r >= rows_)
        throw std::out_of_range("BitMatrix::set: row out of range");
    data_[r].set(c, value);
}

const BitVector& BitMatrix::row(std::size_t r) const
{
    if (r >= rows_)
        throw std::out_of_range("BitMatrix::row: row out of range");
    return data_[r];
}

void BitMatrix::set_row(std::size_t r, BitVector v)
{
    if (r >= rows_)
        throw std::out_of_range("BitMatrix::set_row: row out of range");
    if (v.size() != cols_)
        throw std::invalid_argument("BitMatrix::set_row: length mismatch");
    data_[r] = std::move(v);
}

BitVector BitMatrix::apply(const BitVector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("BitMatrix::apply: dimension mismatch");
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].dot(v))
            out.set(r, true);
    return out;
}

BitMatrix BitMatrix::operator*(const BitMatrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("BitMatrix::operator*: dimension mismatch");
    BitMatrix out(rows_, rhs.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        BitVector acc(rhs.cols_);
        for (std::size_t k = 0; k < cols_; ++k)
            if (data_[r].get(k))
                acc += rhs.data_[k];
        out.data_[r] = std::move(acc);
    }
    return out;
}

BitMatrix BitMatrix::transposed() const
{
    BitMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (data_[r].get(c))
                out.set(c, r, true);
    return out;
}

bool BitMatrix::is_identity() const
{
    if (rows_ != cols_)
        return false;
    return *this == identity(rows_);
}

bool BitMatrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (get(r, c) != get(c, r))
                return false;
    return true;
}

std::string BitMatrix::to_string() const
{
    std::string s;
    for (std::size_t r = 0; r < rows_; ++r) {
        s += data_[r].to_string();
        if (r + 1 < rows_)
            s += '\n';
    }
    return s;
}

bool AffineSolution::contains(const BitVector& candidate) const
{
    if (candidate.size() != particular.size())
        return false;
    // candidate lies in the set iff candidate - particular lies in the span
    // of the nullspace basis, i.e. the system (basis columns) x = diff is
    // consistent.
    BitVector diff = candidate + particular;
    if (nullspace_basis.empty())
        return diff.is_zero();
    BitMatrix cols(diff.size(), nullspace_basis.size());
    for (std::size_t j = 0; j < nullspace_basis.size(); ++j)
        for (std::size_t i = 0; i < diff.size(); ++i)
            if (nullspace_basis[j].get(i))
                cols.set(i, j, true);
    return solve_affine(cols, diff).has_value();
}

namespace {

struct Echelon {
    std::vector<BitVector> rows;   // reduced rows (possibly with rhs column appended)
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form over the first `cols` columns. Pivot choice is
// deterministic: scan columns left to right, take the first unconsumed row
// with a nonzero entry.
Echelon reduce(std::vector<BitVector> rows, std::size_t cols)
{
    Echelon ech;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
        std::size_t found = rows.size();
        for (std::size_t r = pivot_row; r < rows.size(); ++r) {
            if (rows[r].get(col)) {
                found = r;
                break;
            }
        }
        if (found == rows.size())
            continue;
        std::swap(rows[pivot_row], rows[found]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != pivot_row && rows[r].get(col))
                rows[r] += rows[pivot_row];
        ech.pivot_cols.push_back(col);
        ++pivot_row;
    }
    ech.rows = std::move(rows);
    return ech;
}

}  // namespace

std::optional<AffineSolution> solve_affine(const BitMatrix& a, const BitVector& rhs)
{
    if (rhs.size() != a.rows())
        throw std::invalid_argument("solve_affine: rhs length must equal row count");

    const std::size_t n = a.cols();
    // augment each row with its rhs bit
    std::vector<BitVector> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        BitVector aug(n + 1);
        for (std::size_t c = 0; c < n; ++c)
            if (a.get(r, c))
                aug.set(c, true);
        aug.set(n, rhs.get(r));
        rows.push_back(std::move(aug));
    }

    Echelon ech = reduce(std::move(rows), n);

    // inconsistent when a zero row has rhs bit 1
    for (std::size_t r = ech.pivot_cols.size(); r < ech.rows.size(); ++r)
        if (ech.rows[r].get(n))
            return std::nullopt;

    AffineSolution sol;
    sol.particular = BitVector(n);
    for (std::size_t p = 0; p < ech.pivot_cols.size(); ++p)
        sol.particular.set(ech.pivot_cols[p], ech.rows[p].get(n));

    // nullspace basis: one vector per free column, in ascending column order
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : ech.pivot_cols)
        is_pivot[c] = true;
    for (std::size_t c = 0; c < n; ++c) {
        if (is_pivot[c])
            continue;
        BitVector v(n);
        v.set(c, true);
        for (std::size_t p = 0; p < ech.pivot_cols.size(); ++p)
            if (ech.rows[p].get(c))
                v.set(ech.pivot_cols[p], true);
        sol.nullspace_basis.push_back(std::move(v));
    }
    return sol;
}

std::size_t rank(const BitMatrix& a)
{
    std::vector<BitVector> rows;
    rows.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        rows.push_back(a.row(r));
    return reduce(std::move(rows), a.cols()).pivot_cols.size();
}

}  // namespace spingeo
