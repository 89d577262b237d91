#pragma once

#include "operad/exact/rational.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace operad {

namespace detail {
template <class Z>
class EchelonEngine;
}

// Incremental row-echelon basis over Q.
//
// Rows are stored fraction-free as primitive integer vectors and reduced left to
// right, so the pivot columns coincide with those of the reduced row-echelon form.
// Arithmetic starts on checked 64-bit integers and switches permanently to GMP
// integers the first time an intermediate value would overflow.
class Echelon {
public:
    explicit Echelon(std::size_t ncols);
    ~Echelon();
    Echelon(const Echelon&);
    Echelon& operator=(const Echelon&);
    Echelon(Echelon&&) noexcept;
    Echelon& operator=(Echelon&&) noexcept;

    std::size_t ncols() const { return ncols_; }
    std::size_t rank() const;
    bool uses_bigint() const { return static_cast<bool>(big_); }

    // Adds v to the spanned space; returns true when the rank grows.
    bool insert(const SparseVector& v);
    bool contains(const SparseVector& v) const;

    // Pivot columns in increasing order.
    std::vector<std::uint32_t> pivots() const;
    // Stored basis rows (primitive integer vectors, insertion order); cheaper than rref().
    std::vector<SparseVector> rows() const;
    // Unique reduced row-echelon basis (monic pivots), rows sorted by pivot.
    std::vector<SparseVector> rref() const;

private:
    void to_big();

    std::size_t ncols_;
    std::unique_ptr<detail::EchelonEngine<std::int64_t>> small_;
    std::unique_ptr<detail::EchelonEngine<mpz_class>> big_;
};

}  // namespace operad
