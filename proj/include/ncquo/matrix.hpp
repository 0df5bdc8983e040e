#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ncquo/errors.hpp"
#include "ncquo/ring.hpp"

namespace ncquo {

/// Dense n x n matrix, row-major.
template <class E>
class SquareMatrix {
 public:
  SquareMatrix() = default;
  SquareMatrix(std::size_t n, std::vector<E> entries) : n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n_ * n_) {
      throw DimensionMismatch("matrix of dimension " + std::to_string(n_) + " needs " +
                              std::to_string(n_ * n_) + " entries, got " +
                              std::to_string(entries_.size()));
    }
  }

  std::size_t dimension() const noexcept { return n_; }
  const E& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  E& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<E>& entries() const noexcept { return entries_; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<E> entries_;
};

/// The ring of n x n matrices over `Base`.
///
/// Non-commutative for n >= 2. `inv` is Gauss-Jordan elimination and so
/// needs every nonzero entry of Base to be invertible (a field).
template <Ring Base>
class MatrixRing {
 public:
  using base_element = element_t<Base>;
  using element_type = SquareMatrix<base_element>;

  MatrixRing(Base base, std::size_t n) : base_(std::move(base)), n_(n) {
    if (n == 0) throw std::invalid_argument("matrix dimension must be at least 1");
  }

  const Base& base() const noexcept { return base_; }
  std::size_t dimension() const noexcept { return n_; }

  element_type zero() const { return element_type(n_, std::vector<base_element>(n_ * n_, base_.zero())); }
  element_type one() const { return scalar(base_.one()); }
  element_type scalar(const base_element& c) const {
    element_type m = zero();
    for (std::size_t i = 0; i < n_; ++i) m(i, i) = c;
    return m;
  }
  element_type from_entries(std::vector<base_element> entries) const {
    return element_type(n_, std::move(entries));
  }

  element_type add(const element_type& a, const element_type& b) const {
    return zip(a, b, [this](const auto& x, const auto& y) { return base_.add(x, y); });
  }
  element_type sub(const element_type& a, const element_type& b) const {
    return zip(a, b, [this](const auto& x, const auto& y) { return base_.sub(x, y); });
  }
  element_type neg(const element_type& a) const {
    check(a);
    std::vector<base_element> out;
    out.reserve(n_ * n_);
    for (const auto& x : a.entries()) out.push_back(base_.neg(x));
    return element_type(n_, std::move(out));
  }

  /// Schoolbook product; n^3 base multiplications.
  element_type mul(const element_type& a, const element_type& b) const {
    check(a);
    check(b);
    element_type c = zero();
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t l = 0; l < n_; ++l) {
        const base_element& ail = a(i, l);
        for (std::size_t j = 0; j < n_; ++j) {
          c(i, j) = base_.add(c(i, j), base_.mul(ail, b(l, j)));
        }
      }
    }
    return c;
  }

  /// Gauss-Jordan on [A | I], pivoting on the first nonzero entry of each
  /// column. Throws NotInvertible if some column has no pivot.
  element_type inv(const element_type& a) const {
    check(a);
    element_type m = a;
    element_type r = one();
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t piv = col;
      while (piv < n_ && base_.is_zero(m(piv, col))) ++piv;
      if (piv == n_) throw NotInvertible("singular matrix: no pivot in column " + std::to_string(col));
      if (piv != col) {
        for (std::size_t j = 0; j < n_; ++j) {
          std::swap(m(piv, j), m(col, j));
          std::swap(r(piv, j), r(col, j));
        }
      }
      const base_element pinv = base_.inv(m(col, col));
      for (std::size_t j = 0; j < n_; ++j) {
        m(col, j) = base_.mul(pinv, m(col, j));
        r(col, j) = base_.mul(pinv, r(col, j));
      }
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == col || base_.is_zero(m(i, col))) continue;
        const base_element f = m(i, col);
        for (std::size_t j = 0; j < n_; ++j) {
          m(i, j) = base_.sub(m(i, j), base_.mul(f, m(col, j)));
          r(i, j) = base_.sub(r(i, j), base_.mul(f, r(col, j)));
        }
      }
    }
    return r;
  }

  bool equal(const element_type& a, const element_type& b) const {
    check(a);
    check(b);
    for (std::size_t i = 0; i < n_ * n_; ++i) {
      if (!base_.equal(a.entries()[i], b.entries()[i])) return false;
    }
    return true;
  }
  bool is_zero(const element_type& a) const {
    for (const auto& x : a.entries()) {
      if (!base_.is_zero(x)) return false;
    }
    return true;
  }
  bool is_commutative() const { return n_ == 1 && base_.is_commutative(); }
  std::uint64_t mul_count() const { return base_.mul_count(); }

 private:
  void check(const element_type& a) const {
    if (a.dimension() != n_) {
      throw DimensionMismatch("expected " + std::to_string(n_) + "x" + std::to_string(n_) +
                              " matrix, got dimension " + std::to_string(a.dimension()));
    }
  }

  template <class F>
  element_type zip(const element_type& a, const element_type& b, F f) const {
    check(a);
    check(b);
    std::vector<base_element> out;
    out.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_ * n_; ++i) out.push_back(f(a.entries()[i], b.entries()[i]));
    return element_type(n_, std::move(out));
  }

  Base base_;
  std::size_t n_;
};

}  // namespace ncquo
