/// @file scalar.hpp
/// @brief Exact arithmetic over the Gaussian rationals Q(i).
///
/// A GaussianRational is a pair (re, im) of arbitrary-precision rationals,
/// kept in canonical form (lowest terms, positive denominators) after every
/// operation. It is the scalar type of the whole exact pipeline and is
/// registered as an Eigen scalar so that dense matrices over Q(i) work with
/// the usual expression syntax.

#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

#include <Eigen/Core>

namespace kinvar {

class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(long v) : re_(v), im_(0) {}  // NOLINT: implicit by design
  GaussianRational(int v) : re_(v), im_(0) {}   // NOLINT
  explicit GaussianRational(mpq_class re, mpq_class im = 0)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  /// num/den pair constructor; den must be nonzero.
  static GaussianRational ratio(long num, long den) {
    if (den == 0) throw std::domain_error("GaussianRational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
  }

  static GaussianRational i() { return GaussianRational(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  /// re^2 + im^2, a nonnegative rational; zero iff the value is zero.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
    mpq_class n2 = o.norm2();
    mpq_class r = (re_ * o.re_ + im_ * o.im_) / n2;
    mpq_class m = (im_ * o.re_ - re_ * o.im_) / n2;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Total bit size of all four integer components; the pivot-selection
  /// weight for exact elimination (smaller = better-conditioned pivot).
  size_t bit_size() const {
    return mpz_sizeinbase(re_.get_num_mpz_t(), 2) + mpz_sizeinbase(re_.get_den_mpz_t(), 2) +
           mpz_sizeinbase(im_.get_num_mpz_t(), 2) + mpz_sizeinbase(im_.get_den_mpz_t(), 2);
  }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Conversion with an overflow check; huge rationals map to nullopt.
  std::optional<std::complex<double>> to_complex_checked() const {
    std::complex<double> v = to_complex();
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return std::nullopt;
    return v;
  }

  /// "a/b" for real values, "a/b+c/d*i" / "a/b-c/d*i" otherwise, with
  /// explicit denominators; the JSON wire format.
  std::string to_string() const;

  /// Parses the to_string format; also accepts integers without "/1".
  static GaussianRational parse(const std::string& s);

 private:
  mpq_class re_, im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

}  // namespace kinvar

namespace Eigen {

template <>
struct NumTraits<kinvar::GaussianRational> : GenericNumTraits<kinvar::GaussianRational> {
  typedef kinvar::GaussianRational Real;
  typedef kinvar::GaussianRational NonInteger;
  typedef kinvar::GaussianRational Nested;
  typedef kinvar::GaussianRational Literal;
  enum {
    IsComplex = 0,  // treated as a field scalar; all forms used are bilinear
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 120,
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
