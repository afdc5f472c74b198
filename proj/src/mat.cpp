#include "colimex/mat.hpp"

#include <sstream>
#include <utility>

namespace colimex {

namespace {

// Arithmetic policies for the two entry representations. The elimination and
// product kernels below are written once against this interface.
struct RatOps {
  using T = mpq_class;
  static T zero() { return T(0); }
  static T one() { return T(1); }
  static bool is_zero(const T& a) { return sgn(a) == 0; }
  static T add(const T& a, const T& b) { return a + b; }
  static T sub(const T& a, const T& b) { return a - b; }
  static T mul(const T& a, const T& b) { return a * b; }
  static T div(const T& a, const T& b) { return a / b; }
  static T neg(const T& a) { return -a; }
};

struct ModOps {
  std::int64_t p;
  using T = std::int64_t;
  static T zero() { return 0; }
  static T one() { return 1; }
  static bool is_zero(const T& a) { return a == 0; }
  T add(T a, T b) const { return (a + b) % p; }
  T sub(T a, T b) const { return ((a - b) % p + p) % p; }
  T mul(T a, T b) const { return (a * b) % p; }
  T neg(T a) const { return (p - a) % p; }
  T inv(T a) const {
    // extended Euclid; a != 0 mod p
    internal_check(a % p != 0, "division by zero in F_p");
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    return ((t % p) + p) % p;
  }
  T div(T a, T b) const { return mul(a, inv(b)); }
};

// Reduced row echelon form in place, pivoting only within the first
// `pivot_cols` columns (the remaining columns ride along as an augmented
// block). Pivot search takes the first nonzero entry top-down, so the result
// is canonical for a given input. Returns the pivot columns in order.
template <class Ops>
std::vector<int> rref_in_place(const Ops& ops,
                               std::vector<typename Ops::T>& a, int rows,
                               int cols, int pivot_cols) {
  std::vector<int> pivots;
  int r = 0;
  auto at = [&](int i, int j) -> typename Ops::T& { return a[i * cols + j]; };
  for (int c = 0; c < pivot_cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (!Ops::is_zero(at(i, c))) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < cols; ++j) std::swap(at(pr, j), at(r, j));
    typename Ops::T inv_piv = ops.div(Ops::one(), at(r, c));
    for (int j = c; j < cols; ++j) at(r, j) = ops.mul(at(r, j), inv_piv);
    for (int i = 0; i < rows; ++i) {
      if (i == r || Ops::is_zero(at(i, c))) continue;
      typename Ops::T f = at(i, c);
      for (int j = c; j < cols; ++j)
        at(i, j) = ops.sub(at(i, j), ops.mul(f, at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class Ops>
std::vector<typename Ops::T> mul_impl(const Ops& ops,
                                      const std::vector<typename Ops::T>& a,
                                      const std::vector<typename Ops::T>& b,
                                      int n, int k, int m) {
  std::vector<typename Ops::T> out(static_cast<size_t>(n) * m, Ops::zero());
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < k; ++t) {
      const typename Ops::T& ait = a[i * k + t];
      if (Ops::is_zero(ait)) continue;
      for (int j = 0; j < m; ++j)
        out[i * m + j] = ops.add(out[i * m + j], ops.mul(ait, b[t * m + j]));
    }
  return out;
}

}  // namespace

Mat::Mat(Field f, int rows, int cols) : field_(f), rows_(rows), cols_(cols) {
  internal_check(rows >= 0 && cols >= 0, "negative matrix dimension");
  size_t n = static_cast<size_t>(rows) * cols;
  if (field_.is_prime())
    fe_.assign(n, 0);
  else
    qe_.assign(n, mpq_class(0));
}

Mat Mat::identity(Field f, int n) {
  Mat m(f, n, n);
  for (int i = 0; i < n; ++i) m.set_int(i, i, 1);
  return m;
}

void Mat::set_int(int r, int c, std::int64_t v) {
  internal_check(r >= 0 && r < rows_ && c >= 0 && c < cols_,
                 "matrix index out of range");
  if (field_.is_prime())
    fe_[r * cols_ + c] = ((v % field_.p()) + field_.p()) % field_.p();
  else
    qe_[r * cols_ + c] = mpq_class(static_cast<long>(v));
}

void Mat::set_fraction(int r, int c, std::int64_t num, std::int64_t den) {
  require(den != 0, "BadScalar", "zero denominator");
  if (field_.is_prime()) {
    ModOps ops{field_.p()};
    std::int64_t n = ((num % field_.p()) + field_.p()) % field_.p();
    std::int64_t d = ((den % field_.p()) + field_.p()) % field_.p();
    require(d != 0, "BadScalar",
            "denominator not invertible mod " + std::to_string(field_.p()));
    fe_[r * cols_ + c] = ops.div(n, d);
  } else {
    mpq_class q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    qe_[r * cols_ + c] = q;
  }
}

bool Mat::entry_is_zero(int r, int c) const {
  return field_.is_prime() ? fe_[r * cols_ + c] == 0
                           : sgn(qe_[r * cols_ + c]) == 0;
}

std::string Mat::entry_string(int r, int c) const {
  if (field_.is_prime()) return std::to_string(fe_[r * cols_ + c]);
  const mpq_class& q = qe_[r * cols_ + c];
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

void Mat::set_entry_string(int r, int c, const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      if (field_.is_prime()) {
        set_int(r, c, std::stoll(s));
      } else {
        mpq_class q(s);
        q.canonicalize();
        qe_[r * cols_ + c] = q;
      }
    } else {
      if (field_.is_prime()) {
        set_fraction(r, c, std::stoll(s.substr(0, slash)),
                     std::stoll(s.substr(slash + 1)));
      } else {
        mpq_class q(s);
        q.canonicalize();
        qe_[r * cols_ + c] = q;
      }
    }
  } catch (const std::invalid_argument&) {
    throw Error("BadScalar", "cannot parse scalar '" + s + "'");
  }
}

bool Mat::operator==(const Mat& o) const {
  if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
  return field_.is_prime() ? fe_ == o.fe_ : qe_ == o.qe_;
}

bool Mat::is_zero() const {
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!entry_is_zero(r, c)) return false;
  return true;
}

bool Mat::is_identity() const {
  return rows_ == cols_ && *this == identity(field_, rows_);
}

Mat Mat::operator+(const Mat& o) const {
  internal_check(field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_,
                 "shape/field mismatch in +");
  Mat out(field_, rows_, cols_);
  if (field_.is_prime()) {
    ModOps ops{field_.p()};
    for (size_t i = 0; i < fe_.size(); ++i) out.fe_[i] = ops.add(fe_[i], o.fe_[i]);
  } else {
    for (size_t i = 0; i < qe_.size(); ++i) out.qe_[i] = qe_[i] + o.qe_[i];
  }
  return out;
}

Mat Mat::operator-(const Mat& o) const { return *this + (-o); }

Mat Mat::operator-() const {
  Mat out(field_, rows_, cols_);
  if (field_.is_prime()) {
    ModOps ops{field_.p()};
    for (size_t i = 0; i < fe_.size(); ++i) out.fe_[i] = ops.neg(fe_[i]);
  } else {
    for (size_t i = 0; i < qe_.size(); ++i) out.qe_[i] = -qe_[i];
  }
  return out;
}

Mat Mat::operator*(const Mat& o) const {
  internal_check(field_ == o.field_, "field mismatch in *");
  internal_check(cols_ == o.rows_, "shape mismatch in *: " +
                                       std::to_string(cols_) + " vs " +
                                       std::to_string(o.rows_));
  Mat out(field_, rows_, o.cols_);
  if (field_.is_prime())
    out.fe_ = mul_impl(ModOps{field_.p()}, fe_, o.fe_, rows_, cols_, o.cols_);
  else
    out.qe_ = mul_impl(RatOps{}, qe_, o.qe_, rows_, cols_, o.cols_);
  return out;
}

Mat Mat::transpose() const {
  Mat out(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (field_.is_prime())
        out.fe_[c * rows_ + r] = fe_[r * cols_ + c];
      else
        out.qe_[c * rows_ + r] = qe_[r * cols_ + c];
    }
  return out;
}

Mat Mat::hstack(const Mat& a, const Mat& b) {
  internal_check(a.field_ == b.field_ && a.rows_ == b.rows_,
                 "hstack mismatch");
  Mat out(a.field_, a.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int c = 0; c < out.cols_; ++c) {
      bool left = c < a.cols_;
      const Mat& src = left ? a : b;
      int sc = left ? c : c - a.cols_;
      if (a.field_.is_prime())
        out.fe_[r * out.cols_ + c] = src.fe_[r * src.cols_ + sc];
      else
        out.qe_[r * out.cols_ + c] = src.qe_[r * src.cols_ + sc];
    }
  return out;
}

Mat Mat::vstack(const Mat& a, const Mat& b) {
  internal_check(a.field_ == b.field_ && a.cols_ == b.cols_,
                 "vstack mismatch");
  Mat out(a.field_, a.rows_ + b.rows_, a.cols_);
  if (a.field_.is_prime()) {
    std::copy(a.fe_.begin(), a.fe_.end(), out.fe_.begin());
    std::copy(b.fe_.begin(), b.fe_.end(), out.fe_.begin() + a.fe_.size());
  } else {
    std::copy(a.qe_.begin(), a.qe_.end(), out.qe_.begin());
    std::copy(b.qe_.begin(), b.qe_.end(), out.qe_.begin() + a.qe_.size());
  }
  return out;
}

Mat Mat::cols_slice(int c0, int c1) const {
  internal_check(0 <= c0 && c0 <= c1 && c1 <= cols_, "bad column slice");
  Mat out(field_, rows_, c1 - c0);
  for (int r = 0; r < rows_; ++r)
    for (int c = c0; c < c1; ++c) {
      if (field_.is_prime())
        out.fe_[r * out.cols_ + (c - c0)] = fe_[r * cols_ + c];
      else
        out.qe_[r * out.cols_ + (c - c0)] = qe_[r * cols_ + c];
    }
  return out;
}

Mat Mat::rows_slice(int r0, int r1) const {
  internal_check(0 <= r0 && r0 <= r1 && r1 <= rows_, "bad row slice");
  Mat out(field_, r1 - r0, cols_);
  for (int r = r0; r < r1; ++r)
    for (int c = 0; c < cols_; ++c) {
      if (field_.is_prime())
        out.fe_[(r - r0) * cols_ + c] = fe_[r * cols_ + c];
      else
        out.qe_[(r - r0) * cols_ + c] = qe_[r * cols_ + c];
    }
  return out;
}

Mat Mat::flattened() const {
  Mat out(field_, rows_ * cols_, 1);
  out.fe_ = fe_;
  out.qe_ = qe_;
  return out;
}

Mat Mat::unflatten(Field f, int rows, int cols, const Mat& column) {
  internal_check(column.cols() == 1 && column.rows() == rows * cols &&
                     column.field() == f,
                 "unflatten shape mismatch");
  Mat out(f, rows, cols);
  out.fe_ = column.fe_;
  out.qe_ = column.qe_;
  return out;
}

int Mat::rank() const {
  if (rows_ == 0 || cols_ == 0) return 0;
  if (field_.is_prime()) {
    auto a = fe_;
    return static_cast<int>(
        rref_in_place(ModOps{field_.p()}, a, rows_, cols_, cols_).size());
  }
  auto a = qe_;
  return static_cast<int>(
      rref_in_place(RatOps{}, a, rows_, cols_, cols_).size());
}

namespace {

// Kernel basis from an RREF: one column per free variable, with a 1 in the
// free slot and the negated reduced column above the pivots.
template <class Ops>
std::vector<typename Ops::T> kernel_from_rref(
    const Ops& ops, const std::vector<typename Ops::T>& r, int cols,
    const std::vector<int>& pivots) {
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  int k = static_cast<int>(free_cols.size());
  std::vector<typename Ops::T> out(static_cast<size_t>(cols) * k, Ops::zero());
  for (int j = 0; j < k; ++j) {
    int fc = free_cols[j];
    out[fc * k + j] = Ops::one();
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      out[pivots[pi] * k + j] = ops.neg(r[pi * cols + fc]);
  }
  return out;
}

}  // namespace

Mat Mat::kernel() const {
  Mat out(field_, cols_, 0);
  if (field_.is_prime()) {
    ModOps ops{field_.p()};
    auto a = fe_;
    auto pivots = rref_in_place(ops, a, rows_, cols_, cols_);
    out.cols_ = cols_ - static_cast<int>(pivots.size());
    out.fe_ = kernel_from_rref(ops, a, cols_, pivots);
  } else {
    RatOps ops;
    auto a = qe_;
    auto pivots = rref_in_place(ops, a, rows_, cols_, cols_);
    out.cols_ = cols_ - static_cast<int>(pivots.size());
    out.qe_ = kernel_from_rref(ops, a, cols_, pivots);
  }
  return out;
}

Mat Mat::cokernel() const { return transpose().kernel().transpose(); }

std::optional<Mat> Mat::solve(const Mat& rhs) const {
  require(rhs.rows() == rows_ && rhs.field() == field_, "BadSolve",
          "solve: rhs has " + std::to_string(rhs.rows()) + " rows, expected " +
              std::to_string(rows_));
  int aug = cols_ + rhs.cols();
  Mat x(field_, cols_, rhs.cols());
  auto run = [&](auto ops, const auto& lhs_e, const auto& rhs_e,
                 auto& out_e) -> bool {
    using T = typename decltype(ops)::T;
    std::vector<T> a(static_cast<size_t>(rows_) * aug, decltype(ops)::zero());
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) a[r * aug + c] = lhs_e[r * cols_ + c];
      for (int c = 0; c < rhs.cols(); ++c)
        a[r * aug + cols_ + c] = rhs_e[r * rhs.cols() + c];
    }
    auto pivots = rref_in_place(ops, a, rows_, aug, cols_);
    // A row with zero coefficient part but nonzero rhs part is inconsistent.
    for (int r = static_cast<int>(pivots.size()); r < rows_; ++r)
      for (int c = cols_; c < aug; ++c)
        if (!decltype(ops)::is_zero(a[r * aug + c])) return false;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      for (int c = 0; c < rhs.cols(); ++c)
        out_e[pivots[pi] * rhs.cols() + c] = a[pi * aug + cols_ + c];
    return true;
  };
  bool ok = field_.is_prime() ? run(ModOps{field_.p()}, fe_, rhs.fe_, x.fe_)
                              : run(RatOps{}, qe_, rhs.qe_, x.qe_);
  if (!ok) return std::nullopt;
  return x;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  auto inv = solve(identity(field_, rows_));
  if (!inv || (*inv) * (*this) != identity(field_, rows_)) return std::nullopt;
  return inv;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_ << " over " << field_.name();
  for (int r = 0; r < rows_; ++r) {
    os << "\n[";
    for (int c = 0; c < cols_; ++c)
      os << (c ? ", " : "") << entry_string(r, c);
    os << "]";
  }
  return os.str();
}

}  // namespace colimex
