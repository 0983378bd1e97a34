#include "qmagic/zd.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qmagic/error.hpp"

namespace qmagic {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

int mod_inverse(int a, int d) {
  int r = mod(a, d);
  if (r == 0) throw Error(Errc::non_invertible, std::to_string(a) + " has no inverse mod " + std::to_string(d));
  // extended Euclid
  long long t = 0, nt = 1, m = d, nr = r;
  while (nr != 0) {
    long long qt = m / nr;
    long long tmp = t - qt * nt;
    t = nt;
    nt = tmp;
    tmp = m - qt * nr;
    m = nr;
    nr = tmp;
  }
  if (m != 1) throw Error(Errc::non_invertible, std::to_string(a) + " has no inverse mod " + std::to_string(d));
  return mod(t, d);
}

int legendre(int a, int p) {
  int r = mod(a, p);
  if (r == 0) return 0;
  long long acc = 1, b = r;
  for (int e = (p - 1) / 2; e > 0; e >>= 1) {
    if (e & 1) acc = acc * b % p;
    b = b * b % p;
  }
  return acc == 1 ? 1 : -1;
}

PrimeDim::PrimeDim(int d, int n) : d_(d), n_(n), hilbert_(0) {
  if (!is_prime(d)) throw Error(Errc::invalid_input, "local dimension must be prime, got " + std::to_string(d));
  if (n < 1) throw Error(Errc::invalid_input, "qudit count must be >= 1");
  long long h = ipow(d, n);
  if (h > 4096) throw Error(Errc::budget_exceeded, "d^N = " + std::to_string(h) + " exceeds the dense budget");
  hilbert_ = static_cast<int>(h);
}

std::string to_string(const PrimeDim& dims) {
  return "(d=" + std::to_string(dims.d()) + ",N=" + std::to_string(dims.n()) + ")";
}

PhasePoint::PhasePoint(const std::vector<int>& p, const std::vector<int>& q, int d) : d_(d) {
  if (p.size() != q.size() || p.empty()) throw Error(Errc::dimension_mismatch, "phase point p/q length mismatch");
  v_.reserve(2 * p.size());
  for (int x : p) v_.push_back(mod(x, d));
  for (int x : q) v_.push_back(mod(x, d));
}

PhasePoint PhasePoint::zero(const PrimeDim& dims) {
  return PhasePoint(std::vector<int>(2 * dims.n(), 0), dims.d());
}

PhasePoint PhasePoint::from_index(std::size_t index, const PrimeDim& dims) {
  std::vector<int> c(2 * dims.n());
  for (int k = 2 * dims.n() - 1; k >= 0; --k) {
    c[k] = static_cast<int>(index % dims.d());
    index /= dims.d();
  }
  return PhasePoint(std::move(c), dims.d());
}

PhasePoint PhasePoint::from_coords(std::span<const int> coords, int d) {
  if (coords.empty() || coords.size() % 2) throw Error(Errc::dimension_mismatch, "phase point needs 2N coordinates");
  std::vector<int> c;
  for (int x : coords) c.push_back(mod(x, d));
  return PhasePoint(std::move(c), d);
}

std::size_t PhasePoint::index() const {
  std::size_t idx = 0;
  for (int x : v_) idx = idx * d_ + x;
  return idx;
}

bool PhasePoint::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](int x) { return x == 0; });
}

PhasePoint PhasePoint::operator+(const PhasePoint& o) const {
  if (o.v_.size() != v_.size() || o.d_ != d_) throw Error(Errc::dimension_mismatch, "phase point size mismatch");
  std::vector<int> c(v_.size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = mod(v_[k] + o.v_[k], d_);
  return PhasePoint(std::move(c), d_);
}

PhasePoint PhasePoint::operator-(const PhasePoint& o) const { return *this + (-o); }

PhasePoint PhasePoint::operator-() const { return scaled(-1); }

PhasePoint PhasePoint::scaled(int k) const {
  std::vector<int> c(v_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(static_cast<long long>(k) * v_[i], d_);
  return PhasePoint(std::move(c), d_);
}

std::vector<PhasePoint> all_points(const PrimeDim& dims) {
  std::vector<PhasePoint> out;
  out.reserve(dims.points());
  for (std::size_t i = 0; i < dims.points(); ++i) out.push_back(PhasePoint::from_index(i, dims));
  return out;
}

std::string to_string(const PhasePoint& chi) {
  std::ostringstream os;
  os << '(';
  auto put = [&](std::span<const int> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  };
  put(chi.p());
  os << ';';
  put(chi.q());
  os << ')';
  return os.str();
}

int symplectic_product(const PhasePoint& a, const PhasePoint& b) {
  if (a.n() != b.n() || a.d() != b.d()) throw Error(Errc::dimension_mismatch, "symplectic product of mismatched points");
  long long s = 0;
  auto ap = a.p(), aq = a.q(), bp = b.p(), bq = b.q();
  for (int i = 0; i < a.n(); ++i) s += static_cast<long long>(ap[i]) * bq[i] - static_cast<long long>(aq[i]) * bp[i];
  return mod(s, a.d());
}

ZdMatrix::ZdMatrix(int rows, int cols, int d) : rows_(rows), cols_(cols), d_(d), a_(static_cast<std::size_t>(rows) * cols, 0) {}

ZdMatrix::ZdMatrix(int rows, int cols, int d, const std::vector<int>& row_major) : ZdMatrix(rows, cols, d) {
  if (row_major.size() != a_.size()) throw Error(Errc::dimension_mismatch, "ZdMatrix initializer size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] = mod(row_major[k], d);
}

ZdMatrix ZdMatrix::identity(int n, int d) {
  ZdMatrix m(n, n, d);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ZdMatrix ZdMatrix::symplectic_form(int n, int d) {
  ZdMatrix j(2 * n, 2 * n, d);
  for (int i = 0; i < n; ++i) {
    j.set(i, n + i, 1);
    j.set(n + i, i, -1);
  }
  return j;
}

ZdMatrix ZdMatrix::operator*(const ZdMatrix& o) const {
  if (cols_ != o.rows_ || d_ != o.d_) throw Error(Errc::dimension_mismatch, "ZdMatrix product shape mismatch");
  ZdMatrix r(rows_, o.cols_, d_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      long long s = 0;
      for (int k = 0; k < cols_; ++k) s += static_cast<long long>((*this)(i, k)) * o(k, j);
      r.set(i, j, s);
    }
  return r;
}

PhasePoint ZdMatrix::operator*(const PhasePoint& chi) const {
  auto c = chi.coords();
  if (static_cast<int>(c.size()) != cols_) throw Error(Errc::dimension_mismatch, "ZdMatrix action shape mismatch");
  std::vector<int> out(rows_);
  for (int i = 0; i < rows_; ++i) {
    long long s = 0;
    for (int k = 0; k < cols_; ++k) s += static_cast<long long>((*this)(i, k)) * c[k];
    out[i] = mod(s, d_);
  }
  return PhasePoint::from_coords(out, d_);
}

ZdMatrix ZdMatrix::transpose() const {
  ZdMatrix t(cols_, rows_, d_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

ZdMatrix ZdMatrix::inverse() const {
  if (rows_ != cols_) throw Error(Errc::dimension_mismatch, "inverse of non-square ZdMatrix");
  const int n = rows_;
  ZdMatrix a = *this;
  ZdMatrix inv = identity(n, d_);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw Error(Errc::non_invertible, "singular matrix over Z_" + std::to_string(d_));
    for (int c = 0; c < n; ++c) {
      int t = a(col, c);
      a.set(col, c, a(piv, c));
      a.set(piv, c, t);
      t = inv(col, c);
      inv.set(col, c, inv(piv, c));
      inv.set(piv, c, t);
    }
    const int s = mod_inverse(a(col, col), d_);
    for (int c = 0; c < n; ++c) {
      a.set(col, c, static_cast<long long>(a(col, c)) * s);
      inv.set(col, c, static_cast<long long>(inv(col, c)) * s);
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      const int f = a(r, col);
      for (int c = 0; c < n; ++c) {
        a.set(r, c, a(r, c) - static_cast<long long>(f) * a(col, c));
        inv.set(r, c, inv(r, c) - static_cast<long long>(f) * inv(col, c));
      }
    }
  }
  return inv;
}

int ZdMatrix::determinant() const {
  if (rows_ != cols_) throw Error(Errc::dimension_mismatch, "determinant of non-square ZdMatrix");
  const int n = rows_;
  ZdMatrix a = *this;
  long long det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      det = -det;
      for (int c = 0; c < n; ++c) {
        int t = a(col, c);
        a.set(col, c, a(piv, c));
        a.set(piv, c, t);
      }
    }
    det = mod(det * a(col, col), d_);
    const int s = mod_inverse(a(col, col), d_);
    for (int r = col + 1; r < n; ++r) {
      const long long f = static_cast<long long>(a(r, col)) * s;
      for (int c = col; c < n; ++c) a.set(r, c, a(r, c) - f * a(col, c));
    }
  }
  return mod(det, d_);
}

std::string to_string(const ZdMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (int j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

bool is_symplectic(const ZdMatrix& s) {
  if (s.rows() != s.cols() || s.rows() % 2) return false;
  const ZdMatrix j = ZdMatrix::symplectic_form(s.rows() / 2, s.d());
  return s.transpose() * j * s == j;
}

long long symplectic_group_order(const PrimeDim& dims) {
  const int n = dims.n();
  long long order = ipow(dims.d(), n * n);
  for (int i = 1; i <= n; ++i) order *= ipow(dims.d(), 2 * i) - 1;
  return order;
}

std::vector<ZdMatrix> enumerate_symplectic(const PrimeDim& dims) {
  const int m = 2 * dims.n();
  const int entries = m * m;
  const long long total = ipow(dims.d(), entries);
  if (total > (1LL << 20)) throw Error(Errc::budget_exceeded, "symplectic enumeration too large for " + to_string(dims));
  std::vector<ZdMatrix> out;
  std::vector<int> digits(entries, 0);
  for (long long code = 0; code < total; ++code) {
    long long c = code;
    for (int k = entries - 1; k >= 0; --k) {
      digits[k] = static_cast<int>(c % dims.d());
      c /= dims.d();
    }
    ZdMatrix s(m, m, dims.d(), digits);
    if (is_symplectic(s)) out.push_back(std::move(s));
  }
  return out;
}

namespace {

// Row-reduce a list of points to a canonical echelon basis over Z_d.
std::vector<PhasePoint> echelon(const std::vector<PhasePoint>& gens, int d) {
  if (gens.empty()) return {};
  const int m = static_cast<int>(gens.front().coords().size());
  std::vector<std::vector<int>> rows;
  for (const auto& g : gens) rows.emplace_back(g.coords().begin(), g.coords().end());
  int r = 0;
  for (int col = 0; col < m && r < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    const int s = mod_inverse(rows[r][col], d);
    for (auto& x : rows[r]) x = mod(static_cast<long long>(x) * s, d);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const int f = rows[i][col];
      for (int c = 0; c < m; ++c) rows[i][c] = mod(rows[i][c] - static_cast<long long>(f) * rows[r][c], d);
    }
    ++r;
  }
  std::vector<PhasePoint> basis;
  for (int i = 0; i < r; ++i) basis.push_back(PhasePoint::from_coords(rows[i], d));
  return basis;
}

std::vector<PhasePoint> span_of(const std::vector<PhasePoint>& basis, const PrimeDim& dims) {
  std::vector<PhasePoint> els{PhasePoint::zero(dims)};
  for (const auto& b : basis) {
    std::vector<PhasePoint> next;
    next.reserve(els.size() * dims.d());
    for (const auto& e : els)
      for (int k = 0; k < dims.d(); ++k) next.push_back(e + b.scaled(k));
    els = std::move(next);
  }
  std::sort(els.begin(), els.end());
  return els;
}

}  // namespace

IsotropicSubspace::IsotropicSubspace(const std::vector<PhasePoint>& generators, const PrimeDim& dims) {
  for (const auto& g : generators)
    if (g.n() != dims.n() || g.d() != dims.d()) throw Error(Errc::dimension_mismatch, "generator does not match dims");
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (symplectic_product(generators[i], generators[j]) != 0)
        throw Error(Errc::invalid_input, "generators are not mutually isotropic");
  basis_ = echelon(generators, dims.d());
  elements_ = span_of(basis_, dims);
  maximal_ = static_cast<int>(basis_.size()) == dims.n();
}

bool IsotropicSubspace::contains(const PhasePoint& chi) const {
  return std::binary_search(elements_.begin(), elements_.end(), chi);
}

std::vector<IsotropicSubspace> enumerate_maximal_isotropic(const PrimeDim& dims) {
  if (dims.points() > 1024) throw Error(Errc::budget_exceeded, "isotropic enumeration too large for " + to_string(dims));
  const auto pts = all_points(dims);
  std::vector<IsotropicSubspace> found;
  std::set<std::vector<std::size_t>> seen;
  // Depth-first extension of isotropic subspaces; each level deduplicated by element set.
  std::vector<std::vector<PhasePoint>> level{{}};
  for (int k = 0; k < dims.n(); ++k) {
    std::vector<std::vector<PhasePoint>> next;
    std::set<std::vector<std::size_t>> level_seen;
    for (const auto& gens : level) {
      IsotropicSubspace cur(gens, dims);
      for (const auto& v : pts) {
        if (cur.contains(v)) continue;
        bool ok = true;
        for (const auto& b : cur.basis())
          if (symplectic_product(v, b) != 0) {
            ok = false;
            break;
          }
        if (!ok) continue;
        auto g2 = cur.basis();
        g2.push_back(v);
        IsotropicSubspace ext(g2, dims);
        std::vector<std::size_t> key;
        for (const auto& e : ext.elements()) key.push_back(e.index());
        if (level_seen.insert(key).second) next.push_back(ext.basis());
      }
    }
    level = std::move(next);
  }
  for (const auto& gens : level) {
    IsotropicSubspace s(gens, dims);
    std::vector<std::size_t> key;
    for (const auto& e : s.elements()) key.push_back(e.index());
    if (seen.insert(key).second) found.push_back(std::move(s));
  }
  std::sort(found.begin(), found.end(), [](const IsotropicSubspace& a, const IsotropicSubspace& b) {
    return a.basis() < b.basis();
  });
  return found;
}

}  // namespace qmagic
