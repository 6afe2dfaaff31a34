#include "ale/rootsys.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "ale/errors.hpp"

namespace ale {

std::string to_string(RootKind k) {
  switch (k) {
    case RootKind::A: return "A";
    case RootKind::D: return "D";
    case RootKind::E: return "E";
  }
  throw NumericsError("unreachable root kind");
}

RootKind root_kind_from_string(const std::string& s) {
  if (s == "A") return RootKind::A;
  if (s == "D") return RootKind::D;
  if (s == "E") return RootKind::E;
  throw SchemaError("unknown root system kind '" + s + "'");
}

int expected_positive_count(RootKind kind, int rank) {
  switch (kind) {
    case RootKind::A: return rank * (rank + 1) / 2;
    case RootKind::D: return rank * (rank - 1);
    case RootKind::E:
      if (rank == 6) return 36;
      if (rank == 7) return 63;
      return 120;
  }
  throw NumericsError("unreachable root kind");
}

double dot(const CartanVec& a, const CartanVec& b) {
  if (a.size() != b.size()) throw SchemaError("dot: dimension mismatch");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::complex<double> dot(const CartanVec& a, const CartanVecC& b) {
  if (a.size() != b.size()) throw SchemaError("dot: dimension mismatch");
  std::complex<double> s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw SchemaError("dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec reflect(const RatVec& v, const RatVec& root) {
  Rational c = dot(v, root);
  RatVec out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= c * root[i];
  return out;
}

CartanVec reflect(const CartanVec& v, const CartanVec& root) {
  double c = dot(v, root);
  CartanVec out = v;
  for (std::size_t i = 0; i < v.size(); ++i) out[i] -= c * root[i];
  return out;
}

RatVec rat_vec(const CartanVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

CartanVec dbl_vec(const RatVec& v) {
  CartanVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].convert_to<double>();
  return out;
}

namespace {

std::vector<RatVec> simple_roots_for(RootKind kind, int rank, int& ambient) {
  std::vector<RatVec> simples;
  auto basis = [&](int i) {
    RatVec v(ambient, Rational(0));
    v[i] = 1;
    return v;
  };
  switch (kind) {
    case RootKind::A: {
      if (rank < 1) throw SchemaError("A rank must be >= 1");
      ambient = rank + 1;
      for (int i = 0; i < rank; ++i) {
        RatVec v(ambient, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        simples.push_back(v);
      }
      return simples;
    }
    case RootKind::D: {
      if (rank < 4) throw SchemaError("D rank must be >= 4");
      ambient = rank;
      for (int i = 0; i + 1 < rank; ++i) {
        RatVec v(ambient, Rational(0));
        v[i] = 1;
        v[i + 1] = -1;
        simples.push_back(v);
      }
      RatVec v(ambient, Rational(0));
      v[rank - 2] = 1;
      v[rank - 1] = 1;
      simples.push_back(v);
      return simples;
    }
    case RootKind::E: {
      if (rank < 6 || rank > 8) throw SchemaError("E rank must be 6, 7 or 8");
      ambient = 8;
      RatVec a1(8, Rational(1, 2));
      for (int i : {1, 2, 3, 4, 5, 6}) a1[i] = Rational(-1, 2);
      simples.push_back(a1);
      RatVec a2 = basis(0);
      a2[1] = 1;
      simples.push_back(a2);
      for (int i = 0; i < rank - 2; ++i) {
        RatVec v(ambient, Rational(0));
        v[i] = -1;
        v[i + 1] = 1;
        simples.push_back(v);
      }
      return simples;
    }
  }
  throw NumericsError("unreachable root kind");
}

// Exact solve of G x = b for the symmetric positive definite Gram matrix.
std::vector<Rational> solve_gram(std::vector<std::vector<Rational>> G,
                                 std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && G[piv][col] == 0) ++piv;
    if (piv == n) throw NumericsError("singular Gram matrix");
    std::swap(G[piv], G[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || G[row][col] == 0) continue;
      Rational f = G[row][col] / G[col][col];
      for (std::size_t k = col; k < n; ++k) G[row][k] -= f * G[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / G[i][i];
  return x;
}

}  // namespace

RootSystem build_root_system(RootKind kind, int rank) {
  RootSystem rs;
  rs.kind = kind;
  rs.rank = rank;
  rs.simple_roots = simple_roots_for(kind, rank, rs.ambient_dim);

  // Orbit of the simple roots under the group generated by simple
  // reflections: this is the whole root system.
  std::set<RatVec> roots(rs.simple_roots.begin(), rs.simple_roots.end());
  std::vector<RatVec> frontier(rs.simple_roots);
  while (!frontier.empty()) {
    std::vector<RatVec> next;
    for (const RatVec& r : frontier)
      for (const RatVec& s : rs.simple_roots) {
        RatVec img = reflect(r, s);
        if (roots.insert(img).second) next.push_back(img);
      }
    frontier.swap(next);
  }

  std::vector<std::vector<Rational>> gram(rank, std::vector<Rational>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      gram[i][j] = dot(rs.simple_roots[i], rs.simple_roots[j]);

  struct PosRoot {
    std::vector<long> coeffs;
    RatVec root;
  };
  std::vector<PosRoot> pos;
  for (const RatVec& r : roots) {
    std::vector<Rational> rhs(rank);
    for (int i = 0; i < rank; ++i) rhs[i] = dot(rs.simple_roots[i], r);
    std::vector<Rational> c = solve_gram(gram, rhs);
    bool nonneg = true;
    std::vector<long> ci(rank);
    for (int i = 0; i < rank; ++i) {
      if (denominator(c[i]) != 1)
        throw NumericsError("non-integral simple-root expansion");
      ci[i] = c[i].convert_to<long>();
      if (ci[i] < 0) nonneg = false;
    }
    if (nonneg) pos.push_back({std::move(ci), r});
  }
  std::sort(pos.begin(), pos.end(),
            [](const PosRoot& a, const PosRoot& b) { return a.coeffs < b.coeffs; });

  for (PosRoot& p : pos) {
    rs.positive_coeffs.push_back(std::move(p.coeffs));
    rs.positive_roots_d.push_back(dbl_vec(p.root));
    rs.positive_roots.push_back(std::move(p.root));
  }
  if (static_cast<int>(rs.positive_roots.size()) != expected_positive_count(kind, rank))
    throw NumericsError("positive root count mismatch");
  return rs;
}

namespace {

double norm2(const CartanVec& v) {
  double s = 0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

double norm2(const CartanVecC& v) {
  double s = 0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

std::vector<int> wall_test(const RootSystem& rs, const CartanVec& v, double tol) {
  std::vector<int> hits;
  double nv = norm2(v);
  for (std::size_t i = 0; i < rs.positive_roots_d.size(); ++i) {
    const CartanVec& th = rs.positive_roots_d[i];
    if (std::abs(dot(th, v)) <= tol * norm2(th) * nv) hits.push_back(int(i));
  }
  return hits;
}

std::vector<int> wall_test(const RootSystem& rs, const CartanVecC& v, double tol) {
  std::vector<int> hits;
  double nv = norm2(v);
  for (std::size_t i = 0; i < rs.positive_roots_d.size(); ++i) {
    const CartanVec& th = rs.positive_roots_d[i];
    if (std::abs(dot(th, v)) <= tol * norm2(th) * nv) hits.push_back(int(i));
  }
  return hits;
}

std::vector<int> wall_test(const RootSystem& rs, const RatVec& v) {
  std::vector<int> hits;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    if (dot(rs.positive_roots[i], v) == 0) hits.push_back(int(i));
  return hits;
}

PrimitiveDecomposition primitive_decomposition(
    const RootSystem& rs, int theta_index,
    const std::function<bool(const RootSystem&, int)>& P) {
  if (theta_index < 0 || theta_index >= int(rs.positive_roots.size()))
    throw SchemaError("positive root index out of range");
  std::map<RatVec, int> index;
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    index[rs.positive_roots[i]] = int(i);
  const RatVec& theta = rs.positive_roots[theta_index];
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i) {
    RatVec rest = theta;
    for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= rs.positive_roots[i][k];
    auto it = index.find(rest);
    if (it == index.end()) continue;
    int j = it->second;
    if (P(rs, int(i)) && P(rs, j))
      return {false, std::make_pair(int(i), j)};
  }
  return {true, std::nullopt};
}

std::vector<RatVec> weyl_orbit(const RootSystem& rs, const RatVec& v,
                               std::size_t max_size) {
  if (int(v.size()) != rs.ambient_dim)
    throw SchemaError("weyl_orbit: vector has wrong ambient dimension");
  std::set<RatVec> orbit{v};
  std::vector<RatVec> frontier{v};
  while (!frontier.empty()) {
    std::vector<RatVec> next;
    for (const RatVec& x : frontier)
      for (const RatVec& s : rs.simple_roots) {
        RatVec img = reflect(x, s);
        if (orbit.insert(img).second) {
          if (orbit.size() > max_size)
            throw NumericsError("weyl_orbit: orbit exceeds size cap");
          next.push_back(img);
        }
      }
    frontier.swap(next);
  }
  return std::vector<RatVec>(orbit.begin(), orbit.end());
}

int weyl_element_order(const RootSystem& rs, const std::vector<int>& word) {
  const int n = rs.ambient_dim;
  using Mat = std::vector<RatVec>;
  auto identity = [&] {
    Mat m(n, RatVec(n, Rational(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  };
  // Columns are images of basis vectors.
  Mat w = identity();
  for (int idx : word) {
    if (idx < 0 || idx >= rs.rank) throw SchemaError("simple reflection index out of range");
    for (int col = 0; col < n; ++col) {
      RatVec column(n);
      for (int row = 0; row < n; ++row) column[row] = w[row][col];
      column = reflect(column, rs.simple_roots[idx]);
      for (int row = 0; row < n; ++row) w[row][col] = column[row];
    }
  }
  auto mul = [&](const Mat& a, const Mat& b) {
    Mat c(n, RatVec(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (a[i][k] == 0) continue;
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
      }
    return c;
  };
  Mat id = identity();
  Mat acc = w;
  for (int order = 1; order <= 10000; ++order) {
    if (acc == id) return order;
    acc = mul(acc, w);
  }
  throw NumericsError("weyl_element_order: order cap exceeded");
}

}  // namespace ale
