#include "bax/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace bax {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

IMat imat_identity(int n) {
  IMat m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  const int n = static_cast<int>(a.size());
  IMat r(n, IVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (a[i][k])
        for (int j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

IVec imat_apply(const IMat& m, const IVec& v) {
  const int n = static_cast<int>(m.size());
  IVec r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += m[i][j] * v[j];
  return r;
}

struct Table {
  IMat pairing;
  IVec dsym;
};

Table cartan_table(CartanType t) {
  switch (t) {
    case CartanType::A1:
      return {{{2}}, {1}};
    case CartanType::A2:
      return {{{2, -1}, {-1, 2}}, {1, 1}};
    case CartanType::B2:  // alpha_1 long
      return {{{2, -2}, {-1, 2}}, {2, 1}};
    case CartanType::C2:  // alpha_1 short
      return {{{2, -1}, {-2, 2}}, {1, 2}};
    case CartanType::G2:  // alpha_1 short
      return {{{2, -1}, {-3, 2}}, {1, 3}};
    case CartanType::A3:
      return {{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}, {1, 1, 1}};
  }
  throw std::logic_error("bad cartan type");
}

mpq_class det_q(QMat m) {
  const int n = static_cast<int>(m.size());
  mpq_class det = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      mpq_class f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
  const size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  QMat r(n, QVec(m, mpq_class(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      if (a[i][t] != 0)
        for (size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
  return r;
}

bool qmat_is_zero(const QMat& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (x != 0) return false;
  return true;
}

}  // namespace

CartanType parse_cartan(const std::string& name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::toupper(c)));
  if (s == "A1") return CartanType::A1;
  if (s == "A2") return CartanType::A2;
  if (s == "B2") return CartanType::B2;
  if (s == "C2") return CartanType::C2;
  if (s == "G2") return CartanType::G2;
  if (s == "A3") return CartanType::A3;
  throw std::invalid_argument("unknown type: " + name +
                              " (expected one of A1 A2 B2 C2 G2 A3)");
}

std::string cartan_name(CartanType t) {
  switch (t) {
    case CartanType::A1: return "A1";
    case CartanType::A2: return "A2";
    case CartanType::B2: return "B2";
    case CartanType::C2: return "C2";
    case CartanType::G2: return "G2";
    case CartanType::A3: return "A3";
  }
  return "?";
}

long pair_root_coroot(const RootDatum& rd, const IVec& beta, const IVec& gamma) {
  long s = 0;
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) s += static_cast<long>(beta[i]) * rd.pairing[i][j] * gamma[j];
  return s;
}

mpq_class pair_point_root(const RootDatum& rd, const QVec& x, const IVec& beta) {
  mpq_class s = 0;
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) s += mpq_class(beta[i] * rd.pairing[i][j]) * x[j];
  return s;
}

long rho_pair(const IVec& gamma) {
  return std::accumulate(gamma.begin(), gamma.end(), 0L);
}

int root_height(const IVec& b) {
  return std::accumulate(b.begin(), b.end(), 0);
}

IVec weyl_coroot(const RootDatum& rd, int w, const IVec& c) {
  return imat_apply(rd.weyl[w].mat, c);
}

IVec weyl_root(const RootDatum& rd, int w, const IVec& b) {
  return imat_apply(rd.weyl[w].rmat, b);
}

QVec weyl_point(const RootDatum& rd, int w, const QVec& x) {
  const IMat& m = rd.weyl[w].mat;
  QVec r(rd.rank, mpq_class(0));
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) r[i] += mpq_class(m[i][j]) * x[j];
  return r;
}

int simple_reflection(const RootDatum& rd, int i) {
  for (int w = 0; w < rd.order(); ++w)
    if (rd.weyl[w].word == std::vector<int>{i}) return w;
  throw std::logic_error("missing simple reflection");
}

RootDatum build_root_datum(CartanType t) {
  RootDatum rd;
  rd.type = t;
  Table tab = cartan_table(t);
  rd.pairing = tab.pairing;
  rd.dsym = tab.dsym;
  const int n = static_cast<int>(tab.pairing.size());
  rd.rank = n;

  std::vector<IMat> smat(n), srmat(n);
  for (int i = 0; i < n; ++i) {
    smat[i] = imat_identity(n);
    srmat[i] = imat_identity(n);
    for (int j = 0; j < n; ++j) {
      smat[i][i][j] -= rd.pairing[i][j];
      srmat[i][i][j] -= rd.pairing[j][i];
    }
  }

  // Weyl group by breadth-first closure; discovery order gives each element
  // its shortlex-minimal reduced word.
  std::map<IMat, int> index_of;
  rd.weyl.push_back({{}, imat_identity(n), imat_identity(n), 0});
  index_of[rd.weyl[0].mat] = 0;
  for (size_t head = 0; head < rd.weyl.size(); ++head) {
    for (int i = 0; i < n; ++i) {
      IMat m = imat_mul(rd.weyl[head].mat, smat[i]);
      if (index_of.count(m)) continue;
      WeylElement e;
      e.word = rd.weyl[head].word;
      e.word.push_back(i);
      e.mat = m;
      e.rmat = imat_mul(rd.weyl[head].rmat, srmat[i]);
      index_of[m] = static_cast<int>(rd.weyl.size());
      rd.weyl.push_back(std::move(e));
    }
  }
  const int order = static_cast<int>(rd.weyl.size());
  {
    static const std::map<CartanType, int> expected = {
        {CartanType::A1, 2},  {CartanType::A2, 6}, {CartanType::B2, 8},
        {CartanType::C2, 8},  {CartanType::G2, 12}, {CartanType::A3, 24}};
    require(order == expected.at(t), "Weyl group order mismatch");
  }

  rd.mult.assign(order, std::vector<int>(order, 0));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      rd.mult[a][b] = index_of.at(imat_mul(rd.weyl[a].mat, rd.weyl[b].mat));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (rd.mult[a][b] == 0) rd.weyl[a].inv = b;
  rd.w0 = order - 1;
  require(rd.weyl[order - 1].length() > rd.weyl[order - 2].length(),
          "longest element not unique");

  // all roots as Weyl images of the simple ones
  std::set<IVec> pos;
  for (int w = 0; w < order; ++w)
    for (int i = 0; i < n; ++i) {
      IVec e(n, 0);
      e[i] = 1;
      IVec b = imat_apply(rd.weyl[w].rmat, e);
      if (*std::min_element(b.begin(), b.end()) >= 0) pos.insert(b);
    }
  rd.positive_roots.assign(pos.begin(), pos.end());
  std::sort(rd.positive_roots.begin(), rd.positive_roots.end(),
            [](const IVec& a, const IVec& b) {
              int ha = root_height(a), hb = root_height(b);
              return ha != hb ? ha < hb : a < b;
            });
  {
    static const std::map<CartanType, int> expected = {
        {CartanType::A1, 1}, {CartanType::A2, 3}, {CartanType::B2, 4},
        {CartanType::C2, 4}, {CartanType::G2, 6}, {CartanType::A3, 6}};
    require(rd.npos() == expected.at(t), "positive root count mismatch");
  }

  for (const IVec& b : rd.positive_roots) {
    long norm = 0;  // (beta, beta)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        norm += static_cast<long>(b[i]) * b[j] * rd.dsym[j] * rd.pairing[i][j];
    require(norm % 2 == 0 && norm > 0, "odd root norm");
    long dbeta = norm / 2;
    require(dbeta >= 1 && dbeta <= 3, "root length out of range");
    IVec c(n);
    for (int j = 0; j < n; ++j) {
      long num = static_cast<long>(b[j]) * rd.dsym[j];
      require(num % dbeta == 0, "non-integral coroot");
      c[j] = static_cast<int>(num / dbeta);
    }
    rd.positive_coroots.push_back(c);
  }

  // reflections: s_beta on coroot coords sends e_j to e_j - <beta, e_j> beta_vee
  rd.refl_of_pos.assign(rd.npos(), 0);
  for (int k = 0; k < rd.npos(); ++k) {
    const IVec& b = rd.positive_roots[k];
    const IVec& cv = rd.positive_coroots[k];
    IMat m(n, IVec(n, 0));
    for (int j = 0; j < n; ++j) {
      long val = 0;
      for (int i = 0; i < n; ++i) val += static_cast<long>(b[i]) * rd.pairing[i][j];
      for (int r = 0; r < n; ++r) m[r][j] = (r == j ? 1 : 0) - static_cast<int>(val) * cv[r];
    }
    auto it = index_of.find(m);
    require(it != index_of.end(), "reflection not in Weyl group");
    rd.refl_of_pos[k] = it->second;
  }

  rd.theta_root = rd.positive_roots.back();
  rd.theta_coroot = rd.positive_coroots.back();
  require(rd.npos() < 2 ||
              root_height(rd.theta_root) >
                  root_height(rd.positive_roots[rd.npos() - 2]),
          "highest root not unique by height");
  rd.coxeter_h = root_height(rd.theta_root) + 1;
  {
    static const std::map<CartanType, IVec> expected = {
        {CartanType::A1, {1}},       {CartanType::A2, {1, 1}},
        {CartanType::B2, {1, 1}},    {CartanType::C2, {1, 1}},
        {CartanType::G2, {1, 2}},    {CartanType::A3, {1, 1, 1}}};
    require(rd.theta_coroot == expected.at(t), "highest coroot mismatch");
  }

  rd.two_rho_vee.assign(n, 0);
  for (const IVec& c : rd.positive_coroots)
    for (int j = 0; j < n; ++j) rd.two_rho_vee[j] += c[j];
  rd.rho_vee.assign(n, mpq_class(0));
  for (int j = 0; j < n; ++j) {
    rd.rho_vee[j] = mpq_class(rd.two_rho_vee[j], 2);
    rd.rho_vee[j].canonicalize();
  }
  rd.x0.assign(n, mpq_class(0));
  for (int j = 0; j < n; ++j) rd.x0[j] = rd.rho_vee[j] / rd.coxeter_h;

  // consistency: the coordinate-sum form of rho-pairing agrees with the
  // half-sum over positive roots, and simple roots take value 1 on rho_vee
  for (int j = 0; j < n; ++j) {
    IVec e(n, 0);
    e[j] = 1;
    long half_sum = 0;
    for (const IVec& b : rd.positive_roots) half_sum += pair_root_coroot(rd, b, e);
    require(half_sum == 2 * rho_pair(e), "rho pairing identity fails");
    require(pair_point_root(rd, rd.rho_vee, e) == 1, "rho_vee not unital");
  }
  // Weyl invariance of the pairing, checked on generators and basis vectors
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a)
      for (int bq = 0; bq < n; ++bq) {
        IVec ea(n, 0), eb(n, 0);
        ea[a] = 1;
        eb[bq] = 1;
        require(pair_root_coroot(rd, imat_apply(srmat[i], ea), imat_apply(smat[i], eb)) ==
                    pair_root_coroot(rd, ea, eb),
                "pairing not Weyl invariant");
      }

  return rd;
}

std::vector<int> parabolic_elements(const RootDatum& rd, const std::vector<int>& I) {
  std::set<int> seen = {0};
  std::vector<int> queue = {0};
  for (size_t h = 0; h < queue.size(); ++h)
    for (int i : I) {
      int nx = rd.mult[queue[h]][simple_reflection(rd, i)];
      if (seen.insert(nx).second) queue.push_back(nx);
    }
  return {seen.begin(), seen.end()};
}

std::vector<int> minimal_coset_reps(const RootDatum& rd, const std::vector<int>& I) {
  std::vector<int> reps;
  for (int w = 0; w < rd.order(); ++w) {
    bool minimal = true;
    for (int i : I) {
      IVec e(rd.rank, 0);
      e[i] = 1;
      IVec img = weyl_root(rd, w, e);
      if (*std::min_element(img.begin(), img.end()) < 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) reps.push_back(w);
  }
  return reps;
}

ChainComplex permutohedron_complex(const RootDatum& rd) {
  const int n = rd.rank;
  struct Cell {
    std::vector<int> I;
    int w;                    // minimal coset representative
    std::vector<int> members;  // the coset wW_I
    QVec bary;
    QMat basis;  // columns w(alpha_i_vee), i in I ascending
  };
  std::vector<std::vector<Cell>> cells(n + 1);

  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> I;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) I.push_back(i);
    auto sub = parabolic_elements(rd, I);
    for (int rep : minimal_coset_reps(rd, I)) {
      Cell c;
      c.I = I;
      c.w = rep;
      for (int h : sub) c.members.push_back(rd.mult[rep][h]);
      std::sort(c.members.begin(), c.members.end());
      c.bary.assign(n, mpq_class(0));
      for (int u : c.members) {
        QVec pt = weyl_point(rd, u, rd.rho_vee);
        for (int j = 0; j < n; ++j) c.bary[j] += pt[j];
      }
      for (int j = 0; j < n; ++j) c.bary[j] /= static_cast<int>(c.members.size());
      c.basis.assign(n, QVec(I.size(), mpq_class(0)));
      for (size_t col = 0; col < I.size(); ++col) {
        IVec e(n, 0);
        e[I[col]] = 1;
        IVec img = weyl_coroot(rd, rep, e);
        for (int j = 0; j < n; ++j) c.basis[j][col] = img[j];
      }
      cells[I.size()].push_back(std::move(c));
    }
  }
  for (auto& layer : cells)
    std::sort(layer.begin(), layer.end(), [](const Cell& a, const Cell& b) {
      return a.I != b.I ? a.I < b.I : a.w < b.w;
    });

  ChainComplex cc;
  cc.counts.push_back(1);
  for (int d = 0; d <= n; ++d) cc.counts.push_back(static_cast<int>(cells[d].size()));

  // augmentation
  cc.boundary.push_back(QMat(1, QVec(cells[0].size(), mpq_class(1))));

  for (int d = 1; d <= n; ++d) {
    QMat D(cells[d - 1].size(), QVec(cells[d].size(), mpq_class(0)));
    for (size_t ci = 0; ci < cells[d].size(); ++ci) {
      const Cell& c = cells[d][ci];
      std::set<int> cI(c.I.begin(), c.I.end());
      std::set<int> cmembers(c.members.begin(), c.members.end());
      for (size_t fi = 0; fi < cells[d - 1].size(); ++fi) {
        const Cell& f = cells[d - 1][fi];
        bool subset = std::includes(cI.begin(), cI.end(), f.I.begin(), f.I.end());
        if (!subset || !cmembers.count(f.w)) continue;
        // orientation: coordinates of f's frame plus the outward barycenter
        // step, read in c's frame
        QMat coords(d, QVec(d, mpq_class(0)));
        for (int col = 0; col < d; ++col) {
          QVec target(n, mpq_class(0));
          if (col < d - 1)
            for (int j = 0; j < n; ++j) target[j] = f.basis[j][col];
          else
            for (int j = 0; j < n; ++j) target[j] = f.bary[j] - c.bary[j];
          auto sol = mat_solve(c.basis, target);
          if (!sol) throw std::logic_error("face frame outside cell frame");
          for (int r = 0; r < d; ++r) coords[r][col] = (*sol)[r];
        }
        mpq_class dt = det_q(coords);
        if (dt == 0) throw std::logic_error("degenerate face frame");
        D[fi][ci] = dt > 0 ? 1 : -1;
      }
    }
    cc.boundary.push_back(std::move(D));
  }

  cc.d2_zero = true;
  for (int d = 1; d <= n; ++d)
    if (!qmat_is_zero(qmat_mul(cc.boundary[d - 1], cc.boundary[d]))) cc.d2_zero = false;

  // exactness of the augmented complex (the polytope is contractible)
  cc.exact = true;
  std::vector<int> rk(n + 1);
  for (int d = 0; d <= n; ++d) rk[d] = mat_rank(cc.boundary[d]);
  if (rk[0] != 1) cc.exact = false;
  for (int d = 0; d <= n; ++d) {
    int nullity = cc.counts[d + 1] - rk[d];
    int image_above = (d == n) ? 0 : rk[d + 1];
    if (nullity != image_above) cc.exact = false;
  }
  return cc;
}

}  // namespace bax
