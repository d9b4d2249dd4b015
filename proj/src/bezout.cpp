#include "bax/bezout.hpp"

#include <map>
#include <stdexcept>

#include "bax/linalg.hpp"

namespace bax {

namespace {

mpq_class constant_value(const LaurentScalar& c) {
  for (const auto& [k, a] : c.terms())
    if (k != 0 && a != 0)
      throw std::invalid_argument("certificate search needs v-free coefficients");
  return c.coeff(0);
}

void box_points(int rank, int D, IVec& cur, int i, std::vector<IVec>& out) {
  if (i == rank) {
    out.push_back(cur);
    return;
  }
  for (int x = -D; x <= D; ++x) {
    cur[i] = x;
    box_points(rank, D, cur, i + 1, out);
  }
}

}  // namespace

std::optional<std::vector<TorusFunction>> bezout_certificate(
    int rank, const std::vector<TorusFunction>& gens, int degree_bound) {
  if (gens.empty()) return std::nullopt;
  std::vector<std::map<IVec, mpq_class>> gv(gens.size());
  for (size_t k = 0; k < gens.size(); ++k)
    for (const auto& [g, c] : gens[k].terms()) {
      IVec key = g;
      key.resize(rank, 0);
      gv[k][key] = constant_value(c);
    }

  std::vector<IVec> box;
  IVec cur(rank, 0);
  box_points(rank, degree_bound, cur, 0, box);

  // one unknown per (generator, box point)
  size_t nun = gens.size() * box.size();
  std::map<IVec, size_t> eq_index;
  for (size_t k = 0; k < gens.size(); ++k)
    for (const IVec& p : box)
      for (const auto& [s, c] : gv[k]) {
        (void)c;
        IVec pt(rank);
        for (int i = 0; i < rank; ++i) pt[i] = p[i] + s[i];
        eq_index.emplace(pt, eq_index.size());
      }
  IVec origin(rank, 0);
  eq_index.emplace(origin, eq_index.size());

  QMat m(eq_index.size(), QVec(nun, 0));
  QVec rhs(eq_index.size(), 0);
  rhs[eq_index.at(origin)] = 1;
  for (size_t k = 0; k < gens.size(); ++k)
    for (size_t pi = 0; pi < box.size(); ++pi)
      for (const auto& [s, c] : gv[k]) {
        IVec pt(rank);
        for (int i = 0; i < rank; ++i) pt[i] = box[pi][i] + s[i];
        m[eq_index.at(pt)][k * box.size() + pi] += c;
      }

  auto sol = mat_solve(m, rhs);
  if (!sol) return std::nullopt;

  std::vector<TorusFunction> out(gens.size());
  for (size_t k = 0; k < gens.size(); ++k) {
    TorusFunction a;
    for (size_t pi = 0; pi < box.size(); ++pi) {
      const mpq_class& c = (*sol)[k * box.size() + pi];
      if (c != 0) a.add_term(box[pi], LaurentScalar(c));
    }
    out[k] = a;
  }

  TorusFunction total;
  for (size_t k = 0; k < gens.size(); ++k) total = total + out[k] * gens[k];
  if (total != TorusFunction::scalar(LaurentScalar(1), rank))
    throw std::logic_error("certificate failed re-verification");
  return out;
}

}  // namespace bax
