#include "axial/miyamoto.hpp"

#include <deque>
#include <functional>
#include <set>

#include "axial/spectral.hpp"

namespace axial {

bool is_automorphism(const Algebra& a, const Matrix& m) {
  const std::size_t n = a.dim();
  if (m.rows() != n || m.cols() != n) return false;
  if (!inverse(m)) return false;
  auto cols = m.column_vectors();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (m * a.basis_product(i, j) != a.multiply(cols[i], cols[j])) return false;
  return true;
}

AutMatrix tau_automorphism(const Algebra& a, const Element& axis, const FusionLaw& law, const C2Grading& g) {
  AxisReport rep = check_axis(a, axis, law);
  if (!rep.is_axis()) throw MiyamotoError("not an axis: " + rep.violations.front().kind);
  const std::size_t n = a.dim();
  const FieldTag f = a.field();
  std::vector<Vector> cols, images;
  for (const auto& e : rep.eigen.spaces) {
    int sgn = g.sign_of(e.value);
    for (const auto& b : e.space.basis()) {
      cols.push_back(b);
      images.push_back(sgn > 0 ? b : scale(b, Scalar(-1L, f)));
    }
  }
  auto einv = inverse(Matrix::from_columns(cols, n, f));
  if (!einv) throw MiyamotoError("internal: eigenbasis is singular");
  Matrix tau = Matrix::from_columns(images, n, f) * *einv;
  if (!is_automorphism(a, tau)) throw MiyamotoError("grading incompatible with the observed products");
  return {tau, AutSource::Tau, "tau"};
}

namespace {
struct MatrixLess {
  bool operator()(const Matrix& x, const Matrix& y) const { return x.compare(y) < 0; }
};
}  // namespace

GroupClosure group_closure(const std::vector<Matrix>& generators, std::size_t cap) {
  GroupClosure gc;
  if (generators.empty()) {
    gc.completed = true;
    return gc;
  }
  const Matrix id = Matrix::identity(generators[0].rows(), generators[0].field());
  std::set<Matrix, MatrixLess> seen{id};
  std::deque<Matrix> queue{id};
  gc.elements.push_back(id);
  while (!queue.empty()) {
    Matrix cur = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      Matrix nxt = cur * g;
      if (!seen.insert(nxt).second) continue;
      if (seen.size() > cap) return gc;
      gc.elements.push_back(nxt);
      queue.push_back(std::move(nxt));
    }
  }
  gc.completed = true;
  return gc;
}

std::optional<std::size_t> matrix_order(const Matrix& m, std::size_t cap) {
  const Matrix id = Matrix::identity(m.rows(), m.field());
  Matrix p = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return std::nullopt;
}

AxisClosure axis_closure(const Algebra& a, const std::vector<Element>& axes, const FusionLaw& law,
                         const C2Grading& g, std::size_t cap) {
  AxisClosure ac;
  std::set<Vector, std::function<bool(const Vector&, const Vector&)>> seen(
      [](const Vector& x, const Vector& y) { return compare(x, y) < 0; });
  for (const auto& x : axes)
    if (seen.insert(x).second) ac.axes.push_back(x);
  std::vector<Matrix> taus;
  std::size_t done = 0;
  while (done < ac.axes.size()) {
    taus.push_back(tau_automorphism(a, ac.axes[done], law, g).m);
    ++done;
    // apply every known tau to every known axis
    for (std::size_t t = 0; t < taus.size(); ++t)
      for (std::size_t i = 0; i < ac.axes.size(); ++i) {
        Vector img = taus[t] * ac.axes[i];
        if (!seen.insert(img).second) continue;
        if (ac.axes.size() >= cap) return ac;
        ac.axes.push_back(std::move(img));
      }
  }
  ac.completed = true;
  return ac;
}

std::optional<AutMatrix> find_flip(const Algebra& a, const Element& a1, const Element& a2) {
  const std::size_t n = a.dim();
  const FieldTag f = a.field();
  WordClosure wc = word_closure(a, {a1, a2});
  if (wc.span.dim() != n) throw MiyamotoError("flip search needs a generating pair");
  std::vector<std::optional<Element>> swapped(wc.nodes.size());
  std::function<const Element&(std::size_t)> eval = [&](std::size_t id) -> const Element& {
    if (!swapped[id]) {
      const auto& node = wc.nodes[id];
      if (node.generator >= 0) {
        swapped[id] = node.generator == 0 ? a2 : a1;
      } else {
        swapped[id] = a.multiply(eval(node.left), eval(node.right));
      }
    }
    return *swapped[id];
  };
  std::vector<Vector> src, dst;
  for (std::size_t id : wc.basis) {
    src.push_back(wc.values[id]);
    dst.push_back(eval(id));
  }
  auto sinv = inverse(Matrix::from_columns(src, n, f));
  if (!sinv) throw MiyamotoError("internal: word basis is singular");
  Matrix phi = Matrix::from_columns(dst, n, f) * *sinv;
  if (!is_automorphism(a, phi)) return std::nullopt;
  if (phi * a1 != a2 || phi * a2 != a1) return std::nullopt;
  return AutMatrix{phi, AutSource::Flip, "flip"};
}

}  // namespace axial
