#include "siegel/structures.hpp"

#include "siegel/error.hpp"

namespace siegel {

namespace {

const ComplexRational kI = ComplexRational::i();

Poly standard_entry(int n, int r, int c) {
  if (r != c) return Poly(n);
  return Poly::constant(n, r % 2 == 0 ? kI : -kI);
}

bool linear_in_zprime(const Poly& p) {
  const int n = p.n();
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() != 1 || m.z(n - 1) != 0 || m.zbar(n - 1) != 0) return false;
  }
  return true;
}

}  // namespace

ModelStructure::ModelStructure(int n, std::vector<LtildeRow> rows) : n_(n), rows_(std::move(rows)) {
  if (n < 2) fail(ErrorKind::Precondition, "model structure: n must be >= 2");
  if (static_cast<int>(rows_.size()) != n - 1) fail(ErrorKind::Dimension, "model structure: need n-1 rows");
  for (const auto& r : rows_) {
    if (static_cast<int>(r.alpha.size()) != n - 1 || static_cast<int>(r.beta.size()) != n - 1) {
      fail(ErrorKind::Dimension, "model structure: each row needs n-1 alpha and beta coefficients");
    }
  }
}

ModelStructure ModelStructure::standard(int n) {
  if (n < 2) fail(ErrorKind::Precondition, "model structure: n must be >= 2");
  LtildeRow zero{std::vector<ComplexRational>(n - 1), std::vector<ComplexRational>(n - 1)};
  return ModelStructure(n, std::vector<LtildeRow>(n - 1, zero));
}

Poly ModelStructure::ltilde(int i) const {
  if (i < 1 || i >= n_) fail(ErrorKind::Precondition, "ltilde: index out of range");
  const auto& row = rows_[i - 1];
  Poly p(n_);
  for (int l = 1; l < n_; ++l) {
    p += Poly::z(n_, l) * row.alpha[l - 1];
    p += Poly::zbar(n_, l) * row.beta[l - 1];
  }
  return p;
}

SimpleModelStructure::SimpleModelStructure(int n, Matrix b) : n_(n), b_(std::move(b)) {
  if (n < 2) fail(ErrorKind::Precondition, "simple structure: n must be >= 2");
  if (b_.rows() != n - 1 || b_.cols() != n - 1) fail(ErrorKind::Dimension, "simple structure: B must be (n-1)x(n-1)");
  if (!b_.is_antisymmetric()) fail(ErrorKind::Validation, "simple structure: B must be antisymmetric");
}

ModelStructure SimpleModelStructure::to_model() const {
  std::vector<LtildeRow> rows;
  for (int i = 0; i < n_ - 1; ++i) {
    LtildeRow r{std::vector<ComplexRational>(n_ - 1), std::vector<ComplexRational>(n_ - 1)};
    for (int l = 0; l < n_ - 1; ++l) r.alpha[l] = b_(i, l);
    rows.push_back(std::move(r));
  }
  return ModelStructure(n_, std::move(rows));
}

PolyMatrix complexify(const ModelStructure& j) {
  const int n = j.n();
  PolyMatrix m(2 * n, n);
  for (int r = 0; r < 2 * n; ++r)
    for (int c = 0; c < 2 * n; ++c) m(r, c) = standard_entry(n, r, c);
  const int zn_row = frame_slot(n, false);
  const int zbarn_row = frame_slot(n, true);
  for (int i = 1; i < n; ++i) {
    const Poly lt = j.ltilde(i);
    m(zbarn_row, frame_slot(i, false)) = lt;
    m(zn_row, frame_slot(i, true)) = lt.conj();
  }
  return m;
}

StructureReport verify_complexified(const PolyMatrix& jc) {
  StructureReport rep;
  const int size = jc.size();
  const int n = jc.n();
  auto flag = [&](int r, int c, std::string what) {
    rep.pass = false;
    rep.failures.push_back({r + 1, c + 1, std::move(what), jc(r, c).to_string()});
  };
  if (size != 2 * n || n < 2) {
    rep.pass = false;
    rep.failures.push_back({0, 0, "matrix must be 2n x 2n with n >= 2", ""});
    return rep;
  }
  const int zn_row = frame_slot(n, false);
  const int zbarn_row = frame_slot(n, true);
  for (int r = 0; r < size; ++r) {
    for (int c = 0; c < size; ++c) {
      const Poly& e = jc(r, c);
      const bool bottom = r == zn_row || r == zbarn_row;
      const bool diag_block = c >= zn_row;
      if (!bottom || diag_block) {
        if (e != standard_entry(n, r, c)) flag(r, c, "entry must match the standard structure");
        continue;
      }
      // bottom rows, columns of z' / zbar'
      const bool allowed = (r == zn_row) == (c % 2 == 1);
      if (!allowed) {
        if (!e.is_zero()) flag(r, c, "entry must vanish");
      } else if (!linear_in_zprime(e)) {
        flag(r, c, "entry must be linear in (z', zbar')");
      }
    }
  }
  for (int i = 1; i < n; ++i) {
    const int c_z = frame_slot(i, false), c_zb = frame_slot(i, true);
    if (jc(zn_row, c_zb) != jc(zbarn_row, c_z).conj()) flag(zn_row, c_zb, "must be the conjugate of the paired zbar_n-row entry");
  }
  const PolyMatrix sq = jc * jc;
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) {
      const Poly expected = r == c ? Poly::constant(n, -1) : Poly(n);
      if (sq(r, c) != expected) {
        rep.pass = false;
        rep.failures.push_back({r + 1, c + 1, "J^2 = -I fails", sq(r, c).to_string()});
      }
    }
  return rep;
}

StructureReport verify_structure(const ModelStructure& j) { return verify_complexified(complexify(j)); }

TangentFrame tangent_frame(const ModelStructure& j) {
  const int n = j.n();
  const ComplexRational minus_half_i(mpq_class(0), mpq_class(-1, 2));
  TangentFrame f;
  for (int k = 1; k < n; ++k) {
    Poly zbarn = j.ltilde(k) * minus_half_i;
    Poly zn = -zbarn - Poly::zbar(n, k) * ComplexRational(2);
    std::vector<Poly> comps(2 * n, Poly(n));
    comps[frame_slot(k, false)] = Poly::constant(n, 1);
    comps[frame_slot(n, false)] = zn;
    comps[frame_slot(n, true)] = zbarn;
    f.l.emplace_back(n, std::move(comps));
    f.dzn_coeff.push_back(std::move(zn));
    f.dzbarn_coeff.push_back(std::move(zbarn));
  }
  std::vector<Poly> t(2 * n, Poly(n));
  t[frame_slot(n, false)] = Poly::constant(n, kI);
  t[frame_slot(n, true)] = Poly::constant(n, -kI);
  f.t = VectorField(n, std::move(t));
  return f;
}

bool is_simple(const ModelStructure& j) {
  for (const auto& r : j.rows())
    for (const auto& b : r.beta)
      if (!b.is_zero()) return false;
  return true;
}

SimpleModelStructure as_simple(const ModelStructure& j) {
  const int n = j.n();
  for (int i = 0; i < n - 1; ++i)
    for (int l = 0; l < n - 1; ++l)
      if (!j.rows()[i].beta[l].is_zero()) {
        fail(ErrorKind::Validation, "as_simple: beta coefficient of row " + std::to_string(i + 1) + ", z-bar_" +
                                        std::to_string(l + 1) + " is nonzero");
      }
  Matrix b(n - 1, n - 1);
  for (int i = 0; i < n - 1; ++i)
    for (int l = 0; l < n - 1; ++l) b(i, l) = j.rows()[i].alpha[l];
  if (!b.is_antisymmetric()) fail(ErrorKind::Validation, "as_simple: coefficient matrix is not antisymmetric");
  return SimpleModelStructure(n, std::move(b));
}

VectorField apply_J(const ModelStructure& j, const VectorField& x) {
  require_same_dim(j.n(), x.n(), "apply_J");
  return apply_matrix(complexify(j), x);
}

std::vector<NijenhuisEntry> nijenhuis_tensor(const ModelStructure& j) {
  const int n = j.n();
  const PolyMatrix jc = complexify(j);
  std::vector<NijenhuisEntry> out;
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = a + 1; b < 2 * n; ++b) {
      const VectorField x = VectorField::coordinate(n, a / 2 + 1, a % 2 == 1);
      const VectorField y = VectorField::coordinate(n, b / 2 + 1, b % 2 == 1);
      const VectorField jx = apply_matrix(jc, x), jy = apply_matrix(jc, y);
      VectorField nxy = lie_bracket(jx, jy) - apply_matrix(jc, lie_bracket(jx, y)) -
                        apply_matrix(jc, lie_bracket(x, jy)) - lie_bracket(x, y);
      if (!nxy.is_zero()) out.push_back({a, b, std::move(nxy)});
    }
  }
  return out;
}

bool nijenhuis_vanishes(const ModelStructure& j) { return nijenhuis_tensor(j).empty(); }

}  // namespace siegel
