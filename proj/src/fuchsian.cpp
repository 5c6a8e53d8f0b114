#include "curveplex/fuchsian.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "curveplex/errors.hpp"

namespace curveplex {
namespace {

namespace mp = boost::multiprecision;
using F50 = mp::cpp_bin_float_50;
using F100 = mp::cpp_bin_float_100;
using F200 = mp::number<mp::cpp_bin_float<200>>;

// Thrown when a sign or clustering decision is thinner than the working
// tolerance; the driver retries in a rotated frame or at higher precision.
struct Retry {
  const char* where;
};

template <class F>
struct M2 {
  F a, b, c, d;
};

template <class F>
M2<F> mul(const M2<F>& x, const M2<F>& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// Inverse of a determinant-one matrix.
template <class F>
M2<F> inv(const M2<F>& x) {
  return {x.d, -x.b, -x.c, x.a};
}

template <class F>
class Frame {
 public:
  Frame(std::shared_ptr<const SurfaceModel> surface, int seed)
      : sur_(std::move(surface)), n_(sur_->n_sides()) {
    const int d10 = std::numeric_limits<F>::digits10;
    tol_ = pow(F(10), -(d10 / 2));
    gap_ = pow(F(10), -(d10 / 5));
    pi_ = acos(F(-1));

    // Apothem of the regular n-gon whose corner angles sum to a full turn.
    const F rho = acosh(F(1) / tan(pi_ / n_));
    const M2<F> shift{exp(rho / 2), F(0), F(0), exp(-rho / 2)};
    const M2<F> half_turn{F(0), F(1), F(-1), F(0)};
    // Half turn about the midpoint of wall 0, which flips the polygon onto
    // its neighbor across that wall and reverses the wall's endpoints.
    const M2<F> to_mid = mul(spin(pi_ / n_), shift);
    const M2<F> flip0 = mul(mul(to_mid, half_turn), inv(to_mid));

    // A seeded global rotation keeps axis endpoints away from infinity.
    const M2<F> q = spin(F(seed) * F(0.5371));
    const M2<F> qi = inv(q);
    gen_.assign(static_cast<size_t>(2 * n_ + 1), M2<F>{});
    for (Letter x = -2 * sur_->genus(); x <= 2 * sur_->genus(); ++x) {
      if (x == 0) continue;
      const int k = sur_->side_of(x);
      const int j = sur_->side_of(-x);
      M2<F> g = mul(mul(spin(2 * pi_ * k / n_), flip0), spin(-2 * pi_ * j / n_));
      at(x) = mul(mul(q, g), qi);
    }

    check_identity(word_matrix(sur_->relator()), "relator is not a deck identity");
    for (Letter x = 1; x <= 2 * sur_->genus(); ++x)
      check_identity(mul(at(x), at(-x)), "wall gluings do not invert");
  }

  int pair_count(const Word& u, const Word& v) const { return orbits(u, v, false); }
  int self_count(const Word& w) const {
    const int c = orbits(w, w, true);
    if (c % 2 != 0) throw Internal("self crossing lifts did not pair up");
    return c / 2;
  }

 private:
  // Rotation about the polygon center by angle t.
  M2<F> spin(const F& t) const {
    return {cos(t / 2), sin(t / 2), -sin(t / 2), cos(t / 2)};
  }

  M2<F>& at(Letter x) { return gen_[static_cast<size_t>(x + n_)]; }
  const M2<F>& at(Letter x) const { return gen_[static_cast<size_t>(x + n_)]; }

  M2<F> word_matrix(const Word& w) const {
    M2<F> m{F(1), F(0), F(0), F(1)};
    for (Letter x : w) m = mul(m, at(x));
    return m;
  }

  void check_identity(const M2<F>& m, const char* what) const {
    const F e1 = abs(m.a - 1) + abs(m.b) + abs(m.c) + abs(m.d - 1);
    const F e2 = abs(m.a + 1) + abs(m.b) + abs(m.c) + abs(m.d + 1);
    if (!(e1 < gap_ || e2 < gap_)) throw Internal(what);
  }

  void need(const F& margin, const char* where) const {
    if (!(margin > tol_)) throw Retry{where};
  }

  M2<F> normalized(M2<F> m) const {
    const F det = m.a * m.d - m.b * m.c;
    need(det, "determinant not certifiably positive");
    const F s = sqrt(det);
    return {m.a / s, m.b / s, m.c / s, m.d / s};
  }

  // Boundary fixed points of a hyperbolic matrix, attracting first.
  std::pair<F, F> axis_ends(const M2<F>& m0) const {
    const M2<F> m = normalized(m0);
    const F tr = m.a + m.d;
    need(abs(tr) - 2 - tol_, "trace not hyperbolic");
    need(abs(m.c), "axis nearly vertical");
    const F disc = sqrt(tr * tr - 4);
    const F x1 = (m.a - m.d + disc) / (2 * m.c);
    const F x2 = (m.a - m.d - disc) / (2 * m.c);
    const F m1 = abs(m.c * x1 + m.d);
    need(abs(m1 - 1), "multiplier near one");
    return m1 > 1 ? std::make_pair(x1, x2) : std::make_pair(x2, x1);
  }

  // Count conjugate axes of v crossing one fundamental stretch of axis(u).
  // In self mode conjugates sharing the base axis are skipped and each
  // surface crossing is produced by two branch assignments.
  int orbits(const Word& u, const Word& v, bool self_mode) const {
    const Word ut = sur_->dehn_reduce_cyclic(u);
    const Word vt = sur_->dehn_reduce_cyclic(v);
    if (ut.empty() || vt.empty()) throw EmptyAfterReduction();

    const M2<F> mu = normalized(word_matrix(ut));
    const auto [a_att, a_rep] = axis_ends(mu);

    // Send the axis of u to the vertical through 0 with 0 attracting; the
    // deck action of u becomes the dilation z -> lam * z with 0 < lam < 1.
    M2<F> t{F(1), -a_att, F(1), -a_rep};
    if (!(t.a * t.d - t.b * t.c > 0)) t = {F(-1), a_att, F(1), -a_rep};
    const M2<F> ti = inv(normalized(t));
    const M2<F> tn = normalized(t);
    const M2<F> nu = mul(mul(tn, mu), ti);
    if (!(abs(nu.b) < gap_ && abs(nu.c) < gap_))
      throw Internal("axis did not diagonalize its own deck action");
    const F lam = nu.a / nu.d;
    need(lam, "dilation sign");
    need(1 - lam - tol_, "dilation near one");
    const F ell = -log(lam);

    // Conjugators: every prefix of u adjusted by at most one extra letter.
    std::vector<M2<F>> conj;
    {
      M2<F> p{F(1), F(0), F(0), F(1)};
      for (size_t i = 0; i <= ut.size(); ++i) {
        conj.push_back(p);
        for (Letter x = -2 * sur_->genus(); x <= 2 * sur_->genus(); ++x)
          if (x != 0) conj.push_back(mul(p, at(x)));
        if (i < ut.size()) p = mul(p, at(ut[i]));
      }
    }
    std::vector<M2<F>> rots;
    for (size_t j = 0; j < vt.size(); ++j) rots.push_back(word_matrix(rotated(vt, static_cast<int>(j))));

    struct Rec {
      F frac, e1, e2;
    };
    std::vector<Rec> recs;
    for (const M2<F>& c : conj) {
      const M2<F> ci = inv(c);
      for (const M2<F>& r : rots) {
        const M2<F> mw = mul(mul(c, r), ci);
        const auto [b_att, b_rep] = axis_ends(mw);
        if (self_mode) {
          const F direct = abs(b_att - a_att) + abs(b_rep - a_rep);
          const F reversed = abs(b_att - a_rep) + abs(b_rep - a_att);
          const F sep = direct < reversed ? direct : reversed;
          if (sep < tol_) continue;
          need(sep - gap_, "axis separation ambiguous");
        }
        need(abs(b_att - a_rep), "endpoint near pole");
        need(abs(b_rep - a_rep), "endpoint near pole");
        const F b1 = (tn.a * b_att + tn.b) / (tn.c * b_att + tn.d);
        const F b2 = (tn.a * b_rep + tn.b) / (tn.c * b_rep + tn.d);
        const F q = b1 * b2;
        need(abs(q) / ((1 + abs(b1)) * (1 + abs(b2))), "crossing sign thin");
        if (q > 0) continue;  // endpoints on one side: no crossing

        // Crossing height along the axis, folded into one period.
        const F m = log(-q) / (2 * ell);
        F kf = floor(m);
        F frac = m - kf;
        if (frac > 1 - gap_ * gap_) {
          kf += 1;
          frac = m - kf;
        }
        if (abs(frac) < gap_ * gap_) {
          frac = F(0);
        } else {
          need(frac, "fold near window edge");
          need(1 - frac, "fold near window edge");
        }
        const F scale = pow(lam, -kf);
        recs.push_back({frac, b1 / scale, b2 / scale});
      }
    }

    // Cluster records that name the same folded axis; distinct clusters must
    // be separated by a clear gap.
    const size_t nr = recs.size();
    std::vector<size_t> root(nr);
    std::iota(root.begin(), root.end(), size_t{0});
    auto find = [&](size_t i) {
      while (root[i] != i) i = root[i] = root[root[i]];
      return i;
    };
    auto same_axis = [&](const Rec& x, const Rec& y) {
      for (int s = -1; s <= 1; ++s) {
        const F sc = pow(lam, s);
        const F d = abs(x.e1 - y.e1 * sc) + abs(x.e2 - y.e2 * sc);
        const F mag = 1 + abs(x.e1) + abs(x.e2);
        if (d < tol_ * mag) return true;
        if (d < gap_ * mag) throw Retry{"cluster separation thin"};
      }
      return false;
    };
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = i + 1; j < nr; ++j) {
        if (abs(recs[i].frac - recs[j].frac) > gap_) continue;
        if (same_axis(recs[i], recs[j])) {
          const size_t ri = find(i), rj = find(j);
          if (ri != rj) root[ri] = rj;
        }
      }
    int count = 0;
    for (size_t i = 0; i < nr; ++i)
      if (find(i) == i) ++count;
    return count;
  }

  std::shared_ptr<const SurfaceModel> sur_;
  int n_;
  F pi_, tol_, gap_;
  std::vector<M2<F>> gen_;
};

template <class F>
int try_count(const std::shared_ptr<const SurfaceModel>& sur, const Word& u,
              const Word& v, bool self_mode, int seed) {
  Frame<F> fr(sur, seed);
  return self_mode ? fr.self_count(u) : fr.pair_count(u, v);
}

int certified_count(const std::shared_ptr<const SurfaceModel>& sur,
                    const Word& u, const Word& v, bool self_mode) {
  const char* last = "";
  for (int seed = 0; seed < 3; ++seed) {
    try {
      return try_count<F50>(sur, u, v, self_mode, seed);
    } catch (const Retry& r) {
      last = r.where;
    }
  }
  for (int seed = 0; seed < 3; ++seed) {
    try {
      return try_count<F100>(sur, u, v, self_mode, seed);
    } catch (const Retry& r) {
      last = r.where;
    }
  }
  for (int seed = 0; seed < 3; ++seed) {
    try {
      return try_count<F200>(sur, u, v, self_mode, seed);
    } catch (const Retry& r) {
      last = r.where;
    }
  }
  throw Internal(std::string("crossing count stayed uncertified: ") + last);
}

}  // namespace

int fuchsian_intersection(const std::shared_ptr<const SurfaceModel>& surface,
                          const Word& u, const Word& v) {
  return certified_count(surface, u, v, false);
}

int fuchsian_self(const std::shared_ptr<const SurfaceModel>& surface,
                  const Word& w) {
  return certified_count(surface, w, w, true);
}

}  // namespace curveplex
