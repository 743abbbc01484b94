#include "quadric/verify/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "quadric/surface/generators.hpp"

namespace quadric::verify {

namespace {

using model::Conjugation;
using model::QuadricPoint;
using model::SingularKind;
using surface::HypersurfacePoint;
using surface::Rng;
using surface::TypeBTube;

std::string fmt(double x, int digits = 6) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

template <FieldScalar T>
std::string fmt(const T& x) {
  return FieldTraits<T>::to_string(x);
}

// Collects residuals for one report. Float residuals keep the worst value
// (or the smallest, for lower-bound probes); exact residuals are summed as
// squared norms, so the total is zero iff every recorded piece is zero.
class Recorder {
 public:
  Recorder(const CheckContext& ctx, std::string name, std::string anchor,
           Bound bound = Bound::AtMost)
      : ctx_(ctx), bound_(bound), start_(std::chrono::steady_clock::now()) {
    report_.name = std::move(name);
    report_.anchor = std::move(anchor);
    report_.mode = ctx.mode;
    report_.seed = ctx.seed;
    report_.bound = bound;
    report_.tolerance = bound == Bound::Above ? kNonvanishingThreshold : ctx.tolerance;
    param("m", std::to_string(ctx.m));
    if (ctx.tube) {
      if (ctx.tube->has_u()) {
        param("u", ctx.tube->u().get_str());
      } else {
        param("r", fmt(ctx.tube->radius(), 17));
      }
      if (ctx.lambda_shift != 0) param("lambda_shift", ctx.lambda_shift.get_str());
    } else {
      param("seed", std::to_string(ctx.seed));
    }
  }

  void param(std::string key, std::string value) {
    report_.parameters.emplace_back(std::move(key), std::move(value));
  }
  void set_tolerance(double tol) { report_.tolerance = tol; }

  template <FieldScalar T>
  void record(const Matrix<T>& m, std::string_view where) {
    record_sq(frobenius_sq(m), where);
  }
  template <FieldScalar T>
  void record(const Vec<T>& v, std::string_view where) {
    record_sq(norm_sq(v), where);
  }
  template <FieldScalar T>
  void record_scalar(const T& x, std::string_view where) {
    record_sq(T(x * x), where);
  }

  template <FieldScalar T>
  void record_sq(const T& sq, std::string_view where) {
    if constexpr (is_exact_v<T>) {
      record_exact_sq(sq, where);
    } else {
      record_float(std::sqrt(std::max(0.0, sq)), where);
    }
  }

  /// Commutator residual; float values are normalized by 1 + ‖P‖‖Q‖ and the
  /// raw maximum is kept as the "raw_max" parameter.
  template <FieldScalar T>
  void record_commutator(const Matrix<T>& p, const Matrix<T>& q, std::string_view where) {
    const Matrix<T> c = commutator(p, q);
    if constexpr (is_exact_v<T>) {
      record_exact_sq(frobenius_sq(c), where);
    } else {
      const double raw = frobenius_norm(c);
      raw_extreme_ = have_raw_ ? (bound_ == Bound::AtMost ? std::max(raw_extreme_, raw)
                                                          : std::min(raw_extreme_, raw))
                               : raw;
      have_raw_ = true;
      if (bound_ == Bound::Above) {
        record_float(raw, where);
      } else {
        record_float(raw / (1.0 + frobenius_norm(p) * frobenius_norm(q)), where);
      }
    }
  }

  void record_float(double r, std::string_view where) {
    ++count_;
    if (std::isnan(r)) {
      fail("NaN residual at " + std::string(where));
      return;
    }
    const bool worse = bound_ == Bound::AtMost ? r > worst_ : r < worst_;
    if (count_ == 1 || worse) {
      worst_ = r;
      where_ = where;
    }
  }

  void record_exact_sq(const QSqrt2& sq, std::string_view where) {
    ++count_;
    if (bound_ == Bound::AtMost) {
      exact_ += sq;
      if (!sq.is_zero() && where_.empty()) where_ = where;
    } else if (count_ == 1 || sq < exact_) {
      exact_ = sq;
      where_ = where;
    }
  }

  void fail(std::string msg) {
    forced_fail_ = true;
    note(std::move(msg));
  }
  void skip(std::string msg) {
    skipped_ = true;
    note(std::move(msg));
  }
  void note(std::string msg) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += msg;
  }

  CheckReport finish() {
    report_.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    if (ctx_.mode == Mode::Exact) {
      report_.residual = exact_;
    } else {
      report_.residual = count_ ? worst_ : 0.0;
      if (have_raw_) param("raw_max", fmt(raw_extreme_, 17));
    }
    param("evaluations", std::to_string(count_));
    std::string msg;
    if (skipped_) {
      report_.status = Status::Skipped;
    } else if (count_ == 0 && !forced_fail_) {
      report_.status = Status::Fail;
      msg = "no residuals recorded";
    } else if (forced_fail_) {
      report_.status = Status::Fail;
    } else {
      report_.status = residual_passes(report_.residual, report_.tolerance, bound_) ? Status::Pass
                                                                                    : Status::Fail;
    }
    if (!where_.empty() && !skipped_) {
      if (ctx_.mode == Mode::Exact && bound_ == Bound::AtMost) {
        msg = "first nonzero residual at " + where_;
      } else {
        msg = (bound_ == Bound::AtMost ? "largest residual at " : "smallest residual at ") + where_;
      }
    }
    if (!notes_.empty()) msg = msg.empty() ? notes_ : msg + "; " + notes_;
    report_.message = std::move(msg);
    return std::move(report_);
  }

 private:
  const CheckContext& ctx_;
  Bound bound_;
  std::chrono::steady_clock::time_point start_;
  CheckReport report_;
  long count_ = 0;
  double worst_ = 0.0;
  QSqrt2 exact_;
  double raw_extreme_ = 0.0;
  bool have_raw_ = false;
  std::string where_;
  std::string notes_;
  bool forced_fail_ = false;
  bool skipped_ = false;
};

Rng rng_for(const CheckContext& ctx, std::uint64_t salt) {
  return surface::make_rng(ctx.seed, {static_cast<std::uint64_t>(ctx.m), salt});
}

template <FieldScalar T>
T half_sqrt2() {
  if constexpr (is_exact_v<T>) {
    return QSqrt2(0, mpq_class(1, 2));
  } else {
    return std::sqrt(0.5);
  }
}

// ---------------------------------------------------------------------------
// Normal samples: reference normals (exact-capable) and, in float mode,
// randomly planted ones.

template <FieldScalar T>
struct NormalSample {
  std::string label;
  SingularKind kind;
  Vec<T> n;
  Conjugation<T> a;  // adapted to n, with z1, z2 ∈ V(a)
  Vec<T> z1;
  Vec<T> z2;
  T cos_t;
  T sin_t;
};

template <FieldScalar T>
std::vector<NormalSample<T>> reference_normals(const QuadricPoint<T>& q) {
  struct Spec {
    std::string label;
    SingularKind kind;
    Vec<T> z1, z2;
    T c, s;
  };
  const T h = half_sqrt2<T>();
  const std::vector<Spec> specs = {
      {"N=e1", SingularKind::Principal, q.e(0), q.e(1), T(1), T(0)},
      {"N=Je2", SingularKind::Principal, q.Je(1), q.Je(0), T(1), T(0)},
      {"N=(e1+Je2)/sqrt2", SingularKind::Isotropic, q.e(0), q.e(1), h, h},
      {"N=(e2+Je3)/sqrt2", SingularKind::Isotropic, q.e(1), q.e(2), h, h},
      {"N=(4e1+3Je2)/5", SingularKind::Regular, q.e(0), q.e(1), constant<T>(4, 5),
       constant<T>(3, 5)},
      {"N=(4e3+3Je1)/5", SingularKind::Regular, q.e(2), q.e(0), constant<T>(4, 5),
       constant<T>(3, 5)},
  };
  std::vector<NormalSample<T>> out;
  for (const auto& sp : specs) {
    Vec<T> n = sp.c * sp.z1;
    n.axpy(sp.s, model::apply_J(sp.z2));
    auto a = model::adapted_conjugation(q, n);
    out.push_back({sp.label, sp.kind, std::move(n), std::move(a), sp.z1, sp.z2, sp.c, sp.s});
  }
  return out;
}

NormalSample<double> planted_sample(const QuadricPoint<double>& q, double t, Rng& rng,
                                    const std::string& label) {
  auto p = surface::random_planted_normal(q, t, rng);
  SingularKind kind = SingularKind::Regular;
  if (t == 0.0) kind = SingularKind::Principal;
  if (t == std::numbers::pi / 4) kind = SingularKind::Isotropic;
  return {label + " t=" + fmt(t), kind,         std::move(p.n), std::move(p.a),
          std::move(p.z1),        std::move(p.z2), std::cos(t),   std::sin(t)};
}

/// Reference normals, plus `trials` planted normals with t uniform in
/// [0, π/4] in float mode.
template <FieldScalar T>
std::vector<NormalSample<T>> normal_samples(const QuadricPoint<T>& q, const CheckContext& ctx,
                                            Rng& rng) {
  auto out = reference_normals(q);
  if constexpr (!is_exact_v<T>) {
    std::uniform_real_distribution<double> dist(0.0, std::numbers::pi / 4);
    for (int k = 0; k < ctx.trials; ++k) {
      out.push_back(planted_sample(q, dist(rng), rng, "trial " + std::to_string(k)));
    }
  }
  return out;
}

/// Samples of one kind: reference normals of that kind, plus planted ones at
/// the kind's angle (or random interior angles for Regular) in float mode.
template <FieldScalar T>
std::vector<NormalSample<T>> kind_samples(const QuadricPoint<T>& q, SingularKind kind,
                                          const CheckContext& ctx, Rng& rng) {
  std::vector<NormalSample<T>> out;
  for (auto& s : reference_normals(q)) {
    if (s.kind == kind) out.push_back(std::move(s));
  }
  if constexpr (!is_exact_v<T>) {
    std::uniform_real_distribution<double> interior(0.05, std::numbers::pi / 4 - 0.05);
    for (int k = 0; k < ctx.trials; ++k) {
      double t = 0.0;
      if (kind == SingularKind::Isotropic) t = std::numbers::pi / 4;
      if (kind == SingularKind::Regular) t = k == 0 ? std::numbers::pi / 8 : interior(rng);
      out.push_back(planted_sample(q, t, rng, "trial " + std::to_string(k)));
    }
  }
  return out;
}

template <FieldScalar T>
T random_alpha(Rng& rng) {
  return surface::random_entry<T>(rng, -3.0, 3.0);
}

template <FieldScalar T>
HypersurfacePoint<T> surface_from(const QuadricPoint<T>& q, const NormalSample<T>& s,
                                  Matrix<T> shape) {
  return surface::make_hypersurface_point(q, s.a, s.n, std::move(shape));
}

/// Spanning set of TM: an orthonormal basis in float mode, {P e_k} in exact
/// mode (the identities checked with it are multilinear).
template <FieldScalar T>
std::vector<Vec<T>> tangent_vectors(const HypersurfacePoint<T>& h) {
  if constexpr (is_exact_v<T>) {
    std::vector<Vec<T>> out;
    for (std::size_t k = 0; k < h.dim(); ++k) out.push_back(h.projector().column(k));
    return out;
  } else {
    return surface::tangent_basis(h);
  }
}

// ---------------------------------------------------------------------------
// model.*

template <FieldScalar T>
CheckReport conjugation_family(const CheckContext& ctx) {
  Recorder rec(ctx, "model.conjugation_family", "conjugation-family-axioms");
  const auto q = model::build_quadric_point<T>(ctx.m);
  std::vector<std::pair<T, T>> points;
  if constexpr (is_exact_v<T>) {
    const T h = half_sqrt2<T>();
    points = {{T(1), T(0)},
              {T(0), T(1)},
              {T(-1), T(0)},
              {T(0), T(-1)},
              {constant<T>(3, 5), constant<T>(4, 5)},
              {constant<T>(-4, 5), constant<T>(3, 5)},
              {h, h}};
  } else {
    Rng rng = rng_for(ctx, 1);
    std::uniform_real_distribution<double> dist(0.0, 2.0 * std::numbers::pi);
    for (int k = 0; k < 16; ++k) {
      const double th = k * std::numbers::pi / 8;
      points.emplace_back(std::cos(th), std::sin(th));
    }
    for (int k = 0; k < ctx.trials; ++k) {
      const double th = dist(rng);
      points.emplace_back(std::cos(th), std::sin(th));
    }
  }
  const auto id = Matrix<T>::identity(q.dim());
  for (const auto& [c, s] : points) {
    const auto a = model::conjugation_at(q, c, s);
    const std::string where = "theta=" + fmt(a.theta());
    const Matrix<T>& m = a.matrix();
    rec.record(Matrix<T>(m * m - id), where + " A^2-I");
    rec.record(Matrix<T>(m - m.transpose()), where + " A-A^T");
    rec.record(Matrix<T>(m * q.J() + q.J() * m), where + " AJ+JA");
    const auto r = rank(Matrix<T>(m - id), 1e-9);
    if (r != static_cast<std::size_t>(ctx.m)) {
      rec.fail(where + ": dim V(A) = " + std::to_string(q.dim() - r));
    }
  }
  rec.param("conjugations", std::to_string(points.size()));
  return rec.finish();
}

template <FieldScalar T>
Vec<T> random_field_vector(std::size_t d, Rng& rng) {
  if constexpr (is_exact_v<T>) {
    Vec<T> v(d);
    for (std::size_t i = 0; i < d; ++i) {
      v[i] = surface::random_entry<T>(rng) + surface::random_entry<T>(rng) * QSqrt2::sqrt2();
    }
    return v;
  } else {
    std::normal_distribution<double> g;
    Vec<double> v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = g(rng);
    return (1.0 / norm(v)) * v;
  }
}

template <FieldScalar T>
CheckReport curvature_symmetries(const CheckContext& ctx) {
  Recorder rec(ctx, "model.curvature_symmetries", "ambient-curvature-tensor");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 2);
  const int n = is_exact_v<T> ? 1 : ctx.trials;
  const auto a0 = model::conjugation_quarter_turn(q, 0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int k = 0; k < n; ++k) {
    Conjugation<T> a = a0;
    if constexpr (is_exact_v<T>) {
      a = model::conjugation_at(q, constant<T>(3, 5), constant<T>(4, 5));
    } else {
      a = model::conjugation_at(q, angle(rng));
    }
    const auto x = random_field_vector<T>(q.dim(), rng);
    const auto y = random_field_vector<T>(q.dim(), rng);
    const auto z = random_field_vector<T>(q.dim(), rng);
    const auto w = random_field_vector<T>(q.dim(), rng);
    auto R = [&](const Vec<T>& p, const Vec<T>& r, const Vec<T>& s) {
      return model::ambient_curvature(q, a, p, r, s);
    };
    const std::string where = "quadruple " + std::to_string(k);
    const T rxyzw = dot(R(x, y, z), w);
    rec.record_scalar(T(rxyzw + dot(R(y, x, z), w)), where + " antisymmetry");
    rec.record_scalar(T(rxyzw - dot(R(z, w, x), y)), where + " pair symmetry");
    rec.record_scalar(T(rxyzw + dot(R(x, y, w), z)), where + " skew in (Z,W)");
    rec.record(Vec<T>(R(x, y, z) + R(y, z, x) + R(z, x, y)), where + " first Bianchi");
    rec.record(Vec<T>(R(x, y, z) - model::ambient_curvature(q, a0, x, y, z)),
               where + " independence of the conjugation");
  }
  rec.param("trials", std::to_string(n));
  return rec.finish();
}

template <FieldScalar T>
CheckReport singular_decomposition(const CheckContext& ctx) {
  Recorder rec(ctx, "model.singular_decomposition", "singular-vector-decomposition");
  const auto q = model::build_quadric_point<T>(ctx.m);
  auto check_sample = [&](const NormalSample<T>& s, const T& expected_cos2t) {
    const auto sing = model::classify_singularity(q, s.n);
    if (sing.kind != s.kind) {
      rec.fail(s.label + ": classified " + model::to_string(sing.kind) + ", planted " +
               model::to_string(s.kind));
    }
    if constexpr (is_exact_v<T>) {
      rec.record_scalar(T(sing.cos2t_sq - expected_cos2t * expected_cos2t), s.label + " cos^2 2t");
    } else {
      rec.record_float(std::abs(sing.cos2t - expected_cos2t), s.label + " cos 2t");
    }
    // The adapted conjugation realizes cos 2t and kills g(A xi, N).
    const auto a = model::adapted_conjugation(q, s.n);
    const Vec<T> xi = -model::apply_J(s.n);
    rec.record_scalar(T(dot(a.apply(s.n), s.n) - expected_cos2t), s.label + " g(AN,N)");
    rec.record_scalar(dot(a.apply(xi), s.n), s.label + " g(A xi,N)");
  };
  for (const auto& s : reference_normals(q)) {
    check_sample(s, T(s.cos_t * s.cos_t - s.sin_t * s.sin_t));
  }
  if constexpr (!is_exact_v<T>) {
    Rng rng = rng_for(ctx, 3);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    const double pi = std::numbers::pi;
    for (double t : {0.0, pi / 16, pi / 8, 3 * pi / 16, pi / 4}) {
      for (int k = 0; k < ctx.trials; ++k) {
        const auto s = planted_sample(q, t, rng, "trial " + std::to_string(k));
        check_sample(s, std::cos(2 * t));
        // cos 2t does not depend on which member of the family is used.
        const auto other = model::conjugation_at(q, angle(rng));
        const Vec<double> an = other.apply(s.n);
        const double a = dot(an, s.n), b = dot(model::apply_J(an), s.n);
        rec.record_float(std::abs(std::hypot(a, b) - std::cos(2 * t)),
                         s.label + " family invariance");
      }
    }
    rec.param("trials", std::to_string(ctx.trials));
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport ambient_jacobi_forms(const CheckContext& ctx) {
  Recorder rec(ctx, "model.ambient_jacobi_closed_form", "ambient-normal-jacobi");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 4);
  for (const auto& s : normal_samples(q, ctx, rng)) {
    const auto brute = model::ambient_jacobi(q, s.a, s.n);
    const auto closed = model::ambient_jacobi_closed_form(q, s.a, s.n);
    rec.record(Matrix<T>(brute - closed), s.label + " brute force vs closed form");
    rec.record(Matrix<T>(brute - brute.transpose()), s.label + " symmetry");
    rec.record(Vec<T>(brute * s.n), s.label + " R_N N");
    const Vec<T> xi = -model::apply_J(s.n);
    if (s.kind == SingularKind::Principal) {
      rec.record(Vec<T>(brute * xi - T(2) * xi), s.label + " R_N xi = 2 xi");
    } else if (s.kind == SingularKind::Isotropic) {
      rec.record(Vec<T>(brute * xi - T(4) * xi), s.label + " R_N xi = 4 xi");
    }
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// surface.*

template <FieldScalar T>
CheckReport frame_formulas(const CheckContext& ctx) {
  Recorder rec(ctx, "surface.frame_formulas", "normal-frame-formulas");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 5);
  for (const auto& s : normal_samples(q, ctx, rng)) {
    const auto h = surface_from(q, s, Matrix<T>(q.dim(), q.dim()));
    const Vec<T> jz1 = model::apply_J(s.z1);
    const Vec<T> jz2 = model::apply_J(s.z2);
    rec.record(Vec<T>(h.reeb() - (s.sin_t * s.z2 - s.cos_t * jz1)), s.label + " xi");
    rec.record(Vec<T>(h.a_normal() - (s.cos_t * s.z1 - s.sin_t * jz2)), s.label + " AN");
    rec.record(Vec<T>(h.a_reeb() - (s.sin_t * s.z2 + s.cos_t * jz1)), s.label + " A xi");
    rec.record_scalar(dot(h.reeb(), h.a_normal()), s.label + " g(xi,AN)");
    rec.record_scalar(T(h.beta() + (s.cos_t * s.cos_t - s.sin_t * s.sin_t)),
                      s.label + " beta = -cos 2t");
    rec.record_scalar(T(h.beta() + dot(h.a_normal(), h.normal())), s.label + " beta = -g(AN,N)");
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport almost_contact(const CheckContext& ctx) {
  Recorder rec(ctx, "surface.almost_contact", "almost-contact-structure");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 6);
  for (const auto& s : normal_samples(q, ctx, rng)) {
    const auto h = surface_from(q, s, surface::random_hopf_shape(s.n, random_alpha<T>(rng), rng));
    const Matrix<T>& p = h.projector();
    const Matrix<T>& phi = h.phi();
    const Matrix<T> xixi = outer(h.reeb(), h.reeb());
    rec.record(Matrix<T>((q.J() - phi - outer(h.normal(), h.reeb())) * p),
               s.label + " JX = phi X + eta(X) N");
    rec.record(Vec<T>(phi * h.reeb()), s.label + " phi xi");
    rec.record_scalar(T(h.eta(h.reeb()) - T(1)), s.label + " eta(xi)");
    rec.record(Matrix<T>(phi * phi + p - xixi), s.label + " phi^2 = -I + eta(.) xi");
    rec.record(Matrix<T>(phi.transpose() * phi - (p - xixi)), s.label + " g(phi X, phi Y)");
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport tangential_conjugation(const CheckContext& ctx) {
  Recorder rec(ctx, "surface.tangential_conjugation", "tangential-conjugation-decomposition");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 7);
  for (const auto& s : normal_samples(q, ctx, rng)) {
    const auto h = surface_from(q, s, Matrix<T>(q.dim(), q.dim()));
    const Matrix<T>& p = h.projector();
    const Matrix<T>& b = h.b();
    rec.record(Matrix<T>((s.a.matrix() - b - outer(h.normal(), h.a_normal())) * p),
               s.label + " AX = BX + rho(X) N");
    rec.record(Matrix<T>((b * b - p - outer(h.phi_a_reeb(), h.a_normal())) * p),
               s.label + " B^2 Y = Y + g(AN,Y) phi A xi");
    rec.record(Matrix<T>(b - b.transpose()), s.label + " B symmetric");
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport gauss_equation(const CheckContext& ctx) {
  Recorder rec(ctx, "surface.gauss_equation", "gauss-equation");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 8);
  auto samples = normal_samples(q, ctx, rng);
  if constexpr (!is_exact_v<T>) {
    // The quadruple sweep is O((2m)^4); a handful of random normals suffice.
    if (samples.size() > 12) samples.erase(samples.begin() + 12, samples.end());
  }
  for (const auto& s : samples) {
    Matrix<T> pm = Matrix<T>::identity(q.dim());
    pm.add_outer(T(-1), s.n, s.n);
    const auto h = surface_from(q, s, Matrix<T>(pm * surface::random_symmetric<T>(q.dim(), rng) * pm));
    const auto v = tangent_vectors(h);
    const std::size_t k = v.size();
    // Tables for the termwise right-hand side.
    std::vector<std::vector<T>> g(k, std::vector<T>(k)), gj = g, ga = g, gja = g, gs = g;
    for (std::size_t i = 0; i < k; ++i) {
      const Vec<T> jv = model::apply_J(v[i]);
      const Vec<T> av = s.a.apply(v[i]);
      const Vec<T> jav = model::apply_J(av);
      const Vec<T> sv = h.apply_s(v[i]);
      for (std::size_t j = 0; j < k; ++j) {
        g[i][j] = dot(v[i], v[j]);
        gj[i][j] = dot(jv, v[j]);
        ga[i][j] = dot(av, v[j]);
        gja[i][j] = dot(jav, v[j]);
        gs[i][j] = dot(sv, v[j]);
      }
    }
    for (std::size_t x = 0; x < k; ++x) {
      for (std::size_t y = 0; y < k; ++y) {
        for (std::size_t z = 0; z < k; ++z) {
          const Vec<T> r = surface::induced_curvature(h, v[x], v[y], v[z]);
          for (std::size_t w = 0; w < k; ++w) {
            const T lhs = dot(r, v[w]) - gs[y][z] * gs[x][w] + gs[x][z] * gs[y][w];
            const T rhs = g[y][z] * g[x][w] - g[x][z] * g[y][w] + gj[y][z] * gj[x][w] -
                          gj[x][z] * gj[y][w] - T(2) * gj[x][y] * gj[z][w] +
                          ga[y][z] * ga[x][w] - ga[x][z] * ga[y][w] + gja[y][z] * gja[x][w] -
                          gja[x][z] * gja[y][w];
            rec.record_scalar(T(lhs - rhs), s.label + " (X,Y,Z,W)=(" + std::to_string(x) + "," +
                                                std::to_string(y) + "," + std::to_string(z) + "," +
                                                std::to_string(w) + ")");
          }
        }
      }
    }
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport normal_jacobi_routes(const CheckContext& ctx) {
  Recorder rec(ctx, "surface.normal_jacobi_routes", "normal-jacobi-on-hypersurface");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 9);
  auto samples = normal_samples(q, ctx, rng);
  if constexpr (!is_exact_v<T>) {
    for (auto kind : {SingularKind::Principal, SingularKind::Isotropic}) {
      CheckContext few = ctx;
      few.trials = std::max(1, ctx.trials / 10);
      for (auto& s : kind_samples(q, kind, few, rng)) {
        if (s.label.rfind("trial", 0) == 0) samples.push_back(std::move(s));
      }
    }
  }
  for (const auto& s : samples) {
    const auto h = surface_from(q, s, Matrix<T>(q.dim(), q.dim()));
    const auto formula = surface::normal_jacobi(h);
    rec.record(Matrix<T>(formula - surface::normal_jacobi_projected(h)),
               s.label + " formula vs projection");
    rec.record(Matrix<T>(formula - formula.transpose()), s.label + " symmetry");
    rec.record(Vec<T>(formula * h.normal()), s.label + " annihilates N");
    const Matrix<T>& p = h.projector();
    Matrix<T> expected = Matrix<T>::identity(q.dim());
    if (s.kind == SingularKind::Principal) {
      expected.add_outer(T(2), h.reeb(), h.reeb());
      expected += s.a.matrix();
      rec.record(Matrix<T>(formula - p * expected * p), s.label + " principal form");
    } else if (s.kind == SingularKind::Isotropic) {
      expected.add_outer(T(3), h.reeb(), h.reeb());
      expected.add_outer(T(-1), h.a_normal(), h.a_normal());
      expected.add_outer(T(-1), h.a_reeb(), h.a_reeb());
      rec.record(Matrix<T>(formula - p * expected * p), s.label + " isotropic form");
      rec.record(Vec<T>(formula * h.a_reeb()), s.label + " R_N A xi");
      rec.record(Vec<T>(formula * h.a_normal()), s.label + " R_N AN");
      rec.record(Vec<T>(formula * h.reeb() - T(4) * h.reeb()), s.label + " R_N xi = 4 xi");
    }
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport structure_jacobi_routes(const CheckContext& ctx) {
  Recorder rec(ctx, "surface.structure_jacobi_routes", "structure-jacobi-operator");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 10);
  for (const auto& s : normal_samples(q, ctx, rng)) {
    const T alpha = random_alpha<T>(rng);
    const auto h = surface_from(q, s, surface::random_hopf_shape(s.n, alpha, rng));
    const auto formula = surface::structure_jacobi(h);
    rec.record(Matrix<T>(formula - surface::structure_jacobi_gauss(h)),
               s.label + " formula vs Gauss");
    rec.record(Vec<T>(formula * h.reeb()), s.label + " R_xi xi");
    rec.record(Matrix<T>(formula - formula.transpose()), s.label + " symmetry");
    rec.record(Vec<T>(formula * h.normal()), s.label + " annihilates N");
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport rx_routes(const CheckContext& ctx) {
  Recorder rec(ctx, "surface.rx_routes", "jacobi-operator-RX");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 11);
  for (const auto& s : normal_samples(q, ctx, rng)) {
    const auto h = surface_from(q, s, surface::random_hopf_shape(s.n, random_alpha<T>(rng), rng));
    Vec<T> x = surface::random_contact_vector(s.n, rng);
    if constexpr (!is_exact_v<T>) x *= 1.0 / norm(x);
    const auto closed = surface::jacobi_rx(h, x);
    rec.record(Matrix<T>(closed - surface::jacobi_rx_gauss(h, x)), s.label + " closed vs Gauss");
    rec.record(Vec<T>(closed * x), s.label + " R_X X");
    rec.record(Matrix<T>(closed - closed.transpose()), s.label + " symmetry");
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// tube.*

template <FieldScalar T>
TypeBTube<T> tube_from(const CheckContext& ctx) {
  if (!ctx.tube) throw PreconditionError("tube check run without a tube parameter");
  T shift;
  if constexpr (is_exact_v<T>) {
    shift = T(ctx.lambda_shift, 0);
  } else {
    shift = ctx.lambda_shift.get_d();
  }
  return surface::build_type_B_tube<T>(*ctx.tube, shift);
}

template <FieldScalar T>
std::string basis_label(const TypeBTube<T>& tube, std::size_t k) {
  const std::size_t m1 = tube.t_lambda.size();
  if (k == 0) return "xi";
  if (k <= m1) return "e" + std::to_string(k + 1);
  return "Je" + std::to_string(k - m1 + 1);
}

enum class Block { Alpha, Lambda, Mu };

template <FieldScalar T>
Block block_of(const TypeBTube<T>& tube, std::size_t k) {
  if (k == 0) return Block::Alpha;
  return k <= tube.t_lambda.size() ? Block::Lambda : Block::Mu;
}

template <FieldScalar T>
CheckReport tube_principal_curvatures(const CheckContext& ctx) {
  Recorder rec(ctx, "tube.principal_curvatures", "tube-principal-curvatures");
  const auto tube = tube_from<T>(ctx);
  const auto& h = tube.point;
  const int m = ctx.m;
  const std::vector<surface::ExpectedEigenvalue<T>> table = {
      {tube.alpha, 1}, {tube.lambda, m - 1}, {tube.mu, m - 1}};
  const auto verdict = surface::verify_eigen_table(h, table);
  if (!verdict.matches) rec.fail("eigen table: " + verdict.message);
  for (const auto& v : tube.t_alpha) rec.record(Vec<T>(h.apply_s(v) - tube.alpha * v), "S xi");
  for (std::size_t i = 0; i < tube.t_lambda.size(); ++i) {
    const auto& v = tube.t_lambda[i];
    const std::string lbl = "e" + std::to_string(i + 2);
    rec.record(Vec<T>(h.apply_s(v) - tube.lambda * v), "S " + lbl);
    rec.record(Vec<T>(h.conjugation().apply(v) - v), lbl + " in V(A)");
    rec.record_scalar(h.eta(v), lbl + " in C");
  }
  for (std::size_t i = 0; i < tube.t_mu.size(); ++i) {
    const auto& v = tube.t_mu[i];
    const std::string lbl = "Je" + std::to_string(i + 2);
    rec.record(Vec<T>(h.apply_s(v) - tube.mu * v), "S " + lbl);
    rec.record(Vec<T>(h.conjugation().apply(v) + v), lbl + " in JV(A)");
    rec.record_scalar(h.eta(v), lbl + " in C");
  }
  const auto hopf = surface::is_hopf(h);
  if (!hopf.hopf) rec.fail("tube is not Hopf");
  rec.record_scalar(T(hopf.alpha - tube.alpha), "Reeb curvature");
  const auto sing = model::classify_singularity(h.quadric(), h.normal());
  if (sing.kind != SingularKind::Principal) rec.fail("normal is not principal");
  if constexpr (!is_exact_v<T>) {
    const auto es = surface::eigenstructure(h);
    std::vector<std::pair<double, int>> expected = {
        {tube.alpha, 1}, {tube.lambda, m - 1}, {tube.mu, m - 1}};
    std::sort(expected.begin(), expected.end());
    if (es.clusters.size() != expected.size()) {
      rec.fail("found " + std::to_string(es.clusters.size()) + " eigenvalue clusters, expected 3");
    } else {
      for (std::size_t i = 0; i < expected.size(); ++i) {
        rec.record_float(std::abs(es.clusters[i].value.as_float() - expected[i].first),
                         "eigenvalue cluster " + std::to_string(i));
        if (es.clusters[i].multiplicity != expected[i].second) {
          rec.fail("cluster " + std::to_string(i) + " has multiplicity " +
                   std::to_string(es.clusters[i].multiplicity));
        }
      }
    }
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport tube_contact(const CheckContext& ctx) {
  Recorder rec(ctx, "tube.contact", "tube-contact-identity");
  const auto tube = tube_from<T>(ctx);
  const auto& h = tube.point;
  const T delta = T(-1) / tube.alpha;
  const auto c = surface::is_contact(h);
  if (!c.contact) rec.fail("tube is not contact (residual " + c.residual.to_string() + ")");
  rec.record_scalar(T(c.c - delta), "contact scalar vs -1/alpha");
  Matrix<T> defect = h.shape() * h.phi() + h.phi() * h.shape();
  defect -= (T(2) * delta) * h.phi();
  rec.record(defect, "S phi + phi S - 2 delta phi");
  rec.param("delta", fmt(delta));
  return rec.finish();
}

template <FieldScalar T>
CheckReport tube_trace(const CheckContext& ctx) {
  Recorder rec(ctx, "tube.trace", "tube-mean-curvature-trace");
  const auto tube = tube_from<T>(ctx);
  const T tr = trace(tube.point.shape());
  const T m1 = T(ctx.m - 1);
  rec.record_scalar(T(tr - (tube.alpha - m1 * T(2) / tube.alpha)), "Tr S = alpha - (m-1)(2/alpha)");
  rec.record_scalar(T(tr - (tube.alpha + m1 * tube.lambda + m1 * tube.mu)),
                    "Tr S = alpha + (m-1) lambda");
  rec.param("trace", fmt(tr));
  return rec.finish();
}

template <FieldScalar T>
CheckReport tube_principal_algebra(const CheckContext& ctx) {
  Recorder rec(ctx, "tube.principal_algebra", "principal-normal-algebra");
  const auto tube = tube_from<T>(ctx);
  const auto& h = tube.point;
  const Matrix<T>& a = h.conjugation().matrix();
  const Matrix<T>& s = h.shape();
  const Matrix<T>& p = h.projector();
  const std::size_t d = h.dim();
  rec.record(Matrix<T>((h.phi() * a + a * h.phi()) * p), "phi A = -A phi");
  rec.record(Matrix<T>(a * s - s * a), "AS = SA");
  Matrix<T> rel = a * s - s;
  rel.add_outer(T(2) * tube.alpha, h.reeb(), h.reeb());
  rec.record(Matrix<T>(rel * p), "ASY = SY - 2 alpha eta(Y) xi");
  Matrix<T> pc = p;
  pc.add_outer(T(-1), h.reeb(), h.reeb());
  rec.record(Matrix<T>((tube.alpha * s + Matrix<T>::identity(d) + a) * pc),
             "alpha SX = -X - AX on C");
  return rec.finish();
}

template <FieldScalar T>
CheckReport tube_hopf_identity(const CheckContext& ctx) {
  Recorder rec(ctx, "tube.hopf_identity", "hopf-pointwise-identity");
  const auto tube = tube_from<T>(ctx);
  const auto& h = tube.point;
  const auto basis = tube.eigenbasis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Vec<T> vx = surface::hopf_identity_vector(h, basis[i]);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const std::string where = "(X,Y)=(" + basis_label(tube, i) + "," + basis_label(tube, j) + ")";
      const T form = surface::hopf_identity_form(h, basis[i], basis[j]);
      rec.record_scalar(form, where);
      rec.record_scalar(T(form - dot(vx, basis[j])), where + " form vs vector");
    }
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport tube_phi_partner(const CheckContext& ctx) {
  Recorder rec(ctx, "tube.phi_partner", "phi-partner-principal-curvature");
  const auto tube = tube_from<T>(ctx);
  const auto& h = tube.point;
  const T& al = tube.alpha;
  const T& la = tube.lambda;
  const T den = T(2) * la - al;
  if (near_zero(den, 1e-12)) {
    rec.fail("2 lambda = alpha: the partner value is undefined");
    return rec.finish();
  }
  const T partner = (al * la + T(2)) / den;
  rec.record_scalar(T(al * la + T(2)), "alpha lambda + 2");
  rec.record_scalar(T(partner - tube.mu), "partner value vs mu");
  for (std::size_t i = 0; i < tube.t_lambda.size(); ++i) {
    const Vec<T> px = h.apply_phi(tube.t_lambda[i]);
    rec.record(Vec<T>(h.apply_s(px) - partner * px), "S phi e" + std::to_string(i + 2));
  }
  rec.param("partner", fmt(partner));
  return rec.finish();
}

template <FieldScalar T>
CheckReport tube_diagonal_form(const CheckContext& ctx) {
  Recorder rec(ctx, "tube.diagonal_form", "shape-operator-diagonal-form");
  const auto tube = tube_from<T>(ctx);
  const auto e = Matrix<T>::from_columns(tube.eigenbasis());
  std::vector<T> diag{tube.alpha};
  for (int i = 1; i < ctx.m; ++i) diag.push_back(T(-2) / tube.alpha);
  for (int i = 1; i < ctx.m; ++i) diag.push_back(T(0));
  const Matrix<T> d = e.transpose() * tube.point.shape() * e;
  const Matrix<T> target = Matrix<T>::diagonal(diag);
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      rec.record_scalar(T(d(i, j) - target(i, j)),
                        "entry (" + basis_label(tube, i) + "," + basis_label(tube, j) + ")");
    }
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport tube_commuting_structure(const CheckContext& ctx) {
  Recorder rec(ctx, "tube.commuting_structure", "commuting-normal-structure-jacobi");
  const auto tube = tube_from<T>(ctx);
  const auto& h = tube.point;
  const auto rn = surface::normal_jacobi(h);
  const auto rxi = surface::structure_jacobi(h);
  rec.record_commutator(rn, rxi, "[R_N, R_xi]");
  rec.record(Matrix<T>(rxi - surface::structure_jacobi_gauss(h)), "R_xi formula vs Gauss");
  const auto basis = tube.eigenbasis();
  const T al = tube.alpha * tube.lambda;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Vec<T>& y = basis[k];
    const std::string lbl = basis_label(tube, k);
    switch (block_of(tube, k)) {
      case Block::Alpha:
        rec.record(Vec<T>(rn * y - T(2) * y), "R_N " + lbl);
        rec.record(Vec<T>(rxi * y), "R_xi " + lbl);
        break;
      case Block::Lambda:
        rec.record(Vec<T>(rn * y - T(2) * y), "R_N " + lbl);
        rec.record(Vec<T>(rxi * y - al * y), "R_xi " + lbl);
        break;
      case Block::Mu:
        rec.record(Vec<T>(rn * y), "R_N " + lbl);
        rec.record(Vec<T>(rxi * y - T(2) * y), "R_xi " + lbl);
        break;
    }
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport tube_commuting_rx(const CheckContext& ctx) {
  Recorder rec(ctx, "tube.commuting_rx", "commuting-normal-rx-jacobi");
  const auto tube = tube_from<T>(ctx);
  const auto& h = tube.point;
  const auto rn = surface::normal_jacobi(h);
  const auto basis = tube.eigenbasis();
  const T& al = tube.alpha;
  const T& la = tube.lambda;
  const T l2 = la * la + T(2);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Vec<T>& x = basis[i];
    const std::string xl = basis_label(tube, i);
    const Block bx = block_of(tube, i);
    const auto rx = bx == Block::Alpha ? surface::structure_jacobi(h) : surface::jacobi_rx(h, x);
    if (bx != Block::Alpha) {
      rec.record(Matrix<T>(rx - surface::jacobi_rx_gauss(h, x)), "X=" + xl + " closed vs Gauss");
    }
    rec.record_commutator(rn, rx, "[R_N, R_X] X=" + xl);
    const Vec<T> phix = h.apply_phi(x);
    const T gxx = dot(x, x);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Vec<T>& y = basis[j];
      const std::string where = "X=" + xl + ", Y=" + basis_label(tube, j);
      const Block by = block_of(tube, j);
      const T gxy = dot(x, y);
      const T gphixy = dot(phix, y);
      // Single operator tables for R_X, then the composed nine-case table.
      Vec<T> single(h.dim()), composed(h.dim());
      if (bx == Block::Alpha) {
        if (by == Block::Lambda) single = al * la * y;
        if (by == Block::Mu) single = T(2) * y;
        if (by == Block::Lambda) composed = T(2) * al * la * y;
      } else if (bx == Block::Lambda) {
        if (by == Block::Alpha) {
          single = al * la * gxx * y;
          composed = T(2) * al * la * gxx * y;
        } else if (by == Block::Lambda) {
          single = l2 * (gxx * y - gxy * x);
          composed = T(2) * l2 * (gxx * y - gxy * x);
        } else {
          single = T(2) * gphixy * phix;
        }
      } else {
        if (by == Block::Alpha) {
          single = T(2) * gxx * y;
          composed = T(4) * gxx * y;
        } else if (by == Block::Lambda) {
          single = T(2) * gphixy * phix;
          composed = T(4) * gphixy * phix;
        } else {
          single = T(2) * (gxx * y - gxy * x);
        }
      }
      const Vec<T> rxy = rx * y;
      rec.record(Vec<T>(rxy - single), where + " R_X Y");
      rec.record(Vec<T>(rn * rxy - composed), where + " R_N R_X Y");
      rec.record(Vec<T>(rx * (rn * y) - composed), where + " R_X R_N Y");
    }
  }
  rec.param("basis_vectors", std::to_string(basis.size()));
  return rec.finish();
}

// ---------------------------------------------------------------------------
// principal.*

template <FieldScalar T>
CheckReport principal_commuting(const CheckContext& ctx) {
  Recorder rec(ctx, "principal.commuting_forward", "principal-normal-commuting");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 12);
  const int per_normal = is_exact_v<T> ? 2 : 1;
  for (const auto& s : kind_samples(q, SingularKind::Principal, ctx, rng)) {
    for (int k = 0; k < per_normal; ++k) {
      const T alpha = random_alpha<T>(rng);
      const std::string lbl = s.label + " #" + std::to_string(k);
      const auto h =
          surface_from(q, s, surface::random_principal_shape(s.a, s.n, alpha, T(0), rng));
      const auto rn = surface::normal_jacobi(h);
      const auto rxi = surface::structure_jacobi(h);
      rec.record_commutator(rn, rxi, lbl + " [R_N, R_xi]");
      const Matrix<T>& p = h.projector();
      const Matrix<T>& a = s.a.matrix();
      Matrix<T> rn_expected = Matrix<T>::identity(q.dim()) + a;
      rn_expected.add_outer(T(2), h.reeb(), h.reeb());
      rec.record(Matrix<T>(rn - p * rn_expected * p), lbl + " R_N Y = Y + 2 eta(Y) xi + AY");
      Matrix<T> rxi_expected = Matrix<T>::identity(q.dim()) - a + alpha * h.shape();
      rxi_expected.add_outer(T(-2) - alpha * alpha, h.reeb(), h.reeb());
      rec.record(Matrix<T>(rxi - p * rxi_expected * p), lbl + " principal R_xi form");
      rec.record(Matrix<T>(a * h.shape() - h.shape() * a), lbl + " AS = SA");

      // Without AS = SA the commutator is exactly alpha [B, S].
      const auto hc = surface_from(
          q, s, surface::random_principal_shape(s.a, s.n, alpha, T(1), rng));
      const Matrix<T> lhs =
          commutator(surface::normal_jacobi(hc), surface::structure_jacobi(hc));
      rec.record(Matrix<T>(lhs - alpha * commutator(hc.b(), hc.shape())),
                 lbl + " [R_N, R_xi] = alpha [B, S]");
    }
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport principal_control(const CheckContext& ctx) {
  Recorder rec(ctx, "principal.noncommuting_control", "principal-normal-commuting", Bound::Above);
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 13);
  for (const auto& s : kind_samples(q, SingularKind::Principal, ctx, rng)) {
    T alpha = random_alpha<T>(rng);
    while (near_zero(alpha, 0.1)) alpha = random_alpha<T>(rng);
    const auto h = surface_from(q, s, surface::random_principal_shape(s.a, s.n, alpha, T(1), rng));
    rec.record_commutator(surface::normal_jacobi(h), surface::structure_jacobi(h),
                          s.label + " coupled S");
  }
  return rec.finish();
}

// ---------------------------------------------------------------------------
// isotropic.*

template <FieldScalar T>
Matrix<T> constrained_shape(const NormalSample<T>& s, const T& alpha, int flavor, Rng& rng) {
  if constexpr (!is_exact_v<T>) {
    if (flavor % 2 == 1) return surface::random_isotropic_paired_shape(s.a, s.n, alpha, rng);
  }
  return surface::random_isotropic_hopf_shape(s.a, s.n, alpha, rng);
}

template <FieldScalar T>
CheckReport isotropic_generator(const CheckContext& ctx) {
  Recorder rec(ctx, "isotropic.constrained_generator", "isotropic-hopf-constraints");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 14);
  int k = 0;
  for (const auto& s : kind_samples(q, SingularKind::Isotropic, ctx, rng)) {
    const T alpha = random_alpha<T>(rng);
    const int flavor = k++;
    const auto h = surface_from(q, s, constrained_shape(s, alpha, flavor, rng));
    const std::string lbl = s.label + (flavor % 2 && !is_exact_v<T> ? " paired" : " projected");
    rec.record(Vec<T>(h.apply_s(h.a_reeb())), lbl + " S A xi");
    rec.record(Vec<T>(h.apply_s(h.a_normal())), lbl + " S AN");
    rec.record(Vec<T>(h.apply_s(h.reeb()) - alpha * h.reeb()), lbl + " S xi = alpha xi");
    rec.record_scalar(h.beta(), lbl + " beta");
    if (flavor % 2 == 1 && !is_exact_v<T>) {
      // The paired construction is a full solution of the Hopf pointwise identity.
      for (const auto& x : tangent_vectors(h)) {
        rec.record(surface::hopf_identity_vector(h, x), lbl + " Hopf identity");
      }
    }
  }
  return rec.finish();
}

std::vector<double> probe_alphas(const CheckContext& ctx, std::vector<double> fallback) {
  return ctx.alphas.empty() ? fallback : ctx.alphas;
}

template <FieldScalar T>
CheckReport isotropic_vanishing(const CheckContext& ctx) {
  Recorder rec(ctx, "isotropic.vanishing_reeb", "isotropic-commuting-equivalence");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 15);
  int k = 0;
  const int per_normal = is_exact_v<T> ? 2 : 1;
  for (const auto& s : kind_samples(q, SingularKind::Isotropic, ctx, rng)) {
    for (int r = 0; r < per_normal; ++r) {
      const auto h = surface_from(q, s, constrained_shape(s, T(0), k++, rng));
      rec.record_commutator(surface::normal_jacobi(h), surface::structure_jacobi(h),
                            s.label + " alpha=0");
    }
  }
  rec.param("alpha", "0");
  return rec.finish();
}

CheckReport isotropic_nonvanishing(const CheckContext& ctx) {
  Recorder rec(ctx, "isotropic.nonvanishing_reeb", "isotropic-commuting-equivalence",
               Bound::Above);
  const auto q = model::build_quadric_point<double>(ctx.m);
  Rng rng = rng_for(ctx, 16);
  const auto alphas = probe_alphas(ctx, {1.0});
  for (double alpha : alphas) {
    int k = 0;
    for (const auto& s : kind_samples(q, SingularKind::Isotropic, ctx, rng)) {
      if (s.label.rfind("trial", 0) != 0) continue;
      const auto h = surface_from(q, s, constrained_shape(s, alpha, k++, rng));
      rec.record_commutator(surface::normal_jacobi(h), surface::structure_jacobi(h),
                            s.label + " alpha=" + fmt(alpha));
    }
  }
  std::string list;
  for (double a : alphas) list += (list.empty() ? "" : ",") + fmt(a);
  rec.param("alpha", list);
  rec.param("trials", std::to_string(ctx.trials));
  rec.note("expects every commutator above the threshold; with S A xi = S AN = 0 the "
           "commutator equals alpha (S P - P S) for P the projection onto span{A xi, AN}, "
           "which vanishes");
  return rec.finish();
}

template <FieldScalar T>
CheckReport isotropic_defect(const CheckContext& ctx) {
  Recorder rec(ctx, "isotropic.defect_closed_form", "isotropic-commuting-equivalence");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 17);
  int k = 0;
  for (const auto& s : kind_samples(q, SingularKind::Isotropic, ctx, rng)) {
    const T alpha = random_alpha<T>(rng);
    // Generic Hopf S, then one obeying the isotropic constraints.
    for (int variant = 0; variant < 2; ++variant) {
      const auto shape = variant == 0 ? surface::random_hopf_shape(s.n, alpha, rng)
                                      : constrained_shape(s, alpha, k++, rng);
      const auto h = surface_from(q, s, shape);
      const std::string lbl = s.label + (variant == 0 ? " generic" : " constrained");
      const auto rn = surface::normal_jacobi(h);
      const auto rxi = surface::structure_jacobi(h);
      Matrix<T> p2 = outer(h.a_reeb(), h.a_reeb());
      p2.add_outer(T(1), h.a_normal(), h.a_normal());
      const Matrix<T>& sh = h.shape();
      rec.record(Matrix<T>(commutator(rn, rxi) - alpha * (sh * p2 - p2 * sh)),
                 lbl + " defect = alpha (S P2 - P2 S)");
      const Matrix<T>& p = h.projector();
      Matrix<T> rxi_expected = Matrix<T>::identity(q.dim()) + alpha * sh;
      rxi_expected.add_outer(T(-1) - alpha * alpha, h.reeb(), h.reeb());
      rxi_expected.add_outer(T(-1), h.a_reeb(), h.a_reeb());
      rxi_expected.add_outer(T(-1), h.phi_a_reeb(), h.phi_a_reeb());
      rec.record(Matrix<T>(rxi - p * rxi_expected * p), lbl + " isotropic R_xi form");
    }
  }
  return rec.finish();
}

template <FieldScalar T>
CheckReport isotropic_forced(const CheckContext& ctx) {
  Recorder rec(ctx, "isotropic.forced_contradiction", "isotropic-commuting-equivalence",
               Bound::Above);
  rec.set_tolerance(ctx.tolerance);
  const auto q = model::build_quadric_point<T>(ctx.m);
  std::vector<T> alphas;
  if constexpr (is_exact_v<T>) {
    alphas = {T(1), T(2), constant<T>(-1, 3)};
  } else {
    for (double a : probe_alphas(ctx, {1.0, 2.0, -1.0 / 3})) alphas.push_back(a);
  }
  for (const auto& s : reference_normals(q)) {
    if (s.kind != SingularKind::Isotropic) continue;
    for (const T& alpha : alphas) {
      // SY = -6 alpha eta(Y) xi, the form the commuting condition would force.
      const Matrix<T> forced = outer(Vec<T>(T(-6) * alpha * (-model::apply_J(s.n))),
                                     Vec<T>(-model::apply_J(s.n)));
      const auto h = surface_from(q, s, forced);
      rec.record_scalar(T(h.alpha() - alpha), s.label + " alpha=" + fmt(alpha) +
                                                  " g(S xi, xi) - alpha");
    }
  }
  rec.note("passing means S xi = alpha xi is violated for every nonzero alpha");
  return rec.finish();
}

// ---------------------------------------------------------------------------
// regular.*

template <FieldScalar T>
CheckReport regular_reeb_slot(const CheckContext& ctx) {
  Recorder rec(ctx, "regular.reeb_slot_consequence", "reeb-slot-consequence");
  const auto q = model::build_quadric_point<T>(ctx.m);
  Rng rng = rng_for(ctx, 18);
  auto samples = kind_samples(q, SingularKind::Regular, ctx, rng);
  for (auto& s : reference_normals(q)) {
    if (s.kind == SingularKind::Isotropic) samples.push_back(std::move(s));  // beta = 0
  }
  int k = 0;
  for (const auto& s : samples) {
    const int variant = k++ % 3;
    // alpha = 1 for the first sample, then alternately random and zero.
    const T alpha = k == 1 ? T(1) : variant == 2 ? T(0) : random_alpha<T>(rng);
    const auto h = surface_from(q, s, surface::random_hopf_shape(s.n, alpha, rng));
    const auto rn = surface::normal_jacobi_projected(h);
    const auto rxi = surface::structure_jacobi_gauss(h);
    const T ab = alpha * h.beta();
    Vec<T> expected = ab * h.reeb() - h.apply_s(h.a_reeb());
    expected *= T(2) * ab;
    const std::string lbl = s.label + " alpha=" + fmt(alpha);
    rec.record(Vec<T>(rxi * (rn * h.reeb()) - expected), lbl + " R_xi R_N xi");
    rec.record(Vec<T>(commutator(rn, rxi) * h.reeb() + expected), lbl + " commutator on xi");
    rec.record(Vec<T>(rn * h.reeb() - T(4) * h.reeb() + T(2) * h.beta() * h.a_reeb()),
               lbl + " R_N xi = 4 xi - 2 beta A xi");
  }
  return rec.finish();
}

CheckReport forced_shape_value(const CheckContext& ctx) {
  Recorder rec(ctx, "regular.forced_shape_value", "regular-forced-shape-value");
  const auto q = model::build_quadric_point<double>(ctx.m);
  Rng rng = rng_for(ctx, 19);
  std::vector<std::pair<double, double>> cases;
  if (!ctx.alphas.empty()) {
    // alphas holds (alpha, beta) pairs flattened.
    for (std::size_t i = 0; i + 1 < ctx.alphas.size(); i += 2) {
      cases.emplace_back(ctx.alphas[i], ctx.alphas[i + 1]);
    }
  } else {
    cases = {{1.0, 0.5}, {2.0, -0.5}};
    std::uniform_real_distribution<double> beta_dist(-0.9, 0.9);
    for (int k = 0; k < ctx.trials; ++k) {
      double alpha = 0.0, beta = 0.0;
      while (std::abs(alpha) < 0.2) alpha = random_alpha<double>(rng);
      while (std::abs(beta) < 0.05) beta = beta_dist(rng);
      cases.emplace_back(alpha, beta);
    }
  }
  for (const auto& [alpha, beta] : cases) {
    const std::string lbl = "alpha=" + fmt(alpha) + " beta=" + fmt(beta);
    if (alpha == 0.0 || beta == 0.0 || std::abs(1.0 - beta * beta) < 1e-9) {
      rec.skip(lbl + ": needs alpha beta (1 - beta^2) != 0");
      continue;
    }
    // N = cos t e1 + sin t Je2 has g(A0 N, N) = cos 2t = -beta, and A0 is adapted.
    const double t = 0.5 * std::acos(-beta);
    Vec<double> n = std::cos(t) * q.e(0);
    n.axpy(std::sin(t), q.Je(1));
    const auto a = model::conjugation_quarter_turn(q, 0);
    const double sigma = -2.0 * beta * beta / alpha;
    const Rng snapshot = rng;
    Rng r0 = snapshot, r1 = snapshot;
    const auto h0 = surface::make_hypersurface_point(q, a, n, surface::forced_value_shape(a, n, alpha, 0.0, r0));
    const auto h1 = surface::make_hypersurface_point(q, a, n, surface::forced_value_shape(a, n, alpha, 1.0, r1));
    rng = r1;
    rec.record_float(std::abs(h0.beta() - beta), lbl + " beta of the constructed normal");
    rec.record(Vec<double>(h0.apply_s(h0.a_reeb()) - (alpha * beta) * h0.reeb()),
               lbl + " S A xi = alpha beta xi");
    // The identity at X = A xi is affine in the free value s on phi A xi.
    const Vec<double> v0 = surface::hopf_identity_vector(h0, h0.a_reeb());
    const Vec<double> dv = surface::hopf_identity_vector(h1, h1.a_reeb()) - v0;
    const double s_star = -dot(v0, dv) / dot(dv, dv);
    rec.record_float(std::abs(s_star - sigma), lbl + " forced value vs -2 beta^2/alpha");
    rec.record(Vec<double>(v0 + s_star * dv), lbl + " identity at the forced value");
    rec.param("sigma[" + lbl + "]", fmt(sigma));
  }
  if (cases.size() > 2) rec.param("trials", std::to_string(cases.size() - 2));
  return rec.finish();
}

#define QUADRIC_DUAL(fn) \
  [](const CheckContext& c) { return c.mode == Mode::Exact ? fn<QSqrt2>(c) : fn<double>(c); }

}  // namespace

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> checks = {
      {"model.conjugation_family", "conjugation-family-axioms", ParamKind::Seeded, true, true,
       QUADRIC_DUAL(conjugation_family)},
      {"model.curvature_symmetries", "ambient-curvature-tensor", ParamKind::Seeded, true, true,
       QUADRIC_DUAL(curvature_symmetries)},
      {"model.singular_decomposition", "singular-vector-decomposition", ParamKind::Seeded, true,
       true, QUADRIC_DUAL(singular_decomposition)},
      {"model.ambient_jacobi_closed_form", "ambient-normal-jacobi", ParamKind::Seeded, true, true,
       QUADRIC_DUAL(ambient_jacobi_forms)},
      {"surface.frame_formulas", "normal-frame-formulas", ParamKind::Seeded, true, true,
       QUADRIC_DUAL(frame_formulas)},
      {"surface.almost_contact", "almost-contact-structure", ParamKind::Seeded, true, true,
       QUADRIC_DUAL(almost_contact)},
      {"surface.tangential_conjugation", "tangential-conjugation-decomposition",
       ParamKind::Seeded, true, true, QUADRIC_DUAL(tangential_conjugation)},
      {"surface.gauss_equation", "gauss-equation", ParamKind::Seeded, true, true,
       QUADRIC_DUAL(gauss_equation)},
      {"surface.normal_jacobi_routes", "normal-jacobi-on-hypersurface", ParamKind::Seeded, true,
       true, QUADRIC_DUAL(normal_jacobi_routes)},
      {"surface.structure_jacobi_routes", "structure-jacobi-operator", ParamKind::Seeded, true,
       true, QUADRIC_DUAL(structure_jacobi_routes)},
      {"surface.rx_routes", "jacobi-operator-RX", ParamKind::Seeded, true, true,
       QUADRIC_DUAL(rx_routes)},
      {"tube.principal_curvatures", "tube-principal-curvatures", ParamKind::Tube, true, true,
       QUADRIC_DUAL(tube_principal_curvatures)},
      {"tube.contact", "tube-contact-identity", ParamKind::Tube, true, true,
       QUADRIC_DUAL(tube_contact)},
      {"tube.trace", "tube-mean-curvature-trace", ParamKind::Tube, true, true,
       QUADRIC_DUAL(tube_trace)},
      {"tube.principal_algebra", "principal-normal-algebra", ParamKind::Tube, true, true,
       QUADRIC_DUAL(tube_principal_algebra)},
      {"tube.hopf_identity", "hopf-pointwise-identity", ParamKind::Tube, true, true,
       QUADRIC_DUAL(tube_hopf_identity)},
      {"tube.phi_partner", "phi-partner-principal-curvature", ParamKind::Tube, true, true,
       QUADRIC_DUAL(tube_phi_partner)},
      {"tube.diagonal_form", "shape-operator-diagonal-form", ParamKind::Tube, true, true,
       QUADRIC_DUAL(tube_diagonal_form)},
      {"tube.commuting_structure", "commuting-normal-structure-jacobi", ParamKind::Tube, true,
       true, QUADRIC_DUAL(tube_commuting_structure)},
      {"tube.commuting_rx", "commuting-normal-rx-jacobi", ParamKind::Tube, true, true,
       QUADRIC_DUAL(tube_commuting_rx)},
      {"principal.commuting_forward", "principal-normal-commuting", ParamKind::Seeded, true, true,
       QUADRIC_DUAL(principal_commuting)},
      {"principal.noncommuting_control", "principal-normal-commuting", ParamKind::Seeded, true,
       true, QUADRIC_DUAL(principal_control)},
      {"isotropic.constrained_generator", "isotropic-hopf-constraints", ParamKind::Seeded, true, true,
       QUADRIC_DUAL(isotropic_generator)},
      {"isotropic.vanishing_reeb", "isotropic-commuting-equivalence", ParamKind::Seeded, true,
       true, QUADRIC_DUAL(isotropic_vanishing)},
      {"isotropic.nonvanishing_reeb", "isotropic-commuting-equivalence", ParamKind::Seeded, false,
       true, isotropic_nonvanishing},
      {"isotropic.defect_closed_form", "isotropic-commuting-equivalence", ParamKind::Seeded, true,
       true, QUADRIC_DUAL(isotropic_defect)},
      {"isotropic.forced_contradiction", "isotropic-commuting-equivalence", ParamKind::Seeded,
       true, true, QUADRIC_DUAL(isotropic_forced)},
      {"regular.reeb_slot_consequence", "reeb-slot-consequence", ParamKind::Seeded, true, true,
       QUADRIC_DUAL(regular_reeb_slot)},
      {"regular.forced_shape_value", "regular-forced-shape-value", ParamKind::Seeded, false, true,
       forced_shape_value},
  };
  return checks;
}

const std::vector<std::string>& required_anchors() {
  static const std::vector<std::string> anchors = {
      "conjugation-family-axioms",
      "ambient-curvature-tensor",
      "singular-vector-decomposition",
      "ambient-normal-jacobi",
      "normal-frame-formulas",
      "almost-contact-structure",
      "tangential-conjugation-decomposition",
      "gauss-equation",
      "normal-jacobi-on-hypersurface",
      "structure-jacobi-operator",
      "jacobi-operator-RX",
      "tube-principal-curvatures",
      "tube-contact-identity",
      "tube-mean-curvature-trace",
      "principal-normal-algebra",
      "hopf-pointwise-identity",
      "phi-partner-principal-curvature",
      "shape-operator-diagonal-form",
      "commuting-normal-structure-jacobi",
      "commuting-normal-rx-jacobi",
      "principal-normal-commuting",
      "isotropic-hopf-constraints",
      "isotropic-commuting-equivalence",
      "reeb-slot-consequence",
      "regular-forced-shape-value",
  };
  return anchors;
}

}  // namespace quadric::verify
