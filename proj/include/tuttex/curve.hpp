#pragma once
// Restriction of the Tutte polynomial to a hyperbola (x-1)(y-1) = alpha.
//
// Given the ability to evaluate T(.; a, b) at one fixed point of H_alpha,
// tensoring with small pointed gadgets moves the evaluation point along the
// hyperbola.  Sampling enough distinct points pins down the univariate
// restriction T_alpha(G; t) = T(G; alpha/t + 1, t + 1) by interpolation.

#include <tuttex/decomposition.hpp>
#include <tuttex/errors.hpp>
#include <tuttex/forest_dp.hpp>
#include <tuttex/general_dp.hpp>
#include <tuttex/graph.hpp>
#include <tuttex/polynomial.hpp>
#include <tuttex/rational.hpp>
#include <tuttex/special_curves.hpp>
#include <tuttex/transforms.hpp>

#include <functional>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tuttex {

// evaluates T(H; a, b) for arbitrary instances at one fixed point (a, b)
struct PointEvaluator {
  Rational a, b;
  std::function<Rational(const Multigraph&, const DecompositionSet&)> eval;
};

inline PointEvaluator general_point_evaluator(const Rational& a, const Rational& b) {
  return {a, b, [a, b](const Multigraph& h, const DecompositionSet& ds) {
            return tutte_from_counts(general_dp(h, make_nice(ds.tree, h)), h, a, b);
          }};
}

inline PointEvaluator h2_point_evaluator(const Rational& a, const Rational& b) {
  if ((a - 1) * (b - 1) != 2)
    throw std::invalid_argument("h2_point_evaluator needs (a-1)(b-1) = 2");
  return {a, b, [a, b](const Multigraph& h, const DecompositionSet& ds) {
            return tutte_on_h2(h, make_nice(ds.tree, h), a, b);
          }};
}

// chromatic-counting evaluator at (1-q, 0); for q >= 3 the first coordinate
// has |1-q| >= 2, so the stretch driver reaches the whole hyperbola
inline PointEvaluator coloring_point_evaluator(int q) {
  if (q < 3) throw std::invalid_argument("coloring_point_evaluator needs q >= 3");
  return {Rational(1 - q), Rational(0),
          [q](const Multigraph& h, const DecompositionSet& ds) {
            return tutte_chromatic_point(h, make_nice(ds.tree, h), q);
          }};
}

// Unique polynomial t^{|V|} * T_alpha(G; t).  The factor t^{|V|} clears the
// Laurent tail: T_alpha has t-exponents >= -(|V| - k(E)).
inline Polynomial curve_restriction(const Multigraph& g, const DecompositionSet& ds,
                                    const Rational& alpha, const PointEvaluator& ev) {
  if ((ev.a - 1) * (ev.b - 1) != alpha)
    throw std::invalid_argument("evaluator point is off the target hyperbola");
  if (alpha == 1)
    throw inapplicable_error("every tensor step degenerates on the hyperbola (x-1)(y-1) = 1");
  if (ev.b == 1)
    throw inapplicable_error("an evaluator pinned to y = 1 sees a single curve point");

  if (ev.a == 0) {
    // move off the x = 0 axis with one 2-thickening, then recurse: the image
    // point is (b/(1+b), b^2), whose first coordinate avoids {0, 1}
    if (ev.b == -1) throw inapplicable_error("no tensor step escapes the point (0, -1)");
    PointedGraph gad = thicken_gadget(2);
    PointedFactors fac = brylawski_factors(gad.graph, gad.special_edge, ev.a, ev.b);
    PointEvaluator moved{fac.x_image, fac.y_image,
                         [outer = ev, fac](const Multigraph& h,
                                           const DecompositionSet& hds) -> Rational {
                           TransformResult tr = k_thicken(h, hds, 2);
                           Rational raw = outer.eval(tr.graph, {tr.tree, tr.path, tr.cut});
                           return raw / fac.prefactor(h);
                         }};
    return curve_restriction(g, ds, alpha, moved);
  }

  // a = -1 stalls the stretch driver (its images alternate between two
  // points); the insulated k-thickening moves (-1, b) to (1 - 2/geo, b^k),
  // which needs |b| outside {0, 1} for distinct samples
  const bool insulated = ev.a == -1;
  if (insulated && (ev.b == 0 || ev.b == -1))
    throw inapplicable_error("the insulated driver needs |b| outside {0, 1}");

  const int n = g.vertex_count();
  // t^{|V|} * T_alpha has degree at most |E| + k(E); one spare sample checks the fit
  const int fit_count = g.edge_count() + g.component_count() + 1;
  const int k_limit = 4 * fit_count + 64;
  std::vector<std::pair<Rational, Rational>> pts;
  std::set<Rational> seen;
  for (int k = 1; static_cast<int>(pts.size()) <= fit_count && k <= k_limit; ++k) {
    PointedGraph gad = insulated ? insulated_gadget(k) : stretch_gadget(k);
    PointedFactors fac;
    try {
      fac = brylawski_factors(gad.graph, gad.special_edge, ev.a, ev.b);
    } catch (const inapplicable_error&) {
      continue;  // this k degenerates; later k still give fresh points
    }
    Rational t = fac.y_image - 1;
    if (sgn(t) == 0 || !seen.insert(t).second) continue;
    if ((fac.x_image - 1) * t != alpha)
      throw std::logic_error("tensor image left the hyperbola");
    TransformResult tr = insulated ? insulated_k_thicken(g, ds, k) : k_stretch(g, ds, k);
    Rational value = ev.eval(tr.graph, {tr.tree, tr.path, tr.cut}) / fac.prefactor(g);
    pts.emplace_back(t, rational_pow(t, n) * value);
  }
  if (static_cast<int>(pts.size()) <= fit_count)
    throw inapplicable_error("could not reach enough distinct points on the hyperbola");

  auto probe = pts.back();
  pts.pop_back();
  Polynomial p = interpolate(pts);
  if (!p.is_zero() && p.low_degree() < 0)
    throw std::logic_error("curve restriction kept a negative-degree term");
  if (p.evaluate(probe.first) != probe.second)
    throw std::logic_error("curve restriction failed its spare-sample check");
  return p;
}

enum class EvalRoute { h1_closed_form, forest_curve, even_subgraph, coloring_curve, general };

inline const char* route_name(EvalRoute r) {
  switch (r) {
    case EvalRoute::h1_closed_form: return "closed-form";
    case EvalRoute::forest_curve: return "forest";
    case EvalRoute::even_subgraph: return "ising";
    case EvalRoute::coloring_curve: return "coloring";
    case EvalRoute::general: return "general";
  }
  return "general";
}

// Evaluate T(G; x, y) by the cheapest applicable route.  Never fails: routes
// that run out of resources fall back to the general DP.
inline Rational evaluate_point(const Multigraph& g, const DecompositionSet& ds, const Rational& x,
                               const Rational& y, EvalRoute* route_out = nullptr) {
  auto done = [&](EvalRoute r, const Rational& v) {
    if (route_out) *route_out = r;
    return v;
  };
  const Rational alpha = (x - 1) * (y - 1);
  const int n = g.vertex_count(), m = g.edge_count(), ke = g.component_count();

  if (alpha == 1) {
    // on H_1 every edge subset contributes (y-1)^{k(E)+|A|-n}, so the sum
    // telescopes to y^{|E|} (y-1)^{k(E)-|V|}; y = 1 cannot occur here
    return done(EvalRoute::h1_closed_form,
                rational_pow(y, m) * rational_pow(y - 1, ke - n));
  }
  if (y == 1) {
    auto nd = make_nice(ds.tree, g);
    if (x == 1) return done(EvalRoute::forest_curve, curve_y1_restriction(g, nd).evaluate(1));
    // T(x, 1) = (x-1)^{rank} * F(1/(x-1)) with F the forest generating function
    Rational u = x - 1;
    return done(EvalRoute::forest_curve, rational_pow(u, n - ke) * count_forests(g, nd, 1 / u));
  }
  if (alpha == 2 && y != -1)
    return done(EvalRoute::even_subgraph, tutte_on_h2(g, make_nice(ds.tree, g), x, y));
  if (alpha > 2 && alpha < (1 << 20) && alpha.get_den() == 1) {
    // integer alpha = q >= 3: recover the whole curve from the chromatic DP
    try {
      int q = static_cast<int>(alpha.get_num().get_si());
      Polynomial p = curve_restriction(g, ds, alpha, coloring_point_evaluator(q));
      Rational t = y - 1;
      return done(EvalRoute::coloring_curve, p.evaluate(t) / rational_pow(t, n));
    } catch (const resource_error&) {
      // chromatic tables too large for this q; the general DP still applies
    } catch (const inapplicable_error&) {
    }
  }
  return done(EvalRoute::general,
              tutte_from_counts(general_dp(g, make_nice(ds.tree, g)), g, x, y));
}

}  // namespace tuttex
