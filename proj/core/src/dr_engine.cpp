// Copyright 2026 The OrbiDR Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orbidr/dr_engine.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <future>
#include <mutex>
#include <optional>
#include <set>
#include <thread>

#include "orbidr/bernoulli.hpp"
#include "orbidr/stable_graph.hpp"

namespace orbidr {

namespace {

long env_long(const char* name, long fallback) {
  const char* s = std::getenv(name);
  if (!s || !*s) return fallback;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  return (end && *end == '\0' && v > 0) ? v : fallback;
}

long max_threads() { return env_long("ORBIDR_THREADS", static_cast<long>(std::max(1u, std::thread::hardware_concurrency()))); }

long ceil_abs(const Rational& a) {
  Rational x = a.abs();
  mpz_class c = -((-x).floor());
  return c.get_si();
}

Rational sign_pow(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

}  // namespace

void TopData::validate() const {
  if (rep.m < 1) throw Error("TopData: m must be >= 1");
  const int nn = n();
  if (static_cast<int>(lifts.size()) != nn) throw Error("TopData: lifts/sectors size mismatch");
  if (2 * g - 2 + nn <= 0) throw Unstable("TopData: 2g-2+n must be positive");
  for (int i = 0; i < nn; ++i) {
    const Sector& s = leg_sectors[static_cast<size_t>(i)];
    if (s.g < 0 || s.g >= rep.m) throw Error("TopData: sector out of range");
    if (!admissible(rep, s, lifts[static_cast<size_t>(i)]))
      throw NotAdmissible("TopData: lift " + lifts[static_cast<size_t>(i)].str() +
                          " not admissible for sector " + std::to_string(s.g));
  }
}

long working_bound(const TopData& data) {
  long factor = env_long("ORBIDR_RBOUND_FACTOR", 4);
  long amax = 0;
  for (const auto& a : data.lifts) amax = std::max(amax, ceil_abs(a));
  return factor * (amax + data.rep.m) * (2l * data.g + 1);
}

std::vector<long> default_r_samples(const TopData& data, int d, int surplus) {
  long base = working_bound(data);
  std::vector<long> out;
  for (int i = 1; i <= 2 * d + 1 + surplus; ++i) out.push_back(base + i);
  return out;
}

TautClass RPolyClass::constant_term_class() const {
  TautClass out(g, n, m);
  for (const auto& [key, tp] : terms) out.add_term(tp.first, constant_term(tp.second));
  return out;
}

namespace {

// Edge factor of the fixed-r graph sum for one edge at one weight value:
// edge_series with exponent coefficients
//   a_k = (-1)^{k-1} (k-1)!/(k+1)! B_{k+1}((w(h+) + age(chi(h+)))/r).
LocalSeries fixed_r_edge_factor(const StableGraph& graph, int e, const Rational& arg, int rem,
                                long r) {
  std::vector<Rational> a(static_cast<size_t>(rem) + 2, Rational(0));
  for (int k = 1; k <= rem + 1; ++k)
    a[static_cast<size_t>(k)] = sign_pow(k - 1) * factorial(k - 1) / factorial(k + 1) *
                                bernoulli_at(k + 1, arg / Rational(r));
  auto M = edge_series(a, rem);
  const int n = graph.num_legs();
  LocalSeries out;
  for (int i = 0; i <= rem; ++i)
    for (int j = 0; i + j <= rem; ++j) {
      const Rational& c = M[static_cast<size_t>(i)][static_cast<size_t>(j)];
      if (c.is_zero()) continue;
      LocalMono m;
      m.psi.assign(static_cast<size_t>(graph.num_half_edges()), 0);
      m.kappa.assign(static_cast<size_t>(graph.num_vertices()), {});
      m.psi[static_cast<size_t>(n + 2 * e)] = i;
      m.psi[static_cast<size_t>(n + 2 * e + 1)] = j;
      out.emplace(std::move(m), c);
    }
  return out;
}

}  // namespace

TautClass class_at_r(const TopData& data, int d, long r) {
  data.validate();
  const int g = data.g, n = data.n(), m = data.rep.m;
  if (d < 0 || d > 3 * g - 3 + n)
    throw DegreeOutOfRange("class_at_r: degree must lie in [0, 3g-3+n]");
  if (r < 1) throw Error("class_at_r: r must be >= 1");

  TautClass result(g, n, m);
  for (const StableGraph& graph : enumerate_graphs(g, n)) {
    const int ne = graph.num_edges();
    if (ne > d) continue;
    const int nh = graph.num_half_edges();
    const int nv = graph.num_vertices();
    const int rem = d - ne;
    const Rational pref = pow_rational(Rational(r), 2l * d - graph.h1());
    const Rational aut(automorphism_order(graph));

    for (const Decoration& dec : enumerate_decorations(graph, data.rep, data.leg_sectors)) {
      if (weight_count(graph, dec, data.rep, data.lifts, r) == 0) continue;

      // Weight-independent part: leg and vertex exponentials.
      LocalSeries base = local_one(nh, nv);
      for (int i = 0; i < n; ++i) {
        Rational arg = rational_mod(data.lifts[static_cast<size_t>(i)], r) / Rational(r);
        LocalSeries gen;
        for (int dp = 1; dp <= rem; ++dp) {
          Rational c = sign_pow(dp - 1) * factorial(dp - 1) / factorial(dp + 1) *
                       bernoulli_at(dp + 1, arg);
          if (c.is_zero()) continue;
          LocalMono mo;
          mo.psi.assign(static_cast<size_t>(nh), 0);
          mo.kappa.assign(static_cast<size_t>(nv), {});
          mo.psi[static_cast<size_t>(i)] = dp;
          gen.emplace(std::move(mo), c);
        }
        base = local_mul(base, exp_truncated(gen, rem, nh, nv), rem);
      }
      for (int v = 0; v < nv; ++v) {
        LocalSeries gen;
        for (int dp = 1; dp <= rem; ++dp) {
          Rational c = sign_pow(dp) * factorial(dp - 1) * bernoulli_number(dp + 1) /
                       factorial(dp + 1);
          if (c.is_zero()) continue;
          LocalMono mo;
          mo.psi.assign(static_cast<size_t>(nh), 0);
          mo.kappa.assign(static_cast<size_t>(nv), {});
          mo.kappa[static_cast<size_t>(v)] = {dp};
          gen.emplace(std::move(mo), c);
        }
        if (!gen.empty()) base = local_mul(base, exp_truncated(gen, rem, nh, nv), rem);
      }

      // Edge factors depend on w(h+) only; cache per value.
      std::vector<std::vector<std::optional<LocalSeries>>> cache(
          static_cast<size_t>(ne),
          std::vector<std::optional<LocalSeries>>(static_cast<size_t>(r)));
      std::vector<Rational> edge_age(static_cast<size_t>(ne));
      for (int e = 0; e < ne; ++e)
        edge_age[static_cast<size_t>(e)] =
            age(data.rep, Sector(dec.chi[static_cast<size_t>(n + 2 * e)]));

      std::map<LocalMono, Rational> acc;
      for (const WeightFunction& wf : enumerate_weights(graph, dec, data.rep, data.lifts, r)) {
        LocalSeries s = base;
        for (int e = 0; e < ne; ++e) {
          long wp = wf.w[static_cast<size_t>(n + 2 * e)];
          auto& slot = cache[static_cast<size_t>(e)][static_cast<size_t>(wp)];
          if (!slot)
            slot = fixed_r_edge_factor(graph, e, Rational(wp) + edge_age[static_cast<size_t>(e)],
                                       rem, r);
          s = local_mul(s, *slot, rem);
        }
        for (const auto& [mo, c] : s) {
          auto [it, inserted] = acc.emplace(mo, c);
          if (!inserted) it->second += c;
        }
      }
      for (const auto& [mo, c] : acc) {
        if (c.is_zero()) continue;
        GraphTerm t{graph, dec.chi, mo.psi, mo.kappa};
        result.add_term(t, c * pref / aut);
      }
    }
  }
  return result;
}

RPolyClass polynomial_class(const TopData& data, int d, const std::vector<long>& r_samples) {
  data.validate();
  const long bound = working_bound(data);
  if (static_cast<int>(r_samples.size()) < 2 * d + 3)
    throw Error("polynomial_class: need at least 2d+3 samples");
  for (long r : r_samples)
    if (r <= bound)
      throw NotPolynomial("polynomial_class: sample r=" + std::to_string(r) +
                          " is not above the working bound " + std::to_string(bound) +
                          "; raise the sampled range");

  // One evaluation per sample; independent, so run them on a small pool with
  // a deterministic indexed reduction.
  const size_t ns = r_samples.size();
  std::vector<std::optional<TautClass>> classes(ns);
  {
    std::atomic<size_t> next{0};
    std::mutex store_mutex;
    auto worker = [&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= ns) return;
        TautClass c = class_at_r(data, d, r_samples[i]);
        std::lock_guard<std::mutex> lock(store_mutex);
        classes[i] = std::move(c);
      }
    };
    size_t nthreads = std::min<size_t>(static_cast<size_t>(max_threads()), ns);
    std::vector<std::future<void>> futs;
    for (size_t t = 1; t < nthreads; ++t)
      futs.push_back(std::async(std::launch::async, worker));
    worker();
    for (auto& f : futs) f.get();
  }

  std::set<std::string> keys;
  for (const auto& c : classes)
    for (const auto& [key, tc] : c->terms()) keys.insert(key);

  bool integral_regime = data.rep.m == 1 && d <= data.g;
  for (const auto& a : data.lifts)
    if (!a.is_integer()) integral_regime = false;

  RPolyClass out;
  out.g = data.g;
  out.n = data.n();
  out.m = data.rep.m;
  for (const std::string& key : keys) {
    std::vector<std::pair<long, Rational>> pts;
    const GraphTerm* sample_term = nullptr;
    for (size_t i = 0; i < ns; ++i) {
      auto it = classes[i]->terms().find(key);
      if (it != classes[i]->terms().end()) {
        pts.emplace_back(r_samples[i], it->second.second);
        sample_term = &it->second.first;
      } else {
        pts.emplace_back(r_samples[i], Rational(0));
      }
    }
    UniPoly poly = lagrange_interpolate(pts, 2 * d);
    if (poly.is_zero()) continue;
    if (integral_regime && poly.degree() > 2 * data.g)
      throw Error("polynomial_class: degree " + std::to_string(poly.degree()) +
                  " exceeds the 2g bound in the smooth integral regime");
    out.terms.emplace(key, std::make_pair(*sample_term, std::move(poly)));
  }
  return out;
}

TautClass leading_term_class(const TopData& data, int d) {
  data.validate();
  const int g = data.g, n = data.n(), m = data.rep.m;
  if (d < 0 || d > 3 * g - 3 + n)
    throw DegreeOutOfRange("leading_term_class: degree must lie in [0, 3g-3+n]");
  const long bound = working_bound(data);
  const int nsamples = 2 * d + 3;

  TautClass result(g, n, m);
  for (const StableGraph& graph : enumerate_graphs(g, n)) {
    const int ne = graph.num_edges();
    if (ne > d) continue;
    const int nh = graph.num_half_edges();
    const int nv = graph.num_vertices();
    const int rem = d - ne;
    const Rational aut(automorphism_order(graph));

    for (const Decoration& dec : enumerate_decorations(graph, data.rep, data.leg_sectors)) {
      // Leg factors exp(a_i^2/2 psi_i); no vertex or kappa factors here.
      LocalSeries base = local_one(nh, nv);
      for (int i = 0; i < n; ++i) {
        const Rational& a = data.lifts[static_cast<size_t>(i)];
        if (a.is_zero()) continue;
        LocalMono mo;
        mo.psi.assign(static_cast<size_t>(nh), 0);
        mo.kappa.assign(static_cast<size_t>(nv), {});
        mo.psi[static_cast<size_t>(i)] = 1;
        LocalSeries gen{{mo, a * a / Rational(2)}};
        base = local_mul(base, exp_truncated(gen, rem, nh, nv), rem);
      }

      // Edge factors carry a formal variable x_e (one per edge):
      //   sum_{j>=1} -(-1/2)^j/j! x_e^j (psi+ + psi-)^{j-1}.
      using XKey = std::pair<LocalMono, std::vector<int>>;
      std::map<XKey, Rational> series;
      for (const auto& [mo, c] : base)
        series.emplace(XKey{mo, std::vector<int>(static_cast<size_t>(ne), 0)}, c);
      for (int e = 0; e < ne; ++e) {
        std::map<XKey, Rational> factor;
        for (int j = 1; j <= rem + 1; ++j) {
          Rational cj = -sign_pow(j) * pow_rational(Rational(1, 2), j) / factorial(j);
          for (int alpha = 0; alpha <= j - 1; ++alpha) {
            LocalMono mo;
            mo.psi.assign(static_cast<size_t>(nh), 0);
            mo.kappa.assign(static_cast<size_t>(nv), {});
            mo.psi[static_cast<size_t>(n + 2 * e)] = alpha;
            mo.psi[static_cast<size_t>(n + 2 * e + 1)] = j - 1 - alpha;
            std::vector<int> p(static_cast<size_t>(ne), 0);
            p[static_cast<size_t>(e)] = j;
            factor.emplace(XKey{std::move(mo), std::move(p)}, cj * binomial(j - 1, alpha));
          }
        }
        std::map<XKey, Rational> next;
        for (const auto& [ka, ca] : series)
          for (const auto& [kf, cf] : factor) {
            LocalMono mo = ka.first;
            for (size_t i = 0; i < mo.psi.size(); ++i) mo.psi[i] += kf.first.psi[i];
            if (mo.degree() > rem) continue;
            std::vector<int> p = ka.second;
            for (size_t i = 0; i < p.size(); ++i) p[i] += kf.second[i];
            XKey key{std::move(mo), std::move(p)};
            auto [it, inserted] = next.emplace(std::move(key), ca * cf);
            if (!inserted) it->second += ca * cf;
          }
        series = std::move(next);
      }

      // Per-weight x_e values at each sampled r, shared across patterns.
      std::vector<long> rs;
      for (int i = 1; i <= nsamples; ++i) rs.push_back(bound + i);
      std::vector<std::vector<std::vector<Rational>>> xvals(rs.size());
      bool any_weights = false;
      for (size_t si = 0; si < rs.size(); ++si) {
        long r = rs[si];
        for (const WeightFunction& wf :
             enumerate_weights(graph, dec, data.rep, data.lifts, r)) {
          any_weights = true;
          std::vector<Rational> xs;
          for (int e = 0; e < ne; ++e) {
            Rational age_p = age(data.rep, Sector(dec.chi[static_cast<size_t>(n + 2 * e)]));
            Rational age_m = age(data.rep, Sector(dec.chi[static_cast<size_t>(n + 2 * e + 1)]));
            xs.push_back((Rational(wf.w[static_cast<size_t>(n + 2 * e)]) + age_p) *
                         (Rational(wf.w[static_cast<size_t>(n + 2 * e + 1)]) + age_m));
          }
          xvals[si].push_back(std::move(xs));
        }
      }
      if (!any_weights) continue;

      // Only the degree-2d part of the formula is the constant term of the
      // degree-d bracket; lower-degree monomials belong to lower brackets.
      std::map<std::vector<int>, Rational> pattern_const;
      for (const auto& [key, c] : series) {
        if (key.first.degree() != rem) continue;
        const std::vector<int>& p = key.second;
        auto pit = pattern_const.find(p);
        if (pit == pattern_const.end()) {
          int psum = 0;
          for (int pe : p) psum += pe;
          std::vector<std::pair<long, Rational>> pts;
          for (size_t si = 0; si < rs.size(); ++si) {
            Rational s(0);
            for (const auto& xs : xvals[si]) {
              Rational prod(1);
              for (int e = 0; e < ne; ++e)
                prod *= pow_rational(xs[static_cast<size_t>(e)], p[static_cast<size_t>(e)]);
              s += prod;
            }
            pts.emplace_back(rs[si], s * pow_rational(Rational(rs[si]), -graph.h1()));
          }
          UniPoly poly = lagrange_interpolate(pts, 2 * psum);
          pit = pattern_const.emplace(p, constant_term(poly)).first;
        }
        Rational coeff = c * pit->second / aut;
        if (coeff.is_zero()) continue;
        GraphTerm t{graph, dec.chi, key.first.psi, key.first.kappa};
        result.add_term(t, coeff);
      }
    }
  }
  return result;
}

bool ValidationReport::all_pass() const {
  return std::all_of(items.begin(), items.end(), [](const auto& it) { return it.second; });
}

ValidationReport validate_dr_problem(const DRProblem& p) {
  ValidationReport rep;
  auto add = [&rep](const std::string& name, bool ok) { rep.items.emplace_back(name, ok); };

  add("genus non-negative", p.g >= 0);
  add("group order positive", p.rep.m >= 1);
  bool sectors_ok = true;
  for (const auto& s : p.absolute) sectors_ok &= (s.g >= 0 && s.g < p.rep.m);
  for (const auto& [s, mu] : p.mu_zero) sectors_ok &= (s.g >= 0 && s.g < p.rep.m);
  for (const auto& [s, mu] : p.mu_infinity) sectors_ok &= (s.g >= 0 && s.g < p.rep.m);
  add("sectors in range", sectors_ok);
  add("stability 2g-2+n > 0", 2 * p.g - 2 + p.n() > 0);

  bool mu_pos = true;
  Rational total(0);
  for (const auto& [s, mu] : p.mu_zero) {
    mu_pos &= (mu > Rational(0));
    total += mu;
  }
  for (const auto& [s, mu] : p.mu_infinity) {
    mu_pos &= (mu > Rational(0));
    total -= mu;
  }
  add("contact orders positive", mu_pos);
  add("balanced contacts", total.is_zero());

  bool abs_ok = sectors_ok;
  for (const auto& s : p.absolute)
    if (sectors_ok) abs_ok &= age(p.rep, s).is_zero();
  add("absolute markings untwisted", abs_ok);

  bool zero_ok = sectors_ok, inf_ok = sectors_ok;
  for (const auto& [s, mu] : p.mu_zero)
    if (sectors_ok) zero_ok &= (mu.frac() == age(p.rep, s));
  add("relative-zero admissibility", zero_ok);
  for (const auto& [s, mu] : p.mu_infinity)
    if (sectors_ok) inf_ok &= (mu.frac() == age(p.rep.dual(), s));
  add("relative-infinity admissibility", inf_ok);
  return rep;
}

TopData branch_top_data(const DRProblem& p, Branch branch) {
  TopData t;
  t.g = p.g;
  t.rep = (branch == Branch::zero) ? p.rep : p.rep.dual();
  const Rational sgn = (branch == Branch::zero) ? Rational(1) : Rational(-1);
  for (const auto& s : p.absolute) {
    t.leg_sectors.push_back(s);
    t.lifts.push_back(Rational(0));
  }
  for (const auto& [s, mu] : p.mu_zero) {
    t.leg_sectors.push_back(s);
    t.lifts.push_back(sgn * mu);
  }
  for (const auto& [s, mu] : p.mu_infinity) {
    t.leg_sectors.push_back(s);
    t.lifts.push_back(sgn * -mu);
  }
  return t;
}

namespace {

TautClass dr_cycle_bracket(const DRProblem& p, Branch branch, const std::vector<long>& r_samples,
                           RPolyClass* rpoly_out) {
  ValidationReport report = validate_dr_problem(p);
  if (!report.all_pass()) {
    for (const auto& [name, ok] : report.items)
      if (!ok && name == "balanced contacts")
        throw UnbalancedContacts("dr_cycle: total contact over zero != total over infinity");
    std::string msg = "dr_cycle: invalid problem:";
    for (const auto& [name, ok] : report.items)
      if (!ok) msg += " [" + name + "]";
    throw Error(msg);
  }
  TopData top = branch_top_data(p, branch);
  std::vector<long> samples = r_samples.empty() ? default_r_samples(top, p.g) : r_samples;
  RPolyClass rp = polynomial_class(top, p.g, samples);
  TautClass cls = rp.constant_term_class();
  if (rpoly_out) *rpoly_out = std::move(rp);
  if (branch == Branch::infinity) cls = class_scale(cls, Rational(-1));
  return cls;
}

}  // namespace

TautClass dr_cycle_raw(const DRProblem& p, Branch branch) {
  return dr_cycle_bracket(p, branch, {}, nullptr);
}

namespace {
std::mutex g_norm_mutex;
std::optional<Rational> g_norm[2];
}  // namespace

Rational branch_normalization(Branch branch) {
  const int idx = branch == Branch::zero ? 0 : 1;
  std::lock_guard<std::mutex> lock(g_norm_mutex);
  if (g_norm[idx]) return *g_norm[idx];
  DRProblem p0;
  p0.g = 0;
  p0.rep = BundleRep(1, 0);
  p0.mu_zero = {{Sector(0), Rational(2)}};
  p0.mu_infinity = {{Sector(0), Rational(1)}, {Sector(0), Rational(1)}};
  TautClass raw = dr_cycle_raw(p0, branch);
  Rational c(0);
  for (const auto& [key, tc] : raw.terms())
    if (tc.first.complex_degree() == 0) c = tc.second;
  if (c * c != Rational(1))
    throw Error("branch_normalization: genus-0 self-test coefficient is " + c.str() +
                ", expected +1 or -1");
  g_norm[idx] = Rational(1) / c;
  return *g_norm[idx];
}

TautClass dr_cycle(const DRProblem& p, Branch branch) {
  return class_scale(dr_cycle_raw(p, branch), branch_normalization(branch));
}

TautClass dr_cycle_with(const DRProblem& p, Branch branch, const std::vector<long>& r_samples,
                        RPolyClass* rpoly_out) {
  TautClass bracket = dr_cycle_bracket(p, branch, r_samples, rpoly_out);
  return class_scale(bracket, branch_normalization(branch));
}

}  // namespace orbidr
