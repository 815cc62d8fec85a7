// Family membership by parameter search: every candidate parameterization is
// pushed through the family's own generator and compared exactly against the
// facet, so a positive answer always comes with a reproducible certificate.

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "mixcut/errors.hpp"
#include "mixcut/families.hpp"

namespace mixcut {

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = {
      Family::Star,       Family::StrengthenedStar, Family::Lifted,
      Family::Kucukyavuz, Family::Zhao,             Family::BlpUniform,
      Family::BlpGeneric};
  return families;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Star: return "Star";
    case Family::StrengthenedStar: return "StrengthenedStar";
    case Family::Lifted: return "Lifted";
    case Family::Kucukyavuz: return "Kucukyavuz";
    case Family::Zhao: return "Zhao";
    case Family::BlpUniform: return "BlpUniform";
    case Family::BlpGeneric: return "BlpGeneric";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  std::string key;
  for (char c : name) {
    if (c == '-' || c == '_' || c == ' ') continue;
    key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  for (Family f : all_families()) {
    std::string n = family_name(f);
    std::transform(n.begin(), n.end(), n.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (key == n) return f;
  }
  if (key == "sstar" || key == "strengthened") return Family::StrengthenedStar;
  if (key == "luedtke") return Family::Lifted;
  if (key == "uniform" || key == "blpu") return Family::BlpUniform;
  if (key == "generic" || key == "blpg" || key == "blp") return Family::BlpGeneric;
  throw ValidationError("unknown family '" + name + "'");
}

LinearCut regenerate(const MixingInstance& inst, const Certificate& cert) {
  if (cert.t_set.empty() && cert.q_list.empty()) {
    return LinearCut{1, std::vector<Rational>(inst.m(), Rational(0)),
                     inst.h(inst.p() + 1)};
  }
  switch (cert.family) {
    case Family::Star: return gen_star(inst, {cert.t_set});
    case Family::StrengthenedStar: return gen_strengthened_star(inst, {cert.t_set});
    case Family::Lifted:
      return gen_luedtke_lifted(inst, {cert.r, cert.t_set, cert.q_list, {}});
    case Family::Kucukyavuz:
      return gen_kucukyavuz(inst, {cert.r, cert.t_set, cert.q_list, {}});
    case Family::Zhao:
      return gen_zhao(inst, {cert.r, cert.t_set, cert.q_list, cert.s_list});
    case Family::BlpUniform:
      return gen_blp_uniform(inst, {cert.r, cert.t_set, cert.delta, cert.q_list});
    case Family::BlpGeneric: {
      BlpGenericParams params{cert.r,   cert.t_set, cert.delta, cert.q_list,
                              cert.phi, cert.A_sets, cert.beta};
      auto res = gen_blp_generic(inst, params);
      if (!res.accepted) throw ValidationError(res.reason);
      return res.cut;
    }
  }
  throw ValidationError("unknown family");
}

namespace {

struct Parsed {
  const MixingInstance& inst;
  const LinearCut& facet;
  MixingForm form;
  std::vector<Rational> c;  // 1-based coefficients, c[0] unused

  const Rational& coef(int i) const { return c[i]; }
  // Scenario index targets for the phi recursion: parsed phi, or 0 for
  // padding indices with a zero coefficient.
  Rational target(int q) const { return -c[q]; }
};

bool same(const LinearCut& a, const LinearCut& b) { return a == b; }

template <class F>
bool try_generate(const Parsed& ps, F&& gen) {
  try {
    return same(gen(), ps.facet);
  } catch (const ValidationError&) {
    return false;
  }
}

// Sorted t candidates: P itself when h_{min P} matches the right-hand side,
// and {t0} u P for an earlier zero-coefficient index t0 with h_{t0} = rhs.
std::vector<std::vector<int>> t_candidates(const Parsed& ps) {
  std::vector<int> P;
  for (const auto& [i, v] : ps.form.P) P.push_back(i);
  std::vector<std::vector<int>> out;
  if (!P.empty() && ps.inst.h(P.front()) == ps.form.rhs_base) out.push_back(P);
  const int lim = P.empty() ? ps.inst.m() : P.front() - 1;
  for (int t0 = 1; t0 <= lim; ++t0) {
    if (ps.coef(t0) != 0 || ps.inst.h(t0) != ps.form.rhs_base) continue;
    std::vector<int> t{t0};
    t.insert(t.end(), P.begin(), P.end());
    out.push_back(std::move(t));
  }
  return out;
}

std::vector<int> q_indices(const Parsed& ps) {
  std::vector<int> Q;
  for (const auto& [i, v] : ps.form.Q) Q.push_back(i);
  return Q;
}

// Zero-coefficient indices in (lo, m] usable as phi = 0 padding.
std::vector<int> pad_pool(const Parsed& ps, int lo) {
  std::vector<int> pool;
  for (int i = lo + 1; i <= ps.inst.m(); ++i) {
    if (ps.coef(i) == 0) pool.push_back(i);
  }
  return pool;
}

void for_each_subset(const std::vector<int>& pool, int size,
                     const std::function<bool(const std::vector<int>&)>& fn) {
  if (size < 0 || size > static_cast<int>(pool.size())) return;
  std::vector<int> pick;
  std::function<bool(size_t)> rec = [&](size_t start) -> bool {
    if (static_cast<int>(pick.size()) == size) return fn(pick);
    for (size_t k = start; k < pool.size(); ++k) {
      pick.push_back(pool[k]);
      if (rec(k + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  rec(0);
}

// Orders of `set` whose recursively computed phi values match the parsed
// ones. phi_of(prefix) returns the phi values for the given prefix order;
// admissible(iota, q) is the index bound for position iota (0-based).
bool search_orders(const Parsed& ps, const std::vector<int>& set,
                   const std::function<std::vector<Rational>(const std::vector<int>&)>& phi_of,
                   const std::function<bool(int, int)>& admissible,
                   const std::function<bool(const std::vector<int>&)>& accept) {
  std::vector<int> order;
  std::vector<char> used(set.size(), 0);
  std::function<bool()> rec = [&]() -> bool {
    if (order.size() == set.size()) return accept(order);
    const int iota = static_cast<int>(order.size());
    for (size_t k = 0; k < set.size(); ++k) {
      if (used[k] || !admissible(iota, set[k])) continue;
      order.push_back(set[k]);
      const auto phi = phi_of(order);
      if (phi.back() == ps.target(set[k])) {
        used[k] = 1;
        if (rec()) return true;
        used[k] = 0;
      }
      order.pop_back();
    }
    return false;
  };
  return rec();
}

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a);
  out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Certificate> star_like(const Parsed& ps, Family family) {
  if (!ps.form.Q.empty()) return std::nullopt;
  for (const auto& t : t_candidates(ps)) {
    if (family == Family::StrengthenedStar && t.back() > ps.inst.p()) continue;
    Certificate cert;
    cert.family = family;
    cert.t_set = t;
    if (try_generate(ps, [&] { return regenerate(ps.inst, cert); })) return cert;
  }
  return std::nullopt;
}

std::optional<Certificate> lifted(const Parsed& ps) {
  const auto& inst = ps.inst;
  if (!inst.uniform()) return std::nullopt;
  const auto Q = q_indices(ps);
  for (int q : Q) {
    if (q <= inst.p()) return std::nullopt;
  }
  for (const auto& t : t_candidates(ps)) {
    for (int r = t.back(); r <= inst.p(); ++r) {
      const int need = inst.p() - r - static_cast<int>(Q.size());
      std::optional<Certificate> found;
      for_each_subset(pad_pool(ps, inst.p()), need, [&](const std::vector<int>& pad) {
        Certificate cert;
        cert.family = Family::Lifted;
        cert.r = r;
        cert.t_set = t;
        cert.q_list = merged(Q, pad);
        cert.phi = lifted_phi(inst, r, cert.q_list, false);
        if (try_generate(ps, [&] { return regenerate(inst, cert); })) {
          found = cert;
          return true;
        }
        return false;
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> kucukyavuz(const Parsed& ps) {
  const auto& inst = ps.inst;
  if (!inst.uniform()) return std::nullopt;
  const auto Q = q_indices(ps);
  for (const auto& t : t_candidates(ps)) {
    for (int r = t.back(); r <= inst.p(); ++r) {
      if (!Q.empty() && Q.front() <= r) break;
      const int need = inst.p() - r - static_cast<int>(Q.size());
      std::optional<Certificate> found;
      for_each_subset(pad_pool(ps, r), need, [&](const std::vector<int>& pad) {
        const auto set = merged(Q, pad);
        return search_orders(
            ps, set,
            [&](const std::vector<int>& q) { return lifted_phi(inst, r, q, true); },
            [&](int iota, int q) { return q >= r + iota + 2; },
            [&](const std::vector<int>& order) {
              Certificate cert;
              cert.family = Family::Kucukyavuz;
              cert.r = r;
              cert.t_set = t;
              cert.q_list = order;
              cert.phi = lifted_phi(inst, r, order, true);
              if (try_generate(ps, [&] { return regenerate(inst, cert); })) {
                found = cert;
                return true;
              }
              return false;
            });
      });
      if (found) return found;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> zhao(const Parsed& ps) {
  const auto& inst = ps.inst;
  const auto Q = q_indices(ps);
  for (const auto& t : t_candidates(ps)) {
    for (int r = t.back(); r <= inst.p(); ++r) {
      if (!Q.empty() && Q.front() <= r) break;
      if (Q.empty()) {
        Certificate cert;
        cert.family = Family::Zhao;
        cert.r = r;
        cert.t_set = t;
        if (try_generate(ps, [&] { return regenerate(inst, cert); })) return cert;
      }
      const int vmax = inst.theta() - r;
      const auto pool = pad_pool(ps, r);
      std::optional<Certificate> found;
      for (int extra = 0; !found && static_cast<int>(Q.size()) + extra <= vmax; ++extra) {
        if (Q.empty() && extra == 0) continue;
        for_each_subset(pool, extra, [&](const std::vector<int>& pad) {
          const auto set = merged(Q, pad);
          auto s = zhao_s_sequence(inst, r, set);
          if (!s) return false;
          const auto& sv = *s;
          if (extra > 0 && inst.h(r + sv[0]) != inst.h(r + sv[1])) return false;
          return search_orders(
              ps, set,
              [&](const std::vector<int>& q) { return zhao_phi(inst, r, q, sv); },
              [&](int iota, int q) {
                return q >= r + sv[0] + 1 &&
                       q >= r + std::min(1 + sv[iota], sv[iota + 1]);
              },
              [&](const std::vector<int>& order) {
                Certificate cert;
                cert.family = Family::Zhao;
                cert.r = r;
                cert.t_set = t;
                cert.q_list = order;
                cert.s_list.assign(sv.begin(), sv.end() - 1);
                cert.phi = zhao_phi(inst, r, order, sv);
                if (try_generate(ps, [&] { return regenerate(inst, cert); })) {
                  found = cert;
                  return true;
                }
                return false;
              });
        });
      }
      if (found) return found;
    }
  }
  return std::nullopt;
}

std::optional<Certificate> blp_uniform(const Parsed& ps) {
  const auto& inst = ps.inst;
  if (!inst.uniform()) return std::nullopt;
  const int p = inst.p();
  const auto Q = q_indices(ps);
  for (const auto& t : t_candidates(ps)) {
    const int l = static_cast<int>(t.size());
    for (int r = t.back(); r <= p; ++r) {
      if (!Q.empty() && Q.front() <= r) break;
      const auto pool = pad_pool(ps, r);
      for (int v = static_cast<int>(Q.size()); v <= p - r; ++v) {
        // s_iota = p - r - v + iota, so r + s_iota = p - v + iota.
        const int close = p - v + 1;
        std::vector<Rational> delta(l);
        Rational dsum = 0;
        for (int k = 0; k < l; ++k) {
          const int next = k + 1 < l ? t[k + 1] : close;
          delta[k] = ps.coef(t[k]) - inst.h(t[k]) + inst.h(next);
          dsum += delta[k];
        }
        Certificate base;
        base.family = Family::BlpUniform;
        base.r = r;
        base.t_set = t;
        base.delta = delta;
        if (v == 0) {
          if (try_generate(ps, [&] { return regenerate(inst, base); })) return base;
          continue;
        }
        const Rational top = inst.h(close);
        const Rational phi1 = top - inst.h(close + 1) - dsum;
        if (phi1 < 0) continue;
        const int extra = v - static_cast<int>(Q.size());
        if (extra > 0 && phi1 != 0) continue;
        auto phi_of = [&](const std::vector<int>& q) {
          std::vector<Rational> phi;
          for (size_t k = 0; k < q.size(); ++k) {
            if (k == 0) {
              phi.push_back(phi1);
              continue;
            }
            const int bound = p - v + static_cast<int>(k) + 2;  // r + s + 1
            Rational val = top - inst.h(bound) - dsum;
            for (size_t j = 0; j < k; ++j) {
              if (q[j] >= bound) val -= phi[j];
            }
            phi.push_back(std::max(phi.back(), val));
          }
          return phi;
        };
        std::optional<Certificate> found;
        for_each_subset(pool, extra, [&](const std::vector<int>& pad) {
          return search_orders(
              ps, merged(Q, pad), phi_of,
              [&](int iota, int q) { return q >= p - v + iota + 2; },
              [&](const std::vector<int>& order) {
                Certificate cert = base;
                cert.q_list = order;
                cert.phi = phi_of(order);
                if (try_generate(ps, [&] { return regenerate(inst, cert); })) {
                  found = cert;
                  return true;
                }
                return false;
              });
        });
        if (found) return found;
      }
    }
  }
  return std::nullopt;
}

std::optional<Certificate> blp_generic(const Parsed& ps) {
  const auto& inst = ps.inst;
  const auto Q = q_indices(ps);
  for (const auto& t0 : t_candidates(ps)) {
    for (int r = t0.back(); r <= inst.p(); ++r) {
      if (!Q.empty() && Q.front() <= r) break;
      // Zero-coefficient indices in [t_1, r] may join t at no cost.
      std::vector<int> t;
      std::set<int> base(t0.begin(), t0.end());
      for (int i = t0.front(); i <= r; ++i) {
        if (base.count(i) || ps.coef(i) == 0) t.push_back(i);
      }
      const int l = static_cast<int>(t.size());
      if (static_cast<int>(Q.size()) > inst.p() - r + l) continue;
      BlpGenericParams params;
      params.r = r;
      params.t_set = t;
      Rational dsum = 0;
      for (int k = 0; k < l; ++k) {
        const int next = k + 1 < l ? t[k + 1] : r + 1;
        params.delta.push_back(ps.coef(t[k]) - inst.h(t[k]) + inst.h(next));
        dsum += params.delta.back();
      }
      if (dsum > inst.h(r + 1)) continue;
      params.q_list = Q;
      for (int q : Q) params.phi.push_back(ps.target(q));
      BlpGenericResult res;
      try {
        res = gen_blp_generic(inst, params);
      } catch (const ValidationError&) {
        continue;
      }
      if (!res.accepted || !same(res.cut, ps.facet)) continue;
      Certificate cert;
      cert.family = Family::BlpGeneric;
      cert.r = r;
      cert.t_set = t;
      cert.delta = params.delta;
      cert.q_list = Q;
      cert.phi = params.phi;
      cert.A_sets = res.certificate.A_sets;
      cert.beta = res.certificate.beta;
      return cert;
    }
  }
  return std::nullopt;
}

}  // namespace

Membership member_of(const MixingInstance& inst, const LinearCut& facet,
                     Family family) {
  if (facet.z_coef != 1) {
    throw ValidationError("membership requires a cut with z coefficient 1");
  }
  Parsed ps{inst, facet, parse_mixing_form(inst, facet), {}};
  ps.c.assign(inst.m() + 1, Rational(0));
  for (int i = 1; i <= inst.m(); ++i) ps.c[i] = facet.x[i - 1];

  if (ps.form.P.empty() && ps.form.Q.empty() &&
      ps.form.rhs_base == inst.h(inst.p() + 1)) {
    Certificate cert;
    cert.family = family;
    return {true, cert};
  }
  std::optional<Certificate> cert;
  switch (family) {
    case Family::Star:
    case Family::StrengthenedStar: cert = star_like(ps, family); break;
    case Family::Lifted: cert = lifted(ps); break;
    case Family::Kucukyavuz: cert = kucukyavuz(ps); break;
    case Family::Zhao: cert = zhao(ps); break;
    case Family::BlpUniform: cert = blp_uniform(ps); break;
    case Family::BlpGeneric: cert = blp_generic(ps); break;
  }
  return {cert.has_value(), cert};
}

}  // namespace mixcut
