#include "dcsum/audit.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "dcsum/appell.hpp"
#include "dcsum/poly.hpp"
#include "dcsum/sums.hpp"
#include "dcsum/umbral.hpp"

namespace dcsum::audit {

namespace {

using Hyp = std::optional<std::string>;

Rational E(std::int64_t n) { return euler_number(static_cast<std::size_t>(n)); }
Rational Ex(std::int64_t n, const Rational& x) {
  return euler_value(static_cast<std::size_t>(n), x);
}
Rational C(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return {};
  return Rational(binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)));
}
Rational pow(const Rational& q, std::int64_t e) {
  if (e >= 0) return rat_pow(q, static_cast<unsigned long>(e));
  return Rational(1) / rat_pow(q, static_cast<unsigned long>(-e));
}
Rational frac(std::int64_t a, std::int64_t b) { return Rational(Int(a), Int(b)); }
Rational sign(std::int64_t e) { return Rational(neg_one_pow(e)); }

bool odd(std::int64_t v) { return v % 2 != 0; }

// Hypothesis combinators; each returns the first violated condition.
struct Need {
  Hyp failed;
  Need& operator()(bool ok, const char* what) {
    if (!failed && !ok) failed = what;
    return *this;
  }
};

// int_0^1 x E_p(x) dx by exact polynomial integration.
Rational first_moment(std::int64_t p) {
  const Poly integrand = Poly({Rational(0), Rational(1)}) * euler_poly(static_cast<std::size_t>(p));
  return eval_poly(poly_integral(integrand), Rational(1));
}

Rational lemma1_sum(std::int64_t p) {
  Rational acc;
  for (std::int64_t s = 0; s <= p; ++s) acc += C(p, s) * E(s) / Rational(p - s + 2);
  return acc;
}

Rational lemma1_corrected_value(std::int64_t p) {
  return Rational(2) * E(p + 2) / Rational((p + 1) * (p + 2));
}

Rational thm2_sum(std::int64_t p, std::int64_t s) {
  Rational acc;
  for (std::int64_t v = 0; v <= p; ++v) acc += C(p, v) * C(p - v + 1, s) * E(v);
  return acc;
}

Rational thm2_closed(std::int64_t p, std::int64_t s) {
  if (s > p) return {};  // C(p,s) = 0 and E_{p-s} is undefined
  return -C(p, s) * E(p - s);
}

// m^p T_p(1,m)
Rational scaled_dc_1m(std::int64_t p, std::int64_t m) {
  return pow(Rational(m), p) * dc_sum(p, 1, m);
}

// k^p T_p(h,k) + h^p T_p(k,h)
Rational reciprocity_lhs(std::int64_t p, std::int64_t h, std::int64_t k) {
  return pow(Rational(k), p) * dc_sum(p, h, k) + pow(Rational(h), p) * dc_sum(p, k, h);
}

Rational thm3_rhs(std::int64_t p, std::int64_t m) {
  Rational acc;
  for (std::int64_t v = 0; v <= p; ++v) {
    acc += C(p, v) * E(v) * pow(Rational(m), -(p + 1 - v)) *
           (Ex(p - v + 1, Rational(m)) - E(p - v + 1));
  }
  return acc;
}

Rational cor4_rhs(std::int64_t p, std::int64_t m) {
  Rational acc;
  for (std::int64_t v = 0; v <= p; ++v) {
    Rational inner;
    for (std::int64_t i = 0; i <= p - v; ++i) {
      inner += C(p - v + 1, i) * E(i) * pow(Rational(m), p - i);
    }
    acc += C(p, v) * E(v) * inner;
  }
  return acc;
}

Rational prop5_rhs(std::int64_t p, std::int64_t m) {
  Rational acc;
  for (std::int64_t v = 0; v <= p; ++v) acc += C(p, v) * E(v) * pow(Rational(m), p);
  for (std::int64_t i = 1; i <= p - 2; ++i) {
    for (std::int64_t v = 0; v <= p - i; ++v) {
      acc += C(p, v) * E(v) * C(p - v + 1, i) * E(i) * pow(Rational(m), p - i);
    }
  }
  return acc + Rational(p + 1) * E(p);
}

Rational thm6_rhs(std::int64_t p, std::int64_t m) {
  Rational acc;
  for (std::int64_t i = 0; i <= p; ++i) {
    acc += C(p, i) * Ex(p - i, Rational(1)) * E(i) * pow(Rational(m), p - i);
  }
  return acc + Rational(p) * E(p);
}

// (hk)^p (T_p(1,hk) + sign * 2(hk)^{-p} E_p - S)
Rational eq31_rhs(std::int64_t p, std::int64_t h, std::int64_t k, int sign) {
  const Rational hk(h * k);
  return pow(hk, p) * (dc_sum(p, 1, h * k) + Rational(2 * sign) * pow(hk, -p) * E(p) -
                       restricted_lattice_sum(p, h, k));
}

std::vector<IdentityCheck> build_registry() {
  std::vector<IdentityCheck> r;

  auto eq7_rhs = [](std::int64_t n, std::int64_t l, std::int64_t sign_exp) {
    return sign(sign_exp) * Ex(l, Rational(n)) + E(l);
  };
  auto eq7_hyp = [](const Params& q) {
    return Need{}(q.at("n") >= 1, "n >= 1")(q.at("l") >= 0, "l >= 0").failed;
  };
  r.push_back({"eq7_printed", {"n", "l"},
               "2 sum_{j<n} (-1)^j j^l = (-1)^n E_l(n) + E_l", eq7_hyp,
               [](const Params& q) { return alt_power_sum(q.at("n"), q.at("l")); },
               [eq7_rhs](const Params& q) { return eq7_rhs(q.at("n"), q.at("l"), q.at("n")); }});
  r.push_back({"eq7_corrected", {"n", "l"},
               "2 sum_{j<n} (-1)^j j^l = (-1)^{n+1} E_l(n) + E_l", eq7_hyp,
               [](const Params& q) { return alt_power_sum(q.at("n"), q.at("l")); },
               [eq7_rhs](const Params& q) {
                 return eq7_rhs(q.at("n"), q.at("l"), q.at("n") + 1);
               }});

  r.push_back({"eq10", {"p", "h", "k"},
               "E_p(x+y) = sum_s C(p,s) E_s(x) y^{p-s} at x = h/k, y = k/h",
               [](const Params& q) {
                 return Need{}(q.at("p") >= 0, "p >= 0")(q.at("h") >= 1, "h >= 1")(
                            q.at("k") >= 1, "k >= 1")
                     .failed;
               },
               [](const Params& q) {
                 const auto p = q.at("p");
                 return Ex(p, frac(q.at("h"), q.at("k")) + frac(q.at("k"), q.at("h")));
               },
               [](const Params& q) {
                 const auto p = q.at("p");
                 const Rational x = frac(q.at("h"), q.at("k"));
                 const Rational y = frac(q.at("k"), q.at("h"));
                 Rational acc;
                 for (std::int64_t s = 0; s <= p; ++s) acc += C(p, s) * Ex(s, x) * pow(y, p - s);
                 return acc;
               }});

  r.push_back({"eq11", {"p", "m", "n"},
               "E_p(mx) = m^p sum_{s<m} (-1)^s E_p(x + s/m) at x = 1/n",
               [](const Params& q) {
                 return Need{}(q.at("p") >= 0, "p >= 0")(q.at("m") >= 1 && odd(q.at("m")),
                                                         "m odd")(q.at("n") >= 1, "n >= 1")
                     .failed;
               },
               [](const Params& q) { return Ex(q.at("p"), frac(q.at("m"), q.at("n"))); },
               [](const Params& q) {
                 const auto p = q.at("p");
                 const auto m = q.at("m");
                 const Rational x = frac(1, q.at("n"));
                 Rational acc;
                 for (std::int64_t s = 0; s < m; ++s) acc += sign(s) * Ex(p, x + frac(s, m));
                 return pow(Rational(m), p) * acc;
               }});

  auto p_odd = [](const Params& q) {
    return Need{}(q.at("p") >= 1 && odd(q.at("p")), "p odd").failed;
  };

  r.push_back({"eq12_printed", {"p"}, "int_0^1 x E_p(x) dx = E_{p+1}/(p+1)", p_odd,
               [](const Params& q) { return first_moment(q.at("p")); },
               [](const Params& q) { return E(q.at("p") + 1) / Rational(q.at("p") + 1); }});
  r.push_back({"eq12_13", {"p"}, "int_0^1 x E_p(x) dx = sum_s C(p,s) E_s/(p-s+2)", p_odd,
               [](const Params& q) { return first_moment(q.at("p")); },
               [](const Params& q) { return lemma1_sum(q.at("p")); }});
  r.push_back({"lemma1_printed", {"p"}, "sum_s C(p,s) E_s/(p-s+2) = E_{p+1}/(p+1)", p_odd,
               [](const Params& q) { return lemma1_sum(q.at("p")); },
               [](const Params& q) { return E(q.at("p") + 1) / Rational(q.at("p") + 1); }});
  r.push_back({"lemma1_corrected", {"p"},
               "sum_s C(p,s) E_s/(p-s+2) = 2 E_{p+2}/((p+1)(p+2))", p_odd,
               [](const Params& q) { return lemma1_sum(q.at("p")); },
               [](const Params& q) { return lemma1_corrected_value(q.at("p")); }});

  r.push_back({"thm2_printed", {"p", "s"},
               "sum_v C(p,v) C(p-v+1,s) E_v = -C(p,s) E_{p-s} for even s > p",
               [](const Params& q) {
                 const auto s = q.at("s");
                 return Need{}(q.at("p") >= 1 && odd(q.at("p")), "p odd")(
                            s >= 2 && !odd(s), "s even and s >= 2")(s > q.at("p"), "s > p")
                     .failed;
               },
               [](const Params& q) { return thm2_sum(q.at("p"), q.at("s")); },
               [](const Params& q) { return thm2_closed(q.at("p"), q.at("s")); }});
  r.push_back({"thm2_slt", {"p", "s"},
               "sum_v C(p,v) C(p-v+1,s) E_v = -C(p,s) E_{p-s} for even s < p",
               [](const Params& q) {
                 const auto s = q.at("s");
                 return Need{}(q.at("p") >= 1 && odd(q.at("p")), "p odd")(
                            s >= 2 && !odd(s), "s even and s >= 2")(s < q.at("p"), "s < p")
                     .failed;
               },
               [](const Params& q) { return thm2_sum(q.at("p"), q.at("s")); },
               [](const Params& q) { return thm2_closed(q.at("p"), q.at("s")); }});

  auto pm_hyp = [](bool p_gt1) {
    return [p_gt1](const Params& q) {
      const auto p = q.at("p");
      return Need{}(p >= 1 && odd(p) && (!p_gt1 || p > 1), p_gt1 ? "p odd and p > 1" : "p odd")(
                 q.at("m") >= 1 && odd(q.at("m")), "m odd")
          .failed;
    };
  };
  r.push_back({"thm3", {"p", "m"},
               "T_p(1,m) = sum_v C(p,v) E_v m^{-(p+1-v)} (E_{p-v+1}(m) - E_{p-v+1})",
               pm_hyp(false), [](const Params& q) { return dc_sum(q.at("p"), 1, q.at("m")); },
               [](const Params& q) { return thm3_rhs(q.at("p"), q.at("m")); }});
  r.push_back({"cor4", {"p", "m"},
               "m^p T_p(1,m) = sum_v C(p,v) E_v sum_{i<=p-v} C(p-v+1,i) E_i m^{p-i}",
               pm_hyp(false), [](const Params& q) { return scaled_dc_1m(q.at("p"), q.at("m")); },
               [](const Params& q) { return cor4_rhs(q.at("p"), q.at("m")); }});
  r.push_back({"prop5", {"p", "m"},
               "m^p T_p(1,m) = sum_v C(p,v) E_v m^p + sum_{i=1}^{p-2} ... + (p+1) E_p",
               pm_hyp(false), [](const Params& q) { return scaled_dc_1m(q.at("p"), q.at("m")); },
               [](const Params& q) { return prop5_rhs(q.at("p"), q.at("m")); }});
  r.push_back({"thm6", {"p", "m"},
               "m^p T_p(1,m) = sum_i C(p,i) E_{p-i}(1) E_i m^{p-i} + p E_p", pm_hyp(true),
               [](const Params& q) { return scaled_dc_1m(q.at("p"), q.at("m")); },
               [](const Params& q) { return thm6_rhs(q.at("p"), q.at("m")); }});

  r.push_back({"thm7", {"p", "h", "k"},
               "k^p sum_u (-1)^u (h(E+u/k) + (E'+h-[hu/k]))^p = sum_s C(p,s) k^{p-s} E_s "
               "h^{p-s} E_{p-s}(1)",
               [](const Params& q) {
                 const auto h = q.at("h");
                 const auto k = q.at("k");
                 return Need{}(q.at("p") > 1 && odd(q.at("p")), "p odd and p > 1")(
                            h >= 1 && k >= 1, "h, k >= 1")(odd(k), "k odd")(std::gcd(h, k) == 1,
                                                                           "gcd(h,k) = 1")
                     .failed;
               },
               [](const Params& q) { return theorem7_sum(q.at("p"), q.at("h"), q.at("k")); },
               [](const Params& q) { return theorem7_closed(q.at("p"), q.at("h"), q.at("k")); }});

  auto hk_odd = [](const Params& q) {
    const auto h = q.at("h");
    const auto k = q.at("k");
    return Need{}(q.at("p") > 1 && odd(q.at("p")), "p odd and p > 1")(h >= 1 && odd(h), "h odd")(
               k >= 1 && odd(k), "k odd")
        .failed;
  };
  r.push_back({"thm8_periodic", {"p", "h", "k"},
               "k^p T_p(h,k) + h^p T_p(k,h) = 2(hk)^p sum_{u,v} (-1)^{u+v-1} "
               "((uh+vk)/hk) Ebar_p(u/k + v/h)",
               hk_odd,
               [](const Params& q) { return reciprocity_lhs(q.at("p"), q.at("h"), q.at("k")); },
               [](const Params& q) {
                 return theorem8_rhs(q.at("p"), q.at("h"), q.at("k"), EulerExtension::periodic);
               }});
  r.push_back({"thm8_poly", {"p", "h", "k"},
               "k^p T_p(h,k) + h^p T_p(k,h) = 2(hk)^p sum_{u,v} (-1)^{u+v-1} "
               "((uh+vk)/hk) E_p(u/k + v/h)",
               hk_odd,
               [](const Params& q) { return reciprocity_lhs(q.at("p"), q.at("h"), q.at("k")); },
               [](const Params& q) {
                 return theorem8_rhs(q.at("p"), q.at("h"), q.at("k"), EulerExtension::polynomial);
               }});

  auto eq31_hyp = [](const Params& q) {
    const auto h = q.at("h");
    const auto k = q.at("k");
    return Need{}(q.at("p") > 1 && odd(q.at("p")), "p odd and p > 1")(h >= 1 && odd(h), "h odd")(
               k >= 1 && odd(k), "k odd")(std::gcd(h, k) == 1, "gcd(h,k) = 1")
        .failed;
  };
  r.push_back({"eq31", {"p", "h", "k"},
               "k^p T_p(h,k) + h^p T_p(k,h) = (hk)^p (T_p(1,hk) + 2(hk)^{-p} E_p - S)", eq31_hyp,
               [](const Params& q) { return reciprocity_lhs(q.at("p"), q.at("h"), q.at("k")); },
               [](const Params& q) { return eq31_rhs(q.at("p"), q.at("h"), q.at("k"), 1); }});
  // The alternating sum over a full residue system mod hk carries (-1)^{l-1},
  // so the E_p term enters with a minus sign.
  r.push_back({"eq31_corrected", {"p", "h", "k"},
               "k^p T_p(h,k) + h^p T_p(k,h) = (hk)^p (T_p(1,hk) - 2(hk)^{-p} E_p - S)", eq31_hyp,
               [](const Params& q) { return reciprocity_lhs(q.at("p"), q.at("h"), q.at("k")); },
               [](const Params& q) { return eq31_rhs(q.at("p"), q.at("h"), q.at("k"), -1); }});

  r.push_back({"thm9", {"p", "h", "k"},
               "k^p T_p(h,k) + h^p T_p(k,h) = 2 sum_{u-[hu/k] odd} (kh(E+u/k) + "
               "k(E'+h-[hu/k]))^p + (hE+kE')^p + (p+2) E_p",
               [](const Params& q) {
                 const auto h = q.at("h");
                 const auto k = q.at("k");
                 return Need{}(q.at("p") > 1 && odd(q.at("p")), "p odd and p > 1")(
                            h >= 1 && k >= 1, "h, k >= 1")(std::gcd(h, k) == 1, "gcd(h,k) = 1")
                     .failed;
               },
               [](const Params& q) { return reciprocity_lhs(q.at("p"), q.at("h"), q.at("k")); },
               [](const Params& q) { return theorem9_rhs(q.at("p"), q.at("h"), q.at("k")); }});

  r.push_back({"dedekind_recip", {"h", "k"},
               "S(h,k) + S(k,h) = -1/4 + (h^2 + k^2 + 1)/(12hk)",
               [](const Params& q) {
                 const auto h = q.at("h");
                 const auto k = q.at("k");
                 return Need{}(h >= 1 && k >= 1, "h, k >= 1")(std::gcd(h, k) == 1,
                                                             "gcd(h,k) = 1")
                     .failed;
               },
               [](const Params& q) {
                 return dedekind_sum(q.at("h"), q.at("k")) + dedekind_sum(q.at("k"), q.at("h"));
               },
               [](const Params& q) {
                 const auto h = q.at("h");
                 const auto k = q.at("k");
                 return frac(-1, 4) + frac(h * h + k * k + 1, 12 * h * k);
               }});

  std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return r;
}

bool passes_filters(const Params& q, const ParamGrid& grid) {
  if (grid.odd_only) {
    for (const char* name : {"p", "h", "k", "m"}) {
      if (q.contains(name) && !odd(q.at(name))) return false;
    }
  }
  if (grid.coprime_only && q.contains("h") && q.contains("k")) {
    if (std::gcd(q.at("h"), q.at("k")) != 1) return false;
  }
  return true;
}

CheckResult evaluate(const IdentityCheck& check, const Params& params) {
  CheckResult out;
  out.id = check.id;
  out.params = params;
  for (const auto& name : check.params) (void)params.at(name);
  if (check.hypotheses(params)) {
    out.skipped = true;
    return out;
  }
  out.lhs = check.lhs(params);
  out.rhs = check.rhs(params);
  out.residual = out.lhs - out.rhs;
  out.holds = out.residual.is_zero();
  return out;
}

}  // namespace

std::int64_t Params::at(std::string_view name) const {
  for (const auto& [key, value] : values_) {
    if (key == name) return value;
  }
  throw PreconditionError("missing parameter '" + std::string(name) + "'");
}

bool Params::contains(std::string_view name) const {
  return std::any_of(values_.begin(), values_.end(),
                     [name](const auto& kv) { return kv.first == name; });
}

void Params::set(std::string name, std::int64_t value) {
  for (auto& [key, v] : values_) {
    if (key == name) {
      v = value;
      return;
    }
  }
  values_.emplace_back(std::move(name), value);
}

bool operator<(const Params& a, const Params& b) {
  const auto& x = a.values_;
  const auto& y = b.values_;
  const auto n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].second != y[i].second) return x[i].second < y[i].second;
    if (x[i].first != y[i].first) return x[i].first < y[i].first;
  }
  return x.size() < y.size();
}

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = build_registry();
  return checks;
}

const IdentityCheck* find_check(std::string_view id) {
  const auto& r = registry();
  auto it = std::find_if(r.begin(), r.end(), [id](const auto& c) { return c.id == id; });
  return it == r.end() ? nullptr : &*it;
}

std::vector<std::string> registry_ids() {
  std::vector<std::string> out;
  for (const auto& c : registry()) out.push_back(c.id);
  return out;
}

CheckResult run_check(std::string_view id, const Params& params) {
  const IdentityCheck* check = find_check(id);
  if (check == nullptr) throw UnknownCheckError(std::string(id));
  // Reorder into schema order so results compare and sort consistently.
  Params ordered;
  for (const auto& name : check->params) ordered.set(name, params.at(name));
  return evaluate(*check, ordered);
}

const Range& ParamGrid::range(std::string_view name) const {
  if (name == "p") return p;
  if (name == "h") return h;
  if (name == "k") return k;
  if (name == "n") return n;
  if (name == "l") return l;
  if (name == "m") return m;
  if (name == "s") return s;
  throw PreconditionError("unknown grid parameter '" + std::string(name) + "'");
}

Range& ParamGrid::range(std::string_view name) {
  return const_cast<Range&>(std::as_const(*this).range(name));
}

std::vector<Params> enumerate(const IdentityCheck& check, const ParamGrid& grid) {
  std::vector<Params> out;
  Params current;
  // Odometer over the schema, first name most significant.
  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (depth == check.params.size()) {
      if (passes_filters(current, grid)) out.push_back(current);
      return;
    }
    const auto& name = check.params[depth];
    const Range& r = grid.range(name);
    for (std::int64_t v = r.lo; v <= r.hi; ++v) {
      current.set(name, v);
      recurse(depth + 1);
    }
  };
  recurse(0);
  return out;
}

bool AuditReport::all_hold() const {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.skipped || r.holds; });
}

AuditReport sweep(std::span<const std::string> ids, const ParamGrid& grid,
                  SweepOptions options) {
  std::set<std::string> unique;
  std::vector<const IdentityCheck*> checks;
  for (const auto& id : ids) {
    const IdentityCheck* check = find_check(id);
    if (check == nullptr) throw UnknownCheckError(id);
    if (unique.insert(id).second) checks.push_back(check);
  }
  std::sort(checks.begin(), checks.end(),
            [](const auto* a, const auto* b) { return a->id < b->id; });

  AuditReport report;
  report.grid = grid;
  report.checks.assign(unique.begin(), unique.end());

  std::vector<std::pair<const IdentityCheck*, Params>> tasks;
  for (const auto* check : checks) {
    report.summary[check->id] = Tally{};
    for (auto& params : enumerate(*check, grid)) tasks.emplace_back(check, std::move(params));
  }

  report.results.resize(tasks.size());
  unsigned workers = options.threads == 0 ? std::thread::hardware_concurrency() : options.threads;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        report.results[i] = evaluate(*tasks[i].first, tasks[i].second);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(report.results.begin(), report.results.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     if (a.id != b.id) return a.id < b.id;
                     return a.params < b.params;
                   });

  for (const auto& r : report.results) {
    Tally& t = report.summary[r.id];
    if (r.skipped) {
      ++t.skip;
    } else if (r.holds) {
      ++t.pass;
    } else {
      ++t.fail;
    }
  }
  return report;
}

}  // namespace dcsum::audit
