// Implementation of the verification suites.
#include "pnil/verify.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "pnil/ancestry.hpp"
#include "pnil/catalog.hpp"
#include "pnil/iso.hpp"
#include "pnil/props.hpp"
#include "pnil/rank2.hpp"

namespace pnil::verify {

namespace {

class Timer {
 public:
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

SuiteResult finish(std::string name, bool ok, const Timer& t, std::string detail) {
  SuiteResult r;
  r.name = std::move(name);
  r.ok = ok;
  r.seconds = t.secs();
  r.detail = std::move(detail);
  return r;
}

}  // namespace

SuiteResult counting_suite(int max_x) {
  Timer t;
  bool ok = true;
  std::ostringstream why;
  for (int x = 4; x <= max_x && ok; ++x) {
    if (rank2::count_closed(x) != rank2::count_brute(x)) {
      ok = false;
      why << "closed != brute at x=" << x;
    }
  }
  // Frozen totals (abelian, type I, type II, total).
  const std::map<int, rank2::CountBreakdown> spot = {
      {4, {4, 2, 1, 0, 3}},   {5, {5, 2, 2, 0, 4}},   {6, {6, 3, 4, 0, 7}},
      {8, {8, 4, 9, 1, 14}},  {9, {9, 4, 12, 2, 18}}, {10, {10, 5, 16, 4, 25}}};
  for (const auto& [x, want] : spot) {
    if (x > max_x) continue;
    if (rank2::count_closed(x) != want) {
      ok = false;
      why << " spot value mismatch at x=" << x;
    }
  }
  if (ok) why << "closed == brute for 4 <= x <= " << max_x << ", spot values hold";
  return finish("counting", ok, t, why.str());
}

SuiteResult type_one_parity_suite(int max_x) {
  Timer t;
  bool ok = true;
  bool saw_even = false, saw_odd = false;
  std::ostringstream why;
  for (int x = 4; x <= max_x && ok; ++x) {
    const i64 half = (x - 2) / 2;
    const i64 expect = (x % 2 == 0) ? half * half
                                    : static_cast<i64>(x - 3) * (x - 1) / 4;
    (x % 2 == 0 ? saw_even : saw_odd) = true;
    if (rank2::count_brute(x).type_one != expect) {
      ok = false;
      why << "type I parity form fails at x=" << x;
    }
  }
  ok = ok && saw_even && saw_odd;
  if (ok) why << "both parity branches match enumeration up to x=" << max_x;
  return finish("type-one-parity", ok, t, why.str());
}

SuiteResult type_two_display_suite(int lo, int hi) {
  Timer t;
  bool ok = true;
  std::ostringstream why;
  for (int x = lo; x <= hi && ok; ++x) {
    if (rank2::count_closed(x).type_two != rank2::count_brute(x).type_two) {
      ok = false;
      why << "type II closed form fails at x=" << x;
    }
  }
  const rank2::ErratumReport rep = rank2::shadow_check_type2(lo, hi);
  if (rep.display_matches_enumeration) {
    why << "display expression matches enumeration on [" << lo << "," << hi << "]";
  } else {
    why << "display expression needs an erratum at " << rep.mismatches.size()
        << " orders (first at x=" << rep.mismatches.front().x << ")";
  }
  return finish("type-two-display", ok, t, why.str());
}

SuiteResult catalog_count_suite(const std::vector<i64>& odd_primes) {
  Timer t;
  bool ok = true;
  std::ostringstream why;
  const std::map<int, size_t> odd_want = {{4, 7}, {5, 13}, {6, 33}};
  const std::map<int, size_t> two_want = {{4, 6}, {5, 11}, {6, 23}};
  auto check = [&](i64 p, const std::map<int, size_t>& want) {
    for (const auto& [x, count] : want) {
      const size_t got = catalog::catalog_for_order(p, x).size();
      if (got != count) {
        ok = false;
        why << "p=" << p << " x=" << x << ": " << got << " entries, want "
            << count << "; ";
      }
    }
  };
  for (i64 p : odd_primes) check(p, odd_want);
  check(2, two_want);
  if (ok) why << "7/13/33 entries at odd p, 6/11/23 at p=2";
  return finish("catalog-counts", ok, t, why.str());
}

SuiteResult membership_suite(const std::vector<i64>& primes) {
  Timer t;
  bool ok = true;
  int checked = 0;
  std::ostringstream why;
  for (i64 p : primes)
    for (int x = 4; x <= 6 && ok; ++x)
      for (const auto& e : catalog::catalog_for_order(p, x)) {
        const PcGroup G = e.build();
        const bool strong_needed = p == 2 || e.family == catalog::Family::rank_two;
        const bool good = G.consistency_check().ok && is_powerful(G) && is_pn(G) &&
                          (!strong_needed || is_strongly_powerful(G));
        ++checked;
        if (!good) {
          ok = false;
          why << e.label << " at p=" << p << " failed membership";
          break;
        }
      }
  if (ok)
    why << checked << " entries consistent, powerful, powerfully nilpotent";
  return finish("membership", ok, t, why.str());
}

SuiteResult distinctness_suite(const std::vector<i64>& sweep_primes,
                               u64 node_budget) {
  Timer t;
  bool ok = true;
  u64 nodes = 0;
  int collisions = 0;
  std::ostringstream why;
  for (i64 p : {2, 3})
    for (int x = 4; x <= 6 && ok; ++x) {
      const auto rep =
          iso::verify_distinct(catalog::catalog_for_order(p, x), node_budget);
      nodes += rep.nodes;
      collisions += rep.collision_pairs;
      if (!rep.all_distinct) {
        ok = false;
        why << "catalog p=" << p << " x=" << x << " not pairwise distinct (";
        for (const auto& pr : rep.isomorphic) why << pr.left << "~" << pr.right << " ";
        for (const auto& pr : rep.unresolved) why << pr.left << "?" << pr.right << " ";
        why << "); ";
      }
    }

  // The two unit-parameter groups at order 3^6, separated by raw search.
  if (ok) {
    const auto es = catalog::catalog_for_order(3, 6);
    const catalog::CatalogEntry *e8 = nullptr, *e9 = nullptr;
    for (const auto& e : es) {
      if (e.label == "E8") e8 = &e;
      if (e.label == "E9") e9 = &e;
    }
    if (!e8 || !e9) {
      ok = false;
      why << "missing E8/E9 entries; ";
    } else {
      const PcGroup g8 = e8->build(), g9 = e9->build();
      const auto r = iso::iso_search(g8, g9, node_budget);
      nodes += r.nodes;
      if (r.status != iso::IsoResult::Status::none) {
        ok = false;
        why << "E8 vs E9 search did not exhaust to a negative; ";
      }
    }
  }

  for (i64 p : sweep_primes) {
    if (!ok) break;
    const auto rep = iso::verify_lambda_square(p);
    if (!(rep.preconditions_ok && rep.explicit_isos_ok && rep.partition_ok)) {
      ok = false;
      why << "square-class sweep failed at p=" << p << ": " << rep.detail;
    }
  }
  if (ok)
    why << collisions << " fingerprint collisions resolved, " << nodes
        << " search nodes, square classes verified";
  return finish("distinctness", ok, t, why.str());
}

SuiteResult roundtrip_suite(int max_x) {
  Timer t;
  bool ok = true;
  int checked = 0;
  std::ostringstream why;
  for (int x = 4; x <= max_x && ok; ++x)
    for (const auto& P : rank2::enumerate_rank2(x)) {
      const PcGroup G = rank2::build_group(P, 3);
      if (rank2::structure_invariants(G) != P) {
        ok = false;
        why << "parameter recovery failed for " << P.label();
        break;
      }
      ++checked;
    }
  if (ok) why << checked << " parameter tuples recovered exactly (p=3)";
  return finish("roundtrip", ok, t, why.str());
}

SuiteResult ancestry_suite(const std::vector<i64>& primes, int max_order_exp) {
  Timer t;
  bool ok = true;
  int checked = 0;
  std::ostringstream why;
  for (int x = 4; x <= max_order_exp && ok; ++x)
    for (const auto& P : rank2::enumerate_rank2(x))
      for (i64 p : primes) {
        const auto chk = ancestry::verify_descendant(P, p);
        const auto audit = ancestry::audit_edge(P, p);
        if (!chk.ok || !audit.class_step_ok || !audit.coclass_rule_ok) {
          ok = false;
          why << "ancestry failed for " << P.label() << " at p=" << p << " ("
              << chk.symbolic.label() << " vs " << chk.concrete.label() << ")";
          break;
        }
        ++checked;
      }
  if (ok) why << checked << " descendant edges verified with audits";
  return finish("ancestry", ok, t, why.str());
}

SuiteResult center_suite(int max_order_exp) {
  Timer t;
  const i64 p = 3;
  bool ok = true;
  int checked = 0;
  std::ostringstream why;
  for (int x = 4; x <= max_order_exp && ok; ++x)
    for (const auto& P : rank2::enumerate_rank2(x)) {
      const PcGroup G = rank2::build_group(P, p);
      const i64 q = ipow(p, P.n - P.r);
      const u32 b = G.gen(0), a = G.gen(1);
      const Subgroup want = closure(G, {G.power(a, q), G.power(b, q)});
      const bool center_ok = center(G).elements == want.elements;
      const bool derived_ok =
          derived_subgroup(G).order() == static_cast<u64>(ipow(p, P.n - P.r));
      bool pow_ok = true;
      if (P.variant == rank2::Variant::type_two)
        pow_ok = agemo(G, P.m).order() == static_cast<u64>(ipow(p, P.n - P.l));
      if (!(center_ok && derived_ok && pow_ok)) {
        ok = false;
        why << "subgroup shapes failed for " << P.label();
        break;
      }
      ++checked;
    }
  if (ok)
    why << checked << " groups: center, derived order, and type II power order";
  return finish("center-structure", ok, t, why.str());
}

SuiteResult property_suite() {
  Timer t;
  bool ok = true;
  std::ostringstream why;

  // Fast ascending series: powerfully central, first proper term = center.
  for (i64 p : {2, 3})
    for (int x = 4; x <= 5 && ok; ++x)
      for (const auto& e : catalog::catalog_for_order(p, x)) {
        const PcGroup G = e.build();
        const auto series = upper_series(G);
        if (!is_powerfully_central_chain(G, series) ||
            series.front().order() != 1 ||
            series.size() < 2 || series[1].elements != center(G).elements) {
          ok = false;
          why << "ascending series check failed for " << e.label << " p=" << p;
        }
      }

  // Extraspecial groups of order p^3: neither is powerfully nilpotent, and
  // only the exponent-p^2 one is powerful.
  for (i64 p : {3, 5}) {
    if (!ok) break;
    const PcPresentation expo_p(
        p, {{"a", 1}, {"b", 1}, {"c", 1}}, {{}, {}, {}},
        {{{0, 1}, Word{{1, 1}, {2, 1}}}});
    const PcGroup G1(expo_p);
    const PcPresentation expo_p2(
        p, {{"b", 1}, {"a", 2}}, {{}, {}},
        {{{0, 1}, Word{{1, 1 + p}}}});
    const PcGroup G2(expo_p2);
    if (!G1.consistency_check().ok || !G2.consistency_check().ok ||
        is_powerful(G1) || is_pn(G1) || !is_powerful(G2) || is_pn(G2)) {
      ok = false;
      why << "extraspecial order-p^3 checks failed at p=" << p;
    }
  }

  // Abelian type signatures equal their invariant lists.
  for (i64 p : {2, 3})
    for (int x = 4; x <= 6 && ok; ++x)
      for (const auto& e : catalog::catalog_for_order(p, x)) {
        if (type_signature(e.build()) != e.type_invariants) {
          ok = false;
          why << "type signature mismatch for " << e.label << " p=" << p;
        }
      }

  if (ok)
    why << "series shape, order-p^3 exclusions, and type signatures all hold";
  return finish("properties", ok, t, why.str());
}

std::vector<SuiteResult> run_all(const std::vector<i64>& primes, int max_order_exp,
                                 u64 node_budget) {
  std::vector<i64> odd;
  for (i64 p : primes)
    if (p % 2 == 1) odd.push_back(p);
  if (odd.empty()) odd.push_back(3);

  std::vector<SuiteResult> out;
  out.push_back(counting_suite(200));
  out.push_back(type_one_parity_suite(200));
  out.push_back(type_two_display_suite(8, 200));
  out.push_back(catalog_count_suite(odd));
  out.push_back(membership_suite(primes));
  out.push_back(distinctness_suite({odd.front()}, node_budget));
  out.push_back(roundtrip_suite(std::min(max_order_exp, 12)));
  out.push_back(ancestry_suite(primes, std::min(max_order_exp, 10)));
  out.push_back(center_suite(std::min(max_order_exp, 10)));
  out.push_back(property_suite());
  return out;
}

}  // namespace pnil::verify
