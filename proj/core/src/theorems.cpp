#include "psisum/theorems.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "psisum/canonical.hpp"
#include "psisum/families.hpp"
#include "psisum/primes.hpp"
#include "psisum/psi_formulas.hpp"

namespace psisum {
namespace {

Rational R(std::uint64_t v) { return Rational(BigInt(v)); }
Rational R(const BigInt& v) { return Rational(v); }

BigInt P(std::uint64_t base, std::uint32_t exp) { return big_pow(base, exp); }

std::string str(std::uint64_t v) { return std::to_string(v); }

std::vector<std::uint64_t> primes_upto(std::uint64_t hi) {
  return hi < 2 ? std::vector<std::uint64_t>{} : primes_in_range(2, hi);
}

bool is_prime_power(std::uint64_t m) { return m >= 2 && factorize(m).size() == 1; }

Rational sum_over_cyclic(std::uint64_t n) { return R(psi(build_group(Cyclic{n}))); }

}  // namespace

GroupSpec EqualityWitness::spec() const {
  if (k == 1) return Abelian{{q, q}};
  return DirectProduct{{GroupSpec(Abelian{{q, q}}), GroupSpec(Cyclic{k})}};
}

std::optional<EqualityWitness> expected_equality_witness(std::uint64_t n, std::uint64_t q) {
  if (q < 2 || n % (q * q) != 0) return std::nullopt;
  const std::uint64_t k = n / (q * q);
  if (!all_prime_factors_exceed(k, q)) return std::nullopt;
  return EqualityWitness{n, q, k};
}

VerificationReport verify_max_cyclic(Catalog& catalog, std::uint64_t n) {
  VerificationReport rep;
  rep.claim_id = "max-cyclic";
  rep.scope = "exhaustive";
  rep.param("n", str(n));
  const auto& entries = catalog.groups(n);
  const Rational cyc = R(psi_cyclic(n));
  std::uint64_t cyclic_classes = 0;
  for (const auto& e : entries) {
    if (e.cyclic) {
      ++cyclic_classes;
      rep.add("psi(C_n)", R(e.psi), Relation::Eq, cyc, e.name);
      continue;
    }
    rep.add("psi(G) < psi(C_n)", R(e.psi), Relation::Lt, cyc, e.name);
  }
  rep.add("cyclic classes", R(cyclic_classes), Relation::Eq, R(1));
  if (entries.size() == 1) rep.notes.push_back("only the cyclic class exists at order " + str(n));
  return rep;
}

VerificationReport verify_upper_bound(const Group& g, std::uint64_t q, const std::string& witness) {
  const std::uint64_t n = g.order();
  if (n < 2 || is_cyclic(g)) throw std::invalid_argument("upper bound applies to non-cyclic groups only");
  if (least_prime_divisor(n) != q)
    throw std::invalid_argument(str(q) + " is not the least prime divisor of " + str(n));
  VerificationReport rep;
  rep.claim_id = "upper-bound";
  rep.scope = "exhaustive";
  rep.param("n", str(n)).param("q", str(q));
  rep.add("psi(G) <= f(q) psi(C_n)", R(psi(g)), Relation::Le, f_ratio(q) * R(psi_cyclic(n)), witness);
  if (rep.verdict() == Verdict::Equality) rep.witnesses.push_back(witness);
  return rep;
}

EqualityClassification classify_equality(Catalog& catalog, std::uint64_t n, std::uint64_t q,
                                         bool family_restricted) {
  if (n < 2 || least_prime_divisor(n) != q)
    throw std::invalid_argument(str(q) + " is not the least prime divisor of " + str(n));
  if (!family_restricted && n > catalog.bound())
    throw BoundExceeded("order " + str(n) + " exceeds the enumeration bound " + str(catalog.bound()) +
                        "; use the family-restricted mode");

  EqualityClassification out;
  auto& rep = out.report;
  rep.claim_id = "equality";
  rep.scope = family_restricted ? "family-restricted" : "exhaustive";
  rep.param("n", str(n)).param("q", str(q));
  const Rational bound = f_ratio(q) * R(psi_cyclic(n));
  const auto expected = expected_equality_witness(n, q);
  bool found = false;

  auto record = [&](const std::string& name, std::uint64_t value, bool is_witness) {
    rep.add(is_witness ? "psi(G) = f(q) psi(C_n)" : "psi(G) < f(q) psi(C_n)", R(value),
            is_witness ? Relation::Eq : Relation::Lt, bound, name);
    if (is_witness && R(value) == bound) {
      rep.witnesses.push_back(name);
      found = true;
    }
  };

  if (!family_restricted) {
    std::optional<CanonicalForm> target;
    if (expected) target = canonical_form(build_group(expected->spec()));
    for (const auto& e : catalog.groups(n)) {
      if (e.cyclic) continue;
      record(e.name, e.psi, target && target->table == e.table);
    }
  } else {
    const std::vector<std::uint64_t> witness_invariants =
        expected ? std::vector<std::uint64_t>{q, q * expected->k} : std::vector<std::uint64_t>{};
    for (const auto& spec : family_specs(n)) {
      const Group g = build_group(spec);
      if (is_cyclic(g)) continue;
      const bool is_witness = expected && is_abelian(g) && abelian_invariants(g) == witness_invariants;
      record(to_string(spec), psi(g), is_witness);
    }
    rep.notes.push_back("only groups reachable from the construction families were checked");
  }

  if (expected) {
    rep.add("equality witness present", R(found ? 1 : 0), Relation::Eq, R(1), expected->name());
    if (found) out.witnesses.push_back(*expected);
  } else {
    rep.notes.push_back("n is not q^2 k with all prime divisors of k above q; no equality expected");
  }
  return out;
}

VerificationReport mqr_formula_check(std::uint64_t q, std::uint32_t r, Catalog* catalog) {
  validate(Modular{q, r});
  VerificationReport rep;
  rep.claim_id = "mqr";
  rep.param("q", str(q)).param("r", str(r));
  const BigInt nn = P(q, r);
  const std::uint64_t n = static_cast<std::uint64_t>(nn);
  const Rational formula(P(q, 2 * r) + P(q, 3) - P(q, 2) + 1, BigInt(q + 1));
  rep.add("closed form is an integer", R(formula.denominator()), Relation::Eq, R(1));
  const Modular m{q, r};
  rep.add("psi(M_{q^r}) = closed form", R(psi(build_group(m))), Relation::Eq, formula, to_string(m));
  const GroupSpec a = Abelian{{q, n / q}};
  rep.add("psi(C_q x C_{q^(r-1)}) = closed form", R(psi(build_group(a))), Relation::Eq, formula, to_string(a));
  rep.add("closed form < f(q) psi(C_n)", formula, Relation::Lt, f_ratio(q) * R(psi_cyclic(n)));
  rep.add("q^4 < q^(2r)", R(P(q, 4)), Relation::Lt, R(P(q, 2 * r)));
  if (catalog && n <= catalog->bound()) {
    rep.scope = "exhaustive";
    for (const auto& e : catalog->groups(n)) {
      if (e.cyclic) continue;
      rep.add("psi(G) <= closed form", R(e.psi), Relation::Le, formula, e.name);
    }
  }
  return rep;
}

VerificationReport lemma7_check(Catalog& catalog, std::uint64_t n) {
  VerificationReport rep;
  rep.claim_id = "second-max-index";
  rep.scope = "exhaustive";
  rep.param("n", str(n));
  const auto& entries = catalog.groups(n);
  if (entries.size() < 2) {
    rep.applicable = false;
    rep.notes.push_back("fewer than two classes of order " + str(n));
    return rep;
  }
  const std::uint64_t second = entries[1].psi;
  bool any = false;
  for (const auto& e : entries) {
    if (e.psi != second) continue;
    bool matched = false;
    for (std::uint64_t m : divisors(n)) {
      const std::uint64_t k = n / m;
      if (!is_prime_power(m) || k < 2 || std::gcd(m, k) != 1) continue;
      for (std::uint64_t a = 2; a < m && !matched; ++a) {
        if (std::gcd(a, m) != 1 || pow_mod(a, k, m) != 1) continue;
        const SemidirectCyclic sd{m, k, a};
        const Group g = build_group(sd);
        if (order_profile(g) != e.profile || canonical_form(g).table != e.table) continue;
        matched = true;
        const std::uint64_t index = multiplicative_order(a, m);
        const std::string who = to_string(sd);
        rep.add("[F : C_F(P)] is prime", R(index), Relation::Eq, R(index >= 2 ? least_prime_divisor(index) : 0), who);
        const auto normal = semidirect_normal_part(m, k);
        const auto comp = semidirect_complement(m, k);
        rep.add("|C_F(P)|", R(kernel_of_action(m, k, a)), Relation::Eq, R(centralizer_size(g, normal, comp)), who);
        rep.witnesses.push_back(who);
      }
      if (matched) break;
    }
    if (matched) any = true;
    else rep.notes.push_back(e.name + " has no cyclic-Sylow semidirect decomposition C_m x| C_k");
  }
  if (!any) rep.applicable = false;
  return rep;
}

VerificationReport proof_inequality_audit(std::uint64_t q_max, std::uint64_t p_max, std::uint32_t s_max) {
  VerificationReport rep;
  rep.claim_id = "inequality-audit";
  rep.param("q_max", str(q_max)).param("p_max", str(p_max)).param("s_max", str(s_max));
  const auto qs = primes_upto(q_max);
  const auto ps = primes_upto(p_max);

  for (std::uint64_t q : qs) {
    const std::string w = "q=" + str(q);
    const BigInt q2 = P(q, 2), q3 = P(q, 3), q4 = P(q, 4), q5 = P(q, 5), q6 = P(q, 6), q7 = P(q, 7);
    rep.add("(q^2+q-1)(q^5+1) expansion", R((q2 + q - 1) * (q5 + 1)), Relation::Eq,
            R(q7 + q6 - q5 + q2 + q - 1), w);
    rep.add("(q^3-q+1)(q+1)q^3 expansion", R((q3 - q + 1) * (q + 1) * q3), Relation::Eq, R(q7 + q6 - q5 + q3), w);
    rep.add("(q^7+q^2)-(q^6+q^5-q^4+q^2) factorization", R((q7 + q2) - (q6 + q5 - q4 + q2)), Relation::Eq,
            R(q4 * (q3 - q2 - q + 1)), w);
    rep.add("((q^2-1)q+1)q > (q^2+1)q", R((q3 - q + 1) * q), Relation::Gt, R((q2 + 1) * q), w);
    rep.add("(q^2+1)q > (q^5+1)/q^2", R((q2 + 1) * q), Relation::Gt, Rational(q5 + 1, q2), w);
    rep.add("2q^3+3 < q^4+q^2+q", R(2 * q3 + 3), Relation::Lt, R(q4 + q2 + q), w);

    // (a)
    if (q >= 3) {
      const BigInt c = q4 - q3 + q - 1;
      rep.add("(q^4-q^3+q-1)(q+2) > q^5+1", R(c * (q + 2)), Relation::Gt, R(q5 + 1), w);
      for (std::uint64_t p : ps) {
        if (p < q + 2) continue;
        rep.add("(q^4-q^3+q-1)p > q^5+1", R(c * p), Relation::Gt, R(q5 + 1), w + ",p=" + str(p));
        rep.add("1/p+1/p^2 <= (q+3)/(q+2)^2", Rational(1, p) + Rational(1, BigInt(p) * p), Relation::Le,
                Rational(BigInt(q + 3), BigInt(q + 2) * (q + 2)), w + ",p=" + str(p));
      }
    }

    // (b)
    for (std::uint32_t s = 1; s <= s_max; ++s) {
      rep.add("(r^(2s-1)+1)/(r^(2s+1)+1) <= 1/(r^2-r+1)", Rational(P(q, 2 * s - 1) + 1, P(q, 2 * s + 1) + 1),
              Relation::Le, Rational(1, q2 - q + 1), "r=" + str(q) + ",s=" + str(s));
    }
    for (std::uint64_t r : qs) {
      if (r < q) continue;
      rep.add("1/(r^2-r+1) <= 1/(q^2-q+1)", Rational(1, BigInt(r) * r - r + 1), Relation::Le,
              Rational(1, q2 - q + 1), w + ",r=" + str(r));
    }

    // (c)
    const Rational lhs = Rational(1, q2 - q + 1) + Rational(BigInt(q + 3), BigInt(q + 2) * (q + 2));
    const Rational f = f_ratio(q);
    const Relation c_rel = q == 2 ? Relation::Gt : Relation::Lt;
    rep.add("1/(q^2-q+1) + (q+3)/(q+2)^2 vs f(q)", lhs, c_rel, f, w);
    rep.add("cross-multiplied form", R(lhs.numerator() * f.denominator()), c_rel,
            R(f.numerator() * lhs.denominator()), w);
    if (q >= 3) {
      const Rational t1 = R(q + 1) + Rational((q + 3) * (q3 + 1), q2 + 4 * q + 4);
      const Rational t3 = Rational((q3 - q + 1) * (q4 + q3), q5 + 1);
      rep.add("q+1 + (q+3)(q^3+1)/(q+2)^2 < q^2+2", t1, Relation::Lt, R(q2 + 2), w);
      rep.add("q^2+2 < (q^3-q+1)(q^4+q^3)/(q^5+1)", R(q2 + 2), Relation::Lt, t3, w);
      rep.add("3q^5+q^2+2 < q^6+q^3", R(3 * q5 + q2 + 2), Relation::Lt, R(q6 + q3), w);
      rep.add("(q^3-q+1)(q^4+q^3)/(q^5+1) < (q^3-q+1)(q+1)(q^3+1)/(q^5+1)", t3, Relation::Lt,
              Rational((q3 - q + 1) * (q + 1) * (q3 + 1), q5 + 1), w);
    }

    // (e)
    for (std::uint32_t r = 2; r <= std::max<std::uint32_t>(2, s_max); ++r) {
      const BigInt n = P(q, r);
      const Rational lb = Rational(q2 + q - 1, q2 * (q + 1)) * R(n * n) + Rational(1, BigInt(q + 1));
      const Rational ub = f * R((P(q, 2 * r + 1) + 1) / (q + 1));
      rep.add("(q^2+q-1)/(q^2(q+1)) n^2 + 1/(q+1) <= f(q) psi(C_n)", lb, Relation::Le, ub,
              w + ",n=q^" + std::to_string(r));
      if (r >= 3) {
        rep.add("M_{q^r} closed form below f(q) psi(C_{q^r})", R((P(q, 2 * r) + q3 - q2 + 1) * (q5 + 1)),
                Relation::Lt, R((q4 + q3 - q2 + 1) * (P(q, 2 * r + 1) + 1)), w + ",r=" + std::to_string(r));
      }
    }
  }

  // (d)
  rep.add("1/3 + 6/25", Rational(1, 3) + Rational(6, 25), Relation::Eq, Rational(43, 75));
  rep.add("43/75 < 7/11", Rational(43, 75), Relation::Lt, Rational(7, 11));
  rep.add("(q+4)/(q+3)^2 at q=2", Rational(6, 25), Relation::Eq, Rational(6, 25));
  for (std::uint64_t p : ps) {
    if (p < 5) continue;
    const std::string w = "p=" + str(p);
    rep.add("1/p + 1/p^2 <= 6/25", Rational(1, p) + Rational(1, BigInt(p) * p), Relation::Le, Rational(6, 25), w);
    for (std::uint32_t s = 1; s <= s_max; ++s) {
      const BigInt size = P(p, s);
      const Rational ratio = Rational(size, psi_cyclic_prime_power(p, s));
      const Rational mid = Rational(BigInt(p + 1), size * p);
      rep.add("|P|/psi(P) < (p+1)/(p|P|)", ratio, Relation::Lt, mid, w + ",s=" + std::to_string(s));
      rep.add("(p+1)/(p|P|) <= (p+1)/p^2", mid, Relation::Le, Rational(BigInt(p + 1), BigInt(p) * p),
              w + ",s=" + std::to_string(s));
    }
  }
  rep.notes.push_back("the combined bound 1/(q^2-q+1) + (q+3)/(q+2)^2 < f(q) is expected to fail at q = 2");
  return rep;
}

VerificationReport psi_cyclic_check(std::uint64_t n_max) {
  VerificationReport rep;
  rep.claim_id = "psi-cyclic";
  rep.param("n_max", str(n_max));
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const Rational closed = R(psi_cyclic(n));
    const std::string w = "C" + str(n);
    rep.add("closed form = divisor sum", closed, Relation::Eq, R(psi_cyclic_oracle(n)), w);
    rep.add("closed form = brute force", closed, Relation::Eq, sum_over_cyclic(n), w);
    rep.add("psi(C_n) is odd", R(psi_cyclic(n) % 2), Relation::Eq, R(1), w);
  }
  return rep;
}

VerificationReport cyclic_lower_bound_check(std::uint64_t n_max) {
  VerificationReport rep;
  rep.claim_id = "cyclic-lower-bound";
  rep.param("n_max", str(n_max));
  for (std::uint64_t n = 2; n <= n_max; ++n)
    rep.add("psi(C_n) >= q n^2/(p+1)", R(psi_cyclic(n)), Relation::Ge, cyclic_lower_bound(n), "C" + str(n));
  return rep;
}

VerificationReport coprime_product_check(std::uint64_t max_order, std::size_t pairs, std::uint64_t seed) {
  VerificationReport rep;
  rep.claim_id = "coprime-product";
  rep.param("max_order", str(max_order)).param("pairs", str(pairs)).param("seed", str(seed));
  std::vector<GroupSpec> pool;
  for (std::uint64_t n = 2; n <= std::min<std::uint64_t>(max_order / 2, 24); ++n)
    for (auto& s : family_specs(n)) pool.push_back(std::move(s));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::size_t done = 0;
  for (std::size_t attempt = 0; done < pairs && attempt < pairs * 200; ++attempt) {
    const auto& a = pool[pick(rng)];
    const auto& b = pool[pick(rng)];
    const std::uint64_t na = *declared_order(a), nb = *declared_order(b);
    if (std::gcd(na, nb) != 1 || na * nb > max_order) continue;
    const GroupSpec ab = DirectProduct{{a, b}};
    rep.add("psi(A x B) = psi(A) psi(B)", R(psi(build_group(ab))), Relation::Eq,
            R(psi(build_group(a))) * R(psi(build_group(b))), to_string(ab));
    ++done;
  }
  return rep;
}

VerificationReport semidirect_bound_check(std::uint64_t mk_max) {
  VerificationReport rep;
  rep.claim_id = "semidirect-bound";
  rep.param("mk_max", str(mk_max));
  for (std::uint64_t m = 2; 2 * m <= mk_max; ++m) {
    if (!is_prime_power(m)) continue;
    for (std::uint64_t k = 2; m * k <= mk_max; ++k) {
      if (std::gcd(m, k) != 1) continue;
      for (std::uint64_t a = 1; a < m; ++a) {
        if (std::gcd(a, m) != 1 || pow_mod(a, k, m) != 1) continue;
        const SemidirectCyclic sd{m, k, a};
        const Group g = build_group(sd);
        const Rational rhs = R(psi_cyclic(m)) * R(psi_cyclic(k));
        rep.add(a == 1 ? "psi(G) = psi(P) psi(F)" : "psi(G) < psi(P) psi(F)", R(psi(g)),
                a == 1 ? Relation::Eq : Relation::Lt, rhs, to_string(sd));
        const Group quotient = quotient_by_cyclic(g, semidirect_element(m, 1, 0));
        rep.add("G/P cyclic of order k", R(is_cyclic(quotient) && quotient.order() == k ? 1 : 0), Relation::Eq,
                R(1), to_string(sd));
      }
    }
  }
  return rep;
}

VerificationReport centralizer_bound_check(std::uint64_t mk_max) {
  VerificationReport rep;
  rep.claim_id = "centralizer-bound";
  rep.param("mk_max", str(mk_max));
  for (std::uint64_t m = 2; 2 * m <= mk_max; ++m) {
    if (!is_prime_power(m)) continue;
    for (std::uint64_t k = 2; m * k <= mk_max; ++k) {
      if (std::gcd(m, k) != 1) continue;
      for (std::uint64_t a = 1; a < m; ++a) {
        if (std::gcd(a, m) != 1 || pow_mod(a, k, m) != 1) continue;
        const SemidirectCyclic sd{m, k, a};
        const Group g = build_group(sd);
        const std::uint64_t c = kernel_of_action(m, k, a);
        const auto normal = semidirect_normal_part(m, k);
        const auto comp = semidirect_complement(m, k);
        rep.add("|C_F(P)| = k / ord_m(a)", R(c), Relation::Eq, R(centralizer_size(g, normal, comp)), to_string(sd));
        const Rational bound = R(psi_cyclic(m)) * R(psi_cyclic(c)) + R(m) * R(psi_cyclic(k));
        rep.add("psi(G) < psi(P) psi(Z) + |P| psi(F)", R(psi(g)), Relation::Lt, bound,
                to_string(sd));
      }
    }
  }
  return rep;
}

VerificationReport f_monotonicity_check(std::uint64_t q_max) {
  VerificationReport rep;
  rep.claim_id = "f-monotone";
  rep.param("q_max", str(q_max));
  rep.add("f(2)", f_ratio(2), Relation::Eq, Rational(7, 11));
  rep.add("f(3)", f_ratio(3), Relation::Eq, Rational(25, 61));
  const auto qs = primes_upto(q_max);
  for (std::size_t i = 0; i < qs.size(); ++i) {
    rep.add("f(q) < 1", f_ratio(qs[i]), Relation::Lt, R(1), "q=" + str(qs[i]));
    if (i + 1 < qs.size())
      rep.add("f(q) > f(q')", f_ratio(qs[i]), Relation::Gt, f_ratio(qs[i + 1]),
              "q=" + str(qs[i]) + ",q'=" + str(qs[i + 1]));
  }
  for (std::uint64_t x = 2; x < q_max; ++x)
    rep.add("f(x) > f(x+1)", f_rational(x), Relation::Gt, f_rational(x + 1), "x=" + str(x));
  return rep;
}

VerificationReport second_maximal_family_check(std::uint64_t q, std::uint64_t k_max) {
  if (!is_prime(q)) throw std::invalid_argument(str(q) + " is not prime");
  VerificationReport rep;
  rep.claim_id = "equality-family";
  rep.param("q", str(q)).param("k_max", str(k_max));
  std::uint64_t q_factorial_part = 1;  // product of primes <= q, same prime support as q!
  for (std::uint64_t p : primes_upto(q)) q_factorial_part *= p;
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    const EqualityWitness w{q * q * k, q, k};
    const Group g = build_group(w.spec());
    const Rational value = R(psi(g));
    const Rational cyc = sum_over_cyclic(w.n);
    const bool coprime = all_prime_factors_exceed(k, q);
    if (coprime) {
      rep.add("psi = f(q) psi(C_n)", value, Relation::Eq, f_ratio(q) * cyc, w.name());
      rep.witnesses.push_back(w.name());
    } else if (k % q == 0) {
      rep.add("q | k: psi != f(q) psi(C_n)", value, Relation::Ne, f_ratio(q) * cyc, w.name());
    } else {
      // A smaller prime divides k, so the least prime of n is below q.
      const std::uint64_t least = least_prime_divisor(k);
      rep.add("psi = f(q) psi(C_n) by multiplicativity", value, Relation::Eq, f_ratio(q) * cyc, w.name());
      rep.add("least prime " + str(least) + ": psi < f(" + str(least) + ") psi(C_n)", value, Relation::Lt,
              f_ratio(least) * cyc, w.name());
    }
    rep.add("(k, q!) = 1 iff primes of k exceed q", R(std::gcd(k, q_factorial_part) == 1 ? 1 : 0), Relation::Eq,
            R(coprime ? 1 : 0), "k=" + str(k));
  }
  return rep;
}

VerificationReport q8_comparison(Catalog* catalog) {
  VerificationReport rep;
  rep.claim_id = "q8";
  const GroupSpec q8 = GeneralizedQuaternion{8};
  const Rational value = R(psi(build_group(q8)));
  rep.add("psi(Q8)", value, Relation::Eq, R(27), "Q8");
  rep.add("psi(C8)", R(psi_cyclic(8)), Relation::Eq, R(43), "C8");
  rep.add("psi(Q8) < (7/11) psi(C8)", value, Relation::Lt, Rational(7, 11) * R(psi_cyclic(8)), "Q8");
  if (catalog && catalog->bound() >= 8) {
    rep.scope = "exhaustive";
    for (const auto& e : catalog->groups(8))
      if (!e.cyclic) rep.add("psi(G) <= psi(Q8)", R(e.psi), Relation::Le, value, e.name);
  }
  return rep;
}

VerificationReport seven_elevenths_check(Catalog& catalog, std::uint64_t n_max) {
  VerificationReport rep;
  rep.claim_id = "seven-elevenths";
  rep.scope = "exhaustive";
  rep.param("n_max", str(n_max));
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const Rational bound = Rational(7, 11) * R(psi_cyclic(n));
    std::optional<CanonicalForm> target;
    if (n % 4 == 0 && (n / 4) % 2 == 1) target = canonical_form(build_group(EqualityWitness{n, 2, n / 4}.spec()));
    for (const auto& e : catalog.groups(n)) {
      if (e.cyclic) continue;
      const bool w = target && target->table == e.table;
      const std::string label = w ? ": psi(G) = (7/11) psi(C_n)" : ": psi(G) < (7/11) psi(C_n)";
      rep.add("n=" + str(n) + label, R(e.psi), w ? Relation::Eq : Relation::Lt, bound, e.name);
      if (w) rep.witnesses.push_back(e.name);
    }
  }
  return rep;
}

VerificationReport equality_catalog_check(Catalog& catalog, std::uint64_t n_max, std::optional<std::uint64_t> q) {
  VerificationReport rep;
  rep.claim_id = "equality-classification";
  rep.scope = "exhaustive";
  rep.param("n_max", str(n_max));
  if (q) rep.param("q", str(*q));
  for (std::uint64_t n = 2; n <= n_max; ++n) {
    const std::uint64_t least = least_prime_divisor(n);
    if (q && least != *q) continue;
    auto part = classify_equality(catalog, n, least).report;
    for (auto& c : part.checks) c.label = "n=" + str(n) + ": " + c.label;
    for (auto& note : part.notes) note = "n=" + str(n) + ": " + note;
    merge_into(rep, part);
  }
  return rep;
}

}  // namespace psisum
