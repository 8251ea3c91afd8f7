#include <algorithm>
#include <set>
#include <sstream>

#include "rhh/error.hpp"
#include "terms.hpp"

namespace rhh {

namespace {

using Record = std::array<int, 2>;

constexpr std::array<Record, 4> kCandidates{{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};

enum class Family { Rel1, Rel2, Turchin };

struct ClassState {
  ClassState(Family fam, int i) : family(fam), index(i) {}

  Family family;
  int index;  // parity class or n
  std::vector<int> alive{0, 1, 2, 3};
  std::set<std::uint32_t> odd_primes;

  std::string label() const {
    std::ostringstream os;
    if (family == Family::Rel1) {
      os << "rel1(" << (index >> 1) << "," << (index & 1) << ")";
    } else if (family == Family::Rel2) {
      os << "rel2(" << (index >> 2) << "," << ((index >> 1) & 1) << "," << (index & 1) << ")";
    } else {
      os << "turchin(n=" << index << ")";
    }
    return os.str();
  }

  template <class Holds>
  void observe(std::uint32_t p, Holds&& holds) {
    if (p != 2) odd_primes.insert(p);
    std::erase_if(alive, [&](int c) { return !holds(kCandidates[static_cast<std::size_t>(c)]); });
  }

  // What a record predicts on the data seen: records with equal keys are indistinguishable.
  std::vector<int> key(int c) const {
    const Record& r = kCandidates[static_cast<std::size_t>(c)];
    if (odd_primes.empty()) return {};
    if (family != Family::Turchin) return {r[0], r[1]};
    std::vector<int> k;
    const int n = index;
    for (std::uint32_t p : odd_primes) {
      PrimeField f(p);
      for (int i = 1; i < n; ++i) {
        if (f.binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)) == 0) continue;
        k.push_back(static_cast<int>(p) * 100 + i * 2 + ((r[0] + n * i + r[1] * i) & 1));
      }
    }
    return k;
  }

  // Returns the kept record; throws when no record or two distinguishable records survive.
  Record resolve(std::vector<std::string>& undetermined) const {
    if (alive.empty())
      throw Error(ErrorCode::NoConsistentConvention, "no sign record satisfies " + label() + " on the samples");
    const auto k0 = key(alive.front());
    for (int c : alive)
      if (key(c) != k0)
        throw Error(ErrorCode::AmbiguousConvention, "several sign records survive for " + label());
    if (odd_primes.empty()) undetermined.push_back(label());
    return kCandidates[static_cast<std::size_t>(alive.front())];
  }
};

}  // namespace

SignConvention resolve_signs(const std::vector<FDCategory>& algebras, const ResolveOptions& opt) {
  if (algebras.empty()) throw Error(ErrorCode::BadParameter, "resolve_signs needs at least one algebra");
  std::vector<ClassState> rel1, rel2, turchin;
  for (int i = 0; i < 4; ++i) rel1.emplace_back(Family::Rel1, i);
  for (int i = 0; i < 8; ++i) rel2.emplace_back(Family::Rel2, i);
  for (int n = 2; n <= 5; ++n) turchin.emplace_back(Family::Turchin, n);

  const int maxd = opt.max_rel_degree;
  for (std::size_t ai = 0; ai < algebras.size(); ++ai) {
    CochainComplex cx(algebras[ai]);
    const PrimeField& f = cx.field();
    const std::uint32_t p = f.p();
    std::seed_seq seq{opt.seed, static_cast<std::uint64_t>(ai)};
    Rng rng(seq);
    const bool deg3 = algebras[ai].dim() <= 3;
    for (std::size_t trial = 0; trial < opt.trials; ++trial) {
      for (int dx = 0; dx <= maxd; ++dx) {
        for (int dy = 0; dy <= maxd; ++dy) {
          if (dx + dy == 0) continue;
          Cochain x = cx.random(dx, rng, false);
          Cochain y = cx.random(dy, rng, false);
          auto t = detail::rel1_terms(cx, x, y, opt.harness);
          rel1[static_cast<std::size_t>(detail::parity_class(dx, dy))].observe(
              p, [&](const Record& r) { return detail::rel1_holds(f, t, r[0], r[1]); });
        }
      }
      for (int dx = 0; dx <= maxd; ++dx) {
        for (int dy = 0; dy <= maxd; ++dy) {
          for (int dz = 1; dz <= maxd; ++dz) {
            Cochain x = cx.random(dx, rng, false);
            Cochain y = cx.random(dy, rng, false);
            Cochain z = cx.random(dz, rng, false);
            auto t = detail::rel2_terms(cx, x, y, z, opt.harness);
            rel2[static_cast<std::size_t>(detail::parity_class(dx, dy, dz))].observe(
                p, [&](const Record& r) { return detail::rel2_holds(f, t, r[0], r[1]); });
          }
        }
      }
      for (int deg : {1, 3}) {
        if (deg == 3 && !deg3) continue;
        Cochain x = random_cocycle(cx, deg, rng);
        for (int n = 2; n <= 5; ++n) {
          auto t = detail::turchin_terms(cx, x, n, opt.harness);
          turchin[static_cast<std::size_t>(n - 2)].observe(
              p, [&](const Record& r) { return detail::turchin_holds(f, t, n, r[0], r[1]); });
        }
      }
    }
  }

  SignConvention c;
  for (int i = 0; i < 4; ++i) c.rel1[static_cast<std::size_t>(i)] = rel1[static_cast<std::size_t>(i)].resolve(c.undetermined);
  for (int i = 0; i < 8; ++i) c.rel2[static_cast<std::size_t>(i)] = rel2[static_cast<std::size_t>(i)].resolve(c.undetermined);
  for (int n = 2; n <= 5; ++n)
    c.turchin[static_cast<std::size_t>(n)] = turchin[static_cast<std::size_t>(n - 2)].resolve(c.undetermined);
  return c;
}

std::vector<FDCategory> resolution_algebras() {
  return {truncated_poly(2, 2), truncated_poly(3, 3), qci(3, 2, 2, 2), truncated_poly(5, 5)};
}

const SignConvention& default_convention() {
  static const SignConvention c = resolve_signs(resolution_algebras());
  return c;
}

std::string describe(const SignConvention& c) {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    const auto& r = c.rel1[static_cast<std::size_t>(i)];
    os << "rel1 |x|=" << (i >> 1) << " |y|=" << (i & 1) << " (mod 2): a=" << r[0] << " b=" << r[1] << "\n";
  }
  for (int i = 0; i < 8; ++i) {
    const auto& r = c.rel2[static_cast<std::size_t>(i)];
    os << "rel2 |x|=" << (i >> 2) << " |y|=" << ((i >> 1) & 1) << " |z|=" << (i & 1) << " (mod 2): c=" << r[0]
       << " d=" << r[1] << "\n";
  }
  for (int n = 2; n <= 5; ++n) {
    const auto& r = c.turchin[static_cast<std::size_t>(n)];
    os << "turchin n=" << n << ": e=" << r[0] << " k=" << r[1] << "\n";
  }
  for (const auto& u : c.undetermined) os << "undetermined: " << u << "\n";
  return os.str();
}

}  // namespace rhh
