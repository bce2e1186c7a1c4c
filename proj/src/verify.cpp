#include "almukai/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

#include "almukai/errors.hpp"
#include "almukai/halfplane.hpp"

namespace almukai {

void VerifyConfig::validate() const {
  if (d_min < 1) throw InvalidArgument("d-min must be at least 1");
  if (d_max < d_min) throw InvalidArgument("d-max must not be below d-min");
  if (samples_per_coset < 1) throw InvalidArgument("samples must be at least 1");
  if (!(tolerance >= 0) || !std::isfinite(tolerance)) {
    throw InvalidArgument("tolerance must be a finite nonnegative number");
  }
}

std::size_t LevelReport::failure_count() const {
  std::size_t total = dolgachev.failures.size();
  for (const auto& c : checks) total += c.failures.size();
  return total;
}

Rng level_rng(std::uint64_t seed, const Integer& d, std::uint64_t stream) {
  const auto level = d.convert_to<std::uint64_t>();
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(level), static_cast<std::uint32_t>(level >> 32),
                    static_cast<std::uint32_t>(stream)};
  return Rng(seq);
}

HalfPlanePoint random_point(Rng& rng) {
  std::uniform_real_distribution<double> real(-2.0, 2.0);
  std::uniform_real_distribution<double> imag(0.1, 3.0);
  const double u = real(rng);
  return HalfPlanePoint::make(u, imag(rng));
}

InducedTransform random_composite(const Integer& d, Rng& rng, int steps) {
  std::vector<InducedTransform> generators;
  for (const auto& div : exact_divisors(d)) {
    const InducedTransform t = induced_transform(d, div.s());
    generators.push_back(t);
    generators.push_back(inverse(t));
  }
  for (const auto& label : partner_census(d).labels) {
    const int m = std::uniform_int_distribution<int>(-3, 3)(rng);
    generators.push_back(translation_transform(label, m));
    generators.push_back(autoequivalence(label, random_al(d, 1, rng)));
    generators.push_back(autoequivalence(label, random_al(d, d, rng)));
  }
  auto pick = [&](const std::vector<const InducedTransform*>& pool) -> const InducedTransform& {
    return *pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
  };
  std::vector<const InducedTransform*> all;
  for (const auto& g : generators) all.push_back(&g);
  InducedTransform current = pick(all);
  for (int i = 0; i < steps; ++i) {
    std::vector<const InducedTransform*> pool;
    for (const auto& g : generators)
      if (g.target == current.source) pool.push_back(&g);
    current = compose(current, pick(pool));
  }
  return current;
}

namespace {

class Check {
 public:
  explicit Check(std::string name, bool floating = false) {
    result_.name = std::move(name);
    if (floating) result_.max_defect = 0.0;
  }

  void pass() { ++result_.checked; }
  void fail(std::string input, std::string detail) {
    ++result_.checked;
    result_.failures.push_back({std::move(input), std::move(detail)});
  }
  void expect(bool ok, const std::string& input, const std::string& detail) {
    ok ? pass() : fail(input, detail);
  }
  // Floating check against tolerance; NaN fails.
  void within(double defect, double tolerance, const std::string& input) {
    if (!std::isnan(defect)) result_.max_defect = std::max(*result_.max_defect, defect);
    expect(defect <= tolerance, input, "defect " + std::to_string(defect));
  }
  // Runs body, recording any library error as a failure.
  void guarded(const std::string& input, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& ex) {
      fail(input, ex.what());
    }
  }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string label_input(const Integer& d, const Integer& r) {
  return "d=" + to_string(d) + ", r=" + to_string(r);
}

CheckResult check_census(const Integer& d) {
  Check check("census");
  const PartnerCensus census = partner_census(d);
  const std::size_t omega = factorize(d).distinct_primes();
  const Integer formula = d == 1 ? Integer(1) : pow2(omega - 1);
  const std::size_t cosets = fricke_coset_count(d);
  check.expect(Integer(census.fm_number) == formula && census.fm_number == cosets,
               "d=" + to_string(d),
               "fm_number " + std::to_string(census.fm_number) + ", [AL:Fr] " +
                   std::to_string(cosets) + ", formula " + to_string(formula));
  return check.take();
}

CheckResult check_induced(const Integer& d) {
  Check check("induced_transforms");
  for (const auto& div : exact_divisors(d)) {
    const Integer& r = div.s();
    const std::string input = label_input(d, r);
    check.guarded(input, [&] {
      const Integer n = derive_n_Y(d, r);
      const bool integral = (r + d * n) % (r * r) == 0;
      const InducedTransform t = induced_transform(d, r);
      const Integer level = d / r;
      const ALElement& w = t.image;
      const bool det_ok = w.a() * w.e() * w.s() - w.b() * w.c() * w.co_level() == 1;
      const bool level_ok = w.s() == level && classify_coset(represent(w)).s == level;
      const bool partner_ok = same_partner(t) == (t.source == t.target);
      check.expect(integral && det_ok && level_ok && partner_ok, input,
                   "integral=" + std::to_string(integral) + " det=" + std::to_string(det_ok) +
                       " level=" + std::to_string(level_ok) +
                       " partner=" + std::to_string(partner_ok));
    });
  }
  return check.take();
}

CheckResult check_groupoid(const Integer& d, std::size_t samples, Rng& rng) {
  Check check("groupoid_closure");
  for (std::size_t i = 0; i < samples; ++i) {
    const int steps = std::uniform_int_distribution<int>(1, 6)(rng);
    check.guarded("d=" + to_string(d), [&] {
      const InducedTransform t = random_composite(d, rng, steps);
      check.expect(same_partner(t) == (t.source == t.target), t.image.to_string(),
                   t.source.moduli() + " -> " + t.target.moduli());
    });
  }
  return check.take();
}

CheckResult check_kawlem(const Integer& d, std::size_t samples, double tol, Rng& rng) {
  Check check("kawlem_action", true);
  for (const auto& div : exact_divisors(d)) {
    const InducedTransform t = induced_transform(d, div.s());
    for (std::size_t i = 0; i < samples; ++i) {
      const HalfPlanePoint z = random_point(rng);
      check.guarded(label_input(d, div.s()), [&] {
        const Complex lhs = kawlem_action(d, t.r, t.n_Y, t.n_X, z).z();
        const Complex rhs = mobius(t.image, z).z();
        check.within(std::abs(lhs - rhs) / std::abs(rhs), tol, label_input(d, div.s()));
      });
    }
  }
  return check.take();
}

CheckResult check_central_charge(const Integer& d, std::size_t samples, double tol, Rng& rng) {
  Check check("central_charge_product", true);
  for (const auto& div : exact_divisors(d)) {
    const InducedTransform t = induced_transform(d, div.s());
    const MukaiVector v_y = preimage_of_point(t);
    const MukaiVector v_x = image_of_point(t);
    for (std::size_t i = 0; i < samples; ++i) {
      const HalfPlanePoint z = random_point(rng);
      check.guarded(label_input(d, div.s()), [&] {
        const HalfPlanePoint w = mobius(t.image, z);
        const Complex product =
            central_charge(z.u(), z.v(), v_y) * central_charge(w.u(), w.v(), v_x);
        check.within(std::abs(product - 1.0), tol, label_input(d, div.s()));
      });
    }
  }
  return check.take();
}

CheckResult check_equivariance(const Integer& d, std::size_t samples, double tol, Rng& rng) {
  Check check("equivariance", true);
  for (const auto& div : exact_divisors(d)) {
    for (std::size_t i = 0; i < samples; ++i) {
      const ALElement w = random_al(d, div.s(), rng);
      const HalfPlanePoint z = random_point(rng);
      check.guarded(w.to_string(),
                    [&] { check.within(equivariance_defect(w, z), tol, w.to_string()); });
    }
  }
  return check.take();
}

}  // namespace

LevelReport verify_level(const Integer& d, const VerifyConfig& config) {
  LevelReport report;
  report.d = d;
  const std::size_t n = config.samples_per_coset;
  Rng dolgachev_rng = level_rng(config.seed, d, 0);
  report.dolgachev = verify_dolgachev(d, n, dolgachev_rng);
  report.checks.push_back(check_census(d));
  report.checks.push_back(check_induced(d));
  Rng groupoid_rng = level_rng(config.seed, d, 1);
  report.checks.push_back(check_groupoid(d, n, groupoid_rng));
  Rng kawlem_rng = level_rng(config.seed, d, 2);
  report.checks.push_back(check_kawlem(d, n, config.tolerance, kawlem_rng));
  Rng charge_rng = level_rng(config.seed, d, 3);
  report.checks.push_back(check_central_charge(d, n, config.tolerance, charge_rng));
  Rng equivariance_rng = level_rng(config.seed, d, 4);
  report.checks.push_back(check_equivariance(d, n, config.tolerance, equivariance_rng));
  return report;
}

std::vector<LevelReport> run_verify(const VerifyConfig& config) {
  config.validate();
  std::vector<Integer> levels;
  for (Integer d = config.d_min; d <= config.d_max; ++d) levels.push_back(d);
  std::vector<LevelReport> reports(levels.size());

  unsigned workers = config.threads ? config.threads : std::thread::hardware_concurrency();
  workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(levels.size()));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < levels.size(); i = next++) {
      reports[i] = verify_level(levels[i], config);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  return reports;
}

}  // namespace almukai
