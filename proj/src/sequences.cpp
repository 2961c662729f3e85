#include <charconv>
#include <stdexcept>

#include "kmd/sequences.hpp"

namespace kmd {

namespace {

Natural factorial(std::uint64_t k) {
  Natural out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

Rational at_least_two(const Natural& x) { return x < 2 ? Rational(2) : Rational(x); }

bool is_cantor(const MissingDigitSet& set) {
  return set.base() == 3 && set.digits() == std::vector<unsigned>{0, 2};
}

void require_coprime(unsigned base, const Natural& p0) {
  if (Natural(base) % p0 == 0) throw std::invalid_argument("auxiliary prime must not divide m");
}

}  // namespace

PolynomialSpec::PolynomialSpec(std::vector<long> coefficients) {
  std::size_t lead = 0;
  while (lead < coefficients.size() && coefficients[lead] == 0) ++lead;
  coefficients_.assign(coefficients.begin() + static_cast<std::ptrdiff_t>(lead), coefficients.end());
  if (coefficients_.empty()) coefficients_.push_back(0);
}

PolynomialSpec PolynomialSpec::parse(std::string_view text) {
  std::vector<long> coefficients;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    long value = 0;
    const char* begin = token.data();
    if (!token.empty() && token.front() == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw std::invalid_argument("bad polynomial coefficient '" + std::string(token) + "'");
    }
    coefficients.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (coefficients.empty()) throw std::invalid_argument("empty polynomial");
  return PolynomialSpec(std::move(coefficients));
}

Natural PolynomialSpec::coefficient_norm() const {
  Natural sum = 0;
  for (long c : coefficients_) sum += Natural(c < 0 ? -c : c);
  return sum;
}

mpz_class PolynomialSpec::eval(std::uint64_t k) const {
  mpz_class acc = 0;
  for (long c : coefficients_) acc = acc * k + c;
  return acc;
}

std::string PolynomialSpec::to_string() const {
  std::string out;
  const std::size_t d = degree();
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const long c = coefficients_[i];
    const std::size_t power = d - i;
    if (c == 0 && !(d == 0)) continue;
    const unsigned long magnitude = c < 0 ? -static_cast<unsigned long>(c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (magnitude != 1 || power == 0) out += std::to_string(magnitude);
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

AuxiliaryPrime find_auxiliary_prime(const PolynomialSpec& f, unsigned base, std::uint64_t search_limit) {
  if (f.degree() == 0) throw std::invalid_argument("find_auxiliary_prime: f must be nonconstant");
  const Natural m = base;
  for (std::uint64_t k = 1; k <= search_limit; ++k) {
    const mpz_class value = abs(f.eval(k));
    if (value == 0) continue;
    for (const auto& [p, e] : factorize(value)) {
      if (m % p != 0) return {p, Natural(k) % p, k};
    }
  }
  throw std::runtime_error("find_auxiliary_prime: search limit exhausted");
}

Natural FamilySpec::value(std::uint64_t n) const {
  Natural out = 1;
  for (std::uint64_t k = 1; k <= n; ++k) out *= term(k);
  return out;
}

Natural default_auxiliary_prime(unsigned base) {
  Natural p = 2;
  while (Natural(base) % p == 0) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  return p;
}

FamilySpec factorial_family(const MissingDigitSet& set, std::optional<Natural> p0) {
  const Natural prime = p0.value_or(default_auxiliary_prime(set.base()));
  require_coprime(set.base(), prime);
  FamilySpec family{"factorial", "a_n = n!", ObstructionParams::make(set, prime), {}, {}, {}, {}};
  family.term = [](std::uint64_t k) { return Natural(k); };
  const unsigned long p = prime.get_ui();
  family.bounds.kind = BoundKind::LargestPrime;
  family.bounds.alpha = [p](std::uint64_t n) { return factorial_valuation(Natural(n), p).get_si(); };
  family.bounds.beta = [](std::uint64_t n) { return at_least_two(Natural(n)); };
  if (set.base() == 3 && prime == 2) family.certified_cutoff = 10;
  if (is_cantor(set) && prime == 2) family.known_members = std::set<std::uint64_t>{1, 5};
  return family;
}

FamilySpec superfactorial_family(const MissingDigitSet& set, std::optional<Natural> p0) {
  const Natural prime = p0.value_or(default_auxiliary_prime(set.base()));
  require_coprime(set.base(), prime);
  FamilySpec family{"superfactorial", "a_n = 1! 2! ... n!", ObstructionParams::make(set, prime),
                    {}, {}, {}, {}};
  family.term = [](std::uint64_t k) { return factorial(k); };
  const unsigned long p = prime.get_ui();
  family.bounds.kind = BoundKind::LargestPrime;
  family.bounds.alpha = [p](std::uint64_t n) {
    std::int64_t sum = 0;
    for (std::uint64_t k = 1; k <= n; ++k) sum += factorial_valuation(Natural(k), p).get_si();
    return sum;
  };
  family.bounds.beta = [](std::uint64_t n) { return at_least_two(Natural(n)); };
  if (set.base() == 3 && prime == 2) family.certified_cutoff = 5;
  if (is_cantor(set) && prime == 2) family.known_members = std::set<std::uint64_t>{1, 3};
  return family;
}

FamilySpec polynomial_family(const PolynomialSpec& f, const MissingDigitSet& set) {
  if (f.degree() == 0) throw std::invalid_argument("polynomial family needs a nonconstant f");
  if (f.coefficients().front() <= 0) {
    throw std::invalid_argument("polynomial family needs a positive leading coefficient");
  }
  for (std::uint64_t k = 1; k <= 10'000; ++k) {
    if (sgn(f.eval(k)) <= 0) {
      throw std::invalid_argument("polynomial must be positive on k >= 1 (fails at k = " +
                                  std::to_string(k) + ")");
    }
  }
  const AuxiliaryPrime aux = find_auxiliary_prime(f, set.base());
  FamilySpec family{"polynomial", "a_n = prod_{k<=n} f(k), f = " + f.to_string(),
                    ObstructionParams::make(set, aux.p0), {}, {}, {}, {}};
  family.term = [f](std::uint64_t k) { return Natural(f.eval(k)); };
  const Natural p0 = aux.p0;
  const Natural norm = f.coefficient_norm();
  const std::size_t d = f.degree();
  family.bounds.kind = BoundKind::LargestPrime;
  family.bounds.alpha = [p0](std::uint64_t n) { return Natural(Natural(n) / p0).get_si(); };
  family.bounds.beta = [norm, d](std::uint64_t n) {
    Natural power;
    mpz_pow_ui(power.get_mpz_t(), Natural(n).get_mpz_t(), d);
    return at_least_two(norm * power);
  };
  if (f == PolynomialSpec({1, 0, 1}) && set.base() == 3) family.certified_cutoff = 30;
  if (f == PolynomialSpec({1, 0, 1}) && is_cantor(set)) family.known_members = std::set<std::uint64_t>{2};
  return family;
}

FamilySpec fibonacci_family(const MissingDigitSet& set) {
  if (set.base() % 2 == 0) throw std::invalid_argument("Fibonacci family needs an odd base");
  FamilySpec family{"fibonacci", "a_n = F_1 F_2 ... F_n", ObstructionParams::make(set, Natural(2)),
                    {}, {}, {}, {}};
  family.term = [](std::uint64_t k) { return fibonacci(k); };
  family.bounds.kind = BoundKind::LargestPrime;
  family.bounds.alpha = [](std::uint64_t n) { return fib_alpha(n); };
  // P+(Q_n) <= max_{k<=n} F_k = F_n, an exact stand-in for phi^n.
  family.bounds.beta = [](std::uint64_t n) { return at_least_two(fibonacci(n)); };
  if (set.base() == 3) family.certified_cutoff = 106;
  if (is_cantor(set)) family.known_members = std::set<std::uint64_t>{1, 2, 5};
  return family;
}

FamilySpec mk_minus_one_family(const MissingDigitSet& set) {
  const unsigned base = set.base();
  Natural p0 = 0;
  for (const auto& [p, e] : factorize(Natural(base) * base + 1)) {
    if (p != 2) {
      p0 = p;
      break;
    }
  }
  FamilySpec family{"mk", "a_n = prod_{k<=n} (m^k - 1)", ObstructionParams::make(set, p0),
                    {}, {}, {}, {}};
  family.term = [base](std::uint64_t k) {
    Natural power;
    mpz_ui_pow_ui(power.get_mpz_t(), base, k);
    return Natural(power - 1);
  };
  family.bounds.kind = BoundKind::Structural;
  family.bounds.alpha = [](std::uint64_t n) { return static_cast<std::int64_t>(n / 4); };
  family.bounds.gamma = [base, p0](std::uint64_t n) {
    return static_cast<std::int64_t>(radical_order_bound_mk(n, base, p0));
  };
  if (base == 3) family.certified_cutoff = 12;
  if (is_cantor(set)) family.known_members = std::set<std::uint64_t>{};
  return family;
}

FamilySpec make_family(std::string_view name, const MissingDigitSet& set,
                       const std::optional<PolynomialSpec>& poly, std::optional<Natural> p0) {
  if (name == "factorial") return factorial_family(set, p0);
  if (name == "superfactorial") return superfactorial_family(set, p0);
  if (name == "polynomial") {
    if (!poly) throw std::invalid_argument("the polynomial family needs --poly");
    return polynomial_family(*poly, set);
  }
  if (name == "fibonacci") return fibonacci_family(set);
  if (name == "mk") return mk_minus_one_family(set);
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::vector<Natural> prefix_values(const FamilySpec& family, std::uint64_t n_max) {
  std::vector<Natural> out;
  out.reserve(n_max);
  Natural acc = 1;
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    acc *= family.term(k);
    out.push_back(acc);
  }
  return out;
}

CoprimeProfile coprime_profile(const FamilySpec& family, std::uint64_t n_max) {
  CoprimeProfile out;
  const Natural m = family.base();
  Natural q = 1;
  std::uint64_t valuation = 0;
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    const Natural part = coprime_part(family.term(k), m);
    valuation += nu(family.params.p0, part);
    q *= part;
    out.coprime_part.push_back(q);
    out.p0_valuation.push_back(valuation);
  }
  return out;
}

std::vector<Factorization> coprime_factorizations(const FamilySpec& family, std::uint64_t n_max) {
  std::vector<Factorization> out;
  out.reserve(n_max);
  const Natural m = family.base();
  Factorization acc;
  for (std::uint64_t k = 1; k <= n_max; ++k) {
    acc.merge(factorize(family.term(k)).without_primes_of(m));
    out.push_back(acc);
  }
  return out;
}

Natural fibonacci(std::uint64_t k) {
  Natural out;
  mpz_fib_ui(out.get_mpz_t(), k);
  return out;
}

Natural lucas(std::uint64_t k) {
  Natural out;
  mpz_lucnum_ui(out.get_mpz_t(), k);
  return out;
}

std::uint64_t fib_two_adic_sum(std::uint64_t n) {
  std::uint64_t sum = 0;
  for (std::uint64_t k = 1; k <= n; ++k) sum += nu(2, fibonacci(k));
  return sum;
}

std::uint64_t fib_two_adic_lower_bound(std::uint64_t n) {
  std::uint64_t bound = n / 3 + 2 * (n / 6);
  for (std::uint64_t step = 12; step <= n; step *= 2) bound += n / step;
  return bound;
}

std::int64_t fib_alpha(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("fib_alpha: n must be positive");
  const auto ceil_five_sixths = static_cast<std::int64_t>((5 * n + 5) / 6);
  return ceil_five_sixths - static_cast<std::int64_t>(floor_log(Natural(2), Natural(n))) - 5;
}

std::uint64_t radical_order_bound_mk(std::uint64_t n, unsigned base, const Natural& p0) {
  require_coprime(base, p0);
  return n == 0 ? 0 : floor_log(p0, Natural(n));
}

PrimorialDemo nonexample_primorial(std::uint64_t n, const MissingDigitSet& set) {
  if (n == 0) throw std::invalid_argument("nonexample_primorial: n must be positive");
  PrimorialDemo out;
  out.n = n;
  out.primorial = 1;
  Natural p = 2;
  for (std::uint64_t i = 0; i < n; ++i) {
    out.primorial *= p;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  const Natural q = coprime_part(out.primorial, Natural(set.base()));
  const auto factors = q == 1 ? Factorization{} : factorize(q);
  out.coprime_part_squarefree = true;
  for (const auto& f : factors) out.coprime_part_squarefree &= (f.exponent == 1);

  out.cutoff_unreachable = true;
  for (unsigned long sample : {2UL, 3UL, 5UL, 7UL}) {
    if (set.base() % sample == 0) continue;
    const std::uint64_t v = factors.exponent_of(Natural(sample));
    out.valuations.emplace_back(Natural(sample), v);
    const auto params = ObstructionParams::make(set, Natural(sample));
    // alpha may not exceed the true valuation, and gamma >= 0.
    if (structural_cutoff_holds(static_cast<std::int64_t>(v), 0, params)) out.cutoff_unreachable = false;
  }
  return out;
}

CentralBinomialDemo nonexample_central_binomial(std::uint64_t k, const Natural& p0,
                                                const MissingDigitSet& set) {
  if (k == 0) throw std::invalid_argument("nonexample_central_binomial: k must be positive");
  if (!is_prime(p0)) throw std::invalid_argument("nonexample_central_binomial: p0 must be prime");
  CentralBinomialDemo out;
  out.k = k;
  out.p0 = p0;
  mpz_pow_ui(out.n.get_mpz_t(), p0.get_mpz_t(), k);
  out.valuation = binomial_central_valuation(out.n, p0.get_ui()).get_ui();
  out.expected = p0 == 2 ? 1 : 0;
  if (Natural(set.base()) % p0 != 0) {
    const auto params = ObstructionParams::make(set, p0);
    out.cutoff_unreachable = !structural_cutoff_holds(static_cast<std::int64_t>(out.valuation), 0, params);
  }
  return out;
}

}  // namespace kmd
