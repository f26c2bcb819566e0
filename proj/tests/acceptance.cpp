// Acceptance checks: one PASS/FAIL line per criterion.
// Exits nonzero only on failures that are not listed as known limitations.
#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rsf/applications.hpp"
#include "rsf/error.hpp"
#include "rsf/fixtures.hpp"
#include "rsf/json_io.hpp"
#include "rsf/omega.hpp"
#include "rsf/parse.hpp"
#include "rsf/schur.hpp"

using namespace rsf;

namespace {

constexpr double kCheckSeconds = 60.0;
constexpr rlim_t kChildMemoryBytes = rlim_t(3) << 30;

// Fixtures whose Elliott reduction does not finish within the time limit.
const std::set<std::string> kElliottTooSlow{"w3-d3", "w3-sl3", "w3-ut3"};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  int number;
  std::string title;
  int checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> documented;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& what) { documented.push_back(what); }
};

struct Isolated {
  enum class Status { Ok, Error, Timeout, Crashed } status = Status::Crashed;
  NiceRational value;
  std::string message;
  double seconds = 0;
};

// Runs `fn` in a child process with a memory cap and a wall-clock limit.
Isolated run_isolated(const std::function<NiceRational()>& fn) {
  Isolated r;
  int fds[2];
  if (pipe(fds) != 0) {
    r.message = "pipe failed";
    return r;
  }
  std::cout.flush();
  auto start = Clock::now();
  pid_t pid = fork();
  if (pid == 0) {
    close(fds[0]);
    rlimit lim{kChildMemoryBytes, kChildMemoryBytes};
    setrlimit(RLIMIT_AS, &lim);
    std::string out;
    try {
      out = to_json(fn()).dump();
    } catch (const std::exception& e) {
      out = std::string("!") + e.what();
    }
    std::size_t off = 0;
    while (off < out.size()) {
      ssize_t n = write(fds[1], out.data() + off, out.size() - off);
      if (n <= 0) break;
      off += static_cast<std::size_t>(n);
    }
    close(fds[1]);
    _exit(0);
  }
  close(fds[1]);
  std::string buf;
  bool timed_out = false;
  char chunk[65536];
  for (;;) {
    double left = kCheckSeconds - seconds_since(start);
    if (left <= 0) {
      timed_out = true;
      break;
    }
    pollfd p{fds[0], POLLIN, 0};
    int ready = poll(&p, 1, static_cast<int>(left * 1000) + 1);
    if (ready == 0) continue;
    ssize_t n = read(fds[0], chunk, sizeof chunk);
    if (n <= 0) break;
    buf.append(chunk, static_cast<std::size_t>(n));
  }
  close(fds[0]);
  if (timed_out) kill(pid, SIGKILL);
  int status = 0;
  waitpid(pid, &status, 0);
  r.seconds = seconds_since(start);
  if (timed_out) {
    r.status = Isolated::Status::Timeout;
    r.message = "exceeded time limit";
  } else if (buf.empty()) {
    r.status = Isolated::Status::Crashed;
    r.message = "child produced no result";
  } else if (buf[0] == '!') {
    r.status = Isolated::Status::Error;
    r.message = buf.substr(1);
  } else {
    r.status = Isolated::Status::Ok;
    r.value = nice_rational_from_json(Json::parse(buf));
  }
  return r;
}

OmegaOptions options(OmegaStrategy s, bool oracle) {
  OmegaOptions o;
  o.strategy = s;
  o.oracle_check = oracle;
  return o;
}

// Which criterion owns each fixture.
const std::map<std::string, int>& owners() {
  static const std::map<std::string, int> table = [] {
    std::map<std::string, int> t;
    auto set = [&](int c, std::initializer_list<const char*> ids) {
      for (const char* id : ids) t[id] = c;
    };
    set(1, {"w3-d2-m", "w3-d2-mprime", "w3-d2-mprime-split", "w3-d2-omega"});
    set(2, {"w4-d2", "w2w2-d2", "w3w3-d2"});
    set(3, {"w3-d3", "w21-d3", "w111-d3"});
    set(4, {"w3w2-d2-graded", "w2-d3-graded", "w11-d4-graded", "w3-d2-graded"});
    set(5, {"w2-d2", "w11-d2", "w2-d3", "w11-d3", "w2-d4", "w11-d4", "w2-d2-m", "w1-w11-d2", "w1-w11-d3",
            "w1-w11-d4", "w1-w11-d2-graded", "w1-w11-d3-graded", "w1-w11-d4-graded", "w1-w11-d5-graded"});
    set(8, {"u2-d3-mprime", "u2-d3-mprime-product-term", "u2-d3-mprime-product-term-split", "u2-d3-omega",
            "polynomial-algebra-d3", "u2-d3-graded-mprime", "u2-d3-graded-mprime-corrected"});
    set(9, {"t32-mprime", "t32-mprime-partial-fractions", "t32-omega", "t32-omega-corrected"});
    set(10, {"u2-f3-w11-mprime", "u2-f3-delta3-mprime"});
    return t;
  }();
  return table;
}

int owner_of(const Fixture& fx) {
  auto it = owners().find(fx.id);
  if (it != owners().end()) return it->second;
  if (fx.kind == "invariants") return 6;
  if (fx.kind == "weitzenbock") return 7;
  if (fx.kind == "nc-invariants" || fx.kind == "nc-weitzenbock") return 10;
  return 0;
}

// Partitions of n with at most d parts.
void partitions(int n, int d, int max, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  if (d == 0) return;
  for (int p = std::min(n, max); p >= 1; --p) {
    cur.push_back(p);
    partitions(n - p, d - 1, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions(int n, int d) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions(n, d, n, cur, out);
  return out;
}

// Closed-form multiplicities of the upper triangular 2x2 matrix algebra in three variables.
Rational u2_multiplicity(const Partition& lam) {
  const std::vector<int>& p = lam.parts();
  if (p.size() <= 1) return 1;
  if (p.size() == 2 || (p.size() == 3 && p[2] == 1)) return p[0] - p[1] + 1;
  return 0;
}

NiceRational random_z_input(std::mt19937& rng) {
  VarId x1 = VarId::x(1), x2 = VarId::x(2), z1 = VarId::z(1);
  std::uniform_int_distribution<int> count(1, 4), zexp(-2, 2), xexp(0, 2), coef(-3, 3);
  std::vector<std::pair<Monomial, int>> den;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    do {
      m = Monomial();
      m.set(x1, xexp(rng));
      m.set(x2, xexp(rng));
    } while (m.nonz_degree() == 0);
    m.set(z1, zexp(rng));
    den.emplace_back(m, 1);
  }
  std::vector<Term> num;
  for (int i = 0; i < 2; ++i) {
    Monomial m;
    m.set(x1, xexp(rng));
    m.set(x2, xexp(rng));
    m.set(z1, zexp(rng));
    num.push_back(Term{m, Rational(coef(rng))});
  }
  Poly p = Poly::from_terms(std::move(num));
  if (p.is_zero()) p = Poly(1);
  return NiceRational::over_binomials(p, den);
}

}  // namespace

int main() {
  std::vector<Criterion> crit{
      {1, "two-variable W(3) multiplicity series and its nonnegative part"},
      {2, "W(4), W(2)+W(2), W(3)+W(3) in two variables"},
      {3, "three-variable W(2,1), W(1,1,1), W(3)"},
      {4, "graded multiplicity series"},
      {5, "W(1)+W(1,1) for d = 2..5"},
      {6, "SL and UT invariants of symmetric algebras"},
      {7, "Weitzenbock constants and the cyclotomic numerator check"},
      {8, "upper triangular 2x2 matrices: M' and Schur expansion"},
      {9, "trace algebra T32: M' and its partial-fraction form"},
      {10, "noncommutative invariants and constants"},
      {11, "property suites"},
  };
  auto C = [&](int n) -> Criterion& { return crit[static_cast<std::size_t>(n - 1)]; };

  std::vector<Fixture> fixtures = load_fixtures(RSF_FIXTURES_DIR);
  std::map<std::string, NiceRational> computed;
  int oracle_runs = 0;

  // Every fixture through the partial-fraction route with the series oracle on.
  for (const Fixture& fx : fixtures) {
    int c = owner_of(fx);
    if (c == 0) {
      C(11).check(false, fx.id + ": fixture not assigned to a criterion");
      continue;
    }
    auto start = Clock::now();
    try {
      NiceRational got = evaluate_fixture(fx, options(OmegaStrategy::PartialFractions, true));
      double secs = seconds_since(start);
      computed[fx.id] = got;
      if (fx.kind != "identity") ++oracle_runs;
      bool match = nr_equal(got, fx.expected);
      C(c).check(secs <= kCheckSeconds, fx.id + ": took " + std::to_string(secs) + " s");
      if (!fx.known_conflict.empty()) {
        C(c).check(!match, fx.id + ": marked as a known conflict but matches");
        if (!match) C(c).note(fx.id + " differs from its transcription (" + fx.known_conflict + ")");
      } else {
        C(c).check(match, fx.id + ": computed " + got.to_string());
      }
    } catch (const std::exception& e) {
      C(c).check(false, fx.id + ": " + e.what());
    }
  }

  // Three-variable W(3): round trip of the computed multiplicity series.
  try {
    NiceRational h = hilbert_symmetric_algebra(parse_module("3", 3), false);
    NiceRational m = multiplicity_series(h, 3, false, options(OmegaStrategy::PartialFractions, true)).m;
    ++oracle_runs;
    C(3).check(verify_multiplicity(h, m, 3), "W(3), d = 3: verification identity");
  } catch (const std::exception& e) {
    C(3).check(false, std::string("W(3), d = 3: ") + e.what());
  }

  // Cyclotomic numerators: false exactly for these cell lists.
  const std::set<std::vector<int>> non_cyclotomic{{6}, {4, 2}, {7}, {5, 2}, {4, 3}, {3, 2, 2}};
  std::set<std::vector<int>> shapes;
  for (const Fixture& fx : fixtures)
    if (fx.kind == "weitzenbock") shapes.insert(parse_int_list(fx.params.at("cells").get<std::string>()));
  for (const std::vector<int>& cells : shapes) {
    std::string name = "cells " + Partition(cells).to_string();
    try {
      bool cyc = cyclotomic_numerator_check(weitzenbock_hilbert(JordanShape{cells})).cyclotomic;
      C(7).check(cyc == (non_cyclotomic.count(cells) == 0), name + ": cyclotomic = " + (cyc ? "true" : "false"));
    } catch (const std::exception& e) {
      C(7).check(false, name + ": " + e.what());
    }
  }

  // Upper triangular matrices: Schur expansion against the closed-form multiplicities.
  try {
    SchurExpansion e = schur_expand(builtin_series("F-U2K", 3), 3, 6);
    for (int n = 0; n <= 6; ++n)
      for (const Partition& lam : partitions(n, 3)) {
        auto it = e.entries.find(lam);
        Rational got = it == e.entries.end() ? Rational(0) : it->second;
        C(8).check(got == u2_multiplicity(lam), "m" + lam.to_string() + " = " + got.get_str());
      }
    for (const auto& [lam, k] : e.entries)
      C(8).check(lam.parts().size() <= 3, "unexpected " + lam.to_string() + " in the expansion");
  } catch (const std::exception& e) {
    C(8).check(false, std::string("Schur expansion: ") + e.what());
  }

  // Property suite: verification identity on every multiplicity-series input.
  int round_trips = 0;
  for (const Fixture& fx : fixtures) {
    try {
      std::optional<SymmetricInput> in = fixture_symmetric_input(fx);
      if (!in) continue;
      MultiplicitySeries ms =
          multiplicity_series(in->f, in->d, in->graded, options(OmegaStrategy::PartialFractions, true));
      ++oracle_runs;
      ++round_trips;
      C(11).check(verify_multiplicity(in->f, ms.m, in->d), fx.id + ": verification identity");
    } catch (const std::exception& e) {
      C(11).check(false, fx.id + ": round trip: " + e.what());
    }
  }

  // Property suite: Elliott reduction agrees with partial fractions on the corpus.
  int agreements = 0;
  for (const Fixture& fx : fixtures) {
    if (fx.kind == "identity" || computed.count(fx.id) == 0) continue;
    Isolated r = run_isolated([&] { return evaluate_fixture(fx, options(OmegaStrategy::Elliott, false)); });
    std::cout << "  elliott " << fx.id << " " << r.seconds << " s\n";
    if (r.status == Isolated::Status::Ok) {
      ++agreements;
      C(11).check(nr_equal(r.value, computed.at(fx.id)), fx.id + ": strategies disagree");
    } else if (kElliottTooSlow.count(fx.id) && r.status == Isolated::Status::Timeout) {
      C(11).check(false, fx.id + ": Elliott route " + r.message);
    } else {
      C(11).check(false, fx.id + ": Elliott route: " + r.message);
    }
  }
  std::mt19937 rng(20260);
  for (int i = 0; i < 50; ++i) {
    NiceRational f = random_z_input(rng);
    std::vector<VarId> zs{VarId::z(1)};
    try {
      NiceRational pf = omega_geq(f, zs, options(OmegaStrategy::PartialFractions, true));
      NiceRational el = omega_geq(f, zs, options(OmegaStrategy::Elliott, true));
      oracle_runs += 2;
      C(11).check(nr_equal(pf, el), "random " + f.to_string() + ": strategies disagree");
    } catch (const std::exception& e) {
      C(11).check(false, "random " + f.to_string() + ": " + e.what());
    }
  }

  // Property suite: multiplicity series of Schur polynomials.
  for (int d = 1; d <= 4; ++d)
    for (int n = 0; n <= 6; ++n)
      for (const Partition& lam : partitions(n, d)) {
        try {
          NiceRational m = multiplicity_series(NiceRational(schur_poly(lam, d)), d, false).m;
          C(11).check(nr_equal(m, NiceRational(Poly::monomial(partition_monomial(lam)))),
                      "M(S" + lam.to_string() + "), d = " + std::to_string(d));
        } catch (const std::exception& e) {
          C(11).check(false, "M(S" + lam.to_string() + "): " + e.what());
        }
      }

  // Property suite: Young rule against the product of Schur polynomials.
  for (int d = 1; d <= 3; ++d)
    for (int m = 0; m <= 3; ++m)
      for (int k = 0; k <= 4; ++k)
        for (const Partition& mu : partitions(k, d)) {
          Poly sum;
          for (const Partition& nu : young_rule(m, mu, d)) sum += schur_poly(nu, d);
          C(11).check(sum == schur_poly(Partition({m}), d) * schur_poly(mu, d),
                      "Young rule m = " + std::to_string(m) + ", mu = " + mu.to_string());
        }

  std::cout << "  round trips " << round_trips << ", Elliott agreements " << agreements << ", oracle-checked runs "
            << oracle_runs << "\n";

  int unexplained = 0;
  for (const Criterion& c : crit) {
    bool pass = c.failures.empty();
    std::cout << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << " " << c.title << " ("
              << c.checks - static_cast<int>(c.failures.size()) << "/" << c.checks << " checks)\n";
    for (const std::string& d : c.documented) std::cout << "    documented: " << d << "\n";
    for (const std::string& f : c.failures) {
      bool known = false;
      for (const std::string& id : kElliottTooSlow)
        if (c.number == 11 && f.rfind(id + ": Elliott route exceeded", 0) == 0) known = true;
      std::cout << "    " << (known ? "known limitation: " : "failed: ") << f << "\n";
      if (!known) ++unexplained;
    }
  }
  std::cout << (unexplained == 0 ? "no unexplained failures" : std::to_string(unexplained) + " unexplained failures")
            << std::endl;
  return unexplained == 0 ? 0 : 1;
}
