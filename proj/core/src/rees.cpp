#include "mocurve/rees.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "echelon.hpp"
#include "mocurve/implicit.hpp"
#include "mocurve/random.hpp"

namespace mocurve {

std::vector<Bidegree> BettiProfile::multiset() const {
  std::vector<Bidegree> out;
  for (const auto& [b, m] : betti)
    for (int k = 0; k < m; ++k) out.push_back(b);
  return out;
}

std::string multiset_str(const std::vector<Bidegree>& b) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < b.size(); ++i) os << (i ? ", " : "") << '(' << b[i].t << ',' << b[i].x << ')';
  os << '}';
  return os.str();
}

int kernel_dimension(const Parametrization& phi, int t_degree, int x_degree) {
  return moving_space_dimension(phi, t_degree, x_degree);
}

namespace {

using detail::IntEchelon;
using detail::IntRow;
using detail::ModEchelon;
using detail::ModRow;

template <class Fn>
void parallel_for(std::size_t n, int jobs, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

/// u^a for every X-monomial a of each degree, as coefficient vectors.
struct Images {
  std::vector<std::vector<IntRow>> exact;
  std::vector<std::vector<ModRow>> mod;
  /// up[x][k][j]: index of (k-th monomial of degree x) * X_j in degree x + 1.
  std::vector<std::vector<std::array<int, 3>>> up;
};

/// How the scan is carried out.
enum class Mode {
  Certified,  ///< rational input, modular ranks with exact fallback
  Rational,   ///< rational input, integer elimination only
  Prime,      ///< input over F_p, exact modular elimination
};

template <class Mod>
class Scanner {
 public:
  Scanner(const Parametrization& phi, Bidegree box, const ReesOptions& opt, Mod mod, Mode mode)
      : phi_(phi), d_(phi.degree()), box_(box), opt_(opt), mod_(mod), mode_(mode) {
    build_images();
  }

  /// Fills dims, betti and generators of out.
  void run(BettiProfile& out) {
    std::map<Bidegree, std::unique_ptr<Cell>> prev;
    for (int s = 0; s <= box_.t + box_.x; ++s) {
      std::vector<std::unique_ptr<Cell>> diag;
      for (int t = 0; t <= std::min(s, box_.t); ++t) {
        const int x = s - t;
        if (x > box_.x) continue;
        auto c = std::make_unique<Cell>();
        c->t = t;
        c->x = x;
        diag.push_back(std::move(c));
      }
      parallel_for(diag.size(), opt_.jobs, [&](std::size_t i) { compute_kernel(*diag[i]); });
      for (const auto& c : diag) dims_[{c->t, c->x}] = c->dim;
      parallel_for(diag.size(), opt_.jobs, [&](std::size_t i) { count_generators(*diag[i], prev); });

      std::map<Bidegree, std::unique_ptr<Cell>> current;
      for (auto& c : diag) {
        const Bidegree b{c->t, c->x};
        out.dims[b] = c->dim;
        if (c->generators > 0) {
          out.betti[b] = c->generators;
          for (const auto& v : c->reps) out.generators.push_back({from_coordinates(v, c->t, c->x), phi_.fingerprint()});
        }
        current[b] = std::move(c);
      }
      prev = std::move(current);
    }
  }

 private:
  struct Cell {
    int t = 0;
    int x = 0;
    int dim = 0;
    /// Modular rank equals the rational rank.
    bool consistent = true;
    std::vector<ModRow> ker_mod;
    std::once_flag int_once;
    std::vector<IntRow> ker_int;
    int generators = 0;
    std::vector<linalg::Vector> reps;
  };

  int n(int x) const { return x_monomial_count(x); }
  int rows(const Cell& c) const { return c.t + c.x * d_ + 1; }
  int cols(const Cell& c) const { return (c.t + 1) * n(c.x); }
  std::uint64_t p() const { return mod_.p(); }

  void build_images() {
    std::array<TForm, 3> u = phi_.components();
    if (mode_ != Mode::Prime) {
      // Clearing one common denominator keeps the kernel unchanged.
      mpz_class l = 1;
      for (const auto& f : u)
        for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
      for (auto& f : u) f *= Scalar(l);
    }
    std::array<std::vector<TForm>, 3> powers;
    for (int j = 0; j < 3; ++j) {
      powers[j].push_back(TForm::constant(Scalar(1)));
      for (int k = 1; k <= box_.x; ++k) powers[j].push_back(powers[j].back() * u[j]);
    }
    images_.exact.resize(static_cast<std::size_t>(box_.x + 1));
    images_.mod.resize(static_cast<std::size_t>(box_.x + 1));
    images_.up.resize(static_cast<std::size_t>(box_.x + 1));
    for (int x = 0; x <= box_.x; ++x) {
      for (const auto& e : x_monomials(x)) {
        TForm img = powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]];
        ModRow m(img.coeffs().size());
        IntRow z;
        if (mode_ != Mode::Prime) z.resize(img.coeffs().size());
        for (std::size_t r = 0; r < img.coeffs().size(); ++r) {
          const Scalar& c = img.coeffs()[r];
          if (mode_ == Mode::Prime) {
            m[r] = c.in(FieldSpec{p()}).residue_value();
          } else {
            z[r] = c.rational().get_num();
            m[r] = modp::reduce(z[r], p());
          }
        }
        images_.mod[x].push_back(std::move(m));
        if (mode_ != Mode::Prime) images_.exact[x].push_back(std::move(z));
        std::array<int, 3> up{};
        for (int j = 0; j < 3; ++j) {
          XExp f = e;
          ++f[j];
          up[j] = x_monomial_index(f);
        }
        images_.up[x].push_back(up);
      }
    }
  }

  ModRow mod_row(const Cell& c, int r) const {
    const int nx = n(c.x);
    ModRow row(static_cast<std::size_t>(cols(c)), 0);
    for (int i = 0; i <= c.t; ++i) {
      const int k = r - i;
      if (k < 0 || k > c.x * d_) continue;
      for (int m = 0; m < nx; ++m) row[i * nx + m] = images_.mod[c.x][m][k];
    }
    return row;
  }

  IntRow int_row(const Cell& c, int r) const {
    const int nx = n(c.x);
    IntRow row(static_cast<std::size_t>(cols(c)));
    for (int i = 0; i <= c.t; ++i) {
      const int k = r - i;
      if (k < 0 || k > c.x * d_) continue;
      for (int m = 0; m < nx; ++m) row[i * nx + m] = images_.exact[c.x][m][k];
    }
    return row;
  }

  IntEchelon int_echelon(const Cell& c) const {
    IntEchelon ech(cols(c));
    for (int r = 0; r < rows(c); ++r) {
      if (ech.rank() == cols(c)) break;
      ech.insert(int_row(c, r));
    }
    return ech;
  }

  void compute_kernel(Cell& c) {
    const int nrows = rows(c);
    const int ncols = cols(c);
    if (mode_ == Mode::Rational) {
      IntEchelon ech = int_echelon(c);
      c.dim = ncols - ech.rank();
      ech.make_reduced();
      c.ker_int = ech.kernel();
      std::call_once(c.int_once, [] {});
      return;
    }
    ModEchelon<Mod> ech(mod_, ncols);
    for (int r = 0; r < nrows && ech.rank() < ncols; ++r) ech.insert(mod_row(c, r));
    int rank = ech.rank();
    if (mode_ == Mode::Certified && rank < std::min(nrows, ncols)) {
      const int exact = int_echelon(c).rank();
      c.consistent = exact == rank;
      rank = exact;
    }
    c.dim = ncols - rank;
    if (c.consistent && c.dim > 0) {
      ech.make_reduced();
      c.ker_mod = ech.kernel();
    }
  }

  const std::vector<IntRow>& rational_kernel(Cell& c) const {
    std::call_once(c.int_once, [&] {
      IntEchelon ech = int_echelon(c);
      ech.make_reduced();
      c.ker_int = ech.kernel();
    });
    return c.ker_int;
  }

  /// Images of the source kernels under multiplication by t0, t1 and X0, X1, X2.
  template <class Row, class Sink>
  void for_each_product(const Cell& c, const std::vector<Row>* below_t, const std::vector<Row>* below_x,
                        Sink sink) const {
    const int nx = n(c.x);
    const Row zero(static_cast<std::size_t>(cols(c)));
    if (below_t != nullptr) {
      for (const Row& v : *below_t) {
        for (int k = 0; k < 2; ++k) {
          Row out = zero;
          for (int i = 0; i < c.t; ++i)
            for (int m = 0; m < nx; ++m) out[(i + k) * nx + m] = v[i * nx + m];
          if (!sink(std::move(out))) return;
        }
      }
    }
    if (below_x != nullptr) {
      const int ns = n(c.x - 1);
      const auto& up = images_.up[c.x - 1];
      for (const Row& v : *below_x) {
        for (int j = 0; j < 3; ++j) {
          Row out = zero;
          for (int i = 0; i <= c.t; ++i)
            for (int m = 0; m < ns; ++m) out[i * nx + up[m][j]] = v[i * ns + m];
          if (!sink(std::move(out))) return;
        }
      }
    }
  }

  int dim_at(int t, int x) const {
    if (t < 0 || x < 0) return 0;
    return dims_.at({t, x});
  }

  void count_generators(Cell& c, const std::map<Bidegree, std::unique_ptr<Cell>>& prev) {
    if (c.dim == 0) return;
    if (opt_.prune) {
      // Moving curves of fixed X-degree form a free K[t0, t1]-module; the
      // second difference of its Hilbert function counts module generators.
      const int fresh = c.dim - 2 * dim_at(c.t - 1, c.x) + dim_at(c.t - 2, c.x);
      if (fresh < 0) throw Error(ErrorCode::InvalidArgument, "negative module generator count");
      if (fresh == 0) return;
    }
    Cell* below_t = c.t > 0 ? prev.at({c.t - 1, c.x}).get() : nullptr;
    Cell* below_x = c.x > 0 ? prev.at({c.t, c.x - 1}).get() : nullptr;

    if (mode_ != Mode::Rational && c.consistent && (!below_t || below_t->consistent) &&
        (!below_x || below_x->consistent)) {
      ModEchelon<Mod> M(mod_, cols(c));
      for_each_product(c, below_t ? &below_t->ker_mod : nullptr, below_x ? &below_x->ker_mod : nullptr,
                       [&](ModRow v) {
                         M.insert(std::move(v));
                         return M.rank() < c.dim;
                       });
      // Modular rank of the products bounds their rational rank from below,
      // which in turn is at most dim K; equality leaves no generator.
      if (M.rank() == c.dim) return;
      if (mode_ == Mode::Prime) {
        for (const ModRow& v : c.ker_mod) {
          if (!M.insert(v)) continue;
          linalg::Vector rep;
          rep.reserve(v.size());
          for (auto x : v) rep.push_back(Scalar::residue_u(x, p()));
          c.reps.push_back(std::move(rep));
        }
        c.generators = static_cast<int>(c.reps.size());
        return;
      }
    }

    IntEchelon M(cols(c));
    for_each_product(c, below_t ? &rational_kernel(*below_t) : nullptr,
                     below_x ? &rational_kernel(*below_x) : nullptr, [&](IntRow v) {
                       M.insert(std::move(v));
                       return M.rank() < c.dim;
                     });
    for (const IntRow& v : rational_kernel(c)) {
      if (!M.insert(v)) continue;
      linalg::Vector rep;
      rep.reserve(v.size());
      for (const auto& x : v) rep.emplace_back(x);
      c.reps.push_back(std::move(rep));
    }
    c.generators = static_cast<int>(c.reps.size());
  }

  const Parametrization& phi_;
  int d_;
  Bidegree box_;
  ReesOptions opt_;
  Mod mod_;
  Mode mode_;
  Images images_;
  std::map<Bidegree, int> dims_;
};

void scan(const Parametrization& phi, Bidegree box, const ReesOptions& opt, BettiProfile& out) {
  const FieldSpec field = phi.field();
  if (!field.is_rational()) {
    Scanner<detail::DynPrime> s(phi, box, opt, detail::DynPrime{field.modulus}, Mode::Prime);
    s.run(out);
  } else {
    Scanner<detail::FastPrime> s(phi, box, opt, detail::FastPrime{}, opt.modular ? Mode::Certified : Mode::Rational);
    s.run(out);
  }
}

}  // namespace

BettiProfile minimal_generators(const Parametrization& phi, const ReesOptions& options) {
  BettiProfile out;
  out.d = phi.degree();
  out.box = {options.t_max < 0 ? out.d : options.t_max, options.x_max < 0 ? out.d : options.x_max};
  out.mu = mu(phi);
  out.D = out.d / tracing_index(phi);
  if (out.box.x < out.D || out.box.t < out.d - out.mu)
    throw Error(ErrorCode::BoxTooSmall, "box (" + std::to_string(out.box.t) + "," + std::to_string(out.box.x) +
                                            ") must reach t-degree " + std::to_string(out.d - out.mu) +
                                            " and X-degree " + std::to_string(out.D));
  if (!options.widen) {
    scan(phi, out.box, options, out);
  } else {
    // Counts at a bidegree only depend on smaller bidegrees, so one scan of
    // the wider box also answers the original one.
    BettiProfile wide;
    scan(phi, {out.box.t + 2, out.box.x + 2}, options, wide);
    auto inside = [&](Bidegree b) { return b.t <= out.box.t && b.x <= out.box.x; };
    for (const auto& [b, m] : wide.dims)
      if (inside(b)) out.dims[b] = m;
    for (const auto& [b, m] : wide.betti) (inside(b) ? out.betti : out.beyond)[b] = m;
    for (auto& g : wide.generators)
      if (inside(g.bidegree())) out.generators.push_back(std::move(g));
    out.truncated = !out.beyond.empty();
  }
  for (const auto& [b, m] : out.betti) out.n0 += m;
  return out;
}

SurveyReport survey(const SurveyOptions& options) {
  if (options.d < 1 || options.d > 12) throw Error(ErrorCode::InvalidArgument, "survey degree must lie in [1, 12]");
  if (options.count < 1) throw Error(ErrorCode::InvalidArgument, "survey count must be positive");
  if (options.mu && (*options.mu < 0 || 2 * *options.mu > options.d))
    throw Error(ErrorCode::InvalidArgument, "mu filter must lie in [0, d/2]");
  SurveyReport report;
  report.options = options;
  Random rng(options.seed);
  const int d = options.d;
  const int budget = 200 * options.count;

  std::vector<Parametrization> accepted;
  std::vector<int> mus;
  for (int draw = 0; draw < budget && static_cast<int>(accepted.size()) < options.count; ++draw) {
    std::optional<Parametrization> phi;
    try {
      if (options.mu) {
        const int m = *options.mu;
        std::array<TForm, 3> p{rng.tform(m, options.coeff_bound), rng.tform(m, options.coeff_bound),
                               rng.tform(m, options.coeff_bound)};
        std::array<TForm, 3> q{rng.tform(d - m, options.coeff_bound), rng.tform(d - m, options.coeff_bound),
                               rng.tform(d - m, options.coeff_bound)};
        phi = from_cross_product(p, q);
      } else {
        phi.emplace(rng.tform(d, options.coeff_bound), rng.tform(d, options.coeff_bound),
                    rng.tform(d, options.coeff_bound));
      }
    } catch (const Error&) {
      ++report.rejected_common_factor;
      continue;
    }
    const int m = mu(*phi);
    if (options.mu && m != *options.mu) {
      ++report.rejected_mu;
      continue;
    }
    if (tracing_index(*phi, rng.next()) != 1) {
      ++report.rejected_improper;
      continue;
    }
    accepted.push_back(*phi);
    mus.push_back(m);
  }
  if (static_cast<int>(accepted.size()) < options.count)
    report.flags.push_back("only " + std::to_string(accepted.size()) + " of " + std::to_string(options.count) +
                           " samples accepted within " + std::to_string(budget) + " draws");

  std::vector<BettiProfile> profiles(accepted.size());
  ReesOptions ropt;
  parallel_for(accepted.size(), options.jobs, [&](std::size_t i) { profiles[i] = minimal_generators(accepted[i], ropt); });

  std::map<std::pair<int, std::vector<Bidegree>>, int> freq;
  for (std::size_t i = 0; i < accepted.size(); ++i) {
    ++freq[{mus[i], profiles[i].multiset()}];
    report.samples.push_back({accepted[i], mus[i], std::move(profiles[i])});
  }
  for (const auto& [key, count] : freq)
    report.table.push_back({key.first, static_cast<int>(key.second.size()), key.second, count});

  const int generic = d / 2;
  std::set<int> generic_n0;
  int overall_max = 0;
  for (const auto& s : report.samples) {
    if (s.mu == generic) generic_n0.insert(s.profile.n0);
    overall_max = std::max(overall_max, s.profile.n0);
  }
  if (generic_n0.size() > 1) {
    std::string values;
    for (int v : generic_n0) values += (values.empty() ? "" : ", ") + std::to_string(v);
    report.flags.push_back("samples with mu = " + std::to_string(generic) + " take several n0 values: " + values);
  }
  if (!generic_n0.empty() && overall_max > *generic_n0.rbegin())
    report.flags.push_back("n0 = " + std::to_string(overall_max) + " exceeds the largest value " +
                           std::to_string(*generic_n0.rbegin()) + " seen with mu = " + std::to_string(generic));
  return report;
}

}  // namespace mocurve
