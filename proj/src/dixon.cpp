#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "gvz/char_table.hpp"
#include "gvz/errors.hpp"

namespace gvz {

ClassDataPtr class_data(const GroupPtr& group) {
  auto data = std::make_shared<ClassData>();
  data->classes = conjugacy_classes(group);
  const int r = data->classes.count();
  const int e = group->exponent();
  data->inverse_class.resize(r);
  data->power_map.assign(r, std::vector<int>(static_cast<std::size_t>(e)));
  data->centralizer_order.resize(r);
  for (int c = 0; c < r; ++c) {
    const Element rep = data->classes.representatives[c];
    data->inverse_class[c] = data->classes.class_of[group->inverse(rep)];
    Element x = 0;
    for (int j = 0; j < e; ++j) {
      data->power_map[c][j] = data->classes.class_of[x];
      x = group->multiply(x, rep);
    }
    data->centralizer_order[c] = group->order() / data->classes.size(c);
  }
  return data;
}

namespace {

using Vec = std::vector<long long>;
using Mat = std::vector<Vec>;

long long mod_pow(long long base, long long exp, long long q) {
  long long result = 1 % q;
  base %= q;
  if (base < 0) base += q;
  while (exp > 0) {
    if (exp & 1) result = result * base % q;
    base = base * base % q;
    exp >>= 1;
  }
  return result;
}

long long mod_inv(long long a, long long q) { return mod_pow(a, q - 2, q); }

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

long long primitive_root_of_unity(long long q, int e) {
  std::vector<long long> factors;
  long long m = q - 1;
  for (long long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    factors.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) factors.push_back(m);
  for (long long g = 2; g < q; ++g) {
    const bool generator = std::all_of(factors.begin(), factors.end(), [&](long long p) {
      return mod_pow(g, (q - 1) / p, q) != 1;
    });
    if (generator) return mod_pow(g, (q - 1) / e, q);
  }
  if (q == 2) return 1;
  throw InternalError("no primitive root found");
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(Mat& rows, long long q) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const int cols = static_cast<int>(rows.front().size());
  std::size_t rank = 0;
  for (int col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pick = rank;
    while (pick < rows.size() && rows[pick][col] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[rank], rows[pick]);
    const long long inv = mod_inv(rows[rank][col], q);
    for (auto& v : rows[rank]) v = v * inv % q;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const long long f = rows[i][col];
      for (int j = 0; j < cols; ++j) {
        rows[i][j] = ((rows[i][j] - f * rows[rank][j]) % q + q) % q;
      }
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return pivots;
}

// Basis of the right nullspace of a square matrix.
Mat nullspace(Mat m, long long q) {
  const int n = static_cast<int>(m.size());
  const std::vector<int> pivots = row_reduce(m, q);
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int p : pivots) is_pivot[p] = true;
  Mat basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vec v(static_cast<std::size_t>(n), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (q - m[r][free]) % q;
    basis.push_back(std::move(v));
  }
  return basis;
}

struct Space {
  Mat basis;  // RREF rows
  std::vector<int> pivots;
};

// Splits an M-invariant space into eigenspaces of M restricted to it.
std::vector<Space> split(const Space& space, const Mat& m, long long q) {
  const std::size_t d = space.basis.size();
  const std::size_t r = m.size();
  // Column t of the restricted matrix holds the coordinates of M b_t.
  Mat restricted(d, Vec(d, 0));
  for (std::size_t t = 0; t < d; ++t) {
    const Vec& b = space.basis[t];
    for (std::size_t s = 0; s < d; ++s) {
      const auto row = static_cast<std::size_t>(space.pivots[s]);
      long long acc = 0;
      for (std::size_t k = 0; k < r; ++k) acc = (acc + m[row][k] * b[k]) % q;
      restricted[s][t] = acc;
    }
  }

  std::vector<Space> parts;
  std::size_t found = 0;
  for (long long lambda = 0; lambda < q && found < d; ++lambda) {
    Mat shifted = restricted;
    for (std::size_t i = 0; i < d; ++i) shifted[i][i] = ((shifted[i][i] - lambda) % q + q) % q;
    Mat coords = nullspace(std::move(shifted), q);
    if (coords.empty()) continue;
    found += coords.size();
    Space part;
    for (const Vec& c : coords) {
      Vec v(r, 0);
      for (std::size_t s = 0; s < d; ++s) {
        if (c[s] == 0) continue;
        for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + c[s] * space.basis[s][k]) % q;
      }
      part.basis.push_back(std::move(v));
    }
    part.pivots = row_reduce(part.basis, q);
    parts.push_back(std::move(part));
  }
  if (found != d) throw InternalError("class matrix is not diagonalizable over the Dixon prime field");
  return parts;
}

// a[(i*r + j)*r + k] = #{(x, y) in C_i x C_j : xy = rep_k}
std::vector<long long> class_coefficients(const GroupPtr& group, const ClassData& cd, int threads) {
  const int r = cd.count();
  std::vector<long long> a(static_cast<std::size_t>(r) * r * r, 0);
  auto work = [&](int k_begin, int k_end) {
    for (int k = k_begin; k < k_end; ++k) {
      const Element z = cd.classes.representatives[k];
      for (Element x = 0; x < group->order(); ++x) {
        const Element y = group->multiply(group->inverse(x), z);
        const int i = cd.class_of(x);
        const int j = cd.class_of(y);
        ++a[(static_cast<std::size_t>(i) * r + j) * r + k];
      }
    }
  };
  threads = std::clamp(threads, 1, std::max(1, r));
  if (threads == 1) {
    work(0, r);
  } else {
    // Each worker owns a disjoint range of k, so writes never overlap.
    std::vector<std::jthread> pool;
    const int chunk = (r + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      const int begin = t * chunk;
      const int end = std::min(r, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }
  return a;
}

bool row_less(const Character& a, const Character& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t c = 0; c < a.values().size(); ++c) {
    if (lexicographically_less(a.values()[c], b.values()[c])) return true;
    if (lexicographically_less(b.values()[c], a.values()[c])) return false;
  }
  return false;
}

}  // namespace

long long dixon_prime(int order, int exponent, long long search_limit) {
  for (long long q = exponent + 1;; q += exponent) {
    if (q > search_limit) {
      std::ostringstream msg;
      msg << "no prime = 1 mod " << exponent << " above 2*sqrt(" << order << ") below "
          << search_limit;
      throw ResourceError(msg.str());
    }
    if (q * q > 4LL * order && is_prime(q)) return q;
  }
}

CharacterTable character_table(const GroupPtr& group, const DixonOptions& options) {
  CharacterTable table;
  table.group = group;
  table.classes = class_data(group);
  table.exponent = group->exponent();
  const ClassData& cd = *table.classes;
  const int r = cd.count();
  const int e = table.exponent;
  const long long order = group->order();
  const long long q = dixon_prime(group->order(), e, options.prime_search_limit);
  table.field_prime = q;

  const std::vector<long long> a = class_coefficients(group, cd, options.threads);
  auto class_matrix = [&](int i) {
    Mat m(static_cast<std::size_t>(r), Vec(static_cast<std::size_t>(r)));
    for (int j = 0; j < r; ++j) {
      for (int k = 0; k < r; ++k) m[j][k] = a[(static_cast<std::size_t>(i) * r + j) * r + k] % q;
    }
    return m;
  };

  std::vector<int> order_of_classes = options.class_order;
  if (order_of_classes.empty()) {
    order_of_classes.resize(static_cast<std::size_t>(r));
    std::iota(order_of_classes.begin(), order_of_classes.end(), 0);
  } else {
    std::vector<int> check = order_of_classes;
    std::sort(check.begin(), check.end());
    std::vector<int> expect(static_cast<std::size_t>(r));
    std::iota(expect.begin(), expect.end(), 0);
    if (check != expect) throw InputError("class processing order must permute the class indices");
  }

  Space whole;
  for (int i = 0; i < r; ++i) {
    Vec v(static_cast<std::size_t>(r), 0);
    v[i] = 1;
    whole.basis.push_back(std::move(v));
    whole.pivots.push_back(i);
  }
  std::vector<Space> spaces{whole};
  auto refine = [&](const Mat& m) {
    std::vector<Space> next;
    for (const Space& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(s);
        continue;
      }
      for (Space& part : split(s, m, q)) next.push_back(std::move(part));
    }
    spaces = std::move(next);
  };
  auto done = [&] { return static_cast<int>(spaces.size()) == r; };

  if (options.randomized_split && !done()) {
    std::mt19937_64 rng(options.seed);
    Mat combo(static_cast<std::size_t>(r), Vec(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) {
      const long long c = static_cast<long long>(rng() % static_cast<std::uint64_t>(q));
      const Mat m = class_matrix(i);
      for (int j = 0; j < r; ++j) {
        for (int k = 0; k < r; ++k) combo[j][k] = (combo[j][k] + c * m[j][k]) % q;
      }
    }
    refine(combo);
  }
  for (int i : order_of_classes) {
    if (done()) break;
    refine(class_matrix(i));
  }
  if (!done()) throw InternalError("class matrices did not split the class algebra completely");

  const long long z = primitive_root_of_unity(q, e);
  const long long z_inv = mod_inv(z, q);
  const long long e_inv = mod_inv(e % q, q);
  for (const Space& s : spaces) {
    Vec omega = s.basis.front();
    if (omega[0] == 0) throw InternalError("central character vanishes at the identity class");
    const long long scale = mod_inv(omega[0], q);
    for (auto& w : omega) w = w * scale % q;

    long long sum = 0;
    for (int i = 0; i < r; ++i) {
      const long long term = omega[i] * omega[cd.inverse_class[i]] % q * mod_inv(cd.size(i), q) % q;
      sum = (sum + term) % q;
    }
    if (sum == 0) throw InternalError("degenerate central character");
    const long long deg_sq = order % q * mod_inv(sum, q) % q;
    long long degree = 0;
    for (long long d = 1; d * d <= order; ++d) {
      if (d * d % q == deg_sq) {
        degree = d;
        break;
      }
    }
    if (degree == 0 || order % degree != 0) {
      throw InternalError("could not recover a character degree from the modular data");
    }

    Vec theta(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) theta[i] = omega[i] * degree % q * mod_inv(cd.size(i), q) % q;

    std::vector<Cyclotomic> values;
    values.reserve(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) {
      std::vector<long long> counts(static_cast<std::size_t>(e), 0);
      long long total = 0;
      for (int k = 0; k < e; ++k) {
        long long acc = 0;
        const long long step = mod_pow(z_inv, k, q);
        long long w = 1;
        for (int j = 0; j < e; ++j) {
          acc = (acc + theta[cd.power_map[i][j]] * w) % q;
          w = w * step % q;
        }
        counts[k] = acc * e_inv % q;
        total += counts[k];
      }
      if (total != degree) throw InternalError("eigenvalue multiplicities do not sum to the degree");
      values.push_back(Cyclotomic::from_exponent_counts(counts, e));
    }
    table.irreducibles.emplace_back(table.classes, std::move(values), true);
  }
  std::sort(table.irreducibles.begin(), table.irreducibles.end(), row_less);
  return table;
}

}  // namespace gvz
